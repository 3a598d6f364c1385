#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet::onedim {

// Sentinel for "no such index"; compares as +infinity against any real index.
inline constexpr int kNoIndex = std::numeric_limits<int>::max();

// Value constraint for range queries; each bound may be open or closed.
struct ValueRange {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    bool contains(double v) const {
        if (lo_open ? !(v > lo) : !(v >= lo)) return false;
        if (hi_open ? !(v < hi) : !(v <= hi)) return false;
        return true;
    }
    bool lo_bounded() const { return lo != -std::numeric_limits<double>::infinity(); }
    bool hi_bounded() const { return hi != std::numeric_limits<double>::infinity(); }

    static ValueRange all() { return {}; }
    static ValueRange at_least(double x) { return {x, std::numeric_limits<double>::infinity(), false, false}; }
    static ValueRange greater(double x) { return {x, std::numeric_limits<double>::infinity(), true, false}; }
    static ValueRange at_most(double x) { return {-std::numeric_limits<double>::infinity(), x, false, false}; }
    static ValueRange less(double x) { return {-std::numeric_limits<double>::infinity(), x, false, true}; }
    static ValueRange closed(double a, double b) { return {a, b, false, false}; }
};

struct HeightResult {
    bool found = false;
    double value = 0.0;
    int index = kNoIndex;  // one index attaining the value
};

/*
 * Orthogonal range min/max structure over the indexed points (i, v_i),
 * i = 1..n. Four query kinds over an index range [p, b] and a value range:
 * minIndex/maxIndex return the extreme index whose value lies in the range,
 * minHeight/maxHeight the extreme value present in the rectangle.
 *
 * Realization: a segment tree over indices storing per node the min/max
 * value and the sorted value multiset of its range. One-sided value ranges
 * resolve through min/max alone (O(log n)); bounded ranges binary-search
 * the node arrays (O(log^2 n)). Arrays below `linear_threshold` entries are
 * scanned directly. Read-only after construction.
 */
class RangeIndex {
public:
    RangeIndex() = default;

    explicit RangeIndex(std::vector<double> values, int linear_threshold = 32)
        : values_(std::move(values)), linear_(static_cast<int>(values_.size()) <= linear_threshold) {
        const int n = size();
        if (n == 0) return;
        if (!linear_) {
            base_ = 1;
            while (base_ < n) base_ <<= 1;
            node_min_.assign(static_cast<std::size_t>(2 * base_), std::numeric_limits<double>::infinity());
            node_max_.assign(static_cast<std::size_t>(2 * base_), -std::numeric_limits<double>::infinity());
            node_sorted_.resize(static_cast<std::size_t>(2 * base_));
            for (int i = 0; i < n; ++i) {
                node_min_[static_cast<std::size_t>(base_ + i)] = values_[static_cast<std::size_t>(i)];
                node_max_[static_cast<std::size_t>(base_ + i)] = values_[static_cast<std::size_t>(i)];
                node_sorted_[static_cast<std::size_t>(base_ + i)] = {values_[static_cast<std::size_t>(i)]};
            }
            for (int v = base_ - 1; v >= 1; --v) {
                node_min_[v] = std::min(node_min_[2 * v], node_min_[2 * v + 1]);
                node_max_[v] = std::max(node_max_[2 * v], node_max_[2 * v + 1]);
                const auto& l = node_sorted_[2 * v];
                const auto& r = node_sorted_[2 * v + 1];
                auto& dst = node_sorted_[v];
                dst.resize(l.size() + r.size());
                std::merge(l.begin(), l.end(), r.begin(), r.end(), dst.begin());
            }
        }
    }

    int size() const { return static_cast<int>(values_.size()); }
    double value(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

    // Minimum index i in [p, b] with v_i in `range`, or kNoIndex.
    int min_index(const ValueRange& range, int p, int b) const {
        clip(p, b);
        if (p > b) return kNoIndex;
        if (linear_) {
            for (int i = p; i <= b; ++i)
                if (range.contains(value(i))) return i;
            return kNoIndex;
        }
        return min_index_rec(1, 1, base_, p, b, range);
    }

    // Maximum index i in [p, b] with v_i in `range`, or kNoIndex.
    int max_index(const ValueRange& range, int p, int b) const {
        clip(p, b);
        if (p > b) return kNoIndex;
        if (linear_) {
            for (int i = b; i >= p; --i)
                if (range.contains(value(i))) return i;
            return kNoIndex;
        }
        return max_index_rec(1, 1, base_, p, b, range);
    }

    // Minimum value v_i over i in [p, b] with v_i in `range`.
    HeightResult min_height(const ValueRange& range, int p, int b) const {
        clip(p, b);
        HeightResult res;
        if (p > b) return res;
        if (linear_) {
            for (int i = p; i <= b; ++i) {
                const double v = value(i);
                if (range.contains(v) && (!res.found || v < res.value)) res = {true, v, i};
            }
            return res;
        }
        double best = std::numeric_limits<double>::infinity();
        bool found = false;
        min_height_rec(1, 1, base_, p, b, range, best, found);
        if (!found) return res;
        // locate one index attaining the value
        const int idx = min_index(ValueRange::closed(best, best), p, b);
        return {true, best, idx};
    }

    // Maximum value v_i over i in [p, b] with v_i in `range`.
    HeightResult max_height(const ValueRange& range, int p, int b) const {
        clip(p, b);
        HeightResult res;
        if (p > b) return res;
        if (linear_) {
            for (int i = p; i <= b; ++i) {
                const double v = value(i);
                if (range.contains(v) && (!res.found || v > res.value)) res = {true, v, i};
            }
            return res;
        }
        double best = -std::numeric_limits<double>::infinity();
        bool found = false;
        max_height_rec(1, 1, base_, p, b, range, best, found);
        if (!found) return res;
        const int idx = min_index(ValueRange::closed(best, best), p, b);
        return {true, best, idx};
    }

private:
    void clip(int& p, int& b) const {
        p = std::max(p, 1);
        b = std::min(b, size());
    }

    bool node_may_contain(int node, const ValueRange& range) const {
        const double mn = node_min_[static_cast<std::size_t>(node)];
        const double mx = node_max_[static_cast<std::size_t>(node)];
        if (mn > mx) return false;  // empty padding node
        if (range.hi_open ? !(mn < range.hi) : !(mn <= range.hi)) return false;
        if (range.lo_open ? !(mx > range.lo) : !(mx >= range.lo)) return false;
        if (range.lo_bounded() && range.hi_bounded()) {
            // both bounds finite: check existence in the sorted values
            const auto& vs = node_sorted_[static_cast<std::size_t>(node)];
            auto it = range.lo_open ? std::upper_bound(vs.begin(), vs.end(), range.lo)
                                    : std::lower_bound(vs.begin(), vs.end(), range.lo);
            if (it == vs.end()) return false;
            return range.contains(*it);
        }
        return true;
    }

    int min_index_rec(int node, int lo, int hi, int p, int b, const ValueRange& range) const {
        if (hi < p || b < lo) return kNoIndex;
        if (p <= lo && hi <= b) {
            if (!node_may_contain(node, range)) return kNoIndex;
            if (lo == hi) return lo;
            const int mid = (lo + hi) / 2;
            const int l = min_index_rec(2 * node, lo, mid, p, b, range);
            if (l != kNoIndex) return l;
            return min_index_rec(2 * node + 1, mid + 1, hi, p, b, range);
        }
        const int mid = (lo + hi) / 2;
        const int l = min_index_rec(2 * node, lo, mid, p, b, range);
        if (l != kNoIndex) return l;
        return min_index_rec(2 * node + 1, mid + 1, hi, p, b, range);
    }

    int max_index_rec(int node, int lo, int hi, int p, int b, const ValueRange& range) const {
        if (hi < p || b < lo) return kNoIndex;
        if (p <= lo && hi <= b) {
            if (!node_may_contain(node, range)) return kNoIndex;
            if (lo == hi) return lo;
            const int mid = (lo + hi) / 2;
            const int r = max_index_rec(2 * node + 1, mid + 1, hi, p, b, range);
            if (r != kNoIndex) return r;
            return max_index_rec(2 * node, lo, mid, p, b, range);
        }
        const int mid = (lo + hi) / 2;
        const int r = max_index_rec(2 * node + 1, mid + 1, hi, p, b, range);
        if (r != kNoIndex) return r;
        return max_index_rec(2 * node, lo, mid, p, b, range);
    }

    // Smallest in-range value of a node fully inside the index range.
    bool node_min_value(int node, const ValueRange& range, double& out) const {
        const auto& vs = node_sorted_[static_cast<std::size_t>(node)];
        if (vs.empty()) return false;
        if (!range.lo_bounded()) {
            out = vs.front();
            return range.contains(out);
        }
        auto it = range.lo_open ? std::upper_bound(vs.begin(), vs.end(), range.lo)
                                : std::lower_bound(vs.begin(), vs.end(), range.lo);
        if (it == vs.end()) return false;
        out = *it;
        return range.contains(out);
    }

    bool node_max_value(int node, const ValueRange& range, double& out) const {
        const auto& vs = node_sorted_[static_cast<std::size_t>(node)];
        if (vs.empty()) return false;
        if (!range.hi_bounded()) {
            out = vs.back();
            return range.contains(out);
        }
        auto it = range.hi_open ? std::lower_bound(vs.begin(), vs.end(), range.hi)
                                : std::upper_bound(vs.begin(), vs.end(), range.hi);
        if (it == vs.begin()) return false;
        out = *std::prev(it);
        return range.contains(out);
    }

    void min_height_rec(int node, int lo, int hi, int p, int b, const ValueRange& range,
                        double& best, bool& found) const {
        if (hi < p || b < lo) return;
        if (p <= lo && hi <= b) {
            double v;
            if (node_min_value(node, range, v) && (!found || v < best)) {
                best = v;
                found = true;
            }
            return;
        }
        const int mid = (lo + hi) / 2;
        min_height_rec(2 * node, lo, mid, p, b, range, best, found);
        min_height_rec(2 * node + 1, mid + 1, hi, p, b, range, best, found);
    }

    void max_height_rec(int node, int lo, int hi, int p, int b, const ValueRange& range,
                        double& best, bool& found) const {
        if (hi < p || b < lo) return;
        if (p <= lo && hi <= b) {
            double v;
            if (node_max_value(node, range, v) && (!found || v > best)) {
                best = v;
                found = true;
            }
            return;
        }
        const int mid = (lo + hi) / 2;
        max_height_rec(2 * node, lo, mid, p, b, range, best, found);
        max_height_rec(2 * node + 1, mid + 1, hi, p, b, range, best, found);
    }

    std::vector<double> values_;
    bool linear_ = true;
    int base_ = 0;
    std::vector<double> node_min_, node_max_;
    std::vector<std::vector<double>> node_sorted_;
};

// Spec-facing constructor for grid-valued arrays: validates that every value
// is an integral multiple of `gamma` and lies within [-2*delta, 2*delta].
inline RangeIndex build_range_index(const std::vector<double>& values, double gamma, double delta) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    for (double v : values) {
        const double k = v / gamma;
        if (std::abs(k - std::round(k)) > 1e-9) throw std::invalid_argument("value off the gamma-grid");
        if (std::abs(v) > 2.0 * delta + 1e-9 * delta) throw std::invalid_argument("value outside [-2*delta, 2*delta]");
    }
    return RangeIndex(values);
}

} // namespace frechet::onedim
