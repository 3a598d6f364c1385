#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace frechet {

// Closed real interval [lo, hi]. All free-space boundary sets in this
// library are closed, so a single canonical empty state (lo > hi) suffices.
struct Interval {
    double lo = 1.0;
    double hi = 0.0;

    static Interval empty() { return Interval{1.0, 0.0}; }
    static Interval of(double lo, double hi) { return Interval{lo, hi}; }
    static Interval point(double x) { return Interval{x, x}; }

    bool is_empty() const { return lo > hi; }
    double length() const { return is_empty() ? 0.0 : hi - lo; }
    bool contains(double x) const { return !is_empty() && lo <= x && x <= hi; }

    Interval clamp_to(const Interval& other) const {
        if (is_empty() || other.is_empty()) return empty();
        Interval r{std::max(lo, other.lo), std::min(hi, other.hi)};
        return r.is_empty() ? empty() : r;
    }

    // Restrict to [x, +inf).
    Interval above(double x) const {
        if (is_empty()) return empty();
        Interval r{std::max(lo, x), hi};
        return r.is_empty() ? empty() : r;
    }

    bool overlaps_or_touches(const Interval& other) const {
        if (is_empty() || other.is_empty()) return false;
        return lo <= other.hi && other.lo <= hi;
    }

    // Smallest interval containing both. For overlapping intervals this is the
    // plain union; for disjoint ones the gap is covered as well (callers that
    // care about disjointness check overlaps_or_touches first).
    Interval hull(const Interval& other) const {
        if (is_empty()) return other;
        if (other.is_empty()) return *this;
        return Interval{std::min(lo, other.lo), std::max(hi, other.hi)};
    }

    bool operator==(const Interval& other) const {
        if (is_empty() && other.is_empty()) return true;
        return lo == other.lo && hi == other.hi;
    }
};

} // namespace frechet
