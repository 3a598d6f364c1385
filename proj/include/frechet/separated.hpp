#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "frechet/range_index.hpp"

namespace frechet::onedim {

/*
 * A pair of one-dimensional curves separated by 0: all vertices of pi lie
 * at or above 0 and all vertices of sigma at or below. Values are stored in
 * units of `grid` (the rounding lattice); instances produced by
 * round_and_prepare have integral base vertices, which keeps every
 * comparison in the greedy machinery exact. Hand-built instances typically
 * use grid == 1. `delta` is in the same units as the values.
 */
struct Separated1D {
    std::vector<double> pi_vals;     // >= 0
    std::vector<double> sigma_vals;  // <= 0
    double grid = 1.0;
    double delta = 0.0;

    void validate() const {
        for (double v : pi_vals)
            if (!(v >= 0.0)) throw std::invalid_argument("pi value below 0");
        for (double v : sigma_vals)
            if (!(v <= 0.0)) throw std::invalid_argument("sigma value above 0");
        if (pi_vals.empty() || sigma_vals.empty())
            throw std::invalid_argument("separated curves must be non-empty");
    }
};

// Optional hook for dumping greedy-pair sequences (CLI --trace).
using TraceSink = std::function<void(int p, int q, const char* step_kind)>;

inline TraceSink& trace_sink() {
    static thread_local TraceSink sink;
    return sink;
}

struct TraceScope {
    explicit TraceScope(TraceSink s) { trace_sink() = std::move(s); }
    ~TraceScope() { trace_sink() = nullptr; }
};

inline void trace_step(int p, int q, const char* kind) {
    const auto& s = trace_sink();
    if (s) s(p, q, kind);
}

/*
 * One orientation of a separated pair with its range indices. The swapped
 * orientation (roles of pi and sigma exchanged) is obtained by negating
 * both curves, which preserves separation and all pairwise distances; every
 * sigma-side operation below is the pi-side operation on the swapped
 * instance.
 */
class SepInstance {
public:
    SepInstance(std::vector<double> pi, std::vector<double> sig, double delta, int linear_threshold = 32)
        : pi_(std::move(pi)),
          sig_(std::move(sig)),
          delta_(delta),
          ind_pi_(pi_, linear_threshold),
          ind_sig_(sig_, linear_threshold) {}

    static SepInstance from(const Separated1D& s, int linear_threshold = 32) {
        return SepInstance(s.pi_vals, s.sigma_vals, s.delta, linear_threshold);
    }

    SepInstance swapped(int linear_threshold = 32) const {
        std::vector<double> np(sig_.size()), ns(pi_.size());
        for (std::size_t k = 0; k < sig_.size(); ++k) np[k] = -sig_[k];
        for (std::size_t k = 0; k < pi_.size(); ++k) ns[k] = -pi_[k];
        return SepInstance(std::move(np), std::move(ns), delta_, linear_threshold);
    }

    int n() const { return static_cast<int>(pi_.size()); }
    int m() const { return static_cast<int>(sig_.size()); }
    double delta() const { return delta_; }
    double pi(int i) const { return pi_[static_cast<std::size_t>(i - 1)]; }
    double sig(int j) const { return sig_[static_cast<std::size_t>(j - 1)]; }
    const RangeIndex& ind_pi() const { return ind_pi_; }
    const RangeIndex& ind_sig() const { return ind_sig_; }

    bool feasible(int p, int q) const { return pi(p) - sig(q) <= delta_; }

private:
    std::vector<double> pi_, sig_;
    double delta_;
    RangeIndex ind_pi_, ind_sig_;
};

// First index in [p, b] whose pi value exceeds sig(q) + delta, else b + 1.
inline int stop_pi(const SepInstance& inst, int p, int b, int q) {
    const int idx = inst.ind_pi().min_index(ValueRange::greater(inst.sig(q) + inst.delta()), p, b);
    return idx == kNoIndex ? b + 1 : idx;
}

/*
 * Smallest p' in reach_pi(p, q) whose visibility of sigma dominates that of
 * p (and of every skipped index), or kNoIndex. Subcurves pi_{p..b} and
 * sigma_{q..d}.
 */
inline int min_greedy_step_pi(const SepInstance& inst, int p, int b, int q, int d) {
    const HeightResult qmin = inst.ind_sig().min_height(ValueRange::at_least(inst.pi(p) - inst.delta()), q, d);
    if (!qmin.found) return kNoIndex;
    const int pcand = inst.ind_pi().min_index(ValueRange::at_most(qmin.value + inst.delta()), p + 1, b);
    const int pstop = stop_pi(inst, p, b, q);
    return (pcand != kNoIndex && pcand < pstop) ? pcand : kNoIndex;
}

/*
 * Largest p' in reach_pi(p, q) maximizing the visibility set of sigma
 * (which then also dominates vis of p and of everything skipped), or
 * kNoIndex when no reachable point sees at least as much as p.
 */
inline int max_greedy_step_pi(const SepInstance& inst, int p, int b, int q, int d) {
    const HeightResult qmin = inst.ind_sig().min_height(ValueRange::at_least(inst.pi(p) - inst.delta()), q, d);
    if (!qmin.found) return kNoIndex;
    const int pstop = stop_pi(inst, p, b, q);
    const HeightResult pmin =
        inst.ind_pi().min_height(ValueRange::at_most(qmin.value + inst.delta()), p + 1, pstop - 1);
    if (!pmin.found) return kNoIndex;
    const HeightResult qmin2 = inst.ind_sig().min_height(ValueRange::at_least(pmin.value - inst.delta()), q, d);
    if (!qmin2.found) return kNoIndex;
    return inst.ind_pi().max_index(ValueRange::at_most(qmin2.value + inst.delta()), pmin.index, pstop - 1);
}

/*
 * Greedy decision of d_dF(pi, sigma) <= delta for separated 1D curves:
 * alternate maximal greedy steps on pi and sigma until stuck or both ends
 * are reached. Exact (no approximation at this layer).
 */
inline bool greedy_decide_instances(const SepInstance& fwd, const SepInstance& rev) {
    const int n = fwd.n(), m = fwd.m();
    if (!fwd.feasible(1, 1) || !fwd.feasible(n, m)) return false;
    int p = 1, q = 1;
    bool stepped = true;
    while (stepped && !(p == n && q == m)) {
        stepped = false;
        const int pn = max_greedy_step_pi(fwd, p, n, q, m);
        if (pn != kNoIndex) {
            p = pn;
            stepped = true;
            trace_step(p, q, "pi_max");
        }
        const int qn = max_greedy_step_pi(rev, q, m, p, n);
        if (qn != kNoIndex) {
            q = qn;
            stepped = true;
            trace_step(p, q, "sigma_max");
        }
    }
    return p == n && q == m;
}

inline bool greedy_decide(const Separated1D& sep) {
    sep.validate();
    const SepInstance fwd = SepInstance::from(sep);
    const SepInstance rev = fwd.swapped();
    return greedy_decide_instances(fwd, rev);
}

} // namespace frechet::onedim
