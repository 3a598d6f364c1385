#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "frechet/geometry.hpp"
#include "frechet/interval.hpp"

// Exact quadratic-time oracles: discrete Frechet DP, continuous free-space
// decider, and brute-force reachability for the reduced free-space problem.
// Everything here is deliberately simple; the fast decider is tested against
// these routines.

namespace frechet::baseline {

/*
 * Free interval of the segment A->B against the ball B(C, delta), as a
 * closed sub-interval of [0,1] in the segment parameter. Endpoint
 * feasibility is decided by the direct distance check so that adjacent
 * edges sharing a vertex always agree; the quadratic only shapes the
 * interior. A discriminant within 1e-12 of zero (normalized) is snapped to
 * a single tangency point.
 */
inline Interval free_interval(std::span<const double> a, std::span<const double> b,
                              std::span<const double> c, double delta) {
    const std::size_t d = a.size();
    double qa = 0.0, qb = 0.0, qc = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double u = b[k] - a[k];
        const double w = a[k] - c[k];
        qa += u * u;
        qb += u * w;
        qc += w * w;
    }
    qc -= delta * delta;
    const bool free0 = dist_sqr(a, c) <= delta * delta;
    const bool free1 = dist_sqr(b, c) <= delta * delta;

    if (qa <= 0.0) {  // zero-length segment
        return free0 ? Interval::of(0.0, 1.0) : Interval::empty();
    }

    const double hb = qb / qa;
    const double hc = qc / qa;
    const double disc = hb * hb - hc;

    Interval r = Interval::empty();
    if (disc > 1e-12) {
        const double s = std::sqrt(disc);
        r = Interval::of(std::max(-hb - s, 0.0), std::min(-hb + s, 1.0));
        if (r.is_empty()) r = Interval::empty();
    } else if (disc >= -1e-12) {
        const double l0 = -hb;
        if (l0 >= 0.0 && l0 <= 1.0) r = Interval::point(l0);
    }

    if (free0 && free1) return Interval::of(0.0, 1.0);
    if (free0) return Interval::of(0.0, r.is_empty() ? 0.0 : r.hi);
    if (free1) return Interval::of(r.is_empty() ? 1.0 : r.lo, 1.0);
    return r;
}

/*
 * One free-space cell: pi-segment i vs sigma-segment j, with the four
 * boundary free intervals as closed sub-intervals of [0,1] (empty allowed).
 * bottom/top run along pi (sigma fixed at vertex j / j+1), left/right along
 * sigma (pi fixed at vertex i / i+1).
 */
struct FreeSpaceCell {
    int i = 0, j = 0;
    Interval bottom, top, left, right;

    static FreeSpaceCell compute(const Curve& pi, const Curve& sigma, int i, int j, double delta) {
        FreeSpaceCell c;
        c.i = i;
        c.j = j;
        c.bottom = free_interval(pi.vertex(i), pi.vertex(i + 1), sigma.vertex(j), delta);
        c.top = free_interval(pi.vertex(i), pi.vertex(i + 1), sigma.vertex(j + 1), delta);
        c.left = free_interval(sigma.vertex(j), sigma.vertex(j + 1), pi.vertex(i), delta);
        c.right = free_interval(sigma.vertex(j), sigma.vertex(j + 1), pi.vertex(i + 1), delta);
        return c;
    }
};

// Discrete traversal witness: index pairs from (1,1) to (n,m), unit steps.
struct Witness {
    std::vector<std::pair<int, int>> steps;
};

struct DiscreteFrechetResult {
    double value = 0.0;
    Witness witness;
};

// Exact discrete Frechet distance, value only, O(min(n,m)) memory.
inline double discrete_frechet(const Curve& pi, const Curve& sigma) {
    require_same_dim(pi, sigma);
    const int n = pi.size(), m = sigma.size();
    std::vector<double> row(static_cast<std::size_t>(m));
    for (int p = 1; p <= n; ++p) {
        double diag_prev = 0.0;  // row[q-1] from the previous p (dp[p-1][q-1])
        for (int q = 1; q <= m; ++q) {
            const double d2 = dist_sqr(pi.vertex(p), sigma.vertex(q));
            const double up = row[q - 1];  // dp[p-1][q] before overwrite
            double best;
            if (p == 1 && q == 1) best = d2;
            else if (p == 1) best = std::max(d2, row[q - 2]);
            else if (q == 1) best = std::max(d2, up);
            else best = std::max(d2, std::min({diag_prev, up, row[q - 2]}));
            diag_prev = up;
            row[q - 1] = best;
        }
    }
    return std::sqrt(row[m - 1]);
}

// Full DP with witness extraction. Backtracking prefers diagonal over
// right (advance in pi) over up; the tie-break is fixed for reproducibility.
inline DiscreteFrechetResult discrete_frechet_witness(const Curve& pi, const Curve& sigma) {
    require_same_dim(pi, sigma);
    const int n = pi.size(), m = sigma.size();
    std::vector<double> dp(static_cast<std::size_t>(n) * m);
    auto at = [&](int p, int q) -> double& { return dp[static_cast<std::size_t>(p - 1) * m + (q - 1)]; };
    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= m; ++q) {
            const double d2 = dist_sqr(pi.vertex(p), sigma.vertex(q));
            double best;
            if (p == 1 && q == 1) best = d2;
            else if (p == 1) best = std::max(d2, at(1, q - 1));
            else if (q == 1) best = std::max(d2, at(p - 1, 1));
            else best = std::max(d2, std::min({at(p - 1, q - 1), at(p - 1, q), at(p, q - 1)}));
            at(p, q) = best;
        }
    }
    DiscreteFrechetResult res;
    res.value = std::sqrt(at(n, m));
    std::vector<std::pair<int, int>> rev;
    int p = n, q = m;
    rev.emplace_back(p, q);
    while (p > 1 || q > 1) {
        if (p > 1 && q > 1 && at(p - 1, q - 1) <= at(p, q)) { --p; --q; }
        else if (p > 1 && at(p - 1, q) <= at(p, q)) { --p; }
        else if (q > 1) { --q; }
        else { --p; }
        rev.emplace_back(p, q);
    }
    res.witness.steps.assign(rev.rbegin(), rev.rend());
    return res;
}

/*
 * Exact continuous decision d_F(pi, sigma) <= delta via reachable-interval
 * propagation over all cells, lower-left to upper-right. O(nm) time,
 * O(n + m) memory.
 */
inline bool continuous_decide(const Curve& pi, const Curve& sigma, double delta) {
    require_same_dim(pi, sigma);
    if (delta < 0) throw std::invalid_argument("delta must be >= 0");
    const int n = pi.size(), m = sigma.size();
    const double d2 = delta * delta;

    if (dist_sqr(pi.vertex(1), sigma.vertex(1)) > d2) return false;
    if (dist_sqr(pi.vertex(n), sigma.vertex(m)) > d2) return false;
    if (n == 1 && m == 1) return true;
    if (n == 1 || m == 1) {
        // Point against a curve: the max distance is attained at a vertex.
        const Curve& point_curve = (n == 1) ? pi : sigma;
        const Curve& other = (n == 1) ? sigma : pi;
        auto p0 = point_curve.vertex(1);
        for (int i = 1; i <= other.size(); ++i)
            if (dist_sqr(p0, other.vertex(i)) > d2) return false;
        return true;
    }

    // Bottom boundary: reachable prefix along sigma vertex 1.
    std::vector<Interval> rh(static_cast<std::size_t>(n));  // rh[i], i in [1..n-1]
    {
        bool prefix = true;
        for (int i = 1; i <= n - 1; ++i) {
            Interval I = free_interval(pi.vertex(i), pi.vertex(i + 1), sigma.vertex(1), delta);
            if (prefix && !I.is_empty() && I.lo == 0.0) {
                rh[i] = Interval::of(i, i + I.hi);
                prefix = (I.hi == 1.0);
            } else {
                rh[i] = Interval::empty();
                prefix = false;
            }
        }
    }
    // Left boundary prefix.
    std::vector<Interval> lv(static_cast<std::size_t>(m));  // lv[j], j in [1..m-1]
    {
        bool prefix = true;
        for (int j = 1; j <= m - 1; ++j) {
            Interval I = free_interval(sigma.vertex(j), sigma.vertex(j + 1), pi.vertex(1), delta);
            if (prefix && !I.is_empty() && I.lo == 0.0) {
                lv[j] = Interval::of(j, j + I.hi);
                prefix = (I.hi == 1.0);
            } else {
                lv[j] = Interval::empty();
                prefix = false;
            }
        }
    }

    for (int j = 1; j <= m - 1; ++j) {
        Interval rv = lv[j];
        for (int i = 1; i <= n - 1; ++i) {
            Interval top = free_interval(pi.vertex(i), pi.vertex(i + 1), sigma.vertex(j + 1), delta);
            if (!top.is_empty()) top = Interval::of(i + top.lo, i + top.hi);
            Interval right = free_interval(sigma.vertex(j), sigma.vertex(j + 1), pi.vertex(i + 1), delta);
            if (!right.is_empty()) right = Interval::of(j + right.lo, j + right.hi);

            const Interval& bottom_reach = rh[i];
            Interval out_top, out_right;
            if (!rv.is_empty()) out_top = top;
            else if (!bottom_reach.is_empty()) out_top = top.above(bottom_reach.lo);
            if (!bottom_reach.is_empty()) out_right = right;
            else if (!rv.is_empty()) out_right = right.above(rv.lo);

            rh[i] = out_top;
            rv = out_right;
        }
    }
    return rh[n - 1].contains(static_cast<double>(n));
}

struct ContinuousFrechetResult {
    double value = 0.0;
    bool converged = true;
};

/*
 * Approximate continuous Frechet value by bisection on the exact decider.
 * Returns v with the decider true at v*(1+rel_tol) and false at
 * v*(1-rel_tol), or v equal to the endpoint-distance lower bound when that
 * is already feasible. Capped at 200 iterations (converged=false then).
 */
inline ContinuousFrechetResult continuous_frechet(const Curve& pi, const Curve& sigma, double rel_tol) {
    require_same_dim(pi, sigma);
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("rel_tol must be in (0,1)");
    const double l0 = endpoint_gap(pi, sigma);
    if (continuous_decide(pi, sigma, l0)) return {l0, true};
    double lo = l0;
    double hi = l0 + total_length(pi) + total_length(sigma);
    int guard = 0;
    while (!continuous_decide(pi, sigma, hi) && guard++ < 64) hi *= 2.0;
    int iter = 0;
    while (hi * (1.0 - rel_tol) > lo * (1.0 + rel_tol) && iter < 200) {
        const double mid = 0.5 * (lo + hi);
        if (continuous_decide(pi, sigma, mid)) hi = mid;
        else lo = mid;
        ++iter;
    }
    return {0.5 * (lo + hi), iter < 200};
}

struct ReducedReachResult {
    std::vector<int> f_pi;     // sorted exit indices on pi
    std::vector<int> f_sigma;  // sorted exit indices on sigma
};

/*
 * Brute-force solution of the reduced free-space problem on 1D curves:
 * boolean reachability DP over [1..n] x [1..m] seeded at (e, 1) for each
 * entry e. F_pi collects f with reach(f, m); F_sigma collects f with
 * reach(n, f). Empty entry set yields empty exit sets.
 */
inline ReducedReachResult reduced_reach_bruteforce(const Curve& pi1d, const Curve& sigma1d,
                                                   double delta, const std::set<int>& entries) {
    if (pi1d.dim() != 1 || sigma1d.dim() != 1)
        throw std::invalid_argument("reduced_reach_bruteforce expects 1D curves");
    const int n = pi1d.size(), m = sigma1d.size();
    ReducedReachResult res;
    if (entries.empty()) return res;
    for (int e : entries)
        if (e < 1 || e > n) throw std::invalid_argument("entry index out of range");

    auto free = [&](int p, int q) {
        return std::abs(pi1d.vertex_coord(p, 0) - sigma1d.vertex_coord(q, 0)) <= delta;
    };
    std::vector<char> reach(static_cast<std::size_t>(n) * m, 0);
    auto at = [&](int p, int q) -> char& { return reach[static_cast<std::size_t>(p - 1) * m + (q - 1)]; };
    for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= m; ++q) {
            if (!free(p, q)) continue;
            bool ok = (q == 1 && entries.count(p));
            if (!ok && p > 1 && at(p - 1, q)) ok = true;
            if (!ok && q > 1 && at(p, q - 1)) ok = true;
            if (!ok && p > 1 && q > 1 && at(p - 1, q - 1)) ok = true;
            at(p, q) = ok ? 1 : 0;
        }
    }
    for (int f = 1; f <= n; ++f)
        if (at(f, m)) res.f_pi.push_back(f);
    for (int f = 1; f <= m; ++f)
        if (at(n, f)) res.f_sigma.push_back(f);
    return res;
}

} // namespace frechet::baseline
