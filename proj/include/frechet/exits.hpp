#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "frechet/separated.hpp"

namespace frechet::onedim {

/*
 * Exit computation on one-dimensional separated curves (the reduced
 * free-space problem). All routines take the forward instance `fs`
 * (pi above 0) and its swapped counterpart `rs`; sigma-side greedy steps
 * are pi-side steps on `rs`. Indices are 1-based into the instances.
 */

/*
 * Exits on sigma from the single start pair (p, q): all e in [q, d] such
 * that d_dF(pi_{p..b}, sigma_{q..e}) <= delta. Requires (p, q) to be a
 * greedy pair of the enclosing instance (callers guarantee this).
 *
 * Recursive structure: a maximal greedy step on pi keeps the problem
 * intact; otherwise a greedy step on sigma splits the sigma range; when
 * stuck the last sigma vertex cannot be an exit and the range shrinks.
 * The pi-step and shrink branches are tail calls and run as a loop; only
 * splits push work.
 */
inline std::vector<int> find_sigma_exits(const SepInstance& fs, const SepInstance& rs,
                                         int p0, int b, int q0, int d0) {
    std::vector<int> out;
    if (q0 > d0 || p0 > b) return out;
    std::vector<std::array<int, 3>> stack;
    stack.push_back({p0, q0, d0});
    while (!stack.empty()) {
        auto [p, q, d] = stack.back();
        stack.pop_back();
        for (;;) {
            if (q == d) {
                if (stop_pi(fs, p, b, q) == b + 1) out.push_back(q);
                break;
            }
            const int pn = max_greedy_step_pi(fs, p, b, q, d);
            if (pn != kNoIndex) {
                p = pn;
                continue;
            }
            const int qn = max_greedy_step_pi(rs, q, d, p, b);
            if (qn != kNoIndex) {
                stack.push_back({p, qn, d});  // right part
                d = qn - 1;                   // continue with the left part
                continue;
            }
            --d;  // no greedy step: the last sigma vertex is unreachable
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/*
 * Exits on pi given an entry set on pi. Each considered entry runs the
 * greedy loop to quiescence; the stopping index bounds the maximal
 * reachable point, all entries below it are dominated and dropped, and the
 * exits of the span are collected by a role-swapped find_sigma_exits.
 * Entries whose start pair is infeasible contribute nothing.
 */
inline std::vector<int> pi_exits_from_pi(const SepInstance& fs, const SepInstance& rs,
                                         const std::vector<int>& entries_sorted) {
    const int n = fs.n(), m = fs.m();
    std::vector<int> out;
    std::size_t idx = 0;
    while (idx < entries_sorted.size()) {
        const int phat = entries_sorted[idx++];
        if (!fs.feasible(phat, 1)) continue;
        int p = phat, q = 1;
        bool stepped = true;
        while (stepped) {
            stepped = false;
            const int qn = max_greedy_step_pi(rs, q, m, p, n);
            if (qn != kNoIndex) {
                q = qn;
                stepped = true;
                trace_step(p, q, "sigma_max");
            }
            const int pn = max_greedy_step_pi(fs, p, n, q, m);
            if (pn != kNoIndex) {
                p = pn;
                stepped = true;
                trace_step(p, q, "pi_max");
            }
        }
        const int pbar = stop_pi(fs, p, n, q) - 1;  // u(phat)
        std::vector<int> exits = find_sigma_exits(rs, fs, 1, m, phat, pbar);
        out.insert(out.end(), exits.begin(), exits.end());
        while (idx < entries_sorted.size() && entries_sorted[idx] <= pbar) ++idx;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/*
 * Exits on sigma given an entry set on pi. Per entry, Q' is the first
 * sigma vertex that sees the highest remaining pi vertex; the greedy loop
 * (maximal steps on sigma, minimal on pi) either reaches Q' - then exits in
 * [Q', qbar] are collected and qbar drops below Q' - or proves that all
 * entries up to the final p are irrelevant.
 */
inline std::vector<int> sigma_exits_from_pi(const SepInstance& fs, const SepInstance& rs,
                                            const std::vector<int>& entries_sorted) {
    const int n = fs.n(), m = fs.m();
    std::vector<int> out;
    int qbar = m;
    std::size_t idx = 0;
    while (idx < entries_sorted.size()) {
        const int phat = entries_sorted[idx++];
        if (!fs.feasible(phat, 1)) continue;
        int p = phat, q = 1;
        const HeightResult maxpi = fs.ind_pi().max_height(ValueRange::all(), phat, n);
        const int qprime = fs.ind_sig().min_index(ValueRange::at_least(maxpi.value - fs.delta()), 1, m);
        const int qcap = (qprime == kNoIndex) ? m : qprime;
        bool stepped = true;
        while (stepped && q != qprime) {
            stepped = false;
            const int qn = max_greedy_step_pi(rs, q, qcap, p, n);
            if (qn != kNoIndex) {
                q = qn;
                stepped = true;
                trace_step(p, q, "sigma_max");
            }
            if (q != qprime) {
                const int pn = min_greedy_step_pi(fs, p, n, q, qcap);
                if (pn != kNoIndex) {
                    p = pn;
                    stepped = true;
                    trace_step(p, q, "pi_min");
                }
            }
        }
        if (qprime != kNoIndex && q == qprime && qprime <= qbar) {
            std::vector<int> exits = find_sigma_exits(fs, rs, p, n, qprime, qbar);
            out.insert(out.end(), exits.begin(), exits.end());
            qbar = qprime - 1;
        }
        while (idx < entries_sorted.size() && entries_sorted[idx] <= p) ++idx;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct EntryExitSets {
    std::vector<int> entries;  // E on pi, sorted
    std::vector<int> f_pi;     // exits on pi
    std::vector<int> f_sigma;  // exits on sigma
};

/*
 * The reduced free-space problem with entry sets on both curves:
 * F_pi collects f with d_dF(pi_{e..f}, sigma) <= delta for some e in E,
 * together with the role-swapped contribution from sigma entries
 * (d_dF(sigma_{e..m}, pi_{1..f}) <= delta); F_sigma symmetrically. Exact.
 */
inline EntryExitSets solve_reduced(const Separated1D& sep, std::vector<int> entries,
                                   std::vector<int> entries_sigma) {
    sep.validate();
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    std::sort(entries_sigma.begin(), entries_sigma.end());
    entries_sigma.erase(std::unique(entries_sigma.begin(), entries_sigma.end()), entries_sigma.end());

    const SepInstance fwd = SepInstance::from(sep);
    const SepInstance rev = fwd.swapped();

    EntryExitSets res;
    res.entries = entries;
    res.f_pi = pi_exits_from_pi(fwd, rev, entries);
    res.f_sigma = sigma_exits_from_pi(fwd, rev, entries);

    const std::vector<int> f_pi_from_sigma = sigma_exits_from_pi(rev, fwd, entries_sigma);
    const std::vector<int> f_sigma_from_sigma = pi_exits_from_pi(rev, fwd, entries_sigma);

    auto merge_into = [](std::vector<int>& dst, const std::vector<int>& src) {
        dst.insert(dst.end(), src.begin(), src.end());
        std::sort(dst.begin(), dst.end());
        dst.erase(std::unique(dst.begin(), dst.end()), dst.end());
    };
    merge_into(res.f_pi, f_pi_from_sigma);
    merge_into(res.f_sigma, f_sigma_from_sigma);
    return res;
}

} // namespace frechet::onedim
