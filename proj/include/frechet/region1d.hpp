#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "frechet/exits.hpp"
#include "frechet/geometry.hpp"
#include "frechet/interval.hpp"
#include "frechet/separated.hpp"

namespace frechet::onedim {

// Entry intervals on the lower-left boundary of a piece-pair region, in
// region-local parameters: bottom[i] is a sub-interval of [i, i+1] on the
// pi axis (sigma at vertex 1), left[j] of [j, j+1] on the sigma axis.
// Vectors are indexed 1-based; slot 0 is unused.
struct RegionEntries {
    std::vector<Interval> bottom;
    std::vector<Interval> left;

    static RegionEntries sized(int n, int m) {
        RegionEntries e;
        e.bottom.assign(static_cast<std::size_t>(std::max(n, 1)), Interval::empty());
        e.left.assign(static_cast<std::size_t>(std::max(m, 1)), Interval::empty());
        return e;
    }
};

// Exit intervals on the upper-right boundary: top[i] on the pi axis (sigma
// at its last vertex), right[j] on the sigma axis (pi at its last vertex).
struct RegionExits {
    std::vector<Interval> top;
    std::vector<Interval> right;
    // diagnostic: number of per-edge unions of the two entry-side results
    // that were disjoint (covered by their hull); expected to stay 0
    int disjoint_union_incidents = 0;
};

/*
 * Projection of a piece pair onto the line through their initial vertices.
 * If the initial vertices are closer than delta - 2*Lambda, pi is first
 * translated along that line (all pairwise distances stay at most delta in
 * both configurations, so reachability is unaffected). The line is mapped
 * isometrically to R with the midpoint of the initial vertices at 0; the
 * pi side comes out nonnegative and the sigma side nonpositive, with exact
 * separation enforced by a final clamp against sign noise.
 */
inline Separated1D project_pieces(const Curve& piece_pi, const Curve& piece_sigma, double delta,
                                  double epsilon, double lambda_value) {
    require_same_dim(piece_pi, piece_sigma);
    (void)epsilon;
    const std::size_t d = piece_pi.dim();

    auto check_piece = [&](const Curve& c, const char* which) {
        for (int i = 1; i <= c.size(); ++i)
            if (dist(c.vertex(i), c.vertex(1)) > lambda_value + 1e-9)
                throw std::invalid_argument(std::string(which) + " piece leaves its Lambda ball");
    };
    check_piece(piece_pi, "pi");
    check_piece(piece_sigma, "sigma");

    const double target = delta - 2.0 * lambda_value;  // >= delta/2 since Lambda <= delta/4
    std::vector<double> p1(piece_pi.vertex(1).begin(), piece_pi.vertex(1).end());
    const auto q1 = piece_sigma.vertex(1);
    double d0 = dist(std::span<const double>(p1), q1);

    std::vector<double> shift(d, 0.0);
    if (d0 < target) {
        std::vector<double> dir(d, 0.0);
        if (d0 > 0.0) {
            for (std::size_t k = 0; k < d; ++k) dir[k] = (p1[k] - q1[k]) / d0;
        } else {
            dir[0] = 1.0;  // coincident initial vertices: any fixed direction
        }
        for (std::size_t k = 0; k < d; ++k) {
            shift[k] = q1[k] + target * dir[k] - p1[k];
            p1[k] += shift[k];
        }
        d0 = target;
    }

    std::vector<double> u(d), mid(d);
    for (std::size_t k = 0; k < d; ++k) {
        u[k] = (p1[k] - q1[k]) / d0;
        mid[k] = 0.5 * (p1[k] + q1[k]);
    }

    Separated1D out;
    out.grid = 1.0;
    out.delta = delta;
    out.pi_vals.resize(static_cast<std::size_t>(piece_pi.size()));
    out.sigma_vals.resize(static_cast<std::size_t>(piece_sigma.size()));
    for (int i = 1; i <= piece_pi.size(); ++i) {
        double v = 0.0;
        auto x = piece_pi.vertex(i);
        for (std::size_t k = 0; k < d; ++k) v += (x[k] + shift[k] - mid[k]) * u[k];
        out.pi_vals[static_cast<std::size_t>(i - 1)] = std::max(v, 0.0);
    }
    for (int j = 1; j <= piece_sigma.size(); ++j) {
        double v = 0.0;
        auto x = piece_sigma.vertex(j);
        for (std::size_t k = 0; k < d; ++k) v += (x[k] - mid[k]) * u[k];
        out.sigma_vals[static_cast<std::size_t>(j - 1)] = std::min(v, 0.0);
    }
    return out;
}

/*
 * Result of the continuous-to-discrete preparation: both curves rounded to
 * the gamma-grid (pi down, sigma up, far values clamped to +-2*delta) and
 * the entry intervals replaced by single entry vertices. Values are stored
 * in units of gamma, so grid vertices are integral and all comparisons in
 * the reduced solver are exact. Entry vertices keep their exact position
 * and interpolated value; they are on the grid whenever the distance
 * constraint (and not the interval endpoint) determines them.
 */
struct PreparedRegion {
    Separated1D rounded;     // integral unit values; .grid = gamma, .delta = delta_units
    double gamma = 1.0;      // distance units per grid unit
    double delta_units = 0;  // 3 * ceil(1/epsilon_hat), exact in double

    struct EntryVertex {
        int seg = 0;        // segment the entry lies on
        double pos = 0.0;   // global parameter in [seg, seg+1]
        double value = 0.0; // in grid units
    };
    std::vector<EntryVertex> pi_entries;
    std::vector<EntryVertex> sigma_entries;
};

namespace detail {

// Leftmost point of [lo,hi] on segment `seg` (endpoint unit values u0, u1)
// whose interpolated value is <= threshold. Values of the FIRST curve
// decrease toward feasibility; the symmetric sigma-side case is handled by
// negating. Returns false when no point qualifies.
inline bool leftmost_feasible(int seg, double lo, double hi, double u0, double u1, double threshold,
                              double& pos_out, double& val_out) {
    const double vlo = u0 + (lo - seg) * (u1 - u0);
    if (vlo <= threshold) {
        pos_out = lo;
        val_out = vlo;
        return true;
    }
    if (u1 < u0) {  // decreasing: value hits the threshold at xstar
        const double xstar = seg + (u0 - threshold) / (u0 - u1);
        if (xstar <= hi) {
            pos_out = std::max(lo, xstar);
            val_out = threshold;  // exact by construction
            return true;
        }
    }
    return false;
}

inline std::vector<PreparedRegion::EntryVertex> prepare_entries(const std::vector<double>& first_units,
                                                                double second_first_vertex_units,
                                                                double delta_units,
                                                                const std::vector<Interval>& edge_intervals) {
    std::vector<PreparedRegion::EntryVertex> out;
    const int n = static_cast<int>(first_units.size());
    const double threshold = second_first_vertex_units + delta_units;
    for (int i = 1; i <= n - 1 && i < static_cast<int>(edge_intervals.size()); ++i) {
        const Interval& iv = edge_intervals[static_cast<std::size_t>(i)];
        if (iv.is_empty()) continue;
        const double lo = std::max(iv.lo, static_cast<double>(i));
        const double hi = std::min(iv.hi, static_cast<double>(i + 1));
        if (lo > hi) continue;
        double pos, val;
        if (leftmost_feasible(i, lo, hi, first_units[static_cast<std::size_t>(i - 1)],
                              first_units[static_cast<std::size_t>(i)], threshold, pos, val))
            out.push_back({i, pos, val});
    }
    return out;
}

} // namespace detail

inline PreparedRegion round_and_prepare(const Separated1D& unrounded, double delta, double epsilon_hat,
                                        const RegionEntries& entries) {
    if (!(epsilon_hat > 0.0 && epsilon_hat <= 1.0))
        throw std::invalid_argument("epsilon_hat must be in (0, 1]");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");

    PreparedRegion prep;
    const double scale = std::ceil(1.0 / epsilon_hat);  // 1/eps rounded up to an integer
    prep.delta_units = 3.0 * scale;
    prep.gamma = delta / prep.delta_units;

    prep.rounded.grid = prep.gamma;
    prep.rounded.delta = prep.delta_units;
    prep.rounded.pi_vals.reserve(unrounded.pi_vals.size());
    prep.rounded.sigma_vals.reserve(unrounded.sigma_vals.size());
    const double clamp_hi = 2.0 * prep.delta_units;
    for (double v : unrounded.pi_vals) {
        double u = std::floor(v / prep.gamma);
        if (u > prep.delta_units) u = clamp_hi;  // no sigma point within delta
        prep.rounded.pi_vals.push_back(u);
    }
    for (double v : unrounded.sigma_vals) {
        double u = std::ceil(v / prep.gamma);
        if (u < -prep.delta_units) u = -clamp_hi;
        prep.rounded.sigma_vals.push_back(u);
    }

    prep.pi_entries = detail::prepare_entries(prep.rounded.pi_vals, prep.rounded.sigma_vals.front(),
                                              prep.delta_units, entries.bottom);
    // sigma side: negate so the helper sees a nonnegative first curve
    std::vector<double> neg_sigma(prep.rounded.sigma_vals.size());
    for (std::size_t k = 0; k < neg_sigma.size(); ++k) neg_sigma[k] = -prep.rounded.sigma_vals[k];
    prep.sigma_entries =
        detail::prepare_entries(neg_sigma, -prep.rounded.pi_vals.front(), prep.delta_units, entries.left);
    for (auto& e : prep.sigma_entries) e.value = -e.value;  // back to sigma sign
    return prep;
}

namespace detail {

struct WorkNode {
    double pos;    // global parameter
    double value;  // grid units
    bool entry;
};

// Working curve of one side within a pass: base vertices plus entry
// vertices, with probe vertices merged in per round.
struct WorkSide {
    std::vector<WorkNode> base;  // sorted by pos
    int segments = 0;

    static WorkSide build(const std::vector<double>& units,
                          const std::vector<PreparedRegion::EntryVertex>& entries) {
        WorkSide w;
        w.segments = static_cast<int>(units.size()) - 1;
        std::size_t e = 0;
        for (int i = 1; i <= static_cast<int>(units.size()); ++i) {
            while (e < entries.size() && entries[e].pos < static_cast<double>(i)) {
                if (!w.base.empty() && w.base.back().pos == entries[e].pos) w.base.back().entry = true;
                else w.base.push_back({entries[e].pos, entries[e].value, true});
                ++e;
            }
            bool vertex_is_entry = false;
            while (e < entries.size() && entries[e].pos == static_cast<double>(i)) {
                vertex_is_entry = true;
                ++e;
            }
            w.base.push_back({static_cast<double>(i), units[static_cast<std::size_t>(i - 1)], vertex_is_entry});
        }
        return w;
    }
};

// One synchronized binary search over the grid positions strictly between
// two breakpoints of a segment. Candidate ids are value-grid integers;
// t indexes them in position order. P(t) = "position t is an exit" is
// monotone from the anchored end, so a standard bracket search applies.
struct GridSearch {
    bool on_first;     // which curve the probed segment belongs to
    int seg;           // segment index
    double u0, u1;     // segment endpoint unit values (u0 != u1)
    long long id_first;  // id of the smallest-position candidate
    long long dir;       // +1 if position order follows increasing ids
    long long count;     // number of candidates
    bool left_anchored;  // true: reachable prefix, false: reachable suffix
    long long lo, hi;    // bracket in t-space: see advance()

    double pos_of(long long t) const {
        const long long id = id_first + dir * t;
        return seg + (static_cast<double>(id) - u0) / (u1 - u0);
    }
    double val_of(long long t) const { return static_cast<double>(id_first + dir * t); }
    bool done() const { return hi - lo <= 1; }
    long long probe_t() const { return (lo + hi) / 2; }

    void advance(bool probe_reachable) {
        // left_anchored: prefix of true; else: suffix of true
        const long long t = probe_t();
        if (left_anchored) {
            if (probe_reachable) lo = t;
            else hi = t;
        } else {
            if (probe_reachable) hi = t;
            else lo = t;
        }
    }
};

struct PassOutput {
    std::vector<Interval> first_exits;   // per first-curve segment, 1-based
    std::vector<Interval> second_exits;  // per second-curve segment
};

// Exit statuses of the base nodes of both sides.
struct BaseStatus {
    std::vector<char> first;   // parallel to WorkSide::base
    std::vector<char> second;
};

inline void run_reduced(const WorkSide& first, const WorkSide& second, double delta_units,
                        const std::vector<WorkNode>& first_probes,
                        const std::vector<WorkNode>& second_probes, BaseStatus* base_status,
                        std::vector<char>* first_probe_status, std::vector<char>* second_probe_status) {
    // merge base and probes (both sorted by pos)
    auto merge_side = [](const std::vector<WorkNode>& base, const std::vector<WorkNode>& probes,
                         std::vector<double>& values, std::vector<int>& entry_idx,
                         std::vector<int>& base_map, std::vector<int>& probe_map) {
        values.clear();
        entry_idx.clear();
        base_map.assign(base.size(), 0);
        probe_map.assign(probes.size(), 0);
        std::size_t bi = 0, pi = 0;
        while (bi < base.size() || pi < probes.size()) {
            const bool take_base =
                pi >= probes.size() || (bi < base.size() && base[bi].pos <= probes[pi].pos);
            const WorkNode& node = take_base ? base[bi] : probes[pi];
            values.push_back(node.value);
            const int widx = static_cast<int>(values.size());
            if (node.entry) entry_idx.push_back(widx);
            if (take_base) base_map[bi++] = widx;
            else probe_map[pi++] = widx;
        }
    };

    std::vector<double> fvals, svals;
    std::vector<int> fentries, sentries_unused;
    std::vector<int> fbase_map, fprobe_map, sbase_map, sprobe_map;
    merge_side(first.base, first_probes, fvals, fentries, fbase_map, fprobe_map);
    merge_side(second.base, second_probes, svals, sentries_unused, sbase_map, sprobe_map);

    SepInstance fwd(std::move(fvals), std::move(svals), delta_units);
    SepInstance rev = fwd.swapped();
    const std::vector<int> f_first = pi_exits_from_pi(fwd, rev, fentries);
    const std::vector<int> f_second = sigma_exits_from_pi(fwd, rev, fentries);

    auto member = [](const std::vector<int>& sorted, int x) {
        return std::binary_search(sorted.begin(), sorted.end(), x);
    };
    if (base_status) {
        base_status->first.resize(first.base.size());
        base_status->second.resize(second.base.size());
        for (std::size_t k = 0; k < first.base.size(); ++k)
            base_status->first[k] = member(f_first, fbase_map[k]);
        for (std::size_t k = 0; k < second.base.size(); ++k)
            base_status->second[k] = member(f_second, sbase_map[k]);
    }
    if (first_probe_status) {
        first_probe_status->resize(first_probes.size());
        for (std::size_t k = 0; k < first_probes.size(); ++k)
            (*first_probe_status)[k] = member(f_first, fprobe_map[k]);
    }
    if (second_probe_status) {
        second_probe_status->resize(second_probes.size());
        for (std::size_t k = 0; k < second_probes.size(); ++k)
            (*second_probe_status)[k] = member(f_second, sprobe_map[k]);
    }
}

// Per-segment exit-interval recovery from anchor statuses and resolved
// searches; see the segment sweep in one_sided_pass below.
struct SegmentAssembly {
    bool any = false;
    double min_pos = 0.0, min_val = 0.0;
    double max_pos = 0.0, max_val = 0.0;

    void add(double pos, double val) {
        if (!any || pos < min_pos) {
            min_pos = pos;
            min_val = val;
        }
        if (!any || pos > max_pos) {
            max_pos = pos;
            max_val = val;
        }
        any = true;
    }
};

/*
 * One pass of the free-space region solver: entries on the first curve
 * only. Computes exit intervals on the far boundaries of both curves by
 * one exact reduced solve, O(log 1/eps) rounds of synchronized binary
 * searches over the per-segment grid progressions, and per-segment
 * interval assembly with a one-grid-step extension at both ends.
 */
inline PassOutput one_sided_pass(const std::vector<double>& first_units,
                                 const std::vector<double>& second_units, double delta_units,
                                 const std::vector<PreparedRegion::EntryVertex>& first_entries) {
    const int n = static_cast<int>(first_units.size());
    const int m = static_cast<int>(second_units.size());
    PassOutput out;
    out.first_exits.assign(static_cast<std::size_t>(std::max(n, 1)), Interval::empty());
    out.second_exits.assign(static_cast<std::size_t>(std::max(m, 1)), Interval::empty());
    if (first_entries.empty()) return out;

    const WorkSide first = WorkSide::build(first_units, first_entries);
    const WorkSide second = WorkSide::build(second_units, {});

    BaseStatus status;
    run_reduced(first, second, delta_units, {}, {}, &status, nullptr, nullptr);

    // breakpoints per segment: node indices of the nodes on [seg, seg+1]
    auto collect_searches = [&](const WorkSide& side, const std::vector<char>& node_status,
                                bool on_first, std::vector<GridSearch>& searches,
                                std::vector<SegmentAssembly>& assembly) {
        assembly.assign(static_cast<std::size_t>(side.segments + 1), SegmentAssembly{});
        std::size_t k = 0;
        for (int seg = 1; seg <= side.segments; ++seg) {
            // nodes with pos in [seg, seg+1]; consecutive vertices share one node
            while (k + 1 < side.base.size() && side.base[k].pos < static_cast<double>(seg)) ++k;
            std::vector<std::size_t> bp;
            for (std::size_t j = k; j < side.base.size() && side.base[j].pos <= seg + 1.0; ++j)
                bp.push_back(j);
            const std::vector<double>& units = on_first ? first_units : second_units;
            const double u0 = units[static_cast<std::size_t>(seg - 1)];
            const double u1 = units[static_cast<std::size_t>(seg)];
            auto& asm_seg = assembly[static_cast<std::size_t>(seg)];
            for (std::size_t j = 0; j < bp.size(); ++j) {
                const WorkNode& node = side.base[bp[j]];
                if (node_status[bp[j]]) asm_seg.add(node.pos, node.value);
                if (j + 1 == bp.size()) break;
                const WorkNode& next = side.base[bp[j + 1]];
                const bool ls = node_status[bp[j]], rs = node_status[bp[j + 1]];
                if (u0 == u1) continue;  // constant segment: anchors suffice
                // candidate grid ids strictly between the breakpoint values
                const double va = node.value, vb = next.value;
                const double vmin = std::min(va, vb), vmax = std::max(va, vb);
                const long long klo = static_cast<long long>(std::floor(vmin)) + 1;
                const long long khi = static_cast<long long>(std::ceil(vmax)) - 1;
                if (klo > khi) continue;
                if (ls && rs) {
                    // whole sub-progression is reachable (interval structure)
                    const bool inc = u1 > u0;
                    const long long id_first = inc ? klo : khi;
                    const long long dir = inc ? 1 : -1;
                    GridSearch g{on_first, seg, u0, u1, id_first, dir, khi - klo + 1, true, 0, 0};
                    asm_seg.add(g.pos_of(0), g.val_of(0));
                    asm_seg.add(g.pos_of(g.count - 1), g.val_of(g.count - 1));
                    continue;
                }
                if (!ls && !rs) continue;  // empty between two unreachable anchors
                const bool inc = u1 > u0;
                GridSearch g;
                g.on_first = on_first;
                g.seg = seg;
                g.u0 = u0;
                g.u1 = u1;
                g.dir = inc ? 1 : -1;
                g.id_first = inc ? klo : khi;
                g.count = khi - klo + 1;
                g.left_anchored = ls;
                g.lo = -1;
                g.hi = g.count;
                searches.push_back(g);
            }
        }
    };

    std::vector<GridSearch> searches;
    std::vector<SegmentAssembly> first_assembly, second_assembly;
    collect_searches(first, status.first, true, searches, first_assembly);
    collect_searches(second, status.second, false, searches, second_assembly);

    // synchronized rounds: one probe per unresolved search endpoint
    while (true) {
        std::vector<WorkNode> fprobes, sprobes;
        std::vector<std::size_t> fowner, sowner;
        for (std::size_t si = 0; si < searches.size(); ++si) {
            GridSearch& g = searches[si];
            if (g.done()) continue;
            const long long t = g.probe_t();
            const WorkNode probe{g.pos_of(t), g.val_of(t), false};
            if (g.on_first) {
                fprobes.push_back(probe);
                fowner.push_back(si);
            } else {
                sprobes.push_back(probe);
                sowner.push_back(si);
            }
        }
        if (fprobes.empty() && sprobes.empty()) break;
        auto by_pos = [](const WorkNode& a, const WorkNode& b) { return a.pos < b.pos; };
        // keep owner arrays aligned while sorting probes by position
        std::vector<std::size_t> forder(fprobes.size()), sorder(sprobes.size());
        for (std::size_t k = 0; k < forder.size(); ++k) forder[k] = k;
        for (std::size_t k = 0; k < sorder.size(); ++k) sorder[k] = k;
        std::sort(forder.begin(), forder.end(),
                  [&](std::size_t a, std::size_t b) { return by_pos(fprobes[a], fprobes[b]); });
        std::sort(sorder.begin(), sorder.end(),
                  [&](std::size_t a, std::size_t b) { return by_pos(sprobes[a], sprobes[b]); });
        std::vector<WorkNode> fsorted, ssorted;
        std::vector<std::size_t> fown2, sown2;
        for (std::size_t k : forder) {
            fsorted.push_back(fprobes[k]);
            fown2.push_back(fowner[k]);
        }
        for (std::size_t k : sorder) {
            ssorted.push_back(sprobes[k]);
            sown2.push_back(sowner[k]);
        }

        std::vector<char> fstat, sstat;
        run_reduced(first, second, delta_units, fsorted, ssorted, nullptr, &fstat, &sstat);
        for (std::size_t k = 0; k < fsorted.size(); ++k) searches[fown2[k]].advance(fstat[k]);
        for (std::size_t k = 0; k < ssorted.size(); ++k) searches[sown2[k]].advance(sstat[k]);
    }

    // fold resolved searches into the per-segment assemblies
    for (const GridSearch& g : searches) {
        auto& asm_seg = (g.on_first ? first_assembly : second_assembly)[static_cast<std::size_t>(g.seg)];
        if (g.left_anchored) {
            if (g.lo >= 0) {
                asm_seg.add(g.pos_of(0), g.val_of(0));
                asm_seg.add(g.pos_of(g.lo), g.val_of(g.lo));
            }
        } else {
            if (g.hi <= g.count - 1) {
                asm_seg.add(g.pos_of(g.hi), g.val_of(g.hi));
                asm_seg.add(g.pos_of(g.count - 1), g.val_of(g.count - 1));
            }
        }
    }

    // emit per-segment intervals extended by one grid position on each side;
    // on an increasing segment the position before min_pos carries the next
    // smaller grid value, on a decreasing one the next larger, and mirrored
    // at the max end
    auto emit = [&](const std::vector<SegmentAssembly>& assembly, const std::vector<double>& units,
                    std::vector<Interval>& exits) {
        const int segs = static_cast<int>(units.size()) - 1;
        for (int seg = 1; seg <= segs; ++seg) {
            const auto& a = assembly[static_cast<std::size_t>(seg)];
            if (!a.any) continue;
            const double u0 = units[static_cast<std::size_t>(seg - 1)];
            const double u1 = units[static_cast<std::size_t>(seg)];
            double lo = a.min_pos, hi = a.max_pos;
            if (u0 != u1) {
                const double span = u1 - u0;
                auto is_integral = [](double v) { return std::floor(v) == v; };
                double v_before, v_after;
                if (span > 0) {
                    v_before = is_integral(a.min_val) ? a.min_val - 1.0 : std::floor(a.min_val);
                    v_after = is_integral(a.max_val) ? a.max_val + 1.0 : std::ceil(a.max_val);
                } else {
                    v_before = is_integral(a.min_val) ? a.min_val + 1.0 : std::ceil(a.min_val);
                    v_after = is_integral(a.max_val) ? a.max_val - 1.0 : std::floor(a.max_val);
                }
                const double pos_before = seg + (v_before - u0) / span;
                if (pos_before >= static_cast<double>(seg)) lo = std::min(lo, pos_before);
                const double pos_after = seg + (v_after - u0) / span;
                if (pos_after <= seg + 1.0) hi = std::max(hi, pos_after);
            }
            lo = std::max(lo, static_cast<double>(seg));
            hi = std::min(hi, static_cast<double>(seg + 1));
            exits[static_cast<std::size_t>(seg)] = Interval::of(lo, hi);
        }
    };
    emit(first_assembly, first_units, out.first_exits);
    emit(second_assembly, second_units, out.second_exits);
    return out;
}

} // namespace detail

/*
 * The free-space region problem on a piece pair: project to separated 1D
 * curves (epsilon is halved here, per the projection error budget), round
 * to the gamma-grid, replace entry intervals by entry vertices, and run
 * one pass per entry side. Exit intervals contain every point reachable
 * from the entries within delta and only points reachable within
 * (1+epsilon)*delta.
 */
inline RegionExits solve_region_pieces(const Curve& piece_pi, const Curve& piece_sigma, double delta,
                                       double epsilon, const RegionEntries& entries) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must be in (0,1]");
    const double lambda_value = std::min(0.5 * std::sqrt(epsilon), 0.25) * delta;
    const Separated1D raw = project_pieces(piece_pi, piece_sigma, delta, epsilon, lambda_value);
    const PreparedRegion prep = round_and_prepare(raw, delta, 0.5 * epsilon, entries);

    const int n = piece_pi.size(), m = piece_sigma.size();
    detail::PassOutput pass_pi = detail::one_sided_pass(prep.rounded.pi_vals, prep.rounded.sigma_vals,
                                                        prep.delta_units, prep.pi_entries);

    // second pass: entries on sigma; negate both curves to swap roles
    std::vector<double> neg_sigma(prep.rounded.sigma_vals.size()), neg_pi(prep.rounded.pi_vals.size());
    for (std::size_t k = 0; k < neg_sigma.size(); ++k) neg_sigma[k] = -prep.rounded.sigma_vals[k];
    for (std::size_t k = 0; k < neg_pi.size(); ++k) neg_pi[k] = -prep.rounded.pi_vals[k];
    std::vector<PreparedRegion::EntryVertex> neg_entries = prep.sigma_entries;
    for (auto& e : neg_entries) e.value = -e.value;
    detail::PassOutput pass_sigma =
        detail::one_sided_pass(neg_sigma, neg_pi, prep.delta_units, neg_entries);

    RegionExits out;
    out.top.assign(static_cast<std::size_t>(std::max(n, 1)), Interval::empty());
    out.right.assign(static_cast<std::size_t>(std::max(m, 1)), Interval::empty());
    auto unite = [&out](const Interval& a, const Interval& b) {
        if (!a.is_empty() && !b.is_empty() && !a.overlaps_or_touches(b)) ++out.disjoint_union_incidents;
        return a.hull(b);
    };
    for (int i = 1; i <= n - 1; ++i)
        out.top[static_cast<std::size_t>(i)] =
            unite(pass_pi.first_exits[static_cast<std::size_t>(i)],
                  pass_sigma.second_exits[static_cast<std::size_t>(i)]);
    for (int j = 1; j <= m - 1; ++j)
        out.right[static_cast<std::size_t>(j)] =
            unite(pass_pi.second_exits[static_cast<std::size_t>(j)],
                  pass_sigma.first_exits[static_cast<std::size_t>(j)]);
    return out;
}

} // namespace frechet::onedim
