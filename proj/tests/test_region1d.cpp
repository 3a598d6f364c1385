#include <catch2/catch_amalgamated.hpp>

#include "frechet/decomposition.hpp"
#include "frechet/region1d.hpp"
#include "testutil.hpp"

using namespace frechet;
using namespace frechet::onedim;

namespace {

// Random piece: first vertex at `center`, all vertices within radius*lambda.
Curve random_piece(std::mt19937_64& g, int n, const std::vector<double>& center, double lambda_value,
                   double radius = 0.95) {
    std::vector<double> flat(center.begin(), center.end());
    for (int i = 1; i < n; ++i) {
        for (;;) {
            std::vector<double> p(center.size());
            double norm2 = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k) {
                p[k] = testutil::uniform(g, -radius * lambda_value, radius * lambda_value);
                norm2 += p[k] * p[k];
            }
            if (norm2 <= radius * radius * lambda_value * lambda_value) {
                for (std::size_t k = 0; k < p.size(); ++k) flat.push_back(center[k] + p[k]);
                break;
            }
        }
    }
    return Curve(center.size(), std::move(flat));
}

struct GridReach {
    std::vector<Interval> top, right;
};

// Sample positions: uniform grid plus the exact endpoints and leftmost
// free-at-level points of the entry intervals (continuous entries can start
// between uniform columns).
std::vector<double> sample_axis(const Curve& curve, const Curve& other, double level,
                                const std::vector<Interval>& edge_entries, int res) {
    const int n = curve.size();
    std::vector<double> xs;
    for (int a = 0; a <= res; ++a) xs.push_back(1.0 + (n - 1) * static_cast<double>(a) / res);
    for (int seg = 1; seg <= n - 1 && seg < static_cast<int>(edge_entries.size()); ++seg) {
        const Interval& iv = edge_entries[static_cast<std::size_t>(seg)];
        if (iv.is_empty()) continue;
        xs.push_back(iv.lo);
        xs.push_back(iv.hi);
        Interval fr = frechet::baseline::free_interval(curve.vertex(seg), curve.vertex(seg + 1),
                                                       other.vertex(1), level);
        if (!fr.is_empty()) {
            Interval cl = Interval::of(seg + fr.lo, seg + fr.hi).clamp_to(iv);
            if (!cl.is_empty()) {
                xs.push_back(cl.lo);
                xs.push_back(cl.hi);
            }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// Dense-grid monotone reachability on the original region at level `level`.
GridReach grid_oracle(const Curve& pi, const Curve& sigma, double level, const RegionEntries& entries,
                      int res) {
    const int n = pi.size(), m = sigma.size();
    const std::vector<double> xs = sample_axis(pi, sigma, level, entries.bottom, res);
    const std::vector<double> ys = sample_axis(sigma, pi, level, entries.left, res);
    const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());
    std::vector<Point> ppts, spts;
    for (double x : xs) ppts.push_back(point_at(pi, x));
    for (double y : ys) spts.push_back(point_at(sigma, y));

    auto in_entry_bottom = [&](double x) {
        const int seg = std::max(1, std::min(static_cast<int>(std::floor(x)), n - 1));
        return seg < static_cast<int>(entries.bottom.size()) &&
               entries.bottom[static_cast<std::size_t>(seg)].contains(x);
    };
    auto in_entry_left = [&](double y) {
        const int seg = std::max(1, std::min(static_cast<int>(std::floor(y)), m - 1));
        return seg < static_cast<int>(entries.left.size()) &&
               entries.left[static_cast<std::size_t>(seg)].contains(y);
    };

    std::vector<std::vector<char>> reach(static_cast<std::size_t>(nx),
                                         std::vector<char>(static_cast<std::size_t>(ny), 0));
    for (int a = 0; a < nx; ++a) {
        for (int b = 0; b < ny; ++b) {
            if (dist(ppts[static_cast<std::size_t>(a)], spts[static_cast<std::size_t>(b)]) > level) continue;
            bool ok = (b == 0 && in_entry_bottom(xs[static_cast<std::size_t>(a)])) ||
                      (a == 0 && in_entry_left(ys[static_cast<std::size_t>(b)]));
            if (!ok && a > 0 && reach[a - 1][b]) ok = true;
            if (!ok && b > 0 && reach[a][b - 1]) ok = true;
            if (!ok && a > 0 && b > 0 && reach[a - 1][b - 1]) ok = true;
            reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ok;
        }
    }
    GridReach out;
    out.top.assign(static_cast<std::size_t>(std::max(n, 1)), Interval::empty());
    out.right.assign(static_cast<std::size_t>(std::max(m, 1)), Interval::empty());
    for (int a = 0; a < nx; ++a) {
        if (!reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(ny - 1)]) continue;
        const double x = xs[static_cast<std::size_t>(a)];
        const int seg = std::max(1, std::min(static_cast<int>(std::floor(x)), n - 1));
        auto& iv = out.top[static_cast<std::size_t>(seg)];
        iv = iv.hull(Interval::point(x));
    }
    for (int b = 0; b < ny; ++b) {
        if (!reach[static_cast<std::size_t>(nx - 1)][static_cast<std::size_t>(b)]) continue;
        const double y = ys[static_cast<std::size_t>(b)];
        const int seg = std::max(1, std::min(static_cast<int>(std::floor(y)), m - 1));
        auto& iv = out.right[static_cast<std::size_t>(seg)];
        iv = iv.hull(Interval::point(y));
    }
    return out;
}

} // namespace

TEST_CASE("project_pieces: symmetric translated placement of point pieces") {
    Curve a = Curve::from_xy({{0, 0}});
    Curve b = Curve::from_xy({{3, 4}});
    auto s = project_pieces(a, b, 10.0, 1.0, 1.0);
    REQUIRE(s.pi_vals.size() == 1);
    REQUIRE(s.sigma_vals.size() == 1);
    CHECK(s.pi_vals[0] == Catch::Approx(4.0).margin(1e-12));
    CHECK(s.sigma_vals[0] == Catch::Approx(-4.0).margin(1e-12));
}

TEST_CASE("project_pieces: no translation at exact target distance") {
    // initial vertices at distance exactly delta - 2*lambda = 8
    Curve a = Curve::from_xy({{8, 0}, {8.5, 0.3}});
    Curve b = Curve::from_xy({{0, 0}, {-0.4, 0.2}});
    auto s = project_pieces(a, b, 10.0, 1.0, 1.0);
    // the line through the initial vertices is the x axis, midpoint at x=4
    CHECK(s.pi_vals[0] == Catch::Approx(4.0));
    CHECK(s.pi_vals[1] == Catch::Approx(4.5));
    CHECK(s.sigma_vals[0] == Catch::Approx(-4.0));
    CHECK(s.sigma_vals[1] == Catch::Approx(-4.4));
}

TEST_CASE("project_pieces: contraction and Pythagorean expansion bound") {
    auto g = testutil::rng(113);
    for (int rep = 0; rep < 100; ++rep) {
        const double delta = testutil::uniform(g, 0.5, 4.0);
        const double eps = testutil::uniform(g, 0.05, 1.0);
        const double lam = frechet::decomposition::lambda(eps, delta);
        Curve a = random_piece(g, testutil::uniform_int(g, 1, 8), {0.0, 0.0}, lam);
        const double dx = testutil::uniform(g, 0.2 * delta, 1.2 * delta);
        Curve b = random_piece(g, testutil::uniform_int(g, 1, 8), {dx, 0.3 * delta}, lam);
        auto s = project_pieces(a, b, delta, eps, lam);

        for (double v : s.pi_vals) CHECK(v >= 0.0);
        for (double v : s.sigma_vals) CHECK(v <= 0.0);

        // when a translation happened, the metric comparison is not meaningful
        // (both configurations are entirely within delta); skip those
        const double d0 = dist(a.vertex(1), b.vertex(1));
        if (d0 < delta - 2 * lam - 1e-12) continue;
        for (int i = 1; i <= a.size(); ++i)
            for (int j = 1; j <= b.size(); ++j) {
                const double orig = dist(a.vertex(i), b.vertex(j));
                const double proj =
                    std::abs(s.pi_vals[static_cast<std::size_t>(i - 1)] -
                             s.sigma_vals[static_cast<std::size_t>(j - 1)]);
                CHECK(proj <= orig + 1e-12);
                CHECK(orig * orig <= proj * proj + 4.0 * lam * lam + 1e-9);
            }
    }
}

TEST_CASE("project_pieces rejects non-pieces") {
    Curve a = Curve::from_xy({{0, 0}, {5, 0}});
    Curve b = Curve::from_xy({{10, 0}});
    CHECK_THROWS_AS(project_pieces(a, b, 4.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("round_and_prepare: grid rounding and clamping") {
    Separated1D raw;
    raw.pi_vals = {2.7, 7.0, 0.0};
    raw.sigma_vals = {-2.7, -0.2};
    raw.delta = 3.0;
    auto prep = round_and_prepare(raw, 3.0, 1.0, RegionEntries::sized(3, 2));
    CHECK(prep.gamma == Catch::Approx(1.0));
    CHECK(prep.delta_units == 3.0);
    CHECK(prep.rounded.pi_vals[0] == 2.0);  // rounded down
    CHECK(prep.rounded.pi_vals[1] == 6.0);  // beyond delta: clamped to 2*delta
    CHECK(prep.rounded.pi_vals[2] == 0.0);
    CHECK(prep.rounded.sigma_vals[0] == -2.0);  // rounded up (toward 0)
    CHECK(prep.rounded.sigma_vals[1] == 0.0);
}

TEST_CASE("round_and_prepare: entry vertex picks the leftmost feasible point") {
    Separated1D raw;
    raw.pi_vals = {1.0, 2.0};
    raw.sigma_vals = {-1.0, -1.5};
    raw.delta = 3.0;
    auto entries = RegionEntries::sized(2, 2);
    entries.bottom[1] = Interval::of(1.0, 2.0);  // the full first edge, both ends free
    auto prep = round_and_prepare(raw, 3.0, 1.0, entries);
    REQUIRE(prep.pi_entries.size() == 1);
    CHECK(prep.pi_entries[0].seg == 1);
    CHECK(prep.pi_entries[0].pos == 1.0);  // left endpoint
}

TEST_CASE("solve_region_pieces: fully free region reaches the whole far boundary") {
    Curve a = Curve::from_xy({{0, 0}, {0.05, 0.02}, {0.01, -0.03}});
    Curve b = Curve::from_xy({{1, 0}, {1.04, 0.03}, {0.98, 0.01}});
    const double delta = 4.0, eps = 1.0;
    auto entries = RegionEntries::sized(a.size(), b.size());
    entries.bottom[1] = Interval::of(1.0, 2.0);
    auto exits = solve_region_pieces(a, b, delta, eps, entries);
    for (int i = 1; i <= a.size() - 1; ++i) {
        CHECK(exits.top[static_cast<std::size_t>(i)].lo == Catch::Approx(static_cast<double>(i)));
        CHECK(exits.top[static_cast<std::size_t>(i)].hi == Catch::Approx(static_cast<double>(i + 1)));
    }
    for (int j = 1; j <= b.size() - 1; ++j) {
        CHECK(exits.right[static_cast<std::size_t>(j)].lo == Catch::Approx(static_cast<double>(j)));
        CHECK(exits.right[static_cast<std::size_t>(j)].hi == Catch::Approx(static_cast<double>(j + 1)));
    }
}

TEST_CASE("solve_region_pieces: empty entries give empty exits") {
    Curve a = Curve::from_xy({{0, 0}, {0.05, 0.02}});
    Curve b = Curve::from_xy({{1, 0}, {1.04, 0.03}});
    auto exits = solve_region_pieces(a, b, 4.0, 1.0, RegionEntries::sized(2, 2));
    for (const auto& iv : exits.top) CHECK(iv.is_empty());
    for (const auto& iv : exits.right) CHECK(iv.is_empty());
}

TEST_CASE("solve_region_pieces matches dense-grid reachability") {
    auto g = testutil::rng(127);
    const int res = 160;
    int nonempty_edges = 0;
    for (int rep = 0; rep < 120; ++rep) {
        const double delta = testutil::uniform(g, 0.8, 2.5);
        const double eps = std::vector<double>{1.0, 0.5, 0.1}[static_cast<std::size_t>(rep % 3)];
        const double lam = frechet::decomposition::lambda(eps, delta);
        const int n = testutil::uniform_int(g, 2, 9);
        const int m = testutil::uniform_int(g, 2, 9);
        Curve a = random_piece(g, n, {0.0, 0.0}, lam);
        const double dx = testutil::uniform(g, 0.5 * delta, 1.15 * delta);
        Curve b = random_piece(g, m, {dx, 0.1 * delta}, lam);

        auto entries = RegionEntries::sized(n, m);
        for (int i = 1; i <= n - 1; ++i)
            if (testutil::uniform_int(g, 0, 1)) {
                double lo = testutil::uniform(g, i, i + 1), hi = testutil::uniform(g, i, i + 1);
                if (lo > hi) std::swap(lo, hi);
                entries.bottom[static_cast<std::size_t>(i)] = Interval::of(lo, hi);
            }
        for (int j = 1; j <= m - 1; ++j)
            if (testutil::uniform_int(g, 0, 1)) {
                double lo = testutil::uniform(g, j, j + 1), hi = testutil::uniform(g, j, j + 1);
                if (lo > hi) std::swap(lo, hi);
                entries.left[static_cast<std::size_t>(j)] = Interval::of(lo, hi);
            }

        auto exits = solve_region_pieces(a, b, delta, eps, entries);
        CHECK(exits.disjoint_union_incidents == 0);
        auto lower = grid_oracle(a, b, delta, entries, res);
        auto upper = grid_oracle(a, b, (1.0 + eps) * delta, entries, res);
        const double xstep = static_cast<double>(n - 1) / res;
        const double ystep = static_cast<double>(m - 1) / res;

        auto check_side = [&](const std::vector<Interval>& got_all, const std::vector<Interval>& lo_all,
                              const std::vector<Interval>& hi_all, int count, double step) {
            for (int i = 1; i <= count; ++i) {
                const Interval& got = got_all[static_cast<std::size_t>(i)];
                const Interval& lo_iv = lo_all[static_cast<std::size_t>(i)];
                const Interval& hi_iv = hi_all[static_cast<std::size_t>(i)];
                if (!got.is_empty()) ++nonempty_edges;
                // completeness: every delta-reachable point is covered
                if (!lo_iv.is_empty() && got.is_empty()) {
                    CHECK(lo_iv.length() <= 2 * step);
                } else if (!lo_iv.is_empty()) {
                    CHECK(got.lo <= lo_iv.lo + step);
                    CHECK(got.hi >= lo_iv.hi - step);
                }
                // soundness: every emitted point is (1+eps)delta-reachable
                if (!got.is_empty()) {
                    REQUIRE(!hi_iv.is_empty());
                    CHECK(got.lo >= hi_iv.lo - step);
                    CHECK(got.hi <= hi_iv.hi + step);
                }
            }
        };
        check_side(exits.top, lower.top, upper.top, n - 1, xstep);
        check_side(exits.right, lower.right, upper.right, m - 1, ystep);
    }
    CHECK(nonempty_edges > 50);
}
