#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace frechet {

// A point in R^d, d >= 1.
using Point = std::vector<double>;

inline double dist_sqr(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double dx = a[k] - b[k];
        s += dx * dx;
    }
    return s;
}

inline double dist(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(dist_sqr(a, b));
}

/*
 * A polygonal curve: an ordered list of vertices in R^d, viewed as a
 * continuous map from [1, n] via linear interpolation between consecutive
 * vertices. Vertex indices are 1-based throughout the library to match the
 * free-space diagram coordinates [1,n] x [1,m]. Consecutive duplicate
 * vertices (zero-length segments) are allowed.
 *
 * Storage is a flat row-major coordinate array, so per-vertex access does
 * not allocate. Immutable after construction.
 */
class Curve {
public:
    Curve() = default;

    Curve(std::size_t dim, std::vector<double> flat_coords)
        : dim_(dim), coords_(std::move(flat_coords)) {
        if (dim_ == 0) throw std::invalid_argument("curve dimension must be >= 1");
        if (coords_.empty() || coords_.size() % dim_ != 0)
            throw std::invalid_argument("coordinate count must be a positive multiple of dim");
        for (double c : coords_)
            if (!std::isfinite(c)) throw std::invalid_argument("curve coordinates must be finite");
    }

    static Curve from_points(const std::vector<Point>& pts) {
        if (pts.empty()) throw std::invalid_argument("curve needs at least one vertex");
        const std::size_t d = pts.front().size();
        std::vector<double> flat;
        flat.reserve(pts.size() * d);
        for (const Point& p : pts) {
            if (p.size() != d) throw std::invalid_argument("mixed vertex dimensions");
            flat.insert(flat.end(), p.begin(), p.end());
        }
        return Curve(d, std::move(flat));
    }

    // Convenience for 2D literals in tests and generators.
    static Curve from_xy(std::initializer_list<std::pair<double, double>> pts) {
        std::vector<double> flat;
        flat.reserve(pts.size() * 2);
        for (const auto& [x, y] : pts) {
            flat.push_back(x);
            flat.push_back(y);
        }
        return Curve(2, std::move(flat));
    }

    static Curve from_values_1d(const std::vector<double>& vals) {
        return Curve(1, vals);
    }

    std::size_t dim() const { return dim_; }
    int size() const { return static_cast<int>(coords_.size() / dim_); }
    int segments() const { return size() - 1; }

    // 1-based vertex access.
    std::span<const double> vertex(int i) const {
        return {coords_.data() + static_cast<std::size_t>(i - 1) * dim_, dim_};
    }

    double vertex_coord(int i, std::size_t k) const {
        return coords_[static_cast<std::size_t>(i - 1) * dim_ + k];
    }

    const std::vector<double>& flat() const { return coords_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

// Position on the curve at parameter t in [1, n]; exact at integer t.
inline Point point_at(const Curve& curve, double t) {
    const int n = curve.size();
    if (!(t >= 1.0 && t <= static_cast<double>(n)))
        throw std::domain_error("curve parameter out of [1, n]");
    const int p = static_cast<int>(std::floor(t));
    if (p >= n) return Point(curve.vertex(n).begin(), curve.vertex(n).end());
    const double lambda = t - p;
    auto a = curve.vertex(p);
    auto b = curve.vertex(p + 1);
    Point out(curve.dim());
    for (std::size_t k = 0; k < curve.dim(); ++k) out[k] = (1.0 - lambda) * a[k] + lambda * b[k];
    return out;
}

inline double total_length(const Curve& curve) {
    double s = 0.0;
    for (int i = 1; i < curve.size(); ++i) s += dist(curve.vertex(i), curve.vertex(i + 1));
    return s;
}

inline double endpoint_gap(const Curve& pi, const Curve& sigma) {
    return std::max(dist(pi.vertex(1), sigma.vertex(1)),
                    dist(pi.vertex(pi.size()), sigma.vertex(sigma.size())));
}

inline void require_same_dim(const Curve& pi, const Curve& sigma) {
    if (pi.dim() != sigma.dim()) throw std::invalid_argument("curve dimensions differ");
}

} // namespace frechet
