#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet::decomposition {

// Piece/long-segment threshold: min(sqrt(eps)/2, 1/4) * delta.
inline double lambda(double epsilon, double delta) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must be in (0,1]");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
    return std::min(0.5 * std::sqrt(epsilon), 0.25) * delta;
}

enum class PartKind { LongSegment, Piece };

// One part of the partition, as a vertex range [start, end] into the
// augmented curve. LongSegment: end == start + 1 and segment length >= Lambda.
// Piece: chord from the initial vertex stays < Lambda and ends at exactly
// Lambda (the final part of the curve may end short).
struct Part {
    PartKind kind;
    int start = 0;
    int end = 0;
};

struct Decomposition {
    Curve augmented;            // original curve plus inserted cut vertices
    std::vector<Part> parts;    // contiguous: parts[k].end == parts[k+1].start
    std::vector<int> inserted;  // indices of new vertices in `augmented`
    double lambda_value = 0.0;

    int part_of_segment(int seg) const { return seg_part_[static_cast<std::size_t>(seg - 1)]; }
    bool segment_in_piece(int seg) const {
        return parts[static_cast<std::size_t>(part_of_segment(seg))].kind == PartKind::Piece;
    }

    void build_segment_map() {
        seg_part_.assign(static_cast<std::size_t>(augmented.segments()), 0);
        for (std::size_t s = 0; s < parts.size(); ++s)
            for (int i = parts[s].start; i < parts[s].end; ++i)
                seg_part_[static_cast<std::size_t>(i - 1)] = static_cast<int>(s);
    }

private:
    std::vector<int> seg_part_;
};

/*
 * Greedy left-to-right scan: if the segment following the current vertex
 * (the remainder of the original segment, when the current vertex was
 * inserted mid-segment) has length >= Lambda it becomes a long segment;
 * otherwise walk forward to the first point at chord distance exactly
 * Lambda from the current vertex, inserting a vertex there when it is not
 * already one. The tail may end as a short piece. Cut points within 1e-12
 * (in the segment parameter) of the segment end are snapped to the vertex
 * so numerical noise cannot create zero-length segments.
 */
inline Decomposition decompose(const Curve& curve, double lambda_value) {
    if (!(lambda_value > 0.0)) throw std::invalid_argument("Lambda must be > 0");
    const std::size_t d = curve.dim();
    const int n = curve.size();

    std::vector<double> out_coords;
    out_coords.reserve(curve.flat().size());
    std::vector<int> inserted;
    std::vector<Part> parts;

    auto push_vertex = [&](std::span<const double> v) {
        out_coords.insert(out_coords.end(), v.begin(), v.end());
    };
    auto out_count = [&]() { return static_cast<int>(out_coords.size() / d); };

    push_vertex(curve.vertex(1));

    int seg = 1;          // original segment the current vertex lies on
    double seg_pos = 0.0; // its parameter within that segment
    std::vector<double> cur(d);

    while (seg <= n - 1) {
        for (std::size_t k = 0; k < d; ++k)
            cur[k] = (1.0 - seg_pos) * curve.vertex_coord(seg, k) + seg_pos * curve.vertex_coord(seg + 1, k);

        if (dist(std::span<const double>(cur), curve.vertex(seg + 1)) >= lambda_value) {
            const int start = out_count();
            push_vertex(curve.vertex(seg + 1));
            parts.push_back({PartKind::LongSegment, start, start + 1});
            ++seg;
            seg_pos = 0.0;
            continue;
        }

        // Piece walk. Invariant: every visited point is at chord < Lambda
        // from `cur`, so on each segment the exit root is unique.
        const int start = out_count();
        int s = seg;
        double pos = seg_pos;
        bool cut = false;
        while (s <= n - 1) {
            auto sb = curve.vertex(s + 1);
            if (dist(std::span<const double>(cur), sb) < lambda_value) {
                push_vertex(sb);
                ++s;
                pos = 0.0;
                continue;
            }
            auto sa = curve.vertex(s);
            double qa = 0.0, qb = 0.0, qc = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double u = sb[k] - sa[k];
                const double w = sa[k] - cur[k];
                qa += u * u;
                qb += u * w;
                qc += w * w;
            }
            qc -= lambda_value * lambda_value;
            double root = 1.0;
            if (qa > 0.0) {
                const double hb = qb / qa, hc = qc / qa;
                const double disc = std::max(hb * hb - hc, 0.0);
                root = -hb + std::sqrt(disc);
                if (root < pos) root = pos;
                if (root > 1.0) root = 1.0;
            }
            if (root >= 1.0 - 1e-12) {
                push_vertex(sb);
                ++s;
                pos = 0.0;
            } else {
                std::vector<double> cutpt(d);
                for (std::size_t k = 0; k < d; ++k) cutpt[k] = (1.0 - root) * sa[k] + root * sb[k];
                push_vertex(cutpt);
                inserted.push_back(out_count());
                pos = root;
            }
            cut = true;
            break;
        }
        parts.push_back({PartKind::Piece, start, out_count()});
        if (!cut) break;  // ran off the end: final short piece
        seg = s;
        seg_pos = pos;
    }

    Decomposition dec;
    dec.augmented = Curve(d, std::move(out_coords));
    dec.parts = std::move(parts);
    dec.inserted = std::move(inserted);
    dec.lambda_value = lambda_value;
    dec.build_segment_map();
    return dec;
}

} // namespace frechet::decomposition
