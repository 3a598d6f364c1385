#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Curve file format: plain text, one vertex per line, coordinates separated
 * by single spaces, '#'-prefixed comment lines ignored, dimension inferred
 * from the first vertex line and enforced thereafter.
 */
inline Curve read_curve(std::istream& in, const std::string& name = "<stream>") {
    std::vector<double> flat;
    std::size_t dim = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<double> coords;
        double v;
        while (ls >> v) coords.push_back(v);
        if (!ls.eof()) {
            std::string tail;
            ls.clear();
            ls >> tail;
            throw io_error(name + ":" + std::to_string(lineno) + ": bad coordinate '" + tail + "'");
        }
        if (coords.empty()) continue;
        if (dim == 0) {
            dim = coords.size();
        } else if (coords.size() != dim) {
            throw io_error(name + ":" + std::to_string(lineno) + ": expected " +
                           std::to_string(dim) + " coordinates, got " + std::to_string(coords.size()));
        }
        flat.insert(flat.end(), coords.begin(), coords.end());
    }
    if (flat.empty()) throw io_error(name + ": no vertices");
    return Curve(dim, std::move(flat));
}

inline Curve read_curve_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open '" + path + "'");
    return read_curve(f, path);
}

inline void write_curve(std::ostream& out, const Curve& curve) {
    out.precision(17);
    for (int i = 1; i <= curve.size(); ++i) {
        auto v = curve.vertex(i);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out << ' ';
            out << v[k];
        }
        out << '\n';
    }
}

inline void write_curve_file(const std::string& path, const Curve& curve) {
    std::ofstream f(path);
    if (!f) throw io_error("cannot open '" + path + "' for writing");
    write_curve(f, curve);
    if (!f) throw io_error("write failed for '" + path + "'");
}

} // namespace frechet
