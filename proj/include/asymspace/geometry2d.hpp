#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asymspace/bip.hpp"

namespace asymspace {

/// Convex polygon with exact rational vertices in counterclockwise order.
struct Polygon2D {
    std::vector<Vec> vertices;
    bool clipped = false;  // region was unbounded and got cut by the viewport box
    std::string label;
};

namespace detail {

inline void sort_ccw(std::vector<Vec>& pts) {
    if (pts.size() < 3) return;
    Vec c(2);
    for (const auto& p : pts) c += p;
    c *= Rat(1) / Rat(static_cast<long long>(pts.size()));
    auto half = [&](const Vec& p) {
        Rat dx = p[0] - c[0], dy = p[1] - c[1];
        return (dy > Rat(0) || (dy == Rat(0) && dx > Rat(0))) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Vec& a, const Vec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross.is_positive();
    });
}

inline std::vector<Vec> enumerate_vertices(const std::vector<std::pair<Vec, Rat>>& rows) {
    std::vector<Vec> vertices;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const Vec& a1 = rows[i].first;
            const Vec& a2 = rows[j].first;
            Rat det = a1[0] * a2[1] - a1[1] * a2[0];
            if (det.is_zero()) continue;
            Vec v{(rows[i].second * a2[1] - rows[j].second * a1[1]) / det,
                  (a1[0] * rows[j].second - a2[0] * rows[i].second) / det};
            bool feasible = true;
            for (const auto& [row, bound] : rows)
                if (dot(row, v) > bound) {
                    feasible = false;
                    break;
                }
            if (feasible && std::find(vertices.begin(), vertices.end(), v) == vertices.end())
                vertices.push_back(std::move(v));
        }
    }
    sort_ccw(vertices);
    return vertices;
}

inline bool region_bounded(const std::vector<std::pair<Vec, Rat>>& rows) {
    for (std::size_t axis = 0; axis < 2; ++axis) {
        for (int dir : {1, -1}) {
            Vec obj(2);
            obj[axis] = dir;
            auto lp = LinearProgram::maximize(std::move(obj));
            for (const auto& [row, bound] : rows) {
                (void)bound;
                lp.add_le(row, Rat(0));
            }
            auto out = solve(lp);
            if (out.status != LPOutcome::Status::optimal || !out.value->is_zero()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Vertex list of {x in R^2 : row·x <= bound}. Empty regions give an empty
/// polygon; unbounded regions are clipped to the box |x_i| <= clip_radius
/// and flagged.
inline Polygon2D region_polygon(std::vector<std::pair<Vec, Rat>> rows, const Rat& clip_radius) {
    Polygon2D poly;
    {
        auto lp = LinearProgram::feasibility_of(2);
        for (const auto& [row, bound] : rows) lp.add_le(row, bound);
        if (solve(lp).status != LPOutcome::Status::optimal) return poly;
    }
    if (!detail::region_bounded(rows)) {
        poly.clipped = true;
        for (std::size_t axis = 0; axis < 2; ++axis) {
            for (int dir : {1, -1}) {
                Vec row(2);
                row[axis] = dir;
                rows.emplace_back(std::move(row), clip_radius);
            }
        }
    }
    poly.vertices = detail::enumerate_vertices(rows);
    return poly;
}

/// The unit-ball polygon {p <= 1} of a two-dimensional norm.
inline Polygon2D unit_ball_polygon(const PolyAsymNorm& p, const Rat& clip_radius = Rat(4)) {
    if (p.dim() != 2) throw UnsupportedDimensionError("unit_ball_polygon: dimension must be 2");
    auto poly = region_polygon(p.unit_ball_constraints(), clip_radius);
    poly.label = p.name().empty() ? "unit-ball" : p.name();
    return poly;
}

/// Forward and backward ball polygons of one family entry.
inline std::pair<Polygon2D, Polygon2D> ball_polygons(const PolyAsymNorm& q, const MixedBallFamily::Entry& e,
                                                     const Rat& clip_radius) {
    if (q.dim() != 2) throw UnsupportedDimensionError("ball_polygons: dimension must be 2");
    std::vector<std::pair<Vec, Rat>> fwd, bwd;
    for (const auto& a : q.generators()) {
        fwd.emplace_back(a, e.forward_radius + dot(a, e.center));
        bwd.emplace_back(-a, e.backward_radius - dot(a, e.center));
    }
    auto f = region_polygon(std::move(fwd), clip_radius);
    auto b = region_polygon(std::move(bwd), clip_radius);
    return {std::move(f), std::move(b)};
}

inline void write_polygon_csv(const Polygon2D& poly, const std::string& path, int digits) {
    std::ofstream out(path);
    if (!out) throw InputError("write_polygon_csv: cannot open " + path);
    out << "x,y\n";
    for (const auto& v : poly.vertices) out << v[0].decimal(digits) << "," << v[1].decimal(digits) << "\n";
}

/// Static SVG overlay, one polygon element per ball. The optional note is
/// rendered as a caption (used for empty-intersection annotations).
inline void write_svg(const std::vector<Polygon2D>& polys, const std::string& path, int digits,
                      const std::string& note = "") {
    std::ofstream out(path);
    if (!out) throw InputError("write_svg: cannot open " + path);
    double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
    bool first = true;
    for (const auto& poly : polys) {
        for (const auto& v : poly.vertices) {
            double x = v[0].to_double(), y = v[1].to_double();
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            }
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }
    double pad = 0.1 * std::max({max_x - min_x, max_y - min_y, 1.0});
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;

    static const char* palette[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"" << min_x << " "
        << -max_y << " " << (max_x - min_x) << " " << (max_y - min_y) << "\">\n";
    svg << "  <g transform=\"scale(1,-1)\" stroke-width=\"" << 0.01 * (max_x - min_x) << "\">\n";
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].vertices.empty()) continue;
        const char* color = palette[i % 6];
        svg << "    <polygon fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\" points=\"";
        for (std::size_t k = 0; k < polys[i].vertices.size(); ++k) {
            if (k) svg << " ";
            svg << polys[i].vertices[k][0].decimal(digits) << "," << polys[i].vertices[k][1].decimal(digits);
        }
        svg << "\"><title>" << polys[i].label << (polys[i].clipped ? " (clipped)" : "") << "</title></polygon>\n";
    }
    svg << "  </g>\n";
    if (!note.empty())
        svg << "  <text x=\"" << min_x + pad / 2 << "\" y=\"" << -max_y + pad << "\" font-size=\""
            << 0.06 * (max_x - min_x) << "\">" << note << "</text>\n";
    svg << "</svg>\n";
    out << svg.str();
}

}  // namespace asymspace
