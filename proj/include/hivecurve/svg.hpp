#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "patchwork.hpp"
#include "tropical.hpp"

// SVG conventions: y grows downward; every figure uses viewBox "0 0 W H" with
// W = H = 600 and a 30-unit margin. The second line is a version comment.

namespace hivecurve::svg {

inline constexpr double kSize = 600, kMargin = 30;

struct Box {
    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;

    void add(double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    void pad(double f) {
        double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
        x0 -= f * w;
        x1 += f * w;
        y0 -= f * h;
        y1 += f * h;
    }
};

/// Maps plot coordinates (y up) into the fixed viewBox (y down), keeping aspect ratio.
class Canvas {
public:
    explicit Canvas(Box b) : box_(b) {
        double w = std::max(b.x1 - b.x0, 1e-9), h = std::max(b.y1 - b.y0, 1e-9);
        scale_ = (kSize - 2 * kMargin) / std::max(w, h);
    }

    double sx(double x) const { return kMargin + (x - box_.x0) * scale_; }
    double sy(double y) const { return kSize - kMargin - (y - box_.y0) * scale_; }

    void line(double xa, double ya, double xb, double yb, const char* stroke, double width = 1.5) {
        out_ << "<line x1=\"" << num(sx(xa)) << "\" y1=\"" << num(sy(ya)) << "\" x2=\"" << num(sx(xb)) << "\" y2=\""
             << num(sy(yb)) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
    }
    void dot(double x, double y, double r, const char* fill) {
        out_ << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"" << num(r) << "\" fill=\"" << fill
             << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }

    std::string finish(const std::string& title) const {
        std::ostringstream doc;
        doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n"
            << "<!-- hivecurve svg 1 -->\n"
            << "<title>" << title << "</title>\n"
            << "<rect x=\"0\" y=\"0\" width=\"" << num(kSize) << "\" height=\"" << num(kSize) << "\" fill=\"white\"/>\n"
            << out_.str() << "</svg>\n";
        return doc.str();
    }

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }

private:
    Box box_;
    double scale_;
    std::ostringstream out_;
};

/// Orthogonal projection of the chart point (X-Z, Y-Z) onto the plane x+y+z = 0.
inline std::array<double, 2> project(double p, double q) {
    return {(p - q) / std::sqrt(2.0), (p + q) / std::sqrt(6.0)};
}

inline std::array<double, 2> project(const PlanePoint& v) { return project(to_double(v[0]), to_double(v[1])); }

namespace detail {

inline void draw_curve(Canvas& c, const TropicalCurve& T, double ray_length, double scale = 1.0) {
    for (const auto& e : T.edges) {
        auto a = project(T.vertices[e.from].position), b = project(T.vertices[e.to].position);
        c.line(scale * a[0], scale * a[1], scale * b[0], scale * b[1], "black", 1.0 + 0.8 * (e.multiplicity - 1));
    }
    for (const auto& r : T.rays) {
        auto a = project(T.vertices[r.vertex].position);
        auto d = project(double(r.direction[0]), double(r.direction[1]));
        double len = std::hypot(d[0], d[1]);
        c.line(scale * a[0], scale * a[1], scale * a[0] + ray_length * d[0] / len, scale * a[1] + ray_length * d[1] / len,
               "black", 1.0 + 0.8 * (r.multiplicity - 1));
    }
}

inline Box curve_box(const TropicalCurve& T, double scale = 1.0) {
    Box b;
    for (const auto& v : T.vertices) {
        auto p = project(v.position);
        b.add(scale * p[0], scale * p[1]);
    }
    if (T.vertices.empty()) b.add(0, 0);
    return b;
}

} // namespace detail

inline std::string honeycomb(const TropicalCurve& T) {
    Box b = detail::curve_box(T);
    double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1.0});
    double ray = 0.35 * span;
    b.add(b.x0 - ray, b.y0 - ray);
    b.add(b.x1 + ray, b.y1 + ray);
    Canvas c(b);
    detail::draw_curve(c, T, ray);
    for (const auto& v : T.vertices) {
        auto p = project(v.position);
        c.dot(p[0], p[1], 2.0, "black");
    }
    return c.finish("tropical curve of degree " + std::to_string(T.n));
}

/// Amoeba points divided by log t over the tropical curve of the exponents.
inline std::string amoeba_overlay(const AmoebaCloud& cloud, double log_t, const TropicalCurve& T) {
    Box b = detail::curve_box(T);
    double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1.0});
    double ray = 0.35 * span;
    b.add(b.x0 - ray, b.y0 - ray);
    b.add(b.x1 + ray, b.y1 + ray);
    Canvas c(b);
    for (const auto& p : cloud.points) {
        auto q = project(p[0] / log_t, p[1] / log_t);
        if (q[0] < b.x0 || q[0] > b.x1 || q[1] < b.y0 || q[1] > b.y1) continue;
        c.dot(q[0], q[1], 0.8, "#3b7dd8");
    }
    detail::draw_curve(c, T, ray);
    return c.finish("amoeba overlay, degree " + std::to_string(T.n));
}

/// Viro's picture: the four charts placed as reflections of Delta_n in the
/// square [-n, n]^2, vertices colored by effective sign, curve segments in red.
inline std::string glued_model(const std::array<Chart, 4>& charts) {
    const int n = charts[0].n;
    Box b;
    b.add(-n, -n);
    b.add(n, n);
    b.pad(0.05);
    Canvas c(b);
    auto place = [](const Chart& ch, double i, double j) {
        const auto& q = ch.quadrant;
        return std::array<double, 2>{q[0] * q[2] * i, q[1] * q[2] * j};
    };
    for (const auto& ch : charts) {
        for (const auto& tri : ch.triangles)
            for (int e = 0; e < 3; ++e) {
                auto a = place(ch, tri[e].i, tri[e].j), d = place(ch, tri[(e + 1) % 3].i, tri[(e + 1) % 3].j);
                c.line(a[0], a[1], d[0], d[1], "#bbbbbb", 0.8);
            }
        for (const auto& s : ch.segments) {
            auto mid = [&](const Segment& g) {
                return place(ch, 0.5 * (g.from.i + g.to.i), 0.5 * (g.from.j + g.to.j));
            };
            auto a = mid(s.edges[0]), d = mid(s.edges[1]);
            c.line(a[0], a[1], d[0], d[1], "#d62728", 2.0);
        }
        for (const auto& t : ch.signs.indices()) {
            auto p = place(ch, t.i, t.j);
            c.dot(p[0], p[1], 3.0, ch.signs.at(t) > 0 ? "black" : "white");
        }
    }
    return c.finish("patchwork model of degree " + std::to_string(n));
}

} // namespace hivecurve::svg
