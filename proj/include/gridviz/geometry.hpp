#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace gridviz {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

// Closed polygon stored as an open vertex list (no repeated first vertex).
using Polygon = std::vector<Vec2>;

struct BBox {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void expand(Vec2 p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    bool contains(Vec2 p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    bool empty() const { return min_x > max_x || min_y > max_y; }
};

BBox polygon_bbox(const Polygon& poly);

// Signed area, positive for counter-clockwise vertex order.
double polygon_signed_area(const Polygon& poly);
inline double polygon_area(const Polygon& poly) { return std::abs(polygon_signed_area(poly)); }

// Even-odd crossing test. Points exactly on an edge may land on either side.
bool point_in_polygon(const Polygon& poly, Vec2 p);

// Minimum distance from p to any edge of the polygon outline.
double point_polygon_edge_distance(const Polygon& poly, Vec2 p);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

// Keeps the part of poly with dot(p, normal) <= offset (Sutherland-Hodgman).
// Preserves vertex orientation; may return an empty polygon.
Polygon clip_halfplane(const Polygon& poly, Vec2 normal, double offset);

// Axis-aligned rectangle as a counter-clockwise 4-gon.
Polygon rect_polygon(double min_x, double min_y, double max_x, double max_y);

}  // namespace gridviz
