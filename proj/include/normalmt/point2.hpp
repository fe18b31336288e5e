#pragma once

#include <cmath>

namespace nmt {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
    friend Point2 operator*(double s, Point2 a) { return a * s; }
    friend Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
    Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

// Quarter turn counterclockwise; the frame normal convention.
inline Point2 perp(Point2 v) { return {-v.y, v.x}; }
// Quarter turn clockwise; outward when the data runs counterclockwise.
inline Point2 rotate_cw(Point2 v) { return {v.y, -v.x}; }

inline Point2 normalized(Point2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

}  // namespace nmt
