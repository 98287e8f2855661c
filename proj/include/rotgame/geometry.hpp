#pragma once

// Planar primitives: points, regular polygons with canonical vertex
// indexing, rotations and similarity transforms.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace rotgame {

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
    constexpr bool operator==(const Point2&) const = default;
};

constexpr Point2 operator*(double s, const Point2& p) { return p * s; }

constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
constexpr double norm_sq(const Point2& p) { return dot(p, p); }
inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }
inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Throws std::invalid_argument naming `what` when p has a NaN or infinite coordinate.
void require_finite(const Point2& p, const char* what);

/// Rotates p by `angle` radians (counterclockwise positive) about `center`.
Point2 rotate(const Point2& p, double angle, const Point2& center = {});

/// Mirror image of p across the line through `center` at direction `axis_angle`.
Point2 reflect(const Point2& p, double axis_angle, const Point2& center = {});

/// A regular n-gon. Vertex k sits at angle pi/2 + phase + 2*pi*k/n about the
/// center, so vertex 0 is on top for phase 0 and indices run counterclockwise.
class RegularPolygon {
public:
    RegularPolygon(int n, double circumradius, Point2 center = {}, double phase = 0.0);

    /// The equilateral triangle with unit side, centered at the origin.
    static RegularPolygon unit_triangle();
    /// An n-gon with unit side length, centered at the origin.
    static RegularPolygon unit_side(int n);

    int n() const { return n_; }
    double circumradius() const { return c_; }
    const Point2& center() const { return center_; }
    double phase() const { return phase_; }
    double side_length() const;

    /// Vertex angle measured from the center, for index k (taken mod n).
    double vertex_angle(long k) const;
    /// Vertex k, index taken mod n (negative allowed).
    const Point2& vertex(long k) const { return vertices_[wrap(k)]; }
    std::span<const Point2> vertices() const { return vertices_; }
    std::size_t wrap(long k) const;

    // Ties within 1e-12 * c^2 on squared distance resolve to the lowest index.
    int nearest_vertex(const Point2& p) const;
    int farthest_vertex(const Point2& p) const;

    /// Closed-region test; boundary points within `tol` of an edge count as inside.
    bool contains(const Point2& p, double tol = 0.0) const;

private:
    int n_;
    double c_;
    Point2 center_;
    double phase_;
    std::vector<Point2> vertices_;
};

std::vector<Point2> ngon_vertices(const RegularPolygon& poly);

struct Similarity {
    double angle{0.0};
    double scale{1.0};
    Point2 center{};
};

/// center + scale * R(angle) * (p - center)
Point2 apply_similarity(const Similarity& s, const Point2& p);

/// Angle at `b` in the triangle a-b-c, in [0, pi].
double angle_at(const Point2& a, const Point2& b, const Point2& c);

/// Distance from p to the infinite line through a and b.
double distance_to_line(const Point2& p, const Point2& a, const Point2& b);

}  // namespace rotgame
