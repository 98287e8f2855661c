#include "rotgame/geometry.hpp"

#include <stdexcept>
#include <string>

namespace rotgame {

void require_finite(const Point2& p, const char* what)
{
    if (!is_finite(p)) {
        throw std::invalid_argument(std::string(what) + " must have finite coordinates");
    }
}

Point2 rotate(const Point2& p, double angle, const Point2& center)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Point2 d = p - center;
    return {center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y};
}

Point2 reflect(const Point2& p, double axis_angle, const Point2& center)
{
    const double c = std::cos(2.0 * axis_angle);
    const double s = std::sin(2.0 * axis_angle);
    const Point2 d = p - center;
    return {center.x + c * d.x + s * d.y, center.y + s * d.x - c * d.y};
}

RegularPolygon::RegularPolygon(int n, double circumradius, Point2 center, double phase)
    : n_(n), c_(circumradius), center_(center), phase_(phase)
{
    if (n < 3) {
        throw std::invalid_argument("polygon needs n >= 3, got " + std::to_string(n));
    }
    if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
        throw std::invalid_argument("circumradius must be positive and finite");
    }
    require_finite(center, "polygon center");
    if (!std::isfinite(phase)) {
        throw std::invalid_argument("polygon phase must be finite");
    }
    vertices_.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double a = vertex_angle(k);
        vertices_.push_back({center.x + c_ * std::cos(a), center.y + c_ * std::sin(a)});
    }
}

RegularPolygon RegularPolygon::unit_triangle()
{
    return unit_side(3);
}

RegularPolygon RegularPolygon::unit_side(int n)
{
    if (n < 3) {
        throw std::invalid_argument("polygon needs n >= 3, got " + std::to_string(n));
    }
    if (n == 3) {
        // Exact sqrt(3)/3 rather than 1 / (2 sin(pi/3)).
        return RegularPolygon(3, std::numbers::sqrt3 / 3.0);
    }
    return RegularPolygon(n, 0.5 / std::sin(std::numbers::pi / n));
}

double RegularPolygon::side_length() const
{
    return 2.0 * c_ * std::sin(std::numbers::pi / n_);
}

double RegularPolygon::vertex_angle(long k) const
{
    const auto idx = static_cast<double>(wrap(k));
    return std::numbers::pi / 2.0 + phase_ + 2.0 * std::numbers::pi * idx / n_;
}

std::size_t RegularPolygon::wrap(long k) const
{
    const long m = k % n_;
    return static_cast<std::size_t>(m < 0 ? m + n_ : m);
}

int RegularPolygon::nearest_vertex(const Point2& p) const
{
    const double eps = 1e-12 * c_ * c_;
    int best = 0;
    double best_d = norm_sq(p - vertices_[0]);
    for (int k = 1; k < n_; ++k) {
        const double d = norm_sq(p - vertices_[static_cast<std::size_t>(k)]);
        if (d < best_d - eps) {
            best = k;
            best_d = d;
        }
    }
    return best;
}

int RegularPolygon::farthest_vertex(const Point2& p) const
{
    const double eps = 1e-12 * c_ * c_;
    int best = 0;
    double best_d = norm_sq(p - vertices_[0]);
    for (int k = 1; k < n_; ++k) {
        const double d = norm_sq(p - vertices_[static_cast<std::size_t>(k)]);
        if (d > best_d + eps) {
            best = k;
            best_d = d;
        }
    }
    return best;
}

bool RegularPolygon::contains(const Point2& p, double tol) const
{
    // Counterclockwise edges: inside means on the left of every edge.
    for (int k = 0; k < n_; ++k) {
        const Point2& a = vertex(k);
        const Point2& b = vertex(k + 1);
        const Point2 e = b - a;
        if (cross(e, p - a) / norm(e) < -tol) {
            return false;
        }
    }
    return true;
}

std::vector<Point2> ngon_vertices(const RegularPolygon& poly)
{
    const auto v = poly.vertices();
    return {v.begin(), v.end()};
}

Point2 apply_similarity(const Similarity& s, const Point2& p)
{
    const Point2 r = rotate(p, s.angle, s.center);
    return s.center + s.scale * (r - s.center);
}

double angle_at(const Point2& a, const Point2& b, const Point2& c)
{
    const Point2 u = a - b;
    const Point2 v = c - b;
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

double distance_to_line(const Point2& p, const Point2& a, const Point2& b)
{
    const Point2 e = b - a;
    return std::abs(cross(e, p - a)) / norm(e);
}

}  // namespace rotgame
