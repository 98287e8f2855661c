#include "rotgame/analysis.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace rotgame {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ratio(double r)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("contraction ratio r must lie in (0, 1), got " + std::to_string(r));
    }
}

void require_n(int n)
{
    if (n < 3) {
        throw std::invalid_argument("polygon needs n >= 3, got " + std::to_string(n));
    }
}

// Tilt and scale share one shape: with t = theta and sign s,
//   cos(alpha) = (1 + s rho cos t) / D,  sin(alpha) = -rho sin t / D,
//   D = sqrt(1 + rho^2 + 2 s rho cos t),  lambda = (1 + rho) / D.
// atan2 keeps full precision when alpha is tiny.
double tilt(double rho, double t, double s)
{
    return std::atan2(-rho * std::sin(t), 1.0 + s * rho * std::cos(t));
}

double tilt_denominator(double rho, double t, double s)
{
    return std::hypot(1.0 + s * rho * std::cos(t), rho * std::sin(t));
}

int mod(long k, int n)
{
    const long m = k % n;
    return static_cast<int>(m < 0 ? m + n : m);
}

AttractorSpec similarity_attractor(const RegularPolygon& board, AttractorGame game, Rotation direction,
                                   double alpha, double lambda, int stride)
{
    const int n = board.n();
    AttractorSpec spec;
    spec.game = game;
    spec.direction = direction;
    spec.alpha = alpha;
    spec.lambda = lambda;
    spec.angle = direction == Rotation::Ccw ? -alpha : alpha;

    const Similarity sim{spec.angle, lambda, board.center()};
    for (int k = 0; k < n; ++k) {
        spec.points.push_back(apply_similarity(sim, board.vertex(k)));
        spec.labels.push_back(0);
        const int next = mod(direction == Rotation::Ccw ? k + stride : k - stride, n);
        spec.successor.push_back(next);
        spec.target_vertex.push_back(next);
    }
    int k = 0;
    for (int i = 0; i < n; ++i) {
        spec.visit_order.push_back(k);
        k = spec.successor[static_cast<std::size_t>(k)];
    }
    return spec;
}

}  // namespace

int AttractorSpec::attractor_count() const
{
    return static_cast<int>(std::set<int>(labels.begin(), labels.end()).size());
}

double kissing_ratio(int n)
{
    require_n(n);
    switch (n % 4) {
    case 0: return 1.0 / (1.0 + std::tan(kPi / n));
    case 2: return 1.0 / (1.0 + std::sin(kPi / n));
    default: return 1.0 / (1.0 + 2.0 * std::sin(kPi / (2.0 * n)));
    }
}

KissingCurves kissing_curves(double x)
{
    if (!(x >= 3.0) || !std::isfinite(x)) {
        throw std::invalid_argument("kissing curves need x >= 3, got " + std::to_string(x));
    }
    const double s = std::sin((kPi + 2.0 * kPi * std::floor(x / 4.0)) / x);
    return {
        .k = s / (s + std::sin(kPi / x)),
        .g1 = 1.0 / (1.0 + std::tan(kPi / x)),
        .g2 = 1.0 / (1.0 + 2.0 * std::sin(kPi / (2.0 * x))),
        .g3 = 1.0 / (1.0 + std::sin(kPi / x)),
    };
}

double alpha_urg(int n, double r)
{
    require_n(n);
    require_ratio(r);
    return tilt(r - 1.0, 2.0 * kPi / n, +1.0);
}

double lambda_urg(int n, double r)
{
    require_n(n);
    require_ratio(r);
    const double rho = r - 1.0;
    return (1.0 + rho) / tilt_denominator(rho, 2.0 * kPi / n, +1.0);
}

double alpha_fvg_formula(int n, double r)
{
    require_n(n);
    require_ratio(r);
    return tilt(r - 1.0, kPi / n, -1.0);
}

double alpha_fvg(int n, double r)
{
    if (n % 2 == 0) {
        require_n(n);
        require_ratio(r);
        return 0.0;
    }
    return alpha_fvg_formula(n, r);
}

double lambda_fvg(int n, double r)
{
    require_n(n);
    require_ratio(r);
    const double rho = r - 1.0;
    if (n % 2 == 0) {
        return (1.0 + rho) / (1.0 - rho);
    }
    return (1.0 + rho) / tilt_denominator(rho, kPi / n, -1.0);
}

AttractorSpec attractor_urg(const RegularPolygon& board, double r, Rotation direction)
{
    require_ratio(r);
    if (direction == Rotation::None) {
        throw std::invalid_argument("the rotation game needs a direction (ccw or cw)");
    }
    const int n = board.n();
    return similarity_attractor(board, AttractorGame::Urg, direction, alpha_urg(n, r), lambda_urg(n, r), 1);
}

AttractorSpec attractor_fvg(const RegularPolygon& board, double r, Rotation direction)
{
    require_ratio(r);
    const int n = board.n();
    if (n % 2 == 1) {
        if (direction == Rotation::None) {
            throw std::invalid_argument("odd-n farthest vertex attractors need a direction (ccw or cw)");
        }
        return similarity_attractor(board, AttractorGame::Fvg, direction, alpha_fvg(n, r), lambda_fvg(n, r),
                                    (n - 1) / 2);
    }
    if (direction != Rotation::None) {
        throw std::invalid_argument("even-n farthest vertex attractors have no direction");
    }

    // Each two-point orbit sits on the diagonal through vertices i and
    // i + n/2; the point at lambda * v(i + n/2) moves toward v(i).
    const int half = n / 2;
    AttractorSpec spec;
    spec.game = AttractorGame::Fvg;
    spec.direction = Rotation::None;
    spec.alpha = 0.0;
    spec.angle = 0.0;
    spec.lambda = lambda_fvg(n, r);
    const Similarity sim{0.0, spec.lambda, board.center()};
    for (int k = 0; k < n; ++k) {
        spec.points.push_back(apply_similarity(sim, board.vertex(k)));
        spec.labels.push_back(k % half);
        spec.successor.push_back(mod(k + half, n));
        spec.target_vertex.push_back(mod(k + half, n));
    }
    for (int i = 0; i < half; ++i) {
        spec.visit_order.push_back(i);
        spec.visit_order.push_back(i + half);
    }
    return spec;
}

Point2 fixed_point_urg(const RegularPolygon& board, double r)
{
    require_ratio(r);
    const double rho = r - 1.0;
    const double t = 2.0 * kPi / board.n();
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Point2 v = board.vertex(0) - board.center();
    const double d = 1.0 + rho * rho + 2.0 * rho * c;
    const Point2 p{(rho * v.x + v.x * c + v.y * s) / d, (rho * v.y - v.x * s + v.y * c) / d};
    return board.center() + (rho + 1.0) * p;
}

Point2 fixed_point_fvg_odd(const RegularPolygon& board, double r)
{
    require_ratio(r);
    if (board.n() % 2 == 0) {
        throw std::invalid_argument("fixed_point_fvg_odd needs an odd-n board");
    }
    const double rho = r - 1.0;
    const double t = kPi / board.n();
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Point2 v = board.vertex(0) - board.center();
    const double d = 1.0 + rho * rho - 2.0 * rho * c;
    const Point2 p{(rho * v.x - v.x * c + v.y * s) / d, (rho * v.y - v.x * s - v.y * c) / d};
    return board.center() + (rho + 1.0) * p;
}

TriangleGameConstants triangle_constants()
{
    const double s3 = std::numbers::sqrt3;
    TriangleGameConstants k{};
    k.m = 0.5;
    k.t_a = {0.0, 1.0 / (2.0 * s3)};
    k.t_b = {-0.25, -1.0 / (4.0 * s3)};
    k.t_c = {0.25, -1.0 / (4.0 * s3)};
    k.a1 = {1.0 / 14.0, 5.0 * s3 / 42.0};
    k.b1 = {-3.0 / 14.0, -s3 / 42.0};
    k.c1 = {2.0 / 14.0, -4.0 * s3 / 42.0};
    k.a2 = {-k.a1.x, k.a1.y};
    k.b2 = {-k.b1.x, k.b1.y};
    k.c2 = {-k.c1.x, k.c1.y};
    return k;
}

Point2 periodic_point(const RegularPolygon& board, int period, int first_vertex, double r)
{
    if (period < 1) {
        throw std::invalid_argument("period must be >= 1, got " + std::to_string(period));
    }
    require_ratio(r);
    // Work relative to the center so the geometric sum stays well scaled.
    const double q = 1.0 - r;
    Point2 acc{};
    for (int k = 0; k < period; ++k) {
        acc = q * acc + r * (board.vertex(first_vertex + k) - board.center());
    }
    return board.center() + acc / (1.0 - std::pow(q, period));
}

SeriesReport alpha_series_diagnostics(double r, int n_max)
{
    const bool kissing = r == kKissing;
    if (!kissing) {
        require_ratio(r);
    }
    if (n_max < 10) {
        throw std::invalid_argument("series diagnostics need N >= 10, got " + std::to_string(n_max));
    }
    SeriesReport rep;
    rep.kissing = kissing;
    rep.r = r;
    rep.n_max = n_max;
    rep.linear_limit = kissing ? 0.0 : 2.0 * kPi * (1.0 / r - 1.0);
    const auto count = static_cast<std::size_t>(n_max - 2);
    rep.partial_sums.reserve(count);
    rep.scaled_linear.reserve(count);
    rep.scaled_quadratic.reserve(count);
    double sum = 0.0;
    for (int n = 3; n <= n_max; ++n) {
        const double a = alpha_urg(n, kissing ? kissing_ratio(n) : r);
        sum += a;
        rep.partial_sums.push_back(sum);
        rep.scaled_linear.push_back(n * a);
        rep.scaled_quadratic.push_back(static_cast<double>(n) * n * a);
    }
    return rep;
}

}  // namespace rotgame
