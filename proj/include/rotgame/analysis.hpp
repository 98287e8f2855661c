#pragma once

// Closed forms for the rotation and farthest-vertex games: kissing ratio,
// tilt angle alpha, scale lambda, attractor constructions, fixed points,
// triangle periodic points and series diagnostics.
//
// Throughout, rho = r - 1 and the contraction ratio r must lie in (0, 1).

#include <string_view>
#include <vector>

#include "rotgame/games.hpp"
#include "rotgame/geometry.hpp"

namespace rotgame {

enum class AttractorGame { Urg, Fvg };

/// Closed-form attractor. `labels[k]` names the attractor that `points[k]`
/// belongs to: always 0 for the URG and odd-n FVG; pair index k mod n/2 for
/// even-n FVG. `points[k]` is the image of board vertex k under the
/// similarity (angle, lambda) about the board center.
struct AttractorSpec {
    AttractorGame game{AttractorGame::Urg};
    Rotation direction{Rotation::Ccw};
    std::vector<Point2> points;
    std::vector<int> labels;
    /// Signed rotation applied to the board: -alpha for a CCW game, +alpha for CW.
    double angle{0.0};
    /// Unsigned tilt.
    double alpha{0.0};
    double lambda{1.0};
    /// Orbit order; even-n FVG lists each two-point orbit in turn.
    std::vector<int> visit_order;
    /// Index of the point that follows points[k] along the orbit.
    std::vector<int> successor;
    /// Board vertex that points[k] moves toward on its next step.
    std::vector<int> target_vertex;

    int attractor_count() const;
};

// Kissing ratio k_n, by case on n mod 4.
double kissing_ratio(int n);

struct KissingCurves {
    double k;   // continuous k_x with floor(x/4)
    double g1;  // 1/(1 + tan(pi/x))
    double g2;  // 1/(1 + 2 sin(pi/2x))
    double g3;  // 1/(1 + sin(pi/x))
};

KissingCurves kissing_curves(double x);

double alpha_urg(int n, double r);
double lambda_urg(int n, double r);

/// Tilt of the FVG attractor: the odd-n formula for odd n, exactly 0 for even n.
double alpha_fvg(int n, double r);
/// The odd-n tilt expression evaluated at any n >= 3, including even n where
/// the game itself has no tilt.
double alpha_fvg_formula(int n, double r);
/// Odd n: (1+rho)/sqrt(1+rho^2-2 rho cos(pi/n)). Even n: (1+rho)/(1-rho).
double lambda_fvg(int n, double r);

AttractorSpec attractor_urg(const RegularPolygon& board, double r, Rotation direction);
/// direction must be Ccw or Cw for odd n and None for even n.
AttractorSpec attractor_fvg(const RegularPolygon& board, double r, Rotation direction);

/// The CCW URG attractor point that moves toward vertex 0, from the
/// closed-form coordinates of the fixed-point relation.
Point2 fixed_point_urg(const RegularPolygon& board, double r);
/// The CCW odd-n FVG attractor point that moves toward vertex 0.
Point2 fixed_point_fvg_odd(const RegularPolygon& board, double r);

/// Affine map p -> m p + t of moving toward one triangle vertex at r = 1/2.
struct TriangleGameConstants {
    double m;
    Point2 t_a, t_b, t_c;
    Point2 a1, b1, c1;
    Point2 a2, b2, c2;
};

/// Exact constants for the unit-side triangle centered at the origin.
TriangleGameConstants triangle_constants();

/// The unique p0 that returns to itself after `period` steps of the CCW
/// rotation schedule starting at `first_vertex`:
///   p0 = sum_k (1-r)^(p-1-k) r V_(first+k) / (1 - (1-r)^p).
Point2 periodic_point(const RegularPolygon& board, int period, int first_vertex = 0, double r = 0.5);

/// Marker for "use r = k_n for each n" in the series diagnostics.
inline constexpr double kKissing = -1.0;

struct SeriesReport {
    bool kissing{false};
    double r{0.0};
    int n_max{0};
    std::vector<double> partial_sums;  // index n - 3: sum of alpha_m for m = 3..n
    std::vector<double> scaled_linear;     // n * alpha_n
    std::vector<double> scaled_quadratic;  // n^2 * alpha_n
    /// 2 pi (1/r - 1) for a fixed ratio; 0 for the kissing series.
    double linear_limit{0.0};

    double alpha_at(int n) const { return scaled_linear.at(static_cast<std::size_t>(n - 3)) / n; }
};

/// URG tilt angle series for n = 3..N at fixed r in (0, 1), or at the
/// kissing ratio when r == kKissing.
SeriesReport alpha_series_diagnostics(double r, int n_max);

}  // namespace rotgame
