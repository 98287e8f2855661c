#pragma once

// Basins of attraction of the farthest vertex game: per-point
// classification, parallel grid rendering and dihedral symmetry checks.

#include <cstdint>
#include <string>
#include <vector>

#include "rotgame/analysis.hpp"
#include "rotgame/geometry.hpp"

namespace rotgame {

using Label = std::int32_t;
inline constexpr Label kUnresolved = -1;
/// Pixel outside the optional disc mask; never classified.
inline constexpr Label kMasked = -2;

/// Axis-aligned window onto the plane. Pixel (col, row) maps to the center of
/// its cell; row 0 is the top edge (y_max).
struct Viewport {
    double x_min{-1.0};
    double x_max{1.0};
    double y_min{-1.0};
    double y_max{1.0};
    int width{1};
    int height{1};

    static Viewport square(const Point2& center, double side, int width, int height);

    void validate() const;
    Point2 pixel_center(int col, int row) const;
    /// Cell containing p; false when p is outside the closed window.
    bool to_pixel(const Point2& p, int& col, int& row) const;
    Point2 center() const { return {(x_min + x_max) / 2.0, (y_min + y_max) / 2.0}; }
};

struct Classification {
    Label label{kUnresolved};
    std::int64_t steps{0};
};

/// Precomputed analytic FVG attractors for one board and ratio. Odd n has
/// label 0 (CCW game, CW-tilted star) and label 1 (CW game); even n has one
/// label per antipodal pair.
class BasinClassifier {
public:
    BasinClassifier(const RegularPolygon& board, double r, double tol, std::int64_t max_iter);

    Classification classify(const Point2& p) const;

    const RegularPolygon& board() const { return board_; }
    double r() const { return r_; }
    double tol() const { return tol_; }
    std::int64_t max_iter() const { return max_iter_; }
    int label_count() const { return label_count_; }
    const std::vector<Point2>& attractor_points() const { return points_; }
    const std::vector<Label>& attractor_labels() const { return labels_; }

    /// Label of the attractor point nearest to q.
    Label nearest_attractor_label(const Point2& q) const;

private:
    RegularPolygon board_;
    double r_;
    double tol_;
    std::int64_t max_iter_;
    int label_count_{0};
    std::vector<Point2> points_;
    std::vector<Label> labels_;
};

/// tol == 0 selects the default 1e-9 * c.
Classification classify(const Point2& p, const RegularPolygon& board, double r, double tol = 0.0,
                        std::int64_t max_iter = 100000);

/// Triangle-only cross-check: label from the direction of the trailing
/// vertex-choice cycle (ascending -> 0, descending -> 1), kUnresolved if none.
Label classify_by_cycle_direction(const Point2& p, const RegularPolygon& board, double r, std::size_t steps = 200);

struct BasinRequest {
    RegularPolygon board{RegularPolygon::unit_triangle()};
    double r{0.5};
    Viewport viewport{};
    double tol{0.0};               // 0 means 1e-9 * c
    std::int64_t max_iter{100000};
    bool circle_mask{false};       // only pixels inside the inscribed disc are classified
    unsigned threads{0};           // 0 means hardware concurrency
};

struct BasinRaster {
    BasinRequest request;
    std::vector<Label> labels;               // row-major, width * height
    std::vector<std::int64_t> iterations;    // steps to convergence per pixel
    int label_count{0};

    int width() const { return request.viewport.width; }
    int height() const { return request.viewport.height; }
    Label at(int col, int row) const { return labels[static_cast<std::size_t>(row) * width() + col]; }
    std::size_t count(Label label) const;
    /// Distinct non-masked, non-unresolved labels present.
    std::vector<Label> present_labels() const;
};

/// Classifies every pixel center. Rows are shared among worker threads; the
/// result does not depend on the thread count.
BasinRaster render_basins(const BasinRequest& request);

struct SymmetryElement {
    std::string name;
    bool reflection{false};
    int index{0};       // k for rotation by 2 pi k / n; j for the axis through angle pi/2 + phase + j pi / n
    double angle{0.0};  // rotation angle, or axis angle for reflections
    std::vector<Label> expected;  // label permutation implied by the attractors
    std::vector<Label> observed;  // majority mapping seen in samples (kUnresolved if unseen)
    double violation_fraction{0.0};
    std::size_t samples{0};

    bool is_identity() const;
    bool consistent() const { return expected == observed; }
};

struct SymmetryReport {
    int n{0};
    int label_count{0};
    std::vector<SymmetryElement> elements;

    const SymmetryElement& rotation(int k) const;
    const SymmetryElement& reflection(int j) const;
};

/// Re-classifies `samples` random points of the viewport's inscribed disc
/// under every non-trivial element of the board's dihedral group.
/// Requires a square viewport centered on the board center.
SymmetryReport symmetry_report(const BasinRaster& raster, std::size_t samples = 10000, std::uint64_t seed = 1);

/// Cycle structure of a permutation, e.g. {3} for a 3-cycle, {1, 1} for identity on two labels.
std::vector<int> cycle_lengths(const std::vector<Label>& permutation);

}  // namespace rotgame
