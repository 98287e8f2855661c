#include "rotgame/basins.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "rotgame/games.hpp"

namespace rotgame {

Viewport Viewport::square(const Point2& center, double side, int width, int height)
{
    return {center.x - side / 2.0, center.x + side / 2.0, center.y - side / 2.0, center.y + side / 2.0, width,
            height};
}

void Viewport::validate() const
{
    if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_min) || !std::isfinite(y_max)) {
        throw std::invalid_argument("viewport bounds must be finite with min < max");
    }
    if (width < 1 || height < 1) {
        throw std::invalid_argument("viewport needs at least one pixel");
    }
}

Point2 Viewport::pixel_center(int col, int row) const
{
    return {x_min + (col + 0.5) * (x_max - x_min) / width, y_max - (row + 0.5) * (y_max - y_min) / height};
}

bool Viewport::to_pixel(const Point2& p, int& col, int& row) const
{
    if (!is_finite(p) || p.x < x_min || p.x > x_max || p.y < y_min || p.y > y_max) {
        return false;
    }
    col = std::min(width - 1, static_cast<int>(std::floor((p.x - x_min) / (x_max - x_min) * width)));
    row = std::min(height - 1, static_cast<int>(std::floor((y_max - p.y) / (y_max - y_min) * height)));
    return true;
}

BasinClassifier::BasinClassifier(const RegularPolygon& board, double r, double tol, std::int64_t max_iter)
    : board_(board), r_(r), tol_(tol > 0.0 ? tol : 1e-9 * board.circumradius()), max_iter_(max_iter)
{
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("contraction ratio r must lie in (0, 1), got " + std::to_string(r));
    }
    if (!std::isfinite(tol) || tol < 0.0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("max_iter must be >= 1");
    }
    if (board.n() % 2 == 1) {
        for (const Rotation dir : {Rotation::Ccw, Rotation::Cw}) {
            const AttractorSpec spec = attractor_fvg(board, r, dir);
            const Label label = dir == Rotation::Ccw ? 0 : 1;
            for (const Point2& p : spec.points) {
                points_.push_back(p);
                labels_.push_back(label);
            }
        }
        label_count_ = 2;
    } else {
        const AttractorSpec spec = attractor_fvg(board, r, Rotation::None);
        points_ = spec.points;
        labels_.assign(spec.labels.begin(), spec.labels.end());
        label_count_ = board.n() / 2;
    }
}

Label BasinClassifier::nearest_attractor_label(const Point2& q) const
{
    std::size_t best = 0;
    double best_d = norm_sq(q - points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const double d = norm_sq(q - points_[i]);
        if (d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return labels_[best];
}

Classification BasinClassifier::classify(const Point2& p) const
{
    require_finite(p, "classified point");
    const double tol_sq = tol_ * tol_;
    Point2 q = p;
    for (std::int64_t step = 0;; ++step) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (norm_sq(q - points_[i]) <= tol_sq) {
                return {labels_[i], step};
            }
        }
        if (step == max_iter_) {
            return {kUnresolved, step};
        }
        q = step_toward(q, board_.vertex(board_.farthest_vertex(q)), r_);
    }
}

Classification classify(const Point2& p, const RegularPolygon& board, double r, double tol, std::int64_t max_iter)
{
    return BasinClassifier(board, r, tol, max_iter).classify(p);
}

Label classify_by_cycle_direction(const Point2& p, const RegularPolygon& board, double r, std::size_t steps)
{
    if (board.n() != 3) {
        throw std::invalid_argument("cycle-direction classification is defined for the triangle only");
    }
    const GameConfig cfg{.kind = GameKind::Fvg, .r = r, .board = board, .seed = 0};
    const Orbit orbit = run_orbit(cfg, p, steps);
    switch (trailing_rotation(orbit.vertex_choices, 3, 12)) {
    case Rotation::Ccw: return 0;
    case Rotation::Cw: return 1;
    case Rotation::None: break;
    }
    return kUnresolved;
}

std::size_t BasinRaster::count(Label label) const
{
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

std::vector<Label> BasinRaster::present_labels() const
{
    std::set<Label> seen;
    for (const Label l : labels) {
        if (l >= 0) {
            seen.insert(l);
        }
    }
    return {seen.begin(), seen.end()};
}

BasinRaster render_basins(const BasinRequest& request)
{
    request.viewport.validate();
    const BasinClassifier classifier(request.board, request.r, request.tol, request.max_iter);
    const Viewport& vp = request.viewport;

    BasinRaster raster;
    raster.request = request;
    raster.request.tol = classifier.tol();
    raster.label_count = classifier.label_count();
    const auto total = static_cast<std::size_t>(vp.width) * static_cast<std::size_t>(vp.height);
    raster.labels.assign(total, kUnresolved);
    raster.iterations.assign(total, 0);

    const Point2 mid = vp.center();
    const double radius = std::min(vp.x_max - vp.x_min, vp.y_max - vp.y_min) / 2.0;

    std::atomic<int> next_row{0};
    auto worker = [&] {
        for (int row = next_row++; row < vp.height; row = next_row++) {
            for (int col = 0; col < vp.width; ++col) {
                const std::size_t idx = static_cast<std::size_t>(row) * vp.width + col;
                const Point2 p = vp.pixel_center(col, row);
                if (request.circle_mask && norm(p - mid) > radius) {
                    raster.labels[idx] = kMasked;
                    continue;
                }
                const Classification c = classifier.classify(p);
                raster.labels[idx] = c.label;
                raster.iterations[idx] = c.steps;
            }
        }
    };

    unsigned threads = request.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : request.threads;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(vp.height));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return raster;
}

bool SymmetryElement::is_identity() const
{
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (observed[i] != static_cast<Label>(i)) {
            return false;
        }
    }
    return true;
}

const SymmetryElement& SymmetryReport::rotation(int k) const
{
    for (const auto& e : elements) {
        if (!e.reflection && e.index == k) {
            return e;
        }
    }
    throw std::out_of_range("no rotation element with index " + std::to_string(k));
}

const SymmetryElement& SymmetryReport::reflection(int j) const
{
    for (const auto& e : elements) {
        if (e.reflection && e.index == j) {
            return e;
        }
    }
    throw std::out_of_range("no reflection element with index " + std::to_string(j));
}

namespace {

double unit_uniform(std::mt19937_64& engine)
{
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

SymmetryReport symmetry_report(const BasinRaster& raster, std::size_t samples, std::uint64_t seed)
{
    const BasinRequest& req = raster.request;
    const Viewport& vp = req.viewport;
    const RegularPolygon& board = req.board;
    const double w = vp.x_max - vp.x_min;
    const double h = vp.y_max - vp.y_min;
    if (std::abs(w - h) > 1e-9 * w) {
        throw std::invalid_argument("symmetry report needs a square viewport");
    }
    if (norm(vp.center() - board.center()) > 1e-9 * w) {
        throw std::invalid_argument("symmetry report needs a viewport centered on the board center");
    }
    if (samples == 0) {
        throw std::invalid_argument("symmetry report needs at least one sample");
    }

    const BasinClassifier classifier(board, req.r, req.tol, req.max_iter);
    const int n = board.n();
    const int labels = classifier.label_count();
    const Point2 o = board.center();
    const double radius = w / 2.0;

    std::mt19937_64 engine(seed);
    std::vector<Point2> pts;
    std::vector<Label> base;
    pts.reserve(samples);
    base.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double rad = radius * std::sqrt(unit_uniform(engine));
        const double ang = 2.0 * std::numbers::pi * unit_uniform(engine);
        const Point2 p = o + Point2{rad * std::cos(ang), rad * std::sin(ang)};
        pts.push_back(p);
        base.push_back(classifier.classify(p).label);
    }

    SymmetryReport report;
    report.n = n;
    report.label_count = labels;

    auto evaluate = [&](SymmetryElement e, auto transform) {
        // Expected permutation from where the transform sends each attractor.
        e.expected.assign(static_cast<std::size_t>(labels), kUnresolved);
        const auto& ap = classifier.attractor_points();
        const auto& al = classifier.attractor_labels();
        for (std::size_t i = 0; i < ap.size(); ++i) {
            e.expected[static_cast<std::size_t>(al[i])] = classifier.nearest_attractor_label(transform(ap[i]));
        }

        std::vector<std::map<Label, std::size_t>> votes(static_cast<std::size_t>(labels));
        std::size_t used = 0;
        std::size_t bad = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (base[i] < 0) {
                continue;
            }
            const Label image = classifier.classify(transform(pts[i])).label;
            if (image < 0) {
                continue;
            }
            ++used;
            ++votes[static_cast<std::size_t>(base[i])][image];
            if (image != e.expected[static_cast<std::size_t>(base[i])]) {
                ++bad;
            }
        }
        e.observed.assign(static_cast<std::size_t>(labels), kUnresolved);
        for (std::size_t l = 0; l < votes.size(); ++l) {
            std::size_t best = 0;
            for (const auto& [img, cnt] : votes[l]) {
                if (cnt > best) {
                    best = cnt;
                    e.observed[l] = img;
                }
            }
        }
        e.samples = used;
        e.violation_fraction = used == 0 ? 1.0 : static_cast<double>(bad) / static_cast<double>(used);
        report.elements.push_back(std::move(e));
    };

    for (int k = 1; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n;
        SymmetryElement e;
        e.name = "rotate 2pi*" + std::to_string(k) + "/" + std::to_string(n);
        e.index = k;
        e.angle = angle;
        evaluate(std::move(e), [&](const Point2& p) { return rotate(p, angle, o); });
    }
    for (int j = 0; j < n; ++j) {
        const double axis = std::numbers::pi / 2.0 + board.phase() + std::numbers::pi * j / n;
        SymmetryElement e;
        e.name = "reflect axis " + std::to_string(j);
        e.reflection = true;
        e.index = j;
        e.angle = axis;
        evaluate(std::move(e), [&](const Point2& p) { return reflect(p, axis, o); });
    }
    return report;
}

std::vector<int> cycle_lengths(const std::vector<Label>& permutation)
{
    std::vector<int> out;
    std::vector<bool> seen(permutation.size(), false);
    for (std::size_t i = 0; i < permutation.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        std::size_t j = i;
        while (j < permutation.size() && !seen[j]) {
            seen[j] = true;
            ++len;
            const Label next = permutation[j];
            if (next < 0) {
                break;
            }
            j = static_cast<std::size_t>(next);
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rotgame
