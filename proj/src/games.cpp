#include "rotgame/games.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rotgame {

std::string_view to_string(GameKind kind)
{
    switch (kind) {
    case GameKind::Chaos: return "chaos";
    case GameKind::UrgCcw: return "urg-ccw";
    case GameKind::UrgCw: return "urg-cw";
    case GameKind::Fvg: return "fvg";
    case GameKind::Doubling: return "doubling";
    }
    return "unknown";
}

std::string_view to_string(Rotation rotation)
{
    switch (rotation) {
    case Rotation::Ccw: return "ccw";
    case Rotation::Cw: return "cw";
    case Rotation::None: return "none";
    }
    return "unknown";
}

void validate(const GameConfig& cfg)
{
    if (cfg.kind == GameKind::Doubling) {
        if (cfg.board.n() != 3) {
            throw std::invalid_argument("the doubling game is defined on the triangle only, got n = " +
                                        std::to_string(cfg.board.n()));
        }
        return;
    }
    if (!(cfg.r > 0.0 && cfg.r < 1.0)) {
        throw std::invalid_argument("contraction ratio r must lie in (0, 1), got " + std::to_string(cfg.r));
    }
}

Point2 step_toward(const Point2& p, const Point2& v, double r)
{
    return (1.0 - r) * p + r * v;
}

StepResult chaos_step(const Point2& p, const GameConfig& cfg, ChaosRng& rng)
{
    const int k = rng.next_vertex(cfg.board.n());
    return {step_toward(p, cfg.board.vertex(k), cfg.r), k};
}

StepResult urg_step(const Point2& p, long k, const GameConfig& cfg, int first_vertex)
{
    long idx = 0;
    switch (cfg.kind) {
    case GameKind::UrgCcw: idx = first_vertex + k; break;
    case GameKind::UrgCw: idx = first_vertex - k; break;
    default: throw std::invalid_argument("urg_step needs a rotation game config");
    }
    const auto v = static_cast<int>(cfg.board.wrap(idx));
    return {step_toward(p, cfg.board.vertex(v), cfg.r), v};
}

int fvg_select(const Point2& p, const RegularPolygon& board)
{
    return board.farthest_vertex(p);
}

StepResult fvg_step(const Point2& p, const GameConfig& cfg)
{
    const int v = fvg_select(p, cfg.board);
    return {step_toward(p, cfg.board.vertex(v), cfg.r), v};
}

Point2 doubling_step(const Point2& p, const RegularPolygon& board)
{
    if (board.n() != 3) {
        throw std::invalid_argument("the doubling game is defined on the triangle only");
    }
    return 2.0 * p - board.vertex(board.nearest_vertex(p));
}

bool gasket_membership(const Point2& p, const RegularPolygon& board, int K, double tol)
{
    if (board.n() != 3) {
        throw std::invalid_argument("gasket membership is characterized for the triangle only, got n = " +
                                    std::to_string(board.n()));
    }
    if (K < 1) {
        throw std::invalid_argument("gasket membership needs an iteration budget K >= 1");
    }
    require_finite(p, "gasket query point");
    if (tol < 0.0) {
        tol = 1e-12 * board.circumradius();
    }
    Point2 q = p;
    if (!board.contains(q, tol)) {
        return false;
    }
    for (int i = 0; i < K; ++i) {
        q = doubling_step(q, board);
        if (!board.contains(q, tol)) {
            return false;
        }
    }
    return true;
}

Orbit run_orbit(const GameConfig& cfg, const Point2& p0, std::size_t steps, std::size_t transient,
                int first_vertex)
{
    validate(cfg);
    require_finite(p0, "orbit start");
    if (transient > steps) {
        throw std::invalid_argument("transient must not exceed steps");
    }

    Orbit orbit{.points = {}, .vertex_choices = {}, .config = cfg, .transient = transient};
    orbit.points.reserve(steps + 1);
    orbit.points.push_back(p0);
    if (cfg.kind != GameKind::Doubling) {
        orbit.vertex_choices.reserve(steps);
    }

    ChaosRng rng(cfg.seed);
    Point2 p = p0;
    for (std::size_t k = 0; k < steps; ++k) {
        StepResult s{};
        switch (cfg.kind) {
        case GameKind::Chaos: s = chaos_step(p, cfg, rng); break;
        case GameKind::UrgCcw:
        case GameKind::UrgCw: s = urg_step(p, static_cast<long>(k), cfg, first_vertex); break;
        case GameKind::Fvg: s = fvg_step(p, cfg); break;
        case GameKind::Doubling: s = {doubling_step(p, cfg.board), -1}; break;
        }
        p = s.point;
        orbit.points.push_back(p);
        if (cfg.kind != GameKind::Doubling) {
            orbit.vertex_choices.push_back(s.vertex);
        }
    }
    return orbit;
}

Rotation trailing_rotation(std::span<const int> choices, int n, std::size_t window)
{
    if (window < 2 || choices.size() < window) {
        return Rotation::None;
    }
    const auto tail = choices.subspan(choices.size() - window);
    auto all_step = [&](int delta) {
        for (std::size_t i = 1; i < tail.size(); ++i) {
            if (((tail[i] - tail[i - 1] - delta) % n + n) % n != 0) {
                return false;
            }
        }
        return true;
    };
    if (all_step(+1)) {
        return Rotation::Ccw;
    }
    if (all_step(-1)) {
        return Rotation::Cw;
    }
    return Rotation::None;
}

}  // namespace rotgame
