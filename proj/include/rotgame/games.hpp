#pragma once

// One-step update rules and orbit generation for the chaos game, the
// uniform rotation game (URG), the farthest vertex game (FVG) and the
// doubling (escape) game.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "rotgame/geometry.hpp"

namespace rotgame {

enum class GameKind { Chaos, UrgCcw, UrgCw, Fvg, Doubling };

std::string_view to_string(GameKind kind);

struct GameConfig {
    GameKind kind{GameKind::Chaos};
    double r{0.5};
    RegularPolygon board{RegularPolygon::unit_triangle()};
    std::uint64_t seed{0};
};

/// Throws std::invalid_argument if r is outside (0, 1) for a contracting
/// game, or the board is not a triangle for the doubling game.
void validate(const GameConfig& cfg);

/// Vertex chooser for the chaos game: std::mt19937_64 seeded with the
/// config seed, vertex = output mod n. The output sequence of mt19937_64 is
/// fixed by the standard, so renders are reproducible across platforms.
class ChaosRng {
public:
    explicit ChaosRng(std::uint64_t seed) : engine_(seed) {}
    int next_vertex(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 engine_;
};

struct StepResult {
    Point2 point;
    int vertex;
};

/// (1 - r) * p + r * v
Point2 step_toward(const Point2& p, const Point2& v, double r);

StepResult chaos_step(const Point2& p, const GameConfig& cfg, ChaosRng& rng);

/// Step number k of a rotation game. CCW visits first_vertex + k, CW visits
/// first_vertex - k (mod n).
StepResult urg_step(const Point2& p, long k, const GameConfig& cfg, int first_vertex = 0);

int fvg_select(const Point2& p, const RegularPolygon& board);
StepResult fvg_step(const Point2& p, const GameConfig& cfg);

/// 2p - V for the nearest vertex V (lowest index on ties). Triangle only.
Point2 doubling_step(const Point2& p, const RegularPolygon& board);

/// True iff p and its first K doubling iterates all stay inside the closed
/// triangle, with boundary slack `tol` (defaults to 1e-12 * c when negative).
bool gasket_membership(const Point2& p, const RegularPolygon& board, int K, double tol = -1.0);

struct Orbit {
    std::vector<Point2> points;
    std::vector<int> vertex_choices;  // empty for the doubling game
    GameConfig config;
    std::size_t transient{0};

    /// Points after the burn-in prefix.
    std::span<const Point2> retained() const
    {
        return std::span<const Point2>(points).subspan(std::min(transient, points.size()));
    }
};

/// Iterates the configured game `steps` times from p0. The first `transient`
/// points are kept but flagged as burn-in.
Orbit run_orbit(const GameConfig& cfg, const Point2& p0, std::size_t steps,
                std::size_t transient = 0, int first_vertex = 0);

enum class Rotation { Ccw, Cw, None };

std::string_view to_string(Rotation rotation);

/// Direction of the trailing vertex-choice cycle: Ccw when the last `window`
/// consecutive choices step by +1 (mod n), Cw when they step by -1, None otherwise.
Rotation trailing_rotation(std::span<const int> choices, int n, std::size_t window);

}  // namespace rotgame
