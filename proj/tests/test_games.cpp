#include <doctest.h>

#include <array>
#include <random>

#include "oracles.hpp"
#include "rotgame/analysis.hpp"
#include "rotgame/games.hpp"

using namespace rotgame;

namespace {

bool near(const Point2& a, const Point2& b, double tol) { return distance(a, b) <= tol; }

GameConfig config(GameKind kind, double r = 0.5, RegularPolygon board = RegularPolygon::unit_triangle(),
                  std::uint64_t seed = 0)
{
    return GameConfig{.kind = kind, .r = r, .board = board, .seed = seed};
}

// Reference orbits from (0.69, -0.35): farthest vertex game, and rotation game from A.
const std::vector<Point2> kFvgPolyline = {
    {0.69, -0.35},   {0.095, -0.319},   {0.0475, 0.129},  {-0.226, -0.0799}, {0.137, -0.184},
    {0.0685, 0.197}, {-0.216, -0.0461}, {0.142, -0.167},  {0.0711, 0.205},   {-0.215, -0.0419},
    {0.143, -0.165}, {0.0714, 0.206},   {-0.214, -0.0413}};
const std::vector<Point2> kUrgPolyline = {
    {0.69, -0.35},  {0.345, 0.114},  {-0.0775, -0.0875}, {0.211, -0.188}, {0.106, 0.195}, {-0.197, -0.047},
    {0.151, -0.168}, {0.0757, 0.205}, {-0.212, -0.042},   {0.144, -0.165}, {0.072, 0.206}, {-0.214, -0.0413}};

}  // namespace

TEST_CASE("step_toward")
{
    CHECK(near(step_toward({1, 0}, {0, 0}, 0.5), {0.5, 0}, 0));
    CHECK(near(step_toward(oracle::kA2, oracle::kC, 0.5), oracle::kB2, 1e-15));
    CHECK(near(step_toward({0.3, -0.7}, {0.3, -0.7}, 0.37), {0.3, -0.7}, 1e-16));
}

TEST_CASE("config validation")
{
    CHECK_NOTHROW(validate(config(GameKind::Chaos)));
    CHECK_THROWS_AS(validate(config(GameKind::Chaos, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(config(GameKind::Fvg, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(validate(config(GameKind::UrgCw, -0.2)), std::invalid_argument);
    CHECK_NOTHROW(validate(config(GameKind::Doubling, 7.0)));
    CHECK_THROWS_AS(validate(config(GameKind::Doubling, 0.5, RegularPolygon(4, 1.0))), std::invalid_argument);
}

TEST_CASE("chaos step uses the 64-bit Mersenne twister modulo n")
{
    const GameConfig cfg = config(GameKind::Chaos, 0.5, RegularPolygon::unit_triangle(), 42);
    ChaosRng rng(cfg.seed);
    std::mt19937_64 reference(42);
    Point2 p{0, 0};
    for (int i = 0; i < 100; ++i) {
        const StepResult s = chaos_step(p, cfg, rng);
        const int want = static_cast<int>(reference() % 3);
        REQUIRE(s.vertex == want);
        CHECK(near(s.point, oracle::midpoint(p, cfg.board.vertex(want)), 1e-16));
        p = s.point;
    }
    // Pinned first draw for seed 42 from the origin.
    ChaosRng fresh(42);
    const StepResult first = chaos_step({0, 0}, cfg, fresh);
    CHECK(first.vertex == 0);
    CHECK(near(first.point, {0.0, oracle::kSqrt3 / 6}, 1e-16));
}

TEST_CASE("rotation game steps through the triangle attractor")
{
    const GameConfig cfg = config(GameKind::UrgCcw);
    const StepResult b = urg_step(oracle::kA1, 1, cfg);
    CHECK(b.vertex == 1);
    CHECK(near(b.point, oracle::kB1, 1e-15));
    CHECK(near(urg_step(oracle::kB1, 2, cfg).point, oracle::kC1, 1e-15));
    CHECK(near(urg_step(oracle::kC1, 3, cfg).point, oracle::kA1, 1e-15));

    const GameConfig cw = config(GameKind::UrgCw);
    CHECK(urg_step({0, 0}, 0, cw).vertex == 0);
    CHECK(urg_step({0, 0}, 1, cw).vertex == 2);
    CHECK(urg_step({0, 0}, 2, cw).vertex == 1);
    CHECK(urg_step({0, 0}, 1, cw, 1).vertex == 0);
}

TEST_CASE("farthest vertex selection")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    CHECK(fvg_select({0, 0}, tri) == 0);
    CHECK(fvg_select(tri.vertex(0), tri) == 1);
    // Near B2 the farthest vertex is B, continuing the ascending cycle.
    CHECK(fvg_select(oracle::kB2 + Point2{0.01, 0.005}, tri) == 1);
    CHECK(fvg_select(oracle::kA2, tri) == 2);

    const GameConfig cfg = config(GameKind::Fvg);
    CHECK(near(fvg_step({0, 0}, cfg).point, oracle::midpoint({0, 0}, tri.vertex(0)), 1e-16));
    CHECK(near(fvg_step(oracle::kA2, cfg).point, oracle::kB2, 1e-15));
    CHECK(near(fvg_step({0.69, -0.35}, cfg).point, {0.095, -0.319}, 5e-3));
}

TEST_CASE("doubling step")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    CHECK(near(doubling_step(tri.vertex(0), tri), tri.vertex(0), 1e-16));
    const Point2 mid = oracle::midpoint(tri.vertex(0), tri.vertex(1));
    const Point2 q = doubling_step(mid, tri);
    CHECK((near(q, tri.vertex(0), 1e-15) || near(q, tri.vertex(1), 1e-15)));
    CHECK(tri.contains(q, 1e-12));
    CHECK_THROWS_AS(doubling_step({0, 0}, RegularPolygon(5, 1.0)), std::invalid_argument);

    Point2 p{0, 0};
    bool escaped = false;
    for (int i = 0; i < 20 && !escaped; ++i) {
        p = doubling_step(p, tri);
        escaped = !tri.contains(p, 1e-12);
    }
    CHECK(escaped);
}

TEST_CASE("gasket membership")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    for (const Point2& v : tri.vertices()) {
        CHECK(gasket_membership(v, tri, 50));
    }
    CHECK_FALSE(gasket_membership({0, 0}, tri, 50));
    CHECK_THROWS_AS(gasket_membership({0, 0}, RegularPolygon(4, 1.0), 5), std::invalid_argument);
    CHECK_THROWS_AS(gasket_membership({0, 0}, tri, 0), std::invalid_argument);

    const Orbit o = run_orbit(config(GameKind::Chaos, 0.5, tri, 3), {0.1, 0.05}, 2000);
    CHECK(gasket_membership(o.points.back(), tri, 20, 1e-6));
}

TEST_CASE("run_orbit")
{
    const Orbit cycle = run_orbit(config(GameKind::UrgCcw), oracle::kA1, 3, 0, 1);
    REQUIRE(cycle.points.size() == 4);
    CHECK(near(cycle.points[0], oracle::kA1, 0));
    CHECK(near(cycle.points[1], oracle::kB1, 1e-15));
    CHECK(near(cycle.points[2], oracle::kC1, 1e-15));
    CHECK(near(cycle.points[3], oracle::kA1, 1e-15));

    const Orbit fvg = run_orbit(config(GameKind::Fvg), kFvgPolyline[0], 12);
    REQUIRE(fvg.points.size() == kFvgPolyline.size());
    for (std::size_t i = 0; i < kFvgPolyline.size(); ++i) {
        CHECK(distance(fvg.points[i], kFvgPolyline[i]) <= 5e-3);
    }
    const Orbit urg = run_orbit(config(GameKind::UrgCcw), kUrgPolyline[0], 11);
    for (std::size_t i = 0; i < kUrgPolyline.size(); ++i) {
        CHECK(distance(urg.points[i], kUrgPolyline[i]) <= 5e-3);
    }

    for (const GameKind kind : {GameKind::Chaos, GameKind::UrgCcw, GameKind::UrgCw, GameKind::Fvg, GameKind::Doubling}) {
        const Orbit empty = run_orbit(config(kind), {0.2, 0.1}, 0);
        REQUIRE(empty.points.size() == 1);
        CHECK(empty.points[0] == Point2{0.2, 0.1});
        CHECK(empty.vertex_choices.empty());
    }

    const Orbit burn = run_orbit(config(GameKind::Chaos, 0.5, RegularPolygon::unit_triangle(), 1), {0, 0}, 10, 4);
    CHECK(burn.retained().size() == 7);
    CHECK_THROWS_AS(run_orbit(config(GameKind::Chaos), {0, 0}, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(run_orbit(config(GameKind::Chaos), {NAN, 0}, 3), std::invalid_argument);
}

TEST_CASE("trailing rotation")
{
    const std::vector<int> up = {2, 0, 0, 1, 2, 0, 1, 2};
    const std::vector<int> down = {0, 2, 1, 0, 2, 1};
    CHECK(trailing_rotation(up, 3, 5) == Rotation::Ccw);
    CHECK(trailing_rotation(down, 3, 5) == Rotation::Cw);
    CHECK(trailing_rotation(up, 3, 8) == Rotation::None);
}

TEST_CASE("pseudo-periodic point under the rotation schedule")
{
    const Point2 p0{1.0 / 15, 2 * oracle::kSqrt3 / 15};
    const Orbit o = run_orbit(config(GameKind::UrgCcw), p0, 6);
    CHECK(distance(o.points[4], o.points[0]) < 1e-12);
    CHECK(distance(o.points[6], o.points[1]) > 1e-6);
}

TEST_CASE("property: orbit records its own steps")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const RegularPolygon board(n, 1.0);
        const double r = 0.05 + 0.9 * (u(rng) + 3) / 6;
        for (const GameKind kind : {GameKind::Chaos, GameKind::UrgCcw, GameKind::UrgCw, GameKind::Fvg}) {
            const GameConfig cfg = config(kind, r, board, rng());
            const Orbit o = run_orbit(cfg, {u(rng), u(rng)}, 50);
            REQUIRE(o.points.size() == o.vertex_choices.size() + 1);
            for (std::size_t i = 0; i + 1 < o.points.size(); ++i) {
                CHECK(o.points[i + 1] == step_toward(o.points[i], board.vertex(o.vertex_choices[i]), r));
            }
        }
    }
}

TEST_CASE("property: orbits stay in the hull and never leave the board")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const RegularPolygon board(n, 1.0);
        const double r = 0.1 + 0.8 * (u(rng) + 4) / 8;
        const GameKind kind = std::array{GameKind::Chaos, GameKind::UrgCcw, GameKind::UrgCw, GameKind::Fvg}[rng() % 4];
        const Point2 p0{u(rng), u(rng)};
        const Orbit o = run_orbit(config(kind, r, board, rng()), p0, 100);
        // Hull of p0 and the board is inside the disc of radius max(|p0|, 1).
        const double bound = std::max(norm(p0), 1.0) + 1e-12;
        bool inside = false;
        for (const Point2& p : o.points) {
            CHECK(norm(p) <= bound);
            if (inside) {
                CHECK(board.contains(p, 1e-12));
            }
            inside = inside || board.contains(p, 0.0);
        }
    }
}

TEST_CASE("property: inside the triangle the farthest vertex game is a rotation game")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const std::vector<Point2> vs(tri.vertices().begin(), tri.vertices().end());
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int checked = 0;
    while (checked < 10000) {
        const Point2 p{u(rng), u(rng)};
        if (!tri.contains(p, -1e-9)) {
            continue;
        }
        // Off the perpendicular bisectors: the farthest vertex is unique.
        bool on_bisector = false;
        for (int i = 0; i < 3; ++i) {
            on_bisector = on_bisector || std::abs(distance(p, vs[i]) - distance(p, vs[(i + 1) % 3])) < 1e-9;
        }
        if (on_bisector) {
            continue;
        }
        ++checked;
        const Orbit o = run_orbit(config(GameKind::Fvg), p, 30);
        REQUIRE(o.vertex_choices[0] == oracle::farthest_index(p, vs));
        const int step = (o.vertex_choices[1] - o.vertex_choices[0] + 3) % 3;
        CHECK(step != 0);
        for (std::size_t i = 1; i + 1 < o.vertex_choices.size(); ++i) {
            CHECK((o.vertex_choices[i + 1] - o.vertex_choices[i] + 3) % 3 == step);
        }
    }
}

TEST_CASE("property: rotation orbits approach the attractor monotonically")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const std::vector<Point2> attractor = {oracle::kA1, oracle::kB1, oracle::kC1};
    const auto gap = [&](const Point2& p) {
        double best = INFINITY;
        for (const Point2& q : attractor) {
            best = std::min(best, distance(p, q));
        }
        return best;
    };
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    int checked = 0;
    while (checked < 2000) {
        const Point2 p{u(rng), u(rng)};
        if (!tri.contains(p)) {
            continue;
        }
        ++checked;
        const Orbit o = run_orbit(config(GameKind::UrgCcw), p, 60);
        for (std::size_t k = 3; k + 1 < o.points.size(); ++k) {
            const double now = gap(o.points[k]);
            const double next = gap(o.points[k + 1]);
            CHECK(next <= now + 1e-15);
            if (now > 1e-12) {
                CHECK(next < now);
            }
        }
    }
}
