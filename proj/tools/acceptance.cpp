#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "commands.hpp"
#include "rotgame/analysis.hpp"
#include "rotgame/basins.hpp"
#include "rotgame/games.hpp"

namespace rotgame::cli {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Checker {
public:
    explicit Checker(CriterionResult& out) : out_(out) {}

    void expect(bool ok, std::string what)
    {
        if (!ok) {
            pass_ = false;
            out_.details.push_back("FAIL " + std::move(what));
        }
    }
    void note(std::string what) { out_.details.push_back(std::move(what)); }
    bool passed() const { return pass_; }

private:
    CriterionResult& out_;
    bool pass_{true};
};

double min_distance(const Point2& p, const std::vector<Point2>& set)
{
    double best = INFINITY;
    for (const Point2& q : set) {
        best = std::min(best, distance(p, q));
    }
    return best;
}

std::size_t nearest_index(const Point2& p, const std::vector<Point2>& set)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < set.size(); ++i) {
        if (distance(p, set[i]) < distance(p, set[best])) {
            best = i;
        }
    }
    return best;
}

Point2 random_in_disc(std::mt19937_64& rng, double radius)
{
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double rad = radius * std::sqrt(u);
    return {rad * std::cos(2.0 * kPi * v), rad * std::sin(2.0 * kPi * v)};
}

// 1: triangle attractor coordinates.
void triangle_attractor(CriterionResult& res)
{
    Checker c(res);
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const auto t0 = Clock::now();
    const AttractorSpec ccw = attractor_urg(tri, 0.5, Rotation::Ccw);
    const AttractorSpec cw = attractor_urg(tri, 0.5, Rotation::Cw);
    const double elapsed = seconds_since(t0);

    const double s3 = std::numbers::sqrt3;
    const std::vector<Point2> tr = {{1.0 / 14, 5 * s3 / 42}, {-3.0 / 14, -s3 / 42}, {1.0 / 7, -2 * s3 / 21}};
    double worst = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        worst = std::max(worst, distance(ccw.points[k], tr[k]));
        const Point2 mirror{-tr[k].x, tr[k].y};
        worst = std::max(worst, min_distance(mirror, cw.points));
        worst = std::max(worst, min_distance(cw.points[k], {{-tr[0].x, tr[0].y}, {-tr[1].x, tr[1].y}, {-tr[2].x, tr[2].y}}));
    }
    c.note(fmt::format("max coordinate error {:.3e}, runtime {:.3f} ms", worst, elapsed * 1e3));
    c.expect(worst <= 1e-12, fmt::format("attractor coordinates off by {:.3e} > 1e-12", worst));
    c.expect(elapsed < 1e-3, fmt::format("runtime {:.3f} ms >= 1 ms", elapsed * 1e3));
    res.passed = c.passed();
}

// 2: tilt-angle tables.
void tilt_tables(CriterionResult& res)
{
    Checker c(res);
    static constexpr double urg_table[] = {0.333473, 0.463648, 0.390713, 0.333473, 0.289632, 0.255495,
                                      0.203602, 0.169861, 0.14618,  0.128618, 0.108593};
    static constexpr double fvg_table[] = {0.333, 0.255,  0.170,  0.129,  0.104, 0.0880,
                                       0.0709, 0.0595, 0.0514, 0.0454, 0.0391};
    double worst8 = 0.0;
    double worst12 = 0.0;
    for (int n = 3; n <= 13; ++n) {
        const double k = kissing_ratio(n);
        const double e8 = std::abs(alpha_urg(n, k) - urg_table[n - 3]);
        const double e12 = std::abs(alpha_fvg_formula(n, k) - fvg_table[n - 3]);
        worst8 = std::max(worst8, e8);
        worst12 = std::max(worst12, e12);
        c.expect(e8 <= 5e-6, fmt::format("URG tilt n={} off by {:.2e}", n, e8));
        c.expect(e12 <= 5e-4, fmt::format("FVG tilt formula n={} off by {:.2e}", n, e12));
    }
    const double d63 = std::abs(alpha_urg(6, kissing_ratio(6)) - alpha_urg(3, kissing_ratio(3)));
    c.expect(d63 <= 1e-12, fmt::format("alpha_6 - alpha_3 = {:.2e}", d63));
    c.note(fmt::format("max URG table error {:.2e} (tol 5e-6), max FVG table error {:.2e} (tol 5e-4), "
                       "|alpha_6 - alpha_3| = {:.2e}",
                       worst8, worst12, d63));
    res.passed = c.passed();
}

// 3: scale factors.
void scale_check(CriterionResult& res)
{
    Checker c(res);
    const double e1 = std::abs(lambda_urg(3, 0.5) - 1.0 / std::sqrt(7.0));
    const double e2 = std::abs(lambda_fvg(4, 0.5) - 1.0 / 3.0);
    c.expect(e1 <= 1e-12, fmt::format("lambda_urg(3, 1/2) off 1/sqrt(7) by {:.2e}", e1));
    c.expect(e2 <= 4 * std::numeric_limits<double>::epsilon(), fmt::format("even-n FVG lambda off 1/3 by {:.2e}", e2));
    c.note(fmt::format("|lambda_urg - 1/sqrt7| = {:.2e}, |lambda_fvg_even - 1/3| = {:.2e}", e1, e2));
    res.passed = c.passed();
}

// 4: kissing ratios and the curves g1 < g2 < g3.
void kissing_table(CriterionResult& res)
{
    Checker c(res);
    static constexpr std::pair<int, double> kissing_table_values[] = {{4, 0.5},   {5, 0.618},  {6, 0.667},
                                                      {8, 0.707}, {10, 0.764}, {12, 0.788}};
    for (const auto& [n, v] : kissing_table_values) {
        const double e = std::abs(kissing_ratio(n) - v);
        c.expect(e <= 5e-4, fmt::format("k_{} = {:.6f} vs {}", n, kissing_ratio(n), v));
    }
    for (int i = 0; i <= 470; ++i) {
        const double x = 3.0 + 0.1 * i;
        const KissingCurves kc = kissing_curves(x);
        c.expect(kc.g1 < kc.g2 && kc.g2 < kc.g3, fmt::format("g ordering fails at x = {:.1f}", x));
    }
    double worst = 0.0;
    for (int n = 4; n <= 50; ++n) {
        const KissingCurves kc = kissing_curves(n);
        const double g = n % 4 == 0 ? kc.g1 : (n % 4 == 2 ? kc.g3 : kc.g2);
        const double e = std::max(std::abs(kc.k - g), std::abs(kissing_ratio(n) - g));
        worst = std::max(worst, e);
        c.expect(e < 1e-12, fmt::format("k_{} differs from its residue curve by {:.2e}", n, e));
    }
    c.note(fmt::format("max |k_n - g_j(n)| over n = 4..50: {:.2e}", worst));
    res.passed = c.passed();
}

// Supplementary to 4: the table values carry three digits, truncated or rounded.
void kissing_table_digits(CriterionResult& res)
{
    Checker c(res);
    static constexpr std::pair<int, double> kissing_table_values[] = {{4, 0.5},   {5, 0.618},  {6, 0.667},
                                                      {8, 0.707}, {10, 0.764}, {12, 0.788}};
    for (const auto& [n, v] : kissing_table_values) {
        const double e = std::abs(kissing_ratio(n) - v);
        c.note(fmt::format("k_{} = {:.6f}, table {}, difference {:.2e}", n, kissing_ratio(n), v, e));
        c.expect(e < 1e-3, fmt::format("k_{} more than one unit in the third digit from {}", n, v));
    }
    res.passed = c.passed();
}

// 5: closed-form attractors against brute-force iteration.
void closed_form_vs_iteration(CriterionResult& res)
{
    Checker c(res);
    std::mt19937_64 rng(20240);
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::size_t runs = 0;
    for (int n = 3; n <= 12; ++n) {
        const RegularPolygon board(n, 1.0);
        const double tol = 1e-9 * board.circumradius();
        for (const double r : {0.3, kissing_ratio(n), 0.7}) {
            for (const Rotation dir : {Rotation::Ccw, Rotation::Cw}) {
                const AttractorSpec urg = attractor_urg(board, r, dir);
                std::vector<Point2> fvg_points;
                std::vector<int> fvg_next;
                for (const Rotation d : n % 2 == 1 ? std::vector{Rotation::Ccw, Rotation::Cw} : std::vector{Rotation::None}) {
                    const AttractorSpec s = attractor_fvg(board, r, d);
                    const auto base = static_cast<int>(fvg_points.size());
                    fvg_points.insert(fvg_points.end(), s.points.begin(), s.points.end());
                    for (const int nx : s.successor) {
                        fvg_next.push_back(base + nx);
                    }
                }
                for (int s = 0; s < 20; ++s) {
                    const Point2 p0 = random_in_disc(rng, 10.0);
                    const GameConfig ucfg{.kind = dir == Rotation::Ccw ? GameKind::UrgCcw : GameKind::UrgCw,
                                          .r = r, .board = board, .seed = 0};
                    const Orbit uo = run_orbit(ucfg, p0, 200);
                    const GameConfig fcfg{.kind = GameKind::Fvg, .r = r, .board = board, .seed = 0};
                    const Orbit fo = run_orbit(fcfg, p0, 200);
                    runs += 2;

                    const auto check = [&](const Orbit& o, const std::vector<Point2>& pts,
                                           const std::vector<int>& next, const char* name) {
                        const Point2& last = o.points.back();
                        const double d = min_distance(last, pts);
                        worst = std::max(worst, d);
                        c.expect(d <= tol, fmt::format("{} n={} r={:.4f} start {}: final distance {:.2e}", name, n, r, s, d));
                        // Order: the last n points follow the orbit successor map.
                        for (std::size_t i = o.points.size() - static_cast<std::size_t>(n); i + 1 < o.points.size(); ++i) {
                            const std::size_t a = nearest_index(o.points[i], pts);
                            const std::size_t b = nearest_index(o.points[i + 1], pts);
                            c.expect(static_cast<std::size_t>(next[a]) == b,
                                     fmt::format("{} n={} r={:.4f}: visit order broken", name, n, r));
                        }
                    };
                    check(uo, urg.points, urg.successor, "URG");
                    check(fo, fvg_points, fvg_next, "FVG");
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    c.note(fmt::format("{} orbits, worst final distance {:.2e} (tol 1e-9), runtime {:.3f} s", runs, worst, elapsed));
    c.expect(elapsed < 5.0, fmt::format("runtime {:.2f} s >= 5 s", elapsed));
    res.passed = c.passed();
}

// 6: triangle periodic points.
void periodic_points(CriterionResult& res)
{
    Checker c(res);
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const TriangleGameConstants k = triangle_constants();
    const double s3 = std::numbers::sqrt3;

    const auto near = [](const Point2& a, const Point2& b) { return distance(a, b) <= 1e-12; };
    c.expect(near(periodic_point(tri, 1), tri.vertex(0)), "period 1 is not A");
    c.expect(near(periodic_point(tri, 2), {-1.0 / 3.0, 0.0}), "period 2 is not (-1/3, 0)");
    c.expect(near(periodic_point(tri, 4), {1.0 / 15.0, 2.0 * s3 / 15.0}), "period 4 is not (1/15, 2 sqrt3/15)");
    for (const int p : {3, 6, 9, 12}) {
        c.expect(near(periodic_point(tri, p), k.c1), fmt::format("period {} is not C1", p));
    }

    double worst = 0.0;
    for (int p = 1; p <= 12; ++p) {
        const Point2 p0 = periodic_point(tri, p);
        const double two_p = std::ldexp(1.0, p);
        const double half = std::ldexp(1.0, p - 1);
        Point2 closed{};
        switch (p % 3) {
        case 0: closed = {1.0 / 7.0, -2.0 / (7.0 * s3)}; break;
        case 1: closed = {(half - 1.0) / (7.0 * (two_p - 1.0)), (5.0 * half + 2.0) / (7.0 * s3 * (two_p - 1.0))}; break;
        default: closed = {(-3.0 * half - 1.0) / (7.0 * (two_p - 1.0)), (2.0 - half) / (7.0 * s3 * (two_p - 1.0))}; break;
        }
        c.expect(near(p0, closed), fmt::format("period {} differs from its closed form", p));

        const GameConfig cfg{.kind = GameKind::UrgCcw, .r = 0.5, .board = tri, .seed = 0};
        const Orbit o = run_orbit(cfg, closed, static_cast<std::size_t>(p));
        const double ret = distance(o.points.back(), closed);
        worst = std::max(worst, ret);
        c.expect(ret <= 1e-12, fmt::format("period {}: {} scheduled steps return within {:.2e}", p, p, ret));

        if (p % 3 == 1 && p > 1) {
            const double d = distance_to_line(closed, k.a1, k.c1);
            c.expect(d <= 1e-12, fmt::format("period {} point is {:.2e} off line A1C1", p, d));
        } else if (p % 3 == 2) {
            const double d = distance_to_line(closed, k.b1, k.c1);
            c.expect(d <= 1e-12, fmt::format("period {} point is {:.2e} off line B1C1", p, d));
        }
    }
    c.note(fmt::format("worst return error over p = 1..12: {:.2e}", worst));
    res.passed = c.passed();
}

// 7: pseudo-periodicity, as stated (farthest vertex game) and under the rotation schedule.
void pseudo_periodic(CriterionResult& res, GameKind kind)
{
    Checker c(res);
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const Point2 p0{1.0 / 15.0, 2.0 * std::numbers::sqrt3 / 15.0};
    const GameConfig cfg{.kind = kind, .r = 0.5, .board = tri, .seed = 0};
    const Orbit o = run_orbit(cfg, p0, 6);
    const double ret = distance(o.points[4], o.points[0]);
    const double drift = distance(o.points[6], o.points[1]);
    std::string choices;
    for (const int v : o.vertex_choices) {
        choices += static_cast<char>('A' + v);
    }
    c.note(fmt::format("{} vertex choices {}: |P4 - P0| = {:.3e}, |P6 - P1| = {:.3e}", to_string(kind), choices, ret, drift));
    c.expect(ret < 1e-12, fmt::format("|P4 - P0| = {:.3e} is not < 1e-12", ret));
    c.expect(drift > 1e-6, fmt::format("|P6 - P1| = {:.3e} is not > 1e-6", drift));
    res.passed = c.passed();
}

// 8: limits of the tilt angle.
void series_limits(CriterionResult& res)
{
    Checker c(res);
    for (int n = 3; n <= 10; ++n) {
        const double e = std::abs(alpha_urg(n, 1e-6) - (n - 2) * kPi / (2.0 * n));
        c.expect(e <= 1e-4, fmt::format("URG alpha(n={}, r->0) off by {:.2e}", n, e));
        if (n % 2 == 1) {
            const double f = std::abs(alpha_fvg(n, 1e-6) - kPi / (2.0 * n));
            c.expect(f <= 1e-4, fmt::format("FVG alpha(n={}, r->0) off by {:.2e}", n, f));
        }
    }
    const SeriesReport fixed = alpha_series_diagnostics(0.5, 10000);
    const double lin = fixed.scaled_linear.back();
    c.note(fmt::format("n*alpha(n=10000, r=1/2) = {:.6f}, target 2pi = {:.6f}", lin, 2 * kPi));
    c.expect(std::abs(lin / (2 * kPi) - 1.0) <= 0.01, "n*alpha at r = 1/2 not within 1% of 2pi");

    const SeriesReport kiss = alpha_series_diagnostics(kKissing, 10000);
    const double even = kiss.scaled_quadratic[10000 - 3];
    const double odd = kiss.scaled_quadratic[9999 - 3];
    c.note(fmt::format("kissing n^2*alpha: n=10000 -> {:.6f} (target pi^2/8 = {:.6f}); n=9999 -> {:.6f} "
                       "(target pi^2/2 = {:.6f})",
                       even, kPi * kPi / 8, odd, kPi * kPi / 2));
    c.expect(std::abs(even / (kPi * kPi / 8) - 1.0) <= 0.01, "n^2*alpha (even n) not within 1% of pi^2/8");
    c.expect(std::abs(odd / (kPi * kPi / 2) - 1.0) <= 0.01, "n^2*alpha (odd n) not within 1% of pi^2/2");
    res.passed = c.passed();
}

// Supplementary to 8: the observed asymptotics of the kissing series.
void series_asymptote(CriterionResult& res)
{
    Checker c(res);
    const SeriesReport kiss = alpha_series_diagnostics(kKissing, 10000);
    const double even = kiss.scaled_quadratic[10000 - 3];
    const double odd = kiss.scaled_quadratic[9999 - 3];
    const double target = 2 * kPi * kPi;
    c.note(fmt::format("n^2*alpha: {:.6f} (n=10000), {:.6f} (n=9999); 2pi^2 = {:.6f}", even, odd, target));
    c.expect(std::abs(even / target - 1.0) <= 0.01, "even n^2*alpha not within 1% of 2pi^2");
    c.expect(std::abs(odd / target - 1.0) <= 0.01, "odd n^2*alpha not within 1% of 2pi^2");
    // Index of the residue subsequence: n = 4k (even), n = 2k + 1 (odd).
    const double k_even = 10000.0 / 4.0;
    const double k_odd = (9999.0 - 1.0) / 2.0;
    const double sub_even = kiss.alpha_at(10000) * k_even * k_even;
    const double sub_odd = kiss.alpha_at(9999) * k_odd * k_odd;
    c.note(fmt::format("alpha*k^2 with n = 4k: {:.6f} (pi^2/8 = {:.6f}); with n = 2k+1: {:.6f} (pi^2/2 = {:.6f})",
                       sub_even, kPi * kPi / 8, sub_odd, kPi * kPi / 2));
    c.expect(std::abs(sub_even / (kPi * kPi / 8) - 1.0) <= 0.01, "alpha*k^2 (n = 4k) not within 1% of pi^2/8");
    c.expect(std::abs(sub_odd / (kPi * kPi / 2) - 1.0) <= 0.01, "alpha*k^2 (n = 2k+1) not within 1% of pi^2/2");
    res.passed = c.passed();
}

// 9: chaos game against the doubling-game membership test.
void gasket_cross_check(CriterionResult& res)
{
    Checker c(res);
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const auto t0 = Clock::now();
    const GameConfig cfg{.kind = GameKind::Chaos, .r = 0.5, .board = tri, .seed = 1};
    const Orbit o = run_orbit(cfg, tri.center(), 51000, 1000);
    std::size_t outside = 0;
    for (const Point2& p : o.retained()) {
        if (!gasket_membership(p, tri, 20, 1e-6)) {
            ++outside;
        }
    }
    const bool centroid_in = gasket_membership(tri.center(), tri, 20, 1e-6);
    const double elapsed = seconds_since(t0);
    c.note(fmt::format("{} points checked, {} rejected; centroid member: {}; runtime {:.3f} s", o.retained().size(),
                       outside, centroid_in, elapsed));
    c.expect(outside == 0, fmt::format("{} chaos-game points failed the membership test", outside));
    c.expect(!centroid_in, "centroid survived 20 doubling steps");
    c.expect(elapsed < 2.0, fmt::format("runtime {:.2f} s >= 2 s", elapsed));
    res.passed = c.passed();
}

// 10: basin symmetry and parallel/serial agreement.
void basin_symmetry(CriterionResult& res)
{
    Checker c(res);
    double single_thread_time = 0.0;

    {
        BasinRequest req;
        req.board = RegularPolygon::unit_triangle();
        req.r = 0.5;
        req.viewport = Viewport::square(req.board.center(), 7.0, 256, 256);
        req.threads = 1;
        const auto t0 = Clock::now();
        const BasinRaster serial = render_basins(req);
        const SymmetryReport rep = symmetry_report(serial, 10000, 7);
        single_thread_time += seconds_since(t0);

        req.threads = 0;
        const BasinRaster parallel = render_basins(req);
        c.expect(parallel.labels == serial.labels, "n=3 parallel render differs from serial render");
        c.expect(serial.count(kUnresolved) == 0, fmt::format("n=3 render has {} unresolved pixels", serial.count(kUnresolved)));
        c.expect(serial.present_labels().size() == 2, "n=3 render does not show both basins");

        for (const auto& e : rep.elements) {
            const bool want_identity = !e.reflection;
            const std::vector<Label> swap = {1, 0};
            const bool perm_ok = want_identity ? e.is_identity() : e.observed == swap;
            c.expect(perm_ok && e.consistent(), fmt::format("n=3 {}: unexpected permutation", e.name));
            c.expect(e.violation_fraction <= 0.01,
                     fmt::format("n=3 {}: {:.2f}% violations", e.name, 100 * e.violation_fraction));
            c.note(fmt::format("n=3 {}: {} with {:.3f}% violations over {} samples", e.name,
                               want_identity ? "identity" : "swap", 100 * e.violation_fraction, e.samples));
        }
    }
    {
        BasinRequest req;
        req.board = RegularPolygon(6, 1.0);
        req.r = kissing_ratio(6);
        req.viewport = Viewport::square(req.board.center(), 10.0, 256, 256);
        req.threads = 1;
        const auto t0 = Clock::now();
        const BasinRaster serial = render_basins(req);
        const SymmetryReport rep = symmetry_report(serial, 10000, 11);
        single_thread_time += seconds_since(t0);

        req.threads = 0;
        const BasinRaster parallel = render_basins(req);
        c.expect(parallel.labels == serial.labels, "n=6 parallel render differs from serial render");
        c.expect(serial.present_labels().size() == 3, "n=6 render does not show three basins");

        const SymmetryElement& half_turn = rep.rotation(3);
        const SymmetryElement& sixth_turn = rep.rotation(1);
        c.expect(half_turn.is_identity() && half_turn.consistent(), "n=6 rotation by pi does not fix every basin");
        c.expect(cycle_lengths(sixth_turn.observed) == std::vector<int>{3} && sixth_turn.consistent(),
                 "n=6 rotation by pi/3 is not a 3-cycle");
        for (const auto* e : {&half_turn, &sixth_turn}) {
            c.expect(e->violation_fraction <= 0.01,
                     fmt::format("n=6 {}: {:.2f}% violations", e->name, 100 * e->violation_fraction));
            c.note(fmt::format("n=6 {}: permutation [{},{},{}] with {:.3f}% violations", e->name, e->observed[0],
                               e->observed[1], e->observed[2], 100 * e->violation_fraction));
        }
    }
    c.note(fmt::format("single-threaded render + symmetry runtime {:.2f} s", single_thread_time));
    c.expect(single_thread_time < 30.0, fmt::format("single-threaded runtime {:.1f} s >= 30 s", single_thread_time));
    res.passed = c.passed();
}

// 11: byte-identical reruns.
void determinism(CriterionResult& res)
{
    Checker c(res);
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / fmt::format("rotgame-verify-{}", std::random_device{}());
    fs::create_directories(dir);
    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::vector<char>(std::istreambuf_iterator<char>(in), {});
    };

    GasketOptions g;
    g.out = (dir / "gasket.ppm").string();
    const ImageResult g1 = run_gasket(g);
    write_outputs("gasket", to_json(g), g1, g.out);
    const auto first = slurp(g.out);
    write_outputs("gasket", to_json(g), run_gasket(g), g.out);
    c.expect(!first.empty() && first == slurp(g.out), "gasket rerun is not byte-identical");

    BasinsOptions b;
    b.size = "128x128";
    b.out = (dir / "basins.ppm").string();
    write_outputs("basins", to_json(b), run_basins(b), b.out);
    const auto bfirst = slurp(b.out);
    b.threads = 1;
    write_outputs("basins", to_json(b), run_basins(b), b.out);
    c.expect(!bfirst.empty() && bfirst == slurp(b.out), "basins rerun is not byte-identical");

    std::ifstream mf(manifest_path_for(g.out));
    const ReplayOutcome replay = replay_manifest(nlohmann::json::parse(mf), (dir / "replay.ppm").string());
    c.expect(replay.matches, "gasket manifest replay checksum mismatch");
    c.note(fmt::format("gasket sha256 {}, basins {} bytes, manifest replay {}", sha256_hex(g1.image), bfirst.size(),
                       replay.matches ? "matches" : "differs"));
    fs::remove_all(dir);
    res.passed = c.passed();
}

struct Entry {
    const char* id;
    const char* group;
    const char* title;
    bool supplementary;
    std::function<void(CriterionResult&)> run;
};

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = {
        {"1", "attractor", "triangle attractor coordinates", false, triangle_attractor},
        {"2", "tilt", "tilt-angle tables", false, tilt_tables},
        {"3", "scale", "scale factors", false, scale_check},
        {"4", "kissing", "kissing-ratio table and curves", false, kissing_table},
        {"4-digits", "kissing", "kissing-ratio table to one unit in the third digit", true, kissing_table_digits},
        {"5", "closed-form", "closed forms vs iteration", false, closed_form_vs_iteration},
        {"6", "periodic", "triangle periodic points", false, periodic_points},
        {"7", "pseudo-periodic", "pseudo-periodicity under the farthest vertex game", false,
         [](CriterionResult& r) { pseudo_periodic(r, GameKind::Fvg); }},
        {"7-urg", "pseudo-periodic", "pseudo-periodicity under the CCW rotation schedule", true,
         [](CriterionResult& r) { pseudo_periodic(r, GameKind::UrgCcw); }},
        {"8", "series", "tilt-angle limits", false, series_limits},
        {"8-asymptote", "series", "observed kissing-series asymptotics", true, series_asymptote},
        {"9", "gasket", "chaos game vs doubling membership", false, gasket_cross_check},
        {"10", "basins", "basin symmetry and parallel render", false, basin_symmetry},
        {"11", "determinism", "byte-identical reruns", false, determinism},
    };
    return entries;
}

}  // namespace

std::vector<std::string_view> acceptance_groups()
{
    std::vector<std::string_view> out;
    for (const auto& e : registry()) {
        if (out.empty() || out.back() != e.group) {
            out.emplace_back(e.group);
        }
    }
    return out;
}

std::vector<CriterionResult> run_acceptance(std::string_view group)
{
    if (!group.empty()) {
        const auto groups = acceptance_groups();
        if (std::find(groups.begin(), groups.end(), group) == groups.end()) {
            throw UsageError(fmt::format("--only: unknown group '{}'", group));
        }
    }
    std::vector<CriterionResult> results;
    for (const auto& e : registry()) {
        if (!group.empty() && group != e.group) {
            continue;
        }
        CriterionResult r;
        r.id = e.id;
        r.group = e.group;
        r.title = e.title;
        r.supplementary = e.supplementary;
        const auto t0 = Clock::now();
        try {
            e.run(r);
        } catch (const std::exception& ex) {
            r.passed = false;
            r.details.push_back(std::string("FAIL exception: ") + ex.what());
        }
        r.seconds = seconds_since(t0);
        results.push_back(std::move(r));
    }
    return results;
}

bool all_required_passed(const std::vector<CriterionResult>& results)
{
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.supplementary || r.passed; });
}

std::string format_report(const std::vector<CriterionResult>& results)
{
    std::string out;
    for (const auto& r : results) {
        out += fmt::format("[{}] {:<12} {}{} ({:.3f} s)\n", r.passed ? "PASS" : "FAIL", r.id, r.title,
                           r.supplementary ? " [supplementary]" : "", r.seconds);
        for (const auto& d : r.details) {
            out += "      " + d + "\n";
        }
    }
    std::size_t passed = 0;
    std::size_t required = 0;
    for (const auto& r : results) {
        if (!r.supplementary) {
            ++required;
            passed += r.passed ? 1 : 0;
        }
    }
    out += fmt::format("{}/{} required criteria passed\n", passed, required);
    return out;
}

nlohmann::json report_json(const std::vector<CriterionResult>& results)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"group", r.group},
                       {"title", r.title},
                       {"passed", r.passed},
                       {"supplementary", r.supplementary},
                       {"seconds", r.seconds},
                       {"details", r.details}});
    }
    return {{"tool", kToolName}, {"version", tool_version()}, {"passed", all_required_passed(results)}, {"criteria", arr}};
}

}  // namespace rotgame::cli
