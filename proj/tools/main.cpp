#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "acceptance.hpp"
#include "commands.hpp"

namespace {

using namespace rotgame::cli;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void add_ratio(CLI::App* cmd, std::string& r)
{
    cmd->add_option("--r", r, "contraction ratio in (0,1), or 'kissing'")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chaos, rotation and farthest-vertex games on regular polygons"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    GasketOptions gasket;
    gasket.out = "gasket.ppm";
    auto* g = app.add_subcommand("gasket", "chaos-game point cloud (P6 image + manifest)");
    g->add_option("--n", gasket.n, "number of vertices")->capture_default_str();
    add_ratio(g, gasket.r);
    g->add_option("--steps", gasket.steps, "orbit length")->capture_default_str();
    g->add_option("--transient", gasket.transient, "leading points not drawn")->capture_default_str();
    g->add_option("--seed", gasket.seed, "PRNG seed")->capture_default_str();
    g->add_option("--viewport", gasket.viewport, "fit | square:S | box:x0,x1,y0,y1")->capture_default_str();
    g->add_option("--size", gasket.size, "WxH pixels")->capture_default_str();
    g->add_flag("--unit-side", gasket.unit_side, "unit side length instead of unit circumradius");
    g->add_option("--out", gasket.out, "output image path")->capture_default_str();

    AttractorOptions attractor;
    auto* a = app.add_subcommand("attractor", "closed-form attractor table (CSV on stdout)");
    a->add_option("--game", attractor.game, "urg | fvg")->capture_default_str();
    a->add_option("--n", attractor.n, "number of vertices")->capture_default_str();
    add_ratio(a, attractor.r);
    a->add_option("--direction", attractor.direction, "ccw | cw | auto")->capture_default_str();
    a->add_option("--sweep", attractor.sweep, "3..N: tilt-angle table over n");
    a->add_option("--precision", attractor.precision, "digits after the decimal point")->capture_default_str();
    a->add_flag("--unit-side", attractor.unit_side, "unit side length instead of unit circumradius");

    BasinsOptions basins;
    basins.out = "basins.ppm";
    auto* b = app.add_subcommand("basins", "basins of attraction (P6 image + manifest)");
    b->add_option("--n", basins.n, "number of vertices")->capture_default_str();
    add_ratio(b, basins.r);
    b->add_option("--viewport", basins.viewport, "fit | square:S | box:x0,x1,y0,y1")->capture_default_str();
    b->add_option("--size", basins.size, "WxH pixels")->capture_default_str();
    b->add_option("--tol", basins.tol, "capture distance; 0 selects 1e-9 times the circumradius")->capture_default_str();
    b->add_option("--max-iter", basins.max_iter, "iterations before a pixel is unresolved")->capture_default_str();
    b->add_option("--palette", basins.palette, "gray | vivid | comma-separated hex colors")->capture_default_str();
    b->add_flag("--circle", basins.circle, "mask pixels outside the inscribed disc");
    b->add_option("--threads", basins.threads, "worker threads; 0 uses hardware concurrency")->capture_default_str();
    b->add_flag("--unit-side", basins.unit_side, "unit side length instead of unit circumradius");
    b->add_option("--out", basins.out, "output image path")->capture_default_str();

    std::string only;
    bool json = false;
    auto* v = app.add_subcommand("verify", "run the acceptance criteria");
    v->add_option("--only", only, "run one group only");
    v->add_flag("--json", json, "machine-readable report");

    std::string manifest_path;
    std::string replay_out;
    auto* rp = app.add_subcommand("replay", "re-run a manifest and compare checksums");
    rp->add_option("manifest", manifest_path, "manifest JSON file")->required();
    rp->add_option("--out", replay_out, "write the image here instead of the recorded path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*g) {
            write_outputs("gasket", to_json(gasket), run_gasket(gasket), gasket.out);
            std::cout << gasket.out << '\n';
        } else if (*a) {
            std::cout << run_attractor(attractor);
        } else if (*b) {
            write_outputs("basins", to_json(basins), run_basins(basins), basins.out);
            std::cout << basins.out << '\n';
        } else if (*v) {
            const auto results = run_acceptance(only);
            if (json) {
                std::cout << report_json(results).dump(2) << '\n';
            } else {
                std::cout << format_report(results);
            }
            return all_required_passed(results) ? kExitOk : kExitFailure;
        } else if (*rp) {
            std::ifstream in(manifest_path);
            if (!in) {
                throw UsageError(fmt::format("manifest: cannot open '{}'", manifest_path));
            }
            nlohmann::json manifest;
            try {
                manifest = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(fmt::format("manifest: {}", e.what()));
            }
            const ReplayOutcome outcome = replay_manifest(manifest, replay_out);
            std::cout << fmt::format("{} {}\nexpected {}\nactual   {}\n", outcome.matches ? "MATCH" : "MISMATCH",
                                     outcome.out_path, outcome.expected_sha256, outcome.actual_sha256);
            return outcome.matches ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}
