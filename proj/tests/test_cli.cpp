#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "oracles.hpp"
#include "rotgame/analysis.hpp"

using namespace rotgame;
using namespace rotgame::cli;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

template <typename F>
std::string usage_message(F&& f)
{
    try {
        f();
    } catch (const UsageError& e) {
        return e.what();
    }
    return "";
}

struct TempDir {
    std::filesystem::path path;
    TempDir() : path(std::filesystem::temp_directory_path() / ("rotgame-test-" + std::to_string(std::random_device{}())))
    {
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("ratio flag")
{
    CHECK(resolve_ratio("kissing", 5) == kissing_ratio(5));
    CHECK(resolve_ratio("0.25", 3) == 0.25);
    CHECK(usage_message([] { resolve_ratio("1.5", 3); }).find("--r") != std::string::npos);
    CHECK(usage_message([] { resolve_ratio("abc", 3); }).find("--r") != std::string::npos);
    CHECK(usage_message([] { resolve_ratio("0", 3); }).find("--r") != std::string::npos);
}

TEST_CASE("size and viewport flags")
{
    CHECK(parse_size("256x128") == std::pair{256, 128});
    CHECK(usage_message([] { parse_size("0x3"); }).find("--size") != std::string::npos);
    CHECK(usage_message([] { parse_size("12"); }).find("--size") != std::string::npos);

    const RegularPolygon board(3, 1.0);
    const Viewport sq = parse_viewport("square:7", board, 10, 10);
    CHECK(sq.x_min == doctest::Approx(-3.5));
    CHECK(sq.y_max == doctest::Approx(3.5));
    const Viewport fit = parse_viewport("fit", board, 10, 10);
    CHECK(fit.x_max - fit.x_min == doctest::Approx(2.1));
    const Viewport box = parse_viewport("box:-1,2,-3,4", board, 10, 10);
    CHECK(box.x_min == -1);
    CHECK(box.y_max == 4);
    CHECK(usage_message([&] { parse_viewport("box:1,0,0,1", board, 10, 10); }).find("--viewport") != std::string::npos);
    CHECK(usage_message([&] { parse_viewport("circle:3", board, 10, 10); }).find("--viewport") != std::string::npos);
}

TEST_CASE("board flag")
{
    CHECK(make_board(3, false).circumradius() == 1.0);
    CHECK(make_board(3, true).circumradius() == doctest::Approx(oracle::kSqrt3 / 3));
    CHECK(usage_message([] { make_board(2, false); }).find("--n") != std::string::npos);
}

TEST_CASE("attractor sweep reproduces the tilt table")
{
    AttractorOptions opt;
    opt.sweep = "3..13";
    const auto rows = csv_rows(run_attractor(opt));
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"n", "r", "alpha", "lambda"});
    const char* expected[] = {"0.333473", "0.463648", "0.390713", "0.333473", "0.289632", "0.255495",
                              "0.203602", "0.169861", "0.146180", "0.128618", "0.108593"};
    for (int i = 0; i < 11; ++i) {
        CHECK(rows[i + 1][0] == std::to_string(i + 3));
        CHECK(rows[i + 1][2] == expected[i]);
    }

    AttractorOptions fvg;
    fvg.game = "fvg";
    fvg.sweep = "3..5";
    CHECK(csv_rows(run_attractor(fvg))[0] == std::vector<std::string>{"n", "r", "alpha", "alpha_formula", "lambda"});
}

TEST_CASE("attractor tables")
{
    AttractorOptions hex;
    hex.game = "fvg";
    hex.n = 6;
    hex.r = "0.6667";
    const auto rows = csv_rows(run_attractor(hex));
    REQUIRE(rows.size() >= 10);
    CHECK(rows[1][0] == "fvg");
    CHECK(std::stod(rows[1][5]) == 0.0);
    CHECK(rows[1][7] == "3");
    int points = 0;
    for (std::size_t i = 4; i < rows.size(); ++i) {
        points += rows[i].size() == 6 ? 1 : 0;
    }
    CHECK(points == 6);

    AttractorOptions tri;
    tri.n = 3;
    tri.r = "0.5";
    const auto t = csv_rows(run_attractor(tri));
    CHECK(t[1][6] == "0.377964");

    AttractorOptions bad;
    bad.game = "chaos";
    CHECK(usage_message([&] { run_attractor(bad); }).find("--game") != std::string::npos);
    bad = {};
    bad.game = "fvg";
    bad.n = 4;
    bad.direction = "ccw";
    CHECK(usage_message([&] { run_attractor(bad); }).find("--direction") != std::string::npos);
    bad = {};
    bad.sweep = "9..4";
    CHECK(usage_message([&] { run_attractor(bad); }).find("--sweep") != std::string::npos);
}

TEST_CASE("gasket command")
{
    GasketOptions opt;
    opt.steps = 0;
    opt.transient = 0;
    opt.size = "32x32";
    const ImageResult single = run_gasket(opt);
    CHECK(count_pixels_not(single.image, Rgb{255, 255, 255}) == 1);
    CHECK(single.params.at("r").get<double>() == 0.5);

    GasketOptions pent;
    pent.n = 5;
    pent.r = "kissing";
    pent.size = "64x64";
    pent.steps = 5000;
    const ImageResult p = run_gasket(pent);
    CHECK(p.params.at("r").get<double>() == doctest::Approx(kissing_ratio(5)));
    CHECK(count_pixels_not(p.image, Rgb{255, 255, 255}) > 100);

    GasketOptions bad;
    bad.r = "1.5";
    CHECK(usage_message([&] { run_gasket(bad); }).find("--r") != std::string::npos);
}

TEST_CASE("basins command")
{
    BasinsOptions one;
    one.size = "1x1";
    const ImageResult single = run_basins(one);
    CHECK(single.image.size() == pixmap_header(1, 1).size() + 3);

    BasinsOptions sq;
    sq.n = 4;
    sq.r = "0.4";
    sq.viewport = "square:15";
    sq.size = "32x32";
    const ImageResult img = run_basins(sq);
    CHECK(img.params.at("labels_present").size() == 2);

    BasinsOptions bad;
    bad.palette = "ffffff";
    CHECK(usage_message([&] { run_basins(bad); }).find("--palette") != std::string::npos);
    bad = {};
    bad.max_iter = 0;
    CHECK(usage_message([&] { run_basins(bad); }).find("--max-iter") != std::string::npos);
    bad = {};
    bad.tol = -1;
    CHECK(usage_message([&] { run_basins(bad); }).find("--tol") != std::string::npos);
}

TEST_CASE("manifests and replay")
{
    const TempDir dir;
    GasketOptions g;
    g.size = "64x64";
    g.steps = 3000;
    g.out = dir.file("g.ppm");
    const ImageResult first = run_gasket(g);
    write_outputs("gasket", to_json(g), first, g.out);

    std::ifstream mf(manifest_path_for(g.out));
    const nlohmann::json manifest = nlohmann::json::parse(mf);
    CHECK(manifest.at("command") == "gasket");
    CHECK(manifest.at("seed") == 1);
    CHECK(manifest.at("version") == std::string(tool_version()));
    CHECK(manifest.at("outputs")[0].at("sha256") == sha256_hex(first.image));
    CHECK(manifest.at("outputs")[0].at("bytes") == first.image.size());
    CHECK(gasket_options_from_json(manifest.at("options")).steps == 3000);

    const ReplayOutcome replay = replay_manifest(manifest, dir.file("again.ppm"));
    CHECK(replay.matches);
    std::ifstream a(g.out, std::ios::binary);
    std::ifstream b(dir.file("again.ppm"), std::ios::binary);
    CHECK(std::string(std::istreambuf_iterator<char>(a), {}) == std::string(std::istreambuf_iterator<char>(b), {}));

    BasinsOptions bo;
    bo.size = "24x24";
    bo.out = dir.file("b.ppm");
    write_outputs("basins", to_json(bo), run_basins(bo), bo.out);
    std::ifstream bm(manifest_path_for(bo.out));
    nlohmann::json bman = nlohmann::json::parse(bm);
    CHECK(basins_options_from_json(bman.at("options")).size == "24x24");
    CHECK(replay_manifest(bman, dir.file("b2.ppm")).matches);

    bman["outputs"][0]["sha256"] = std::string(64, '0');
    CHECK_FALSE(replay_manifest(bman, dir.file("b3.ppm")).matches);
}

TEST_CASE("sha256 test vectors")
{
    const std::string abc = "abc";
    const std::vector<std::uint8_t> bytes(abc.begin(), abc.end());
    CHECK(sha256_hex(bytes) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex({}) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
