#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "rotgame/analysis.hpp"
#include "rotgame/games.hpp"

namespace rotgame::cli {

using nlohmann::json;

std::string_view tool_version()
{
    return ROTGAME_VERSION;
}

namespace {

double parse_double(std::string_view text, std::string_view flag)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError(fmt::format("{}: '{}' is not a number", flag, text));
    }
    return v;
}

int parse_int(std::string_view text, std::string_view flag)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(fmt::format("{}: '{}' is not an integer", flag, text));
    }
    return v;
}

json viewport_json(const Viewport& vp)
{
    return {{"x_min", vp.x_min}, {"x_max", vp.x_max}, {"y_min", vp.y_min},
            {"y_max", vp.y_max}, {"width", vp.width}, {"height", vp.height}};
}

Rotation parse_direction(std::string_view text)
{
    if (text == "ccw") {
        return Rotation::Ccw;
    }
    if (text == "cw") {
        return Rotation::Cw;
    }
    if (text == "none") {
        return Rotation::None;
    }
    throw UsageError(fmt::format("--direction: expected ccw, cw, none or auto, got '{}'", text));
}

}  // namespace

double resolve_ratio(std::string_view text, int n, std::string_view flag)
{
    if (text == "kissing") {
        return kissing_ratio(n);
    }
    const double r = parse_double(text, flag);
    if (!(r > 0.0 && r < 1.0)) {
        throw UsageError(fmt::format("{}: contraction ratio must lie in (0, 1), got {}", flag, text));
    }
    return r;
}

std::pair<int, int> parse_size(std::string_view text)
{
    const auto x = text.find('x');
    if (x == std::string_view::npos) {
        throw UsageError(fmt::format("--size: expected WxH, got '{}'", text));
    }
    const int w = parse_int(text.substr(0, x), "--size");
    const int h = parse_int(text.substr(x + 1), "--size");
    if (w < 1 || h < 1) {
        throw UsageError(fmt::format("--size: dimensions must be positive, got '{}'", text));
    }
    return {w, h};
}

Viewport parse_viewport(std::string_view text, const RegularPolygon& board, int width, int height)
{
    if (text == "fit") {
        return Viewport::square(board.center(), 2.1 * board.circumradius(), width, height);
    }
    if (text.starts_with("square:")) {
        const double side = parse_double(text.substr(7), "--viewport");
        if (!(side > 0.0)) {
            throw UsageError("--viewport: square side must be positive");
        }
        return Viewport::square(board.center(), side, width, height);
    }
    if (text.starts_with("box:")) {
        std::string_view rest = text.substr(4);
        double v[4] = {};
        for (int i = 0; i < 4; ++i) {
            const auto comma = rest.find(',');
            if ((i < 3) == (comma == std::string_view::npos)) {
                throw UsageError("--viewport: box needs x_min,x_max,y_min,y_max");
            }
            v[i] = parse_double(rest.substr(0, comma), "--viewport");
            rest = i < 3 ? rest.substr(comma + 1) : std::string_view{};
        }
        const Viewport vp{v[0], v[1], v[2], v[3], width, height};
        if (!(vp.x_min < vp.x_max && vp.y_min < vp.y_max)) {
            throw UsageError("--viewport: box needs x_min < x_max and y_min < y_max");
        }
        return vp;
    }
    throw UsageError(fmt::format("--viewport: expected fit, square:S or box:x0,x1,y0,y1, got '{}'", text));
}

RegularPolygon make_board(int n, bool unit_side)
{
    if (n < 3) {
        throw UsageError(fmt::format("--n: polygon needs at least 3 vertices, got {}", n));
    }
    return unit_side ? RegularPolygon::unit_side(n) : RegularPolygon(n, 1.0);
}

ImageResult run_gasket(const GasketOptions& opt)
{
    const RegularPolygon board = make_board(opt.n, opt.unit_side);
    const double r = resolve_ratio(opt.r, opt.n);
    const auto [w, h] = parse_size(opt.size);
    const Viewport vp = parse_viewport(opt.viewport, board, w, h);
    const std::size_t transient = std::min(opt.transient, opt.steps);

    const GameConfig cfg{.kind = GameKind::Chaos, .r = r, .board = board, .seed = opt.seed};
    const Point2 start = board.center();
    const Orbit orbit = run_orbit(cfg, start, opt.steps, transient);

    Palette ink;
    ink.colors = {{0, 0, 0}};
    ImageResult result;
    result.image = points_to_image(orbit.retained(), vp, ink);
    result.params = {{"n", opt.n},
                     {"r", r},
                     {"circumradius", board.circumradius()},
                     {"steps", opt.steps},
                     {"transient", transient},
                     {"seed", opt.seed},
                     {"start", {start.x, start.y}},
                     {"prng", "mt19937_64, vertex = output mod n"},
                     {"viewport", viewport_json(vp)},
                     {"plotted_points", orbit.retained().size()}};
    return result;
}

ImageResult run_basins(const BasinsOptions& opt)
{
    const RegularPolygon board = make_board(opt.n, opt.unit_side);
    const double r = resolve_ratio(opt.r, opt.n);
    const auto [w, h] = parse_size(opt.size);
    if (opt.tol < 0.0 || !std::isfinite(opt.tol)) {
        throw UsageError("--tol: tolerance must be positive (0 selects the default)");
    }
    if (opt.max_iter < 1) {
        throw UsageError("--max-iter: must be at least 1");
    }

    BasinRequest req;
    req.board = board;
    req.r = r;
    req.viewport = parse_viewport(opt.viewport, board, w, h);
    req.tol = opt.tol;
    req.max_iter = opt.max_iter;
    req.circle_mask = opt.circle;
    req.threads = opt.threads;
    const BasinRaster raster = render_basins(req);

    Palette palette;
    try {
        palette = Palette::parse(opt.palette, raster.label_count);
        palette.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("--palette: {}", e.what()));
    }

    ImageResult result;
    try {
        result.image = raster_to_image(raster, palette);
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("--palette: {}", e.what()));
    }
    json counts = json::object();
    for (Label l = 0; l < raster.label_count; ++l) {
        counts[std::to_string(l)] = raster.count(l);
    }
    result.params = {{"n", opt.n},
                     {"r", r},
                     {"circumradius", board.circumradius()},
                     {"tol", raster.request.tol},
                     {"max_iter", opt.max_iter},
                     {"circle", opt.circle},
                     {"viewport", viewport_json(req.viewport)},
                     {"label_count", raster.label_count},
                     {"label_pixels", counts},
                     {"labels_present", raster.present_labels()},
                     {"unresolved_pixels", raster.count(kUnresolved)}};
    return result;
}

std::string run_attractor(const AttractorOptions& opt)
{
    AttractorGame game{};
    if (opt.game == "urg") {
        game = AttractorGame::Urg;
    } else if (opt.game == "fvg") {
        game = AttractorGame::Fvg;
    } else {
        throw UsageError(fmt::format("--game: expected urg or fvg, got '{}'", opt.game));
    }
    if (opt.precision < 1 || opt.precision > 17) {
        throw UsageError("--precision: must lie in 1..17");
    }
    const int prec = opt.precision;
    std::ostringstream out;

    if (!opt.sweep.empty()) {
        const auto dots = opt.sweep.find("..");
        if (dots == std::string::npos) {
            throw UsageError(fmt::format("--sweep: expected A..B, got '{}'", opt.sweep));
        }
        const int lo = parse_int(std::string_view(opt.sweep).substr(0, dots), "--sweep");
        const int hi = parse_int(std::string_view(opt.sweep).substr(dots + 2), "--sweep");
        if (lo < 3 || hi < lo) {
            throw UsageError(fmt::format("--sweep: need 3 <= A <= B, got '{}'", opt.sweep));
        }
        if (game == AttractorGame::Urg) {
            out << "n,r,alpha,lambda\n";
        } else {
            out << "n,r,alpha,alpha_formula,lambda\n";
        }
        for (int n = lo; n <= hi; ++n) {
            const double r = resolve_ratio(opt.r, n);
            if (game == AttractorGame::Urg) {
                out << fmt::format("{},{:.{}f},{:.{}f},{:.{}f}\n", n, r, prec, alpha_urg(n, r), prec,
                                   lambda_urg(n, r), prec);
            } else {
                out << fmt::format("{},{:.{}f},{:.{}f},{:.{}f},{:.{}f}\n", n, r, prec, alpha_fvg(n, r), prec,
                                   alpha_fvg_formula(n, r), prec, lambda_fvg(n, r), prec);
            }
        }
        return out.str();
    }

    const RegularPolygon board = make_board(opt.n, opt.unit_side);
    const double r = resolve_ratio(opt.r, opt.n);
    Rotation dir{};
    if (opt.direction == "auto") {
        dir = (game == AttractorGame::Fvg && opt.n % 2 == 0) ? Rotation::None : Rotation::Ccw;
    } else {
        dir = parse_direction(opt.direction);
    }
    AttractorSpec spec;
    try {
        spec = game == AttractorGame::Urg ? attractor_urg(board, r, dir) : attractor_fvg(board, r, dir);
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("--direction: {}", e.what()));
    }

    out << "game,n,r,k_n,direction,alpha,lambda,attractors\n";
    out << fmt::format("{},{},{:.{}f},{:.{}f},{},{:.{}f},{:.{}f},{}\n", opt.game, opt.n, r, prec,
                       kissing_ratio(opt.n), prec, to_string(dir), spec.alpha, prec, spec.lambda, prec,
                       spec.attractor_count());
    out << "\npoint,label,x,y,next,target_vertex\n";
    for (std::size_t k = 0; k < spec.points.size(); ++k) {
        out << fmt::format("{},{},{:.{}f},{:.{}f},{},{}\n", k, spec.labels[k], spec.points[k].x, prec,
                           spec.points[k].y, prec, spec.successor[k], spec.target_vertex[k]);
    }
    return out.str();
}

json to_json(const GasketOptions& opt)
{
    return {{"n", opt.n},           {"r", opt.r},       {"steps", opt.steps},
            {"transient", opt.transient}, {"seed", opt.seed}, {"viewport", opt.viewport},
            {"size", opt.size},     {"unit_side", opt.unit_side}, {"out", opt.out}};
}

json to_json(const BasinsOptions& opt)
{
    return {{"n", opt.n},
            {"r", opt.r},
            {"viewport", opt.viewport},
            {"size", opt.size},
            {"tol", opt.tol},
            {"max_iter", opt.max_iter},
            {"palette", opt.palette},
            {"circle", opt.circle},
            {"unit_side", opt.unit_side},
            {"out", opt.out}};
}

GasketOptions gasket_options_from_json(const json& j)
{
    GasketOptions o;
    o.n = j.at("n").get<int>();
    o.r = j.at("r").get<std::string>();
    o.steps = j.at("steps").get<std::size_t>();
    o.transient = j.at("transient").get<std::size_t>();
    o.seed = j.at("seed").get<std::uint64_t>();
    o.viewport = j.at("viewport").get<std::string>();
    o.size = j.at("size").get<std::string>();
    o.unit_side = j.at("unit_side").get<bool>();
    o.out = j.at("out").get<std::string>();
    return o;
}

BasinsOptions basins_options_from_json(const json& j)
{
    BasinsOptions o;
    o.n = j.at("n").get<int>();
    o.r = j.at("r").get<std::string>();
    o.viewport = j.at("viewport").get<std::string>();
    o.size = j.at("size").get<std::string>();
    o.tol = j.at("tol").get<double>();
    o.max_iter = j.at("max_iter").get<std::int64_t>();
    o.palette = j.at("palette").get<std::string>();
    o.circle = j.at("circle").get<bool>();
    o.unit_side = j.at("unit_side").get<bool>();
    o.out = j.at("out").get<std::string>();
    return o;
}

std::string sha256_hex(std::span<const std::uint8_t> bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

json make_manifest(std::string_view command, const json& options, const ImageResult& result,
                   const std::string& out_path)
{
    return {{"tool", kToolName},
            {"version", tool_version()},
            {"command", command},
            {"options", options},
            {"resolved", result.params},
            {"seed", result.params.value("seed", std::uint64_t{0})},
            {"outputs", json::array({{{"path", out_path},
                                      {"bytes", result.image.size()},
                                      {"sha256", sha256_hex(result.image)}}})}};
}

std::string manifest_path_for(const std::string& out_path)
{
    return out_path + ".manifest.json";
}

void write_outputs(std::string_view command, const json& options, const ImageResult& result,
                   const std::string& out_path)
{
    write_file(out_path, result.image);
    const std::string text = make_manifest(command, options, result, out_path).dump(2) + "\n";
    write_file(manifest_path_for(out_path),
               std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

ReplayOutcome replay_manifest(const json& manifest, const std::string& out_override)
{
    const std::string command = manifest.at("command").get<std::string>();
    const json& options = manifest.at("options");
    ReplayOutcome outcome;
    outcome.expected_sha256 = manifest.at("outputs").at(0).at("sha256").get<std::string>();

    ImageResult result;
    std::string recorded_out;
    if (command == "gasket") {
        GasketOptions o = gasket_options_from_json(options);
        recorded_out = o.out;
        result = run_gasket(o);
    } else if (command == "basins") {
        BasinsOptions o = basins_options_from_json(options);
        recorded_out = o.out;
        result = run_basins(o);
    } else {
        throw UsageError(fmt::format("manifest: unknown command '{}'", command));
    }
    outcome.out_path = out_override.empty() ? recorded_out : out_override;
    outcome.actual_sha256 = sha256_hex(result.image);
    outcome.matches = outcome.actual_sha256 == outcome.expected_sha256;
    write_file(outcome.out_path, result.image);
    return outcome;
}

}  // namespace rotgame::cli
