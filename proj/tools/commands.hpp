#pragma once

// Command implementations behind the rotgame CLI. Each command is a plain
// function of its options so tests and the verifier can call them directly.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "rotgame/basins.hpp"
#include "rotgame/geometry.hpp"
#include "rotgame/raster.hpp"

namespace rotgame::cli {

inline constexpr std::string_view kToolName = "rotgame";
std::string_view tool_version();

/// Bad flag value. The message names the flag; the CLI exits with code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "kissing" or a number in (0, 1).
double resolve_ratio(std::string_view text, int n, std::string_view flag = "--r");
/// "WxH", e.g. "256x256".
std::pair<int, int> parse_size(std::string_view text);
/// "fit", "square:S" (centered on the board) or "box:x0,x1,y0,y1".
Viewport parse_viewport(std::string_view text, const RegularPolygon& board, int width, int height);
RegularPolygon make_board(int n, bool unit_side);

struct GasketOptions {
    int n{3};
    std::string r{"0.5"};
    std::size_t steps{50000};
    std::size_t transient{1000};
    std::uint64_t seed{1};
    std::string viewport{"fit"};
    std::string size{"512x512"};
    bool unit_side{false};
    std::string out;
};

struct BasinsOptions {
    int n{3};
    std::string r{"kissing"};
    std::string viewport{"square:7"};
    std::string size{"256x256"};
    double tol{0.0};
    std::int64_t max_iter{100000};
    std::string palette{"gray"};
    bool circle{false};
    unsigned threads{0};
    bool unit_side{false};
    std::string out;
};

struct AttractorOptions {
    std::string game{"urg"};
    int n{3};
    std::string r{"kissing"};
    std::string direction{"auto"};
    std::string sweep;  // "3..N"
    bool unit_side{false};
    int precision{6};
};

struct ImageResult {
    Bytes image;
    nlohmann::json params;  // resolved parameter set for the manifest
};

ImageResult run_gasket(const GasketOptions& opt);
ImageResult run_basins(const BasinsOptions& opt);
/// Comma-separated table text.
std::string run_attractor(const AttractorOptions& opt);

nlohmann::json to_json(const GasketOptions& opt);
nlohmann::json to_json(const BasinsOptions& opt);
GasketOptions gasket_options_from_json(const nlohmann::json& j);
BasinsOptions basins_options_from_json(const nlohmann::json& j);

std::string sha256_hex(std::span<const std::uint8_t> bytes);

/// Manifest written next to every image: command, options, resolved
/// parameters, seed, tool version and the image checksum.
nlohmann::json make_manifest(std::string_view command, const nlohmann::json& options, const ImageResult& result,
                             const std::string& out_path);
std::string manifest_path_for(const std::string& out_path);

/// Writes the image and its manifest.
void write_outputs(std::string_view command, const nlohmann::json& options, const ImageResult& result,
                   const std::string& out_path);

struct ReplayOutcome {
    bool matches{false};
    std::string expected_sha256;
    std::string actual_sha256;
    std::string out_path;
};

/// Re-runs the command recorded in a manifest. The image is written to
/// `out_override` when non-empty, else to the recorded path.
ReplayOutcome replay_manifest(const nlohmann::json& manifest, const std::string& out_override);

}  // namespace rotgame::cli
