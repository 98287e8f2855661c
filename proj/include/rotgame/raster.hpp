#pragma once

// Binary portable pixmap (P6) output for basin rasters and point clouds.
// Layout: "P6\n<width> <height>\n255\n" followed by rows top to bottom of
// 3-byte RGB pixels.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotgame/basins.hpp"
#include "rotgame/geometry.hpp"

namespace rotgame {

struct Rgb {
    std::uint8_t r{0};
    std::uint8_t g{0};
    std::uint8_t b{0};
    constexpr bool operator==(const Rgb&) const = default;
};

struct Palette {
    std::vector<Rgb> colors;              // colors[label]
    Rgb unresolved{255, 0, 0};
    Rgb background{255, 255, 255};

    /// Throws std::invalid_argument if any two colors coincide.
    void validate() const;

    /// `count` grays from light (label 0) to dark.
    static Palette grays(int count);
    /// Saturated hues, for many labels.
    static Palette vivid(int count);
    /// "gray", "vivid", or a comma-separated list of rrggbb hex colors.
    static Palette parse(std::string_view spec, int count);
};

using Bytes = std::vector<std::uint8_t>;

std::string pixmap_header(int width, int height);

Bytes raster_to_image(const BasinRaster& raster, const Palette& palette);

/// White background with a one-pixel dot (palette.colors[0]) at each point's
/// cell; points outside the viewport are dropped.
Bytes points_to_image(std::span<const Point2> points, const Viewport& viewport, const Palette& palette);

struct PixmapHeader {
    int width{0};
    int height{0};
    int maxval{0};
    std::size_t data_offset{0};
};

PixmapHeader parse_pixmap_header(std::span<const std::uint8_t> bytes);

/// Count of pixels in the image that differ from `color`.
std::size_t count_pixels_not(std::span<const std::uint8_t> image, const Rgb& color);

void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace rotgame
