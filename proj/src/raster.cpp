#include "rotgame/raster.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace rotgame {

void Palette::validate() const
{
    std::vector<Rgb> all = colors;
    all.push_back(unresolved);
    all.push_back(background);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == all[j]) {
                throw std::invalid_argument("palette colors must be pairwise distinct");
            }
        }
    }
}

Palette Palette::grays(int count)
{
    Palette p;
    for (int i = 0; i < count; ++i) {
        // Spread over [40, 220]; a single label gets the light end.
        const int level = count == 1 ? 220 : 220 - (180 * i) / (count - 1);
        const auto v = static_cast<std::uint8_t>(level);
        p.colors.push_back({v, v, v});
    }
    p.unresolved = {200, 30, 30};
    return p;
}

Palette Palette::vivid(int count)
{
    static constexpr Rgb base[] = {
        {31, 119, 180}, {255, 127, 14}, {44, 160, 44}, {148, 103, 189}, {140, 86, 75},
        {227, 119, 194}, {127, 127, 127}, {188, 189, 34}, {23, 190, 207}, {57, 59, 121},
    };
    Palette p;
    for (int i = 0; i < count; ++i) {
        Rgb c = base[i % std::size(base)];
        // Darken repeats so colors stay distinct past the base table.
        const int round = i / static_cast<int>(std::size(base));
        c.r = static_cast<std::uint8_t>(c.r * 4 / (4 + round));
        c.g = static_cast<std::uint8_t>(c.g * 4 / (4 + round));
        c.b = static_cast<std::uint8_t>(c.b * 4 / (4 + round));
        p.colors.push_back(c);
    }
    p.unresolved = {255, 0, 0};
    return p;
}

Palette Palette::parse(std::string_view spec, int count)
{
    if (spec == "gray" || spec == "grey") {
        return grays(count);
    }
    if (spec == "vivid") {
        return vivid(count);
    }
    Palette p;
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        std::string_view item = spec.substr(0, comma);
        if (!item.empty() && item.front() == '#') {
            item.remove_prefix(1);
        }
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value, 16);
        if (item.size() != 6 || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw std::invalid_argument("palette entry '" + std::string(item) + "' is not an rrggbb hex color");
        }
        p.colors.push_back({static_cast<std::uint8_t>(value >> 16), static_cast<std::uint8_t>((value >> 8) & 0xff),
                            static_cast<std::uint8_t>(value & 0xff)});
        if (comma == std::string_view::npos) {
            break;
        }
        spec.remove_prefix(comma + 1);
    }
    if (static_cast<int>(p.colors.size()) < count) {
        throw std::invalid_argument("palette lists " + std::to_string(p.colors.size()) + " colors for " +
                                    std::to_string(count) + " labels");
    }
    // Unresolved takes the first reserved color the list leaves free.
    for (const Rgb candidate : {Rgb{255, 0, 0}, Rgb{255, 0, 255}, Rgb{0, 255, 255}, Rgb{255, 255, 0}}) {
        if (std::find(p.colors.begin(), p.colors.end(), candidate) == p.colors.end()) {
            p.unresolved = candidate;
            break;
        }
    }
    p.validate();
    return p;
}

std::string pixmap_header(int width, int height)
{
    return "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
}

namespace {

Bytes blank_image(int width, int height, const Rgb& fill)
{
    const std::string header = pixmap_header(width, height);
    Bytes out(header.begin(), header.end());
    const auto pixels = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    out.reserve(out.size() + 3 * pixels);
    for (std::size_t i = 0; i < pixels; ++i) {
        out.push_back(fill.r);
        out.push_back(fill.g);
        out.push_back(fill.b);
    }
    return out;
}

}  // namespace

Bytes raster_to_image(const BasinRaster& raster, const Palette& palette)
{
    for (const Label l : raster.present_labels()) {
        if (static_cast<std::size_t>(l) >= palette.colors.size()) {
            throw std::invalid_argument("palette has no color for label " + std::to_string(l));
        }
    }
    const int w = raster.width();
    const int h = raster.height();
    Bytes out = blank_image(w, h, palette.background);
    const std::size_t offset = out.size() - 3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    for (std::size_t i = 0; i < raster.labels.size(); ++i) {
        const Label l = raster.labels[i];
        const Rgb c = l >= 0 ? palette.colors[static_cast<std::size_t>(l)]
                             : (l == kUnresolved ? palette.unresolved : palette.background);
        out[offset + 3 * i] = c.r;
        out[offset + 3 * i + 1] = c.g;
        out[offset + 3 * i + 2] = c.b;
    }
    return out;
}

Bytes points_to_image(std::span<const Point2> points, const Viewport& viewport, const Palette& palette)
{
    viewport.validate();
    if (palette.colors.empty()) {
        throw std::invalid_argument("palette has no color for label 0");
    }
    Bytes out = blank_image(viewport.width, viewport.height, palette.background);
    const std::size_t offset =
        out.size() - 3 * static_cast<std::size_t>(viewport.width) * static_cast<std::size_t>(viewport.height);
    const Rgb ink = palette.colors.front();
    for (const Point2& p : points) {
        int col = 0;
        int row = 0;
        if (!viewport.to_pixel(p, col, row)) {
            continue;
        }
        const std::size_t i = offset + 3 * (static_cast<std::size_t>(row) * viewport.width + col);
        out[i] = ink.r;
        out[i + 1] = ink.g;
        out[i + 2] = ink.b;
    }
    return out;
}

PixmapHeader parse_pixmap_header(std::span<const std::uint8_t> bytes)
{
    std::size_t pos = 0;
    auto fail = [](const char* why) { throw std::invalid_argument(std::string("bad pixmap header: ") + why); };
    auto skip_space = [&] {
        while (pos < bytes.size() && std::isspace(bytes[pos])) {
            ++pos;
        }
    };
    auto read_int = [&] {
        skip_space();
        int v = 0;
        const auto* first = reinterpret_cast<const char*>(bytes.data()) + pos;
        const auto* last = reinterpret_cast<const char*>(bytes.data()) + bytes.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first) {
            fail("expected an integer");
        }
        pos += static_cast<std::size_t>(ptr - first);
        return v;
    };
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        fail("missing P6 magic");
    }
    pos = 2;
    PixmapHeader h;
    h.width = read_int();
    h.height = read_int();
    h.maxval = read_int();
    if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
        fail("missing whitespace after maxval");
    }
    h.data_offset = pos + 1;
    const auto expected = 3 * static_cast<std::size_t>(h.width) * static_cast<std::size_t>(h.height);
    if (bytes.size() - h.data_offset != expected) {
        fail("pixel data length does not match dimensions");
    }
    return h;
}

std::size_t count_pixels_not(std::span<const std::uint8_t> image, const Rgb& color)
{
    const PixmapHeader h = parse_pixmap_header(image);
    std::size_t count = 0;
    for (std::size_t i = h.data_offset; i + 2 < image.size(); i += 3) {
        if (image[i] != color.r || image[i + 1] != color.g || image[i + 2] != color.b) {
            ++count;
        }
    }
    return count;
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace rotgame
