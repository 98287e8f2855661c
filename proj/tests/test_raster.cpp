#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "rotgame/games.hpp"
#include "rotgame/raster.hpp"

using namespace rotgame;

namespace {

BasinRaster raster_of(std::vector<Label> labels, int width, int height, int label_count)
{
    BasinRaster r;
    r.request.viewport = Viewport::square({0, 0}, 1.0, width, height);
    r.labels = std::move(labels);
    r.iterations.assign(r.labels.size(), 0);
    r.label_count = label_count;
    return r;
}

std::string as_text(const Bytes& b) { return {b.begin(), b.end()}; }

}  // namespace

TEST_CASE("smallest image")
{
    Palette p;
    p.colors = {{255, 255, 255}};
    const Bytes img = raster_to_image(raster_of({0}, 1, 1, 1), p);
    CHECK(as_text(img) == std::string("P6\n1 1\n255\n\xff\xff\xff", 14));
}

TEST_CASE("pixel layout and size arithmetic")
{
    Palette p;
    p.colors = {{1, 2, 3}, {4, 5, 6}};
    const Bytes img = raster_to_image(raster_of({0, 1}, 2, 1, 2), p);
    const std::string header = pixmap_header(2, 1);
    REQUIRE(img.size() == header.size() + 6);
    CHECK(Bytes(img.begin() + static_cast<long>(header.size()), img.end()) == Bytes{1, 2, 3, 4, 5, 6});

    BasinRequest req;
    req.viewport = Viewport::square({0, 0}, 7.0, 64, 64);
    const Bytes basin = raster_to_image(render_basins(req), Palette::grays(2));
    CHECK(pixmap_header(64, 64) == "P6\n64 64\n255\n");
    CHECK(basin.size() == 13 + 64 * 64 * 3);
}

TEST_CASE("reserved colors")
{
    Palette p = Palette::grays(2);
    const Bytes img = raster_to_image(raster_of({kUnresolved, kMasked, 0, 1}, 2, 2, 2), p);
    const std::size_t off = pixmap_header(2, 2).size();
    CHECK(Rgb{img[off], img[off + 1], img[off + 2]} == p.unresolved);
    CHECK(Rgb{img[off + 3], img[off + 4], img[off + 5]} == p.background);
}

TEST_CASE("palette underflow names the label")
{
    Palette p;
    p.colors = {{0, 0, 0}};
    try {
        raster_to_image(raster_of({0, 3}, 2, 1, 4), p);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("label 3") != std::string::npos);
    }
}

TEST_CASE("palettes")
{
    for (int count = 1; count <= 12; ++count) {
        CHECK_NOTHROW(Palette::grays(count).validate());
        CHECK_NOTHROW(Palette::vivid(count).validate());
    }
    const Palette g = Palette::grays(2);
    CHECK(g.colors[0].r > g.colors[1].r);
    const Palette hex = Palette::parse("ff0000,00ff00", 2);
    CHECK(hex.colors == std::vector<Rgb>{{255, 0, 0}, {0, 255, 0}});
    CHECK(hex.unresolved == Rgb{255, 0, 255});
    CHECK_THROWS_AS(Palette::parse("ff0000,ff0000", 2), std::invalid_argument);
    CHECK_THROWS_AS(Palette::parse("zz0000", 1), std::invalid_argument);
    CHECK_THROWS_AS(Palette::parse("ff0000", 2), std::invalid_argument);
    CHECK(Palette::parse("gray", 3).colors.size() == 3);
}

TEST_CASE("point clouds")
{
    const Viewport v = Viewport::square({0, 0}, 2.0, 10, 10);
    Palette ink;
    ink.colors = {{0, 0, 0}};
    const Bytes empty = points_to_image({}, v, ink);
    CHECK(count_pixels_not(empty, ink.background) == 0);

    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const std::vector<Point2> vs(tri.vertices().begin(), tri.vertices().end());
    Viewport tight;
    tight.x_min = vs[1].x;
    tight.x_max = vs[2].x;
    tight.y_min = std::min(vs[1].y, vs[2].y);
    tight.y_max = vs[0].y;
    tight.width = 16;
    tight.height = 16;
    CHECK(count_pixels_not(points_to_image(vs, tight, ink), ink.background) == 3);

    const std::vector<Point2> outside = {{5, 5}, {-3, 0}};
    CHECK(count_pixels_not(points_to_image(outside, v, ink), ink.background) == 0);
}

TEST_CASE("chaos game occupancy matches the subdivision gasket")
{
    const RegularPolygon tri = RegularPolygon::unit_triangle();
    const Viewport v = Viewport::square(tri.center(), 2.1 * tri.circumradius(), 256, 256);
    Palette ink;
    ink.colors = {{0, 0, 0}};

    const GameConfig cfg{.kind = GameKind::Chaos, .r = 0.5, .board = tri, .seed = 1};
    const Orbit o = run_orbit(cfg, tri.center(), 51000, 1000);
    const auto game_pixels = static_cast<double>(count_pixels_not(points_to_image(o.retained(), v, ink), ink.background));

    std::vector<Point2> reference;
    oracle::subdivide(tri.vertex(0), tri.vertex(1), tri.vertex(2), 8, reference);
    const auto ref_pixels = static_cast<double>(count_pixels_not(points_to_image(reference, v, ink), ink.background));

    MESSAGE("occupied pixels: chaos game " << game_pixels << ", subdivision " << ref_pixels);
    CHECK(std::abs(game_pixels / ref_pixels - 1) <= 0.15);
}

TEST_CASE("header round trip")
{
    for (const auto& [w, h] : std::vector<std::pair<int, int>>{{1, 1}, {7, 3}, {640, 480}}) {
        const std::string header = pixmap_header(w, h);
        Bytes img(header.begin(), header.end());
        img.resize(img.size() + static_cast<std::size_t>(w) * h * 3, 0);
        const PixmapHeader hd = parse_pixmap_header(img);
        CHECK(hd.width == w);
        CHECK(hd.height == h);
        CHECK(hd.maxval == 255);
        CHECK(hd.data_offset == header.size());
    }
    const std::string bad = "P5\n1 1\n255\n...";
    CHECK_THROWS_AS(parse_pixmap_header(Bytes(bad.begin(), bad.end())), std::invalid_argument);
    const std::string truncated = "P6\n2 2\n255\n...";
    CHECK_THROWS_AS(parse_pixmap_header(Bytes(truncated.begin(), truncated.end())), std::invalid_argument);
}
