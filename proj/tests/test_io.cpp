#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "io.hpp"

using namespace mimkit;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("mimkit_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("csv loading") {
    TempDir tmp;
    SUBCASE("three rows with -1/+1 labels") {
        write_file(tmp.file("a.csv"), "x,y,label\n1,2,1\n3,4,-1\n5,6,1\n");
        const auto d = load_csv(tmp.file("a.csv"), CsvOptions{});
        CHECK(d.size() == 3);
        CHECK(d.dimension() == 2);
        CHECK(d.mode() == LabelMode::Binary);
        CHECK(d.features(1) == std::vector<double>{3, 4});
        CHECK(d.label(1) == -1.0);
        CHECK(d.schema()[0].name == "x");
    }
    SUBCASE("0/1 labels are remapped to -1/+1") {
        write_file(tmp.file("b.csv"), "f,label\n0.5,0\n0.7,1\n");
        const auto d = load_csv(tmp.file("b.csv"), CsvOptions{});
        CHECK(d.label(0) == -1.0);
        CHECK(d.label(1) == 1.0);
    }
    SUBCASE("regression keeps raw scores") {
        write_file(tmp.file("c.csv"), "f,score\n1,346\n2,448\n");
        CsvOptions options;
        options.label_column = "score";
        options.mode = LabelMode::Regression;
        const auto d = load_csv(tmp.file("c.csv"), options);
        CHECK(d.label(0) == 346.0);
        CHECK(d.label(1) == 448.0);
    }
    SUBCASE("categorical columns are dictionary coded in first-appearance order") {
        write_file(tmp.file("d.csv"), "race,age,label\nWWH,18,1\nBLK,20,-1\nWWH,30,1\n");
        CsvOptions options;
        options.categorical_columns = {"race"};
        const auto d = load_csv(tmp.file("d.csv"), options);
        CHECK(d.schema()[0].kind == FeatureKind::Categorical);
        CHECK(d.schema()[0].categories == std::vector<std::string>{"WWH", "BLK"});
        CHECK(d.features(0)[0] == 0.0);
        CHECK(d.features(1)[0] == 1.0);
        CHECK(d.features(2)[0] == 0.0);
        const auto encoded = encode_categorical(d, 0);
        CHECK(encoded.features(0)[0] == 1.0);
        CHECK(encoded.features(1)[0] == 0.0);
        CHECK(encoded.features(2)[0] == 1.0);
    }
    SUBCASE("quoted fields") {
        write_file(tmp.file("q.csv"), "name,label\n\"a,b\",1\n\"c\"\"d\",-1\n");
        CsvOptions options;
        options.categorical_columns = {"name"};
        const auto d = load_csv(tmp.file("q.csv"), options);
        CHECK(d.schema()[0].categories == std::vector<std::string>{"a,b", "c\"d"});
    }
    SUBCASE("missing label column names the available ones") {
        write_file(tmp.file("e.csv"), "x,y\n1,2\n");
        try {
            load_csv(tmp.file("e.csv"), CsvOptions{});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.status() == Status::Parse);
            CHECK(std::string(e.what()).find("x, y") != std::string::npos);
        }
    }
    SUBCASE("unparseable cell reports row and column") {
        write_file(tmp.file("f.csv"), "x,label\n1,1\nfoo,-1\n");
        try {
            load_csv(tmp.file("f.csv"), CsvOptions{});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find(":3") != std::string::npos);   // line number
            CHECK(std::string(e.what()).find("'x'") != std::string::npos);  // column name
            CHECK(std::string(e.what()).find("foo") != std::string::npos);
        }
    }
    SUBCASE("mixed label alphabet is rejected") {
        write_file(tmp.file("g.csv"), "x,label\n1,0\n2,-1\n");
        try {
            load_csv(tmp.file("g.csv"), CsvOptions{});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("mixed label alphabet") != std::string::npos);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_csv(tmp.file("nope.csv"), CsvOptions{}), Error);
    }
}

TEST_CASE("pgm round trip") {
    TempDir tmp;
    GrayImage img;
    img.width = 3;
    img.height = 2;
    img.pixels = {0, 50, 100, 150, 200, 255};
    write_pgm(img, tmp.file("a.pgm"));
    const auto back = read_pgm(tmp.file("a.pgm"));
    CHECK(back.width == 3);
    CHECK(back.height == 2);
    CHECK(back.pixels == img.pixels);

    SUBCASE("comments and odd whitespace in the header") {
        write_file(tmp.file("b.pgm"), "P5 # magic\n# a comment\n 2\t1 \n255\n\x10\x20");
        const auto i = read_pgm(tmp.file("b.pgm"));
        CHECK(i.width == 2);
        CHECK(i.pixels == std::vector<double>{16, 32});
    }
    SUBCASE("wrong magic") {
        write_file(tmp.file("c.pgm"), "P2\n1 1\n255\n0\n");
        CHECK_THROWS_AS(read_pgm(tmp.file("c.pgm")), Error);
    }
    SUBCASE("truncated raster") {
        write_file(tmp.file("d.pgm"), "P5\n2 2\n255\nab");
        CHECK_THROWS_AS(read_pgm(tmp.file("d.pgm")), Error);
    }
}

TEST_CASE("image directory loading") {
    TempDir tmp;
    GrayImage a;
    a.width = 2;
    a.height = 2;
    a.pixels = {1, 2, 3, 4};
    write_pgm(a, tmp.file("a.pgm"));
    GrayImage b = a;
    b.pixels = {9, 8, 7, 6};
    write_pgm(b, tmp.file("b.pgm"));
    SUBCASE("two images flatten row-major") {
        write_file(tmp.file("manifest.txt"), "# happy/sad pair\na.pgm 1\nb.pgm -1\n");
        const auto loaded = load_image_dir(tmp.path.string(), tmp.file("manifest.txt"));
        CHECK(loaded.width == 2);
        CHECK(loaded.height == 2);
        CHECK(loaded.dataset.size() == 2);
        CHECK(loaded.dataset.dimension() == 4);
        CHECK(loaded.dataset.features(0) == std::vector<double>{1, 2, 3, 4});
        CHECK(loaded.dataset.label(1) == -1.0);
    }
    SUBCASE("missing file is named") {
        write_file(tmp.file("manifest.txt"), "a.pgm 1\nmissing.pgm -1\n");
        try {
            load_image_dir(tmp.path.string(), tmp.file("manifest.txt"));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("missing.pgm") != std::string::npos);
        }
    }
    SUBCASE("48x48 images flatten to 2304 features") {
        GrayImage big;
        big.width = 48;
        big.height = 48;
        big.pixels.assign(48 * 48, 0.0);
        for (std::size_t i = 0; i < big.pixels.size(); ++i) big.pixels[i] = i % 256;
        write_pgm(big, tmp.file("f1.pgm"));
        write_pgm(big, tmp.file("f2.pgm"));
        write_file(tmp.file("manifest.txt"), "f1.pgm 1\nf2.pgm 0\n");
        const auto loaded = load_image_dir(tmp.path.string(), tmp.file("manifest.txt"));
        CHECK(loaded.dataset.dimension() == 2304);
        CHECK(loaded.dataset.label(1) == -1.0); // 0/1 manifest labels remap
    }
    SUBCASE("dimension mismatch names the offender") {
        GrayImage c;
        c.width = 1;
        c.height = 1;
        c.pixels = {5};
        write_pgm(c, tmp.file("c.pgm"));
        write_file(tmp.file("manifest.txt"), "a.pgm 1\nc.pgm -1\n");
        try {
            load_image_dir(tmp.path.string(), tmp.file("manifest.txt"));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("c.pgm") != std::string::npos);
        }
    }
}

TEST_CASE("influence map rendering") {
    TempDir tmp;
    SUBCASE("pure blue anchor and channel-swap antisymmetry") {
        const std::vector<double> phi{0.5, 0.0, -0.25, 0.1};
        render_influence_map(phi, 2, 2, tmp.file("m.ppm"));
        const auto img = read_ppm(tmp.file("m.ppm"));
        // pixel 0: max positive -> pure blue
        CHECK(img.pixels[0] == 0);
        CHECK(img.pixels[1] == 0);
        CHECK(img.pixels[2] == 255);
        // pixel 2: negative -> red channel only
        CHECK(img.pixels[6] == 128);
        CHECK(img.pixels[8] == 0);

        std::vector<double> negated;
        for (double v : phi) negated.push_back(-v);
        render_influence_map(negated, 2, 2, tmp.file("n.ppm"));
        const auto swapped = read_ppm(tmp.file("n.ppm"));
        for (std::size_t p = 0; p < 4; ++p) {
            CHECK(img.pixels[3 * p] == swapped.pixels[3 * p + 2]);
            CHECK(img.pixels[3 * p + 2] == swapped.pixels[3 * p]);
        }
    }
    SUBCASE("zero influence renders black") {
        render_influence_map({0, 0, 0, 0}, 2, 2, tmp.file("z.ppm"));
        const auto img = read_ppm(tmp.file("z.ppm"));
        for (unsigned char c : img.pixels) CHECK(c == 0);
    }
    SUBCASE("decoding inverts the scaling up to quantization") {
        std::mt19937_64 rng(61);
        std::uniform_real_distribution<double> value(-4.0, 4.0);
        std::vector<double> phi(12 * 5);
        for (auto& v : phi) v = value(rng);
        render_influence_map(phi, 12, 5, tmp.file("r.ppm"));
        const auto img = read_ppm(tmp.file("r.ppm"));
        double scale = 0.0;
        for (double v : phi) scale = std::max(scale, std::abs(v));
        for (std::size_t p = 0; p < phi.size(); ++p) {
            const double decoded =
                (img.pixels[3 * p + 2] - img.pixels[3 * p]) / 255.0 * scale;
            CHECK(std::abs(decoded - phi[p]) <= scale / 255.0);
        }
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(render_influence_map({1, 2, 3}, 2, 2, tmp.file("x.ppm")), Error);
    }
}

TEST_CASE("shift poi") {
    SUBCASE("eta zero is the identity") {
        const std::vector<double> poi{10, 20, 30};
        CHECK(shift_poi(poi, {1, -2, 3}, 0.0) == poi);
    }
    SUBCASE("clamping at the brightness ceiling") {
        const auto out = shift_poi({255, 0}, {1.0, -1.0}, 0.25);
        CHECK(out[0] == 255.0);
        CHECK(out[1] == 0.0);
    }
    SUBCASE("arithmetic of the scale pipeline") {
        // normalized influence 1.0, eta 0.25: 128 + 0.25 * 255 = 191.75
        const auto out = shift_poi({128.0, 50.0}, {2.0, 0.0}, 0.25);
        CHECK(out[0] == doctest::Approx(191.75));
        CHECK(out[1] == 50.0);
    }
    SUBCASE("zero influence returns the input unchanged") {
        const std::vector<double> poi{1, 2, 3};
        CHECK(shift_poi(poi, {0, 0, 0}, 0.25) == poi);
    }
}

TEST_CASE("game files") {
    TempDir tmp;
    SUBCASE("explicit table in any order") {
        write_file(tmp.file("g.txt"), "2\n3 1\n0 0\n1 0\n2 0\n");
        const auto g = load_game(tmp.file("g.txt"));
        CHECK(g.players() == 2);
        CHECK(g.value(3) == 1.0);
        CHECK(g.value(0) == 0.0);
        CHECK(g.is_simple());
    }
    SUBCASE("weighted voting shorthand") {
        // quota 5, weights 3 3 4: {1,2}, {1,3}, {2,3}, {1,2,3} win
        write_file(tmp.file("w.txt"), "3\nwvg 5 3 3 4\n");
        const auto g = load_game(tmp.file("w.txt"));
        CHECK(g.value(0b011) == 1.0);
        CHECK(g.value(0b101) == 1.0);
        CHECK(g.value(0b110) == 1.0);
        CHECK(g.value(0b111) == 1.0);
        CHECK(g.value(0b001) == 0.0);
        CHECK(g.value(0b100) == 0.0);
    }
    SUBCASE("duplicate mask") {
        write_file(tmp.file("d.txt"), "1\n0 0\n0 1\n");
        CHECK_THROWS_AS(load_game(tmp.file("d.txt")), Error);
    }
    SUBCASE("missing rows") {
        write_file(tmp.file("m.txt"), "2\n0 0\n1 1\n");
        CHECK_THROWS_AS(load_game(tmp.file("m.txt")), Error);
    }
    SUBCASE("mask out of range") {
        write_file(tmp.file("r.txt"), "1\n0 0\n2 1\n");
        CHECK_THROWS_AS(load_game(tmp.file("r.txt")), Error);
    }
}
