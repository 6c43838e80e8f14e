#pragma once

#include <string>
#include <vector>

#include "core.hpp"
#include "games.hpp"

namespace mimkit {

struct CsvOptions {
    std::string label_column = "label";
    LabelMode mode = LabelMode::Binary;
    std::vector<std::string> categorical_columns; // schema overrides by header name
};

/// Load a labeled dataset from a CSV file (RFC-4180 subset: header row,
/// double-quoted fields with "" escapes, UTF-8). Numeric cells are parsed as
/// reals; declared categorical columns are dictionary-encoded in first
/// appearance order. Binary label alphabets {-1,+1} and {0,1} are accepted;
/// {0,1} is remapped to {-1,+1}. Mixed alphabets are rejected.
Dataset load_csv(const std::string& path, const CsvOptions& options);

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> pixels; // row-major brightness in [0, 255]
};

GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& image, const std::string& path);

struct ImageDataset {
    Dataset dataset;
    std::size_t width = 0;
    std::size_t height = 0;
};

/// Manifest: one "<filename> <label>" pair per line ('#' starts a comment).
/// Every image must be a binary PGM (P5, maxval <= 255) of equal dimensions;
/// each is flattened row-major into a width*height feature vector.
ImageDataset load_image_dir(const std::string& dir, const std::string& manifest_path,
                            LabelMode mode = LabelMode::Binary);

/// Signed influence map as a binary PPM (P6): blue channel carries positive
/// entries, red negative, scaled so max |phi| maps to 255. A zero vector
/// renders black.
void render_influence_map(const std::vector<double>& influence, std::size_t width,
                          std::size_t height, const std::string& out_path);

struct RgbImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<unsigned char> pixels; // RGB triples, row-major
};

RgbImage read_ppm(const std::string& path);

/// clamp(poi + eta * influence / max|influence| * 255, 0, 255); returns the
/// input unchanged when the influence is all zero.
std::vector<double> shift_poi(const std::vector<double>& poi,
                              const std::vector<double>& influence, double eta);

/// Game file: first line is the player count; then either one line
/// "wvg <quota> <w1> ... <wn>" (weighted voting: v(S)=1 iff the member
/// weights sum to at least the quota) or 2^n lines "<bitmask> <value>",
/// each mask exactly once. Bit i of the mask is player i+1.
CooperativeGame load_game(const std::string& path);

} // namespace mimkit
