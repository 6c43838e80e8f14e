#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mimkit {

namespace {

[[noreturn]] void io_fail(const std::string& path, const std::string& what) {
    raise(Status::Io, path + ": " + what);
}

std::ifstream open_input(const std::string& path, bool binary = false) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) io_fail(path, "cannot open for reading");
    return in;
}

// All writers go through a temp file + rename so readers never observe a
// partially written file.
void atomic_write(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) io_fail(tmp, "cannot open for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) io_fail(tmp, "short write");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) io_fail(path, "rename failed: " + ec.message());
}

bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    if (begin == end) return false;
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc() && result.ptr == end;
}

// One CSV record; handles quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line, const std::string& path,
                                        std::size_t line_no) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            if (!field.empty())
                raise(Status::Parse, path + ":" + std::to_string(line_no) +
                                         ": quote inside unquoted field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field.push_back(c);
        }
    }
    if (quoted)
        raise(Status::Parse, path + ":" + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(field));
    return fields;
}

} // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options) {
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) io_fail(path, "empty file (header row required)");
    const std::vector<std::string> header = split_csv_line(line, path, 1);

    std::size_t label_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == options.label_column) label_col = i;
    if (label_col == header.size()) {
        std::string available;
        for (std::size_t i = 0; i < header.size(); ++i)
            available += (i ? ", " : "") + header[i];
        raise(Status::Parse, path + ": label column '" + options.label_column +
                                 "' not found; available columns: " + available);
    }

    std::vector<FeatureSchema> schema;
    std::vector<std::size_t> feature_cols;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i == label_col) continue;
        FeatureSchema s;
        s.name = header[i];
        const bool categorical =
            std::find(options.categorical_columns.begin(), options.categorical_columns.end(),
                      header[i]) != options.categorical_columns.end();
        s.kind = categorical ? FeatureKind::Categorical : FeatureKind::Numeric;
        schema.push_back(std::move(s));
        feature_cols.push_back(i);
    }
    for (const auto& name : options.categorical_columns) {
        if (std::find(header.begin(), header.end(), name) == header.end())
            raise(Status::Parse, path + ": categorical column '" + name + "' not in header");
    }

    std::vector<LabeledPoint> points;
    std::vector<double> raw_labels;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line, path, line_no);
        if (fields.size() != header.size())
            raise(Status::Parse, path + ":" + std::to_string(line_no) + ": expected " +
                                     std::to_string(header.size()) + " fields, found " +
                                     std::to_string(fields.size()));
        LabeledPoint p;
        p.features.resize(feature_cols.size());
        for (std::size_t f = 0; f < feature_cols.size(); ++f) {
            const std::string& cell = fields[feature_cols[f]];
            if (schema[f].kind == FeatureKind::Categorical) {
                auto& cats = schema[f].categories;
                auto it = std::find(cats.begin(), cats.end(), cell);
                if (it == cats.end()) {
                    cats.push_back(cell);
                    it = std::prev(cats.end());
                }
                p.features[f] = static_cast<double>(it - cats.begin());
            } else if (!parse_double(cell, p.features[f])) {
                raise(Status::Parse, path + ":" + std::to_string(line_no) + ": column '" +
                                         header[feature_cols[f]] + "': cannot parse '" + cell +
                                         "' as a number");
            }
        }
        double label;
        if (!parse_double(fields[label_col], label))
            raise(Status::Parse, path + ":" + std::to_string(line_no) + ": column '" +
                                     options.label_column + "': cannot parse '" +
                                     fields[label_col] + "' as a number");
        raw_labels.push_back(label);
        points.push_back(std::move(p));
    }
    if (points.empty()) io_fail(path, "no data rows");

    if (options.mode == LabelMode::Binary) {
        std::set<double> alphabet(raw_labels.begin(), raw_labels.end());
        const std::set<double> pm{-1.0, 1.0}, zo{0.0, 1.0};
        auto subset_of = [&](const std::set<double>& allowed) {
            return std::all_of(alphabet.begin(), alphabet.end(),
                               [&](double v) { return allowed.count(v) > 0; });
        };
        if (subset_of(pm)) {
            for (std::size_t i = 0; i < points.size(); ++i) points[i].label = raw_labels[i];
        } else if (subset_of(zo)) {
            for (std::size_t i = 0; i < points.size(); ++i)
                points[i].label = raw_labels[i] == 1.0 ? 1.0 : -1.0;
        } else {
            std::string seen;
            for (double v : alphabet) seen += (seen.empty() ? "" : ", ") + std::to_string(v);
            raise(Status::Parse, path + ": mixed label alphabet {" + seen +
                                     "}; binary mode accepts {-1,1} or {0,1}");
        }
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) points[i].label = raw_labels[i];
    }
    return Dataset(std::move(points), options.mode, std::move(schema));
}

namespace {

// Reads the next PNM header token, skipping whitespace and '#' comments.
std::string pnm_token(std::istream& in, const std::string& path) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) return token;
            continue;
        }
        token.push_back(static_cast<char>(c));
    }
    if (token.empty()) io_fail(path, "truncated header");
    return token;
}

std::size_t pnm_number(std::istream& in, const std::string& path, const char* what) {
    const std::string token = pnm_token(in, path);
    std::size_t value = 0;
    const auto result = std::from_chars(token.data(), token.data() + token.size(), value);
    if (result.ec != std::errc() || result.ptr != token.data() + token.size())
        raise(Status::Parse, path + ": bad " + std::string(what) + " '" + token + "'");
    return value;
}

} // namespace

GrayImage read_pgm(const std::string& path) {
    auto in = open_input(path, true);
    if (pnm_token(in, path) != "P5")
        raise(Status::Parse, path + ": not a binary PGM (P5) file");
    GrayImage img;
    img.width = pnm_number(in, path, "width");
    img.height = pnm_number(in, path, "height");
    const std::size_t maxval = pnm_number(in, path, "maxval");
    if (img.width == 0 || img.height == 0) raise(Status::Parse, path + ": zero image dimension");
    if (maxval == 0 || maxval > 255)
        raise(Status::Parse, path + ": maxval " + std::to_string(maxval) + " unsupported (need <= 255)");
    // single whitespace byte after maxval, already consumed by the tokenizer
    std::vector<char> raw(img.width * img.height);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        raise(Status::Parse, path + ": truncated pixel data");
    img.pixels.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        img.pixels[i] = static_cast<double>(static_cast<unsigned char>(raw[i]));
    return img;
}

void write_pgm(const GrayImage& image, const std::string& path) {
    if (image.pixels.size() != image.width * image.height)
        raise(Status::Schema, "pixel buffer does not match image dimensions");
    std::string bytes = "P5\n" + std::to_string(image.width) + " " +
                        std::to_string(image.height) + "\n255\n";
    bytes.reserve(bytes.size() + image.pixels.size());
    for (double v : image.pixels) {
        const double clamped = std::clamp(v, 0.0, 255.0);
        bytes.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(clamped))));
    }
    atomic_write(path, bytes);
}

ImageDataset load_image_dir(const std::string& dir, const std::string& manifest_path,
                            LabelMode mode) {
    auto manifest = open_input(manifest_path);
    std::vector<LabeledPoint> points;
    std::size_t width = 0, height = 0;
    std::string first_file;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> raw_labels;
    while (std::getline(manifest, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string filename;
        std::string label_text;
        if (!(ss >> filename)) continue; // blank line
        if (!(ss >> label_text))
            raise(Status::Parse, manifest_path + ":" + std::to_string(line_no) +
                                     ": expected '<filename> <label>'");
        double label;
        if (!parse_double(label_text, label))
            raise(Status::Parse, manifest_path + ":" + std::to_string(line_no) +
                                     ": cannot parse label '" + label_text + "'");
        const std::string path = (std::filesystem::path(dir) / filename).string();
        if (!std::filesystem::exists(path))
            io_fail(path, "referenced by manifest line " + std::to_string(line_no) +
                              " but missing");
        GrayImage img = read_pgm(path);
        if (points.empty()) {
            width = img.width;
            height = img.height;
            first_file = filename;
        } else if (img.width != width || img.height != height) {
            raise(Status::Schema, path + ": dimensions " + std::to_string(img.width) + "x" +
                                      std::to_string(img.height) + " do not match " + first_file +
                                      " (" + std::to_string(width) + "x" + std::to_string(height) +
                                      ")");
        }
        LabeledPoint p;
        p.features = std::move(img.pixels);
        points.push_back(std::move(p));
        raw_labels.push_back(label);
    }
    if (points.empty()) io_fail(manifest_path, "manifest lists no images");
    if (mode == LabelMode::Binary) {
        std::set<double> alphabet(raw_labels.begin(), raw_labels.end());
        const bool zero_one = alphabet.count(0.0) > 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double v = raw_labels[i];
            if (v != 1.0 && v != -1.0 && v != 0.0)
                raise(Status::Parse, manifest_path + ": binary labels must be -1/+1 or 0/1");
            points[i].label = zero_one ? (v == 1.0 ? 1.0 : -1.0) : v;
        }
        if (zero_one && alphabet.count(-1.0) > 0)
            raise(Status::Parse, manifest_path + ": mixed label alphabet (0/1 and -1 both seen)");
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) points[i].label = raw_labels[i];
    }
    return ImageDataset{Dataset(std::move(points), mode), width, height};
}

void render_influence_map(const std::vector<double>& influence, std::size_t width,
                          std::size_t height, const std::string& out_path) {
    if (influence.size() != width * height)
        raise(Status::Schema, "influence length " + std::to_string(influence.size()) +
                                  " does not match " + std::to_string(width) + "x" +
                                  std::to_string(height));
    double scale = 0.0;
    for (double v : influence) scale = std::max(scale, std::abs(v));
    std::string bytes =
        "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    bytes.reserve(bytes.size() + influence.size() * 3);
    for (double v : influence) {
        unsigned char red = 0, blue = 0;
        if (scale > 0.0) {
            if (v > 0.0)
                blue = static_cast<unsigned char>(std::lround(v / scale * 255.0));
            else if (v < 0.0)
                red = static_cast<unsigned char>(std::lround(-v / scale * 255.0));
        }
        bytes.push_back(static_cast<char>(red));
        bytes.push_back(static_cast<char>(0));
        bytes.push_back(static_cast<char>(blue));
    }
    atomic_write(out_path, bytes);
}

RgbImage read_ppm(const std::string& path) {
    auto in = open_input(path, true);
    if (pnm_token(in, path) != "P6")
        raise(Status::Parse, path + ": not a binary PPM (P6) file");
    RgbImage img;
    img.width = pnm_number(in, path, "width");
    img.height = pnm_number(in, path, "height");
    const std::size_t maxval = pnm_number(in, path, "maxval");
    if (maxval != 255) raise(Status::Parse, path + ": expected maxval 255");
    std::vector<char> raw(img.width * img.height * 3);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        raise(Status::Parse, path + ": truncated pixel data");
    img.pixels.assign(raw.begin(), raw.end());
    return img;
}

std::vector<double> shift_poi(const std::vector<double>& poi,
                              const std::vector<double>& influence, double eta) {
    if (poi.size() != influence.size())
        raise(Status::Schema, "point and influence dimensions differ");
    double scale = 0.0;
    for (double v : influence) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return poi;
    std::vector<double> out(poi.size());
    for (std::size_t i = 0; i < poi.size(); ++i)
        out[i] = std::clamp(poi[i] + eta * influence[i] / scale * 255.0, 0.0, 255.0);
    return out;
}

CooperativeGame load_game(const std::string& path) {
    auto in = open_input(path);
    std::size_t n = 0;
    if (!(in >> n)) raise(Status::Parse, path + ": expected player count on the first line");
    if (n < 1 || n > 20)
        raise(Status::Capacity, path + ": player count " + std::to_string(n) +
                                    " outside [1, 20]");
    std::string token;
    if (!(in >> token)) raise(Status::Parse, path + ": truncated game file");
    const std::size_t table_size = std::size_t{1} << n;
    std::vector<double> values(table_size, 0.0);
    if (token == "wvg") {
        double quota;
        if (!(in >> quota)) raise(Status::Parse, path + ": wvg line missing quota");
        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i)
            if (!(in >> weights[i]))
                raise(Status::Parse, path + ": wvg line needs " + std::to_string(n) + " weights");
        for (std::size_t mask = 0; mask < table_size; ++mask) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1u) total += weights[i];
            values[mask] = total >= quota ? 1.0 : 0.0;
        }
        return CooperativeGame(n, std::move(values));
    }
    std::vector<bool> seen(table_size, false);
    std::size_t filled = 0;
    // `token` already holds the first mask
    while (true) {
        std::size_t mask = 0;
        const auto result = std::from_chars(token.data(), token.data() + token.size(), mask);
        if (result.ec != std::errc() || result.ptr != token.data() + token.size())
            raise(Status::Parse, path + ": bad coalition mask '" + token + "'");
        if (mask >= table_size)
            raise(Status::Parse, path + ": mask " + token + " out of range for n=" +
                                     std::to_string(n));
        if (seen[mask]) raise(Status::Parse, path + ": duplicate mask " + token);
        double value;
        if (!(in >> value)) raise(Status::Parse, path + ": mask " + token + " missing a value");
        seen[mask] = true;
        values[mask] = value;
        ++filled;
        if (!(in >> token)) break;
    }
    if (filled != table_size)
        raise(Status::Parse, path + ": expected " + std::to_string(table_size) +
                                 " coalition values, found " + std::to_string(filled));
    return CooperativeGame(n, std::move(values));
}

} // namespace mimkit
