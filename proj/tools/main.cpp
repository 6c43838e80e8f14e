// Command-line front end; talks to the library exclusively through the C API.
#include "mimkit.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// exit codes: 0 success, 1 usage, 2 data error, 3 numerical degeneracy
int exit_code_for(mim_status status) {
    switch (status) {
    case MIM_OK:
        return 0;
    case MIM_ERR_INVALID_ARGUMENT:
    case MIM_ERR_NULL_POINTER:
        return 1;
    case MIM_ERR_DOMAIN:
    case MIM_ERR_DEGENERATE:
        return 3;
    default:
        return 2;
    }
}

struct CliError {
    int code;
    std::string message;
};

void require_ok(mim_status status) {
    if (status != MIM_OK)
        throw CliError{exit_code_for(status),
                       std::string(mim_status_name(status)) + ": " + mim_last_error()};
}

struct DatasetDeleter { void operator()(mim_dataset* d) const { mim_dataset_free(d); } };
struct KernelDeleter { void operator()(mim_kernel* k) const { mim_kernel_free(k); } };
struct GameDeleter { void operator()(mim_game* g) const { mim_game_free(g); } };
struct ClassifierDeleter { void operator()(mim_classifier* c) const { mim_classifier_free(c); } };
struct MeasureDeleter { void operator()(mim_measure* m) const { mim_measure_free(m); } };

using DatasetPtr = std::unique_ptr<mim_dataset, DatasetDeleter>;
using KernelPtr = std::unique_ptr<mim_kernel, KernelDeleter>;
using GamePtr = std::unique_ptr<mim_game, GameDeleter>;
using ClassifierPtr = std::unique_ptr<mim_classifier, ClassifierDeleter>;
using MeasurePtr = std::unique_ptr<mim_measure, MeasureDeleter>;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CliError{2, tmp + ": cannot open for writing"};
        out << text;
        if (!out) throw CliError{2, tmp + ": short write"};
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CliError{2, path + ": rename failed: " + ec.message()};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, path + ": cannot open"};
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw CliError{2, path + ": " + e.what()};
    }
    return j;
}

std::vector<double> values_from_json(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.contains("values") || !j.at("values").is_array())
        throw CliError{2, path + ": expected a JSON object with a \"values\" array"};
    return j.at("values").get<std::vector<double>>();
}

// ---- shared dataset options ----

struct DataOptions {
    std::string csv_path;
    std::string image_dir;
    std::string manifest;
    std::string label_column = "label";
    std::string mode = "binary";
    std::vector<std::string> categorical;
    bool encode_categorical = false;
};

void add_data_options(CLI::App* cmd, DataOptions& opts) {
    cmd->add_option("--data", opts.csv_path, "CSV dataset (header row required)");
    cmd->add_option("--images", opts.image_dir, "directory of PGM (P5) images");
    cmd->add_option("--manifest", opts.manifest,
                    "image manifest: one '<filename> <label>' per line");
    cmd->add_option("--label-column", opts.label_column, "CSV label column name")
        ->default_val("label");
    cmd->add_option("--mode", opts.mode, "label mode")
        ->check(CLI::IsMember({"binary", "regression"}))
        ->default_val("binary");
    cmd->add_option("--categorical", opts.categorical,
                    "CSV columns to treat as categorical (repeatable)");
    cmd->add_flag("--encode-categorical", opts.encode_categorical,
                  "recode categorical features as match-the-POI flags before measuring");
}

struct LoadedData {
    DatasetPtr dataset;
    size_t width = 0;
    size_t height = 0;
    size_t num_points = 0;
    size_t num_features = 0;
};

LoadedData load_dataset(const DataOptions& opts, size_t poi) {
    if (opts.csv_path.empty() == opts.image_dir.empty())
        throw CliError{1, "exactly one of --data or --images is required"};
    const mim_label_mode mode =
        opts.mode == "regression" ? MIM_MODE_REGRESSION : MIM_MODE_BINARY;
    LoadedData loaded;
    mim_dataset* raw = nullptr;
    if (!opts.csv_path.empty()) {
        std::vector<const char*> cats;
        for (const auto& c : opts.categorical) cats.push_back(c.c_str());
        require_ok(mim_dataset_load_csv(opts.csv_path.c_str(), opts.label_column.c_str(), mode,
                                        cats.empty() ? nullptr : cats.data(), cats.size(),
                                        &raw));
    } else {
        if (opts.manifest.empty())
            throw CliError{1, "--images requires --manifest"};
        require_ok(mim_dataset_load_image_dir(opts.image_dir.c_str(), opts.manifest.c_str(),
                                              mode, &raw, &loaded.width, &loaded.height));
    }
    loaded.dataset.reset(raw);
    if (opts.encode_categorical) {
        mim_dataset* encoded = nullptr;
        require_ok(mim_dataset_encode_categorical(loaded.dataset.get(), poi, &encoded));
        loaded.dataset.reset(encoded);
    }
    require_ok(mim_dataset_size(loaded.dataset.get(), &loaded.num_points,
                                &loaded.num_features));
    return loaded;
}

// ---- measure options shared by compute and axioms ----

struct MeasureOptions {
    std::string measure = "mim";
    std::string kernel = "inverse-square";
    std::string kernel_table;
    double sigma = 1.0;
    double rho = 3.0;
    double cf_tolerance = 0.0;
    std::string classifier = "knn";
    size_t knn_k = 3;
    std::vector<double> linear_weights;
    double linear_bias = 0.0;
    double constant_label = 1.0;
    std::string qii_mode = "exact";
    size_t qii_samples = 1000;
    uint64_t seed = 0;
};

void add_measure_options(CLI::App* cmd, MeasureOptions& opts) {
    cmd->add_option("--measure", opts.measure, "influence measure")
        ->check(CLI::IsMember({"mim", "mim-reg", "parzen", "lime", "counterfactual", "qii"}))
        ->default_val("mim");
    cmd->add_option("--kernel", opts.kernel, "weight kernel for mim/mim-reg")
        ->check(CLI::IsMember({"constant", "inverse", "inverse-square", "table"}))
        ->default_val("inverse-square");
    cmd->add_option("--kernel-table", opts.kernel_table,
                    "kernel table file: one '<distance> <weight>' per line");
    cmd->add_option("--sigma", opts.sigma, "parzen bandwidth")->default_val(1.0);
    cmd->add_option("--rho", opts.rho, "lime locality")->default_val(3.0);
    cmd->add_option("--cf-tolerance", opts.cf_tolerance,
                    "counterfactual coordinate-match tolerance")
        ->default_val(0.0);
    cmd->add_option("--classifier", opts.classifier, "qii classifier")
        ->check(CLI::IsMember({"knn", "linear", "constant"}))
        ->default_val("knn");
    cmd->add_option("--knn-k", opts.knn_k, "k for the knn classifier (odd)")->default_val(3);
    cmd->add_option("--weights", opts.linear_weights, "linear classifier weights");
    cmd->add_option("--bias", opts.linear_bias, "linear classifier bias")->default_val(0.0);
    cmd->add_option("--constant-label", opts.constant_label, "constant classifier label")
        ->default_val(1.0);
    cmd->add_option("--qii-mode", opts.qii_mode, "qii evaluation mode")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->default_val("exact");
    cmd->add_option("--qii-samples", opts.qii_samples, "qii sampled-mode draw count")
        ->default_val(1000);
    cmd->add_option("--seed", opts.seed, "rng seed for sampled modes")->default_val(0);
}

KernelPtr build_kernel(const MeasureOptions& opts) {
    mim_kernel* raw = nullptr;
    if (opts.kernel == "table") {
        if (opts.kernel_table.empty())
            throw CliError{1, "--kernel table requires --kernel-table FILE"};
        std::ifstream in(opts.kernel_table);
        if (!in) throw CliError{2, opts.kernel_table + ": cannot open"};
        std::vector<double> ds, ws;
        double d, w;
        while (in >> d >> w) {
            ds.push_back(d);
            ws.push_back(w);
        }
        require_ok(mim_kernel_create_table(ds.data(), ws.data(), ds.size(), &raw));
    } else {
        mim_kernel_kind kind = MIM_KERNEL_INVERSE_SQUARE;
        if (opts.kernel == "constant") kind = MIM_KERNEL_CONSTANT;
        else if (opts.kernel == "inverse") kind = MIM_KERNEL_INVERSE;
        require_ok(mim_kernel_create(kind, &raw));
    }
    return KernelPtr(raw);
}

ClassifierPtr build_classifier(const MeasureOptions& opts, const mim_dataset* dataset) {
    mim_classifier* raw = nullptr;
    if (opts.classifier == "linear") {
        if (opts.linear_weights.empty())
            throw CliError{1, "--classifier linear requires --weights"};
        require_ok(mim_classifier_create_linear(opts.linear_weights.data(),
                                                opts.linear_weights.size(), opts.linear_bias,
                                                &raw));
    } else if (opts.classifier == "constant") {
        require_ok(mim_classifier_create_constant(opts.constant_label, &raw));
    } else {
        require_ok(mim_classifier_create_knn(dataset, opts.knn_k, &raw));
    }
    return ClassifierPtr(raw);
}

json parameters_json(const MeasureOptions& opts, bool deterministic) {
    json params;
    params["deterministic"] = deterministic;
    if (opts.measure == "mim" || opts.measure == "mim-reg") params["kernel"] = opts.kernel;
    if (opts.measure == "parzen") params["sigma"] = opts.sigma;
    if (opts.measure == "lime") params["rho"] = opts.rho;
    if (opts.measure == "counterfactual") params["tolerance"] = opts.cf_tolerance;
    if (opts.measure == "qii") {
        params["classifier"] = opts.classifier;
        params["mode"] = opts.qii_mode;
        if (opts.qii_mode == "sampled") {
            params["samples"] = opts.qii_samples;
            params["seed"] = opts.seed;
        }
    }
    return params;
}

// ---- compute ----

int run_compute(const DataOptions& data_opts, const MeasureOptions& opts, size_t poi,
                bool deterministic, const std::string& out_path) {
    LoadedData loaded = load_dataset(data_opts, poi);
    const mim_dataset* dataset = loaded.dataset.get();
    std::vector<double> values(loaded.num_features, 0.0);
    json output;
    output["measure"] = opts.measure;
    output["parameters"] = parameters_json(opts, deterministic);
    output["poi"] = poi;

    if (opts.measure == "mim") {
        KernelPtr kernel = build_kernel(opts);
        require_ok(mim_influence(dataset, poi, kernel.get(), values.data()));
    } else if (opts.measure == "mim-reg") {
        KernelPtr kernel = build_kernel(opts);
        require_ok(mim_regression_influence(dataset, poi, kernel.get(), values.data()));
    } else if (opts.measure == "parzen") {
        require_ok(mim_parzen_influence(dataset, poi, opts.sigma, values.data()));
    } else if (opts.measure == "lime") {
        double intercept = 0.0;
        int rank_deficient = 0;
        require_ok(mim_lime_influence(dataset, poi, opts.rho, values.data(), &intercept,
                                      &rank_deficient));
        output["metadata"] = {{"intercept", intercept},
                              {"rank_deficient", rank_deficient != 0},
                              {"relaxation", "weighted-least-squares"}};
    } else if (opts.measure == "counterfactual") {
        require_ok(mim_counterfactual_influence_all(dataset, opts.cf_tolerance, values.data()));
    } else if (opts.measure == "qii") {
        ClassifierPtr classifier = build_classifier(opts, dataset);
        const mim_qii_mode mode =
            opts.qii_mode == "sampled" ? MIM_QII_SAMPLED : MIM_QII_EXACT;
        require_ok(mim_qii_influence(dataset, poi, classifier.get(), mode, opts.qii_samples,
                                     opts.seed, values.data()));
    }

    output["values"] = values;
    if (loaded.width) {
        output["height"] = loaded.height;
        output["width"] = loaded.width;
    }
    write_text(out_path, output.dump() + "\n");
    return 0;
}

// ---- axioms ----

int run_axioms(const DataOptions& data_opts, const MeasureOptions& opts, size_t poi,
               const std::string& axiom, size_t trials, double tol, double epsilon,
               const std::string& nonbias_mode, size_t nonbias_samples,
               const std::string& out_path) {
    LoadedData loaded = load_dataset(data_opts, poi);
    const mim_dataset* dataset = loaded.dataset.get();

    KernelPtr kernel;
    ClassifierPtr classifier;
    mim_measure_params params{};
    params.sigma = opts.sigma;
    params.rho = opts.rho;
    params.cf_tolerance = opts.cf_tolerance;
    params.seed = opts.seed;
    params.qii_mode = opts.qii_mode == "sampled" ? MIM_QII_SAMPLED : MIM_QII_EXACT;
    params.qii_samples = opts.qii_samples;
    if (opts.measure == "mim" || opts.measure == "mim-reg") {
        kernel = build_kernel(opts);
        params.kernel = kernel.get();
    }
    if (opts.measure == "qii") {
        classifier = build_classifier(opts, dataset);
        params.classifier = classifier.get();
    }
    mim_measure* raw_measure = nullptr;
    require_ok(mim_measure_create(opts.measure.c_str(), &params, &raw_measure));
    MeasurePtr measure(raw_measure);

    mim_axiom_options axiom_opts{};
    axiom_opts.trials = trials;
    axiom_opts.seed = opts.seed;
    axiom_opts.tolerance = tol;
    axiom_opts.epsilon = epsilon;
    axiom_opts.nonbias_exact = nonbias_mode == "exact" ? 1 : 0;
    axiom_opts.nonbias_samples = nonbias_samples;

    std::vector<std::string> axioms;
    if (axiom == "all")
        axioms = {"shift", "rotation", "continuity", "flip", "monotonicity", "nonbias"};
    else
        axioms = {axiom};

    std::string stream;
    for (const auto& name : axioms) {
        int pass = 0;
        double residual = 0.0;
        char* line = nullptr;
        require_ok(mim_axioms_check(measure.get(), dataset, poi, name.c_str(), &axiom_opts,
                                    &pass, &residual, &line));
        stream += line;
        stream += "\n";
        mim_string_free(line);
    }
    write_text(out_path, stream);
    return 0; // a failing axiom is a finding, not a CLI error
}

// ---- game ----

int run_game(const std::string& path, size_t player_1based, bool want_banzhaf,
             bool want_shapley, bool want_psi, bool want_phi_empty, bool want_verify,
             std::optional<uint32_t> setwise_mask, const std::string& out_path) {
    mim_game* raw = nullptr;
    require_ok(mim_game_load(path.c_str(), &raw));
    GamePtr game(raw);
    size_t n = 0;
    require_ok(mim_game_players(game.get(), &n));
    if (player_1based < 1 || player_1based > n)
        throw CliError{1, "--player must be in [1, " + std::to_string(n) + "]"};
    const size_t player = player_1based - 1;

    if (!want_banzhaf && !want_shapley && !want_psi && !want_phi_empty && !want_verify &&
        !setwise_mask.has_value()) {
        want_banzhaf = want_shapley = want_phi_empty = true;
        want_verify = n <= 14;
    }

    json output;
    output["file"] = path;
    output["player"] = player_1based;
    output["players"] = n;
    double value = 0.0;
    if (want_banzhaf) {
        require_ok(mim_game_banzhaf(game.get(), player, &value));
        output["banzhaf"] = value;
    }
    if (want_shapley) {
        require_ok(mim_game_shapley(game.get(), player, &value));
        output["shapley"] = value;
    }
    if (want_psi) {
        require_ok(mim_game_psi(game.get(), player, &value));
        output["psi"] = value;
    }
    if (want_phi_empty) {
        require_ok(mim_game_cost_sharing(game.get(), player, &value));
        output["phi_empty"] = value;
    }
    if (setwise_mask.has_value()) {
        require_ok(mim_game_setwise_influence(game.get(), *setwise_mask, player, &value));
        output["setwise"] = {{"coalition", *setwise_mask}, {"value", value}};
    }
    if (want_verify) {
        double psi = 0.0, banzhaf = 0.0, factor = 0.0, residual = 0.0;
        require_ok(
            mim_game_verify_psi_banzhaf(game.get(), player, &psi, &banzhaf, &factor, &residual));
        output["verify_psi_banzhaf"] = {{"banzhaf", banzhaf},
                                        {"factor", factor},
                                        {"psi", psi},
                                        {"residual", residual},
                                        {"scaled_banzhaf", factor * banzhaf}};
    }
    write_text(out_path, output.dump() + "\n");
    return 0;
}

// ---- render / shift / compare ----

int run_render(const std::string& influence_path, size_t width, size_t height,
               const std::string& out_path) {
    const json j = read_json_file(influence_path);
    const std::vector<double> values = values_from_json(influence_path);
    if (width == 0 && j.contains("width")) width = j.at("width").get<size_t>();
    if (height == 0 && j.contains("height")) height = j.at("height").get<size_t>();
    if (width == 0 || height == 0)
        throw CliError{1, "--width and --height are required (not found in the influence file)"};
    require_ok(
        mim_render_influence_ppm(values.data(), values.size(), width, height, out_path.c_str()));
    return 0;
}

int run_shift(const std::string& influence_path, const std::string& poi_image, double eta,
              const std::string& out_path) {
    const std::vector<double> values = values_from_json(influence_path);
    double* pixels = nullptr;
    size_t width = 0, height = 0;
    require_ok(mim_read_pgm(poi_image.c_str(), &pixels, &width, &height));
    std::unique_ptr<double[], void (*)(double*)> guard(pixels, mim_buffer_free);
    if (width * height != values.size())
        throw CliError{2, "influence length " + std::to_string(values.size()) +
                              " does not match image " + std::to_string(width) + "x" +
                              std::to_string(height)};
    std::vector<double> shifted(values.size(), 0.0);
    require_ok(mim_shift_poi(pixels, values.data(), values.size(), eta, shifted.data()));
    require_ok(mim_write_pgm(shifted.data(), width, height, out_path.c_str()));
    return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
    const std::vector<double> a = values_from_json(a_path);
    const std::vector<double> b = values_from_json(b_path);
    if (a.size() != b.size())
        throw CliError{2, "influence vectors have different lengths"};
    double cosine = 0.0;
    require_ok(mim_cosine_similarity(a.data(), b.data(), a.size(), &cosine));
    json output;
    output["a"] = a_path;
    output["b"] = b_path;
    output["cosine"] = cosine;
    write_text(out_path, output.dump() + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"data-driven feature influence toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute an influence vector");
    DataOptions compute_data;
    MeasureOptions compute_measure;
    size_t compute_poi = 0;
    bool deterministic = false;
    std::string compute_out;
    add_data_options(compute, compute_data);
    add_measure_options(compute, compute_measure);
    compute->add_option("--poi", compute_poi, "point of interest index")->default_val(0);
    compute->add_flag("--deterministic", deterministic,
                      "fixed reduction order for byte-identical reruns");
    compute->add_option("--out", compute_out, "output JSON path (default stdout)");

    // axioms
    auto* axioms = app.add_subcommand("axioms", "check axioms against a measure");
    DataOptions axioms_data;
    MeasureOptions axioms_measure;
    size_t axioms_poi = 0;
    std::string axiom_name = "all";
    size_t trials = 16;
    double tol = 1e-9;
    double epsilon = 1e-6;
    std::string nonbias_mode = "exact";
    size_t nonbias_samples = 4000;
    std::string axioms_out;
    add_data_options(axioms, axioms_data);
    add_measure_options(axioms, axioms_measure);
    axioms->add_option("--poi", axioms_poi, "point of interest index")->default_val(0);
    axioms
        ->add_option("--axiom", axiom_name, "axiom to check")
        ->check(CLI::IsMember(
            {"shift", "rotation", "continuity", "flip", "monotonicity", "nonbias", "all"}))
        ->default_val("all");
    axioms->add_option("--trials", trials, "random scenarios per check")->default_val(16);
    axioms->add_option("--tol", tol, "pass threshold on the residual")->default_val(1e-9);
    axioms->add_option("--epsilon", epsilon, "continuity perturbation norm")->default_val(1e-6);
    axioms->add_option("--nonbias-mode", nonbias_mode, "non-bias evaluation mode")
        ->check(CLI::IsMember({"exact", "mc"}))
        ->default_val("exact");
    axioms->add_option("--nonbias-samples", nonbias_samples, "mc labeling count")
        ->default_val(4000);
    axioms->add_option("--out", axioms_out, "output path for JSON report lines");

    // game
    auto* game = app.add_subcommand("game", "cooperative-game influence values");
    std::string game_file;
    size_t player = 1;
    bool want_banzhaf = false, want_shapley = false, want_psi = false, want_phi_empty = false,
         want_verify = false;
    std::optional<uint32_t> setwise_mask;
    uint32_t setwise_value = 0;
    std::string game_out;
    game->add_option("--file", game_file, "game file")->required();
    game->add_option("--player", player, "player index (1-based)")->default_val(1);
    game->add_flag("--banzhaf", want_banzhaf, "Banzhaf value (1/2^n normalization)");
    game->add_flag("--shapley", want_shapley, "Shapley value");
    game->add_flag("--psi", want_psi, "summed setwise influence");
    game->add_flag("--phi-empty", want_phi_empty, "cost-sharing value phi(empty)");
    game->add_flag("--verify-psi-banzhaf", want_verify,
                   "check psi against 2^n(2^n-1)/n * banzhaf");
    auto* setwise_opt =
        game->add_option("--setwise", setwise_value, "setwise influence for this coalition mask");
    game->add_option("--out", game_out, "output JSON path (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "render an influence vector as a PPM map");
    std::string render_influence, render_out;
    size_t render_width = 0, render_height = 0;
    render->add_option("--influence", render_influence, "influence JSON from `compute`")
        ->required();
    render->add_option("--width", render_width, "map width in pixels");
    render->add_option("--height", render_height, "map height in pixels");
    render->add_option("--out", render_out, "output PPM path")->required();

    // shift
    auto* shift = app.add_subcommand("shift", "shift a POI image along an influence vector");
    std::string shift_influence, shift_poi_image, shift_out;
    double eta = 0.25;
    shift->add_option("--influence", shift_influence, "influence JSON from `compute`")
        ->required();
    shift->add_option("--poi-image", shift_poi_image, "POI image (PGM)")->required();
    shift->add_option("--eta", eta, "step size")->default_val(0.25);
    shift->add_option("--out", shift_out, "output PGM path")->required();

    // compare
    auto* compare = app.add_subcommand("compare", "cosine similarity of two influence vectors");
    std::string compare_a, compare_b, compare_out;
    compare->add_option("--a", compare_a, "first influence JSON")->required();
    compare->add_option("--b", compare_b, "second influence JSON")->required();
    compare->add_option("--out", compare_out, "output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // usage problems exit 1; --help exits 0
    }

    try {
        if (compute->parsed())
            return run_compute(compute_data, compute_measure, compute_poi, deterministic,
                               compute_out);
        if (axioms->parsed())
            return run_axioms(axioms_data, axioms_measure, axioms_poi, axiom_name, trials, tol,
                              epsilon, nonbias_mode, nonbias_samples, axioms_out);
        if (game->parsed()) {
            if (setwise_opt->count() > 0) setwise_mask = setwise_value;
            return run_game(game_file, player, want_banzhaf, want_shapley, want_psi,
                            want_phi_empty, want_verify, setwise_mask, game_out);
        }
        if (render->parsed())
            return run_render(render_influence, render_width, render_height, render_out);
        if (shift->parsed()) return run_shift(shift_influence, shift_poi_image, eta, shift_out);
        if (compare->parsed()) return run_compare(compare_a, compare_b, compare_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
