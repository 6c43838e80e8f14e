#include "mimkit.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "axioms.hpp"
#include "baselines.hpp"
#include "core.hpp"
#include "games.hpp"
#include "influence.hpp"
#include "io.hpp"

// Opaque handle definitions: each wraps exactly one core object.
struct mim_dataset { mimkit::Dataset value; };
struct mim_kernel { mimkit::WeightKernel value; };
struct mim_game { mimkit::CooperativeGame value; };
struct mim_classifier { mimkit::Classifier value; };
struct mim_measure { mimkit::MeasureHandle value; };

namespace {

thread_local std::string g_last_error;

mim_status to_status(mimkit::Status s) { return static_cast<mim_status>(static_cast<int>(s)); }

// Run `fn`, translating exceptions into status codes and recording the
// message for mim_last_error().
template <typename Fn>
mim_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return MIM_OK;
    } catch (const mimkit::Error& e) {
        g_last_error = e.what();
        return to_status(e.status());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MIM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown exception";
        return MIM_ERR_INTERNAL;
    }
}

mim_status null_arg(const char* what) {
    g_last_error = std::string(what) + " must not be null";
    return MIM_ERR_NULL_POINTER;
}

#define MIM_REQUIRE(ptr) \
    do { if ((ptr) == nullptr) return null_arg(#ptr); } while (0)

void copy_out(const std::vector<double>& values, double* out) {
    std::memcpy(out, values.data(), values.size() * sizeof(double));
}

mimkit::LabelMode to_mode(mim_label_mode mode) {
    return mode == MIM_MODE_REGRESSION ? mimkit::LabelMode::Regression
                                       : mimkit::LabelMode::Binary;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mimkit::MeasureHandle build_measure(const std::string& name, const mim_measure_params* params) {
    using namespace mimkit;
    WeightKernel kernel = (params && params->kernel) ? params->kernel->value
                                                     : WeightKernel::inverse_square();
    const double sigma = (params && params->sigma > 0.0) ? params->sigma : 1.0;
    const double rho = (params && params->rho > 0.0) ? params->rho : 3.0;
    const double cf_tolerance = params ? params->cf_tolerance : 0.0;

    if (name == "mim")
        return {"mim", [kernel](const Dataset& d, std::size_t poi) {
                    return mim_influence(d, poi, kernel);
                }};
    if (name == "mim-reg")
        return {"mim-reg", [kernel](const Dataset& d, std::size_t poi) {
                    return mim_regression_influence(d, poi, kernel);
                }};
    if (name == "parzen")
        return {"parzen", [sigma](const Dataset& d, std::size_t poi) {
                    return parzen_influence(d, poi, sigma);
                }};
    if (name == "lime")
        return {"lime", [rho](const Dataset& d, std::size_t poi) {
                    return lime_influence(d, poi, rho).weights;
                }};
    if (name == "counterfactual")
        return {"counterfactual", [cf_tolerance](const Dataset& d, std::size_t poi) {
                    InfluenceVector out;
                    out.poi_index = poi;
                    out.values = counterfactual_influence_all(d, cf_tolerance);
                    return out;
                }};
    if (name == "qii") {
        if (!params || !params->classifier)
            raise(Status::InvalidArgument, "qii measure needs a classifier");
        Classifier classifier = params->classifier->value;
        QiiConfig config;
        config.mode = params->qii_mode == MIM_QII_SAMPLED ? QiiMode::Sampled : QiiMode::Exact;
        config.sample_count = params->qii_samples ? params->qii_samples : 1000;
        config.rng_seed = params->seed;
        return {"qii", [classifier, config](const Dataset& d, std::size_t poi) {
                    return qii_influence(d, poi, classifier, config);
                }};
    }
    raise(Status::InvalidArgument, "unknown measure '" + name +
                                       "' (expected mim, mim-reg, parzen, lime, "
                                       "counterfactual, or qii)");
}

} // namespace

extern "C" {

const char* mim_version(void) { return "0.1.0"; }

const char* mim_status_name(mim_status status) {
    return mimkit::status_name(static_cast<mimkit::Status>(static_cast<int>(status)));
}

const char* mim_last_error(void) { return g_last_error.c_str(); }

void mim_string_free(char* s) { delete[] s; }
void mim_buffer_free(double* p) { delete[] p; }

/* ---- datasets ---- */

mim_status mim_dataset_create(const double* features, size_t num_points, size_t num_features,
                              const double* labels, mim_label_mode mode, const int* categorical,
                              mim_dataset** out) {
    MIM_REQUIRE(features);
    MIM_REQUIRE(labels);
    MIM_REQUIRE(out);
    return guarded([&] {
        std::vector<mimkit::LabeledPoint> points(num_points);
        for (size_t i = 0; i < num_points; ++i) {
            points[i].features.assign(features + i * num_features,
                                      features + (i + 1) * num_features);
            points[i].label = labels[i];
        }
        std::vector<mimkit::FeatureSchema> schema(num_features);
        if (categorical)
            for (size_t j = 0; j < num_features; ++j)
                schema[j].kind = categorical[j] ? mimkit::FeatureKind::Categorical
                                                : mimkit::FeatureKind::Numeric;
        *out = new mim_dataset{
            mimkit::Dataset(std::move(points), to_mode(mode), std::move(schema))};
    });
}

mim_status mim_dataset_load_csv(const char* path, const char* label_column, mim_label_mode mode,
                                const char* const* categorical_columns, size_t num_categorical,
                                mim_dataset** out) {
    MIM_REQUIRE(path);
    MIM_REQUIRE(out);
    return guarded([&] {
        mimkit::CsvOptions options;
        if (label_column) options.label_column = label_column;
        options.mode = to_mode(mode);
        for (size_t i = 0; i < num_categorical; ++i)
            options.categorical_columns.emplace_back(categorical_columns[i]);
        *out = new mim_dataset{mimkit::load_csv(path, options)};
    });
}

mim_status mim_dataset_load_image_dir(const char* dir, const char* manifest, mim_label_mode mode,
                                      mim_dataset** out, size_t* width, size_t* height) {
    MIM_REQUIRE(dir);
    MIM_REQUIRE(manifest);
    MIM_REQUIRE(out);
    return guarded([&] {
        mimkit::ImageDataset loaded = mimkit::load_image_dir(dir, manifest, to_mode(mode));
        if (width) *width = loaded.width;
        if (height) *height = loaded.height;
        *out = new mim_dataset{std::move(loaded.dataset)};
    });
}

void mim_dataset_free(mim_dataset* dataset) { delete dataset; }

mim_status mim_dataset_size(const mim_dataset* dataset, size_t* num_points,
                            size_t* num_features) {
    MIM_REQUIRE(dataset);
    if (num_points) *num_points = dataset->value.size();
    if (num_features) *num_features = dataset->value.dimension();
    return MIM_OK;
}

mim_status mim_dataset_point(const mim_dataset* dataset, size_t index, double* features,
                             double* label) {
    MIM_REQUIRE(dataset);
    return guarded([&] {
        const auto& p = dataset->value.point(index);
        if (features) copy_out(p.features, features);
        if (label) *label = p.label;
    });
}

mim_status mim_dataset_encode_categorical(const mim_dataset* dataset, size_t poi,
                                          mim_dataset** out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = new mim_dataset{mimkit::encode_categorical(dataset->value, poi)};
    });
}

/* ---- kernels ---- */

mim_status mim_kernel_create(mim_kernel_kind kind, mim_kernel** out) {
    MIM_REQUIRE(out);
    return guarded([&] {
        switch (kind) {
        case MIM_KERNEL_CONSTANT:
            *out = new mim_kernel{mimkit::WeightKernel::constant()};
            return;
        case MIM_KERNEL_INVERSE:
            *out = new mim_kernel{mimkit::WeightKernel::inverse()};
            return;
        case MIM_KERNEL_INVERSE_SQUARE:
            *out = new mim_kernel{mimkit::WeightKernel::inverse_square()};
            return;
        }
        mimkit::raise(mimkit::Status::InvalidArgument, "unknown kernel kind");
    });
}

mim_status mim_kernel_create_table(const double* distances, const double* weights, size_t count,
                                   mim_kernel** out) {
    MIM_REQUIRE(distances);
    MIM_REQUIRE(weights);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = new mim_kernel{mimkit::WeightKernel::table(
            std::vector<double>(distances, distances + count),
            std::vector<double>(weights, weights + count))};
    });
}

void mim_kernel_free(mim_kernel* kernel) { delete kernel; }

mim_status mim_kernel_eval(const mim_kernel* kernel, double distance, double* out) {
    MIM_REQUIRE(kernel);
    MIM_REQUIRE(out);
    return guarded([&] { *out = kernel->value(distance); });
}

mim_status mim_euclidean_distance(const double* a, const double* b, size_t n, double* out) {
    MIM_REQUIRE(a);
    MIM_REQUIRE(b);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = mimkit::euclidean_distance(std::vector<double>(a, a + n),
                                          std::vector<double>(b, b + n));
    });
}

/* ---- influence measures ---- */

mim_status mim_influence(const mim_dataset* dataset, size_t poi, const mim_kernel* kernel,
                         double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(kernel);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::mim_influence(dataset->value, poi, kernel->value).values, out);
    });
}

mim_status mim_regression_influence(const mim_dataset* dataset, size_t poi,
                                    const mim_kernel* kernel, double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(kernel);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::mim_regression_influence(dataset->value, poi, kernel->value).values,
                 out);
    });
}

mim_status mim_objective_value(const mim_dataset* dataset, size_t poi, const mim_kernel* alpha0,
                               const double* phi, double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(alpha0);
    MIM_REQUIRE(phi);
    MIM_REQUIRE(out);
    return guarded([&] {
        const std::vector<double> direction(phi, phi + dataset->value.dimension());
        *out = mimkit::objective_value(direction, dataset->value, poi, alpha0->value);
    });
}

mim_status mim_parzen_influence(const mim_dataset* dataset, size_t poi, double sigma,
                                double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::parzen_influence(dataset->value, poi, sigma).values, out);
    });
}

mim_status mim_lime_influence(const mim_dataset* dataset, size_t poi, double rho,
                              double* out_weights, double* out_intercept, int* rank_deficient) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out_weights);
    return guarded([&] {
        const mimkit::LimeResult result = mimkit::lime_influence(dataset->value, poi, rho);
        copy_out(result.weights.values, out_weights);
        if (out_intercept) *out_intercept = result.intercept;
        if (rank_deficient) *rank_deficient = result.rank_deficient ? 1 : 0;
    });
}

mim_status mim_counterfactual_influence(const mim_dataset* dataset, size_t feature,
                                        double tolerance, double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = mimkit::counterfactual_influence(dataset->value, feature, tolerance);
    });
}

mim_status mim_counterfactual_influence_all(const mim_dataset* dataset, double tolerance,
                                            double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::counterfactual_influence_all(dataset->value, tolerance), out);
    });
}

/* ---- classifiers & QII ---- */

mim_status mim_classifier_create_knn(const mim_dataset* dataset, size_t k,
                                     mim_classifier** out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = new mim_classifier{mimkit::knn_classifier(dataset->value, k)};
    });
}

mim_status mim_classifier_create_linear(const double* weights, size_t n, double bias,
                                        mim_classifier** out) {
    MIM_REQUIRE(weights);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = new mim_classifier{
            mimkit::linear_classifier(std::vector<double>(weights, weights + n), bias)};
    });
}

mim_status mim_classifier_create_constant(double label, mim_classifier** out) {
    MIM_REQUIRE(out);
    return guarded([&] { *out = new mim_classifier{mimkit::constant_classifier(label)}; });
}

mim_status mim_classifier_create_callback(mim_classifier_fn fn, void* user, const char* name,
                                          mim_classifier** out) {
    MIM_REQUIRE(fn);
    MIM_REQUIRE(out);
    return guarded([&] {
        std::string display = name ? name : "callback";
        *out = new mim_classifier{mimkit::Classifier{
            display, [fn, user](const std::vector<double>& x) {
                double label = 0.0;
                const mim_status rc = fn(user, x.data(), x.size(), &label);
                if (rc != MIM_OK)
                    mimkit::raise(static_cast<mimkit::Status>(static_cast<int>(rc)),
                                  "classifier callback failed");
                return label;
            }}};
    });
}

void mim_classifier_free(mim_classifier* classifier) { delete classifier; }

mim_status mim_classifier_eval(const mim_classifier* classifier, const double* x, size_t n,
                               double* out) {
    MIM_REQUIRE(classifier);
    MIM_REQUIRE(x);
    MIM_REQUIRE(out);
    return guarded([&] { *out = classifier->value(std::vector<double>(x, x + n)); });
}

namespace {

mimkit::QiiConfig to_config(mim_qii_mode mode, size_t sample_count, uint64_t seed) {
    mimkit::QiiConfig config;
    config.mode = mode == MIM_QII_SAMPLED ? mimkit::QiiMode::Sampled : mimkit::QiiMode::Exact;
    config.sample_count = sample_count ? sample_count : 1000;
    config.rng_seed = seed;
    return config;
}

} // namespace

mim_status mim_qii_value(const mim_dataset* dataset, size_t poi, uint32_t feature_set,
                         const mim_classifier* classifier, mim_qii_mode mode,
                         size_t sample_count, uint64_t seed, double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(classifier);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = mimkit::qii_value(dataset->value, poi, feature_set, classifier->value,
                                 to_config(mode, sample_count, seed));
    });
}

mim_status mim_qii_influence(const mim_dataset* dataset, size_t poi,
                             const mim_classifier* classifier, mim_qii_mode mode,
                             size_t sample_count, uint64_t seed, double* out) {
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(classifier);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::qii_influence(dataset->value, poi, classifier->value,
                                       to_config(mode, sample_count, seed))
                     .values,
                 out);
    });
}

/* ---- cooperative games ---- */

mim_status mim_game_create(size_t num_players, const double* values, mim_game** out) {
    MIM_REQUIRE(values);
    MIM_REQUIRE(out);
    return guarded([&] {
        if (num_players < 1 || num_players > 20)
            mimkit::raise(mimkit::Status::Capacity, "player count outside [1, 20]");
        const size_t table = size_t{1} << num_players;
        *out = new mim_game{
            mimkit::CooperativeGame(num_players, std::vector<double>(values, values + table))};
    });
}

mim_status mim_game_load(const char* path, mim_game** out) {
    MIM_REQUIRE(path);
    MIM_REQUIRE(out);
    return guarded([&] { *out = new mim_game{mimkit::load_game(path)}; });
}

void mim_game_free(mim_game* game) { delete game; }

mim_status mim_game_players(const mim_game* game, size_t* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    *out = game->value.players();
    return MIM_OK;
}

mim_status mim_game_value(const mim_game* game, uint32_t coalition, double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = game->value.value(coalition); });
}

mim_status mim_game_is_simple(const mim_game* game, int* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    *out = game->value.is_simple() ? 1 : 0;
    return MIM_OK;
}

mim_status mim_game_setwise_influence(const mim_game* game, uint32_t coalition, size_t player,
                                      double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = mimkit::setwise_influence(game->value, coalition, player); });
}

mim_status mim_game_cost_sharing(const mim_game* game, size_t player, double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = mimkit::cost_sharing_influence(game->value, player); });
}

mim_status mim_game_cost_sharing_sample(const uint32_t* coalitions, const double* values,
                                        size_t count, size_t player, double* out) {
    MIM_REQUIRE(coalitions);
    MIM_REQUIRE(values);
    MIM_REQUIRE(out);
    return guarded([&] {
        std::vector<std::pair<mimkit::Coalition, double>> sample;
        sample.reserve(count);
        for (size_t i = 0; i < count; ++i) sample.emplace_back(coalitions[i], values[i]);
        *out = mimkit::cost_sharing_influence(sample, player);
    });
}

mim_status mim_game_psi(const mim_game* game, size_t player, double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = mimkit::psi_influence(game->value, player); });
}

mim_status mim_game_banzhaf(const mim_game* game, size_t player, double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = mimkit::banzhaf(game->value, player); });
}

mim_status mim_game_shapley(const mim_game* game, size_t player, double* out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = mimkit::shapley(game->value, player); });
}

mim_status mim_game_zeta(size_t num_players, uint32_t coalition, size_t player, int64_t* per_k,
                         int64_t* total_num, int64_t* total_den) {
    MIM_REQUIRE(per_k);
    return guarded([&] {
        const mimkit::ZetaCounts counts = mimkit::zeta(num_players, coalition, player);
        for (size_t k = 0; k < counts.per_k.size(); ++k) per_k[k] = counts.per_k[k];
        if (total_num) *total_num = counts.total.num;
        if (total_den) *total_den = counts.total.den;
    });
}

mim_status mim_game_verify_psi_banzhaf(const mim_game* game, size_t player, double* psi,
                                       double* banzhaf, double* factor, double* residual) {
    MIM_REQUIRE(game);
    return guarded([&] {
        const mimkit::PsiBanzhafReport report = mimkit::verify_psi_banzhaf(game->value, player);
        if (psi) *psi = report.psi;
        if (banzhaf) *banzhaf = report.banzhaf;
        if (factor) *factor = report.factor;
        if (residual) *residual = report.residual;
    });
}

mim_status mim_game_to_dataset(const mim_game* game, mim_dataset** out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] { *out = new mim_dataset{mimkit::game_to_dataset(game->value)}; });
}

mim_status mim_game_to_dataset_regression(const mim_game* game, mim_dataset** out) {
    MIM_REQUIRE(game);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = new mim_dataset{mimkit::game_to_dataset_regression(game->value)};
    });
}

/* ---- axiom harness ---- */

mim_status mim_measure_create(const char* name, const mim_measure_params* params,
                              mim_measure** out) {
    MIM_REQUIRE(name);
    MIM_REQUIRE(out);
    return guarded([&] { *out = new mim_measure{build_measure(name, params)}; });
}

mim_status mim_measure_create_callback(const char* display_name, mim_measure_fn fn, void* user,
                                       mim_measure** out) {
    MIM_REQUIRE(fn);
    MIM_REQUIRE(out);
    return guarded([&] {
        std::string name = display_name ? display_name : "callback";
        *out = new mim_measure{mimkit::MeasureHandle{
            name, [fn, user](const mimkit::Dataset& d, std::size_t poi) {
                mimkit::InfluenceVector result;
                result.poi_index = poi;
                result.values.assign(d.dimension(), 0.0);
                // Callbacks see the dataset through a temporary handle.
                mim_dataset view{d};
                const mim_status rc = fn(user, &view, poi, result.values.data());
                if (rc != MIM_OK)
                    mimkit::raise(static_cast<mimkit::Status>(static_cast<int>(rc)),
                                  "measure callback failed");
                return result;
            }}};
    });
}

void mim_measure_free(mim_measure* measure) { delete measure; }

mim_status mim_measure_eval(const mim_measure* measure, const mim_dataset* dataset, size_t poi,
                            double* out) {
    MIM_REQUIRE(measure);
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(out);
    return guarded([&] { copy_out(measure->value.eval(dataset->value, poi).values, out); });
}

mim_status mim_axioms_check(const mim_measure* measure, const mim_dataset* dataset, size_t poi,
                            const char* axiom, const mim_axiom_options* options, int* pass,
                            double* residual, char** report_json) {
    MIM_REQUIRE(measure);
    MIM_REQUIRE(dataset);
    MIM_REQUIRE(axiom);
    return guarded([&] {
        mimkit::AxiomOptions opts;
        if (options) {
            if (options->trials) opts.trials = options->trials;
            opts.seed = options->seed;
            if (options->tolerance > 0.0) opts.tolerance = options->tolerance;
            if (options->epsilon > 0.0) opts.epsilon = options->epsilon;
            opts.nonbias_mode = options->nonbias_exact ? mimkit::NonbiasMode::Exact
                                                       : mimkit::NonbiasMode::MonteCarlo;
            if (options->nonbias_samples) opts.nonbias_samples = options->nonbias_samples;
        }
        const mimkit::AxiomReport report =
            mimkit::check_axiom(axiom, measure->value, dataset->value, poi, opts);
        if (pass) *pass = report.passed() ? 1 : 0;
        if (residual) *residual = report.residual;
        if (report_json) *report_json = dup_string(report.to_json_line());
    });
}

mim_status mim_axioms_replay(const mim_measure* measure, const char* report_json,
                             double* residual) {
    MIM_REQUIRE(measure);
    MIM_REQUIRE(report_json);
    MIM_REQUIRE(residual);
    return guarded([&] {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(report_json);
        } catch (const nlohmann::json::parse_error& e) {
            mimkit::raise(mimkit::Status::Parse, std::string("bad report JSON: ") + e.what());
        }
        *residual = mimkit::replay_witness(measure->value, parsed);
    });
}

/* ---- rendering & comparison ---- */

mim_status mim_render_influence_ppm(const double* influence, size_t n, size_t width,
                                    size_t height, const char* path) {
    MIM_REQUIRE(influence);
    MIM_REQUIRE(path);
    return guarded([&] {
        mimkit::render_influence_map(std::vector<double>(influence, influence + n), width,
                                     height, path);
    });
}

mim_status mim_shift_poi(const double* poi, const double* influence, size_t n, double eta,
                         double* out) {
    MIM_REQUIRE(poi);
    MIM_REQUIRE(influence);
    MIM_REQUIRE(out);
    return guarded([&] {
        copy_out(mimkit::shift_poi(std::vector<double>(poi, poi + n),
                                   std::vector<double>(influence, influence + n), eta),
                 out);
    });
}

mim_status mim_cosine_similarity(const double* a, const double* b, size_t n, double* out) {
    MIM_REQUIRE(a);
    MIM_REQUIRE(b);
    MIM_REQUIRE(out);
    return guarded([&] {
        *out = mimkit::cosine_similarity(std::vector<double>(a, a + n),
                                         std::vector<double>(b, b + n));
    });
}

mim_status mim_read_pgm(const char* path, double** pixels, size_t* width, size_t* height) {
    MIM_REQUIRE(path);
    MIM_REQUIRE(pixels);
    return guarded([&] {
        const mimkit::GrayImage img = mimkit::read_pgm(path);
        double* buffer = new double[img.pixels.size()];
        std::memcpy(buffer, img.pixels.data(), img.pixels.size() * sizeof(double));
        *pixels = buffer;
        if (width) *width = img.width;
        if (height) *height = img.height;
    });
}

mim_status mim_write_pgm(const double* pixels, size_t width, size_t height, const char* path) {
    MIM_REQUIRE(pixels);
    MIM_REQUIRE(path);
    return guarded([&] {
        mimkit::GrayImage img;
        img.width = width;
        img.height = height;
        img.pixels.assign(pixels, pixels + width * height);
        mimkit::write_pgm(img, path);
    });
}

} /* extern "C" */
