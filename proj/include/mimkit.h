/*
 * mimkit — data-driven feature influence measures, cooperative-game influence,
 * and an axiom-checking harness behind a plain C interface.
 *
 * All functions return a mim_status; outputs go through pointer arguments.
 * Handles are opaque and must be released with the matching *_free call.
 * mim_last_error() describes the most recent failure on the calling thread.
 */
#ifndef MIMKIT_H
#define MIMKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MIM_API __declspec(dllexport)
#else
#define MIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mim_status {
    MIM_OK = 0,
    MIM_ERR_INVALID_ARGUMENT = 1,
    MIM_ERR_SCHEMA = 2,
    MIM_ERR_MODE = 3,
    MIM_ERR_DOMAIN = 4,
    MIM_ERR_CAPACITY = 5,
    MIM_ERR_PARSE = 6,
    MIM_ERR_IO = 7,
    MIM_ERR_DEGENERATE = 8,
    MIM_ERR_NULL_POINTER = 9,
    MIM_ERR_INTERNAL = 10
} mim_status;

typedef enum mim_label_mode {
    MIM_MODE_BINARY = 0,
    MIM_MODE_REGRESSION = 1
} mim_label_mode;

typedef enum mim_kernel_kind {
    MIM_KERNEL_CONSTANT = 0,
    MIM_KERNEL_INVERSE = 1,
    MIM_KERNEL_INVERSE_SQUARE = 2
} mim_kernel_kind;

typedef struct mim_dataset mim_dataset;
typedef struct mim_kernel mim_kernel;
typedef struct mim_game mim_game;
typedef struct mim_classifier mim_classifier;
typedef struct mim_measure mim_measure;

MIM_API const char* mim_version(void);
MIM_API const char* mim_status_name(mim_status status);
/* Message for the last failing call on this thread; empty string if none. */
MIM_API const char* mim_last_error(void);
/* Release a string returned by the library (e.g. axiom report lines). */
MIM_API void mim_string_free(char* s);
MIM_API void mim_buffer_free(double* p);

/* ---- datasets ------------------------------------------------------- */

/* features: m*n row-major; labels: length m (binary mode wants -1/+1);
 * categorical: length n of 0/1 flags, may be NULL for all-numeric. */
MIM_API mim_status mim_dataset_create(const double* features, size_t num_points,
                                      size_t num_features, const double* labels,
                                      mim_label_mode mode, const int* categorical,
                                      mim_dataset** out);
/* categorical_columns: header names to dictionary-encode, may be NULL. */
MIM_API mim_status mim_dataset_load_csv(const char* path, const char* label_column,
                                        mim_label_mode mode,
                                        const char* const* categorical_columns,
                                        size_t num_categorical, mim_dataset** out);
/* Manifest lines are "<filename> <label>"; images are binary PGM (P5) of one
 * shared size, flattened row-major. width/height may be NULL. */
MIM_API mim_status mim_dataset_load_image_dir(const char* dir, const char* manifest,
                                              mim_label_mode mode, mim_dataset** out,
                                              size_t* width, size_t* height);
MIM_API void mim_dataset_free(mim_dataset* dataset);
MIM_API mim_status mim_dataset_size(const mim_dataset* dataset, size_t* num_points,
                                    size_t* num_features);
MIM_API mim_status mim_dataset_point(const mim_dataset* dataset, size_t index,
                                     double* features, double* label);
/* Rewrites each categorical feature as 1 where it matches the POI, else 0. */
MIM_API mim_status mim_dataset_encode_categorical(const mim_dataset* dataset, size_t poi,
                                                  mim_dataset** out);

/* ---- weight kernels -------------------------------------------------- */

MIM_API mim_status mim_kernel_create(mim_kernel_kind kind, mim_kernel** out);
/* Monotone non-increasing piecewise-linear table over positive distances. */
MIM_API mim_status mim_kernel_create_table(const double* distances, const double* weights,
                                           size_t count, mim_kernel** out);
MIM_API void mim_kernel_free(mim_kernel* kernel);
MIM_API mim_status mim_kernel_eval(const mim_kernel* kernel, double distance, double* out);

MIM_API mim_status mim_euclidean_distance(const double* a, const double* b, size_t n,
                                          double* out);

/* ---- influence measures ---------------------------------------------- */

/* out buffers must hold num_features doubles. */
MIM_API mim_status mim_influence(const mim_dataset* dataset, size_t poi,
                                 const mim_kernel* kernel, double* out);
MIM_API mim_status mim_regression_influence(const mim_dataset* dataset, size_t poi,
                                            const mim_kernel* kernel, double* out);
/* Weighted total cosine similarity of direction phi around the POI. */
MIM_API mim_status mim_objective_value(const mim_dataset* dataset, size_t poi,
                                       const mim_kernel* alpha0, const double* phi,
                                       double* out);
MIM_API mim_status mim_parzen_influence(const mim_dataset* dataset, size_t poi, double sigma,
                                        double* out);
/* rank_deficient may be NULL; set to 1 when the fit needed the minimum-norm
 * pseudo-solution. */
MIM_API mim_status mim_lime_influence(const mim_dataset* dataset, size_t poi, double rho,
                                      double* out_weights, double* out_intercept,
                                      int* rank_deficient);
MIM_API mim_status mim_counterfactual_influence(const mim_dataset* dataset, size_t feature,
                                                double tolerance, double* out);
MIM_API mim_status mim_counterfactual_influence_all(const mim_dataset* dataset,
                                                    double tolerance, double* out);

/* ---- classifiers & QII ------------------------------------------------ */

MIM_API mim_status mim_classifier_create_knn(const mim_dataset* dataset, size_t k,
                                             mim_classifier** out);
MIM_API mim_status mim_classifier_create_linear(const double* weights, size_t n, double bias,
                                                mim_classifier** out);
MIM_API mim_status mim_classifier_create_constant(double label, mim_classifier** out);
typedef mim_status (*mim_classifier_fn)(void* user, const double* x, size_t n,
                                        double* out_label);
MIM_API mim_status mim_classifier_create_callback(mim_classifier_fn fn, void* user,
                                                  const char* name, mim_classifier** out);
MIM_API void mim_classifier_free(mim_classifier* classifier);
MIM_API mim_status mim_classifier_eval(const mim_classifier* classifier, const double* x,
                                       size_t n, double* out);

typedef enum mim_qii_mode { MIM_QII_EXACT = 0, MIM_QII_SAMPLED = 1 } mim_qii_mode;

/* feature_set: bit i randomizes feature i jointly from one sampled row. */
MIM_API mim_status mim_qii_value(const mim_dataset* dataset, size_t poi, uint32_t feature_set,
                                 const mim_classifier* classifier, mim_qii_mode mode,
                                 size_t sample_count, uint64_t seed, double* out);
MIM_API mim_status mim_qii_influence(const mim_dataset* dataset, size_t poi,
                                     const mim_classifier* classifier, mim_qii_mode mode,
                                     size_t sample_count, uint64_t seed, double* out);

/* ---- cooperative games ------------------------------------------------ */

/* values: 2^n entries indexed by coalition bitmask (bit i = player i). */
MIM_API mim_status mim_game_create(size_t num_players, const double* values, mim_game** out);
MIM_API mim_status mim_game_load(const char* path, mim_game** out);
MIM_API void mim_game_free(mim_game* game);
MIM_API mim_status mim_game_players(const mim_game* game, size_t* out);
MIM_API mim_status mim_game_value(const mim_game* game, uint32_t coalition, double* out);
MIM_API mim_status mim_game_is_simple(const mim_game* game, int* out);
/* phi_player(coalition) = sum over T containing the player of
 * (v(T) - v(coalition)) / |coalition xor T|; player must be outside. */
MIM_API mim_status mim_game_setwise_influence(const mim_game* game, uint32_t coalition,
                                              size_t player, double* out);
MIM_API mim_status mim_game_cost_sharing(const mim_game* game, size_t player, double* out);
/* Sample form over an explicit coalition list (no duplicate masks). */
MIM_API mim_status mim_game_cost_sharing_sample(const uint32_t* coalitions,
                                                const double* values, size_t count,
                                                size_t player, double* out);
MIM_API mim_status mim_game_psi(const mim_game* game, size_t player, double* out);
MIM_API mim_status mim_game_banzhaf(const mim_game* game, size_t player, double* out);
MIM_API mim_status mim_game_shapley(const mim_game* game, size_t player, double* out);
/* per_k must hold num_players entries; per_k[k] counts coalitions T within
 * N\{player} at symmetric difference k from the coalition. The exact total
 * sum_k per_k[k]/(k+1) is returned as total_num/total_den. */
MIM_API mim_status mim_game_zeta(size_t num_players, uint32_t coalition, size_t player,
                                 int64_t* per_k, int64_t* total_num, int64_t* total_den);
/* Both sides computed independently; residual = |psi - factor * banzhaf|
 * with factor = 2^n (2^n - 1) / n. Any output pointer may be NULL. */
MIM_API mim_status mim_game_verify_psi_banzhaf(const mim_game* game, size_t player,
                                               double* psi, double* banzhaf, double* factor,
                                               double* residual);
/* 2^n coalition indicators as a dataset: binary form remaps simple-game
 * values to -1/+1 labels; regression form keeps raw values as scores. */
MIM_API mim_status mim_game_to_dataset(const mim_game* game, mim_dataset** out);
MIM_API mim_status mim_game_to_dataset_regression(const mim_game* game, mim_dataset** out);

/* ---- axiom harness ----------------------------------------------------- */

typedef struct mim_measure_params {
    const mim_kernel* kernel;          /* mim, mim-reg (NULL = inverse-square) */
    double sigma;                      /* parzen */
    double rho;                        /* lime */
    double cf_tolerance;               /* counterfactual */
    const mim_classifier* classifier;  /* qii */
    mim_qii_mode qii_mode;             /* qii */
    size_t qii_samples;                /* qii sampled mode */
    uint64_t seed;                     /* qii sampled mode */
} mim_measure_params;

/* name: one of "mim", "mim-reg", "parzen", "lime", "counterfactual", "qii".
 * params may be NULL for defaults (inverse-square kernel, sigma 1, rho 3). */
MIM_API mim_status mim_measure_create(const char* name, const mim_measure_params* params,
                                      mim_measure** out);
typedef mim_status (*mim_measure_fn)(void* user, const mim_dataset* dataset, size_t poi,
                                     double* out_values);
MIM_API mim_status mim_measure_create_callback(const char* display_name, mim_measure_fn fn,
                                               void* user, mim_measure** out);
MIM_API void mim_measure_free(mim_measure* measure);
MIM_API mim_status mim_measure_eval(const mim_measure* measure, const mim_dataset* dataset,
                                    size_t poi, double* out);

typedef struct mim_axiom_options {
    size_t trials;          /* shift/rotation/monotonicity scenarios (default 16) */
    uint64_t seed;
    double tolerance;       /* pass threshold on the residual (default 1e-9) */
    double epsilon;         /* continuity perturbation norm (default 1e-6) */
    int nonbias_exact;      /* 1 = enumerate all labelings (m <= 12), 0 = Monte Carlo */
    size_t nonbias_samples; /* Monte Carlo labelings (default 4000) */
} mim_axiom_options;

/* axiom: "shift", "rotation", "continuity", "flip", "monotonicity" or
 * "nonbias". report_json (optional) receives one JSON report line carrying
 * pass/fail, the worst residual, and a replayable witness on failure; free
 * it with mim_string_free. */
MIM_API mim_status mim_axioms_check(const mim_measure* measure, const mim_dataset* dataset,
                                    size_t poi, const char* axiom,
                                    const mim_axiom_options* options, int* pass,
                                    double* residual, char** report_json);
/* Re-run the witness scenario embedded in a failing report line. */
MIM_API mim_status mim_axioms_replay(const mim_measure* measure, const char* report_json,
                                     double* residual);

/* ---- rendering & comparison ------------------------------------------- */

/* Binary PPM (P6): blue = positive influence, red = negative, max |phi|
 * scaled to 255; all-zero influence renders black. */
MIM_API mim_status mim_render_influence_ppm(const double* influence, size_t n, size_t width,
                                            size_t height, const char* path);
/* out = clamp(poi + eta * influence / max|influence| * 255, 0, 255). */
MIM_API mim_status mim_shift_poi(const double* poi, const double* influence, size_t n,
                                 double eta, double* out);
MIM_API mim_status mim_cosine_similarity(const double* a, const double* b, size_t n,
                                         double* out);
MIM_API mim_status mim_read_pgm(const char* path, double** pixels, size_t* width,
                                size_t* height);
MIM_API mim_status mim_write_pgm(const double* pixels, size_t width, size_t height,
                                 const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MIMKIT_H */
