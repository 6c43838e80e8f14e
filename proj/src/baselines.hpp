#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "core.hpp"

namespace mimkit {

/// Deterministic label oracle mapping a feature vector to -1/+1.
struct Classifier {
    std::string name;
    std::function<double(const std::vector<double>&)> eval;

    double operator()(const std::vector<double>& x) const { return eval(x); }
};

/// Majority vote over the k nearest dataset points (k odd, Euclidean,
/// index-order tie break on equal distances).
Classifier knn_classifier(const Dataset& dataset, std::size_t k);
/// sign(w . x + bias), with sign(0) = +1.
Classifier linear_classifier(std::vector<double> weights, double bias);
Classifier constant_classifier(double label);

/// Gradient at the POI of the kernel-smoothed class-1 probability
///   P(x) = sum_{c(y)=+1} k_sigma(x - y) / sum_y k_sigma(x - y),
/// k_sigma(z) = exp(-||z||^2 / (2 sigma^2)) / sqrt(pi sigma^2), reported
/// relative to the POI's own label (negated when c(x) = -1). Raises
/// Status::Degenerate when every kernel weight underflows (suggest larger
/// sigma).
InfluenceVector parzen_influence(const Dataset& dataset, std::size_t poi_index, double sigma);

/// The class-probability potential itself; exposed for oracle-style checks.
double parzen_potential(const std::vector<double>& x, const Dataset& dataset, double sigma);

struct LimeResult {
    InfluenceVector weights;  // the fitted linear coefficients w
    double intercept = 0.0;   // b
    bool rank_deficient = false; // normal system was singular; minimum-norm solution used
};

/// Weighted least-squares fit of c(y) ~ w . (y - x) + b with weights
/// exp(-d^2 / (2 rho^2)); returns w. Rank-deficient systems are solved
/// minimum-norm and flagged.
LimeResult lime_influence(const Dataset& dataset, std::size_t poi_index, double rho);

/// Average over the dataset of |label(x) - label(x')| across point pairs that
/// agree on every coordinate except `feature` (coordinate `feature` itself is
/// unrestricted). `tolerance` relaxes the equality test on the other
/// coordinates; the measure is meant for discrete data, so it defaults to 0.
double counterfactual_influence(const Dataset& dataset, std::size_t feature,
                                double tolerance = 0.0);
std::vector<double> counterfactual_influence_all(const Dataset& dataset, double tolerance = 0.0);

enum class QiiMode { Exact, Sampled };

struct QiiConfig {
    QiiMode mode = QiiMode::Exact;
    std::size_t sample_count = 1000; // sampled mode: number of permutations drawn
    std::uint64_t rng_seed = 0;
};

using FeatureSet = std::uint32_t; // bit i set <=> feature i randomized

/// v(S; x): expected classifier output after jointly replacing the S
/// coordinates of x with those of a dataset row (exact mode averages over all
/// rows; sampled mode draws rows with the seeded generator).
double qii_value(const Dataset& dataset, std::size_t poi_index, FeatureSet s,
                 const Classifier& classifier, const QiiConfig& config);

/// Shapley value of each feature under v(S; x). Exact mode enumerates all
/// subsets and requires n <= 20; sampled mode averages marginals over seeded
/// random feature orderings (v evaluated exactly per coalition).
InfluenceVector qii_influence(const Dataset& dataset, std::size_t poi_index,
                              const Classifier& classifier, const QiiConfig& config);

} // namespace mimkit
