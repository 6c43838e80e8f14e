#include "baselines.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace mimkit {

namespace {

void require_binary(const Dataset& dataset, const char* what) {
    if (dataset.mode() != LabelMode::Binary)
        raise(Status::Mode, std::string(what) + " requires a binary-mode dataset");
}

double gauss_kernel(double sq_dist, double sigma) {
    return std::exp(-sq_dist / (2.0 * sigma * sigma)) / std::sqrt(M_PI * sigma * sigma);
}

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

} // namespace

Classifier knn_classifier(const Dataset& dataset, std::size_t k) {
    require_binary(dataset, "knn classifier");
    if (k == 0 || k % 2 == 0)
        raise(Status::InvalidArgument, "k must be odd to avoid vote ties");
    if (k > dataset.size())
        raise(Status::InvalidArgument, "k exceeds the dataset size");
    // Copy the points so the classifier owns its reference set.
    std::vector<std::vector<double>> pts;
    std::vector<double> labels;
    pts.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        pts.push_back(dataset.features(i));
        labels.push_back(dataset.label(i));
    }
    return Classifier{
        "knn(k=" + std::to_string(k) + ")",
        [pts = std::move(pts), labels = std::move(labels), k](const std::vector<double>& x) {
            if (x.size() != pts.front().size())
                raise(Status::Schema, "query dimension does not match the classifier's dataset");
            std::vector<std::size_t> order(pts.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return squared_distance(pts[a], x) < squared_distance(pts[b], x);
            });
            double vote = 0.0;
            for (std::size_t j = 0; j < k; ++j) vote += labels[order[j]];
            return vote >= 0.0 ? 1.0 : -1.0;
        }};
}

Classifier linear_classifier(std::vector<double> weights, double bias) {
    return Classifier{"linear",
                      [w = std::move(weights), bias](const std::vector<double>& x) {
                          if (x.size() != w.size())
                              raise(Status::Schema, "query dimension does not match the weights");
                          double acc = bias;
                          for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * x[i];
                          return acc >= 0.0 ? 1.0 : -1.0;
                      }};
}

Classifier constant_classifier(double label) {
    return Classifier{"constant", [label](const std::vector<double>&) { return label; }};
}

double parzen_potential(const std::vector<double>& x, const Dataset& dataset, double sigma) {
    require_binary(dataset, "parzen");
    if (!(sigma > 0.0))
        raise(Status::Domain, "sigma must be positive");
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < dataset.size(); ++j) {
        const double kw = gauss_kernel(squared_distance(x, dataset.features(j)), sigma);
        den += kw;
        if (dataset.label(j) == 1.0) num += kw;
    }
    if (den <= 1e-300)
        raise(Status::Degenerate, "all kernel weights underflowed; increase sigma");
    return num / den;
}

InfluenceVector parzen_influence(const Dataset& dataset, std::size_t poi_index, double sigma) {
    require_binary(dataset, "parzen");
    dataset.check_index(poi_index);
    if (!(sigma > 0.0))
        raise(Status::Domain, "sigma must be positive");
    const auto& x = dataset.features(poi_index);
    const std::size_t n = dataset.dimension();

    // Quotient rule on P = N/D with grad k_sigma(x - y) = k * (y - x) / sigma^2.
    double num = 0.0, den = 0.0;
    std::vector<double> grad_num(n, 0.0), grad_den(n, 0.0);
    bool has_neighbor = false, live_neighbor = false;
    for (std::size_t j = 0; j < dataset.size(); ++j) {
        const auto& y = dataset.features(j);
        const double sq = squared_distance(x, y);
        const double kw = gauss_kernel(sq, sigma);
        if (sq > 0.0) {
            has_neighbor = true;
            if (kw >= 1e-300) live_neighbor = true;
        }
        den += kw;
        const bool positive = dataset.label(j) == 1.0;
        if (positive) num += kw;
        for (std::size_t i = 0; i < n; ++i) {
            const double g = kw * (y[i] - x[i]) / (sigma * sigma);
            grad_den[i] += g;
            if (positive) grad_num[i] += g;
        }
    }
    if (den <= 1e-300 || (has_neighbor && !live_neighbor))
        raise(Status::Degenerate,
              "every neighbor's kernel weight underflowed; increase sigma");

    InfluenceVector out;
    out.poi_index = poi_index;
    out.values.resize(n);
    const double toward_own_label = dataset.label(poi_index) == 1.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = toward_own_label * (grad_num[i] * den - num * grad_den[i]) / (den * den);
    return out;
}

LimeResult lime_influence(const Dataset& dataset, std::size_t poi_index, double rho) {
    require_binary(dataset, "lime");
    dataset.check_index(poi_index);
    if (!(rho > 0.0))
        raise(Status::Domain, "rho must be positive");
    {
        bool distinct = false;
        for (std::size_t j = 0; j < dataset.size() && !distinct; ++j)
            if (dataset.features(j) != dataset.features(0)) distinct = true;
        if (!distinct)
            raise(Status::Degenerate, "lime needs at least two distinct points");
    }
    const auto& x = dataset.features(poi_index);
    const std::size_t m = dataset.size();
    const std::size_t n = dataset.dimension();

    // Rows: sqrt(weight) * [y - x, 1]; targets: sqrt(weight) * c(y).
    // weight = sqrt(exp(-d^2/rho^2)) = exp(-d^2 / (2 rho^2)).
    Eigen::MatrixXd a(m, n + 1);
    Eigen::VectorXd t(m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& y = dataset.features(j);
        const double w = std::exp(-squared_distance(y, x) / (2.0 * rho * rho));
        const double sw = std::sqrt(w);
        for (std::size_t i = 0; i < n; ++i) a(j, i) = sw * (y[i] - x[i]);
        a(j, n) = sw;
        t(j) = sw * dataset.label(j);
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
    const bool deficient = cod.rank() < static_cast<Eigen::Index>(n + 1);
    const Eigen::VectorXd theta = cod.solve(t); // minimum-norm least squares

    LimeResult result;
    result.weights.poi_index = poi_index;
    result.weights.values.assign(theta.data(), theta.data() + n);
    result.intercept = theta(n);
    result.rank_deficient = deficient;
    return result;
}

double counterfactual_influence(const Dataset& dataset, std::size_t feature, double tolerance) {
    require_binary(dataset, "counterfactual influence");
    if (feature >= dataset.dimension())
        raise(Status::InvalidArgument, "feature index out of range");
    if (tolerance < 0.0)
        raise(Status::InvalidArgument, "tolerance must be nonnegative");
    const std::size_t m = dataset.size();
    double acc = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            const auto& pa = dataset.features(a);
            const auto& pb = dataset.features(b);
            bool match = true;
            for (std::size_t i = 0; i < pa.size() && match; ++i) {
                if (i == feature) continue;
                if (std::abs(pa[i] - pb[i]) > tolerance) match = false;
            }
            if (match) acc += std::abs(dataset.label(a) - dataset.label(b));
        }
    }
    return acc / static_cast<double>(m);
}

std::vector<double> counterfactual_influence_all(const Dataset& dataset, double tolerance) {
    std::vector<double> out(dataset.dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = counterfactual_influence(dataset, i, tolerance);
    return out;
}

namespace {

double qii_value_exact(const Dataset& dataset, const std::vector<double>& x, FeatureSet s,
                       const Classifier& classifier) {
    if (s == 0) return classifier(x);
    std::vector<double> probe = x;
    double acc = 0.0;
    for (std::size_t j = 0; j < dataset.size(); ++j) {
        const auto& y = dataset.features(j);
        for (std::size_t i = 0; i < probe.size(); ++i)
            probe[i] = (s >> i) & 1u ? y[i] : x[i];
        acc += classifier(probe);
    }
    return acc / static_cast<double>(dataset.size());
}

std::mt19937_64 seeded_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

} // namespace

double qii_value(const Dataset& dataset, std::size_t poi_index, FeatureSet s,
                 const Classifier& classifier, const QiiConfig& config) {
    dataset.check_index(poi_index);
    if (dataset.dimension() < 32 && s >= (FeatureSet{1} << dataset.dimension()))
        raise(Status::InvalidArgument, "feature set out of range");
    const auto& x = dataset.features(poi_index);
    if (config.mode == QiiMode::Exact) return qii_value_exact(dataset, x, s, classifier);

    auto rng = seeded_engine(config.rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, dataset.size() - 1);
    std::vector<double> probe = x;
    double acc = 0.0;
    for (std::size_t trial = 0; trial < config.sample_count; ++trial) {
        const auto& y = dataset.features(pick(rng));
        for (std::size_t i = 0; i < probe.size(); ++i)
            probe[i] = (s >> i) & 1u ? y[i] : x[i];
        acc += classifier(probe);
    }
    return acc / static_cast<double>(config.sample_count);
}

InfluenceVector qii_influence(const Dataset& dataset, std::size_t poi_index,
                              const Classifier& classifier, const QiiConfig& config) {
    dataset.check_index(poi_index);
    const std::size_t n = dataset.dimension();
    const auto& x = dataset.features(poi_index);
    InfluenceVector out;
    out.poi_index = poi_index;
    out.values.assign(n, 0.0);

    if (config.mode == QiiMode::Exact) {
        if (n > 20)
            raise(Status::Capacity,
                  "exact QII enumerates 2^n coalitions and is capped at n <= 20; "
                  "use sampled mode");
        // Memoize v(S; x) over all coalitions, then take the Shapley sum.
        const std::size_t table_size = std::size_t{1} << n;
        std::vector<double> v(table_size);
        for (FeatureSet s = 0; s < table_size; ++s)
            v[s] = qii_value_exact(dataset, x, s, classifier);
        std::vector<double> weight(n);
        for (std::size_t k = 0; k < n; ++k) {
            double binom = 1.0;
            for (std::size_t j = 1; j <= k; ++j)
                binom = binom * static_cast<double>(n - 1 - (j - 1)) / static_cast<double>(j);
            weight[k] = 1.0 / (static_cast<double>(n) * binom);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const FeatureSet bit = FeatureSet{1} << i;
            double total = 0.0;
            for (FeatureSet s = 0; s < table_size; ++s) {
                if (s & bit) continue;
                const int k = std::popcount(s);
                total += weight[static_cast<std::size_t>(k)] * (v[s | bit] - v[s]);
            }
            out.values[i] = total;
        }
        return out;
    }

    // Sampled mode: random feature orderings; the predecessors of i form S,
    // and the marginal v(S u {i}) - v(S) is evaluated exactly. Deterministic
    // for a fixed seed.
    auto rng = seeded_engine(config.rng_seed);
    if (config.sample_count == 0)
        raise(Status::InvalidArgument, "sample_count must be positive");
    if (n > 32)
        raise(Status::Capacity, "sampled QII coalition masks are capped at n <= 32");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t trial = 0; trial < config.sample_count; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        FeatureSet s = 0;
        double v_s = qii_value_exact(dataset, x, s, classifier);
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::size_t i = order[pos];
            const FeatureSet next = s | (FeatureSet{1} << i);
            const double v_next = qii_value_exact(dataset, x, next, classifier);
            out.values[i] += v_next - v_s;
            s = next;
            v_s = v_next;
        }
    }
    for (double& val : out.values) val /= static_cast<double>(config.sample_count);
    return out;
}

} // namespace mimkit
