#include "influence.hpp"

#include <cmath>

namespace mimkit {

namespace {

double norm2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

// Shared accumulation loop; `signal` maps (label(y), label(x)) to the factor
// multiplying (y - x) * alpha(d). Summation runs in ascending point index so
// results are bit-reproducible.
template <typename Signal>
InfluenceVector accumulate(const Dataset& dataset, std::size_t poi_index, const AlphaFn& alpha,
                           Signal&& signal) {
    dataset.check_index(poi_index);
    const auto& x = dataset.features(poi_index);
    const double cx = dataset.label(poi_index);
    InfluenceVector out;
    out.poi_index = poi_index;
    out.values.assign(dataset.dimension(), 0.0);
    for (std::size_t j = 0; j < dataset.size(); ++j) {
        if (j == poi_index) continue;
        const auto& y = dataset.features(j);
        const double d = euclidean_distance(y, x);
        if (d == 0.0) continue;
        const double w = alpha(d) * signal(dataset.label(j), cx);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] += (y[i] - x[i]) * w;
    }
    return out;
}

} // namespace

InfluenceVector mim_influence(const Dataset& dataset, std::size_t poi_index,
                              const WeightKernel& kernel) {
    return mim_influence(dataset, poi_index, AlphaFn([&kernel](double d) { return kernel(d); }));
}

InfluenceVector mim_influence(const Dataset& dataset, std::size_t poi_index, const AlphaFn& alpha) {
    if (dataset.mode() != LabelMode::Binary)
        raise(Status::Mode,
              "mim_influence requires a binary-mode dataset; use mim_regression_influence for scores");
    return accumulate(dataset, poi_index, alpha,
                      [](double cy, double cx) { return cy == cx ? 1.0 : -1.0; });
}

InfluenceVector mim_regression_influence(const Dataset& dataset, std::size_t poi_index,
                                         const WeightKernel& kernel) {
    return mim_regression_influence(dataset, poi_index,
                                    AlphaFn([&kernel](double d) { return kernel(d); }));
}

InfluenceVector mim_regression_influence(const Dataset& dataset, std::size_t poi_index,
                                         const AlphaFn& alpha) {
    return accumulate(dataset, poi_index, alpha,
                      [](double cy, double cx) { return cy - cx; });
}

double objective_value(const std::vector<double>& phi, const Dataset& dataset,
                       std::size_t poi_index, const WeightKernel& alpha0) {
    return objective_value(phi, dataset, poi_index,
                           AlphaFn([&alpha0](double d) { return alpha0(d); }));
}

double objective_value(const std::vector<double>& phi, const Dataset& dataset,
                       std::size_t poi_index, const AlphaFn& alpha0) {
    dataset.check_index(poi_index);
    if (dataset.mode() != LabelMode::Binary)
        raise(Status::Mode, "objective_value requires a binary-mode dataset");
    if (phi.size() != dataset.dimension())
        raise(Status::Schema, "phi dimension does not match the dataset");
    const double phi_norm = norm2(phi);
    if (phi_norm == 0.0)
        raise(Status::Degenerate, "objective direction phi is the zero vector");
    const auto& x = dataset.features(poi_index);
    const double cx = dataset.label(poi_index);
    double total = 0.0;
    for (std::size_t j = 0; j < dataset.size(); ++j) {
        if (j == poi_index) continue;
        const auto& y = dataset.features(j);
        const double d = euclidean_distance(y, x);
        if (d == 0.0) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < phi.size(); ++i) dot += (y[i] - x[i]) * phi[i];
        const double cosine = dot / (d * phi_norm);
        total += alpha0(d) * cosine * (dataset.label(j) == cx ? 1.0 : -1.0);
    }
    return total;
}

CosineAggregate cosine_aggregate(
    const std::vector<std::pair<std::vector<double>, double>>& vectors) {
    std::size_t dim = 0;
    for (const auto& [v, w] : vectors)
        if (!v.empty()) { dim = v.size(); break; }
    if (dim == 0)
        raise(Status::InvalidArgument, "cosine_aggregate needs at least one vector");
    std::vector<double> sum(dim, 0.0);
    bool any_nonzero = false;
    for (const auto& [v, w] : vectors) {
        if (v.size() != dim)
            raise(Status::Schema, "cosine_aggregate vectors must share one dimension");
        const double n = norm2(v);
        if (n == 0.0) continue;
        any_nonzero = true;
        for (std::size_t i = 0; i < dim; ++i) sum[i] += v[i] / n * w;
    }
    if (!any_nonzero)
        raise(Status::Degenerate, "cosine_aggregate over all-zero vectors has no direction");
    CosineAggregate out;
    out.norm = norm2(sum);
    if (out.norm == 0.0) {
        out.degenerate = true;
        out.direction.assign(dim, 0.0);
    } else {
        out.direction = sum;
        for (double& x : out.direction) x /= out.norm;
    }
    return out;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        raise(Status::Schema, "cosine similarity between vectors of different dimension");
    const double na = norm2(a), nb = norm2(b);
    if (na == 0.0 || nb == 0.0)
        raise(Status::Degenerate, "cosine similarity with a zero vector is undefined");
    double dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    return dot / (na * nb);
}

} // namespace mimkit
