#pragma once

#include <functional>

#include "core.hpp"

namespace mimkit {

using AlphaFn = std::function<double(double)>;

/// Influence at the point of interest: sum over the other points of
/// (y - x) * alpha(||y - x||), signed +1 when labels match and -1 when they
/// differ. Zero-distance neighbors contribute nothing. Binary mode only.
InfluenceVector mim_influence(const Dataset& dataset, std::size_t poi_index,
                              const WeightKernel& kernel);
InfluenceVector mim_influence(const Dataset& dataset, std::size_t poi_index, const AlphaFn& alpha);

/// Regression variant: the label-match sign is replaced by the score delta
/// c(y) - c(x). Accepts either mode (binary labels are just +/-1 scores).
InfluenceVector mim_regression_influence(const Dataset& dataset, std::size_t poi_index,
                                         const WeightKernel& kernel);
InfluenceVector mim_regression_influence(const Dataset& dataset, std::size_t poi_index,
                                         const AlphaFn& alpha);

/// Weighted total cosine similarity of the direction phi against the labeled
/// displacement field around the POI:
///   sum_y alpha0(||y - x||) * cos(y - x, phi) * sign(labels match)
/// Zero-distance points are skipped; phi must be nonzero.
double objective_value(const std::vector<double>& phi, const Dataset& dataset,
                       std::size_t poi_index, const WeightKernel& alpha0);
double objective_value(const std::vector<double>& phi, const Dataset& dataset,
                       std::size_t poi_index, const AlphaFn& alpha0);

struct CosineAggregate {
    double norm = 0.0;
    std::vector<double> direction; // unit vector; zero vector when degenerate
    bool degenerate = false;       // the weighted sum cancelled to zero
};

/// Collapse a weighted cosine sum: returns norm and direction of
/// sum_i w_i * v_i / ||v_i||. Zero vectors in the input are skipped; an input
/// with no nonzero vector raises Status::Degenerate.
CosineAggregate cosine_aggregate(const std::vector<std::pair<std::vector<double>, double>>& vectors);

/// cos(a, b); raises Status::Degenerate when either vector is zero.
double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

} // namespace mimkit
