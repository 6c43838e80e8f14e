#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace mimkit {

enum class LabelMode { Binary, Regression };
enum class FeatureKind { Numeric, Categorical };

struct LabeledPoint {
    std::vector<double> features;
    double label = 0.0; // -1/+1 in binary mode, raw score in regression mode
};

struct FeatureSchema {
    FeatureKind kind = FeatureKind::Numeric;
    std::string name;                    // empty when the source had no header
    std::vector<std::string> categories; // dictionary for categorical columns; value = index
};

/// Immutable labeled dataset. All points share the same dimension; binary
/// labels are exactly -1 or +1 (enforced at construction).
class Dataset {
public:
    Dataset(std::vector<LabeledPoint> points, LabelMode mode);
    Dataset(std::vector<LabeledPoint> points, LabelMode mode, std::vector<FeatureSchema> schema);

    std::size_t size() const { return points_.size(); }
    std::size_t dimension() const { return dimension_; }
    LabelMode mode() const { return mode_; }

    const LabeledPoint& point(std::size_t i) const;
    const std::vector<LabeledPoint>& points() const { return points_; }
    const std::vector<FeatureSchema>& schema() const { return schema_; }

    double label(std::size_t i) const { return point(i).label; }
    const std::vector<double>& features(std::size_t i) const { return point(i).features; }

    bool has_categorical() const;

    /// Throws Error(Status::InvalidArgument) when `poi` is out of range.
    void check_index(std::size_t poi) const;

private:
    std::vector<LabeledPoint> points_;
    std::vector<FeatureSchema> schema_;
    LabelMode mode_;
    std::size_t dimension_ = 0;
};

struct InfluenceVector {
    std::vector<double> values;
    std::size_t poi_index = 0;
};

/// Nonnegative weight as a function of a strictly positive distance.
/// Custom kernels are monotone non-increasing piecewise-linear tables.
class WeightKernel {
public:
    enum class Kind { Constant, Inverse, InverseSquare, Table };

    static WeightKernel constant();
    static WeightKernel inverse();
    static WeightKernel inverse_square();
    static WeightKernel table(std::vector<double> distances, std::vector<double> weights);

    Kind kind() const { return kind_; }

    /// Evaluate at distance d > 0; d <= 0 raises Status::Domain.
    double operator()(double d) const;

private:
    WeightKernel(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<double> table_d_;
    std::vector<double> table_w_;
};

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

double kernel_eval(const WeightKernel& kernel, double d);

/// Recode every categorical feature as 1 where it equals the POI's value and
/// 0 elsewhere; numeric features pass through. Idempotent.
Dataset encode_categorical(const Dataset& dataset, std::size_t poi_index);

} // namespace mimkit
