#include "core.hpp"

#include <cmath>

namespace mimkit {

const char* status_name(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::InvalidArgument: return "invalid argument";
    case Status::Schema: return "schema error";
    case Status::Mode: return "mode error";
    case Status::Domain: return "domain error";
    case Status::Capacity: return "capacity error";
    case Status::Parse: return "parse error";
    case Status::Io: return "i/o error";
    case Status::Degenerate: return "numerical degeneracy";
    case Status::NullPointer: return "null pointer";
    case Status::Internal: return "internal error";
    }
    return "unknown";
}

Dataset::Dataset(std::vector<LabeledPoint> points, LabelMode mode)
    : Dataset(std::move(points), mode, {}) {}

Dataset::Dataset(std::vector<LabeledPoint> points, LabelMode mode, std::vector<FeatureSchema> schema)
    : points_(std::move(points)), schema_(std::move(schema)), mode_(mode) {
    if (points_.empty())
        raise(Status::Schema, "dataset must contain at least one point");
    dimension_ = points_.front().features.size();
    if (schema_.empty())
        schema_.assign(dimension_, FeatureSchema{});
    if (schema_.size() != dimension_)
        raise(Status::Schema, "schema length does not match feature dimension");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (p.features.size() != dimension_)
            raise(Status::Schema, "point " + std::to_string(i) + " has dimension " +
                                      std::to_string(p.features.size()) + ", expected " +
                                      std::to_string(dimension_));
        if (!std::isfinite(p.label))
            raise(Status::Schema, "point " + std::to_string(i) + " has a non-finite label");
        if (mode_ == LabelMode::Binary && p.label != 1.0 && p.label != -1.0)
            raise(Status::Mode, "binary dataset requires labels -1 or +1, point " +
                                    std::to_string(i) + " has " + std::to_string(p.label));
    }
}

const LabeledPoint& Dataset::point(std::size_t i) const {
    check_index(i);
    return points_[i];
}

bool Dataset::has_categorical() const {
    for (const auto& s : schema_)
        if (s.kind == FeatureKind::Categorical) return true;
    return false;
}

void Dataset::check_index(std::size_t poi) const {
    if (poi >= points_.size())
        raise(Status::InvalidArgument, "point index " + std::to_string(poi) +
                                           " out of range (dataset has " +
                                           std::to_string(points_.size()) + " points)");
}

WeightKernel WeightKernel::constant() { return WeightKernel(Kind::Constant); }
WeightKernel WeightKernel::inverse() { return WeightKernel(Kind::Inverse); }
WeightKernel WeightKernel::inverse_square() { return WeightKernel(Kind::InverseSquare); }

WeightKernel WeightKernel::table(std::vector<double> distances, std::vector<double> weights) {
    if (distances.empty() || distances.size() != weights.size())
        raise(Status::InvalidArgument, "kernel table needs matching, nonempty distance/weight lists");
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (!std::isfinite(distances[i]) || distances[i] <= 0.0)
            raise(Status::InvalidArgument, "kernel table distances must be positive and finite");
        if (!std::isfinite(weights[i]) || weights[i] < 0.0)
            raise(Status::InvalidArgument, "kernel table weights must be nonnegative and finite");
        if (i > 0 && distances[i] <= distances[i - 1])
            raise(Status::InvalidArgument, "kernel table distances must be strictly increasing");
        if (i > 0 && weights[i] > weights[i - 1])
            raise(Status::InvalidArgument, "kernel table weights must be non-increasing");
    }
    WeightKernel k(Kind::Table);
    k.table_d_ = std::move(distances);
    k.table_w_ = std::move(weights);
    return k;
}

double WeightKernel::operator()(double d) const {
    if (!(d > 0.0))
        raise(Status::Domain, "kernel evaluated at non-positive distance " + std::to_string(d));
    switch (kind_) {
    case Kind::Constant:
        return 1.0;
    case Kind::Inverse:
        return 1.0 / d;
    case Kind::InverseSquare:
        return 1.0 / (d * d);
    case Kind::Table: {
        if (d <= table_d_.front()) return table_w_.front();
        if (d >= table_d_.back()) return table_w_.back();
        std::size_t hi = 1;
        while (table_d_[hi] < d) ++hi;
        const double t = (d - table_d_[hi - 1]) / (table_d_[hi] - table_d_[hi - 1]);
        return table_w_[hi - 1] + t * (table_w_[hi] - table_w_[hi - 1]);
    }
    }
    raise(Status::Internal, "unreachable kernel kind");
}

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        raise(Status::Schema, "distance between vectors of dimension " + std::to_string(a.size()) +
                                  " and " + std::to_string(b.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double kernel_eval(const WeightKernel& kernel, double d) { return kernel(d); }

Dataset encode_categorical(const Dataset& dataset, std::size_t poi_index) {
    dataset.check_index(poi_index);
    const auto& poi = dataset.features(poi_index);
    std::vector<LabeledPoint> points = dataset.points();
    std::vector<FeatureSchema> schema = dataset.schema();
    for (std::size_t j = 0; j < schema.size(); ++j) {
        if (schema[j].kind != FeatureKind::Categorical) continue;
        for (auto& p : points)
            p.features[j] = (p.features[j] == poi[j]) ? 1.0 : 0.0;
        schema[j].categories.clear(); // values are match flags now, not dictionary codes
    }
    return Dataset(std::move(points), dataset.mode(), std::move(schema));
}

} // namespace mimkit
