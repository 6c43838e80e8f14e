#include "axioms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace mimkit {

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    // deterministic per-trial stream split
    return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<double> eval(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi) {
    return measure.eval(dataset, poi).values;
}

Dataset with_points(const Dataset& dataset,
                    const std::function<void(std::size_t, LabeledPoint&)>& edit) {
    std::vector<LabeledPoint> points = dataset.points();
    for (std::size_t i = 0; i < points.size(); ++i) edit(i, points[i]);
    return Dataset(std::move(points), dataset.mode(), dataset.schema());
}

Eigen::MatrixXd random_orthogonal(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) g(r, c) = gauss(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (std::size_t c = 0; c < n; ++c)
        if (r(c, c) < 0) q.col(c) = -q.col(c);
    // cover reflections (det = -1) as well as rotations
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) q.col(0) = -q.col(0);
    return q;
}

Dataset apply_matrix(const Dataset& dataset, const Eigen::MatrixXd& a) {
    return with_points(dataset, [&](std::size_t, LabeledPoint& p) {
        Eigen::Map<const Eigen::VectorXd> v(p.features.data(), p.features.size());
        Eigen::VectorXd rotated = a * v;
        std::copy(rotated.data(), rotated.data() + rotated.size(), p.features.begin());
    });
}

nlohmann::json matrix_to_json(const Eigen::MatrixXd& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j) {
    const std::size_t n = j.size();
    Eigen::MatrixXd a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = j[r][c].get<double>();
    return a;
}

constexpr double kContinuityContraction = 0.75;
constexpr std::size_t kNonbiasExactCap = 12;

// --- single-scenario residuals, shared by the checks and by replay ---

double shift_residual(const MeasureHandle& m, const Dataset& dataset, std::size_t poi,
                      const std::vector<double>& offset) {
    const auto base = eval(m, dataset, poi);
    const Dataset shifted = with_points(dataset, [&](std::size_t, LabeledPoint& p) {
        for (std::size_t i = 0; i < p.features.size(); ++i) p.features[i] += offset[i];
    });
    return max_abs_diff(base, eval(m, shifted, poi));
}

double rotation_residual(const MeasureHandle& m, const Dataset& dataset, std::size_t poi,
                         const Eigen::MatrixXd& a) {
    const auto base = eval(m, dataset, poi);
    Eigen::Map<const Eigen::VectorXd> v(base.data(), base.size());
    const Eigen::VectorXd expected = a * v;
    const auto rotated = eval(m, apply_matrix(dataset, a), poi);
    double worst = 0.0;
    for (std::size_t i = 0; i < rotated.size(); ++i)
        worst = std::max(worst, std::abs(expected(static_cast<Eigen::Index>(i)) - rotated[i]));
    return worst;
}

double flip_residual(const MeasureHandle& m, const Dataset& dataset, std::size_t poi) {
    const auto base = eval(m, dataset, poi);
    const Dataset flipped =
        with_points(dataset, [&](std::size_t, LabeledPoint& p) { p.label = -p.label; });
    return max_abs_diff(base, eval(m, flipped, poi));
}

// r(eps) for a fixed set of unit directions, then the contraction excess.
double continuity_response(const MeasureHandle& m, const Dataset& dataset, std::size_t poi,
                           const std::vector<std::vector<double>>& directions, double eps,
                           const std::vector<double>& base) {
    const Dataset perturbed = with_points(dataset, [&](std::size_t idx, LabeledPoint& p) {
        if (idx == poi) return;
        for (std::size_t i = 0; i < p.features.size(); ++i)
            p.features[i] += eps * directions[idx][i];
    });
    return max_abs_diff(base, eval(m, perturbed, poi));
}

struct ContinuityOutcome {
    double residual = 0.0;
    bool vacuous = false;
};

ContinuityOutcome continuity_residual(const MeasureHandle& m, const Dataset& dataset,
                                      std::size_t poi,
                                      const std::vector<std::vector<double>>& directions,
                                      double eps, double tol) {
    const auto base = eval(m, dataset, poi);
    const double r1 = continuity_response(m, dataset, poi, directions, eps, base);
    if (r1 <= tol) return {0.0, true}; // measure insensitive at this scale
    const double r2 = continuity_response(m, dataset, poi, directions, eps / 2.0, base);
    const double r4 = continuity_response(m, dataset, poi, directions, eps / 4.0, base);
    const double excess = std::max(r2 - kContinuityContraction * r1,
                                   r4 - kContinuityContraction * r2);
    return {std::max(0.0, excess), false};
}

struct MonotonicityOutcome {
    double residual = 0.0;
    bool vacuous = true; // every delta was the zero vector
};

MonotonicityOutcome monotonicity_residual(const MeasureHandle& m, const Dataset& dataset,
                                          std::size_t poi, const AdditionCandidate& candidate) {
    const auto base = eval(m, dataset, poi);
    std::vector<LabeledPoint> points = dataset.points();
    for (const auto& y : candidate.points)
        points.push_back(LabeledPoint{y, candidate.label});
    const Dataset grown(std::move(points), dataset.mode(), dataset.schema());
    const auto after = eval(m, grown, poi);

    const auto& x = dataset.features(poi);
    const double same = dataset.label(poi) == candidate.label ? 1.0 : -1.0;
    std::vector<double> delta(after.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        delta[i] = after[i] - base[i];
        if (delta[i] != 0.0) all_zero = false;
    }

    double violation = 0.0;
    // Sign condition on every coordinate all added points strictly increase.
    for (std::size_t i = 0; i < delta.size(); ++i) {
        bool strengthens = true;
        for (const auto& y : candidate.points)
            if (!(y[i] > x[i])) { strengthens = false; break; }
        if (!strengthens) continue;
        violation = std::max(violation, -same * delta[i]);
    }
    // Single additions must also be colinear with (y - x).
    if (candidate.points.size() == 1) {
        const auto& y = candidate.points.front();
        double zz = 0.0, dz = 0.0;
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const double z = y[i] - x[i];
            zz += z * z;
            dz += delta[i] * z;
        }
        if (zz > 0.0) {
            const double a = dz / zz;
            for (std::size_t i = 0; i < delta.size(); ++i)
                violation = std::max(violation, std::abs(delta[i] - a * (y[i] - x[i])));
            violation = std::max(violation, -same * a);
        }
    }
    return {std::max(violation, 0.0), all_zero};
}

struct NonbiasOutcome {
    std::vector<double> mean;
    std::vector<double> half_width; // 99% CI half-width (mc mode only)
};

NonbiasOutcome nonbias_exact(const MeasureHandle& m, const Dataset& dataset, std::size_t poi) {
    const std::size_t others = dataset.size() - 1;
    NonbiasOutcome out;
    out.mean.assign(dataset.dimension(), 0.0);
    const std::uint64_t total = std::uint64_t{1} << others;
    for (std::uint64_t labeling = 0; labeling < total; ++labeling) {
        std::uint64_t bits = labeling;
        const Dataset relabeled = with_points(dataset, [&](std::size_t idx, LabeledPoint& p) {
            if (idx == poi) {
                p.label = 1.0;
                return;
            }
            p.label = (bits & 1u) ? 1.0 : -1.0;
            bits >>= 1;
        });
        const auto phi = eval(m, relabeled, poi);
        for (std::size_t i = 0; i < phi.size(); ++i) out.mean[i] += phi[i];
    }
    for (double& v : out.mean) v /= static_cast<double>(total);
    return out;
}

NonbiasOutcome nonbias_mc(const MeasureHandle& m, const Dataset& dataset, std::size_t poi,
                          std::size_t samples, std::uint64_t seed) {
    NonbiasOutcome out;
    const std::size_t n = dataset.dimension();
    out.mean.assign(n, 0.0);
    std::vector<double> sq(n, 0.0);
    auto rng = trial_engine(seed, 0);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t t = 0; t < samples; ++t) {
        const Dataset relabeled = with_points(dataset, [&](std::size_t idx, LabeledPoint& p) {
            p.label = (idx == poi || coin(rng) == 1) ? 1.0 : -1.0;
        });
        const auto phi = eval(m, relabeled, poi);
        for (std::size_t i = 0; i < n; ++i) {
            out.mean[i] += phi[i];
            sq[i] += phi[i] * phi[i];
        }
    }
    out.half_width.assign(n, 0.0);
    const double count = static_cast<double>(samples);
    for (std::size_t i = 0; i < n; ++i) {
        out.mean[i] /= count;
        const double variance = std::max(0.0, sq[i] / count - out.mean[i] * out.mean[i]);
        out.half_width[i] = 2.5758 * std::sqrt(variance / count); // z for 99%
    }
    return out;
}

} // namespace

std::string AxiomReport::status_text() const {
    switch (status) {
    case AxiomStatus::Pass: return "pass";
    case AxiomStatus::PassVacuous: return "pass (vacuous)";
    case AxiomStatus::Fail: return "fail";
    }
    return "unknown";
}

std::string AxiomReport::to_json_line() const {
    nlohmann::json j;
    j["axiom"] = axiom;
    j["measure"] = measure;
    j["pass"] = passed();
    j["residual"] = residual;
    j["status"] = status_text();
    j["witness"] = witness.is_null() ? nlohmann::json(nullptr) : witness;
    if (!details.is_null()) j["details"] = details;
    return j.dump();
}

nlohmann::json dataset_to_json(const Dataset& dataset) {
    nlohmann::json j;
    j["mode"] = dataset.mode() == LabelMode::Binary ? "binary" : "regression";
    nlohmann::json features = nlohmann::json::array();
    nlohmann::json labels = nlohmann::json::array();
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        features.push_back(dataset.features(i));
        labels.push_back(dataset.label(i));
    }
    j["features"] = std::move(features);
    j["labels"] = std::move(labels);
    return j;
}

Dataset dataset_from_json(const nlohmann::json& j) {
    const auto& features = j.at("features");
    const auto& labels = j.at("labels");
    std::vector<LabeledPoint> points;
    points.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
        points.push_back(LabeledPoint{features[i].get<std::vector<double>>(),
                                      labels[i].get<double>()});
    const LabelMode mode =
        j.at("mode").get<std::string>() == "binary" ? LabelMode::Binary : LabelMode::Regression;
    return Dataset(std::move(points), mode);
}

AxiomReport check_shift(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                        std::size_t trials, std::uint64_t seed, double tol) {
    dataset.check_index(poi);
    if (trials < 1) raise(Status::InvalidArgument, "trials must be >= 1");
    AxiomReport report;
    report.axiom = "shift";
    report.measure = measure.name;
    std::vector<double> worst_offset;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_engine(seed, t);
        std::uniform_real_distribution<double> range(-10.0, 10.0);
        std::vector<double> offset(dataset.dimension());
        for (double& v : offset) v = range(rng);
        const double r = shift_residual(measure, dataset, poi, offset);
        if (r > report.residual) {
            report.residual = r;
            worst_offset = offset;
        }
    }
    if (report.residual > tol) {
        report.status = AxiomStatus::Fail;
        report.witness = {{"axiom", "shift"},
                          {"dataset", dataset_to_json(dataset)},
                          {"poi", poi},
                          {"offset", worst_offset}};
    }
    return report;
}

AxiomReport check_rotation(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                           std::size_t trials, std::uint64_t seed, double tol) {
    dataset.check_index(poi);
    if (trials < 1) raise(Status::InvalidArgument, "trials must be >= 1");
    AxiomReport report;
    report.axiom = "rotation";
    report.measure = measure.name;
    Eigen::MatrixXd worst;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_engine(seed, t);
        const Eigen::MatrixXd a = random_orthogonal(dataset.dimension(), rng);
        const double r = rotation_residual(measure, dataset, poi, a);
        if (r > report.residual) {
            report.residual = r;
            worst = a;
        }
    }
    if (report.residual > tol) {
        report.status = AxiomStatus::Fail;
        report.witness = {{"axiom", "rotation"},
                          {"dataset", dataset_to_json(dataset)},
                          {"poi", poi},
                          {"matrix", matrix_to_json(worst)}};
    }
    return report;
}

AxiomReport check_flip(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                       double tol) {
    dataset.check_index(poi);
    AxiomReport report;
    report.axiom = "flip";
    report.measure = measure.name;
    report.residual = flip_residual(measure, dataset, poi);
    if (report.residual > tol) {
        report.status = AxiomStatus::Fail;
        report.witness = {{"axiom", "flip"}, {"dataset", dataset_to_json(dataset)}, {"poi", poi}};
    }
    return report;
}

AxiomReport check_continuity(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                             double epsilon, std::uint64_t seed, double tol) {
    dataset.check_index(poi);
    if (!(epsilon > 0.0)) raise(Status::InvalidArgument, "epsilon must be positive");
    auto rng = trial_engine(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> directions(dataset.size());
    for (std::size_t idx = 0; idx < dataset.size(); ++idx) {
        auto& dir = directions[idx];
        dir.assign(dataset.dimension(), 0.0);
        if (idx == poi) continue;
        double norm = 0.0;
        while (norm == 0.0) {
            for (double& v : dir) v = gauss(rng);
            norm = std::sqrt(std::inner_product(dir.begin(), dir.end(), dir.begin(), 0.0));
        }
        for (double& v : dir) v /= norm;
    }
    const auto outcome = continuity_residual(measure, dataset, poi, directions, epsilon, tol);
    AxiomReport report;
    report.axiom = "continuity";
    report.measure = measure.name;
    report.residual = outcome.residual;
    if (outcome.vacuous) {
        report.status = AxiomStatus::PassVacuous;
    } else if (report.residual > tol) {
        report.status = AxiomStatus::Fail;
        report.witness = {{"axiom", "continuity"},
                          {"dataset", dataset_to_json(dataset)},
                          {"poi", poi},
                          {"epsilon", epsilon},
                          {"directions", directions}};
    }
    return report;
}

AxiomReport check_monotonicity(const MeasureHandle& measure, const Dataset& dataset,
                               std::size_t poi, std::size_t candidates, std::uint64_t seed,
                               double tol) {
    dataset.check_index(poi);
    if (candidates < 1) raise(Status::InvalidArgument, "candidate count must be >= 1");
    // Candidate points are drawn from a box 50% wider than the data range.
    std::vector<double> lo(dataset.dimension()), hi(dataset.dimension());
    for (std::size_t i = 0; i < dataset.dimension(); ++i) {
        lo[i] = hi[i] = dataset.features(0)[i];
        for (std::size_t j = 1; j < dataset.size(); ++j) {
            lo[i] = std::min(lo[i], dataset.features(j)[i]);
            hi[i] = std::max(hi[i], dataset.features(j)[i]);
        }
        const double pad = 0.25 * std::max(1.0, hi[i] - lo[i]);
        lo[i] -= pad;
        hi[i] += pad;
    }
    std::vector<AdditionCandidate> batch;
    batch.reserve(candidates);
    for (std::size_t t = 0; t < candidates; ++t) {
        auto rng = trial_engine(seed, t);
        AdditionCandidate c;
        c.label = std::uniform_int_distribution<int>(0, 1)(rng) == 1 ? 1.0 : -1.0;
        std::vector<double> y(dataset.dimension());
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] = std::uniform_real_distribution<double>(lo[i], hi[i])(rng);
        c.points.push_back(std::move(y));
        batch.push_back(std::move(c));
    }
    return check_monotonicity(measure, dataset, poi, batch, tol);
}

AxiomReport check_monotonicity(const MeasureHandle& measure, const Dataset& dataset,
                               std::size_t poi, const std::vector<AdditionCandidate>& candidates,
                               double tol) {
    dataset.check_index(poi);
    if (candidates.empty()) raise(Status::InvalidArgument, "no candidates supplied");
    AxiomReport report;
    report.axiom = "monotonicity";
    report.measure = measure.name;
    bool all_vacuous = true;
    const AdditionCandidate* worst = nullptr;
    for (const auto& candidate : candidates) {
        const auto outcome = monotonicity_residual(measure, dataset, poi, candidate);
        if (!outcome.vacuous) all_vacuous = false;
        if (outcome.residual > report.residual) {
            report.residual = outcome.residual;
            worst = &candidate;
        }
    }
    if (report.residual > tol) {
        report.status = AxiomStatus::Fail;
        report.witness = {{"axiom", "monotonicity"},
                          {"dataset", dataset_to_json(dataset)},
                          {"poi", poi},
                          {"added_points", worst->points},
                          {"added_label", worst->label}};
    } else if (all_vacuous) {
        report.status = AxiomStatus::PassVacuous;
    }
    return report;
}

AxiomReport check_nonbias(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                          NonbiasMode mode, std::size_t samples, std::uint64_t seed, double tol) {
    dataset.check_index(poi);
    AxiomReport report;
    report.axiom = "nonbias";
    report.measure = measure.name;
    report.details = {{"poi_label_fixed", 1.0}}; // expectation is conditional on c(x) = +1
    if (dataset.size() == 1) {
        report.status = AxiomStatus::PassVacuous;
        return report;
    }
    NonbiasOutcome outcome;
    if (mode == NonbiasMode::Exact) {
        if (dataset.size() > kNonbiasExactCap)
            raise(Status::Capacity,
                  "exact non-bias enumerates 2^(m-1) labelings and is capped at m <= " +
                      std::to_string(kNonbiasExactCap) + "; use Monte Carlo mode");
        outcome = nonbias_exact(measure, dataset, poi);
        for (double v : outcome.mean) report.residual = std::max(report.residual, std::abs(v));
        if (report.residual > tol) report.status = AxiomStatus::Fail;
    } else {
        if (samples < 2) raise(Status::InvalidArgument, "mc mode needs at least 2 samples");
        outcome = nonbias_mc(measure, dataset, poi, samples, seed);
        bool fail = false;
        for (std::size_t i = 0; i < outcome.mean.size(); ++i) {
            report.residual = std::max(report.residual, std::abs(outcome.mean[i]));
            if (std::abs(outcome.mean[i]) > std::max(tol, outcome.half_width[i])) fail = true;
        }
        if (fail) report.status = AxiomStatus::Fail;
        report.details["mean"] = outcome.mean;
        report.details["ci99_half_width"] = outcome.half_width;
    }
    if (report.status == AxiomStatus::Fail)
        report.witness = {{"axiom", "nonbias"},
                          {"dataset", dataset_to_json(dataset)},
                          {"poi", poi},
                          {"mode", mode == NonbiasMode::Exact ? "exact" : "mc"},
                          {"samples", samples},
                          {"seed", seed}};
    return report;
}

double replay_witness(const MeasureHandle& measure, const nlohmann::json& witness) {
    const nlohmann::json& w = witness.contains("witness") ? witness.at("witness") : witness;
    if (w.is_null()) raise(Status::InvalidArgument, "report carries no witness");
    const std::string axiom = w.at("axiom").get<std::string>();
    const Dataset dataset = dataset_from_json(w.at("dataset"));
    const std::size_t poi = w.at("poi").get<std::size_t>();
    if (axiom == "shift")
        return shift_residual(measure, dataset, poi, w.at("offset").get<std::vector<double>>());
    if (axiom == "rotation")
        return rotation_residual(measure, dataset, poi, matrix_from_json(w.at("matrix")));
    if (axiom == "flip") return flip_residual(measure, dataset, poi);
    if (axiom == "continuity") {
        const auto directions = w.at("directions").get<std::vector<std::vector<double>>>();
        return continuity_residual(measure, dataset, poi, directions,
                                   w.at("epsilon").get<double>(), 0.0)
            .residual;
    }
    if (axiom == "monotonicity") {
        AdditionCandidate candidate;
        candidate.points = w.at("added_points").get<std::vector<std::vector<double>>>();
        candidate.label = w.at("added_label").get<double>();
        return monotonicity_residual(measure, dataset, poi, candidate).residual;
    }
    if (axiom == "nonbias") {
        const bool exact = w.at("mode").get<std::string>() == "exact";
        const auto outcome =
            exact ? nonbias_exact(measure, dataset, poi)
                  : nonbias_mc(measure, dataset, poi, w.at("samples").get<std::size_t>(),
                               w.at("seed").get<std::uint64_t>());
        double worst = 0.0;
        for (double v : outcome.mean) worst = std::max(worst, std::abs(v));
        return worst;
    }
    raise(Status::InvalidArgument, "unknown axiom id '" + axiom + "'");
}

AxiomReport check_axiom(const std::string& axiom, const MeasureHandle& measure,
                        const Dataset& dataset, std::size_t poi, const AxiomOptions& options) {
    if (axiom == "shift")
        return check_shift(measure, dataset, poi, options.trials, options.seed, options.tolerance);
    if (axiom == "rotation")
        return check_rotation(measure, dataset, poi, options.trials, options.seed,
                              options.tolerance);
    if (axiom == "flip") return check_flip(measure, dataset, poi, options.tolerance);
    if (axiom == "continuity")
        return check_continuity(measure, dataset, poi, options.epsilon, options.seed,
                                options.tolerance);
    if (axiom == "monotonicity")
        return check_monotonicity(measure, dataset, poi, options.trials, options.seed,
                                  options.tolerance);
    if (axiom == "nonbias")
        return check_nonbias(measure, dataset, poi, options.nonbias_mode, options.nonbias_samples,
                             options.seed, options.tolerance);
    raise(Status::InvalidArgument, "unknown axiom '" + axiom +
                                       "' (expected shift, rotation, continuity, flip, "
                                       "monotonicity, or nonbias)");
}

} // namespace mimkit
