#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "json.hpp"

#include "core.hpp"

namespace mimkit {

/// Any influence measure under test: deterministic given identical inputs
/// (measures with internal sampling must capture their seed).
struct MeasureHandle {
    std::string name;
    std::function<InfluenceVector(const Dataset&, std::size_t)> eval;
};

enum class AxiomStatus { Pass, PassVacuous, Fail };

/// Outcome of one axiom check. A failing report always carries a witness:
/// the serialized dataset plus the transformation that exposed the worst
/// residual, replayable through replay_witness().
struct AxiomReport {
    std::string axiom;
    std::string measure;
    AxiomStatus status = AxiomStatus::Pass;
    double residual = 0.0;
    nlohmann::json witness; // null unless status == Fail
    nlohmann::json details; // optional extras (e.g. per-feature CI in mc mode)

    bool passed() const { return status != AxiomStatus::Fail; }
    std::string status_text() const;
    /// One JSON object per line, keys in alphabetical order.
    std::string to_json_line() const;
};

nlohmann::json dataset_to_json(const Dataset& dataset);
Dataset dataset_from_json(const nlohmann::json& j);

/// Compares the measure on the dataset against shifted copies, offsets drawn
/// uniformly from [-10, 10]^n.
AxiomReport check_shift(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                        std::size_t trials, std::uint64_t seed, double tol);

/// Random orthogonal maps (both determinant signs): residual of
/// A * phi(x, X) against phi(Ax, AX).
AxiomReport check_rotation(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                           std::size_t trials, std::uint64_t seed, double tol);

/// Negates every label and compares.
AxiomReport check_flip(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                       double tol);

/// Empirical falsifier: perturbs every non-POI point by a random vector of
/// norm epsilon and requires the response to contract as epsilon halves.
/// Residual is the worst contraction excess max(0, r(eps/2) - 0.75 r(eps)).
AxiomReport check_continuity(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                             double epsilon, std::uint64_t seed, double tol);

/// One candidate scenario: points added to the dataset, all sharing a label.
/// Random generation draws singletons; explicit batches model repeated
/// strengthening additions.
struct AdditionCandidate {
    std::vector<std::vector<double>> points;
    double label = 1.0;
};

AxiomReport check_monotonicity(const MeasureHandle& measure, const Dataset& dataset,
                               std::size_t poi, std::size_t candidates, std::uint64_t seed,
                               double tol);
AxiomReport check_monotonicity(const MeasureHandle& measure, const Dataset& dataset,
                               std::size_t poi, const std::vector<AdditionCandidate>& candidates,
                               double tol);

enum class NonbiasMode { Exact, MonteCarlo };

/// Averages the measure over labelings of the non-POI points with the POI
/// label fixed at +1. Exact mode enumerates all 2^(m-1) labelings (m <= 12);
/// Monte Carlo mode samples and reports a 99% confidence interval per
/// feature.
AxiomReport check_nonbias(const MeasureHandle& measure, const Dataset& dataset, std::size_t poi,
                          NonbiasMode mode, std::size_t samples, std::uint64_t seed, double tol);

/// Re-runs the single scenario recorded in a failing report and returns the
/// reproduced residual.
double replay_witness(const MeasureHandle& measure, const nlohmann::json& witness);

/// Runs one named axiom ("shift", "rotation", "continuity", "flip",
/// "monotonicity", "nonbias") with the given knobs.
struct AxiomOptions {
    std::size_t trials = 16;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double epsilon = 1e-6;           // continuity step
    NonbiasMode nonbias_mode = NonbiasMode::Exact;
    std::size_t nonbias_samples = 4000;
};

AxiomReport check_axiom(const std::string& axiom, const MeasureHandle& measure,
                        const Dataset& dataset, std::size_t poi, const AxiomOptions& options);

} // namespace mimkit
