// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "baselines.hpp"
#include "games.hpp"
#include "influence.hpp"

using namespace mimkit;

namespace {

Dataset make_dataset(std::vector<std::vector<double>> features, std::vector<double> labels,
                     LabelMode mode = LabelMode::Binary) {
    std::vector<LabeledPoint> points;
    for (std::size_t i = 0; i < features.size(); ++i)
        points.push_back(LabeledPoint{std::move(features[i]), labels[i]});
    return Dataset(std::move(points), mode);
}

Dataset random_dataset(std::mt19937_64& rng, std::size_t m, std::size_t n, double range) {
    std::uniform_real_distribution<double> coord(-range, range);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::vector<double>> features(m, std::vector<double>(n));
    std::vector<double> labels(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto& v : features[i]) v = coord(rng);
        labels[i] = coin(rng) ? 1.0 : -1.0;
    }
    return make_dataset(std::move(features), std::move(labels));
}

std::string fmt(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3g", v);
    return buffer;
}

// --- criterion 1: psi equals 2^n(2^n-1)/n * banzhaf on random games ---
bool criterion_psi_banzhaf(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> players(3, 8);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = players(rng);
        std::vector<double> values(std::size_t{1} << n);
        for (auto& v : values) v = value(rng);
        const CooperativeGame game(n, std::move(values));
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, verify_psi_banzhaf(game, i).residual);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    detail = "50 games, n in {3..8}, every player, max residual " + fmt(worst) + ", " +
             fmt(seconds) + " s";
    return worst < 1e-9 && seconds < 10.0;
}

// --- criterion 2: zeta counts match C(n-1,k); totals are (2^n-1)/n exactly ---
bool criterion_zeta(std::string& detail) {
    auto binomial = [](std::size_t n, std::size_t k) {
        long long r = 1;
        for (std::size_t j = 1; j <= k; ++j)
            r = r * static_cast<long long>(n - (j - 1)) / static_cast<long long>(j);
        return r;
    };
    long long checked = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
            if (s & 1u) continue; // player 0 outside S
            const auto counts = zeta(n, s, 0);
            for (std::size_t k = 0; k < n; ++k, ++checked)
                if (counts.per_k[k] != binomial(n - 1, k)) {
                    detail = "count mismatch at n=" + std::to_string(n);
                    return false;
                }
        }
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
            if (s & 1u) continue;
            const auto counts = zeta(n, s, 0);
            if (!(counts.total == Rational((1ll << n) - 1, static_cast<long long>(n)))) {
                detail = "total mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    detail = std::to_string(checked) + " binomial identities exact; totals (2^n-1)/n exact in "
             "rationals through n=12";
    return true;
}

// --- criterion 3: worked n=2 values, exact ---
bool criterion_worked_values(std::string& detail) {
    const CooperativeGame unanimity(2, {0, 0, 0, 1});
    const CooperativeGame dictator(2, {0, 1, 0, 1});
    const bool ok = banzhaf(unanimity, 0) == 0.25 && shapley(unanimity, 0) == 0.5 &&
                    psi_influence(unanimity, 0) == 1.5 &&
                    cost_sharing_influence(unanimity, 0) == 0.5 &&
                    banzhaf(dictator, 0) == 0.5 && shapley(dictator, 0) == 1.0 &&
                    psi_influence(dictator, 0) == 3.0 &&
                    cost_sharing_influence(dictator, 0) == 1.5;
    detail = "unanimity (0.25, 0.5, 1.5, 0.5) and dictator (0.5, 1, 3, 1.5) match exactly";
    return ok;
}

// --- criterion 4: the influence measure passes all six axiom checks ---
bool criterion_axiom_suite(std::string& detail) {
    std::mt19937_64 rng(104);
    std::uniform_int_distribution<std::size_t> dims(1, 8), sizes(2, 12);
    const MeasureHandle measure{"mim", [](const Dataset& d, std::size_t poi) {
                                    return mim_influence(d, poi, WeightKernel::inverse_square());
                                }};
    AxiomOptions options;
    options.trials = 6;
    options.nonbias_mode = NonbiasMode::Exact;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        options.seed = 9000 + trial;
        const auto d = random_dataset(rng, sizes(rng), dims(rng), 10.0);
        for (const char* axiom :
             {"shift", "rotation", "continuity", "flip", "monotonicity", "nonbias"}) {
            const auto report = check_axiom(axiom, measure, d, 0, options);
            worst = std::max(worst, report.residual);
            if (!report.passed() || report.residual >= 1e-9) {
                detail = std::string("failed ") + axiom + " on trial " +
                         std::to_string(trial) + " with residual " + fmt(report.residual);
                return false;
            }
        }
    }
    detail = "100 random datasets (n<=8, m<=12), six checks each, max residual " + fmt(worst) +
             "; non-bias by exact 2^(m-1) enumeration";
    return true;
}

// --- criterion 5: adding a point changes the output by exactly +/- alpha(d)(y-x) ---
bool criterion_increment_law(std::string& detail) {
    std::mt19937_64 rng(105);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    std::uniform_int_distribution<int> coin(0, 1);
    const auto kernels = {WeightKernel::constant(), WeightKernel::inverse(),
                          WeightKernel::inverse_square(),
                          WeightKernel::table({0.5, 2.0, 8.0}, {2.0, 1.0, 0.25})};
    double worst = 0.0;
    int additions = 0;
    while (additions < 1000) {
        const std::size_t n = 1 + static_cast<std::size_t>(additions) % 5;
        const auto d = random_dataset(rng, 3 + additions % 8, n, 10.0);
        for (const auto& kernel : kernels) {
            const auto base = mim_influence(d, 0, kernel);
            std::vector<double> y(n);
            for (auto& v : y) v = coord(rng);
            const double label = coin(rng) ? d.label(0) : -d.label(0);
            auto grown = d.points();
            grown.push_back({y, label});
            const auto after = mim_influence(Dataset(grown, LabelMode::Binary), 0, kernel);
            const double dist = euclidean_distance(y, d.features(0));
            const double a = kernel(dist) * (label == d.label(0) ? 1.0 : -1.0);
            for (std::size_t i = 0; i < n; ++i)
                worst = std::max(worst, std::abs((after.values[i] - base.values[i]) -
                                                 a * (y[i] - d.features(0)[i])));
            ++additions;
        }
    }
    detail = std::to_string(additions) + " additions over four kernel kinds, max deviation " +
             fmt(worst);
    return worst < 1e-12;
}

// --- criterion 6: the kernel-density baseline violates monotonicity and non-bias ---
bool criterion_parzen_counterexamples(std::string& detail) {
    const auto base = make_dataset({{1.5}, {0.3}, {0.0}, {0.15}, {0.45}}, {1, 1, -1, -1, -1});
    const double before = parzen_influence(base, 0, 0.5).values[0];
    auto grown = base.points();
    grown.push_back({{1.65}, 1.0});
    grown.push_back({{1.8}, 1.0});
    const double after = parzen_influence(Dataset(grown, LabelMode::Binary), 0, 0.5).values[0];
    const double margin = before - after;

    const auto same = make_dataset({{0.0}, {1.0}}, {1, 1});
    const auto diff = make_dataset({{0.0}, {1.0}}, {1, -1});
    const double expectation = 0.5 * (parzen_influence(same, 0, 1.0).values[0] +
                                      parzen_influence(diff, 0, 1.0).values[0]);

    detail = "strengthening additions decrease the influence by " + fmt(margin) +
             " (strict); two-point non-bias expectation " + fmt(expectation);
    return after < before && std::abs(expectation) > 1e-6;
}

// --- criterion 7: the influence direction maximizes the weighted cosine objective ---
bool criterion_optimization(std::string& detail) {
    std::mt19937_64 rng(107);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_gap = 0.0, worst_norm = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto d = random_dataset(rng, 6 + trial % 7, n, 5.0);
        const bool even = trial % 2 == 0;
        const AlphaFn alpha0 = [even](double dist) { return even ? 1.0 : 1.0 / dist; };
        const AlphaFn alpha = [even](double dist) {
            return even ? 1.0 / dist : 1.0 / (dist * dist);
        };
        const auto phi = mim_influence(d, 0, alpha);
        double norm = 0.0;
        for (double v : phi.values) norm += v * v;
        norm = std::sqrt(norm);
        if (norm < 1e-12) continue;
        const double at_mim = objective_value(phi.values, d, 0, alpha0);
        worst_norm = std::max(worst_norm, std::abs(at_mim - norm));
        for (int probe = 0; probe < 1000; ++probe) {
            std::vector<double> u(n);
            for (auto& v : u) v = gauss(rng);
            worst_gap = std::max(worst_gap, objective_value(u, d, 0, alpha0) - at_mim);
        }
    }
    detail = "20 datasets x 1000 random directions; worst excess over the influence direction " +
             fmt(worst_gap) + "; |objective - norm| max " + fmt(worst_norm);
    return worst_gap <= 1e-9 && worst_norm < 1e-9;
}

// --- criterion 8: analytic gradient of the density potential vs finite differences ---
bool criterion_parzen_gradient(std::string& detail) {
    std::mt19937_64 rng(108);
    std::uniform_real_distribution<double> sig(0.3, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto d = random_dataset(rng, 5 + trial % 20, n, 2.0);
        const double sigma = sig(rng);
        const auto phi = parzen_influence(d, 0, sigma);
        const auto& x = d.features(0);
        double diff = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto hi = x, lo = x;
            hi[i] += 1e-6;
            lo[i] -= 1e-6;
            double fd = (parzen_potential(hi, d, sigma) - parzen_potential(lo, d, sigma)) / 2e-6;
            if (d.label(0) == -1.0) fd = -fd;
            diff += (phi.values[i] - fd) * (phi.values[i] - fd);
            norm += phi.values[i] * phi.values[i];
        }
        worst = std::max(worst, std::sqrt(diff) / std::max(std::sqrt(norm), 1e-6));
    }
    detail = "50 random configurations, worst relative error " + fmt(worst);
    return worst < 1e-4;
}

// --- criterion 9: QII efficiency, symmetry, and seeded reproducibility ---
bool criterion_qii(std::string& detail) {
    std::mt19937_64 rng(109);
    double worst = 0.0;
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + trial % 7; // up to 8
        auto d = random_dataset(rng, 6 + trial % 5, n, 1.5);
        {   // ensure both labels occur so knn is meaningful
            auto pts = d.points();
            pts.front().label = 1.0;
            pts.back().label = -1.0;
            d = Dataset(pts, LabelMode::Binary);
        }
        const auto classifier = knn_classifier(d, 3);
        QiiConfig exact;
        const auto phi = qii_influence(d, 0, classifier, exact);
        double total = 0.0;
        for (double v : phi.values) total += v;
        const FeatureSet full = static_cast<FeatureSet>((FeatureSet{1} << n) - 1);
        const double expected =
            qii_value(d, 0, full, classifier, exact) - qii_value(d, 0, 0, classifier, exact);
        worst = std::max(worst, std::abs(total - expected));
    }

    // symmetry: dataset closed under swapping features 0/1, symmetric classifier
    const auto sym = make_dataset({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {-1, -1, -1, 1});
    const auto lin = linear_classifier({1.0, 1.0}, -1.5);
    const auto phi_sym = qii_influence(sym, 3, lin, QiiConfig{});
    const double asym = std::abs(phi_sym.values[0] - phi_sym.values[1]);

    // seeded sampled mode: bit-for-bit reproducible
    std::mt19937_64 rng2(110);
    const auto d = random_dataset(rng2, 8, 4, 1.5);
    const auto classifier = knn_classifier(d, 3);
    QiiConfig sampled{QiiMode::Sampled, 300, 77};
    const auto a = qii_influence(d, 0, classifier, sampled);
    const auto b = qii_influence(d, 0, classifier, sampled);
    const bool reproducible =
        std::memcmp(a.values.data(), b.values.data(), a.values.size() * sizeof(double)) == 0;

    detail = "efficiency residual max " + fmt(worst) + "; feature-swap asymmetry " + fmt(asym) +
             "; equal seeds bit-identical: " + (reproducible ? "yes" : "no");
    return worst < 1e-9 && asym < 1e-12 && reproducible;
}

// --- criterion 10: influence over coalition datasets reproduces the game formula ---
bool criterion_game_bridge(std::string& detail) {
    std::mt19937_64 rng(111);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 5; // up to 6 players
        std::vector<double> values(std::size_t{1} << n);
        for (auto& v : values) v = coin(rng);
        const CooperativeGame game(n, std::move(values));
        const auto data = game_to_dataset_regression(game);
        for (Coalition s = 0; s <= game.full_coalition(); ++s) {
            const auto phi = mim_regression_influence(data, s, WeightKernel::inverse_square());
            for (std::size_t i = 0; i < n; ++i) {
                // direct enumeration of the setwise sum, both sides of the identity
                double oracle = 0.0;
                for (Coalition t = 0; t <= game.full_coalition(); ++t) {
                    if (t == s) continue;
                    const double es = (s >> i) & 1u ? 1.0 : 0.0;
                    const double et = (t >> i) & 1u ? 1.0 : 0.0;
                    oracle += (game.value(s) - game.value(t)) /
                              static_cast<double>(std::popcount(s ^ t)) * (es - et);
                }
                worst = std::max(worst, std::abs(phi.values[i] - oracle));
                if (!((s >> i) & 1u))
                    worst = std::max(worst, std::abs(oracle - setwise_influence(game, s, i)));
            }
        }
    }
    detail = "30 random simple games (n<=6), every coalition and component, max deviation " +
             fmt(worst);
    return worst < 1e-9;
}

// --- criterion 11: no single-coordinate neighbors means zero counterfactual influence ---
bool criterion_counterfactual_zero(std::string& detail) {
    std::mt19937_64 rng(112);
    int datasets = 0;
    // continuous draws: distinct points differ in every coordinate
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto d = random_dataset(rng, 4 + trial % 10, n, 5.0);
        bool eligible = true;
        for (std::size_t a = 0; a < d.size() && eligible; ++a)
            for (std::size_t b = a + 1; b < d.size() && eligible; ++b) {
                std::size_t diffs = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (d.features(a)[i] != d.features(b)[i]) ++diffs;
                if (diffs == 1) eligible = false;
            }
        if (!eligible) continue;
        ++datasets;
        for (double v : counterfactual_influence_all(d))
            if (v != 0.0) {
                detail = "nonzero influence on an eligible dataset";
                return false;
            }
    }
    // discrete: even-parity 0/1 vectors differ pairwise in >= 2 coordinates
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<std::vector<double>> features;
        std::vector<double> labels;
        for (Coalition mask = 0; mask < (Coalition{1} << n); ++mask) {
            if (std::popcount(mask) % 2 != 0) continue;
            std::vector<double> point(n);
            for (std::size_t i = 0; i < n; ++i) point[i] = (mask >> i) & 1u ? 1.0 : 0.0;
            features.push_back(std::move(point));
            labels.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1.0 : -1.0);
        }
        const auto d = make_dataset(std::move(features), std::move(labels));
        ++datasets;
        for (double v : counterfactual_influence_all(d))
            if (v != 0.0) {
                detail = "nonzero influence on an even-parity grid";
                return false;
            }
    }
    detail = std::to_string(datasets) + " datasets without single-coordinate neighbors, every "
             "feature exactly zero";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "psi/banzhaf proportionality on random games", criterion_psi_banzhaf},
        {2, "vandermonde coalition counting", criterion_zeta},
        {3, "worked two-player values", criterion_worked_values},
        {4, "axiom suite on random datasets", criterion_axiom_suite},
        {5, "monotonicity increment law", criterion_increment_law},
        {6, "density-baseline counterexamples", criterion_parzen_counterexamples},
        {7, "optimization characterization", criterion_optimization},
        {8, "density-gradient correctness", criterion_parzen_gradient},
        {9, "qii efficiency, symmetry, reproducibility", criterion_qii},
        {10, "game-dataset bridge", criterion_game_bridge},
        {11, "counterfactual zero claim", criterion_counterfactual_zero},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, detail.c_str());
    }
    if (failures)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
