#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"

namespace mimkit {

/// Exact rational with normalized sign and gcd-reduced terms. Sized for the
/// combinatorial identities in this module (n <= 20), not for general use.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    Rational operator+(const Rational& other) const;
    bool operator==(const Rational& other) const { return num == other.num && den == other.den; }
};

using Coalition = std::uint32_t; // bit i set <=> player i in the coalition

/// Characteristic-function game over at most 20 players; the value table is
/// indexed by coalition bitmask and has exactly 2^n entries.
class CooperativeGame {
public:
    CooperativeGame(std::size_t players, std::vector<double> values);

    std::size_t players() const { return players_; }
    Coalition full_coalition() const { return static_cast<Coalition>((1u << players_) - 1); }
    double value(Coalition s) const;
    const std::vector<double>& values() const { return values_; }
    bool is_simple() const { return simple_; }

    void check_player(std::size_t i) const;

private:
    std::size_t players_;
    std::vector<double> values_;
    bool simple_;
};

/// All 2^n coalition indicator vectors as a binary dataset; labels are the
/// 0/1 game values remapped to -1/+1. Simple games only.
Dataset game_to_dataset(const CooperativeGame& game);

/// Same point cloud, but keeping the raw v(S) as regression scores; works for
/// any game.
Dataset game_to_dataset_regression(const CooperativeGame& game);

/// phi_i(S) = sum over coalitions T containing i of (v(T) - v(S)) / |S xor T|,
/// defined for i not in S.
double setwise_influence(const CooperativeGame& game, Coalition s, std::size_t player);

/// phi_i(empty) = sum over T containing i of v(T) / |T|. Coincides with
/// setwise_influence(game, empty, i) exactly when v(empty) = 0, the usual
/// normalization.
double cost_sharing_influence(const CooperativeGame& game, std::size_t player);

/// Sample form: same sum restricted to the listed coalitions that contain i.
/// Duplicate coalitions in the sample are rejected.
double cost_sharing_influence(const std::vector<std::pair<Coalition, double>>& sample,
                              std::size_t player);

/// psi_i = sum over S not containing i of phi_i(S); direct pair enumeration
/// over 4^(n-1) coalition pairs, capped at n <= 14.
double psi_influence(const CooperativeGame& game, std::size_t player);

/// Average marginal contribution with 1/2^n normalization.
double banzhaf(const CooperativeGame& game, std::size_t player);

/// Classic weighted marginal sum, weights 1 / (n * C(n-1, |S|)).
double shapley(const CooperativeGame& game, std::size_t player);

struct ZetaCounts {
    std::vector<long long> per_k; // per_k[k] = #{T subset of N\{i} : |S xor T| = k}
    Rational total;               // sum of per_k[k] / (k+1)
};

/// Count coalitions by symmetric-difference size via direct enumeration.
/// Requires player not in S.
ZetaCounts zeta(std::size_t players, Coalition s, std::size_t player);

struct PsiBanzhafReport {
    double psi = 0.0;
    double banzhaf = 0.0;
    double factor = 0.0; // 2^n (2^n - 1) / n
    double residual = 0.0;
};

/// Evaluate both sides of psi_i = 2^n(2^n-1)/n * beta_i independently and
/// report the residual. Capped at n <= 14 (psi enumeration).
PsiBanzhafReport verify_psi_banzhaf(const CooperativeGame& game, std::size_t player);

} // namespace mimkit
