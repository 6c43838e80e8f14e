#include "games.hpp"

#include <bit>
#include <numeric>
#include <set>

namespace mimkit {

namespace {

constexpr std::size_t kMaxPlayers = 20;
constexpr std::size_t kMaxPsiPlayers = 14;

int popcount(Coalition s) { return std::popcount(s); }

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0)
        raise(Status::InvalidArgument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& other) const {
    return Rational(num * other.den + other.num * den, den * other.den);
}

CooperativeGame::CooperativeGame(std::size_t players, std::vector<double> values)
    : players_(players), values_(std::move(values)) {
    if (players_ < 1 || players_ > kMaxPlayers)
        raise(Status::Capacity, "player count must be in [1, " + std::to_string(kMaxPlayers) +
                                    "], got " + std::to_string(players_));
    const std::size_t expected = std::size_t{1} << players_;
    if (values_.size() != expected)
        raise(Status::Schema, "value table must have 2^n = " + std::to_string(expected) +
                                  " entries, got " + std::to_string(values_.size()));
    simple_ = true;
    for (double v : values_)
        if (v != 0.0 && v != 1.0) { simple_ = false; break; }
}

double CooperativeGame::value(Coalition s) const {
    if (s >= values_.size())
        raise(Status::InvalidArgument, "coalition mask " + std::to_string(s) + " out of range");
    return values_[s];
}

void CooperativeGame::check_player(std::size_t i) const {
    if (i >= players_)
        raise(Status::InvalidArgument, "player " + std::to_string(i) + " out of range (game has " +
                                           std::to_string(players_) + " players)");
}

Dataset game_to_dataset(const CooperativeGame& game) {
    if (!game.is_simple())
        raise(Status::Mode, "only simple games map to binary labels; use the regression-mode "
                            "conversion to keep raw values as scores");
    const std::size_t n = game.players();
    std::vector<LabeledPoint> points;
    points.reserve(std::size_t{1} << n);
    for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
        LabeledPoint p;
        p.features.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.features[i] = (s >> i) & 1u ? 1.0 : 0.0;
        p.label = 2.0 * game.value(s) - 1.0;
        points.push_back(std::move(p));
    }
    return Dataset(std::move(points), LabelMode::Binary);
}

Dataset game_to_dataset_regression(const CooperativeGame& game) {
    const std::size_t n = game.players();
    std::vector<LabeledPoint> points;
    points.reserve(std::size_t{1} << n);
    for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
        LabeledPoint p;
        p.features.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.features[i] = (s >> i) & 1u ? 1.0 : 0.0;
        p.label = game.value(s);
        points.push_back(std::move(p));
    }
    return Dataset(std::move(points), LabelMode::Regression);
}

double setwise_influence(const CooperativeGame& game, Coalition s, std::size_t player) {
    game.check_player(player);
    const Coalition bit = Coalition{1} << player;
    if (s & bit)
        raise(Status::InvalidArgument,
              "setwise influence is defined only for players outside the coalition");
    if (s > game.full_coalition())
        raise(Status::InvalidArgument, "coalition mask out of range");
    const double vs = game.value(s);
    double total = 0.0;
    // T ranges over all coalitions containing the player; |S xor T| >= 1 there.
    for (Coalition t = 0; t <= game.full_coalition(); ++t) {
        if (!(t & bit)) continue;
        total += (game.value(t) - vs) / popcount(s ^ t);
    }
    return total;
}

double cost_sharing_influence(const CooperativeGame& game, std::size_t player) {
    game.check_player(player);
    const Coalition bit = Coalition{1} << player;
    double total = 0.0;
    for (Coalition t = 0; t <= game.full_coalition(); ++t)
        if (t & bit) total += game.value(t) / popcount(t);
    return total;
}

double cost_sharing_influence(const std::vector<std::pair<Coalition, double>>& sample,
                              std::size_t player) {
    if (player >= kMaxPlayers)
        raise(Status::InvalidArgument, "player index out of range");
    std::set<Coalition> seen;
    for (const auto& [t, v] : sample)
        if (!seen.insert(t).second)
            raise(Status::InvalidArgument, "coalition sample contains duplicate mask " +
                                               std::to_string(t));
    const Coalition bit = Coalition{1} << player;
    double total = 0.0;
    for (const auto& [t, v] : sample)
        if (t & bit) total += v / popcount(t);
    return total;
}

double psi_influence(const CooperativeGame& game, std::size_t player) {
    game.check_player(player);
    if (game.players() > kMaxPsiPlayers)
        raise(Status::Capacity,
              "psi enumerates 4^(n-1) coalition pairs and is capped at n <= " +
                  std::to_string(kMaxPsiPlayers) +
                  "; use banzhaf() and the 2^n(2^n-1)/n factor instead");
    const Coalition bit = Coalition{1} << player;
    double total = 0.0;
    for (Coalition s = 0; s <= game.full_coalition(); ++s) {
        if (s & bit) continue;
        total += setwise_influence(game, s, player);
    }
    return total;
}

double banzhaf(const CooperativeGame& game, std::size_t player) {
    game.check_player(player);
    const Coalition bit = Coalition{1} << player;
    double total = 0.0;
    for (Coalition s = 0; s <= game.full_coalition(); ++s) {
        if (s & bit) continue;
        total += game.value(s | bit) - game.value(s);
    }
    return total / static_cast<double>(Coalition{1} << game.players());
}

double shapley(const CooperativeGame& game, std::size_t player) {
    game.check_player(player);
    const std::size_t n = game.players();
    // weight(k) = k!(n-k-1)!/n! = 1 / (n * C(n-1, k)), exact in double for n <= 20
    std::vector<double> weight(n);
    for (std::size_t k = 0; k < n; ++k) {
        double binom = 1.0;
        for (std::size_t j = 1; j <= k; ++j)
            binom = binom * static_cast<double>(n - 1 - (j - 1)) / static_cast<double>(j);
        weight[k] = 1.0 / (static_cast<double>(n) * binom);
    }
    const Coalition bit = Coalition{1} << player;
    double total = 0.0;
    for (Coalition s = 0; s <= game.full_coalition(); ++s) {
        if (s & bit) continue;
        total += weight[static_cast<std::size_t>(popcount(s))] *
                 (game.value(s | bit) - game.value(s));
    }
    return total;
}

ZetaCounts zeta(std::size_t players, Coalition s, std::size_t player) {
    if (players < 1 || players > kMaxPlayers)
        raise(Status::Capacity, "player count out of range");
    if (player >= players)
        raise(Status::InvalidArgument, "player index out of range");
    const Coalition bit = Coalition{1} << player;
    if (s & bit)
        raise(Status::InvalidArgument, "zeta requires the player outside the coalition");
    if (s >= (Coalition{1} << players))
        raise(Status::InvalidArgument, "coalition mask out of range");
    ZetaCounts out;
    out.per_k.assign(players, 0);
    // enumerate T over subsets of N \ {player}
    for (Coalition rest = 0; rest < (Coalition{1} << (players - 1)); ++rest) {
        Coalition t = 0;
        Coalition r = rest;
        for (std::size_t i = 0; i < players; ++i) {
            if (i == player) continue;
            if (r & 1u) t |= Coalition{1} << i;
            r >>= 1;
        }
        ++out.per_k[static_cast<std::size_t>(popcount(s ^ t))];
    }
    out.total = Rational(0, 1);
    for (std::size_t k = 0; k < out.per_k.size(); ++k)
        out.total = out.total + Rational(out.per_k[k], static_cast<long long>(k) + 1);
    return out;
}

PsiBanzhafReport verify_psi_banzhaf(const CooperativeGame& game, std::size_t player) {
    PsiBanzhafReport report;
    report.psi = psi_influence(game, player);
    report.banzhaf = banzhaf(game, player);
    const double two_n = static_cast<double>(Coalition{1} << game.players());
    report.factor = two_n * (two_n - 1.0) / static_cast<double>(game.players());
    report.residual = std::abs(report.psi - report.factor * report.banzhaf);
    return report;
}

} // namespace mimkit
