#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace testkit {

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Bernoulli-default simulation of a unit payoff maturing at T2 seen from T1: the issuer defaults
/// with probability q and then pays `recovery`, otherwise 1. Rates are deterministic, so the
/// discount factor multiplies the simulated expectation.
inline McEstimate simulate_recovery(double q, double recovery, std::uint64_t paths, std::mt19937_64& rng) {
    std::bernoulli_distribution defaulted(q);
    std::uint64_t defaults = 0;
    for (std::uint64_t i = 0; i < paths; ++i) defaults += defaulted(rng) ? 1 : 0;
    const double n = double(paths);
    const double p = double(defaults) / n;
    const double mean = 1.0 - (1.0 - recovery) * p;
    // Sample variance of a two-point payoff.
    const double var = (1.0 - recovery) * (1.0 - recovery) * p * (1.0 - p) * n / std::max(n - 1.0, 1.0);
    return {mean, std::sqrt(var / n)};
}

/// Risky bond price P_d * E[payoff], from a simulated recovery.
inline McEstimate mc_risky_bond(double pd, const McEstimate& r) { return {pd * r.mean, pd * r.std_error}; }

/// Standard FRA: the risky Libor fixes at T1 off the simulated survival factor, the payoff
/// N*omega*tau*(L - K) is paid at T2. Its error comes from the delta method on 1/R.
inline McEstimate mc_fra_standard(double pd1, double pd2, double tau, double k, double notional, int omega,
                                  const McEstimate& r) {
    const double libor = (pd1 / (pd2 * r.mean) - 1.0) / tau;
    const double price = notional * omega * pd2 * tau * (libor - k);
    const double se = std::abs(notional) * pd1 / (r.mean * r.mean) * r.std_error;
    return {price, se};
}

/// Market FRA: the in-arrears payoff at T1 is settled against the risky bond, so each path pays
/// N*omega*[P_d1 - P_d2*(1 + K*tau)*X] with X the simulated recovery (1 or R_x).
inline McEstimate mc_fra_market(double pd1, double pd2, double tau, double k, double notional, int omega,
                                const McEstimate& r) {
    const double scale = notional * omega * pd2 * (1.0 + k * tau);
    return {notional * omega * pd1 - scale * r.mean, std::abs(scale) * r.std_error};
}

}  // namespace testkit
