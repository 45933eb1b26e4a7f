// Closed-form high-temperature correlation measures of two coupled spins.
//
// Conventions used throughout:
//   * tau is the dimensionless time tJ/S2; the quantum period is tau = 2*pi.
//   * Every correlation measure is returned in units of B = beta^2/(6 ln 2),
//     i.e. the printed value times B gives bits.
//   * Entropies are base-2.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "spincorr/numeric.hpp"
#include "spincorr/spin.hpp"

namespace spincorr {

// The coupled pair. The convention S2 >= S1 is enforced because the
// interaction strength is scaled by the larger spin.
struct PairConfig {
    SpinNumber s1;
    SpinNumber s2;

    PairConfig() = default;
    PairConfig(SpinNumber a, SpinNumber b) : s1(a), s2(b) {
        if (!(s1 <= s2)) throw std::invalid_argument("PairConfig: requires S2 >= S1");
    }

    double tau_from_tj(double tj) const { return tj / s2.value(); }
    double tj_from_tau(double tau) const { return tau * s2.value(); }
};

// Correlation unit B = beta^2 / (6 ln 2); multiplying a measure in units of B
// by this number converts it to bits.
inline double correlation_unit(double beta) {
    return beta * beta / (6.0 * std::numbers::ln2);
}

namespace measures {

// Single-spin dephasing factor (1/d) sum_m cos(m tau). Evaluated as the
// finite cosine sum so that tau = 2*pi*k needs no special casing; the
// sine-ratio form is equivalent away from those points.
inline double dephasing_factor(SpinNumber s, double tau) {
    const int d = s.dimension();
    KahanSum sum;
    for (int i = 0; i < d; ++i) sum.add(std::cos(0.5 * s.twice_m(i) * tau));
    return sum.value() / d;
}

// Classical counterpart sin(tau S)/(tau S); series below |tau S| < 1e-4.
inline double classical_dephasing_factor(double s_magnitude, double tau) {
    if (!(s_magnitude > 0.0))
        throw std::invalid_argument("classical_dephasing_factor: magnitude must be positive");
    const double x = tau * s_magnitude;
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Spin-coherent-state expectation of the phase evolution,
//   <theta,phi| exp(-i * sign * tau * S_Z) |theta,phi>
//     = [cos(tau/2) - i * sign * cos(theta) * sin(tau/2)]^(2S).
// sign = +1 pairs with the raising component of the other spin in the
// measured angle distribution; sign = -1 is its conjugate.
inline std::complex<double> scs_phase_expectation(SpinNumber s, double theta, double tau,
                                                  int sign) {
    const std::complex<double> base{std::cos(0.5 * tau),
                                    -sign * std::cos(theta) * std::sin(0.5 * tau)};
    return integer_power(base, s.twice());
}

// Sphere average of |scs_phase_expectation|^2, by the exact binomial series
//   sum_n binom(2S, n) (cos^2 tau/2)^(2S-n) (sin^2 tau/2)^n / (2n+1).
// Lies in [1/(4S+1), 1], has period 2*pi and is symmetric about tau = pi.
inline double scs_phase_second_moment(SpinNumber s, double tau) {
    const int n = s.twice();
    const double c2 = std::cos(0.5 * tau) * std::cos(0.5 * tau);
    const double s2 = std::sin(0.5 * tau) * std::sin(0.5 * tau);
    KahanSum sum;
    for (int k = 0; k <= n; ++k) {
        sum.add(binomial_coefficient(n, k) * integer_power(c2, n - k) * integer_power(s2, k) /
                (2.0 * k + 1.0));
    }
    return sum.value();
}

// Total quantum mutual information I, units of B.
inline double total_mutual_information(const PairConfig& cfg, double tau) {
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double g2 = dephasing_factor(cfg.s2, tau);
    const double j1 = cfg.s1.value() * (cfg.s1.value() + 1.0);
    const double j2 = cfg.s2.value() * (cfg.s2.value() + 1.0);
    return j1 * (1.0 - g2 * g2) + j2 * (1.0 - g1 * g1);
}

// Mutual information of the two classical angular momenta J_C, units of B.
// Approaches S1^2 + S2^2 monotonically (with damped oscillations).
inline double classical_mutual_information(const PairConfig& cfg, double tau) {
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    if (s1 == 0.0 || s2 == 0.0) return 0.0;
    const double gc1 = classical_dephasing_factor(s1, tau);
    const double gc2 = classical_dephasing_factor(s2, tau);
    return s1 * s1 * (1.0 - gc2 * gc2) + s2 * s2 * (1.0 - gc1 * gc1);
}

// Mutual information of the angle distribution left by a joint
// spin-coherent-state POVM on both spins, J_GG, units of B.
inline double povm_mutual_information(const PairConfig& cfg, double tau) {
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double g2 = dephasing_factor(cfg.s2, tau);
    const double f1 = scs_phase_second_moment(cfg.s1, tau);
    const double f2 = scs_phase_second_moment(cfg.s2, tau);
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    return s1 * s1 * (f2 - g2 * g2) + s2 * s2 * (f1 - g1 * g1);
}

// Quantum part left after the two-spin POVM, Q_GG = I - J_GG, units of B.
inline double quantum_part_povm_both(const PairConfig& cfg, double tau) {
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double g2 = dephasing_factor(cfg.s2, tau);
    const double f1 = scs_phase_second_moment(cfg.s1, tau);
    const double f2 = scs_phase_second_moment(cfg.s2, tau);
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    return s1 * s1 * (1.0 - f2) + s2 * s2 * (1.0 - f1) + s1 * (1.0 - g2 * g2) +
           s2 * (1.0 - g1 * g1);
}

// Classical correlation extracted by a POVM on the second spin only, C_G,
// units of B. The asymmetric S1(S1+1) vs S2^2 prefactors are intentional.
inline double classical_part_povm_one(const PairConfig& cfg, double tau) {
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double g2 = dephasing_factor(cfg.s2, tau);
    const double f2 = scs_phase_second_moment(cfg.s2, tau);
    const double j1 = cfg.s1.value() * (cfg.s1.value() + 1.0);
    const double s2 = cfg.s2.value();
    return j1 * (f2 - g2 * g2) + s2 * s2 * (1.0 - g1 * g1);
}

// Quantum part after the one-spin POVM, Q_G = I - C_G, units of B.
inline double quantum_part_povm_one(const PairConfig& cfg, double tau) {
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double f2 = scs_phase_second_moment(cfg.s2, tau);
    const double j1 = cfg.s1.value() * (cfg.s1.value() + 1.0);
    const double s2 = cfg.s2.value();
    return j1 * (1.0 - f2) + s2 * (1.0 - g1 * g1);
}

inline void require_spin_half_first(const PairConfig& cfg, const char* what) {
    if (cfg.s1.twice() != 1)
        throw std::invalid_argument(std::string(what) +
                                    ": defined only for S1 = 1/2 (orthogonal projector)");
}

// Classical correlation from the orthogonal projective measurement on the
// first spin, C_O = S2(S2+1) sin^2(tau/2), units of B. Requires S1 = 1/2.
inline double classical_part_orthogonal(const PairConfig& cfg, double tau) {
    require_spin_half_first(cfg, "classical_part_orthogonal");
    const double sh = std::sin(0.5 * tau);
    return cfg.s2.value() * (cfg.s2.value() + 1.0) * sh * sh;
}

// Quantum part under the orthogonal measurement, Q_O = I - C_O
// = (3/4)[1 - g2^2], units of B. Requires S1 = 1/2.
inline double quantum_part_orthogonal(const PairConfig& cfg, double tau) {
    require_spin_half_first(cfg, "quantum_part_orthogonal");
    const double g2 = dephasing_factor(cfg.s2, tau);
    return 0.75 * (1.0 - g2 * g2);
}

// Normalized free induction decay of the pair,
//   [S1(S1+1) g2 + S2(S2+1) g1] / [S1(S1+1) + S2(S2+1)],
// confirmed against the exact trace in the oracle module.
inline double free_induction_decay(const PairConfig& cfg, double tau) {
    const double j1 = cfg.s1.value() * (cfg.s1.value() + 1.0);
    const double j2 = cfg.s2.value() * (cfg.s2.value() + 1.0);
    const double g1 = dephasing_factor(cfg.s1, tau);
    const double g2 = dephasing_factor(cfg.s2, tau);
    return (j1 * g2 + j2 * g1) / (j1 + j2);
}

// Fractions of classical/quantum correlation at the half period tau = pi,
// evaluated symbolically (for half-integer spins they coincide with the
// measure ratios at tau = pi, where the dephasing factors vanish).
struct MidpointRatios {
    double co_over_i = 0.0;   // orthogonal measurement, classical share
    double qo_over_i = 0.0;   // orthogonal measurement, quantum share
    double cg2_over_i = 0.0;  // POVM on the second spin, classical share
    double qg_over_i = 0.0;   // complement of cg2_over_i
    double cgg_over_i = 0.0;  // POVM on both spins, classical share
    double qgg_over_i = 0.0;  // complement of cgg_over_i
};

inline MidpointRatios midpoint_ratios(const PairConfig& cfg) {
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    const double j1 = s1 * (s1 + 1.0);
    const double j2 = s2 * (s2 + 1.0);
    const double denom = j1 + j2;
    MidpointRatios r;
    r.co_over_i = j2 / denom;
    r.qo_over_i = j1 / denom;
    r.cg2_over_i = (j1 / (4.0 * s2 + 1.0) + s2 * s2) / denom;
    r.qg_over_i = 1.0 - r.cg2_over_i;
    r.cgg_over_i = (s1 * s1 / (4.0 * s2 + 1.0) + s2 * s2 / (4.0 * s1 + 1.0)) / denom;
    r.qgg_over_i = 1.0 - r.cgg_over_i;
    return r;
}

// Leading tau^2 coefficients of I, J_C and J_GG (units of B per tau^2).
struct ShortTimeCoefficients {
    double total = 0.0;      // (2/3) S1(S1+1) S2(S2+1)
    double classical = 0.0;  // (2/3) S1^2 S2^2
    double povm = 0.0;       // equals the classical coefficient
};

inline ShortTimeCoefficients short_time_coefficients(const PairConfig& cfg) {
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    ShortTimeCoefficients c;
    c.total = (2.0 / 3.0) * s1 * (s1 + 1.0) * s2 * (s2 + 1.0);
    c.classical = (2.0 / 3.0) * s1 * s1 * s2 * s2;
    c.povm = c.classical;
    return c;
}

// Exact small-tau limits of the quantum-share ratios (their large-spin forms
// are 2/S and 1/S for equal spins).
inline double small_tau_limit_qgg_over_i(const PairConfig& cfg) {
    const double s1 = cfg.s1.value();
    const double s2 = cfg.s2.value();
    return 1.0 - s1 * s2 / ((s1 + 1.0) * (s2 + 1.0));
}

inline double small_tau_limit_qg_over_i(const PairConfig& cfg) {
    return 1.0 / (cfg.s2.value() + 1.0);
}

inline double small_tau_limit_qo_over_i() { return 0.5; }

// Angle distribution after the joint POVM, evaluated analytically. The
// normalization is with respect to the measure sin(theta) dtheta dphi on
// each sphere.
inline double povm_angle_distribution(const PairConfig& cfg, double tau, double beta,
                                      const BlochPoint& p1, const BlochPoint& p2) {
    const auto xi1 = scs_phase_expectation(cfg.s1, p1.theta, tau, +1);
    const auto xi2 = scs_phase_expectation(cfg.s2, p2.theta, tau, +1);
    const std::complex<double> e1{std::cos(p1.phi), std::sin(p1.phi)};
    const std::complex<double> e2{std::cos(p2.phi), std::sin(p2.phi)};
    const double w = cfg.s1.value() * std::sin(p1.theta) * (e1 * xi2).real() +
                     cfg.s2.value() * std::sin(p2.theta) * (e2 * xi1).real();
    const double u = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
    return u * (1.0 + beta * w);
}

// Angle distribution of the two classical angular momenta under the same
// coupling; the phase factor is exp(-i tau S cos(theta)) instead of the
// spin-coherent-state expectation.
inline double classical_angle_distribution(const PairConfig& cfg, double tau, double beta,
                                           const BlochPoint& p1, const BlochPoint& p2) {
    const double a1 = tau * cfg.s1.value() * std::cos(p1.theta);
    const double a2 = tau * cfg.s2.value() * std::cos(p2.theta);
    const std::complex<double> z1{std::cos(a1), -std::sin(a1)};
    const std::complex<double> z2{std::cos(a2), -std::sin(a2)};
    const std::complex<double> e1{std::cos(p1.phi), std::sin(p1.phi)};
    const std::complex<double> e2{std::cos(p2.phi), std::sin(p2.phi)};
    const double w = cfg.s1.value() * std::sin(p1.theta) * (e1 * z2).real() +
                     cfg.s2.value() * std::sin(p2.theta) * (e2 * z1).real();
    const double u = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
    return u * (1.0 + beta * w);
}

}  // namespace measures
}  // namespace spincorr
