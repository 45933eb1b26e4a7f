// Verification suites behind the `verify` command: every library invariant
// as a named check with an observed deviation and a tolerance.
//
// The "analytic" suite exercises closed-form identities only; the "oracle"
// suite runs the density-matrix and quadrature cross-checks.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spincorr/jacobi.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/measures.hpp"
#include "spincorr/numeric.hpp"
#include "spincorr/operators.hpp"
#include "spincorr/oracle.hpp"
#include "spincorr/quadrature.hpp"
#include "spincorr/spin.hpp"

namespace spincorr::verify {

struct Check {
    std::string name;
    std::string suite;  // "analytic" or "oracle"
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Options {
    std::string suite = "all";  // analytic | oracle | all
    std::optional<double> tol_override;
    int n_theta = 64;
    int n_phi = 128;
};

namespace detail {

inline PairConfig pair(int twice_s1, int twice_s2) {
    return PairConfig(SpinNumber(twice_s1), SpinNumber(twice_s2));
}

inline const std::vector<PairConfig>& standard_pairs() {
    static const std::vector<PairConfig> pairs = {
        pair(1, 1), pair(1, 3), pair(3, 3), pair(2, 4), pair(9, 9), pair(1, 9)};
    return pairs;
}

inline const std::vector<SpinNumber>& standard_spins() {
    static const std::vector<SpinNumber> spins = {SpinNumber(1), SpinNumber(2), SpinNumber(3),
                                                  SpinNumber(9)};
    return spins;
}

class Reporter {
  public:
    Reporter(std::vector<Check>& out, const Options& opt) : out_(out), opt_(opt) {}

    void add(const std::string& name, const std::string& suite, double deviation,
             double default_tol) {
        Check c;
        c.name = name;
        c.suite = suite;
        c.max_deviation = deviation;
        c.tolerance = opt_.tol_override.value_or(default_tol);
        c.pass = deviation <= c.tolerance;
        out_.push_back(std::move(c));
    }

  private:
    std::vector<Check>& out_;
    const Options& opt_;
};

// ---------------------------------------------------------------- analytic

inline double check_scs_overlap_law(std::mt19937& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double dev = 0.0;
    for (SpinNumber s : standard_spins()) {
        for (int k = 0; k < 20; ++k) {
            const BlochPoint a(std::acos(2.0 * u01(rng) - 1.0), 2.0 * std::numbers::pi * u01(rng));
            const BlochPoint b(std::acos(2.0 * u01(rng) - 1.0), 2.0 * std::numbers::pi * u01(rng));
            const Complex overlap =
                inner_product(coherent_amplitudes(s, a), coherent_amplitudes(s, b));
            const double cos_angle =
                std::cos(a.theta) * std::cos(b.theta) +
                std::sin(a.theta) * std::sin(b.theta) * std::cos(a.phi - b.phi);
            const double expected = integer_power(0.5 * (1.0 + cos_angle), s.twice());
            dev = std::max(dev, std::abs(std::norm(overlap) - expected));
        }
    }
    return dev;
}

inline double check_isotropic_moment_quantum() {
    double dev = 0.0;
    for (int twice_s : {1, 2, 3, 9, 19, 49}) {
        const SpinNumber s(twice_s);
        KahanSum sum;
        for (int i = 0; i < s.dimension(); ++i) {
            const double m = s.m(i);
            sum.add(m * m);
        }
        const double lhs = sum.value() / s.dimension();
        const double rhs = s.value() * (s.value() + 1.0) / 3.0;
        dev = std::max(dev, relative_deviation(lhs, rhs));
    }
    return dev;
}

inline double check_isotropic_moment_classical(const QuadratureRule& rule) {
    double dev = 0.0;
    for (int twice_s : {1, 3, 9, 49}) {
        const double s = 0.5 * twice_s;
        const double lhs = 0.5 * rule.polar_integral([&](double x) { return s * x * s * x; });
        dev = std::max(dev, relative_deviation(lhs, s * s / 3.0));
    }
    return dev;
}

inline double check_max_state_fluctuations() {
    double dev = 0.0;
    for (SpinNumber s : standard_spins()) {
        const ComplexMatrix sx = build_sx(s);
        const ComplexMatrix sy = build_sy(s);
        const ComplexMatrix sum = sx * sx + sy * sy;
        // state |S> is the first basis vector
        dev = std::max(dev, relative_deviation(sum(0, 0).real(), s.value()));
    }
    return dev;
}

inline std::vector<double> tau_grid(double lo, double hi, int n) {
    std::vector<double> taus(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        taus[static_cast<std::size_t>(k)] = lo + (hi - lo) * k / static_cast<double>(n - 1);
    return taus;
}

inline double check_decomposition_identities() {
    using namespace measures;
    double dev = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        for (double tau : tau_grid(0.0, 4.0 * std::numbers::pi, 81)) {
            const double total = total_mutual_information(cfg, tau);
            const double scale = 1.0 + std::abs(total);
            dev = std::max(dev, std::abs(quantum_part_povm_both(cfg, tau) -
                                         (total - povm_mutual_information(cfg, tau))) /
                                    scale);
            dev = std::max(dev, std::abs(quantum_part_povm_one(cfg, tau) -
                                         (total - classical_part_povm_one(cfg, tau))) /
                                    scale);
            if (cfg.s1.twice() == 1) {
                dev = std::max(dev, std::abs(quantum_part_orthogonal(cfg, tau) -
                                             (total - classical_part_orthogonal(cfg, tau))) /
                                        scale);
            }
        }
    }
    return dev;
}

inline double check_measure_ordering() {
    using namespace measures;
    double violation = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        for (double tau : tau_grid(0.0, 2.0 * std::numbers::pi, 97)) {
            const double total = total_mutual_information(cfg, tau);
            const double povm = povm_mutual_information(cfg, tau);
            violation = std::max(violation, -povm);
            violation = std::max(violation, povm - total);
            for (SpinNumber s : {cfg.s1, cfg.s2}) {
                const double f = scs_phase_second_moment(s, tau);
                const double g = dephasing_factor(s, tau);
                violation = std::max(violation, f - 1.0);
                violation = std::max(violation, 1.0 / (4.0 * s.value() + 1.0) - f);
                violation = std::max(violation, g * g - f);
            }
            violation = std::max(violation, quantum_part_povm_one(cfg, tau) -
                                                quantum_part_povm_both(cfg, tau));
        }
    }
    return std::max(violation, 0.0);
}

inline double check_periodicity(std::mt19937& rng) {
    using namespace measures;
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    double dev = 0.0;
    const double period = 2.0 * std::numbers::pi;
    for (const PairConfig& cfg : standard_pairs()) {
        for (int k = 0; k < 16; ++k) {
            const double tau = u(rng);
            const auto rel = [&](double a, double b) {
                return std::abs(a - b) / (1.0 + std::abs(a));
            };
            dev = std::max(dev, rel(total_mutual_information(cfg, tau),
                                    total_mutual_information(cfg, tau + period)));
            dev = std::max(dev, rel(povm_mutual_information(cfg, tau),
                                    povm_mutual_information(cfg, tau + period)));
            dev = std::max(dev, rel(quantum_part_povm_both(cfg, tau),
                                    quantum_part_povm_both(cfg, tau + period)));
            dev = std::max(dev, rel(quantum_part_povm_one(cfg, tau),
                                    quantum_part_povm_one(cfg, tau + period)));
            for (SpinNumber s : {cfg.s1, cfg.s2}) {
                const double sign = (s.twice() % 2 == 0) ? 1.0 : -1.0;
                dev = std::max(dev, std::abs(dephasing_factor(s, tau + period) -
                                             sign * dephasing_factor(s, tau)));
            }
        }
    }
    return dev;
}

inline double check_revival_at_period() {
    using namespace measures;
    double dev = 0.0;
    const double tau = 2.0 * std::numbers::pi;
    for (const PairConfig& cfg : standard_pairs()) {
        const double scale = cfg.s1.value() * (cfg.s1.value() + 1.0) +
                             cfg.s2.value() * (cfg.s2.value() + 1.0);
        dev = std::max(dev, std::abs(total_mutual_information(cfg, tau)) / scale);
        dev = std::max(dev, std::abs(povm_mutual_information(cfg, tau)) / scale);
        dev = std::max(dev, std::abs(quantum_part_povm_both(cfg, tau)) / scale);
        dev = std::max(dev, std::abs(quantum_part_povm_one(cfg, tau)) / scale);
        if (cfg.s1.twice() == 1)
            dev = std::max(dev, std::abs(quantum_part_orthogonal(cfg, tau)) / scale);
    }
    return dev;
}

inline double check_classical_plateau() {
    using namespace measures;
    double violation = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        const double s1 = cfg.s1.value();
        const double s2 = cfg.s2.value();
        const double plateau = s1 * s1 + s2 * s2;
        for (double tau : {50.0, 120.0, 400.0}) {
            const double jc = classical_mutual_information(cfg, tau);
            // |sin x / x| <= 1/|x| gives a rigorous envelope
            const double bound = s1 * s1 / ((tau * s2) * (tau * s2)) +
                                 s2 * s2 / ((tau * s1) * (tau * s1));
            violation = std::max(violation, (std::abs(jc - plateau) - bound) / plateau);
            violation = std::max(violation, -jc / plateau);
        }
    }
    return std::max(violation, 0.0);
}

inline double check_large_s_classical_limit() {
    using namespace measures;
    double dev = 0.0;
    for (double tj : {1.0, 2.5, 5.0}) {
        const auto scaled_gap = [&](int twice_s) {
            const PairConfig cfg{SpinNumber(twice_s), SpinNumber(twice_s)};
            const double s = cfg.s2.value();
            const double tau = tj / s;
            return std::abs(total_mutual_information(cfg, tau) -
                            classical_mutual_information(cfg, tau)) /
                   (2.0 * s * s);
        };
        const double fit_c = 2.0 * 4.5 * scaled_gap(9);  // factor-two headroom at S = 9/2
        dev = std::max(dev, scaled_gap(19) * 9.5 / fit_c);
        dev = std::max(dev, scaled_gap(49) * 24.5 / fit_c);
    }
    return dev;
}

inline double check_small_tau_ratio_limits() {
    using namespace measures;
    double dev = 0.0;
    for (int twice_s : {3, 9, 49}) {
        const PairConfig cfg{SpinNumber(twice_s), SpinNumber(twice_s)};
        const double tau = twice_s >= 40 ? 1e-5 : 1e-4;
        const double total = total_mutual_information(cfg, tau);
        dev = std::max(dev, relative_deviation(quantum_part_povm_both(cfg, tau) / total,
                                               small_tau_limit_qgg_over_i(cfg)));
        dev = std::max(dev, relative_deviation(quantum_part_povm_one(cfg, tau) / total,
                                               small_tau_limit_qg_over_i(cfg)));
    }
    return dev;
}

inline double check_short_time_coefficients() {
    using namespace measures;
    double dev = 0.0;
    const double tau = 1e-4;
    for (const PairConfig& cfg : standard_pairs()) {
        const ShortTimeCoefficients c = short_time_coefficients(cfg);
        dev = std::max(dev, relative_deviation(total_mutual_information(cfg, tau) / (tau * tau),
                                               c.total));
        dev = std::max(dev, relative_deviation(
                                classical_mutual_information(cfg, tau) / (tau * tau), c.classical));
        dev = std::max(dev,
                       relative_deviation(povm_mutual_information(cfg, tau) / (tau * tau), c.povm));
    }
    return dev;
}

inline double check_midpoint_values() {
    using namespace measures;
    double dev = 0.0;
    for (SpinNumber s : standard_spins()) {
        dev = std::max(dev, std::abs(scs_phase_second_moment(s, std::numbers::pi) -
                                     1.0 / (2.0 * s.twice() + 1.0)));
    }
    // For half-integer pairs the dephasing factors vanish at tau = pi, so the
    // measure ratios coincide with the symbolic midpoint fractions.
    for (const PairConfig& cfg : {pair(1, 1), pair(1, 3), pair(3, 3), pair(9, 9), pair(1, 9)}) {
        const double tau = std::numbers::pi;
        const MidpointRatios r = midpoint_ratios(cfg);
        const double total = total_mutual_information(cfg, tau);
        dev = std::max(dev,
                       std::abs(classical_part_povm_one(cfg, tau) / total - r.cg2_over_i));
        dev = std::max(dev, std::abs(povm_mutual_information(cfg, tau) / total - r.cgg_over_i));
        if (cfg.s1.twice() == 1) {
            dev = std::max(dev,
                           std::abs(classical_part_orthogonal(cfg, tau) / total - r.co_over_i));
            dev = std::max(dev,
                           std::abs(quantum_part_orthogonal(cfg, tau) / total - r.qo_over_i));
        }
    }
    const MidpointRatios half = midpoint_ratios(pair(1, 1));
    dev = std::max(dev, std::abs(half.co_over_i - 0.5));
    dev = std::max(dev, std::abs(half.qo_over_i - 0.5));
    return dev;
}

inline double check_fid_basics() {
    using namespace measures;
    double dev = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        dev = std::max(dev, std::abs(free_induction_decay(cfg, 0.0) - 1.0));
        for (double tau : tau_grid(0.0, 4.0 * std::numbers::pi, 33))
            dev = std::max(dev, std::max(0.0, std::abs(free_induction_decay(cfg, tau)) - 1.0));
    }
    const PairConfig half = pair(1, 1);
    for (double tau : tau_grid(0.0, 4.0 * std::numbers::pi, 33))
        dev = std::max(dev, std::abs(free_induction_decay(half, tau) - std::cos(0.5 * tau)));
    return dev;
}

inline double check_orthogonal_equal_split() {
    using namespace measures;
    const PairConfig cfg = pair(1, 1);
    double dev = 0.0;
    for (double tau : tau_grid(0.0, 2.0 * std::numbers::pi, 41)) {
        const double total = total_mutual_information(cfg, tau);
        const double scale = 1.0 + std::abs(total);
        dev = std::max(dev,
                       std::abs(classical_part_orthogonal(cfg, tau) - 0.5 * total) / scale);
        dev = std::max(dev, std::abs(quantum_part_orthogonal(cfg, tau) - 0.5 * total) / scale);
    }
    return dev;
}

// ------------------------------------------------------------------ oracle

inline double check_quadrature_normalization(const QuadratureRule& rule) {
    const double four_pi = 4.0 * std::numbers::pi;
    const double total = rule.sphere_integral([](double, double) { return 1.0; });
    return relative_deviation(total, four_pi);
}

inline double check_scs_completeness(const QuadratureRule& rule) {
    double dev = 0.0;
    for (SpinNumber s : standard_spins()) {
        const auto d = static_cast<std::size_t>(s.dimension());
        ComplexMatrix acc(d);
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            const double theta = std::acos(rule.x[i]);
            for (std::size_t b = 0; b < rule.phi.size(); ++b) {
                const ComplexVector amp = coherent_amplitudes(s, BlochPoint(theta, rule.phi[b]));
                const double w = rule.wx[i] * rule.wphi;
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < d; ++c)
                        acc(r, c) += w * amp[r] * std::conj(amp[c]);
            }
        }
        acc *= Complex{static_cast<double>(d) / (4.0 * std::numbers::pi), 0.0};
        dev = std::max(dev, acc.max_abs_diff(ComplexMatrix::identity(d)));
    }
    return dev;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v{u(rng), u(rng)};
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

inline double check_eigensolver_reconstruction(std::mt19937& rng) {
    double dev = 0.0;
    for (std::size_t n : {2u, 5u, 10u, 36u, 100u}) {
        const ComplexMatrix a = random_hermitian(n, rng);
        const EigenSystem sys = hermitian_eigensystem(a);
        ComplexMatrix lambda(n);
        for (std::size_t i = 0; i < n; ++i) lambda(i, i) = sys.values[i];
        const ComplexMatrix recon = sys.vectors * lambda * sys.vectors.dagger();
        dev = std::max(dev, recon.max_abs_diff(a));
    }
    return dev;
}

inline double check_eigensolver_trace(std::mt19937& rng) {
    double dev = 0.0;
    for (std::size_t n : {3u, 12u, 48u}) {
        const ComplexMatrix a = random_hermitian(n, rng);
        const EigenSystem sys = hermitian_eigensystem(a);
        KahanSum sum;
        for (double v : sys.values) sum.add(v);
        dev = std::max(dev, std::abs(sum.value() - a.trace().real()) /
                                std::max(1.0, std::abs(a.trace().real())));
    }
    return dev;
}

inline double check_deviation_trace_invariant() {
    double dev = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        const double z = cfg.s1.dimension() * cfg.s2.dimension();
        const double expected = z *
                                (cfg.s1.value() * (cfg.s1.value() + 1.0) +
                                 cfg.s2.value() * (cfg.s2.value() + 1.0)) /
                                3.0;
        for (double tau : tau_grid(0.0, 2.0 * std::numbers::pi, 9)) {
            const ComplexMatrix d = oracle::deviation_operator(cfg, tau);
            const double tr2 = (d * d).trace().real();
            dev = std::max(dev, relative_deviation(tr2, expected));
            dev = std::max(dev, std::abs(d.trace().real()) / expected);
            dev = std::max(dev, d.hermiticity_defect());
        }
    }
    return dev;
}

inline double check_deviation_unitary_equivalence() {
    double dev = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        const auto d1 = static_cast<std::size_t>(cfg.s1.dimension());
        const auto d2 = static_cast<std::size_t>(cfg.s2.dimension());
        const ComplexMatrix sx = kron(build_sx(cfg.s1), ComplexMatrix::identity(d2)) +
                                 kron(ComplexMatrix::identity(d1), build_sx(cfg.s2));
        for (double tau : {0.37, 1.9, 4.4}) {
            const ComplexVector u = oracle::propagator_phases(cfg, tau);
            ComplexMatrix evolved(sx.dim());
            for (std::size_t i = 0; i < sx.dim(); ++i)
                for (std::size_t j = 0; j < sx.dim(); ++j)
                    evolved(i, j) = u[i] * sx(i, j) * std::conj(u[j]);
            dev = std::max(dev, evolved.max_abs_diff(oracle::deviation_operator(cfg, tau)));
        }
    }
    return dev;
}

inline double check_reduced_density_dephasing() {
    using namespace measures;
    double dev = 0.0;
    const double beta = 1e-3;
    for (const PairConfig& cfg : standard_pairs()) {
        for (double tau : {0.0, 0.9, 2.0 * std::numbers::pi}) {
            const oracle::EvolvedState st = oracle::evolve(cfg, tau, beta);
            const ComplexMatrix r1 = oracle::reduced_density(st, 1);
            const ComplexMatrix r2 = oracle::reduced_density(st, 2);
            ComplexMatrix e1 = ComplexMatrix::identity(static_cast<std::size_t>(cfg.s1.dimension()));
            e1 += Complex{beta * dephasing_factor(cfg.s2, tau), 0.0} * build_sx(cfg.s1);
            e1 *= Complex{1.0 / cfg.s1.dimension(), 0.0};
            ComplexMatrix e2 = ComplexMatrix::identity(static_cast<std::size_t>(cfg.s2.dimension()));
            e2 += Complex{beta * dephasing_factor(cfg.s1, tau), 0.0} * build_sx(cfg.s2);
            e2 *= Complex{1.0 / cfg.s2.dimension(), 0.0};
            dev = std::max(dev, r1.max_abs_diff(e1));
            dev = std::max(dev, r2.max_abs_diff(e2));
            dev = std::max(dev, std::abs(r1.trace().real() - 1.0));
            dev = std::max(dev, std::abs(r2.trace().real() - 1.0));
        }
    }
    return dev;
}

inline double check_entropy_expansion() {
    double dev = 0.0;
    const double beta = 1e-3;
    for (const PairConfig& cfg : {pair(1, 3), pair(3, 3)}) {
        for (double tau : {0.7, 2.2}) {
            const oracle::EvolvedState st = oracle::evolve(cfg, tau, beta);
            const double z = static_cast<double>(st.rho.dim());
            const double tr2 = (st.delta_rho * st.delta_rho).trace().real();
            const double expected =
                std::log2(z) - beta * beta / (2.0 * std::numbers::ln2) * tr2 / z;
            dev = std::max(dev, std::abs(oracle::von_neumann_entropy(st.rho) - expected));
        }
    }
    return dev;
}

inline double check_beta_scaling_mutual_information() {
    using namespace measures;
    double dev = 0.0;
    for (const PairConfig& cfg : {pair(1, 1), pair(1, 3), pair(3, 3), pair(9, 9)}) {
        const double scale = cfg.s1.value() * (cfg.s1.value() + 1.0) +
                             cfg.s2.value() * (cfg.s2.value() + 1.0);
        for (double tau : tau_grid(0.0, 2.0 * std::numbers::pi, 10)) {
            const double analytic = total_mutual_information(cfg, tau);
            if (analytic < 1e-8 * scale) continue;
            const double exact = oracle::mutual_information_extrapolated(cfg, tau);
            dev = std::max(dev, relative_deviation(exact, analytic));
        }
    }
    return dev;
}

inline double check_shannon_mi_povm(const QuadratureRule& rule) {
    using namespace measures;
    const PairConfig cfg = pair(1, 3);
    const double tau = 0.8;
    const double exact =
        oracle::shannon_mi_extrapolated(oracle::DistributionKind::povm, cfg, tau, rule);
    return relative_deviation(exact, povm_mutual_information(cfg, tau));
}

inline double check_shannon_mi_classical(const QuadratureRule& rule) {
    using namespace measures;
    const PairConfig cfg = pair(1, 3);
    const double tau = 1.1;
    const double exact =
        oracle::shannon_mi_extrapolated(oracle::DistributionKind::classical, cfg, tau, rule);
    return relative_deviation(exact, classical_mutual_information(cfg, tau));
}

inline double check_orthogonal_oracle_match() {
    using namespace measures;
    double dev = 0.0;
    for (const PairConfig& cfg : {pair(1, 3), pair(1, 9)}) {
        for (double tau : tau_grid(0.3, 2.0 * std::numbers::pi - 0.3, 8)) {
            const double analytic = classical_part_orthogonal(cfg, tau);
            if (analytic < 1e-6) continue;
            dev = std::max(dev,
                           relative_deviation(oracle::orthogonal_mi_extrapolated(cfg, tau),
                                              analytic));
        }
    }
    return dev;
}

inline double check_orthogonal_equal_split_oracle() {
    const PairConfig cfg = pair(1, 1);
    double dev = 0.0;
    for (double tau : {0.8, 2.4, 4.1}) {
        const oracle::EvolvedState st = oracle::evolve(cfg, tau, 1e-3);
        const double classical = oracle::orthogonal_measurement_information(st);
        const double total = oracle::mutual_information_exact(st);
        dev = std::max(dev, relative_deviation(classical, 0.5 * total));
    }
    return dev;
}

inline double check_povm_numeric_match(std::mt19937& rng, int points_per_pair = 25) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double dev = 0.0;
    for (int twice_s1 : {1, 2, 3, 9}) {
        for (int twice_s2 : {1, 2, 3, 9}) {
            if (twice_s2 < twice_s1) continue;
            const PairConfig cfg = pair(twice_s1, twice_s2);
            for (int k = 0; k < points_per_pair; ++k) {
                const double tau = 4.0 * std::numbers::pi * u01(rng);
                const oracle::EvolvedState st = oracle::evolve(cfg, tau, 1e-3);
                const BlochPoint p1(std::acos(2.0 * u01(rng) - 1.0),
                                    2.0 * std::numbers::pi * u01(rng));
                const BlochPoint p2(std::acos(2.0 * u01(rng) - 1.0),
                                    2.0 * std::numbers::pi * u01(rng));
                const double numeric = oracle::scs_joint_probability(st, p1, p2);
                const double analytic =
                    measures::povm_angle_distribution(cfg, tau, st.beta, p1, p2);
                dev = std::max(dev, std::abs(numeric - analytic));
            }
        }
    }
    return dev;
}

inline double check_f_series_vs_quadrature(const QuadratureRule& rule, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    double dev = 0.0;
    for (int twice_s : {1, 2, 3, 9, 49}) {
        const SpinNumber s(twice_s);
        for (int k = 0; k < 20; ++k) {
            const double tau = u(rng);
            dev = std::max(dev, std::abs(oracle::scs_second_moment_quadrature(s, tau, rule) -
                                         measures::scs_phase_second_moment(s, tau)));
        }
    }
    return dev;
}

inline double check_quadrature_self_consistency(const QuadratureRule& rule) {
    double dev = 0.0;
    const QuadratureRule doubled(rule.n_theta * 2, rule.n_phi * 2);
    const QuadratureRule halved(std::max(rule.n_theta / 2, 24), std::max(rule.n_phi / 2, 48));

    dev = std::max(dev, std::abs(rule.sphere_integral([](double, double) { return 1.0; }) -
                                 doubled.sphere_integral([](double, double) { return 1.0; })));
    const SpinNumber s9(9);
    dev = std::max(dev, std::abs(oracle::scs_second_moment_quadrature(s9, 1.1, rule) -
                                 oracle::scs_second_moment_quadrature(s9, 1.1, doubled)));

    // The four-dimensional integral is compared against the half-order rule;
    // both lie in the regime where the integrand is integrated exactly.
    const PairConfig cfg = pair(1, 3);
    const oracle::AngleDistribution dist{oracle::DistributionKind::povm, cfg, 0.8, 1e-3};
    dev = std::max(dev, std::abs(oracle::shannon_mutual_information(dist, rule) -
                                 oracle::shannon_mutual_information(dist, halved)));
    return dev;
}

inline double check_distribution_normalization(const QuadratureRule& rule) {
    double dev = 0.0;
    const PairConfig cfg = pair(1, 3);
    for (oracle::DistributionKind kind :
         {oracle::DistributionKind::povm, oracle::DistributionKind::classical}) {
        const oracle::AngleDistribution dist{kind, cfg, 0.9, 1e-3};
        dev = std::max(dev, std::abs(dist.normalization(rule) - 1.0));
    }
    return dev;
}

inline double check_positivity_guard() {
    double dev = 0.0;
    const PairConfig cfg = pair(1, 3);
    const double limit = oracle::positivity_beta_limit(cfg);
    const oracle::EvolvedState st = oracle::evolve(cfg, 1.3, 0.8 * limit);
    const EigenSystem sys = hermitian_eigensystem(st.rho);
    dev = std::max(dev, std::max(0.0, -sys.values.front()));
    bool rejected = false;
    try {
        (void)oracle::evolve(cfg, 1.3, 1.2 * limit);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    if (!rejected) dev = std::max(dev, 1.0);
    return dev;
}

inline double check_fid_trace_vs_closed_form() {
    using namespace measures;
    double dev = 0.0;
    for (const PairConfig& cfg : standard_pairs()) {
        for (double tau : tau_grid(0.0, 4.0 * std::numbers::pi, 17)) {
            dev = std::max(dev, std::abs(oracle::fid_by_trace(cfg, tau) -
                                         free_induction_decay(cfg, tau)));
        }
    }
    return dev;
}

}  // namespace detail

inline std::vector<Check> run_checks(const Options& opt) {
    if (opt.suite != "analytic" && opt.suite != "oracle" && opt.suite != "all")
        throw std::invalid_argument("verify: suite must be analytic, oracle or all");
    std::vector<Check> checks;
    detail::Reporter report(checks, opt);
    std::mt19937 rng(0x5eed5u);
    const QuadratureRule rule(opt.n_theta, opt.n_phi);

    const bool analytic = opt.suite != "oracle";
    const bool oracle_suite = opt.suite != "analytic";

    if (analytic) {
        report.add("scs_overlap_law", "analytic", detail::check_scs_overlap_law(rng), 1e-12);
        report.add("isotropic_moment_quantum", "analytic",
                   detail::check_isotropic_moment_quantum(), 1e-12);
        report.add("isotropic_moment_classical", "analytic",
                   detail::check_isotropic_moment_classical(rule), 1e-13);
        report.add("max_state_fluctuations", "analytic", detail::check_max_state_fluctuations(),
                   1e-12);
        report.add("decomposition_identities", "analytic",
                   detail::check_decomposition_identities(), 1e-14);
        report.add("measure_ordering", "analytic", detail::check_measure_ordering(), 1e-12);
        report.add("periodicity", "analytic", detail::check_periodicity(rng), 1e-12);
        report.add("revival_at_period", "analytic", detail::check_revival_at_period(), 1e-12);
        report.add("classical_plateau", "analytic", detail::check_classical_plateau(), 1e-12);
        report.add("large_s_classical_limit", "analytic",
                   detail::check_large_s_classical_limit(), 1.0);
        report.add("small_tau_ratio_limits", "analytic",
                   detail::check_small_tau_ratio_limits(), 1e-6);
        report.add("short_time_coefficients", "analytic",
                   detail::check_short_time_coefficients(), 1e-6);
        report.add("midpoint_values", "analytic", detail::check_midpoint_values(), 1e-12);
        report.add("fid_basics", "analytic", detail::check_fid_basics(), 1e-12);
        report.add("orthogonal_equal_split", "analytic",
                   detail::check_orthogonal_equal_split(), 1e-12);
    }
    if (oracle_suite) {
        report.add("quadrature_normalization", "oracle",
                   detail::check_quadrature_normalization(rule), 1e-13);
        report.add("scs_completeness", "oracle", detail::check_scs_completeness(rule), 1e-8);
        report.add("eigensolver_reconstruction", "oracle",
                   detail::check_eigensolver_reconstruction(rng), 1e-11);
        report.add("eigensolver_trace", "oracle", detail::check_eigensolver_trace(rng), 1e-12);
        report.add("deviation_trace_invariant", "oracle",
                   detail::check_deviation_trace_invariant(), 1e-12);
        report.add("deviation_unitary_equivalence", "oracle",
                   detail::check_deviation_unitary_equivalence(), 1e-13);
        report.add("reduced_density_dephasing", "oracle",
                   detail::check_reduced_density_dephasing(), 1e-12);
        report.add("entropy_expansion", "oracle", detail::check_entropy_expansion(), 1e-9);
        report.add("beta_scaling_mutual_information", "oracle",
                   detail::check_beta_scaling_mutual_information(), 1e-6);
        report.add("shannon_mi_povm", "oracle", detail::check_shannon_mi_povm(rule), 1e-6);
        report.add("shannon_mi_classical", "oracle", detail::check_shannon_mi_classical(rule),
                   1e-6);
        report.add("orthogonal_oracle_match", "oracle",
                   detail::check_orthogonal_oracle_match(), 1e-6);
        report.add("orthogonal_equal_split_oracle", "oracle",
                   detail::check_orthogonal_equal_split_oracle(), 1e-4);
        report.add("povm_numeric_match", "oracle", detail::check_povm_numeric_match(rng), 1e-12);
        report.add("f_series_vs_quadrature", "oracle",
                   detail::check_f_series_vs_quadrature(rule, rng), 1e-12);
        report.add("quadrature_self_consistency", "oracle",
                   detail::check_quadrature_self_consistency(rule), 1e-10);
        report.add("distribution_normalization", "oracle",
                   detail::check_distribution_normalization(rule), 1e-10);
        report.add("positivity_guard", "oracle", detail::check_positivity_guard(), 1e-12);
        report.add("fid_trace_vs_closed_form", "oracle",
                   detail::check_fid_trace_vs_closed_form(), 1e-10);
    }
    return checks;
}

}  // namespace spincorr::verify
