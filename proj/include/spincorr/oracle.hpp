// Independent exact computations used to validate the closed-form measures:
// full density-matrix evolution, eigenvalue entropies, spin-coherent-state
// projections and Bloch-sphere quadrature.
//
// The evolved deviation operator is built directly from its closed form with
// diagonal phase matrices; nothing here exponentiates a Hamiltonian
// numerically. Mutual informations carry an O(beta^2) truncation that is
// removed by two-point Richardson extrapolation in beta^2 (odd orders vanish
// because odd powers of the deviation operator are traceless).
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spincorr/jacobi.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/measures.hpp"
#include "spincorr/numeric.hpp"
#include "spincorr/operators.hpp"
#include "spincorr/quadrature.hpp"
#include "spincorr/spin.hpp"

namespace spincorr::oracle {

// Deviation operator of the evolved density matrix,
//   (1/2)[S1+ x e^{-i tau S2Z} + S1- x e^{+i tau S2Z}
//        + e^{-i tau S1Z} x S2+ + e^{+i tau S1Z} x S2-].
inline ComplexMatrix deviation_operator(const PairConfig& cfg, double tau) {
    const ComplexMatrix s1p = build_splus(cfg.s1);
    const ComplexMatrix s1m = build_sminus(cfg.s1);
    const ComplexMatrix s2p = build_splus(cfg.s2);
    const ComplexMatrix s2m = build_sminus(cfg.s2);
    const ComplexMatrix e1m = phase_diagonal(cfg.s1, tau, +1);
    const ComplexMatrix e1p = phase_diagonal(cfg.s1, tau, -1);
    const ComplexMatrix e2m = phase_diagonal(cfg.s2, tau, +1);
    const ComplexMatrix e2p = phase_diagonal(cfg.s2, tau, -1);
    ComplexMatrix sum = kron(s1p, e2m);
    sum += kron(s1m, e2p);
    sum += kron(e1m, s2p);
    sum += kron(e1p, s2m);
    sum *= Complex{0.5, 0.0};
    return sum;
}

// Diagonal interaction propagator: phase exp(-i tau m1 m2) on |m1, m2>.
inline ComplexVector propagator_phases(const PairConfig& cfg, double tau) {
    const int d1 = cfg.s1.dimension();
    const int d2 = cfg.s2.dimension();
    ComplexVector u(static_cast<std::size_t>(d1 * d2));
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) {
            const double angle = -0.25 * tau * cfg.s1.twice_m(i) * cfg.s2.twice_m(j);
            u[static_cast<std::size_t>(i * d2 + j)] = Complex{std::cos(angle), std::sin(angle)};
        }
    return u;
}

inline double positivity_beta_limit(const PairConfig& cfg) {
    return 0.5 / (cfg.s1.value() + cfg.s2.value());
}

// High-temperature state (1 + beta * deviation)/Z with Z = d1 d2.
struct EvolvedState {
    PairConfig cfg;
    double tau = 0.0;
    double beta = 1e-3;
    ComplexMatrix delta_rho;
    ComplexMatrix rho;
};

inline EvolvedState evolve(const PairConfig& cfg, double tau, double beta = 1e-3) {
    if (!(beta > 0.0)) throw std::domain_error("evolve: beta must be positive");
    if (beta > positivity_beta_limit(cfg))
        throw std::domain_error("evolve: beta too large, density matrix would lose positivity");
    EvolvedState st;
    st.cfg = cfg;
    st.tau = tau;
    st.beta = beta;
    st.delta_rho = deviation_operator(cfg, tau);
    const std::size_t dim = st.delta_rho.dim();
    st.rho = ComplexMatrix::identity(dim) + Complex{beta, 0.0} * st.delta_rho;
    st.rho *= Complex{1.0 / static_cast<double>(dim), 0.0};
    return st;
}

inline ComplexMatrix reduced_density(const EvolvedState& st, int keep) {
    const auto d1 = static_cast<std::size_t>(st.cfg.s1.dimension());
    const auto d2 = static_cast<std::size_t>(st.cfg.s2.dimension());
    if (keep == 1) return partial_trace_second(st.rho, d1, d2);
    if (keep == 2) return partial_trace_first(st.rho, d1, d2);
    throw std::invalid_argument("reduced_density: keep must be 1 or 2");
}

// Von Neumann entropy in bits via the Jacobi eigensolver.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
    if (rho.hermiticity_defect() > 1e-10 * std::max(1.0, rho.frobenius_norm()))
        throw std::invalid_argument("von_neumann_entropy: matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-8 || std::abs(rho.trace().imag()) > 1e-10)
        throw std::invalid_argument("von_neumann_entropy: trace must be 1");
    const EigenSystem sys = hermitian_eigensystem(rho);
    KahanSum sum;
    for (double lambda : sys.values) {
        if (lambda < -1e-10)
            throw std::domain_error("von_neumann_entropy: negative eigenvalue beyond tolerance");
        if (lambda > 0.0) sum.add(-lambda * std::log2(lambda));
    }
    return sum.value();
}

// Exact mutual information S(rho1) + S(rho2) - S(rho), bits.
inline double mutual_information_exact(const EvolvedState& st) {
    const double s1 = von_neumann_entropy(reduced_density(st, 1));
    const double s2 = von_neumann_entropy(reduced_density(st, 2));
    const double s12 = von_neumann_entropy(st.rho);
    return s1 + s2 - s12;
}

// Richardson extrapolation in beta^2 of value(beta)/B(beta); removes the
// O(beta^2) remainder so the result converges to the measure in units of B.
template <typename F>
double extrapolate_units_b(F&& value_bits, double beta0) {
    const double beta1 = 0.5 * beta0;
    const double v0 = value_bits(beta0) / correlation_unit(beta0);
    const double v1 = value_bits(beta1) / correlation_unit(beta1);
    return (4.0 * v1 - v0) / 3.0;
}

inline double mutual_information_extrapolated(const PairConfig& cfg, double tau,
                                              double beta0 = 1e-3) {
    return extrapolate_units_b(
        [&](double beta) { return mutual_information_exact(evolve(cfg, tau, beta)); }, beta0);
}

// Free induction decay by the exact trace Tr{S_X U S_X U^-1}/Tr{S_X^2} with
// the diagonal propagator; independent of the closed-form route.
inline double fid_by_trace(const PairConfig& cfg, double tau) {
    const auto d1 = static_cast<std::size_t>(cfg.s1.dimension());
    const auto d2 = static_cast<std::size_t>(cfg.s2.dimension());
    const ComplexMatrix sx =
        kron(build_sx(cfg.s1), ComplexMatrix::identity(d2)) +
        kron(ComplexMatrix::identity(d1), build_sx(cfg.s2));
    const ComplexVector u = propagator_phases(cfg, tau);
    const std::size_t dim = sx.dim();
    Complex num{0.0, 0.0};
    Complex den{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex evolved_ji = u[j] * sx(j, i) * std::conj(u[i]);
            num += sx(i, j) * evolved_ji;
            den += sx(i, j) * sx(j, i);
        }
    return num.real() / den.real();
}

// Joint POVM probability d1 d2 / (4 pi)^2 * <scs| rho |scs> evaluated with
// coherent amplitudes and a matrix-vector product.
inline double scs_joint_probability(const EvolvedState& st, const BlochPoint& p1,
                                    const BlochPoint& p2) {
    const ComplexVector v =
        kron(coherent_amplitudes(st.cfg.s1, p1), coherent_amplitudes(st.cfg.s2, p2));
    const Complex expect = inner_product(v, st.rho.apply(v));
    const double dim = static_cast<double>(st.rho.dim());
    const double u = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
    return dim * u * expect.real();
}

enum class DistributionKind { povm, classical };

// Two-sphere angle distribution in the common form
//   P = (1/(4 pi)^2) [1 + beta * (S1 sin(t1) Re(e^{i p1} zeta2(x2))
//                               + S2 sin(t2) Re(e^{i p2} zeta1(x1)))],
// where zeta_j is the per-spin phase factor: the spin-coherent-state
// expectation for the POVM distribution, a plain classical phase otherwise.
struct AngleDistribution {
    DistributionKind kind = DistributionKind::povm;
    PairConfig cfg;
    double tau = 0.0;
    double beta = 1e-3;

    Complex zeta(SpinNumber s, double x) const {
        if (kind == DistributionKind::povm)
            return measures::scs_phase_expectation(s, std::acos(x), tau, +1);
        const double a = tau * s.value() * x;
        return Complex{std::cos(a), -std::sin(a)};
    }
    Complex zeta1(double x) const { return zeta(cfg.s1, x); }
    Complex zeta2(double x) const { return zeta(cfg.s2, x); }

    double probability(const BlochPoint& p1, const BlochPoint& p2) const {
        return kind == DistributionKind::povm
                   ? measures::povm_angle_distribution(cfg, tau, beta, p1, p2)
                   : measures::classical_angle_distribution(cfg, tau, beta, p1, p2);
    }

    // Full two-sphere quadrature of the probability (should be 1). The
    // azimuthal structure is tabulated once per node; the sum itself runs
    // over the complete product grid.
    double normalization(const QuadratureRule& rule) const {
        const std::size_t nt = rule.x.size();
        const std::size_t np = rule.phi.size();
        std::vector<Complex> z1(nt), z2(nt);
        std::vector<double> st(nt), cphi(np), sphi(np);
        for (std::size_t i = 0; i < nt; ++i) {
            z1[i] = zeta1(rule.x[i]);
            z2[i] = zeta2(rule.x[i]);
            st[i] = std::sqrt(1.0 - rule.x[i] * rule.x[i]);
        }
        for (std::size_t b = 0; b < np; ++b) {
            cphi[b] = std::cos(rule.phi[b]);
            sphi[b] = std::sin(rule.phi[b]);
        }
        const double s1 = cfg.s1.value();
        const double s2 = cfg.s2.value();
        KahanSum total;
        for (std::size_t i = 0; i < nt; ++i) {
            KahanSum row;
            for (std::size_t j = 0; j < nt; ++j) {
                const Complex alpha = beta * s1 * st[i] * z2[j];
                const Complex gamma = beta * s2 * st[j] * z1[i];
                double block = 0.0;
                for (std::size_t a = 0; a < np; ++a) {
                    const double xa = cphi[a] * alpha.real() - sphi[a] * alpha.imag();
                    for (std::size_t b = 0; b < np; ++b) {
                        const double x =
                            xa + cphi[b] * gamma.real() - sphi[b] * gamma.imag();
                        block += 1.0 + x;
                    }
                }
                row.add(rule.wx[j] * block);
            }
            total.add(rule.wx[i] * row.value());
        }
        const double u = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
        return total.value() * u * rule.wphi * rule.wphi;
    }
};

namespace detail {

struct MarginalTable {
    // log(4 pi * P_marginal) on the (theta, phi) grid, flattened theta-major.
    std::vector<double> log_values;
};

// Marginal of the distribution over the other sphere, obtained by
// single-sphere quadrature of the structural components (the azimuthal
// sums are carried out explicitly; they vanish only to round-off).
inline MarginalTable marginal_log_table(const AngleDistribution& dist, const QuadratureRule& rule,
                                        int which) {
    const double s_own = (which == 1 ? dist.cfg.s1 : dist.cfg.s2).value();
    const SpinNumber s_other = which == 1 ? dist.cfg.s2 : dist.cfg.s1;
    const SpinNumber s_self = which == 1 ? dist.cfg.s1 : dist.cfg.s2;

    // Quadrature sums over the traced-out sphere.
    KahanSum a_sum, t_sum;
    Complex z_other{0.0, 0.0};
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
        a_sum.add(rule.wx[j]);
        t_sum.add(rule.wx[j] * std::sqrt(1.0 - rule.x[j] * rule.x[j]));
        z_other += rule.wx[j] * dist.zeta(s_other, rule.x[j]);
    }
    Complex e_phi{0.0, 0.0};
    for (double p : rule.phi) e_phi += Complex{std::cos(p), std::sin(p)};
    e_phi *= rule.wphi;
    const double phi_total = rule.wphi * static_cast<double>(rule.phi.size());
    const double four_pi = 4.0 * std::numbers::pi;
    const double defect = (a_sum.value() * phi_total) / four_pi - 1.0;

    MarginalTable table;
    table.log_values.resize(rule.x.size() * rule.phi.size());
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double sin_theta = std::sqrt(1.0 - rule.x[i] * rule.x[i]);
        const Complex self_term = dist.zeta(s_self, rule.x[i]) * e_phi;
        for (std::size_t a = 0; a < rule.phi.size(); ++a) {
            const Complex e_own{std::cos(rule.phi[a]), std::sin(rule.phi[a])};
            const double w_marginal =
                s_own * sin_theta * (e_own * z_other).real() * phi_total +
                s_other.value() * t_sum.value() * self_term.real();
            const double x = defect + dist.beta * w_marginal / four_pi;
            if (1.0 + x < -1.579e-10)
                throw std::domain_error("shannon_mutual_information: negative marginal node");
            table.log_values[i * rule.phi.size() + a] = std::log1p(x);
        }
    }
    return table;
}

}  // namespace detail

// Shannon mutual information of the angle distribution, computed as the
// single relative-entropy integral over both spheres (never as a difference
// of differential entropies), in bits.
inline double shannon_mutual_information(const AngleDistribution& dist,
                                         const QuadratureRule& rule) {
    const std::size_t nt = rule.x.size();
    const std::size_t np = rule.phi.size();

    const detail::MarginalTable l1 = detail::marginal_log_table(dist, rule, 1);
    const detail::MarginalTable l2 = detail::marginal_log_table(dist, rule, 2);

    std::vector<Complex> zeta1(nt), zeta2(nt);
    std::vector<double> sin_theta(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        zeta1[i] = dist.zeta1(rule.x[i]);
        zeta2[i] = dist.zeta2(rule.x[i]);
        sin_theta[i] = std::sqrt(1.0 - rule.x[i] * rule.x[i]);
    }
    std::vector<double> cphi(np), sphi(np);
    for (std::size_t b = 0; b < np; ++b) {
        cphi[b] = std::cos(rule.phi[b]);
        sphi[b] = std::sin(rule.phi[b]);
    }

    const double u = 1.0 / (16.0 * std::numbers::pi * std::numbers::pi);
    const double s1 = dist.cfg.s1.value();
    const double s2 = dist.cfg.s2.value();

    std::vector<double> t1(np), t2(np);
    KahanSum total;
    for (std::size_t i = 0; i < nt; ++i) {
        const double amp1 = dist.beta * s1 * sin_theta[i];
        KahanSum outer_row;
        for (std::size_t j = 0; j < nt; ++j) {
            // beta * W split into the phi1- and phi2-dependent parts.
            const Complex alpha = amp1 * zeta2[j];
            const Complex gamma = dist.beta * s2 * sin_theta[j] * zeta1[i];
            for (std::size_t b = 0; b < np; ++b) {
                t1[b] = cphi[b] * alpha.real() - sphi[b] * alpha.imag();
                t2[b] = cphi[b] * gamma.real() - sphi[b] * gamma.imag();
            }
            const double* l1_row = &l1.log_values[i * np];
            const double* l2_row = &l2.log_values[j * np];
            double block = 0.0;
            for (std::size_t a = 0; a < np; ++a) {
                const double xa = t1[a];
                const double la = l1_row[a];
                for (std::size_t b = 0; b < np; ++b) {
                    const double x = xa + t2[b];
                    if (1.0 + x < -1.579e-10)
                        throw std::domain_error(
                            "shannon_mutual_information: negative distribution node");
                    block += (1.0 + x) * (std::log1p(x) - la - l2_row[b]);
                }
            }
            outer_row.add(rule.wx[j] * block);
        }
        total.add(rule.wx[i] * outer_row.value());
    }
    return total.value() * u * rule.wphi * rule.wphi / std::numbers::ln2;
}

inline double shannon_mi_extrapolated(DistributionKind kind, const PairConfig& cfg, double tau,
                                      const QuadratureRule& rule, double beta0 = 1e-3) {
    return extrapolate_units_b(
        [&](double beta) {
            AngleDistribution dist{kind, cfg, tau, beta};
            return shannon_mutual_information(dist, rule);
        },
        beta0);
}

// Gauss-Legendre evaluation of the sphere average of xi+ xi-; matches the
// binomial series whenever 2S < n_theta.
inline double scs_second_moment_quadrature(SpinNumber s, double tau, const QuadratureRule& rule) {
    KahanSum sum;
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
        const double theta = std::acos(rule.x[j]);
        const Complex prod = measures::scs_phase_expectation(s, theta, tau, +1) *
                             measures::scs_phase_expectation(s, theta, tau, -1);
        sum.add(rule.wx[j] * prod.real());
    }
    return 0.5 * sum.value();
}

// Classical correlation extracted by the orthogonal projective measurement
// on the first spin (requires S1 = 1/2): outcome probabilities and
// conditional states of the second spin give the Holevo-type difference
// S(rho2) - sum_k p_k S(rho2 | k), in bits.
inline double orthogonal_measurement_information(const EvolvedState& st) {
    if (st.cfg.s1.twice() != 1)
        throw std::invalid_argument(
            "orthogonal_measurement_information: requires S1 = 1/2");
    const auto d2 = static_cast<std::size_t>(st.cfg.s2.dimension());
    const double entropy_marginal = von_neumann_entropy(reduced_density(st, 2));

    double conditional = 0.0;
    for (std::size_t outcome = 0; outcome < 2; ++outcome) {
        ComplexMatrix block(d2);
        double prob = 0.0;
        for (std::size_t i = 0; i < d2; ++i) {
            for (std::size_t j = 0; j < d2; ++j)
                block(i, j) = st.rho(outcome * d2 + i, outcome * d2 + j);
            prob += block(i, i).real();
        }
        block *= Complex{1.0 / prob, 0.0};
        conditional += prob * von_neumann_entropy(block);
    }
    return entropy_marginal - conditional;
}

inline double orthogonal_mi_extrapolated(const PairConfig& cfg, double tau, double beta0 = 1e-3) {
    return extrapolate_units_b(
        [&](double beta) {
            return orthogonal_measurement_information(evolve(cfg, tau, beta));
        },
        beta0);
}

}  // namespace spincorr::oracle
