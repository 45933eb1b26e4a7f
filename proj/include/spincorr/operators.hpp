// Spin operators in the |m> basis (index 0 corresponds to m = S, descending)
// and spin coherent states.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "spincorr/matrix.hpp"
#include "spincorr/numeric.hpp"
#include "spincorr/spin.hpp"

namespace spincorr {

inline ComplexMatrix build_sz(SpinNumber s) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = s.m(static_cast<int>(i));
    return m;
}

// <m+1| S+ |m> = sqrt(S(S+1) - m(m+1)). With descending basis order the
// raising operator sits on the superdiagonal: row i (m+1), column i+1 (m).
inline ComplexMatrix build_splus(SpinNumber s) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    ComplexMatrix m(d);
    const double ss1 = s.value() * (s.value() + 1.0);
    for (std::size_t col = 1; col < d; ++col) {
        const double mm = s.m(static_cast<int>(col));
        m(col - 1, col) = std::sqrt(ss1 - mm * (mm + 1.0));
    }
    return m;
}

inline ComplexMatrix build_sminus(SpinNumber s) { return build_splus(s).dagger(); }

inline ComplexMatrix build_sx(SpinNumber s) {
    ComplexMatrix m = build_splus(s) + build_sminus(s);
    m *= Complex{0.5, 0.0};
    return m;
}

inline ComplexMatrix build_sy(SpinNumber s) {
    ComplexMatrix m = build_splus(s) - build_sminus(s);
    m *= Complex{0.0, -0.5};
    return m;
}

// Diagonal phase matrix exp(-i * sign * tau * S_Z), built entrywise on the
// exact 2m integer grid.
inline ComplexMatrix phase_diagonal(SpinNumber s, double tau, int sign) {
    const std::size_t d = static_cast<std::size_t>(s.dimension());
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double angle = -0.5 * sign * tau * s.twice_m(static_cast<int>(i));
        m(i, i) = Complex{std::cos(angle), std::sin(angle)};
    }
    return m;
}

// Amplitudes of the spin coherent state |theta, phi> on the |m> basis:
//   binom(2S, S+m)^{1/2} (cos theta/2)^{S+m} (e^{i phi} sin theta/2)^{S-m}.
// theta = 0 and theta = pi yield exact basis states (0^0 := 1).
inline ComplexVector coherent_amplitudes(SpinNumber s, const BlochPoint& dir) {
    const int d = s.dimension();
    const int n = s.twice();
    ComplexVector amp(static_cast<std::size_t>(d), Complex{0.0, 0.0});
    if (dir.theta == 0.0) {
        amp[0] = 1.0;
        return amp;
    }
    if (dir.theta == std::numbers::pi) {
        const double angle = dir.phi * n;
        amp[static_cast<std::size_t>(d - 1)] = Complex{std::cos(angle), std::sin(angle)};
        return amp;
    }
    const double c = std::cos(0.5 * dir.theta);
    const double sn = std::sin(0.5 * dir.theta);
    for (int i = 0; i < d; ++i) {
        // index i has m = S - i, so S+m = 2S-i and S-m = i
        const double mag = std::sqrt(binomial_coefficient(n, i)) *
                           integer_power(c, n - i) * integer_power(sn, i);
        const double angle = dir.phi * i;
        amp[static_cast<std::size_t>(i)] = mag * Complex{std::cos(angle), std::sin(angle)};
    }
    return amp;
}

}  // namespace spincorr
