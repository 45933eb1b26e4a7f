// Cyclic Jacobi eigensolver for Hermitian matrices.
//
// Each rotation zeroes one off-diagonal pair with a complex plane rotation;
// sweeps repeat until the off-diagonal Frobenius norm drops below a
// threshold relative to the matrix norm. Dimensions in this project stay
// at or below 100, where Jacobi is both simple and highly accurate.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spincorr/matrix.hpp"

namespace spincorr {

struct EigenSystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // column k is the eigenvector of values[k]
};

namespace detail {

inline double offdiagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

inline EigenSystem hermitian_eigensystem(const ComplexMatrix& input,
                                         double threshold = 1e-15,
                                         int max_sweeps = 30) {
    const std::size_t n = input.dim();
    if (n == 0) throw std::invalid_argument("hermitian_eigensystem: empty matrix");
    if (input.hermiticity_defect() > 1e-10 * std::max(1.0, input.frobenius_norm()))
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian");

    ComplexMatrix a = input;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = threshold * std::max(a.frobenius_norm(), 1e-300);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::offdiagonal_norm(a) <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // Factor out the phase so the 2x2 block becomes real
                // symmetric, then apply the classic symmetric rotation.
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? -1.0 : 1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = t * c * phase;

                // Columns p and q of A and of the accumulated eigenvectors.
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = c * arp + std::conj(s) * arq;
                    a(r, q) = -s * arp + c * arq;
                    const Complex vrp = v(r, p);
                    const Complex vrq = v(r, q);
                    v(r, p) = c * vrp + std::conj(s) * vrq;
                    v(r, q) = -s * vrp + c * vrq;
                }
                // Rows p and q of A (conjugate rotation).
                for (std::size_t rcol = 0; rcol < n; ++rcol) {
                    const Complex apr = a(p, rcol);
                    const Complex aqr = a(q, rcol);
                    a(p, rcol) = c * apr + s * aqr;
                    a(q, rcol) = -std::conj(s) * apr + c * aqr;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    EigenSystem sys;
    sys.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) sys.values[i] = a(i, i).real();

    // Sort ascending and permute eigenvector columns to match.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = i;
        while (k > 0 && sys.values[order[k - 1]] > sys.values[order[k]]) {
            std::swap(order[k - 1], order[k]);
            --k;
        }
    }
    EigenSystem sorted;
    sorted.values.resize(n);
    sorted.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted.values[k] = sys.values[order[k]];
        for (std::size_t r = 0; r < n; ++r) sorted.vectors(r, k) = v(r, order[k]);
    }
    return sorted;
}

}  // namespace spincorr
