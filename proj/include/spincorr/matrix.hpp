// Dense square complex matrix used for spin operators, density matrices and
// spin-coherent-state projectors. Dimensions in this project never exceed
// (2*9/2+1)^2 = 100, so everything is a plain row-major vector.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spincorr {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& other) {
        check_same_dim(other);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
        return *this;
    }
    ComplexMatrix& operator*=(Complex scale) {
        for (auto& e : entries_) e *= scale;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.check_same_dim(b);
        const std::size_t n = a.dim_;
        ComplexMatrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    ComplexMatrix dagger() const {
        ComplexMatrix m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    Complex trace() const {
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    double max_abs_diff(const ComplexMatrix& other) const {
        check_same_dim(other);
        double m = 0.0;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            m = std::max(m, std::abs(entries_[k] - other.entries_[k]));
        return m;
    }

    double hermiticity_defect() const {
        double m = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    ComplexVector apply(const ComplexVector& v) const {
        if (v.size() != dim_) throw std::invalid_argument("ComplexMatrix::apply: size mismatch");
        ComplexVector out(dim_, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < dim_; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

  private:
    void check_same_dim(const ComplexMatrix& other) const {
        if (dim_ != other.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    }

    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

// Tensor (Kronecker) product, ordering (first factor) x (second factor).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    ComplexMatrix c(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    c(i * db + k, j * db + l) = aij * b(k, l);
        }
    return c;
}

// Partial trace of a (d1*d2)-dimensional matrix over the second factor.
inline ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d1, std::size_t d2) {
    if (m.dim() != d1 * d2) throw std::invalid_argument("partial_trace_second: dimension mismatch");
    ComplexMatrix out(d1);
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < d2; ++k) acc += m(i * d2 + k, j * d2 + k);
            out(i, j) = acc;
        }
    return out;
}

// Partial trace over the first factor.
inline ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t d1, std::size_t d2) {
    if (m.dim() != d1 * d2) throw std::invalid_argument("partial_trace_first: dimension mismatch");
    ComplexMatrix out(d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < d1; ++k) acc += m(k * d2 + i, k * d2 + j);
            out(i, j) = acc;
        }
    return out;
}

inline Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: size mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

inline ComplexMatrix outer_product(const ComplexVector& v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

}  // namespace spincorr
