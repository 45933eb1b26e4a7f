// Sphere quadrature: Gauss-Legendre in cos(theta), uniform trapezoid in phi.
// The phi rule integrates trigonometric polynomials of degree < n_phi
// exactly, which the spin-coherent-state integrands rely on.
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spincorr {

struct GaussLegendre {
    std::vector<double> nodes;    // in (-1, 1), ascending
    std::vector<double> weights;  // sum to 2
};

// Nodes and weights by Newton iteration on the Legendre polynomial.
inline GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    GaussLegendre rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Tricomi-style initial guess for the k-th root (descending order).
        double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P'_n(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(n - 1 - k)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - k)] = w;
        rule.nodes[static_cast<std::size_t>(k)] = -x;
        rule.weights[static_cast<std::size_t>(k)] = w;
    }
    return rule;
}

// Product rule over one unit sphere with measure sin(theta) dtheta dphi.
struct QuadratureRule {
    int n_theta = 64;
    int n_phi = 128;
    std::vector<double> x;        // cos(theta) nodes
    std::vector<double> wx;       // Gauss-Legendre weights
    std::vector<double> phi;      // uniform azimuth nodes
    double wphi = 0.0;            // 2*pi / n_phi

    QuadratureRule() { init(); }
    QuadratureRule(int nt, int np) : n_theta(nt), n_phi(np) { init(); }

    void init() {
        if (n_theta < 1 || n_phi < 3)
            throw std::invalid_argument("QuadratureRule: need n_theta >= 1, n_phi >= 3");
        const GaussLegendre gl = gauss_legendre(n_theta);
        x = gl.nodes;
        wx = gl.weights;
        phi.resize(static_cast<std::size_t>(n_phi));
        wphi = 2.0 * std::numbers::pi / n_phi;
        for (int b = 0; b < n_phi; ++b) phi[static_cast<std::size_t>(b)] = wphi * b;
    }

    // Integral of f(x = cos theta, phi) over the sphere.
    template <typename F>
    double sphere_integral(F&& f) const {
        double total = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double row = 0.0;
            for (std::size_t b = 0; b < phi.size(); ++b) row += f(x[i], phi[b]);
            total += wx[i] * row * wphi;
        }
        return total;
    }

    // Integral of f(x) of the polar angle alone (the azimuth integrated out).
    template <typename F>
    double polar_integral(F&& f) const {
        double total = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) total += wx[i] * f(x[i]);
        return total;
    }
};

}  // namespace spincorr
