#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "chromspec/graph.hpp"

namespace chromspec {

inline constexpr double kSpectrumTol = 1e-10;
inline constexpr double kTightSpectrumTol = 1e-13;

/// Adjacency eigenvalues sorted descending, with the absolute accuracy
/// the solver guarantees for each value.
struct Spectrum {
    std::vector<double> values;
    double tol = kSpectrumTol;

    double lambda_max() const { return values.front(); }
    double lambda_min() const { return values.back(); }
};

class EmptySpectrumError : public std::domain_error {
public:
    EmptySpectrumError() : std::domain_error("spectrum of the null graph (n = 0) is empty") {}
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) a(u, v) = a(v, u) = 1.0;
    return a;
}

/// Householder tridiagonalisation followed by implicit symmetric QR.
inline Spectrum spectrum(const Graph& g) {
    if (g.order() == 0) throw EmptySpectrumError();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    Spectrum s;
    s.values.assign(ev.data(), ev.data() + ev.size());
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

/// Cyclic Jacobi rotations in extended precision. Slower than spectrum();
/// used to re-check any bound violation before it is reported.
inline Spectrum tight_spectrum(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw EmptySpectrumError();
    using real = long double;
    std::vector<real> a(static_cast<std::size_t>(n) * n, 0.0L);
    auto at = [&](int i, int j) -> real& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) at(u, v) = g.adjacent(u, v) ? 1.0L : 0.0L;

    const real frob = std::sqrt(static_cast<real>(2 * g.size()));
    for (int sweep = 0; sweep < 100; ++sweep) {
        real off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) <= 1e-17L * (1 + frob)) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (at(p, q) == 0) continue;
                const real theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                const real t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const real c = 1 / std::sqrt(t * t + 1);
                const real s = t * c;
                for (int k = 0; k < n; ++k) {
                    const real akp = at(k, p);
                    const real akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const real apk = at(p, k);
                    const real aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    Spectrum s;
    s.tol = kTightSpectrumTol;
    for (int i = 0; i < n; ++i) s.values.push_back(static_cast<double>(at(i, i)));
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

inline double lambda_min(const Graph& g) { return spectrum(g).lambda_min(); }
inline double lambda_max(const Graph& g) { return spectrum(g).lambda_max(); }

}  // namespace chromspec
