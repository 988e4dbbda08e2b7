#pragma once

// Algebra of the extremal family G(a,a0): the quartic whose smallest root
// is the least eigenvalue, the symmetric-point root xi, and the offset
// difference Delta(s,t;lambda) used to show xi is the global minimum.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromspec/graph.hpp"

namespace chromspec {

/// Half-order offsets: a = chi/2 + t, a0 = p + s.
struct SymParams {
    int n = 0;
    int chi = 0;
    double p = 0;  // (n - chi) / 2
    double q = 0;  // chi / 2 - 1

    SymParams(int n_, int chi_) : n(n_), chi(chi_), p((n_ - chi_) / 2.0), q(chi_ / 2.0 - 1.0) {}

    double a(double t) const { return chi / 2.0 + t; }
    double a0(double s) const { return p + s; }
    /// Abbreviation (n/2) * lambda.
    double m_of(double lambda) const { return n / 2.0 * lambda; }
};

enum class SignClass { positive, nonnegative, negative, nonpositive };

/// f(a,a0,lambda) = c4 l^4 + c3 l^3 + c2 l^2 + c1 l + c0, plus the sign data
/// of g(x) = f(a,a0,-x).
struct QuarticCoeffs {
    std::array<double, 5> c{};  // c[k] multiplies lambda^k
    std::array<double, 5> g{};  // g[k] multiplies x^k
    static constexpr std::array<SignClass, 5> expected_gsigns{
        SignClass::nonpositive, SignClass::nonpositive, SignClass::negative, SignClass::nonnegative,
        SignClass::positive};  // x^0 .. x^4

    double operator()(double lambda) const {
        return (((c[4] * lambda + c[3]) * lambda + c[2]) * lambda + c[1]) * lambda + c[0];
    }

    /// True when every coefficient of g falls in its expected sign class,
    /// giving exactly one sign change (Descartes).
    bool gsigns_match() const {
        for (std::size_t k = 0; k < 5; ++k) {
            const double v = g[k];
            switch (expected_gsigns[k]) {
                case SignClass::positive: if (!(v > 0)) return false; break;
                case SignClass::nonnegative: if (v < 0) return false; break;
                case SignClass::negative: if (!(v < 0)) return false; break;
                case SignClass::nonpositive: if (v > 0) return false; break;
            }
        }
        return true;
    }
};

struct XiQuantities {
    double xi = 0;
    double mu = 0;
    double alpha = 0;
    double beta = 0;
    double quadratic_residual = 0;  // xi^2 + (1+p) xi - p q
    double key_residual = 0;        // xi (xi+1) - p (q - xi)
};

struct EndpointPositivity {
    double direct = 0;    // alpha (beta^2 - q^2) - p beta^2
    double expanded = 0;  // 2 mu^3 + 4 (1+p) mu q + 3 p q^2
};

struct ArgminResult {
    double root = 0;
    std::vector<ExtremalParams> minimizers;  // every pair tied at the minimum
    std::vector<ExtremalParams> classes;     // one canonical pair per part-swap class
    bool unique() const { return classes.size() == 1; }
};

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr double kRootTol = 1e-12;
inline constexpr double kArgminTieTol = 1e-9;

inline void require_chi_range(int n, int chi) {
    if (chi < 3 || chi > n - 1)
        throw std::domain_error("need 3 <= chi <= n - 1, got n = " + std::to_string(n) +
                                ", chi = " + std::to_string(chi));
}

inline std::vector<ExtremalParams> feasible_pairs(int n, int chi) {
    require_chi_range(n, chi);
    std::vector<ExtremalParams> out;
    out.reserve(static_cast<std::size_t>((chi - 1) * (n - chi + 1)));
    for (int a = 1; a <= chi - 1; ++a)
        for (int a0 = 0; a0 <= n - chi; ++a0) out.push_back({n, chi, a, a0});
    return out;
}

/// Evaluates f at real (possibly non-integral) a, b, a0, b0.
inline double quartic_value(double a, double b, double a0, double b0, double lambda) {
    const double left = (b + b0) * lambda - b0 * (b - 1);
    const double right = (a + a0) * lambda - a0 * (a - 1);
    return lambda * lambda * (lambda - a + 1) * (lambda - b + 1) - left * right;
}

inline QuarticCoeffs quartic_coeffs(double a, double b, double a0, double b0) {
    const double A = a - 1;
    const double B = b - 1;
    const double c1 = b + b0;
    const double d1 = b0 * B;
    const double c2 = a + a0;
    const double d2 = a0 * A;
    QuarticCoeffs q;
    q.g = {-d1 * d2, -(c1 * d2 + c2 * d1), A * B - c1 * c2, A + B, 1.0};
    for (std::size_t k = 0; k < 5; ++k) q.c[k] = (k % 2 == 0) ? q.g[k] : -q.g[k];
    return q;
}

inline QuarticCoeffs quartic(const ExtremalParams& p) {
    if (auto why = p.infeasibility(); !why.empty()) throw InfeasibleParams("quartic: " + why);
    return quartic_coeffs(p.a, p.b(), p.a0, p.b0());
}

/// The unique root of f(a,a0,.) in (-inf, 0), bisected to kRootTol.
inline double smallest_negative_root(const ExtremalParams& p) {
    const QuarticCoeffs f = quartic(p);
    double lo = -static_cast<double>(p.n);
    double hi = f(0.0) == 0.0 ? -1e-9 : 0.0;
    if (!(f(lo) > 0) || !(f(hi) <= 0))
        throw InvariantViolation("root bracket failed for G(" + std::to_string(p.a) + "," +
                                 std::to_string(p.a0) + ") with n = " + std::to_string(p.n) +
                                 ", chi = " + std::to_string(p.chi));
    while (hi - lo > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Closed-form negative root of lambda^2 + (1+p) lambda - p q = 0. Accepts
/// chi = 2, where the value is exactly -n/2.
inline XiQuantities xi(int n, int chi) {
    if (chi < 2) throw std::domain_error("xi requires chi >= 2");
    if (chi > n - 1) throw std::domain_error("xi requires chi <= n - 1");
    const SymParams sp(n, chi);
    const double d = n - chi;
    XiQuantities x;
    x.xi = -(d + 2 + std::sqrt((d - 2) * (d - 2) + 4.0 * chi * d)) / 4.0;
    x.mu = -x.xi;
    x.alpha = sp.p + 2 * x.mu;
    x.beta = sp.q + x.mu;
    x.quadratic_residual = x.xi * x.xi + (1 + sp.p) * x.xi - sp.p * sp.q;
    x.key_residual = x.xi * (x.xi + 1) - sp.p * (sp.q - x.xi);
    return x;
}

/// f(a,a0,lambda) - f(chi/2, (n-chi)/2, lambda) by direct evaluation.
inline double delta_direct(double s, double t, double lambda, int n, int chi) {
    const SymParams sp(n, chi);
    const double half = chi / 2.0;
    return quartic_value(half + t, half - t, sp.p + s, sp.p - s, lambda) -
           quartic_value(half, half, sp.p, sp.p, lambda);
}

inline double delta_closed(double s, double t, double lambda, int n, int chi) {
    const SymParams sp(n, chi);
    const double lq = lambda - sp.q;
    return sp.p * (sp.p - 2 * lambda) * t * t + lq * lq * s * s - s * s * t * t +
           2 * lambda * (lambda + 1) * s * t;
}

/// Minimum over real s of Delta(s,t;xi), from completing the square.
inline double delta_min_over_s(double t, int n, int chi) {
    const SymParams sp(n, chi);
    const XiQuantities x = xi(n, chi);
    const double gap = x.beta * x.beta - t * t;
    if (!(gap > 0)) throw std::domain_error("delta_min_over_s requires |t| < beta");
    return sp.p * t * t / gap * (x.alpha * gap - sp.p * x.beta * x.beta);
}

/// The minimising s of Delta(., t; xi).
inline double delta_argmin_s(double t, int n, int chi) {
    const SymParams sp(n, chi);
    const XiQuantities x = xi(n, chi);
    return -sp.p * x.beta * t / (x.beta * x.beta - t * t);
}

inline EndpointPositivity endpoint_positivity(int n, int chi) {
    require_chi_range(n, chi);
    const SymParams sp(n, chi);
    const XiQuantities x = xi(n, chi);
    EndpointPositivity e;
    e.direct = x.alpha * (x.beta * x.beta - sp.q * sp.q) - sp.p * x.beta * x.beta;
    e.expanded = 2 * x.mu * x.mu * x.mu + 4 * (1 + sp.p) * x.mu * sp.q + 3 * sp.p * sp.q * sp.q;
    return e;
}

/// Representative of {(a,a0), (chi-a, n-chi-a0)}: larger a, then smaller a0.
inline ExtremalParams canonical_pair(const ExtremalParams& p) {
    const ExtremalParams mirror{p.n, p.chi, p.b(), p.b0()};
    if (mirror.a > p.a || (mirror.a == p.a && mirror.a0 < p.a0)) return mirror;
    return p;
}

inline ArgminResult argmin_feasible(int n, int chi) {
    const auto pairs = feasible_pairs(n, chi);
    std::vector<double> roots;
    roots.reserve(pairs.size());
    for (const auto& p : pairs) roots.push_back(smallest_negative_root(p));
    ArgminResult out;
    out.root = *std::min_element(roots.begin(), roots.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (roots[i] - out.root > kArgminTieTol) continue;
        out.minimizers.push_back(pairs[i]);
        const auto rep = canonical_pair(pairs[i]);
        if (std::find(out.classes.begin(), out.classes.end(), rep) == out.classes.end())
            out.classes.push_back(rep);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& l, const auto& r) { return std::pair(l.a, l.a0) < std::pair(r.a, r.a0); });
    return out;
}

/// The pair (ceil(chi/2), floor((n-chi)/2)) conjectured to minimise the root.
inline ExtremalParams conjectured_minimizer(int n, int chi) {
    return {n, chi, (chi + 1) / 2, (n - chi) / 2};
}

/// For odd n and odd chi the root zeta of f((chi+1)/2, (n-chi)/2, .) solves
/// l^2 (l-q)^2 - ((n/2) l - p q)^2 + p (p - 2 l) / 4 = 0. Returns that
/// residual at the bisected root.
inline double odd_parity_residual(int n, int chi) {
    if (n % 2 == 0 || chi % 2 == 0) throw std::domain_error("odd_parity_residual needs odd n and odd chi");
    const SymParams sp(n, chi);
    const double zeta = smallest_negative_root(conjectured_minimizer(n, chi));
    const double mq = sp.m_of(zeta) - sp.p * sp.q;
    return zeta * zeta * (zeta - sp.q) * (zeta - sp.q) - mq * mq + 0.25 * sp.p * (sp.p - 2 * zeta);
}

}  // namespace chromspec
