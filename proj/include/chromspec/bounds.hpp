#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "chromspec/fyw_theory.hpp"

namespace chromspec {

inline constexpr double kHoldsTol = 1e-7;
inline constexpr double kEqualityTol = 1e-6;

enum class Direction { upper, lower };

/// A bound evaluated on scalar inputs. holds/equality are filled in by
/// settle() once the exact quantity is known, and only when applicable.
struct BoundValue {
    std::string name;
    double value = 0;
    bool applicable = true;
    Direction direction = Direction::upper;
    std::optional<bool> holds;
    std::optional<bool> equality;
    std::string diagnostic;
};

inline BoundValue settle(BoundValue b, double exact) {
    if (!b.applicable) return b;
    b.holds = b.direction == Direction::upper ? exact <= b.value + kHoldsTol : exact >= b.value - kHoldsTol;
    b.equality = std::fabs(b.value - exact) <= kEqualityTol;
    return b;
}

inline BoundValue not_applicable(BoundValue b, std::string why) {
    b.applicable = false;
    b.diagnostic = std::move(why);
    return b;
}

/// chi <= 1 + lambda_1.
inline BoundValue wilf(double lambda1) { return {"wilf", 1 + lambda1, true, Direction::upper, {}, {}, {}}; }

/// chi >= 1 - lambda_1 / lambda_n.
inline BoundValue hoffman(double lambda1, double lambdan) {
    BoundValue b{"hoffman", 0, true, Direction::lower, {}, {}, {}};
    if (!(lambdan < 0)) return not_applicable(b, "lambda_n >= 0 (edgeless graph)");
    b.value = 1 - lambda1 / lambdan;
    return b;
}

/// Lower bound xi(n, chi) on lambda_n for 3 <= chi <= n - 1.
inline BoundValue fyw_lambda_lower(int n, int chi) {
    BoundValue b{"fyw_lambda_lower", 0, true, Direction::lower, {}, {}, {}};
    if (chi < 3 || chi > n - 1) return not_applicable(b, "outside 3 <= chi <= n - 1");
    b.value = xi(n, chi).xi;
    return b;
}

/// Upper bound on chi from n and lambda_n. When chi is supplied the
/// hypothesis 3 <= chi <= n - 1 gates applicability.
inline BoundValue fyw_chi_upper(int n, double lambdan, std::optional<int> chi = {}) {
    BoundValue b{"fyw_chi_upper", 0, true, Direction::upper, {}, {}, {}};
    const double x = n / 2.0 + 1 + lambdan;
    double disc = x * x - 4 * (lambdan + 1) * (lambdan + n / 2.0);
    if (disc < -kHoldsTol) return not_applicable(b, "negative discriminant " + std::to_string(disc));
    b.value = x + std::sqrt(std::max(disc, 0.0));
    if (chi && (*chi < 3 || *chi > n - 1)) return not_applicable(b, "outside 3 <= chi <= n - 1");
    return b;
}

/// Conjectured upper bound on chi (chi - 1) from m and lambda_n.
inline BoundValue conjecture61(long m, double lambdan) {
    BoundValue b{"conjecture61", 0, true, Direction::upper, {}, {}, {}};
    if (m < 1) return not_applicable(b, "m = 0");
    const double l2 = lambdan * lambdan;
    const double x = static_cast<double>(m) + 1 - l2;
    const double disc = x * x - 4 * (l2 - 1) * (l2 - static_cast<double>(m));
    if (disc < -kHoldsTol) return not_applicable(b, "negative discriminant " + std::to_string(disc));
    b.value = x + std::sqrt(std::max(disc, 0.0));
    return b;
}

/// The chi bound implied by a bound V on chi (chi - 1).
inline double chi_from_product_bound(double v) { return (1 + std::sqrt(1 + 4 * v)) / 2; }

/// lambda_n^2 <= m; value is m, compared against lambda_n^2.
inline BoundValue powers_check(long m, double lambdan) {
    return settle({"powers", static_cast<double>(m), true, Direction::upper, {}, {}, {}}, lambdan * lambdan);
}

/// chi (chi - 1) <= (lambda_1 + 1) lambda_1 <= 2m; value is the middle term.
inline BoundValue wu_elphick_check(int chi, double lambda1, long m) {
    BoundValue b{"wu_elphick", (lambda1 + 1) * lambda1, true, Direction::upper, {}, {}, {}};
    const double left = static_cast<double>(chi) * (chi - 1);
    const double right = 2.0 * static_cast<double>(m);
    b.holds = left <= b.value + kHoldsTol && b.value <= right + kHoldsTol;
    b.equality = std::fabs(left - b.value) <= kEqualityTol && std::fabs(right - b.value) <= kEqualityTol;
    return b;
}

/// lambda_n >= -n/2; equality exactly for K_{ceil(n/2), floor(n/2)}.
inline BoundValue constantine_check(int n, double lambdan) {
    return settle({"constantine", -n / 2.0, true, Direction::lower, {}, {}, {}}, lambdan);
}

}  // namespace chromspec
