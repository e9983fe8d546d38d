#pragma once

#include <array>
#include <functional>
#include <vector>

#include "permlab/sparse_poly.hpp"

namespace permlab {

/// Power series in x truncated at order D (coefficients of x^0..x^D are
/// kept), each coefficient a PolyAux in the two auxiliary variables.
///
/// Every retained coefficient c_m obeys the auxiliary degree guard
/// deg(c_m) <= 2m + G, G = guard_slack(). A result that would break it
/// throws GuardOverflow rather than being silently trimmed. Binary
/// operations carry the smaller truncation order and the larger slack.
class XSeries {
public:
    static constexpr int kDefaultGuardSlack = 8;
    /// Slack for intermediates whose degrees are only bounded once combined.
    static constexpr int kUnguarded = 1 << 20;

    XSeries() : XSeries(0) {}
    explicit XSeries(int order, int guard_slack = kDefaultGuardSlack);

    static XSeries constant(const PolyAux& value, int order, int guard_slack = kDefaultGuardSlack);
    /// Truncates a polynomial in (x, aux0, aux1) at `order`.
    static XSeries from_poly(const Poly3& poly, int order, int guard_slack = kDefaultGuardSlack);
    static XSeries from_coefficients(std::vector<PolyAux> coefficients, int guard_slack = kDefaultGuardSlack);
    /// The series x.
    static XSeries x(int order, int guard_slack = kDefaultGuardSlack);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int guard_slack() const noexcept { return guard_slack_; }
    XSeries with_guard(int guard_slack) const;

    /// c_m; m must lie in 0..order().
    const PolyAux& operator[](int m) const;
    const std::vector<PolyAux>& coefficients() const noexcept { return coeffs_; }
    void set(int m, PolyAux value);

    XSeries truncated(int order) const;
    bool is_zero() const;
    /// Index of the first non-zero coefficient; -1 for zero.
    int valuation() const;

    XSeries operator-() const;
    XSeries& operator+=(const XSeries& other);
    XSeries& operator-=(const XSeries& other);
    XSeries& operator*=(const XSeries& other);
    XSeries& operator*=(const Rational& scalar);

    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    friend XSeries operator*(XSeries a, const Rational& s) { return a *= s; }
    friend XSeries operator*(const Rational& s, XSeries a) { return a *= s; }

    /// Multiply by a polynomial in (x, aux0, aux1). The guard slack of the
    /// result grows by aux_excess(poly).
    XSeries mul_poly(const Poly3& poly) const;
    XSeries operator*(const Poly3& poly) const { return mul_poly(poly); }

    /// Sets one auxiliary variable to a constant.
    XSeries evaluate_aux(std::size_t var, const Rational& value) const;

    /// Applies (m, i, j) -> (m, i', j') to every monomial x^m a^i b^j. The
    /// map must keep m and return non-negative exponents.
    XSeries map_monomials(const std::function<std::array<int, 3>(std::array<int, 3>)>& map) const;

    friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// Total aux degree ceiling for coefficient m.
    int guard_limit(int m) const noexcept { return 2 * m + guard_slack_; }

private:
    void check_guard(int m) const;

    std::vector<PolyAux> coeffs_;
    int guard_slack_;
};

/// Largest deg_aux - 2*deg_x over the terms of poly, floored at 0.
int aux_excess(const Poly3& poly);

/// Product truncated at `order` (never above either operand's order).
XSeries multiply(const XSeries& a, const XSeries& b, int order);

/// 1/s by Newton iteration; c_0 of s must be the constant 1.
XSeries reciprocal(const XSeries& s);

/// Square root with constant term 1 by Newton iteration; c_0 of s must be
/// the constant 1.
XSeries sqrt_series(const XSeries& s);

/// The series F with denominator * F = numerator, computed coefficient by
/// coefficient with exact polynomial division by the lowest non-zero
/// coefficient of the denominator. Throws ExactnessError when a division
/// leaves a remainder or when the numerator starts below the denominator.
XSeries divide_exact(const XSeries& numerator, const XSeries& denominator);

/// Formal composition s(sx, sa, sb): x -> sx, aux0 -> sa, aux1 -> sb,
/// truncated at the smallest operand order. sx must have zero constant term.
XSeries substitute(const XSeries& s, const XSeries& sx, const XSeries& sa, const XSeries& sb);

}  // namespace permlab
