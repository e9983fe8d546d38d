#include "permlab/xseries.hpp"

#include <algorithm>
#include <string>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

bool is_one(const PolyAux& p) { return p.is_constant() && p.constant_term() == 1; }

// Copy of s with zero coefficients appended up to `order`.
XSeries padded(const XSeries& s, int order)
{
    std::vector<PolyAux> c = s.coefficients();
    c.resize(static_cast<std::size_t>(order) + 1);
    return XSeries::from_coefficients(std::move(c), s.guard_slack());
}

}  // namespace

XSeries::XSeries(int order, int guard_slack) : guard_slack_(guard_slack)
{
    if (order < 0) {
        throw DomainError("series order must be non-negative");
    }
    if (guard_slack < 0) {
        throw DomainError("guard slack must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

XSeries XSeries::constant(const PolyAux& value, int order, int guard_slack)
{
    XSeries s(order, guard_slack);
    s.set(0, value);
    return s;
}

XSeries XSeries::from_poly(const Poly3& poly, int order, int guard_slack)
{
    std::vector<std::vector<PolyAux::Term>> buckets(static_cast<std::size_t>(order) + 1);
    for (const auto& t : poly.terms()) {
        if (t.exps[0] <= order) {
            buckets[static_cast<std::size_t>(t.exps[0])].push_back({{t.exps[1], t.exps[2]}, t.coef});
        }
    }
    XSeries s(order, guard_slack);
    for (int m = 0; m <= order; ++m) {
        s.set(m, PolyAux::from_terms(std::move(buckets[static_cast<std::size_t>(m)])));
    }
    return s;
}

XSeries XSeries::from_coefficients(std::vector<PolyAux> coefficients, int guard_slack)
{
    if (coefficients.empty()) {
        throw DomainError("series needs at least one coefficient");
    }
    XSeries s(static_cast<int>(coefficients.size()) - 1, guard_slack);
    s.coeffs_ = std::move(coefficients);
    for (int m = 0; m <= s.order(); ++m) {
        s.check_guard(m);
    }
    return s;
}

XSeries XSeries::x(int order, int guard_slack)
{
    XSeries s(order, guard_slack);
    if (order >= 1) {
        s.set(1, PolyAux(1));
    }
    return s;
}

XSeries XSeries::with_guard(int guard_slack) const
{
    return from_coefficients(coeffs_, guard_slack);
}

const PolyAux& XSeries::operator[](int m) const
{
    if (m < 0 || m > order()) {
        throw DomainError("series index " + std::to_string(m) + " outside 0.." + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(m)];
}

void XSeries::set(int m, PolyAux value)
{
    if (m < 0 || m > order()) {
        throw DomainError("series index " + std::to_string(m) + " outside 0.." + std::to_string(order()));
    }
    coeffs_[static_cast<std::size_t>(m)] = std::move(value);
    check_guard(m);
}

void XSeries::check_guard(int m) const
{
    const int deg = coeffs_[static_cast<std::size_t>(m)].total_degree();
    if (deg > guard_limit(m)) {
        throw GuardOverflow("aux degree " + std::to_string(deg) + " of x^" + std::to_string(m) +
                            " coefficient exceeds guard " + std::to_string(guard_limit(m)));
    }
}

XSeries XSeries::truncated(int new_order) const
{
    if (new_order > order()) {
        throw DomainError("cannot truncate a series of order " + std::to_string(order()) + " to order " +
                          std::to_string(new_order));
    }
    XSeries s(new_order, guard_slack_);
    std::copy(coeffs_.begin(), coeffs_.begin() + new_order + 1, s.coeffs_.begin());
    return s;
}

bool XSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PolyAux& p) { return p.is_zero(); });
}

int XSeries::valuation() const
{
    for (int m = 0; m <= order(); ++m) {
        if (!coeffs_[static_cast<std::size_t>(m)].is_zero()) {
            return m;
        }
    }
    return -1;
}

XSeries XSeries::operator-() const
{
    XSeries s = *this;
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

XSeries& XSeries::operator+=(const XSeries& other)
{
    const int d = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(d) + 1);
    guard_slack_ = std::max(guard_slack_, other.guard_slack_);
    for (int m = 0; m <= d; ++m) {
        coeffs_[static_cast<std::size_t>(m)] += other.coeffs_[static_cast<std::size_t>(m)];
        check_guard(m);
    }
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& other)
{
    const int d = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(d) + 1);
    guard_slack_ = std::max(guard_slack_, other.guard_slack_);
    for (int m = 0; m <= d; ++m) {
        coeffs_[static_cast<std::size_t>(m)] -= other.coeffs_[static_cast<std::size_t>(m)];
        check_guard(m);
    }
    return *this;
}

XSeries& XSeries::operator*=(const XSeries& other) { return *this = *this * other; }

XSeries& XSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) { return multiply(a, b, std::min(a.order(), b.order())); }

XSeries multiply(const XSeries& a, const XSeries& b, int order)
{
    const int slack = std::max(a.guard_slack(), b.guard_slack());
    const int va = a.valuation();
    const int vb = b.valuation();
    if (va < 0 || vb < 0) {
        return XSeries(std::max(0, std::min({order, a.order(), b.order()})), slack);
    }
    // A factor with valuation v only needs the other one through order - v.
    const int d = std::min({order, a.order() + vb, b.order() + va});
    if (d < 0) {
        throw DomainError("product order must be non-negative");
    }
    std::vector<int> nz_a;
    std::vector<int> nz_b;
    for (int m = 0; m <= std::min(d, a.order()); ++m) {
        if (!a[m].is_zero()) {
            nz_a.push_back(m);
        }
    }
    for (int m = 0; m <= std::min(d, b.order()); ++m) {
        if (!b[m].is_zero()) {
            nz_b.push_back(m);
        }
    }
    std::vector<PolyAux> out(static_cast<std::size_t>(d) + 1);
    for (int i : nz_a) {
        for (int j : nz_b) {
            if (i + j > d) {
                break;
            }
            out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
    }
    return XSeries::from_coefficients(std::move(out), slack);
}

int aux_excess(const Poly3& poly)
{
    int excess = 0;
    for (const auto& t : poly.terms()) {
        excess = std::max(excess, t.exps[1] + t.exps[2] - 2 * t.exps[0]);
    }
    return excess;
}

XSeries XSeries::mul_poly(const Poly3& poly) const
{
    const int slack = guard_slack_ + aux_excess(poly);
    return multiply(with_guard(slack), from_poly(poly, order(), slack), order());
}

XSeries XSeries::evaluate_aux(std::size_t var, const Rational& value) const
{
    XSeries s = *this;
    for (auto& c : s.coeffs_) {
        c = c.evaluate(var, value);
    }
    return s;
}

XSeries XSeries::map_monomials(const std::function<std::array<int, 3>(std::array<int, 3>)>& map) const
{
    std::vector<PolyAux> out;
    out.reserve(coeffs_.size());
    for (int m = 0; m <= order(); ++m) {
        std::vector<PolyAux::Term> raw;
        for (const auto& t : coeffs_[static_cast<std::size_t>(m)].terms()) {
            const auto e = map({m, t.exps[0], t.exps[1]});
            if (e[0] != m || e[1] < 0 || e[2] < 0) {
                throw DomainError("monomial map must keep the x exponent and stay non-negative");
            }
            raw.push_back({{e[1], e[2]}, t.coef});
        }
        out.push_back(PolyAux::from_terms(std::move(raw)));
    }
    return from_coefficients(std::move(out), guard_slack_);
}

XSeries reciprocal(const XSeries& s)
{
    if (!is_one(s[0])) {
        throw DomainError("reciprocal needs constant term 1, got " + s[0].str({'a', 'b'}));
    }
    const int d = s.order();
    XSeries r = XSeries::constant(PolyAux(1), 0, s.guard_slack());
    int known = 1;
    while (known <= d) {
        const int next = std::min(2 * known, d + 1);
        const XSeries rp = padded(r, next - 1);
        XSeries err = -multiply(s.truncated(next - 1), rp, next - 1);
        err.set(0, err[0] + PolyAux(1));
        r = rp + multiply(rp, err, next - 1);
        known = next;
    }
    return r;
}

XSeries sqrt_series(const XSeries& s)
{
    if (!is_one(s[0])) {
        throw DomainError("sqrt_series needs constant term 1, got " + s[0].str({'a', 'b'}));
    }
    const int d = s.order();
    XSeries r = XSeries::constant(PolyAux(1), 0, s.guard_slack());
    int known = 1;
    while (known <= d) {
        const int next = std::min(2 * known, d + 1);
        const XSeries rp = padded(r, next - 1);
        r = (rp + multiply(s.truncated(next - 1), reciprocal(rp), next - 1)) * Rational(1, 2);
        known = next;
    }
    return r;
}

XSeries divide_exact(const XSeries& numerator, const XSeries& denominator)
{
    const int k = denominator.valuation();
    if (k < 0) {
        throw DomainError("series division by zero");
    }
    const int nv = numerator.valuation();
    if (nv >= 0 && nv < k) {
        throw ExactnessError("numerator starts at x^" + std::to_string(nv) + " below denominator x^" +
                             std::to_string(k));
    }
    const int d = std::min(numerator.order(), denominator.order()) - k;
    if (d < 0) {
        throw DomainError("quotient order would be negative");
    }
    const int slack = std::max(numerator.guard_slack(), denominator.guard_slack());
    const PolyAux& lead = denominator[k];
    const bool scalar_lead = lead.is_constant();
    const Rational inv_lead = scalar_lead ? Rational(1 / lead.constant_term()) : Rational(0);
    std::vector<PolyAux> q(static_cast<std::size_t>(d) + 1);
    for (int m = 0; m <= d; ++m) {
        PolyAux rest = numerator[m + k];
        for (int t = 1; t <= m; ++t) {
            const PolyAux& dt = denominator[k + t];
            if (!dt.is_zero() && !q[static_cast<std::size_t>(m - t)].is_zero()) {
                rest -= dt * q[static_cast<std::size_t>(m - t)];
            }
        }
        if (scalar_lead) {
            q[static_cast<std::size_t>(m)] = rest * inv_lead;
        } else {
            auto quotient = rest.divide_exact(lead);
            if (!quotient) {
                throw ExactnessError("x^" + std::to_string(m) + " coefficient is not divisible by " +
                                     lead.str({'a', 'b'}));
            }
            q[static_cast<std::size_t>(m)] = std::move(*quotient);
        }
    }
    return XSeries::from_coefficients(std::move(q), slack);
}

XSeries substitute(const XSeries& s, const XSeries& sx, const XSeries& sa, const XSeries& sb)
{
    if (!sx[0].is_zero()) {
        throw DomainError("x substitution must have zero constant term");
    }
    const int d = std::min({s.order(), sx.order(), sa.order(), sb.order()});
    const int final_slack = std::max({s.guard_slack(), sx.guard_slack(), sa.guard_slack(), sb.guard_slack()});
    const int slack = XSeries::kUnguarded;
    int max_a = 0;
    int max_b = 0;
    for (int m = 0; m <= d; ++m) {
        max_a = std::max(max_a, s[m].degree(0));
        max_b = std::max(max_b, s[m].degree(1));
    }
    auto powers = [&](const XSeries& base, int count) {
        std::vector<XSeries> p;
        p.push_back(XSeries::constant(PolyAux(1), d, slack));
        const XSeries b = base.truncated(d).with_guard(slack);
        for (int i = 1; i <= count; ++i) {
            p.push_back(multiply(p.back(), b, d));
        }
        return p;
    };
    const std::vector<XSeries> pa = powers(sa, max_a);
    const std::vector<XSeries> pb = powers(sb, max_b);
    const XSeries x_sub = sx.truncated(d).with_guard(slack);

    XSeries result(d, slack);
    XSeries x_pow = XSeries::constant(PolyAux(1), d, slack);
    for (int m = 0; m <= d; ++m) {
        if (m > 0) {
            x_pow = multiply(x_pow, x_sub, d);
        }
        if (s[m].is_zero() || x_pow.is_zero()) {
            continue;
        }
        const int rest = d - m;
        // Group the terms of s[m] by their aux0 exponent.
        XSeries inner(rest, slack);
        const auto& terms = s[m].terms();
        std::size_t t = 0;
        while (t < terms.size()) {
            const int i = terms[t].exps[0];
            std::vector<PolyAux> group(static_cast<std::size_t>(rest) + 1);
            for (; t < terms.size() && terms[t].exps[0] == i; ++t) {
                const XSeries& bj = pb[static_cast<std::size_t>(terms[t].exps[1])];
                for (int n = 0; n <= rest; ++n) {
                    if (!bj[n].is_zero()) {
                        group[static_cast<std::size_t>(n)] += bj[n] * terms[t].coef;
                    }
                }
            }
            inner += multiply(pa[static_cast<std::size_t>(i)], XSeries::from_coefficients(std::move(group), slack), rest);
        }
        result += multiply(x_pow, padded(inner, d), d);
    }
    return result.with_guard(final_slack);
}

}  // namespace permlab
