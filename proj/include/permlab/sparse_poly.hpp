#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permlab/bigint.hpp"
#include "permlab/errors.hpp"

namespace permlab {

/// Sparse multivariate polynomial in N variables with exact rational
/// coefficients. Terms are kept sorted by exponent vector (lexicographic,
/// variable 0 most significant) with no stored zeros. Exponents are
/// non-negative and below 2^16.
template <std::size_t N>
class SparsePoly {
public:
    using Exponents = std::array<int, N>;

    struct Term {
        Exponents exps;
        Rational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    static constexpr int kMaxExponent = (1 << 16) - 1;

    SparsePoly() = default;
    SparsePoly(const Rational& constant)
    {
        if (constant != 0) {
            terms_.push_back({Exponents{}, constant});
        }
    }
    SparsePoly(long constant) : SparsePoly(Rational(constant)) {}

    static SparsePoly monomial(const Exponents& exps, const Rational& coef)
    {
        SparsePoly p;
        check_exponents(exps);
        if (coef != 0) {
            p.terms_.push_back({exps, coef});
        }
        return p;
    }

    /// Builds from unsorted terms, merging repeats and dropping zeros.
    static SparsePoly from_terms(std::vector<Term> raw)
    {
        for (const auto& t : raw) {
            check_exponents(t.exps);
        }
        SparsePoly p;
        p.terms_ = collect(std::move(raw));
        return p;
    }

    static SparsePoly variable(std::size_t index, int power = 1)
    {
        Exponents e{};
        e.at(index) = power;
        return monomial(e, 1);
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{}); }

    Rational coefficient(const Exponents& exps) const
    {
        auto it = find(exps);
        return it == terms_.end() ? Rational(0) : it->coef;
    }

    Rational constant_term() const { return coefficient(Exponents{}); }

    /// -1 for the zero polynomial.
    int total_degree() const
    {
        int best = -1;
        for (const auto& t : terms_) {
            int d = 0;
            for (int e : t.exps) {
                d += e;
            }
            best = std::max(best, d);
        }
        return best;
    }

    int degree(std::size_t var) const
    {
        int best = -1;
        for (const auto& t : terms_) {
            best = std::max(best, t.exps[var]);
        }
        return best;
    }

    /// Lowest exponent of `var` over all terms; -1 for zero.
    int low_degree(std::size_t var) const
    {
        int best = -1;
        for (const auto& t : terms_) {
            best = best < 0 ? t.exps[var] : std::min(best, t.exps[var]);
        }
        return best;
    }

    bool has_integer_coefficients() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.get_den() == 1; });
    }

    SparsePoly operator-() const
    {
        SparsePoly out = *this;
        for (auto& t : out.terms_) {
            t.coef = -t.coef;
        }
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& other) { return *this = combine(*this, other, false); }
    SparsePoly& operator-=(const SparsePoly& other) { return *this = combine(*this, other, true); }
    SparsePoly& operator*=(const SparsePoly& other) { return *this = multiply(*this, other); }

    SparsePoly& operator*=(const Rational& scalar)
    {
        if (scalar == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) {
            t.coef *= scalar;
        }
        return *this;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return combine(a, b, false); }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return combine(a, b, true); }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }
    friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
    friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    SparsePoly pow(unsigned exponent) const
    {
        SparsePoly result(1);
        SparsePoly base = *this;
        while (exponent != 0) {
            if ((exponent & 1U) != 0) {
                result *= base;
            }
            exponent >>= 1U;
            if (exponent != 0) {
                base *= base;
            }
        }
        return result;
    }

    /// Multiply by the monomial with exponent vector `shift`.
    SparsePoly shifted(const Exponents& shift) const
    {
        SparsePoly out = *this;
        for (auto& t : out.terms_) {
            for (std::size_t i = 0; i < N; ++i) {
                t.exps[i] += shift[i];
            }
            check_exponents(t.exps);
        }
        return out;
    }

    /// Sets variable `var` to a constant.
    SparsePoly evaluate(std::size_t var, const Rational& value) const
    {
        SparsePoly out;
        std::vector<Term> raw;
        raw.reserve(terms_.size());
        for (const auto& t : terms_) {
            Rational c = t.coef;
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(t.exps[var]));
            mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(t.exps[var]));
            p.canonicalize();
            c *= p;
            Exponents e = t.exps;
            e[var] = 0;
            raw.push_back({e, std::move(c)});
        }
        out.terms_ = collect(std::move(raw));
        return out;
    }

    /// Exact division. Returns nullopt when `divisor` does not divide this
    /// polynomial. Lexicographic leading terms; with a single divisor the
    /// remainder is zero exactly when the division is exact.
    std::optional<SparsePoly> divide_exact(const SparsePoly& divisor) const
    {
        if (divisor.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        const Term& lead = divisor.terms_.back();
        SparsePoly remainder = *this;
        SparsePoly quotient;
        std::vector<Term> quotient_terms;
        while (!remainder.is_zero()) {
            const Term& top = remainder.terms_.back();
            Exponents e{};
            for (std::size_t i = 0; i < N; ++i) {
                e[i] = top.exps[i] - lead.exps[i];
                if (e[i] < 0) {
                    return std::nullopt;
                }
            }
            Rational c = top.coef / lead.coef;
            const SparsePoly step = monomial(e, c);
            quotient_terms.push_back({e, c});
            remainder -= step * divisor;
        }
        std::reverse(quotient_terms.begin(), quotient_terms.end());
        quotient.terms_ = std::move(quotient_terms);
        return quotient;
    }

    /// Human-readable form, e.g. "2*v^2*w - 1/2*v + 3".
    std::string str(const std::array<char, N>& names) const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->coef;
            if (c < 0) {
                out += first ? "-" : " - ";
                c = -c;
            } else if (!first) {
                out += " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < N; ++i) {
                if (it->exps[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono.push_back(names[i]);
                if (it->exps[i] != 1) {
                    mono += "^" + std::to_string(it->exps[i]);
                }
            }
            if (mono.empty()) {
                out += c.get_str();
            } else if (c == 1) {
                out += mono;
            } else {
                out += c.get_str() + "*" + mono;
            }
        }
        return out;
    }

    static std::uint64_t key(const Exponents& e)
    {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < N; ++i) {
            k = (k << 16U) | static_cast<std::uint64_t>(e[i]);
        }
        return k;
    }

private:
    static_assert(N >= 1 && N <= 4, "exponent packing supports up to four variables");

    static void check_exponents(const Exponents& e)
    {
        for (int v : e) {
            if (v < 0 || v > kMaxExponent) {
                throw std::out_of_range("polynomial exponent out of range");
            }
        }
    }

    typename std::vector<Term>::const_iterator find(const Exponents& exps) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                                   [](const Term& t, const Exponents& e) { return t.exps < e; });
        if (it != terms_.end() && it->exps == exps) {
            return it;
        }
        return terms_.end();
    }

    static std::vector<Term> collect(std::vector<Term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
        std::vector<Term> out;
        for (auto& t : raw) {
            if (!out.empty() && out.back().exps == t.exps) {
                out.back().coef += t.coef;
            } else {
                if (!out.empty() && out.back().coef == 0) {
                    out.pop_back();
                }
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coef == 0) {
            out.pop_back();
        }
        return out;
    }

    static SparsePoly combine(const SparsePoly& a, const SparsePoly& b, bool subtract)
    {
        SparsePoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exps < ib->exps)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->exps < ia->exps) {
                out.terms_.push_back({ib->exps, subtract ? Rational(-ib->coef) : ib->coef});
                ++ib;
            } else {
                Rational c = subtract ? Rational(ia->coef - ib->coef) : Rational(ia->coef + ib->coef);
                if (c != 0) {
                    out.terms_.push_back({ia->exps, std::move(c)});
                }
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly out;
        if (a.is_zero() || b.is_zero()) {
            return out;
        }
        if (b.is_constant()) {
            return a * b.terms_[0].coef;
        }
        if (a.is_constant()) {
            return b * a.terms_[0].coef;
        }
        struct Product {
            std::uint64_t key;
            std::uint32_t ia;
            std::uint32_t ib;
        };
        std::vector<Product> products;
        products.reserve(a.terms_.size() * b.terms_.size());
        for (std::uint32_t i = 0; i < a.terms_.size(); ++i) {
            for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
                Exponents e{};
                for (std::size_t v = 0; v < N; ++v) {
                    e[v] = a.terms_[i].exps[v] + b.terms_[j].exps[v];
                }
                check_exponents(e);
                products.push_back({key(e), i, j});
            }
        }
        std::sort(products.begin(), products.end(), [](const Product& x, const Product& y) { return x.key < y.key; });
        Rational acc;
        Rational tmp;
        std::size_t k = 0;
        while (k < products.size()) {
            const std::uint64_t current = products[k].key;
            mpq_mul(acc.get_mpq_t(), a.terms_[products[k].ia].coef.get_mpq_t(),
                    b.terms_[products[k].ib].coef.get_mpq_t());
            Exponents e{};
            for (std::size_t v = 0; v < N; ++v) {
                e[v] = a.terms_[products[k].ia].exps[v] + b.terms_[products[k].ib].exps[v];
            }
            ++k;
            while (k < products.size() && products[k].key == current) {
                mpq_mul(tmp.get_mpq_t(), a.terms_[products[k].ia].coef.get_mpq_t(),
                        b.terms_[products[k].ib].coef.get_mpq_t());
                mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
                ++k;
            }
            if (acc != 0) {
                out.terms_.push_back({e, acc});
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// Polynomial in two auxiliary variables, bound to (v,w) or (y,q) by context.
using PolyAux = SparsePoly<2>;
/// Polynomial in x and the two auxiliary variables.
using Poly3 = SparsePoly<3>;

}  // namespace permlab
