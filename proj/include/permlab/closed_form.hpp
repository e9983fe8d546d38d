#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/sparse_poly.hpp"
#include "permlab/xseries.hpp"

namespace permlab {

/// Variable letters bound to the slots (x, aux0, aux1). Unused aux slots
/// hold '\0'.
using VarNames = std::array<char, 3>;

struct RadicalTerm {
    Poly3 coefficient;
    Poly3 radicand;
};

/// A printed low-order expansion: expand(form, order) must equal it exactly.
struct Expectation {
    int order = 0;
    Poly3 expansion;
    std::string text;
};

/// (P + sum Q_k sqrt(R_k)) / Dn with polynomial P, Q_k, R_k, Dn in
/// (x, aux0, aux1). Every radicand has constant term 1 so its square root is
/// the power series with constant term 1.
struct ClearedForm {
    std::string name;
    std::string note;
    VarNames vars{'x', '\0', '\0'};
    Poly3 denominator{1};
    Poly3 polynomial;
    std::vector<RadicalTerm> radicals;
    std::vector<Expectation> expectations;

    /// Slot of a variable letter; throws DomainError when unbound.
    std::size_t slot(char var) const;
    /// Same form with one variable set to a constant (expectations dropped).
    ClearedForm evaluate(char var, const Rational& value) const;
    /// Lowest power of x dividing the denominator.
    int denominator_x_valuation() const;
    std::string str() const;
};

/// Looks up previously defined forms for "@name" references.
using FormLookup = std::map<std::string, ClearedForm, std::less<>>;

/// Parses an expression over + - * / ^, implicit multiplication, integer
/// constants, the variable letters in `vars`, sqrt(...) and @name references
/// into `lookup`. Division is allowed by radical-free expressions only.
ClearedForm parse_cleared_form(std::string_view text, const VarNames& vars, const FormLookup* lookup = nullptr);

/// Parses a radical-free expression whose denominator is a constant.
Poly3 parse_polynomial(std::string_view text, const VarNames& vars);

/// Named closed forms read from an INI-like text: "[name]" headers followed
/// by "vars = x v w", "expr = ...", "note = ..." and "expect N = ..." lines;
/// indented lines continue the previous value and '#' starts a comment line.
class FormCatalog {
public:
    static FormCatalog parse(std::string_view text);

    const ClearedForm& get(std::string_view name) const;
    bool contains(std::string_view name) const { return forms_.find(name) != forms_.end(); }
    std::vector<std::string> names() const { return order_; }

private:
    FormLookup forms_;
    std::vector<std::string> order_;
};

/// The catalog compiled into the library.
const FormCatalog& builtin_catalog();

/// Named form from the built-in catalog; DomainError for an unknown name.
const ClearedForm& build_closed_form(std::string_view name);

/// Series of a cleared form through x^order. A denominator whose x^0 part is
/// exactly 1 is inverted by Newton iteration; any other denominator is
/// divided out coefficient by coefficient, which succeeds exactly when the
/// form is a series with polynomial coefficients (DomainError otherwise).
XSeries expand(const ClearedForm& form, int order, int guard_slack = XSeries::kDefaultGuardSlack);

/// target * Dn - P - sum Q_k sqrt(R_k) through x^order.
XSeries cleared_residual(const XSeries& target, const ClearedForm& form, int order);

struct ClearedCheck {
    bool pass = false;
    int order = 0;
    /// First non-zero residual monomial (x, aux0, aux1 exponents) on failure.
    std::optional<std::array<int, 3>> monomial;
    Rational residual;

    /// One-line summary naming the offending monomial in the form's letters.
    std::string describe(const VarNames& vars) const;
};

/// Checks target * Dn = P + sum Q_k sqrt(R_k) through x^order (capped at the
/// target's order). Failure is reported, never thrown.
ClearedCheck verify_cleared(const XSeries& target, const ClearedForm& form, int order);

/// Monomial text such as "x^3*v*w^2".
std::string monomial_str(const std::array<int, 3>& exps, const VarNames& vars);

}  // namespace permlab
