#include "permlab/closed_form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "permlab/errors.hpp"
#include "embedded.hpp"

namespace permlab {

namespace {

struct Num {
    Poly3 p;
    std::vector<RadicalTerm> r;
};

void normalize(Num& n)
{
    std::vector<RadicalTerm> out;
    for (auto& t : n.r) {
        if (t.coefficient.is_zero()) {
            continue;
        }
        if (t.radicand == Poly3(1)) {
            n.p += t.coefficient;
            continue;
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const RadicalTerm& o) { return o.radicand == t.radicand; });
        if (it != out.end()) {
            it->coefficient += t.coefficient;
        } else {
            out.push_back(std::move(t));
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const RadicalTerm& t) { return t.coefficient.is_zero(); }),
              out.end());
    n.r = std::move(out);
}

Num scaled(Num n, const Poly3& f)
{
    n.p *= f;
    for (auto& t : n.r) {
        t.coefficient *= f;
    }
    normalize(n);
    return n;
}

Num combine(Num a, const Num& b, bool subtract)
{
    if (subtract) {
        a.p -= b.p;
    } else {
        a.p += b.p;
    }
    for (const auto& t : b.r) {
        a.r.push_back({subtract ? Poly3(-t.coefficient) : t.coefficient, t.radicand});
    }
    normalize(a);
    return a;
}

// sqrt(R1) sqrt(R2) is taken as sqrt(R1 R2); every radical has constant
// term 1, so both sides are the same branch.
Num multiply(const Num& a, const Num& b)
{
    Num out;
    out.p = a.p * b.p;
    for (const auto& t : b.r) {
        out.r.push_back({a.p * t.coefficient, t.radicand});
    }
    for (const auto& t : a.r) {
        out.r.push_back({b.p * t.coefficient, t.radicand});
    }
    for (const auto& s : a.r) {
        for (const auto& t : b.r) {
            if (s.radicand == t.radicand) {
                out.p += s.coefficient * t.coefficient * s.radicand;
            } else {
                out.r.push_back({s.coefficient * t.coefficient, s.radicand * t.radicand});
            }
        }
    }
    normalize(out);
    return out;
}

struct Value {
    Num num;
    Poly3 den{1};
};

Value add(const Value& a, const Value& b, bool subtract)
{
    if (a.den == b.den) {
        return {combine(a.num, b.num, subtract), a.den};
    }
    if (auto q = a.den.divide_exact(b.den)) {
        return {combine(a.num, scaled(b.num, *q), subtract), a.den};
    }
    if (auto q = b.den.divide_exact(a.den)) {
        return {combine(scaled(a.num, *q), b.num, subtract), b.den};
    }
    return {combine(scaled(a.num, b.den), scaled(b.num, a.den), subtract), a.den * b.den};
}

Value mul(const Value& a, const Value& b) { return {multiply(a.num, b.num), a.den * b.den}; }

Value power(const Value& base, long e)
{
    Value out{Num{Poly3(1), {}}, Poly3(1)};
    for (long i = 0; i < e; ++i) {
        out = mul(out, base);
    }
    return out;
}

Poly3 remap(const Poly3& p, const std::array<std::size_t, 3>& to)
{
    std::vector<Poly3::Term> raw;
    raw.reserve(p.size());
    for (const auto& t : p.terms()) {
        Poly3::Exponents e{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (t.exps[i] != 0) {
                e[to[i]] += t.exps[i];
            }
        }
        raw.push_back({e, t.coef});
    }
    return Poly3::from_terms(std::move(raw));
}

class Parser {
public:
    Parser(std::string_view text, const VarNames& vars, const FormLookup* lookup)
        : text_(text), vars_(vars), lookup_(lookup)
    {
    }

    Value parse()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw DomainError("expression column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor()
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0 || std::isalpha(static_cast<unsigned char>(c)) != 0 ||
               c == '(' || c == '@';
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    Value expr()
    {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = text_[pos_++] == '-';
        }
        Value v = term();
        if (negate) {
            v.num = combine(Num{}, v.num, true);
        }
        while (peek() == '+' || peek() == '-') {
            const bool subtract = text_[pos_++] == '-';
            v = add(v, term(), subtract);
        }
        return v;
    }

    Value term()
    {
        Value v = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                v = mul(v, factor());
            } else if (peek() == '/') {
                ++pos_;
                v = divide(v, factor());
            } else if (starts_factor()) {
                v = mul(v, factor());
            } else {
                return v;
            }
        }
    }

    Value divide(const Value& a, const Value& b)
    {
        if (!b.num.r.empty()) {
            fail("division by an expression with radicals");
        }
        if (b.num.p.is_zero()) {
            fail("division by zero");
        }
        return {scaled(a.num, b.den), a.den * b.num.p};
    }

    Value factor()
    {
        Value base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            if (start == pos_) {
                fail("exponent must be a non-negative integer");
            }
            base = power(base, std::stol(std::string(text_.substr(start, pos_ - start))));
        }
        return base;
    }

    Value primary()
    {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            return {Num{Poly3(Rational(BigInt(std::string(text_.substr(start, pos_ - start))))), {}}, Poly3(1)};
        }
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (c == '@') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 ||
                                           text_[pos_] == '_' || text_[pos_] == '.')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (lookup_ == nullptr || lookup_->find(name) == lookup_->end()) {
                fail("unknown reference @" + name);
            }
            return from_form(lookup_->find(name)->second);
        }
        if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            Value inner = expr();
            expect(')');
            if (!inner.num.r.empty() || !inner.den.is_constant()) {
                fail("sqrt argument must be a polynomial");
            }
            Poly3 radicand = inner.num.p * Rational(1 / inner.den.constant_term());
            Num n;
            n.r.push_back({Poly3(1), std::move(radicand)});
            normalize(n);
            return {n, Poly3(1)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            for (std::size_t i = 0; i < 3; ++i) {
                if (vars_[i] == c) {
                    ++pos_;
                    return {Num{Poly3::variable(i), {}}, Poly3(1)};
                }
            }
            fail(std::string("unbound variable '") + c + "'");
        }
        fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
    }

    Value from_form(const ClearedForm& f)
    {
        std::array<std::size_t, 3> to{};
        for (std::size_t i = 0; i < 3; ++i) {
            if (f.vars[i] == '\0') {
                continue;
            }
            auto it = std::find(vars_.begin(), vars_.end(), f.vars[i]);
            if (it == vars_.end()) {
                fail(std::string("reference @") + f.name + " uses unbound variable '" + f.vars[i] + "'");
            }
            to[i] = static_cast<std::size_t>(it - vars_.begin());
        }
        Num n;
        n.p = remap(f.polynomial, to);
        for (const auto& t : f.radicals) {
            n.r.push_back({remap(t.coefficient, to), remap(t.radicand, to)});
        }
        normalize(n);
        return {n, remap(f.denominator, to)};
    }

    std::string_view text_;
    const VarNames& vars_;
    const FormLookup* lookup_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

VarNames parse_vars(const std::string& text)
{
    VarNames vars{'\0', '\0', '\0'};
    std::istringstream in(text);
    std::string tok;
    std::size_t i = 0;
    while (in >> tok) {
        if (tok.size() != 1 || std::isalpha(static_cast<unsigned char>(tok[0])) == 0 || i == 3) {
            throw DomainError("vars must be up to three single letters, got '" + text + "'");
        }
        vars[i++] = tok[0];
    }
    if (vars[0] != 'x') {
        throw DomainError("the first variable must be x");
    }
    return vars;
}

XSeries numerator_series(const ClearedForm& form, int order)
{
    const int slack = XSeries::kUnguarded;
    XSeries n = XSeries::from_poly(form.polynomial, order, slack);
    for (const auto& t : form.radicals) {
        const XSeries root = sqrt_series(XSeries::from_poly(t.radicand, order, slack));
        n += multiply(XSeries::from_poly(t.coefficient, order, slack), root, order);
    }
    return n;
}

}  // namespace

std::size_t ClearedForm::slot(char var) const
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (var != '\0' && vars[i] == var) {
            return i;
        }
    }
    throw DomainError(std::string("variable '") + var + "' is not bound in " + name);
}

ClearedForm ClearedForm::evaluate(char var, const Rational& value) const
{
    const std::size_t s = slot(var);
    if (s == 0) {
        throw DomainError("x cannot be evaluated in a cleared form");
    }
    ClearedForm out = *this;
    out.expectations.clear();
    out.denominator = denominator.evaluate(s, value);
    if (out.denominator.is_zero()) {
        throw DomainError("denominator of " + name + " vanishes at " + std::string(1, var) + "=" + value.get_str());
    }
    out.polynomial = polynomial.evaluate(s, value);
    Num n{out.polynomial, {}};
    for (const auto& t : radicals) {
        n.r.push_back({t.coefficient.evaluate(s, value), t.radicand.evaluate(s, value)});
    }
    normalize(n);
    out.polynomial = n.p;
    out.radicals = n.r;
    return out;
}

int ClearedForm::denominator_x_valuation() const { return denominator.low_degree(0); }

std::string ClearedForm::str() const
{
    const std::array<char, 3> names{vars[0], vars[1] == '\0' ? 'a' : vars[1], vars[2] == '\0' ? 'b' : vars[2]};
    std::string out = "(" + polynomial.str(names) + ")";
    for (const auto& t : radicals) {
        out += " + (" + t.coefficient.str(names) + ")*sqrt(" + t.radicand.str(names) + ")";
    }
    return "[" + out + "] / (" + denominator.str(names) + ")";
}

ClearedForm parse_cleared_form(std::string_view text, const VarNames& vars, const FormLookup* lookup)
{
    Value v = Parser(text, vars, lookup).parse();
    ClearedForm f;
    f.vars = vars;
    f.denominator = v.den;
    f.polynomial = v.num.p;
    f.radicals = v.num.r;
    return f;
}

Poly3 parse_polynomial(std::string_view text, const VarNames& vars)
{
    const ClearedForm f = parse_cleared_form(text, vars);
    if (!f.radicals.empty() || !f.denominator.is_constant()) {
        throw DomainError("expected a polynomial: " + std::string(text));
    }
    return f.polynomial * Rational(1 / f.denominator.constant_term());
}

FormCatalog FormCatalog::parse(std::string_view text)
{
    FormCatalog cat;
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
    int line_no = 0;

    auto finish = [&]() {
        if (name.empty()) {
            return;
        }
        const std::string where = "closed form [" + name + "]";
        std::optional<VarNames> vars;
        std::string expr;
        std::string note;
        std::vector<std::pair<int, std::string>> expects;
        for (const auto& [key, value] : entries) {
            if (key == "vars") {
                vars = parse_vars(value);
            } else if (key == "expr") {
                expr = value;
            } else if (key == "note") {
                note = value;
            } else if (key.rfind("expect", 0) == 0) {
                expects.emplace_back(std::stoi(key.substr(6)), value);
            } else {
                throw DomainError(where + ": unknown key '" + key + "'");
            }
        }
        if (!vars || expr.empty()) {
            throw DomainError(where + " needs vars and expr");
        }
        ClearedForm f;
        try {
            f = parse_cleared_form(expr, *vars, &cat.forms_);
            for (const auto& [order, poly] : expects) {
                f.expectations.push_back({order, parse_polynomial(poly, *vars), poly});
            }
        } catch (const DomainError& e) {
            throw DomainError(where + ": " + e.what());
        }
        f.name = name;
        f.note = note;
        cat.order_.push_back(name);
        cat.forms_.emplace(name, std::move(f));
        name.clear();
        entries.clear();
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            finish();
            if (line.back() != ']') {
                throw DomainError("line " + std::to_string(line_no) + ": bad section header");
            }
            name = line.substr(1, line.size() - 2);
            if (cat.forms_.count(name) != 0) {
                throw DomainError("duplicate closed form [" + name + "]");
            }
            continue;
        }
        if (name.empty()) {
            throw DomainError("line " + std::to_string(line_no) + ": entry outside a section");
        }
        if (raw[0] == ' ' || raw[0] == '\t') {
            if (entries.empty()) {
                throw DomainError("line " + std::to_string(line_no) + ": continuation without a key");
            }
            entries.back().second += " " + line;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw DomainError("line " + std::to_string(line_no) + ": expected key = value");
        }
        entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    finish();
    return cat;
}

const ClearedForm& FormCatalog::get(std::string_view name) const
{
    auto it = forms_.find(name);
    if (it == forms_.end()) {
        throw DomainError("unknown closed form '" + std::string(name) + "'");
    }
    return it->second;
}

const FormCatalog& builtin_catalog()
{
    static const FormCatalog catalog = FormCatalog::parse(embedded::closed_forms);
    return catalog;
}

const ClearedForm& build_closed_form(std::string_view name) { return builtin_catalog().get(name); }

XSeries expand(const ClearedForm& form, int order, int guard_slack)
{
    if (order < 0) {
        throw DomainError("expansion order must be non-negative");
    }
    if (form.denominator.is_zero()) {
        throw DomainError("zero denominator in " + form.name);
    }
    const int k = form.denominator_x_valuation();
    const int full = order + k;
    const XSeries num = numerator_series(form, full);
    const XSeries den = XSeries::from_poly(form.denominator, full, XSeries::kUnguarded);
    XSeries result;
    if (k == 0 && den[0] == PolyAux(1)) {
        result = num * reciprocal(den);
    } else {
        try {
            result = divide_exact(num, den);
        } catch (const ExactnessError& e) {
            throw DomainError("denominator of " + form.name +
                              " does not divide out as a series; compare with verify_cleared instead (" + e.what() +
                              ")");
        }
    }
    return result.truncated(order).with_guard(guard_slack);
}

XSeries cleared_residual(const XSeries& target, const ClearedForm& form, int order)
{
    const int d = std::min(order, target.order());
    const XSeries t = target.truncated(d).with_guard(XSeries::kUnguarded);
    return t.mul_poly(form.denominator) - numerator_series(form, d);
}

std::string monomial_str(const std::array<int, 3>& exps, const VarNames& vars)
{
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (exps[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += vars[i] == '\0' ? (i == 1 ? 'a' : 'b') : vars[i];
        if (exps[i] != 1) {
            out += "^" + std::to_string(exps[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string ClearedCheck::describe(const VarNames& vars) const
{
    if (pass) {
        return "identity holds through x^" + std::to_string(order);
    }
    return "residual " + residual.get_str() + " at " + monomial_str(*monomial, vars) + " (checked through x^" +
           std::to_string(order) + ")";
}

ClearedCheck verify_cleared(const XSeries& target, const ClearedForm& form, int order)
{
    ClearedCheck check;
    const XSeries r = cleared_residual(target, form, order);
    check.order = r.order();
    const int m = r.valuation();
    if (m < 0) {
        check.pass = true;
        return check;
    }
    const auto& term = r[m].terms().front();
    check.monomial = std::array<int, 3>{m, term.exps[0], term.exps[1]};
    check.residual = term.coef;
    return check;
}

}  // namespace permlab
