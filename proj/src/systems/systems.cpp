#include "permlab/systems.hpp"

#include <algorithm>
#include <utility>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

const VarNames kVW{'x', 'v', 'w'};
const VarNames kYQ{'x', 'y', 'q'};

enum class JointPair { p1423, p1342, p1324 };

JointPair joint_pair(JointRecurrence kind)
{
    switch (kind) {
    case JointRecurrence::avoid_1243_1423:
        return JointPair::p1423;
    case JointRecurrence::avoid_1243_1342:
    case JointRecurrence::avoid_1243_1342_kronecker:
        return JointPair::p1342;
    case JointRecurrence::avoid_1243_1324:
    case JointRecurrence::avoid_1243_1324_binomial:
        return JointPair::p1324;
    }
    throw DomainError("unknown joint recurrence");
}

XSeries from_buckets(std::vector<std::vector<PolyAux::Term>> buckets)
{
    std::vector<PolyAux> c;
    c.reserve(buckets.size());
    for (auto& b : buckets) {
        c.push_back(PolyAux::from_terms(std::move(b)));
    }
    return XSeries::from_coefficients(std::move(c));
}

// Sum of poly * series terms; a null series stands for 1.
class Linear {
public:
    Linear(int order, const VarNames& vars) : acc_(order, XSeries::kUnguarded), vars_(vars) {}

    Linear& add(std::string_view poly, const XSeries& s) { return add(parse_polynomial(poly, vars_), s); }
    Linear& add(const Poly3& poly, const XSeries& s)
    {
        acc_ += s.with_guard(XSeries::kUnguarded).mul_poly(poly);
        return *this;
    }
    Linear& sub(std::string_view poly, const XSeries& s) { return add(-parse_polynomial(poly, vars_), s); }
    Linear& sub(const Poly3& poly, const XSeries& s) { return add(-poly, s); }
    Linear& add(std::string_view poly)
    {
        acc_ += XSeries::from_poly(parse_polynomial(poly, vars_), acc_.order(), XSeries::kUnguarded);
        return *this;
    }
    Linear& sub(std::string_view poly)
    {
        acc_ -= XSeries::from_poly(parse_polynomial(poly, vars_), acc_.order(), XSeries::kUnguarded);
        return *this;
    }

    const XSeries& value() const { return acc_; }

private:
    XSeries acc_;
    VarNames vars_;
};

EquationResult zero_check(std::string label, const XSeries& residual, const VarNames& vars)
{
    ClearedCheck c;
    c.order = residual.order();
    const int m = residual.valuation();
    if (m < 0) {
        c.pass = true;
    } else {
        const auto& t = residual[m].terms().front();
        c.monomial = std::array<int, 3>{m, t.exps[0], t.exps[1]};
        c.residual = t.coef;
    }
    return {std::move(label), c.pass, c.describe(vars)};
}

EquationResult equal_check(std::string label, const XSeries& a, const XSeries& b, const VarNames& vars)
{
    return zero_check(std::move(label), a.with_guard(XSeries::kUnguarded) - b, vars);
}

EquationResult cleared_check(std::string label, const XSeries& target, const ClearedForm& form, int order)
{
    const ClearedCheck c = verify_cleared(target, form, order);
    return {std::move(label), c.pass, c.describe(form.vars)};
}

struct Context {
    int order;
    VarNames vars;

    XSeries ser(std::string_view text) const
    {
        return expand(parse_cleared_form(text, vars), order, XSeries::kUnguarded);
    }
    XSeries one() const { return XSeries::constant(PolyAux(1), order); }
    XSeries zero() const { return XSeries(order); }
    XSeries x() const { return XSeries::x(order); }
    Linear linear() const { return Linear(order, vars); }
};

// A- in terms of A, shared by the three 1243 cases, cleared by (1-v).
EquationResult aminus_equation(const Context& k, const XSeries& am, const XSeries& a)
{
    const XSeries a_vw_1 = substitute(a, k.x(), k.ser("vw"), k.one());
    const XSeries a_vx_w_1 = substitute(a, k.ser("vx"), k.ser("w"), k.one());
    auto r = k.linear();
    r.add("1-v", am).sub("(1-v)v^2wx^2").sub("vx", a_vw_1).add("v^2x", a_vx_w_1);
    return zero_check("A- equation, times (1-v)", r.value(), k.vars);
}

EquationResult first_letter_check(const Context& k, const XSeries& a, const std::string& form)
{
    const XSeries target = a.evaluate_aux(1, 1) + k.ser("vx");
    return cleared_check("vx + A(x,v,1) = " + form, target, build_closed_form(form), k.order);
}

void system_1423(const Context& k, std::vector<EquationResult>& out)
{
    const XSeries ap = expand(build_closed_form("aplus_1243_1423"), k.order);
    const XSeries am = expand(build_closed_form("aminus_1243_1423"), k.order);
    const XSeries a = ap + am;
    const JointSeries dp = joint_dp_series(JointRecurrence::avoid_1243_1423, k.order);
    out.push_back(equal_check("A+ closed form = table series", ap, dp.aplus, k.vars));
    out.push_back(equal_check("A- closed form = table series", am, dp.aminus, k.vars));

    const XSeries x = k.x();
    const XSeries one = k.one();
    const XSeries c_vw = substitute(dp.c, x, k.ser("vw"), k.zero());
    const XSeries d_vw = substitute(dp.d, x, k.ser("vw"), k.zero());
    const XSeries b = k.linear().add("1", ap).sub("w", c_vw).sub("w^2", d_vw).value();
    out.push_back(equal_check("B = A+ - wC(x,vw) - w^2 D(x,vw) matches the table", b, dp.b, k.vars));

    out.push_back(aminus_equation(k, am, a));

    const XSeries a_vwx = substitute(a, k.ser("vwx"), one, one);
    const XSeries k1 = substitute(ap, k.ser("vwx/(1-vwx)"), k.ser("1-vwx"), one);
    const XSeries k2 = substitute(ap, x, k.ser("1-vwx"), k.ser("vw/(1-vwx)"));
    const XSeries k3 = substitute(b, x, k.ser("1-vwx"), k.ser("vw/(1-vwx)"));

    {
        auto r = k.linear();
        r.add("vwx+vw-1", c_vw)
            .sub("(vwx+vw-1)vwx^2", a_vwx)
            .sub("(vwx+vw-1)(vwx^2+v^2w^2x^3)")
            .sub("(vwx+vw-1)x", c_vw)
            .sub("vwx^2", k1)
            .add("(1-vwx)x^2", k2);
        out.push_back(zero_check("C equation, times (vwx+vw-1)", r.value(), k.vars));
    }
    {
        auto r = k.linear();
        r.add("vw(vwx+vw-1)", d_vw)
            .sub("vw(vwx+vw-1)x^2", a_vwx)
            .add("vw(vwx+vw-1)v^2w^2x^4")
            .sub("vw(vwx+vw-1)x", c_vw)
            .add("vw(vwx+vw-1)vwx^3", a_vwx)
            .sub("vw(vwx+vw-1)x", d_vw)
            .add("vw(vwx+vw-1)x^2", c_vw)
            .sub("vwx^2(1-vwx)", k1)
            .add("x^2(1-vwx)^2", k2);
        out.push_back(zero_check("D equation, times vw(vwx+vw-1)", r.value(), k.vars));
    }
    {
        // D recovered by solving its own equation, against the table diagonal.
        auto n = k.linear();
        n.add("vw(vwx+vw-1)x^2", a_vwx)
            .sub("vw(vwx+vw-1)v^2w^2x^4")
            .add("vw(vwx+vw-1)x", c_vw)
            .sub("vw(vwx+vw-1)vwx^3", a_vwx)
            .sub("vw(vwx+vw-1)x^2", c_vw)
            .add("vwx^2(1-vwx)", k1)
            .sub("x^2(1-vwx)^2", k2);
        const XSeries den = XSeries::from_poly(parse_polynomial("vw(vwx+vw-1)(1-x)", k.vars), k.order);
        try {
            out.push_back(equal_check("D solved from its equation = table diagonal", divide_exact(n.value(), den),
                                      d_vw, k.vars));
        } catch (const ExactnessError& e) {
            out.push_back({"D solved from its equation = table diagonal", false, e.what()});
        }
    }
    {
        auto r = k.linear();
        r.add("v(vwx+v-1)", b)
            .sub("v(vwx+v-1)(wx+x)", b)
            .sub("v(vwx+v-1)w^3x", d_vw)
            .sub("vw^2x^2(1-vwx)", k2)
            .add("v^2w^2x^2", ap)
            .sub("wx^2(1-vwx)^2", k3)
            .add("v^2wx^2", b);
        out.push_back(zero_check("B equation, times v(vwx+v-1)", r.value(), k.vars));
    }
    {
        auto r = k.linear();
        r.add("(vx-wx-v-x+1)(vwx+vw-1)", ap)
            .sub("(vwx+v-1)w^2x^2(vwx-v-1)", k1)
            .sub("vwx^2(w^2-1)(vwx-1)", k2)
            .sub("(vwx+v-1)(vwx+vw-1)w^2x^2(vwx-v-1)", a_vwx)
            .sub("(vwx+v-1)(vwx+vw-1)x^2vw^2(vw^2x^2-vwx-1)");
        out.push_back(zero_check("A+ equation, times (vwx+v-1)(vwx+vw-1)", r.value(), k.vars));
    }
    {
        // With w replaced by w/v, A+(x,v,w/v) has negative powers of v; the
        // further change x -> vx (monomial x^n v^i w^j -> x^n v^(n+i-j) w^j)
        // makes every term a power series again.
        const XSeries t = ap.map_monomials([](std::array<int, 3> e) {
            return std::array<int, 3>{e[0], e[0] + e[1] - e[2], e[2]};
        });
        const XSeries k2v = substitute(ap, k.ser("vx"), k.ser("1-vwx"), k.ser("w/(1-vwx)"));
        auto r = k.linear();
        r.add("(v^2x-wx-v-vx+1)(vwx+w-1)", t)
            .sub("(vwx+v-1)w^2x^2(vwx-v-1)", k1)
            .sub("wx^2(w^2-v^2)(vwx-1)", k2v)
            .sub("(vwx+v-1)(vwx+w-1)w^2x^2(vwx-v-1)", a_vwx)
            .sub("(vwx+v-1)(vwx+w-1)x^2w^2(v^2w^2x^2-v^2wx-v)");
        out.push_back(zero_check("A+ equation with w -> w/v, x -> vx, times (vwx+v-1)(vwx+w-1)", r.value(), k.vars));
    }
    out.push_back(cleared_check("A(x,1,1) = a_x11", a.evaluate_aux(0, 1).evaluate_aux(1, 1),
                                build_closed_form("a_x11"), k.order));
    out.push_back(cleared_check("A+(x,v,1) = aplus1_1243_1423", ap.evaluate_aux(1, 1),
                                build_closed_form("aplus1_1243_1423"), k.order));
    out.push_back(cleared_check("A-(x,v,1) = aminus1_1243_1423", am.evaluate_aux(1, 1),
                                build_closed_form("aminus1_1243_1423"), k.order));
    out.push_back(cleared_check("A+(x,1-wx,w/(1-wx)) = aplus_kernel_1243_1423",
                                substitute(ap, x, k.ser("1-wx"), k.ser("w/(1-wx)")),
                                build_closed_form("aplus_kernel_1243_1423"), k.order));
    out.push_back(first_letter_check(k, a, "first_letter_1243_1423"));
}

void system_1342(const Context& k, std::vector<EquationResult>& out)
{
    const XSeries ap = expand(build_closed_form("joint_1243_1342.aplus"), k.order);
    const XSeries am = expand(build_closed_form("joint_1243_1342.aminus"), k.order);
    const XSeries b = expand(build_closed_form("joint_1243_1342.b"), k.order);
    const XSeries c = expand(build_closed_form("joint_1243_1342.c"), k.order);
    const XSeries a = ap + am;
    const JointSeries dp = joint_dp_series(JointRecurrence::avoid_1243_1342, k.order);
    out.push_back(equal_check("A+ closed form = table series", ap, dp.aplus, k.vars));
    out.push_back(equal_check("A- closed form = table series", am, dp.aminus, k.vars));
    out.push_back(equal_check("B closed form = table series", b, dp.b, k.vars));
    out.push_back(equal_check("C closed form = table series", c, dp.c, k.vars));

    out.push_back(aminus_equation(k, am, a));

    const XSeries x = k.x();
    const XSeries one = k.one();
    const XSeries c_vw = substitute(c, x, k.ser("vw"), k.zero());
    const XSeries a_vwx = substitute(a, k.ser("vwx"), one, one);
    const XSeries a_wx_v = substitute(a, k.ser("wx"), k.ser("v"), one);
    {
        auto r = k.linear();
        r.add("1", ap)
            .sub("vw^2x^2-vw^3x^3")
            .sub("1", b)
            .sub("w^2+w", c_vw)
            .add("w^2x^2", a_vwx)
            .sub("wx", a_wx_v);
        out.push_back(zero_check("A+ equation", r.value(), k.vars));
    }
    {
        auto r = k.linear();
        r.add("v", c).sub("x", substitute(ap, x, one, k.ser("v")));
        out.push_back(zero_check("C equation, times v", r.value(), k.vars));
    }
    {
        const XSeries b_wx_v = substitute(b, k.ser("wx"), k.ser("v"), one);
        const XSeries c_wx_v = substitute(c, k.ser("wx"), k.ser("v"), k.zero());
        const XSeries kb1 = substitute(b, k.ser("vwx/(1-vwx)"), k.ser("1-vwx"), one);
        const XSeries kb2 = substitute(b, x, k.ser("1-vwx"), k.ser("vw/(1-vwx)"));
        const XSeries kc = substitute(c, k.ser("vwx/(1-vwx)"), k.ser("1-vwx"), k.zero());
        auto r = k.linear();
        r.add("(1-v-vwx)(1-vw-vwx)(1-w)", b)
            .sub("wx(1-v)(1-vw-vwx)", b)
            .add("wx(1-v)(1-vw-vwx)", b_wx_v)
            .sub("2(1-vw)w^3x(1-v-vwx)", c_vw)
            .add("2wx(1-v)(1-vw-vwx)", c_wx_v)
            .sub("x^2w^2(1-vwx)^2(1-w)", kb1)
            .add("x^2w^2(1-vwx)^2(1-w)", kb2)
            .sub("2x^2w^2(1-vwx)^2(1-w)", kc);
        out.push_back(zero_check("B equation, times (1-v-vwx)(1-vw-vwx)(1-w)", r.value(), k.vars));
    }
    out.push_back(first_letter_check(k, a, "first_letter_1243_1342"));
}

void system_1324(const Context& k, std::vector<EquationResult>& out)
{
    const XSeries ap = expand(build_closed_form("joint_1243_1324.aplus"), k.order);
    const XSeries am = expand(build_closed_form("joint_1243_1324.aminus"), k.order);
    const XSeries b = expand(build_closed_form("joint_1243_1324.b"), k.order);
    const XSeries c = expand(build_closed_form("joint_1243_1324.c"), k.order);
    const XSeries a = ap + am;
    const JointSeries dp = joint_dp_series(JointRecurrence::avoid_1243_1324, k.order);
    out.push_back(equal_check("A+ closed form = table series", ap, dp.aplus, k.vars));
    out.push_back(equal_check("A- closed form = table series", am, dp.aminus, k.vars));
    out.push_back(equal_check("B closed form = table series", b, dp.b, k.vars));
    out.push_back(equal_check("C closed form = table series", c, dp.c, k.vars));

    out.push_back(aminus_equation(k, am, a));

    const XSeries x = k.x();
    const XSeries one = k.one();
    const XSeries c_vw = substitute(c, x, k.ser("vw"), k.zero());
    const XSeries a_vwx = substitute(a, k.ser("vwx"), one, one);
    const XSeries a_wx_v = substitute(a, k.ser("wx"), k.ser("v"), one);
    {
        auto r = k.linear();
        r.add("1", ap).sub("vw^2x^2").sub("1", b).sub("w", c_vw).sub("wx", a_wx_v);
        out.push_back(zero_check("A+ equation", r.value(), k.vars));
    }
    {
        const XSeries b_1_vw = substitute(b, x, one, k.ser("vw"));
        auto r = k.linear();
        r.add("1-v", b)
            .sub("vwx", b)
            .add("wx", b_1_vw)
            .sub("(1-v)x", b)
            .sub("(1-v)wx^2", a_wx_v)
            .add("(1-v)vw^2x^3", a_vwx)
            .add("(1-v)v^2w^3x^4");
        out.push_back(zero_check("B equation, times (1-v)", r.value(), k.vars));
    }
    {
        const XSeries a_vx = substitute(a, k.ser("vx"), one, one);
        const XSeries k1 = substitute(ap, k.ser("vx/(1-vx)"), k.ser("1-vx"), one);
        const XSeries k2 = substitute(ap, x, k.ser("1-vx"), k.ser("v/(1-vx)"));
        auto r = k.linear();
        r.add("(vx+v-1)(1-x)", c)
            .sub("(vx+v-1)vx^3(1+vx)")
            .sub("(vx+v-1)vx^3", a_vx)
            .sub("vx^2", k1)
            .add("x^2(1-vx)", k2);
        out.push_back(zero_check("C equation, times (vx+v-1)(1-x)", r.value(), k.vars));
    }
    out.push_back(first_letter_check(k, a, "first_letter_1243_1324"));
}

void system_gtree(int order, std::vector<EquationResult>& out)
{
    const ClearedForm& form = build_closed_form("gtree_gf");
    const XSeries f = expand(form, order);
    out.push_back(equal_check("f(x,y;q) closed form = generating tree series", f, gtree_dp_series(order), kYQ));
    const XSeries f1 = f.evaluate_aux(1, 1);
    const XSeries tri = expand(build_closed_form("triangle_gf"), order);
    out.push_back(equal_check("f(x,y;1) = triangle_gf", f1, tri, kYQ));
    out.push_back(equal_check("gtree_gf with q=1 expanded = triangle_gf", expand(form.evaluate('q', 1), order), tri, kYQ));
    Linear r(order, kYQ);
    r.add("((1-q)-xyq(1-2q))(1-2xq)(1-xyq)", f)
        .sub("xy(1-q)(1-2xq)(1-xyq)")
        .sub("x^2yq(1-y)(1-q)")
        .sub("xyq(1-2xq)(1-xyq)", f1);
    out.push_back(zero_check("f equation, times (1-q)(1-2xq)(1-xyq)", r.value(), kYQ));
}

}  // namespace

JointSeries joint_dp_series(JointRecurrence kind, int order)
{
    if (order < 0) {
        throw DomainError("series order must be non-negative");
    }
    const JointPair which = joint_pair(kind);
    const std::vector<DistributionTable> tables = joint_tables(kind, std::max(order, 0));
    using Buckets = std::vector<std::vector<PolyAux::Term>>;
    const auto size = static_cast<std::size_t>(order) + 1;
    Buckets plus(size);
    Buckets minus(size);
    Buckets cc(size);
    Buckets dd(size);
    Buckets bb(size);
    for (int n = 2; n <= order; ++n) {
        const DistributionTable& t = tables[static_cast<std::size_t>(n)];
        const auto m = static_cast<std::size_t>(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const BigInt& value = t.at(i, j);
                if (i == j || value == 0) {
                    continue;
                }
                const Rational r(value);
                (i < j ? plus : minus)[m].push_back({{i, j}, r});
                if (j == i + 1 && (which == JointPair::p1423 || j <= n - 1)) {
                    cc[m].push_back({{i, 0}, r});
                }
                if (which == JointPair::p1423) {
                    if (j == i + 2) {
                        dd[m].push_back({{i, 0}, r});
                    } else if (j >= i + 3) {
                        bb[m].push_back({{i, j}, r});
                    }
                } else if (j <= n - 1 && j >= i + (which == JointPair::p1342 ? 3 : 2)) {
                    bb[m].push_back({{i, j}, r});
                }
            }
        }
    }
    return {from_buckets(std::move(plus)), from_buckets(std::move(minus)), from_buckets(std::move(cc)),
            from_buckets(std::move(dd)), from_buckets(std::move(bb))};
}

XSeries gtree_dp_series(int order)
{
    XSeries f(order);
    if (order < 1) {
        return f;
    }
    const std::vector<VPoly> v = gtree_vpolys(order);
    for (int n = 1; n <= order; ++n) {
        f.set(n, v[static_cast<std::size_t>(n)].poly);
    }
    return f;
}

std::string_view case_name(SystemCase which)
{
    switch (which) {
    case SystemCase::gtree:
        return "gtree";
    case SystemCase::avoid_1243_1423:
        return "1243_1423";
    case SystemCase::avoid_1243_1342:
        return "1243_1342";
    case SystemCase::avoid_1243_1324:
        return "1243_1324";
    }
    return "?";
}

std::optional<SystemCase> parse_case(std::string_view name)
{
    for (SystemCase c : all_cases()) {
        if (case_name(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<SystemCase> all_cases()
{
    return {SystemCase::gtree, SystemCase::avoid_1243_1423, SystemCase::avoid_1243_1342, SystemCase::avoid_1243_1324};
}

bool SystemReport::pass() const
{
    return !equations.empty() &&
           std::all_of(equations.begin(), equations.end(), [](const EquationResult& e) { return e.pass; });
}

SystemReport verify_system(SystemCase which, int order, int max_order)
{
    if (order < 1) {
        throw DomainError("system check order must be at least 1");
    }
    if (order > max_order) {
        throw ResourceError("system check order " + std::to_string(order) + " exceeds the configured maximum " +
                            std::to_string(max_order));
    }
    SystemReport report;
    report.which = which;
    report.order = order;
    const Context k{order, kVW};
    switch (which) {
    case SystemCase::gtree:
        system_gtree(order, report.equations);
        break;
    case SystemCase::avoid_1243_1423:
        system_1423(k, report.equations);
        break;
    case SystemCase::avoid_1243_1342:
        system_1342(k, report.equations);
        break;
    case SystemCase::avoid_1243_1324:
        system_1324(k, report.equations);
        break;
    }
    return report;
}

}  // namespace permlab
