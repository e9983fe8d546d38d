#include <doctest.h>

#include <random>

#include "permlab/closed_form.hpp"
#include "permlab/errors.hpp"
#include "permlab/schroeder.hpp"
#include "permlab/xseries.hpp"

using namespace permlab;

namespace {

const VarNames kXvw{'x', 'v', 'w'};
const VarNames kXy{'x', 'y', '\0'};

XSeries poly_series(const char* text, int order, const VarNames& vars = kXvw)
{
    return XSeries::from_poly(parse_polynomial(text, vars), order);
}

PolyAux random_aux(std::mt19937& rng, int max_deg)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<PolyAux::Term> terms;
    for (int k = 0; k < 3; ++k) {
        terms.push_back({{deg(rng), deg(rng)}, Rational(coef(rng), 1 + (k % 2))});
    }
    return PolyAux::from_terms(terms);
}

Poly3 as_poly(const XSeries& s)
{
    std::vector<Poly3::Term> terms;
    for (int m = 0; m <= s.order(); ++m) {
        for (const auto& t : s[m].terms()) {
            terms.push_back({{m, t.exps[0], t.exps[1]}, t.coef});
        }
    }
    return Poly3::from_terms(terms);
}

}  // namespace

TEST_CASE("ring operations")
{
    const XSeries s = poly_series("1 + 2vx - 3x^2w + x^3v^2w", 6);
    CHECK(s + XSeries(6) == s);
    CHECK((s - s).is_zero());
    XSeries geometric(8);
    for (int m = 0; m <= 8; ++m) {
        geometric.set(m, PolyAux(1));
    }
    CHECK(poly_series("1 - x", 8) * geometric == XSeries::constant(PolyAux(1), 8));
    CHECK((s + poly_series("x", 3)).order() == 3);
    CHECK(XSeries::x(5).valuation() == 1);
    CHECK(XSeries(4).valuation() == -1);
}

TEST_CASE("product matches the convolution oracle")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PolyAux> a(7), b(7);
        for (int m = 0; m <= 6; ++m) {
            a[static_cast<std::size_t>(m)] = random_aux(rng, m);
            b[static_cast<std::size_t>(m)] = random_aux(rng, m);
        }
        const XSeries sa = XSeries::from_coefficients(a);
        const XSeries sb = XSeries::from_coefficients(b);
        const XSeries prod = sa * sb;
        REQUIRE(prod.order() == 6);
        for (int m = 0; m <= 6; ++m) {
            PolyAux want;
            for (int k = 0; k <= m; ++k) {
                want += a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(m - k)];
            }
            REQUIRE(prod[m] == want);
        }
        const Poly3 p = parse_polynomial("1 - vx + 2w^2x^2", kXvw);
        CHECK(sa.mul_poly(p) == sa * XSeries::from_poly(p, 6));
    }
}

TEST_CASE("reciprocal")
{
    const XSeries r = reciprocal(poly_series("1 - vwx", 7));
    for (int m = 0; m <= 7; ++m) {
        CHECK(r[m] == PolyAux::monomial({m, m}, 1));
    }
    const XSeries s = poly_series("1 - 2x + vx - x^2v^2w + 3x^3w", 9);
    CHECK(s * reciprocal(s) == XSeries::constant(PolyAux(1), 9));
    CHECK_THROWS_AS(reciprocal(poly_series("1 - v - 2x + vx", 6)), DomainError);
    CHECK_THROWS_AS(reciprocal(poly_series("2 - x", 6)), DomainError);
}

TEST_CASE("square roots square back")
{
    CHECK(sqrt_series(XSeries::constant(PolyAux(1), 6)) == XSeries::constant(PolyAux(1), 6));
    for (const char* radicand : {"1 - 6vwx + v^2w^2x^2", "(1-x)(1-x-4vwx)", "v^2x^2 - 6vx + 1"}) {
        const XSeries r = poly_series(radicand, 10);
        const XSeries root = sqrt_series(r);
        CHECK(root[0] == PolyAux(1));
        CHECK(root * root == r);
    }
    const XSeries t = poly_series("1 - 6xy + x^2y^2", 12, kXy);
    const XSeries root = sqrt_series(t);
    CHECK(root * root == t);
    CHECK_THROWS_AS(sqrt_series(poly_series("4 - x", 5)), DomainError);
}

TEST_CASE("exact division")
{
    const XSeries num = poly_series("x(1-v)(1+2vx)", 8);
    const XSeries den = poly_series("(1-v)x", 8);
    const XSeries q = divide_exact(num, den);
    CHECK(as_poly(q) == parse_polynomial("1 + 2vx", kXvw));
    CHECK_THROWS_AS(divide_exact(poly_series("1 + x", 6), poly_series("1 - v", 6)), ExactnessError);
}

TEST_CASE("guard")
{
    XSeries s(3, 2);
    s.set(1, PolyAux::monomial({2, 2}, 1));
    CHECK_THROWS_AS(s.set(1, PolyAux::monomial({3, 2}, 1)), GuardOverflow);
    CHECK_THROWS_AS(s[4], DomainError);
    XSeries wide(3, 8);
    wide.set(0, PolyAux::monomial({8, 0}, 1));
    CHECK_THROWS_AS(wide.with_guard(2), GuardOverflow);
}

TEST_CASE("substitution")
{
    const XSeries s = poly_series("1 + vx + w^2x^2 - 3vwx^3", 6);
    const XSeries one = XSeries::constant(PolyAux(1), 6);
    const XSeries v = XSeries::constant(PolyAux::variable(0), 6);
    const XSeries w = XSeries::constant(PolyAux::variable(1), 6);
    CHECK(substitute(s, XSeries::x(6), v, w) == s);
    CHECK_THROWS_AS(substitute(s, one, v, w), DomainError);

    const XSeries tri = expand(build_closed_form("triangle_gf"), 8);
    const XSeries one8 = XSeries::constant(PolyAux(1), 8);
    const XSeries at_one = substitute(tri, XSeries::x(8), one8, one8);
    const XSeries schroeder = expand(build_closed_form("schroeder_gf"), 8);
    CHECK(at_one == schroeder);
    for (int n = 1; n <= 8; ++n) {
        CHECK(at_one[n] == PolyAux(Rational(schroeder_number(n))));
    }

    // A+(x, 1-wx, w/(1-wx)) against its separately printed form.
    const int d = 8;
    const XSeries aplus = expand(build_closed_form("aplus_1243_1423"), d);
    const XSeries wd = XSeries::constant(PolyAux::variable(1), d);
    const XSeries sa = poly_series("1 - wx", d);
    const XSeries sb = wd * reciprocal(sa);
    CHECK(substitute(aplus, XSeries::x(d), sa, sb) == expand(build_closed_form("aplus_kernel_1243_1423"), d));
}

TEST_CASE("parser")
{
    CHECK(parse_polynomial("(1-x)^2", kXvw) == parse_polynomial("1 - 2x + x^2", kXvw));
    CHECK(parse_polynomial("2vw x", kXvw) == Poly3::monomial({1, 1, 1}, 2));
    CHECK(parse_polynomial("x/2", kXvw) == Poly3::monomial({1, 0, 0}, Rational(1, 2)));
    CHECK_THROWS_AS(parse_polynomial("1 + z", kXvw), DomainError);
    CHECK_THROWS_AS(parse_polynomial("(1 + x", kXvw), DomainError);
    CHECK_THROWS_AS(parse_polynomial("sqrt(1-x)", kXvw), DomainError);
    CHECK_THROWS_AS(parse_cleared_form("1/(sqrt(1-x))", kXvw), DomainError);

    const ClearedForm f = parse_cleared_form("(1 - sqrt(1-4x))/(2x)", {'x', '\0', '\0'});
    CHECK(f.denominator_x_valuation() == 1);
    const XSeries catalan = expand(f, 6);
    const std::vector<long> want{1, 1, 2, 5, 14, 42};
    for (int m = 0; m < 6; ++m) {
        CHECK(catalan[m] == PolyAux(want[static_cast<std::size_t>(m)]));
    }
    CHECK_THROWS_AS(expand(parse_cleared_form("1/(1-v)", kXvw), 4), DomainError);

    const FormCatalog cat = FormCatalog::parse("[a]\nvars = x y\nexpr = 1 + xy\n  - x^2\nnote = demo # trailing\n"
                                               "expect 2 = 1 + xy - x^2\n[b]\nvars = x y\nexpr = 2 @a\n");
    CHECK(cat.names() == std::vector<std::string>{"a", "b"});
    CHECK(cat.get("a").note == "demo");
    CHECK(expand(cat.get("b"), 3) == XSeries::from_poly(parse_polynomial("2 + 2xy - 2x^2", kXy), 3));
    CHECK_THROWS_AS(cat.get("c"), DomainError);
    CHECK_THROWS_AS(build_closed_form("no_such_form"), DomainError);
}

TEST_CASE("every stored expansion matches its form")
{
    const FormCatalog& cat = builtin_catalog();
    int checked = 0;
    for (const auto& name : cat.names()) {
        const ClearedForm& form = cat.get(name);
        for (const auto& e : form.expectations) {
            CHECK_MESSAGE(as_poly(expand(form, e.order)) == e.expansion, name);
            ++checked;
        }
    }
    CHECK(checked == 9);
}

TEST_CASE("printed low-order expansions")
{
    const auto through = [](const char* name, int order) { return as_poly(expand(build_closed_form(name), order)); };
    CHECK(through("joint_1243_1342.c", 6) ==
          parse_polynomial("vx^3+(2v+1)vx^4+(6v^2+3v+1)vx^5+(22v^3+11v^2+4v+1)vx^6", kXvw));
    CHECK(through("joint_1243_1342.b", 6) == parse_polynomial("2vw^4x^5+2(4vw+2w+1)vw^4x^6", kXvw));
    CHECK(through("joint_1243_1342.aminus", 4) ==
          parse_polynomial("v^2wx^2+(vw+v+1)v^2wx^3+2(v^2w^2+v^2w+v^2+vw+v+1)v^2wx^4", kXvw));
    CHECK(through("triangle_gf", 6) ==
          parse_polynomial("xy + x^2(y+y^2) + x^3(2y+2y^2+2y^3) + x^4(4y+6y^2+6y^3+6y^4)"
                           " + x^5(8y+16y^2+22y^3+22y^4+22y^5) + x^6(16y+40y^2+68y^3+90y^4+90y^5+90y^6)",
                           kXy));
}

TEST_CASE("single generating functions")
{
    const XSeries tri = expand(build_closed_form("triangle_gf"), 12);
    const SchroederTriangle t(12);
    const XSeries sch = expand(build_closed_form("schroeder_gf"), 12);
    const XSeries ax11 = expand(build_closed_form("a_x11"), 12);
    CHECK(ax11[1].is_zero());
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            REQUIRE(tri[n].coefficient({k, 0}) == Rational(t.at(n, k)));
        }
        CHECK(tri[n].size() == static_cast<std::size_t>(n));
        CHECK(tri[n].evaluate(0, Rational(1)) == sch[n]);
        CHECK(sch[n] == PolyAux(Rational(schroeder_number(n))));
        if (n >= 2) {
            CHECK(ax11[n] == sch[n]);
        }
    }
    const XSeries f1 = expand(build_closed_form("gtree_gf").evaluate('q', Rational(1)), 10);
    CHECK(f1 == tri.truncated(10));
}

TEST_CASE("A+ and A- forms: counting shape, w = 1 sums and specialisations")
{
    struct Case {
        const char* aplus;
        const char* aminus;
        const char* total;
    };
    for (const Case& c : {Case{"aplus_1243_1423", "aminus_1243_1423", "first_letter_1243_1423"},
                          Case{"joint_1243_1342.aplus", "joint_1243_1342.aminus", "first_letter_1243_1342"},
                          Case{"joint_1243_1324.aplus", "joint_1243_1324.aminus", "first_letter_1243_1324"}}) {
        const int d = 10;
        const ClearedForm& ap = build_closed_form(c.aplus);
        const ClearedForm& am = build_closed_form(c.aminus);
        for (const ClearedForm* form : {&ap, &am}) {
            const XSeries s = expand(*form, d);
            const bool below = form == &ap;
            for (int n = 0; n <= d; ++n) {
                for (const auto& t : s[n].terms()) {
                    const int i = t.exps[0];
                    const int j = t.exps[1];
                    REQUIRE(t.coef > 0);
                    REQUIRE(t.coef.get_den() == 1);
                    REQUIRE(i >= 1);
                    REQUIRE(j >= 1);
                    REQUIRE(i <= n);
                    REQUIRE(j <= n);
                    REQUIRE((below ? i < j : i > j));
                }
            }
        }
        const XSeries sum = expand(ap.evaluate('w', Rational(1)), d) + expand(am.evaluate('w', Rational(1)), d) +
                            poly_series("vx", d);
        CHECK_MESSAGE(sum == expand(build_closed_form(c.total), d), c.total);
    }
    const XSeries a1 = expand(build_closed_form("aplus_1243_1423").evaluate('w', Rational(1)), 10);
    CHECK(a1 == expand(build_closed_form("aplus1_1243_1423"), 10));
    const XSeries m1 = expand(build_closed_form("aminus_1243_1423").evaluate('w', Rational(1)), 10);
    CHECK(m1 == expand(build_closed_form("aminus1_1243_1423"), 10));
}

TEST_CASE("verify_cleared: pass and pinpointed failure")
{
    const ClearedForm& form = build_closed_form("triangle_gf");
    const SchroederTriangle t(9);
    std::vector<PolyAux> coeffs(10);
    for (int n = 1; n <= 9; ++n) {
        std::vector<PolyAux::Term> terms;
        for (int k = 1; k <= n; ++k) {
            terms.push_back({{k, 0}, Rational(t.at(n, k))});
        }
        coeffs[static_cast<std::size_t>(n)] = PolyAux::from_terms(terms);
    }
    const XSeries target = XSeries::from_coefficients(coeffs);
    const ClearedCheck ok = verify_cleared(target, form, 9);
    CHECK(ok.pass);
    CHECK(ok.describe(form.vars) == "identity holds through x^9");

    coeffs[6] += PolyAux::monomial({3, 0}, 1);
    const ClearedCheck bad = verify_cleared(XSeries::from_coefficients(coeffs), form, 9);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.monomial.has_value());
    CHECK((*bad.monomial)[0] == 6);
    CHECK(bad.describe(form.vars).find("residual") != std::string::npos);
    CHECK(verify_cleared(target, form, 20).order == 9);
}
