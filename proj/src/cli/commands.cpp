#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "permlab/bijection.hpp"
#include "permlab/cli.hpp"
#include "permlab/closed_form.hpp"
#include "permlab/errors.hpp"
#include "permlab/recurrence.hpp"
#include "permlab/schroeder.hpp"
#include "permlab/systems.hpp"
#include "embedded.hpp"

namespace permlab::cli {

namespace {

constexpr int kIdentityRows = 20;
constexpr int kDiagonalRows = 10;
constexpr int kTriangleMax = 40;

std::string join(const std::vector<BigInt>& values, const char* sep = ",")
{
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) {
            out += sep;
        }
        out += values[k].get_str();
    }
    return out;
}

nlohmann::json json_ints(const std::vector<BigInt>& values)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) {
        arr.push_back(v.get_str());
    }
    return arr;
}

// First index where two vectors differ, as "k=3: a X, b Y".
std::string first_difference(const std::vector<BigInt>& got, const std::vector<BigInt>& want,
                             const char* got_name, const char* want_name)
{
    if (got.size() != want.size()) {
        return std::string(got_name) + " has " + std::to_string(got.size()) + " entries, " + want_name + " has " +
               std::to_string(want.size());
    }
    for (std::size_t k = 0; k < got.size(); ++k) {
        if (got[k] != want[k]) {
            return "i=" + std::to_string(k + 1) + ": " + got_name + " " + got[k].get_str() + ", " + want_name + " " +
                   want[k].get_str();
        }
    }
    return {};
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs one check body; arithmetic invariant failures become failed checks.
template <class Body>
void guarded(Report& report, const std::string& name, Body&& body)
{
    try {
        body();
    } catch (const ExactnessError& e) {
        report.add(name, false, std::string("exactness error: ") + e.what());
    } catch (const GuardOverflow& e) {
        report.add(name, false, std::string("guard overflow: ") + e.what());
    }
}

XSeries first_letter_series(const std::vector<std::vector<BigInt>>& by_n, std::size_t aux)
{
    std::vector<PolyAux> coeffs(by_n.size());
    for (std::size_t m = 1; m < by_n.size(); ++m) {
        std::vector<PolyAux::Term> terms;
        for (std::size_t i = 0; i < by_n[m].size(); ++i) {
            PolyAux::Exponents e{};
            e.at(aux) = static_cast<int>(i + 1);
            terms.push_back({e, Rational(by_n[m][i])});
        }
        coeffs[m] = PolyAux::from_terms(std::move(terms));
    }
    return XSeries::from_coefficients(std::move(coeffs));
}

Poly3 to_poly3(const XSeries& s)
{
    std::vector<Poly3::Term> terms;
    for (int m = 0; m <= s.order(); ++m) {
        for (const auto& t : s[m].terms()) {
            terms.push_back({Poly3::Exponents{m, t.exps[0], t.exps[1]}, t.coef});
        }
    }
    return Poly3::from_terms(std::move(terms));
}

// Series of the closed form a pair's first letter distribution is read from.
XSeries source_series(const SeriesSource& src, int order)
{
    ClearedForm form = build_closed_form(src.form);
    if (src.set_to_one) {
        form = form.evaluate(*src.set_to_one, Rational(1));
    }
    return expand(form, order);
}

std::vector<BigInt> coefficient_row(const XSeries& s, int n, std::size_t aux)
{
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    for (const auto& t : s[n].terms()) {
        const int i = t.exps[aux];
        const int other = t.exps[1 - aux];
        if (i < 1 || i > n || other != 0 || t.coef.get_den() != 1) {
            throw ExactnessError("coefficient " + t.coef.get_str() + " at x^" + std::to_string(n) +
                                 " is not a first letter count");
        }
        row[static_cast<std::size_t>(i - 1)] = t.coef.get_num();
    }
    return row;
}

PatternPair complement(const PatternPair& pair)
{
    return PatternPair(Pattern(pair.first().perm().complemented()), Pattern(pair.second().perm().complemented()))
        .canonical();
}

std::string cell_text(int n, int i, int j)
{
    return "n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string bracketed(const Permutation& p, const std::vector<LrMinimum>& minima)
{
    std::string out;
    for (int k = 0; k < p.size(); ++k) {
        if (k > 0) {
            out += ' ';
        }
        const bool is_min = std::any_of(minima.begin(), minima.end(), [&](const LrMinimum& m) {
            return m.position == k + 1;
        });
        const std::string letter = std::to_string(p[static_cast<std::size_t>(k)]);
        out += is_min ? "[" + letter + "]" : letter;
    }
    return out;
}

void suite_conjecture(Report& report, int n, int cap)
{
    const SchroederTriangle tri(n);
    for (const auto& pair : conjecture_pairs()) {
        std::string detail;
        for (int m = 1; m <= n && detail.empty(); ++m) {
            const auto got = first_letter_distribution(m, pair, {cap});
            const std::string diff = first_difference(got, tri.row(m), "census", "S_{n,i}");
            if (!diff.empty()) {
                detail = pair.str() + " n=" + std::to_string(m) + " " + diff;
            }
        }
        report.add("S_{n,i}(" + pair.str() + ") = S_{n,i} for n<=" + std::to_string(n), detail.empty(),
                   detail.empty() ? "rows 1.." + std::to_string(n) + " agree" : detail);
    }
}

void suite_recurrences(Report& report, int n, int cap)
{
    for (const auto& pair : conjecture_pairs()) {
        if (!is_row_recurrence_pair(pair)) {
            continue;
        }
        std::string detail;
        for (int m = 1; m <= n && detail.empty(); ++m) {
            const std::string diff =
                first_difference(th1_first_letter(m), first_letter_distribution(m, pair, {cap}), "recurrence", "census");
            if (!diff.empty()) {
                detail = pair.str() + " n=" + std::to_string(m) + " " + diff;
            }
        }
        report.add("th1_first_letter vs census " + pair.str(), detail.empty(), detail);
    }

    const std::vector<GTable> gtables = gtree_tables(n);
    for (const auto& pair : conjecture_pairs()) {
        if (!is_gtree_pair(pair)) {
            continue;
        }
        std::string detail;
        for (int m = 1; m <= n && detail.empty(); ++m) {
            GTable census(m);
            for_each_avoider(
                m, pair,
                [&](std::span<const int> p) {
                    const Permutation perm(std::vector<int>(p.begin(), p.end()));
                    census.cell(p[0], static_cast<int>(active_sites(perm, pair).size())) += 1;
                },
                {cap});
            const GTable& table = gtables[static_cast<std::size_t>(m)];
            for (int i = 1; i <= m && detail.empty(); ++i) {
                for (int j = 2; j <= m + 1 && detail.empty(); ++j) {
                    if (table.at(i, j) != census.at(i, j)) {
                        detail = pair.str() + " " + cell_text(m, i, j) + ": table " + table.at(i, j).get_str() +
                                 ", census " + census.at(i, j).get_str();
                    }
                }
            }
        }
        report.add("gtree_table vs active site census " + pair.str(), detail.empty(), detail);
    }

    for (auto kind : {JointRecurrence::avoid_1243_1423, JointRecurrence::avoid_1243_1342,
                      JointRecurrence::avoid_1243_1342_kronecker, JointRecurrence::avoid_1243_1324,
                      JointRecurrence::avoid_1243_1324_binomial}) {
        const PatternPair pair = pair_of(kind);
        const auto tables = joint_tables(kind, n);
        std::string detail;
        for (int m = 2; m <= n && detail.empty(); ++m) {
            const DistributionTable census = first_second_distribution(m, pair, {cap});
            const DistributionTable& table = tables[static_cast<std::size_t>(m)];
            for (int i = 1; i <= m && detail.empty(); ++i) {
                for (int j = 1; j <= m && detail.empty(); ++j) {
                    if (table.at(i, j) != census.at(i, j)) {
                        detail = pair.str() + " " + cell_text(m, i, j) + ": table " + table.at(i, j).get_str() +
                                 ", census " + census.at(i, j).get_str();
                    }
                }
            }
        }
        static const char* const names[] = {"1243_1423", "1243_1342", "1243_1342 kronecker", "1243_1324",
                                            "1243_1324 binomial"};
        report.add(std::string("joint table ") + names[static_cast<int>(kind)] + " vs census", detail.empty(), detail);
    }

    const SchroederTriangle tri(kIdentityRows);
    std::string detail;
    for (int m = 3; m <= kIdentityRows && detail.empty(); ++m) {
        for (int i = 1; i <= m - 2 && detail.empty(); ++i) {
            if (!column_recurrence_check(tri, m, i)) {
                detail = "S_{" + std::to_string(m) + "," + std::to_string(i) + "}";
            }
        }
    }
    report.add("S_{n,i} = 2S_{n-1,i} + sum_{l<i} S_{n-1,l}, n<=" + std::to_string(kIdentityRows), detail.empty(),
               detail);

    detail.clear();
    for (int m = 3; m <= kIdentityRows && detail.empty(); ++m) {
        if (tri.at(m, m) != tri.at(m, m - 1) || tri.at(m, m) != tri.at(m, m - 2) || !row_sum_identity_check(tri, m)) {
            detail = "row " + std::to_string(m) + ": " + join(tri.row(m));
        }
    }
    report.add("S_{n,n} = S_{n,n-1} = S_{n,n-2} = S_{n-1}, n<=" + std::to_string(kIdentityRows), detail.empty(),
               detail);

    detail.clear();
    const auto tables = joint_tables(JointRecurrence::avoid_1243_1342, kDiagonalRows);
    for (int m = 3; m <= kDiagonalRows && detail.empty(); ++m) {
        const DistributionTable& t = tables[static_cast<std::size_t>(m)];
        for (int i = 1; i <= m - 2 && detail.empty(); ++i) {
            BigInt below = 0;
            for (int l = 1; l <= i; ++l) {
                below += tables[static_cast<std::size_t>(m - 1)].at(l, i + 1);
            }
            if (t.at(i, i + 1) != t.at(i, i + 2) || t.at(i, i + 1) != below) {
                detail = "1243,1342 " + cell_text(m, i, i + 1) + ": " + t.at(i, i + 1).get_str() + " vs " +
                         t.at(i, i + 2).get_str() + " vs " + below.get_str();
            }
        }
    }
    report.add("a_n(i,i+1) = a_n(i,i+2) = sum_{l<=i} a_{n-1}(l,i+1) on 1243,1342, n<=" + std::to_string(kDiagonalRows),
               detail.empty(), detail);
}

void suite_bijection(Report& report, int n, int cap)
{
    std::string lands, minima, inverse, bijective;
    for (int m = 1; m <= n; ++m) {
        const auto domain = enumerate_avoiders(m, bijection_domain(), {cap});
        const auto codomain = enumerate_avoiders(m, bijection_codomain(), {cap});
        std::set<Permutation> images;
        for (const auto& p : domain) {
            const BijectionTrace trace = map_f_trace(p);
            const Permutation& q = trace.image();
            if (lands.empty() && !avoids(q, bijection_codomain())) {
                lands = p.str() + " -> " + q.str();
            }
            if (minima.empty()) {
                for (const auto& stage : trace.stages) {
                    if (left_right_minima(stage) != trace.minima) {
                        minima = p.str() + " stage " + stage.str();
                        break;
                    }
                }
            }
            if (inverse.empty() && avoids(q, bijection_codomain()) && inverse_f(q) != p) {
                inverse = p.str() + " -> " + q.str() + " -> " + inverse_f(q).str();
            }
            images.insert(q);
        }
        if (bijective.empty()) {
            const std::set<Permutation> target(codomain.begin(), codomain.end());
            if (images.size() != domain.size()) {
                bijective = "n=" + std::to_string(m) + ": " + std::to_string(domain.size()) + " inputs, " +
                            std::to_string(images.size()) + " images";
            } else if (images != target) {
                std::vector<Permutation> missing;
                std::set_difference(target.begin(), target.end(), images.begin(), images.end(),
                                    std::back_inserter(missing));
                bijective = "n=" + std::to_string(m) + ": not hit " + (missing.empty() ? "?" : missing.front().str());
            }
        }
    }
    const std::string range = "n<=" + std::to_string(n);
    report.add("map_f lands in S_n(1234,1243), " + range, lands.empty(), lands);
    report.add("map_f keeps left-right minima at every stage, " + range, minima.empty(), minima);
    report.add("inverse_f(map_f(p)) = p, " + range, inverse.empty(), inverse);
    report.add("map_f injective and onto S_n(1234,1243), " + range, bijective.empty(), bijective);
}

void suite_series(Report& report, int n, int deg, int cap)
{
    guarded(report, "triangle_gf through x^" + std::to_string(deg), [&] {
        const XSeries s = expand(build_closed_form("triangle_gf"), deg);
        const SchroederTriangle tri(deg);
        std::string detail;
        for (int m = 1; m <= deg && detail.empty(); ++m) {
            const std::string diff = first_difference(coefficient_row(s, m, 0), tri.row(m), "series", "triangle");
            if (!diff.empty()) {
                detail = "n=" + std::to_string(m) + " " + diff;
            }
        }
        report.add("triangle_gf through x^" + std::to_string(deg), detail.empty(), detail);
    });

    guarded(report, "schroeder_gf through x^" + std::to_string(deg), [&] {
        const XSeries s = expand(build_closed_form("schroeder_gf"), deg);
        std::string detail;
        for (int m = 1; m <= deg && detail.empty(); ++m) {
            const Rational c = s[m].constant_term();
            if (c != Rational(schroeder_number(m)) || s[m].size() > 1) {
                detail = "x^" + std::to_string(m) + ": " + c.get_str() + ", S_n " + schroeder_number(m).get_str();
            }
        }
        report.add("schroeder_gf through x^" + std::to_string(deg), detail.empty(), detail);
    });

    for (const auto& pair : conjecture_pairs()) {
        const auto src = series_source(pair);
        const std::string name = src->form + " vs census " + pair.str() + " through x^" + std::to_string(n);
        guarded(report, name, [&] {
            ClearedForm form = build_closed_form(src->form);
            if (src->set_to_one) {
                form = form.evaluate(*src->set_to_one, Rational(1));
            }
            std::vector<std::vector<BigInt>> by_n(static_cast<std::size_t>(n) + 1);
            for (int m = 1; m <= n; ++m) {
                by_n[static_cast<std::size_t>(m)] = first_letter_distribution(m, pair, {cap});
            }
            const XSeries target = first_letter_series(by_n, form.slot(src->first_letter) - 1);
            const ClearedCheck check = verify_cleared(target, form, n);
            report.add(name, check.pass, check.describe(form.vars));
        });
    }

    const FormCatalog& catalog = builtin_catalog();
    for (const auto& name : catalog.names()) {
        const ClearedForm& form = catalog.get(name);
        for (const auto& e : form.expectations) {
            const std::string label = "printed expansion of " + name + " through x^" + std::to_string(e.order);
            guarded(report, label, [&] {
                const Poly3 got = to_poly3(expand(form, e.order));
                const Poly3 diff = got - e.expansion;
                std::string detail;
                if (!diff.is_zero()) {
                    const auto& t = diff.terms().front();
                    detail = "differs at " + monomial_str(t.exps, form.vars) + " by " + t.coef.get_str();
                }
                report.add(label, diff.is_zero(), detail);
            });
        }
    }

    guarded(report, "v_n(y,1) vs first letter census", [&] {
        std::string detail;
        const auto vpolys = gtree_vpolys(n);
        for (const auto& pair : conjecture_pairs()) {
            if (!is_gtree_pair(pair)) {
                continue;
            }
            for (int m = 1; m <= n && detail.empty(); ++m) {
                const PolyAux at_one = vpolys[static_cast<std::size_t>(m)].poly.evaluate(1, Rational(1));
                std::vector<BigInt> row(static_cast<std::size_t>(m));
                for (int i = 1; i <= m; ++i) {
                    row[static_cast<std::size_t>(i - 1)] = at_one.coefficient({i, 0}).get_num();
                }
                const std::string diff =
                    first_difference(row, first_letter_distribution(m, pair, {cap}), "v_n(y,1)", "census");
                if (!diff.empty()) {
                    detail = pair.str() + " n=" + std::to_string(m) + " " + diff;
                }
            }
        }
        report.add("v_n(y,1) vs first letter census, n<=" + std::to_string(n), detail.empty(), detail);
    });

    guarded(report, "f(x,y;1) = A(x,y)", [&] {
        const XSeries f1 = expand(build_closed_form("gtree_gf").evaluate('q', Rational(1)), deg);
        const XSeries a = expand(build_closed_form("triangle_gf"), deg);
        const Poly3 diff = to_poly3(f1 - a);
        std::string detail;
        if (!diff.is_zero()) {
            const auto& t = diff.terms().front();
            detail = "differs at " + monomial_str(t.exps, {'x', 'y', 'q'}) + " by " + t.coef.get_str();
        }
        report.add("f(x,y;1) = A(x,y) through x^" + std::to_string(deg), diff.is_zero(), detail);
    });
}

void suite_systems(Report& report, int deg, bool big)
{
    for (SystemCase which : all_cases()) {
        const std::string prefix = std::string(case_name(which)) + ": ";
        guarded(report, prefix + "system", [&] {
            const SystemReport sr = verify_system(which, deg, big ? 2 * kMaxSystemOrder : kMaxSystemOrder);
            for (const auto& eq : sr.equations) {
                report.add(prefix + eq.label, eq.pass, eq.detail);
            }
        });
    }
}

void suite_inversion(Report& report, int n, int cap)
{
    const SchroederTriangle tri(n);
    std::string detail;
    for (int m = 1; m <= n && detail.empty(); ++m) {
        const std::string diff = first_difference(inversion_seq_distribution(m, cap), tri.row(m), "I_n(021)", "S_{n,k}");
        if (!diff.empty()) {
            detail = "n=" + std::to_string(m) + " " + diff;
        }
    }
    report.add("I_n(021) by e_n equals S_{n,k}, n<=" + std::to_string(n), detail.empty(), detail);
}

}  // namespace

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::add(std::string name, bool ok, std::string detail)
{
    checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string Report::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) {
            out << "  [" << c.detail << "]";
        }
        out << '\n';
    }
    out << "suite " << suite << ": " << checks.size() << " checks, " << failures() << " failed";
    out.setf(std::ios::fixed);
    out.precision(2);
    out << " (" << seconds << " s)\n";
    return out.str();
}

nlohmann::json Report::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"schema", kSchema}, {"suite", suite}, {"pass", pass()}, {"seconds", seconds}, {"checks", arr}};
}

int brute_cap(bool big)
{
    if (const char* env = std::getenv("PERMLAB_MAX_N"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 16) {
            throw UsageError(std::string("PERMLAB_MAX_N must be an integer in 1..16, got '") + env + "'");
        }
        return static_cast<int>(v);
    }
    return big ? 11 : 9;
}

const std::vector<PatternPair>& conjecture_pairs()
{
    static const std::vector<PatternPair> pairs = [] {
        std::vector<PatternPair> out;
        for (const char* text : {"1234,1243", "1243,1324", "1243,1342", "1243,1423", "1324,1342", "1324,1423",
                                 "1342,1423", "1342,1432", "1423,1432"}) {
            out.push_back(PatternPair::parse(text));
        }
        return out;
    }();
    return pairs;
}

std::string render_triangle(int n_max, Format format)
{
    if (n_max < 1 || n_max > kTriangleMax) {
        throw UsageError("triangle needs 1 <= n <= " + std::to_string(kTriangleMax));
    }
    const SchroederTriangle tri(n_max);
    if (format == Format::tsv) {
        return tri.to_tsv();
    }
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json sums = nlohmann::json::array();
    for (int n = 1; n <= n_max; ++n) {
        rows.push_back(json_ints(tri.row(n)));
        sums.push_back(tri.row_sum(n).get_str());
    }
    const nlohmann::json doc = {
        {"schema", kSchema}, {"command", "triangle"}, {"n_max", n_max}, {"rows", rows}, {"row_sums", sums}};
    return doc.dump(2) + "\n";
}

std::optional<Method> parse_method(std::string_view name)
{
    if (name == "brute") {
        return Method::brute;
    }
    if (name == "recurrence") {
        return Method::recurrence;
    }
    if (name == "series") {
        return Method::series;
    }
    return std::nullopt;
}

std::string_view method_name(Method method)
{
    switch (method) {
    case Method::brute:
        return "brute";
    case Method::recurrence:
        return "recurrence";
    case Method::series:
        return "series";
    }
    return "?";
}

std::optional<SeriesSource> series_source(const PatternPair& pair)
{
    const PatternPair c = pair.canonical();
    if (is_gtree_pair(c)) {
        return SeriesSource{"gtree_gf", 'y', 'q'};
    }
    for (const char* name : {"1243_1423", "1243_1342", "1243_1324"}) {
        std::string text = name;
        std::replace(text.begin(), text.end(), '_', ',');
        if (PatternPair::parse(text) == c) {
            return SeriesSource{std::string("first_letter_") + name, 'v', std::nullopt};
        }
    }
    const auto& nine = conjecture_pairs();
    if (std::find(nine.begin(), nine.end(), c) != nine.end()) {
        return SeriesSource{"triangle_gf", 'y', std::nullopt};
    }
    return std::nullopt;
}

std::vector<Method> applicable_methods(const PatternPair& pair)
{
    std::vector<Method> out{Method::brute};
    if (recurrence_first_letter(pair, 1)) {
        out.push_back(Method::recurrence);
    }
    if (series_source(pair)) {
        out.push_back(Method::series);
    }
    return out;
}

Distribution distribution(const PatternPair& pair, int n, Method method, int cap)
{
    if (n < 1) {
        throw UsageError("distribution needs n >= 1");
    }
    const auto methods = applicable_methods(pair);
    if (std::find(methods.begin(), methods.end(), method) == methods.end()) {
        throw UsageError("method " + std::string(method_name(method)) + " is not available for " + pair.str());
    }
    switch (method) {
    case Method::brute:
        return {first_letter_distribution(n, pair, {cap}),
                "brute force over S_" + std::to_string(n) + "(" + pair.str() + ")"};
    case Method::recurrence: {
        const char* which = is_row_recurrence_pair(pair) ? "row recurrence"
                            : is_gtree_pair(pair)         ? "generating tree tables"
                                                          : "joint first/second letter recurrence";
        return {*recurrence_first_letter(pair, n), std::string(which) + " for " + pair.str()};
    }
    case Method::series: {
        const SeriesSource src = *series_source(pair);
        const ClearedForm& form = build_closed_form(src.form);
        const XSeries s = source_series(src, n);
        std::string prov = "x^" + std::to_string(n) + " coefficient of " + src.form;
        if (src.set_to_one) {
            prov += " at " + std::string(1, *src.set_to_one) + "=1";
        }
        return {coefficient_row(s, n, form.slot(src.first_letter) - 1), prov};
    }
    }
    throw UsageError("unknown method");
}

Report distribution_check(const PatternPair& pair, int n, int cap)
{
    const Stopwatch clock;
    Report report;
    report.suite = "distribution " + pair.str() + " n=" + std::to_string(n);
    const Distribution brute = distribution(pair, n, Method::brute, cap);
    report.add("brute", true, brute.provenance);
    for (Method m : applicable_methods(pair)) {
        if (m == Method::brute) {
            continue;
        }
        guarded(report, std::string(method_name(m)), [&] {
            const Distribution d = distribution(pair, n, m, cap);
            const std::string diff = first_difference(d.counts, brute.counts, method_name(m).data(), "brute");
            report.add(std::string(method_name(m)) + " agrees with brute", diff.empty(),
                       diff.empty() ? d.provenance : diff);
        });
    }
    report.seconds = clock.seconds();
    return report;
}

const std::vector<Table2Row>& table2_golden()
{
    static const std::vector<Table2Row> rows = [] {
        std::vector<Table2Row> out;
        std::istringstream in{std::string(embedded::table2)};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::istringstream fields(line);
            std::string pair, mark, counts;
            if (!std::getline(fields, pair, '\t') || !std::getline(fields, mark, '\t') ||
                !std::getline(fields, counts)) {
                throw ExactnessError("malformed golden row: " + line);
            }
            Table2Row row{PatternPair::parse(pair), mark == "bold" ? Mark::bold : mark == "italic" ? Mark::italic
                                                                                                : Mark::plain,
                          {}};
            std::istringstream values(counts);
            std::string v;
            while (std::getline(values, v, ',')) {
                row.counts.emplace_back(v);
            }
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

Report table2_report(int cap)
{
    const Stopwatch clock;
    Report report;
    report.suite = "table2";
    const std::vector<BigInt> row8 = SchroederTriangle(kTable2Length).row(kTable2Length);
    const std::vector<BigInt> reversed(row8.rbegin(), row8.rend());
    std::set<PatternPair> bold, italic, equal_row, equal_reversed;
    std::size_t mismatches = 0;
    for (const auto& row : table2_golden()) {
        const auto got = first_letter_distribution(kTable2Length, row.pair, {cap});
        const std::string diff = first_difference(got, row.counts, "computed", "golden");
        mismatches += diff.empty() ? 0 : 1;
        report.add(row.pair.str() + " at n=8", diff.empty(), diff.empty() ? join(got) : diff);
        const PatternPair c = row.pair.canonical();
        if (row.mark == Mark::bold) {
            bold.insert(c);
        }
        if (row.mark == Mark::italic) {
            italic.insert(c);
        }
        if (got == row8) {
            equal_row.insert(c);
        }
        if (got == reversed) {
            equal_reversed.insert(c);
        }
    }
    report.add("golden diff", mismatches == 0,
               std::to_string(mismatches) + " mismatches over " + std::to_string(table2_golden().size()) + " rows");
    report.add("boldface rows are exactly the rows equal to S_{8,k}", bold == equal_row && bold.size() == 9,
               std::to_string(equal_row.size()) + " rows equal " + join(row8) + ", " + std::to_string(bold.size()) +
                   " marked bold");
    report.add("italic rows are exactly the rows equal to S_{8,9-k}", italic == equal_reversed && italic.size() == 9,
               std::to_string(equal_reversed.size()) + " rows equal the reverse, " + std::to_string(italic.size()) +
                   " marked italic");
    std::set<PatternPair> complements;
    for (const auto& p : bold) {
        complements.insert(complement(p));
    }
    report.add("italic pairs are the complements of the boldface pairs", complements == italic);
    report.seconds = clock.seconds();
    return report;
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::conjecture, Suite::recurrences, Suite::bijection, Suite::series, Suite::systems,
                    Suite::inversion}) {
        if (suite_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view suite_name(Suite suite)
{
    switch (suite) {
    case Suite::conjecture:
        return "conjecture";
    case Suite::recurrences:
        return "recurrences";
    case Suite::bijection:
        return "bijection";
    case Suite::series:
        return "series";
    case Suite::systems:
        return "systems";
    case Suite::inversion:
        return "inversion";
    }
    return "?";
}

int default_n(Suite suite) { return suite == Suite::bijection ? 8 : 9; }

int default_deg(Suite suite) { return suite == Suite::systems ? kDefaultSystemOrder : 12; }

Report verify_suite(Suite suite, const SuiteOptions& options)
{
    const int n = options.n.value_or(default_n(suite));
    const int deg = options.deg.value_or(default_deg(suite));
    if (n < 1 || deg < 1) {
        throw UsageError("--n and --deg must be positive");
    }
    const Stopwatch clock;
    Report report;
    report.suite = std::string(suite_name(suite));
    switch (suite) {
    case Suite::conjecture:
        suite_conjecture(report, n, options.cap);
        break;
    case Suite::recurrences:
        suite_recurrences(report, n, options.cap);
        break;
    case Suite::bijection:
        suite_bijection(report, n, options.cap);
        break;
    case Suite::series:
        if (deg > (options.big ? 40 : 24)) {
            throw ResourceError("series suite degree " + std::to_string(deg) + " exceeds the cap; use --big");
        }
        suite_series(report, n, deg, options.cap);
        break;
    case Suite::systems:
        suite_systems(report, deg, options.big);
        break;
    case Suite::inversion:
        suite_inversion(report, n, options.cap);
        break;
    }
    report.seconds = clock.seconds();
    return report;
}

std::string render_bijection(const Permutation& perm, Format format)
{
    const BijectionTrace trace = map_f_trace(perm);
    if (format == Format::json) {
        nlohmann::json minima = nlohmann::json::array();
        for (const auto& m : trace.minima) {
            minima.push_back({{"position", m.position}, {"value", m.value}});
        }
        nlohmann::json stages = nlohmann::json::array();
        for (const auto& s : trace.stages) {
            stages.push_back(s.str());
        }
        const nlohmann::json doc = {{"schema", kSchema}, {"command", "bijection"}, {"input", perm.str()},
                                    {"minima", minima},  {"stages", stages},       {"image", trace.image().str()}};
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t t = 0; t < trace.stages.size(); ++t) {
        out += "pi_" + std::to_string(t) + "  " + bracketed(trace.stages[t], trace.minima) + "\n";
    }
    out += trace.image().str() + "\n";
    return out;
}

std::string render_series(std::string_view form_name, int deg, Format format)
{
    if (deg < 0 || deg > 40) {
        throw UsageError("series needs 0 <= deg <= 40");
    }
    const ClearedForm& form = build_closed_form(form_name);
    const XSeries s = expand(form, deg);
    if (format == Format::json) {
        nlohmann::json terms = nlohmann::json::array();
        for (int m = 0; m <= s.order(); ++m) {
            for (const auto& t : s[m].terms()) {
                terms.push_back({m, t.exps[0], t.exps[1], t.coef.get_str()});
            }
        }
        std::string vars;
        for (char c : form.vars) {
            if (c != '\0') {
                vars += c;
            }
        }
        const nlohmann::json doc = {{"schema", kSchema}, {"command", "series"}, {"form", form.name},
                                    {"vars", vars},      {"deg", deg},          {"terms", terms}};
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (int m = 0; m <= s.order(); ++m) {
        for (const auto& t : s[m].terms()) {
            out += std::to_string(m) + "\t" + std::to_string(t.exps[0]) + "\t" + std::to_string(t.exps[1]) + "\t" +
                   t.coef.get_str() + "\n";
        }
    }
    return out;
}

}  // namespace permlab::cli
