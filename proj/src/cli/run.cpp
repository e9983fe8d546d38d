#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "permlab/cli.hpp"
#include "permlab/closed_form.hpp"
#include "permlab/errors.hpp"

namespace permlab::cli {

namespace {

Format parse_format(const std::string& text) { return text == "json" ? Format::json : Format::tsv; }

struct Output {
    std::ostream& out;
    std::string path;

    void emit(const std::string& text) const
    {
        out << text;
        if (!path.empty()) {
            std::ofstream file(path);
            if (!file) {
                throw UsageError("cannot write " + path);
            }
            file << text;
        }
    }
};

std::string render(const Report& report, Format format)
{
    return format == Format::json ? report.to_json().dump(2) + "\n" : report.to_text();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Schroeder triangle, pattern-avoidance census and generating function checks", "permlab"};
    app.require_subcommand(1);

    std::string format_text = "tsv";
    std::string out_path;
    bool big = false;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--out", out_path, "also write the output to this file");
    };

    int tri_n = 6;
    auto* triangle = app.add_subcommand("triangle", "rows 1..n of S_{n,k}");
    triangle->add_option("--n", tri_n, "last row (1..40)");
    add_common(triangle);

    std::string pair_text;
    int dist_n = 0;
    std::string method_text = "brute";
    bool check = false;
    auto* dist = app.add_subcommand("distribution", "first letter distribution of S_n(pair)");
    dist->add_option("--pair", pair_text, "two patterns, e.g. 1243,1423")->required();
    dist->add_option("--n", dist_n, "permutation length")->required();
    dist->add_option("--method", method_text, "brute, recurrence or series")
        ->check(CLI::IsMember({"brute", "recurrence", "series"}));
    dist->add_flag("--check", check, "run every applicable method and compare");
    dist->add_flag("--big", big, "raise the brute-force cap to n <= 11");
    add_common(dist);

    auto* table2 = app.add_subcommand("table2", "recompute every golden census row at n=8");
    table2->add_flag("--big", big, "raise the brute-force cap to n <= 11");
    add_common(table2);

    std::string suite_text;
    std::optional<int> verify_n;
    std::optional<int> verify_deg;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_text, "conjecture, recurrences, bijection, series, systems or inversion")
        ->required()
        ->check(CLI::IsMember({"conjecture", "recurrences", "bijection", "series", "systems", "inversion"}));
    verify->add_option("--n", verify_n, "largest permutation length");
    verify->add_option("--deg", verify_deg, "series truncation degree");
    verify->add_flag("--big", big, "raise the brute-force and truncation caps");
    add_common(verify);

    std::vector<std::string> perm_words;
    auto* bij = app.add_subcommand("bijection", "stage trace of f on a (1342,1432) avoider");
    bij->add_option("perm", perm_words, "one-line notation, e.g. \"3 5 2 4 1\"")->required();
    add_common(bij);

    std::string form_name;
    int series_deg = 6;
    bool list = false;
    auto* series = app.add_subcommand("series", "dump closed form coefficients as n i j coef");
    series->add_option("form", form_name, "catalog name");
    series->add_option("--deg", series_deg, "truncation degree");
    series->add_flag("--list", list, "list catalog names");
    add_common(series);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty()) {
            args.pop_back();
        }
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    }

    const Format format = parse_format(format_text);
    const Output output{out, out_path};
    try {
        if (triangle->parsed()) {
            output.emit(render_triangle(tri_n, format));
            return kExitPass;
        }
        if (dist->parsed()) {
            const PatternPair pair = PatternPair::parse(pair_text);
            const int cap = brute_cap(big);
            if (check) {
                const Report report = distribution_check(pair, dist_n, cap);
                output.emit(render(report, format));
                return report.pass() ? kExitPass : kExitFailure;
            }
            const Method method = *parse_method(method_text);
            const Distribution d = distribution(pair, dist_n, method, cap);
            if (format == Format::json) {
                nlohmann::json counts = nlohmann::json::array();
                for (const auto& c : d.counts) {
                    counts.push_back(c.get_str());
                }
                const nlohmann::json doc = {{"schema", kSchema},     {"command", "distribution"},
                                            {"pair", pair.str()},    {"n", dist_n},
                                            {"method", method_text}, {"counts", counts},
                                            {"provenance", d.provenance}};
                output.emit(doc.dump(2) + "\n");
            } else {
                std::string line = "[";
                for (std::size_t k = 0; k < d.counts.size(); ++k) {
                    line += (k > 0 ? "," : "") + d.counts[k].get_str();
                }
                output.emit(line + "]\n# " + d.provenance + "\n");
            }
            return kExitPass;
        }
        if (table2->parsed()) {
            const Report report = table2_report(brute_cap(big));
            output.emit(render(report, format));
            return report.pass() ? kExitPass : kExitFailure;
        }
        if (verify->parsed()) {
            SuiteOptions options;
            options.n = verify_n;
            options.deg = verify_deg;
            options.big = big;
            options.cap = brute_cap(big);
            const Report report = verify_suite(*parse_suite(suite_text), options);
            output.emit(render(report, format));
            return report.pass() ? kExitPass : kExitFailure;
        }
        if (bij->parsed()) {
            std::string text;
            for (const auto& w : perm_words) {
                text += (text.empty() ? "" : " ") + w;
            }
            output.emit(render_bijection(Permutation::parse(text), format));
            return kExitPass;
        }
        if (series->parsed()) {
            if (list) {
                std::string names;
                for (const auto& name : builtin_catalog().names()) {
                    names += name + "\n";
                }
                output.emit(names);
                return kExitPass;
            }
            if (form_name.empty()) {
                throw UsageError("series needs a form name (see --list)");
            }
            output.emit(render_series(form_name, series_deg, format));
            return kExitPass;
        }
    } catch (const UsageError& e) {
        err << "permlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "permlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "permlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "permlab: internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace permlab::cli
