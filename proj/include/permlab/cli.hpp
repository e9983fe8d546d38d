#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permlab/bigint.hpp"
#include "permlab/perm.hpp"

namespace permlab::cli {

inline constexpr const char* kSchema = "permlab/1";

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

enum class Format { tsv, json };

/// Usage error raised by the command layer (bad flag combination, unknown name).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Check {
    std::string name;
    bool pass = false;
    /// Counterexample on failure (permutation, table cell or series
    /// monomial), a short summary otherwise.
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
    std::size_t failures() const;
    void add(std::string name, bool pass, std::string detail = {});

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Brute-force cap: 9, or 11 with `big`; PERMLAB_MAX_N overrides both.
int brute_cap(bool big);

std::string render_triangle(int n_max, Format format);

/// The nine pairs whose first letter counts are S_{n,i}.
const std::vector<PatternPair>& conjecture_pairs();

enum class Method { brute, recurrence, series };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method method);

/// Methods implemented for `pair`; brute is always first.
std::vector<Method> applicable_methods(const PatternPair& pair);

/// Closed form whose x^n v^i coefficient counts the avoiders of length n
/// starting with i, with the letter it assigns to the first letter and any
/// remaining auxiliary letter fixed to 1. Nullopt for pairs without one.
struct SeriesSource {
    std::string form;
    char first_letter;
    std::optional<char> set_to_one;
};
std::optional<SeriesSource> series_source(const PatternPair& pair);

struct Distribution {
    std::vector<BigInt> counts;
    /// One line naming the method and its source.
    std::string provenance;
};

/// UsageError when the method does not apply to the pair.
Distribution distribution(const PatternPair& pair, int n, Method method, int cap);

/// Every applicable method, diffed against brute force.
Report distribution_check(const PatternPair& pair, int n, int cap);

enum class Mark { plain, bold, italic };

struct Table2Row {
    PatternPair pair;
    Mark mark = Mark::plain;
    std::vector<BigInt> counts;
};

/// Golden rows, in the order stored.
const std::vector<Table2Row>& table2_golden();
inline constexpr int kTable2Length = 8;

Report table2_report(int cap);

enum class Suite { conjecture, recurrences, bijection, series, systems, inversion };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct SuiteOptions {
    std::optional<int> n;
    std::optional<int> deg;
    int cap = 9;
    bool big = false;
};

/// Default n and degree per suite, used when the option is unset.
int default_n(Suite suite);
int default_deg(Suite suite);

Report verify_suite(Suite suite, const SuiteOptions& options);

/// pi_0 ... pi_r with left-right minima in brackets, then the image.
std::string render_bijection(const Permutation& perm, Format format);

/// Coefficients of expand(form, deg) as "n i j coef" lines.
std::string render_series(std::string_view form, int deg, Format format);

/// Entry point; argv[0] is skipped.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace permlab::cli
