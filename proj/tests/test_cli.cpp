#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "permlab/cli.hpp"
#include "permlab/schroeder.hpp"

using namespace permlab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "permlab");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("triangle")
{
    const Result r = invoke({"triangle", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1\t1\n2\t2\t2\n4\t6\t6\t6\n8\t16\t22\t22\t22\n16\t40\t68\t90\t90\t90\n");
    CHECK(invoke({"triangle", "--n", "1"}).out == "1\n");

    const Result j = invoke({"triangle", "--n", "12", "--format", "json"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == cli::kSchema);
    REQUIRE(doc["rows"].size() == 12);
    for (int n = 1; n <= 12; ++n) {
        BigInt sum = 0;
        for (const auto& cell : doc["rows"][static_cast<std::size_t>(n - 1)]) {
            sum += BigInt(cell.get<std::string>());
        }
        CHECK(sum == schroeder_number(n));
        CHECK(doc["row_sums"][static_cast<std::size_t>(n - 1)] == schroeder_number(n).get_str());
    }
    CHECK(invoke({"triangle", "--n", "41"}).code == 2);
    CHECK(invoke({"triangle", "--n", "0"}).code == 2);
    CHECK(invoke({"triangle", "--format", "xml"}).code == 2);
    CHECK(invoke({"triangle", "--n", "40"}).code == 0);
}

TEST_CASE("distribution")
{
    const Result r = invoke({"distribution", "--pair", "2314,3124", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("[1806,1092,752,629,629,752,1092,1806]\n", 0) == 0);
    CHECK(invoke({"distribution", "--pair", "1234,1243", "--n", "1"}).out.rfind("[1]\n", 0) == 0);

    const Result c = invoke({"distribution", "--pair", "1243,1423", "--n", "8", "--check"});
    CHECK(c.code == 0);
    CHECK(c.out.find("recurrence agrees") != std::string::npos);
    CHECK(c.out.find("series agrees") != std::string::npos);
    CHECK(c.out.find("FAIL") == std::string::npos);

    std::string row7 = "[";
    const SchroederTriangle tri(7);
    for (const auto& v : tri.row(7)) {
        row7 += (row7.size() > 1 ? "," : "") + v.get_str();
    }
    row7 += "]\n";
    for (const char* method : {"brute", "recurrence", "series"}) {
        for (const char* pair : {"1324,1423", "1423,1342", "1243,1324", "1234,1243"}) {
            const Result m = invoke({"distribution", "--pair", pair, "--n", "7", "--method", method});
            CHECK(m.code == 0);
            CHECK(m.out.rfind(row7, 0) == 0);
        }
    }
    CHECK(invoke({"distribution", "--pair", "2413,3142", "--n", "6", "--method", "series"}).code == 2);
    CHECK(invoke({"distribution", "--pair", "1342,1432", "--n", "6", "--method", "recurrence"}).code == 2);
    CHECK(invoke({"distribution", "--pair", "1243", "--n", "6"}).code == 2);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "10"}).code == 2);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "10", "--big"}).code == 0);

    const Result j = invoke({"distribution", "--pair", "1243,1423", "--n", "5", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == cli::kSchema);
    CHECK(doc["counts"] == nlohmann::json::array({"8", "16", "22", "22", "22"}));
}

TEST_CASE("PERMLAB_MAX_N overrides the cap")
{
    ::setenv("PERMLAB_MAX_N", "5", 1);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "6", "--big"}).code == 2);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "5"}).code == 0);
    ::setenv("PERMLAB_MAX_N", "abc", 1);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "5"}).code == 2);
    ::setenv("PERMLAB_MAX_N", "10", 1);
    CHECK(invoke({"distribution", "--pair", "1243,1423", "--n", "10"}).code == 0);
    ::unsetenv("PERMLAB_MAX_N");
    CHECK(cli::brute_cap(false) == 9);
    CHECK(cli::brute_cap(true) == 11);
}

TEST_CASE("table2 audit")
{
    CHECK(cli::table2_golden().size() == 57);
    const cli::Report report = cli::table2_report(9);
    CHECK(report.pass());
    int bold = 0, italic = 0;
    for (const auto& row : cli::table2_golden()) {
        bold += row.mark == cli::Mark::bold ? 1 : 0;
        italic += row.mark == cli::Mark::italic ? 1 : 0;
    }
    CHECK(bold == 9);
    CHECK(italic == 9);
    const Result r = invoke({"table2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 mismatches over 57 rows") != std::string::npos);
}

TEST_CASE("verify suites")
{
    for (const char* suite : {"conjecture", "recurrences", "bijection", "series", "systems", "inversion"}) {
        const Result r = invoke({"verify", suite});
        const std::string what = std::string(suite) + "\n" + r.out;
        CHECK_MESSAGE(r.code == 0, what);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    const Result j = invoke({"verify", "inversion", "--n", "6", "--format", "json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == cli::kSchema);
    CHECK(doc["suite"] == "inversion");
    CHECK(doc["pass"] == true);
    CHECK(invoke({"verify", "nosuch"}).code == 2);
    CHECK(invoke({"verify", "conjecture", "--n", "12"}).code == 2);
    CHECK(invoke({"verify", "systems", "--deg", "11"}).code == 2);
    CHECK(invoke({"verify", "systems", "--deg", "11", "--big"}).code == 0);
}

TEST_CASE("reports and --out")
{
    cli::Report report;
    report.suite = "demo";
    report.add("good", true);
    report.add("bad", false, "n=3 (i,j)=(1,2)");
    CHECK_FALSE(report.pass());
    CHECK(report.failures() == 1);
    CHECK(report.to_text().find("FAIL  bad  [n=3 (i,j)=(1,2)]") != std::string::npos);
    CHECK(report.to_json()["checks"][1]["detail"] == "n=3 (i,j)=(1,2)");

    const auto path = std::filesystem::temp_directory_path() / "permlab_cli_test_report.json";
    const Result r = invoke({"verify", "inversion", "--n", "5", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream saved;
    saved << in.rdbuf();
    CHECK(saved.str() == r.out);
    std::filesystem::remove(path);
}

TEST_CASE("bijection trace")
{
    const Result single = invoke({"bijection", "1 3 2"});
    CHECK(single.code == 0);
    CHECK(single.out == "pi_0  [1] 3 2\npi_1  [1] 2 3\n1 2 3\n");
    const Result r = invoke({"bijection", "3", "5", "2", "4", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pi_3") != std::string::npos);
    CHECK(r.out.find("pi_4") == std::string::npos);
    const Result bad = invoke({"bijection", "1 4 3 2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("does not avoid") != std::string::npos);
    CHECK(invoke({"bijection", "1 1 2"}).code == 2);
    const auto doc = nlohmann::json::parse(invoke({"bijection", "3 5 2 4 1", "--format", "json"}).out);
    CHECK(doc["stages"].size() == 4);
    CHECK(doc["minima"].size() == 3);
}

TEST_CASE("series dump")
{
    const Result r = invoke({"series", "schroeder_gf", "--deg", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\t0\t0\t1\n2\t0\t0\t2\n3\t0\t0\t6\n4\t0\t0\t22\n");
    CHECK(invoke({"series", "--list"}).out.find("first_letter_1243_1324\n") != std::string::npos);
    CHECK(invoke({"series", "nope"}).code == 2);
    CHECK(invoke({"series"}).code == 2);
    const auto doc = nlohmann::json::parse(invoke({"series", "joint_1243_1342.c", "--deg", "3", "--format", "json"}).out);
    CHECK(doc["terms"] == nlohmann::json::parse(R"([[3, 1, 0, "1"]])"));
}

TEST_CASE("usage")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"triangle", "--bogus"}).code == 2);
}
