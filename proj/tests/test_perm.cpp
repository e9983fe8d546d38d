#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permlab/errors.hpp"
#include "permlab/perm.hpp"
#include "permlab/schroeder.hpp"

using namespace permlab;

namespace {

std::vector<int> vec(const Permutation& p) { return {p.letters().begin(), p.letters().end()}; }

const char* const kTable2Pairs[] = {
    "2413,4123", "3142,4123", "3142,3214", "2341,2413", "2341,3142", "2413,3214", "2431,3421", "2431,4231",
    "2314,3124", "2314,3214", "2341,3241", "2413,3142", "2431,3241", "2134,3124", "3241,3421", "3214,3241",
    "3124,4123", "3214,4213", "3241,4231", "3412,4312", "3421,4231", "3421,4321", "4123,4132", "4123,4213",
    "4132,4213", "4132,4231", "4132,4312", "4213,4231", "4213,4312", "4231,4312", "4312,4321", "3124,3214",
    "3412,3421", "2314,2341", "2134,2314", "2134,2143", "2341,2431", "1432,2413", "1432,3142", "1234,2134",
    "1243,2143", "1324,2134", "1324,2314", "1342,2341", "1432,2431", "1324,3124", "1423,4123", "1432,4132",
    "1234,1243", "1243,1324", "1243,1342", "1243,1423", "1324,1342", "1324,1423", "1342,1423", "1342,1432",
    "1423,1432"};

}  // namespace

TEST_CASE("permutation parsing and validation")
{
    CHECK(Permutation::parse("2 4 1 3").str() == "2 4 1 3");
    CHECK(Permutation::parse("2413") == Permutation::parse("2,4,1,3"));
    CHECK(Permutation::parse("").empty());
    CHECK_THROWS_AS(Permutation::parse("1 1 2"), DomainError);
    CHECK_THROWS_AS(Permutation::parse("1 3"), DomainError);
    CHECK_THROWS_AS(Permutation::parse("1 x 2"), DomainError);
    CHECK_THROWS_AS(Pattern::parse("12"), DomainError);
    CHECK_THROWS_AS(PatternPair::parse("1243,1243"), DomainError);
    CHECK_THROWS_AS(PatternPair::parse("1243,132"), DomainError);
    CHECK_THROWS_AS(PatternPair::parse("1243"), DomainError);
    CHECK(PatternPair::parse("1423,1243").canonical().str() == "1243,1423");
    CHECK(Permutation::parse("2 4 1 3").reversed().str() == "3 1 4 2");
    CHECK(Permutation::parse("2 4 1 3").complemented().str() == "3 1 4 2");
}

TEST_CASE("contains: documented cases")
{
    CHECK(contains(Permutation::parse("1243"), Pattern::parse("1243")));
    CHECK_FALSE(contains(Permutation::parse("321"), Pattern::parse("1234")));
    CHECK(contains(Permutation::parse("2413"), Pattern::parse("1243")) ==
          oracle::contains({2, 4, 1, 3}, {1, 2, 4, 3}));
    CHECK(avoids(Permutation::parse("1"), PatternPair::parse("1234,1243")));
    CHECK_FALSE(avoids(Permutation::parse("1234"), PatternPair::parse("1234,1243")));
}

TEST_CASE("contains agrees with the subset oracle on all of S_7 for several patterns")
{
    for (const char* pat : {"1243", "1423", "2413", "4321", "132"}) {
        const Pattern p = Pattern::parse(pat);
        const auto op = oracle::letters(pat);
        std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
        do {
            REQUIRE(contains(std::span<const int>(perm), p) == oracle::contains(perm, op));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("containment is preserved by extension")
{
    std::mt19937 rng(20261016);
    const Pattern pat = Pattern::parse("1342");
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> p{1, 2, 3, 4, 5, 6};
        std::shuffle(p.begin(), p.end(), rng);
        if (!contains(std::span<const int>(p), pat)) {
            continue;
        }
        const int value = std::uniform_int_distribution<int>(1, 7)(rng);
        const int where = std::uniform_int_distribution<int>(0, 6)(rng);
        std::vector<int> q;
        for (int x : p) {
            q.push_back(x >= value ? x + 1 : x);
        }
        q.insert(q.begin() + where, value);
        CHECK(contains(std::span<const int>(q), pat));
    }
}

TEST_CASE("enumerate_avoiders matches the filtered S_n oracle in lexicographic order")
{
    for (const char* text : {"1234,1243", "1342,1432", "2413,3142", "1324,2314", "3142,3214"}) {
        const PatternPair pair = PatternPair::parse(text);
        const auto s = oracle::letters(std::string(text).substr(0, 4));
        const auto t = oracle::letters(std::string(text).substr(5, 4));
        for (int n = 0; n <= 7; ++n) {
            const auto got = enumerate_avoiders(n, pair);
            const auto want = oracle::avoiders(n, s, t);
            REQUIRE(got.size() == want.size());
            for (std::size_t k = 0; k < got.size(); ++k) {
                REQUIRE(vec(got[k]) == want[k]);
            }
        }
    }
}

TEST_CASE("enumeration edge cases and the cap")
{
    const PatternPair pair = PatternPair::parse("1234,1243");
    const auto empty = enumerate_avoiders(0, pair);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    CHECK(count_avoiders(3, pair) == 6);
    CHECK(count_avoiders(7, pair) == 1806);
    CHECK(count_avoiders(8, pair) == 64 + 224 + 512 + 928 + 1412 + 1806 + 1806 + 1806);
    CHECK_THROWS_AS(count_avoiders(12, pair), ResourceError);
    CHECK_THROWS_AS(count_avoiders(6, pair, {5}), ResourceError);
    CHECK(first_letter_distribution(1, pair) == std::vector<BigInt>{1});
}

TEST_CASE("first letter distribution: golden rows")
{
    CHECK(first_letter_distribution(8, PatternPair::parse("1234,1243")) ==
          to_bigints({64, 224, 512, 928, 1412, 1806, 1806, 1806}));
    CHECK(first_letter_distribution(8, PatternPair::parse("2431,3421")) ==
          to_bigints({1806, 1022, 710, 614, 644, 795, 1161, 1806}));
    CHECK(first_letter_distribution(8, PatternPair::parse("2314,3124")) ==
          to_bigints({1806, 1092, 752, 629, 629, 752, 1092, 1806}));
}

TEST_CASE("first letter distribution matches the oracle for small n")
{
    for (const char* text : {"1243,1423", "2431,4231", "1423,4123"}) {
        const auto s = oracle::letters(std::string(text).substr(0, 4));
        const auto t = oracle::letters(std::string(text).substr(5, 4));
        for (int n = 1; n <= 7; ++n) {
            const auto got = first_letter_distribution(n, PatternPair::parse(text));
            const auto want = oracle::first_letters(n, s, t);
            for (int i = 0; i < n; ++i) {
                REQUIRE(got[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);
            }
        }
    }
}

TEST_CASE("row sums equal the class size for every listed pair, n <= 10")
{
    for (const char* text : kTable2Pairs) {
        const PatternPair pair = PatternPair::parse(text);
        for (int n = 1; n <= 10; ++n) {
            BigInt sum = 0;
            for (const auto& c : first_letter_distribution(n, pair)) {
                sum += c;
            }
            REQUIRE(sum == BigInt(static_cast<unsigned long>(count_avoiders(n, pair))));
        }
    }
}

TEST_CASE("nine representative Schroeder classes have |S_n| = S_n for n <= 10")
{
    // Class V as listed, (3142,3214), is excluded: see the next case.
    for (const char* text : {"1234,2134", "1324,2314", "1342,2341", "3124,3214", "3412,3421", "1324,2134",
                             "3124,2314", "2134,3124", "2413,3142"}) {
        const PatternPair pair = PatternPair::parse(text);
        for (int n = 1; n <= 10; ++n) {
            REQUIRE(BigInt(static_cast<unsigned long>(count_avoiders(n, pair))) == oracle::schroeder_paths(n));
        }
    }
}

TEST_CASE("(3142,3214) and its symmetry class are not counted by S_n")
{
    const std::vector<unsigned long> sizes{1, 2, 6, 22, 88, 368, 1584, 6968};
    for (const char* text : {"3142,3214", "2413,4123", "3142,4123", "2341,2413", "2341,3142", "2413,3214",
                             "1432,2413", "1432,3142"}) {
        for (int n = 1; n <= 8; ++n) {
            REQUIRE(count_avoiders(n, PatternPair::parse(text)) == sizes[static_cast<std::size_t>(n - 1)]);
        }
    }
}

TEST_CASE("first/second letter table")
{
    const PatternPair pair = PatternPair::parse("1243,1423");
    const DistributionTable t2 = first_second_distribution(2, pair);
    CHECK(t2.at(1, 2) == 1);
    CHECK(t2.at(2, 1) == 1);
    const DistributionTable t3 = first_second_distribution(3, pair);
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            CHECK(t3.at(i, j) == (i == j ? 0 : 1));
        }
    }
    CHECK_THROWS_AS(first_second_distribution(1, pair), DomainError);

    for (int n = 2; n <= 7; ++n) {
        const DistributionTable t = first_second_distribution(n, pair);
        std::vector<std::vector<long>> want(static_cast<std::size_t>(n + 1), std::vector<long>(n + 1, 0));
        for (const auto& p : oracle::avoiders(n, {1, 2, 4, 3}, {1, 4, 2, 3})) {
            ++want[p[0]][p[1]];
        }
        const auto marginal = first_letter_distribution(n, pair);
        for (int i = 1; i <= n; ++i) {
            BigInt row = 0;
            for (int j = 1; j <= n; ++j) {
                REQUIRE(t.at(i, j) == want[i][j]);
                REQUIRE(t.at(i, j) >= 0);
                row += t.at(i, j);
            }
            CHECK(t.at(i, i) == 0);
            CHECK(row == marginal[static_cast<std::size_t>(i - 1)]);
            CHECK(t.first_letter(i) == row);
        }
    }
}

TEST_CASE("left-right minima")
{
    CHECK(left_right_minima(Permutation::parse("1 2 3")) == std::vector<LrMinimum>{{1, 1}});
    CHECK(left_right_minima(Permutation::parse("3 5 2 4 1")) == std::vector<LrMinimum>{{1, 3}, {3, 2}, {5, 1}});
    CHECK(left_right_minima(Permutation::parse("5 4 3 2 1")).size() == 5);
    std::vector<int> p{1, 2, 3, 4, 5, 6};
    do {
        const auto got = left_right_minima(std::span<const int>(p));
        const auto want = oracle::lr_minima(p);
        REQUIRE(got.size() == want.size());
        for (std::size_t k = 0; k < got.size(); ++k) {
            REQUIRE(got[k].position == want[k].first);
            REQUIRE(got[k].value == want[k].second);
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("active sites agree with the insert-and-check oracle")
{
    for (const char* text : {"1324,1423", "1342,1423"}) {
        const PatternPair pair = PatternPair::parse(text);
        const auto s = oracle::letters(std::string(text).substr(0, 4));
        const auto t = oracle::letters(std::string(text).substr(5, 4));
        CHECK(active_sites(Permutation::parse("1"), pair).size() == 2);
        for (int n = 1; n <= 6; ++n) {
            for (const auto& p : enumerate_avoiders(n, pair)) {
                const auto sites = active_sites(p, pair);
                std::vector<int> want;
                for (int g = 0; g <= n; ++g) {
                    if (oracle::avoids(oracle::insert_one(vec(p), g), s, t)) {
                        want.push_back(g);
                    }
                    REQUIRE(vec(insert_minimum(p, g)) == oracle::insert_one(vec(p), g));
                }
                REQUIRE(sites == want);
                if (n >= 2) {
                    CHECK(sites.size() >= 3);
                }
                CHECK(static_cast<int>(sites.size()) <= n + 1);
            }
        }
        // Both patterns start with 1, so avoiding their tails keeps every site.
        const auto tail = [](const std::vector<int>& w) {
            std::vector<int> rest(w.begin() + 1, w.end());
            for (int& v : rest) {
                --v;
            }
            return rest;
        };
        for (const auto& p : oracle::avoiders(5, tail(s), tail(t))) {
            CHECK(active_sites(Permutation(p), pair).size() == 6);
        }
    }
    CHECK_THROWS_AS(active_sites(Permutation::parse("1 2"), PatternPair::parse("1234,1243")), DomainError);
}
