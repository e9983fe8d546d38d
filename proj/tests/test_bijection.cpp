#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/bijection.hpp"
#include "permlab/errors.hpp"
#include "permlab/schroeder.hpp"

using namespace permlab;

TEST_CASE("single stage cases")
{
    CHECK(map_f(Permutation::parse("1 2 3")).str() == "1 3 2");
    CHECK(map_f(Permutation::parse("1 3 2")).str() == "1 2 3");
    CHECK(inverse_f(Permutation::parse("1 3 2")).str() == "1 2 3");
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : enumerate_avoiders(n, bijection_domain())) {
            if (p[0] != 1) {
                continue;
            }
            const BijectionTrace trace = map_f_trace(p);
            REQUIRE(trace.stage_count() == 1);
            std::vector<int> want{1};
            want.insert(want.end(), p.letters().rbegin(), p.letters().rend() - 1);
            REQUIRE(trace.image() == Permutation(want));
        }
    }
}

TEST_CASE("documented trace")
{
    const BijectionTrace trace = map_f_trace(Permutation::parse("3 5 2 4 1"));
    CHECK(trace.stage_count() == 3);
    CHECK(trace.minima == std::vector<LrMinimum>{{1, 3}, {3, 2}, {5, 1}});
    CHECK(inverse_f(trace.image()) == Permutation::parse("3 5 2 4 1"));
    CHECK(avoids(trace.image(), bijection_codomain()));
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(map_f(Permutation::parse("1 3 4 2")), DomainError);
    CHECK_THROWS_AS(map_f(Permutation::parse("1 4 3 2")), DomainError);
    CHECK_THROWS_AS(inverse_f(Permutation::parse("1 2 3 4")), DomainError);
    CHECK_THROWS_AS(occurrence_starts_at(Permutation::parse("1 2"), Pattern::parse("123"), 3), DomainError);
    CHECK(map_f(Permutation()).empty());
}

TEST_CASE("exhaustive: bijection onto S_{n,i}(1234,1243) with minima kept, n <= 9")
{
    const auto s1234 = oracle::letters("1234");
    const auto s1243 = oracle::letters("1243");
    const SchroederTriangle tri(9);
    for (int n = 1; n <= 9; ++n) {
        const auto domain = enumerate_avoiders(n, bijection_domain());
        const auto codomain = enumerate_avoiders(n, bijection_codomain());
        std::set<Permutation> images;
        std::vector<BigInt> by_first(static_cast<std::size_t>(n));
        for (const auto& p : domain) {
            const BijectionTrace trace = map_f_trace(p);
            const Permutation& q = trace.image();
            REQUIRE(trace.stage_count() == static_cast<int>(trace.minima.size()));
            REQUIRE(left_right_minima(q) == left_right_minima(p));
            REQUIRE(q[0] == p[0]);
            for (const auto& stage : trace.stages) {
                REQUIRE(left_right_minima(stage) == trace.minima);
            }
            REQUIRE(inverse_f(q) == p);
            if (n <= 7) {
                std::vector<int> letters(q.letters().begin(), q.letters().end());
                REQUIRE(oracle::avoids(letters, s1234, s1243));
            }
            images.insert(q);
            by_first[static_cast<std::size_t>(p[0] - 1)] += 1;
        }
        REQUIRE(images.size() == domain.size());
        REQUIRE(images == std::set<Permutation>(codomain.begin(), codomain.end()));
        CHECK(by_first == tri.row(n));
        for (const auto& q : codomain) {
            REQUIRE(map_f(inverse_f(q)) == q);
        }
    }
}

TEST_CASE("stage-local soundness: no forbidden occurrence starts at a processed minimum")
{
    const Pattern p1234 = Pattern::parse("1234");
    const Pattern p1243 = Pattern::parse("1243");
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : enumerate_avoiders(n, bijection_domain())) {
            const BijectionTrace trace = map_f_trace(p);
            std::vector<int> by_value;
            for (auto it = trace.minima.rbegin(); it != trace.minima.rend(); ++it) {
                by_value.push_back(it->position);
            }
            for (int t = 1; t <= trace.stage_count(); ++t) {
                const Permutation& stage = trace.stages[static_cast<std::size_t>(t)];
                for (int s = 0; s < t; ++s) {
                    const int pos = by_value[static_cast<std::size_t>(s)];
                    REQUIRE_FALSE(occurrence_starts_at(stage, p1234, pos));
                    REQUIRE_FALSE(occurrence_starts_at(stage, p1243, pos));
                }
            }
        }
    }
}

TEST_CASE("occurrence_starts_at")
{
    const Permutation p = Permutation::parse("2 1 3 5 4");
    CHECK(occurrence_starts_at(p, Pattern::parse("1243"), 1));
    CHECK(occurrence_starts_at(p, Pattern::parse("1243"), 2));
    CHECK_FALSE(occurrence_starts_at(p, Pattern::parse("1243"), 3));
    CHECK_FALSE(occurrence_starts_at(p, Pattern::parse("1234"), 1));
}
