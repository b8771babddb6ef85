#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "altinv/generator.hpp"
#include "oracles.hpp"

using namespace altinv;

namespace {

ClassSpec spec_of(Family f, const char* patterns_csv, int n) {
    return ClassSpec{f, parse_pattern_list(patterns_csv), n};
}

std::vector<Permutation> enum_ok(const ClassSpec& s, GenOptions opt = {}) {
    auto r = enumerate(s, opt);
    REQUIRE(r.has_value());
    return *r;
}

}  // namespace

TEST_CASE("the five members of the length-6 Fibonacci class") {
    const auto got = enum_ok(spec_of(Family::RAI, "3421,4312", 6));
    const std::set<Permutation> want = {
        Permutation::parse("2 1 6 4 5 3"), Permutation::parse("2 1 4 3 6 5"),
        Permutation::parse("4 2 6 1 5 3"), Permutation::parse("4 2 3 1 6 5"),
        Permutation::parse("6 2 4 3 5 1")};
    CHECK(std::set<Permutation>(got.begin(), got.end()) == want);
    CHECK(got.size() == 5);
}

TEST_CASE("small class fixtures") {
    const auto rai3 = enum_ok(spec_of(Family::RAI, "", 3));
    REQUIRE(rai3.size() == 1);
    CHECK(rai3[0] == Permutation::parse("2 1 3"));

    CHECK(enum_ok(spec_of(Family::AI, "132", 7)).empty());

    CHECK(count(spec_of(Family::AI, "1234", 8)) == 9);
    CHECK(count(spec_of(Family::RAI, "4321", 10)) == 21);
    CHECK(count(spec_of(Family::AI, "3241,4213", 8)) == 9);
}

TEST_CASE("connected-count fixtures") {
    CHECK(count_connected(spec_of(Family::RAI, "4123,2341", 10)) == 2);
    CHECK(count_connected(spec_of(Family::AI, "4123,2341", 2)) == 0);
}

TEST_CASE("length-21 connected count") {
    GenOptions opt;
    opt.workers = 2;
    CHECK(count_connected(spec_of(Family::RAI, "4132,2431", 21), opt) == 5);
}

TEST_CASE("degenerate lengths") {
    for (Family f : {Family::S, Family::I, Family::A, Family::RA, Family::AI, Family::RAI}) {
        const auto members = enum_ok(ClassSpec{f, {}, 0});
        REQUIRE(members.size() == 1);
        CHECK(members[0].empty());
        CHECK(count(ClassSpec{f, {}, 0}) == 1);
        CHECK(count(spec_of(f, "21", 0)) == 1);
    }
}

TEST_CASE("stream is lexicographic and members satisfy the family predicates") {
    for (Family f : {Family::S, Family::I, Family::A, Family::RA, Family::AI, Family::RAI})
        for (int n : {0, 1, 4, 6}) {
            const auto members = enum_ok(spec_of(f, "2143", n));
            for (size_t i = 1; i < members.size(); ++i)
                CHECK(members[i - 1].entries() < members[i].entries());
            for (const auto& p : members) {
                CHECK(oracle::family_member(p, f));
                CHECK_FALSE(oracle::contains_naive(p, Permutation::parse("2 1 4 3")));
            }
        }
}

TEST_CASE("pruned generation equals generate-then-filter on every length-4 pattern") {
    std::vector<Pattern> pats;
    for (const auto& t : oracle::all_permutations(4)) pats.push_back(Pattern(t));
    REQUIRE(pats.size() == 24);

    auto check_family = [&](Family f, int nmax) {
        for (int n = 0; n <= nmax; ++n) {
            const auto unfiltered = enum_ok(ClassSpec{f, {}, n});
            for (const auto& t : pats) {
                long long filtered = 0;
                for (const auto& p : unfiltered)
                    if (avoids(p, t)) ++filtered;
                auto pruned = count(ClassSpec{f, {t}, n});
                REQUIRE(pruned.has_value());
                CHECK(*pruned == filtered);
            }
        }
    };
    check_family(Family::I, 8);
    check_family(Family::AI, 8);
    check_family(Family::RAI, 8);
    check_family(Family::S, 7);
    check_family(Family::A, 7);
    check_family(Family::RA, 7);
}

TEST_CASE("generator agrees with the next_permutation oracle on mixed classes") {
    const std::vector<const char*> pattern_sets = {"", "132", "3412", "3421,4312", "2431,4132"};
    for (Family f : {Family::AI, Family::RAI, Family::I})
        for (const char* csv : pattern_sets)
            for (int n = 0; n <= 7; ++n) {
                const auto s = spec_of(f, csv, n);
                std::vector<Permutation> want;
                {
                    std::vector<Permutation> forb;
                    for (const auto& t : s.forbidden) forb.push_back(t.perm());
                    want = oracle::class_members(f, forb, n);
                }
                CHECK(enum_ok(s) == want);
            }
}

TEST_CASE("streams and counts do not depend on the worker count") {
    const auto s = spec_of(Family::RAI, "4321", 12);
    GenOptions one;
    const auto base = enum_ok(s, one);
    for (int w : {2, 3, 4}) {
        GenOptions opt;
        opt.workers = w;
        CHECK(enum_ok(s, opt) == base);
        CHECK(count(s, opt) == static_cast<long long>(base.size()));
    }
    GenOptions deep;
    deep.workers = 2;
    deep.split_depth = 4;
    CHECK(enum_ok(s, deep) == base);
}

TEST_CASE("prune stride does not change results") {
    const auto s = spec_of(Family::AI, "1234", 10);
    const auto base = enum_ok(s);
    for (int stride : {1, 3, 100}) {
        GenOptions opt;
        opt.prune_stride = stride;
        CHECK(enum_ok(s, opt) == base);
    }
}

TEST_CASE("time limit converts to a timeout instead of hanging") {
    ClassSpec big{Family::S, {}, 13};
    GenOptions opt;
    opt.time_limit_s = 0.02;
    CHECK_FALSE(count(big, opt).has_value());
    CHECK_FALSE(enumerate(big, opt).has_value());
}
