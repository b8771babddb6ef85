#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "altinv/errors.hpp"
#include "altinv/perm.hpp"
#include "oracles.hpp"

using namespace altinv;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
}

TEST_CASE("construction validates rearrangement") {
    CHECK_NOTHROW(P("2 1 3"));
    CHECK_NOTHROW(Permutation{});
    CHECK_THROWS_AS(P("2 2 3"), ParseError);
    CHECK_THROWS_AS(P("0 1"), ParseError);
    CHECK_THROWS_AS(P("1 3"), ParseError);
    CHECK_THROWS_AS(P("1 x"), ParseError);
    CHECK(P("6 2 8 4 5 1 10 3 9 7").str() == "6 2 8 4 5 1 10 3 9 7");
}

TEST_CASE("inverse") {
    CHECK(inverse(P("1 2 3")) == P("1 2 3"));
    CHECK(inverse(P("2 3 1")) == P("3 1 2"));
    // fixture from a known involution: inverse equals the input
    const auto invol = P("5 9 3 7 1 6 4 8 2");
    CHECK(inverse(invol) == invol);
    for (int i = 1; i <= invol.size(); ++i) CHECK(invol.at(invol.at(i)) == i);
}

TEST_CASE("reverse / complement / reverse_complement") {
    CHECK(reverse(P("1 2 3")) == P("3 2 1"));
    CHECK(complement(P("1 2 3")) == P("3 2 1"));
    CHECK(reverse_complement(P("2 1 4 3")) == P("2 1 4 3"));
    CHECK(is_involution(reverse_complement(P("2 1 4 3"))));
}

TEST_CASE("alternation predicates") {
    CHECK(is_alternating(P("4 6 1 5 2 7 3")));
    CHECK(is_reverse_alternating(P("5 3 7 2 6 1 4")));
    CHECK(is_alternating(P("1")));
    CHECK(is_reverse_alternating(P("1")));
    CHECK(is_alternating(Permutation{}));
    CHECK(is_reverse_alternating(Permutation{}));
    CHECK_FALSE(is_alternating(P("2 1")));
    CHECK_FALSE(is_reverse_alternating(P("1 2")));
}

TEST_CASE("descent sets") {
    CHECK(descent_set(P("4 6 1 5 2 7 3")) == DescentSet{2, 4, 6});
    CHECK(descent_set(P("1 2 3 4")) == DescentSet{});
    CHECK(descent_set(P("3 2 1")) == DescentSet{1, 2});
}

TEST_CASE("alternating iff even descent set") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            DescentSet want;
            for (int i = 2; i < n; i += 2) want.push_back(i);
            CHECK(is_alternating(p) == (descent_set(p) == want));
        }
}

TEST_CASE("ltr minima / rtl maxima") {
    const auto p = P("7 9 4 3 5 6 1 10 2 8");
    CHECK(ltr_minima(p) == std::vector<int>{7, 4, 3, 1});
    CHECK(rtl_maxima(p) == std::vector<int>{10, 8});
    CHECK(ltr_minima(P("1 2 3")) == std::vector<int>{1});
}

TEST_CASE("standardize") {
    CHECK(standardize(std::vector<int>{5, 9, 7}) == P("1 3 2"));
    CHECK(standardize(std::vector<int>{2, 1, 4, 3}) == P("2 1 4 3"));
    CHECK(standardize(std::vector<int>{10, 6, 8, 2}) == P("4 2 3 1"));
    CHECK_THROWS_AS(standardize(std::vector<int>{3, 3}), ParseError);
}

TEST_CASE("connected components") {
    const auto c = connected_components(P("3 4 2 1 5 7 8 6"));
    REQUIRE(c.parts.size() == 3);
    CHECK(c.parts[0] == P("3 4 2 1"));
    CHECK(c.parts[1] == P("1"));
    CHECK(c.parts[2] == P("2 3 1"));
    CHECK(c.offsets == std::vector<int>{0, 4, 5});

    const auto id3 = connected_components(P("1 2 3"));
    CHECK(id3.parts.size() == 3);
    const auto single = connected_components(P("2 3 1"));
    CHECK(single.parts.size() == 1);
    CHECK(is_connected(P("2 3 1")));
    CHECK_FALSE(is_connected(P("1 2")));
    CHECK_FALSE(is_connected(Permutation{}));
}

TEST_CASE("components reassemble to the original") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            const auto c = connected_components(p);
            std::vector<int> rebuilt;
            for (size_t k = 0; k < c.parts.size(); ++k)
                for (int x : c.parts[k].entries()) rebuilt.push_back(x + c.offsets[k]);
            CHECK(Permutation::unchecked(rebuilt) == p);
            for (const auto& part : c.parts) CHECK(is_connected(part));
        }
}

TEST_CASE("symmetry identities hold exhaustively") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            CHECK(inverse(inverse(p)) == p);
            CHECK(reverse_complement(reverse_complement(p)) == p);
            CHECK(reverse_complement(inverse(p)) == inverse(reverse_complement(p)));
        }
}

TEST_CASE("ltr minima of an involution form an involution") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            if (!is_involution(p)) continue;
            std::set<int> values;
            std::set<int> positions;
            int best = n + 1;
            for (int i = 1; i <= n; ++i)
                if (p.at(i) < best) {
                    best = p.at(i);
                    values.insert(p.at(i));
                    positions.insert(i);
                }
            CHECK(values == positions);
        }
}

TEST_CASE("reverse alternating involutions of even length pin 1 and n") {
    for (int n = 2; n <= 10; n += 2)
        for (const auto& p : oracle::all_permutations(n)) {
            if (!is_involution(p) || !is_reverse_alternating(p)) continue;
            CHECK(inverse(p).at(1) % 2 == 0);   // position of 1 is even
            CHECK(inverse(p).at(n) % 2 == 1);   // position of n is odd
            CHECK(p.at(1) % 2 == 0);
            CHECK(p.at(n) % 2 == 1);
        }
}
