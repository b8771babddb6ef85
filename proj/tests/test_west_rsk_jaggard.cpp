#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "altinv/bijections.hpp"
#include "altinv/errors.hpp"
#include "altinv/generator.hpp"
#include "altinv/tableau.hpp"
#include "oracles.hpp"

using namespace altinv;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> members(Family f, const char* csv, int n) {
    auto r = enumerate(ClassSpec{f, parse_pattern_list(csv), n});
    REQUIRE(r.has_value());
    return *r;
}

// Independent recomputation of the active-pair rectangles: enumerate all
// occurrences of the four tail patterns by brute index scans, mark the
// cells each opening pair's rectangle covers, read off column heights.
std::vector<int> lambda_heights_naive(const Permutation& p, const char* tail_digits) {
    std::vector<int> tail;
    for (const char* c = tail_digits; *c; ++c) tail.push_back(*c - '0');
    const auto tail_std = standardize(tail);
    const int n = p.size();
    const int k = static_cast<int>(tail.size()) + 2;

    std::vector<std::vector<char>> covered(static_cast<size_t>(n) + 1,
                                           std::vector<char>(static_cast<size_t>(n) + 1, 0));
    std::vector<Permutation> pats;
    for (bool swap_head : {false, true})
        for (bool inv_tail : {false, true}) {
            std::vector<int> v;
            v.push_back(swap_head ? 2 : 1);
            v.push_back(swap_head ? 1 : 2);
            const auto t = inv_tail ? inverse(tail_std) : tail_std;
            for (int x : t.entries()) v.push_back(x + 2);
            pats.push_back(Permutation(std::move(v)));
        }

    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(const Permutation&, int, int)> rec = [&](const Permutation& pat, int pos,
                                                                int from) {
        if (pos == k) {
            std::vector<int> sub;
            for (int i : idx) sub.push_back(p.at(i));
            if (!oracle::order_isomorphic(sub, pat.entries())) return;
            const int c = std::max(idx[0], idx[1]);
            const int r = std::max(p.at(idx[0]), p.at(idx[1]));
            for (int x = 1; x <= c; ++x)
                for (int y = 1; y <= r; ++y) covered[static_cast<size_t>(x)][static_cast<size_t>(y)] = 1;
            return;
        }
        for (int i = from; i <= n - (k - pos) + 1; ++i) {
            idx[static_cast<size_t>(pos)] = i;
            rec(pat, pos + 1, i + 1);
        }
    };
    for (const auto& pat : pats) rec(pat, 0, 1);

    std::vector<int> heights;
    for (int c = 1; c <= n; ++c) {
        int h = 0;
        while (h < n && covered[static_cast<size_t>(c)][static_cast<size_t>(h) + 1]) ++h;
        heights.push_back(h);
    }
    while (!heights.empty() && heights.back() == 0) heights.pop_back();
    return heights;
}

}  // namespace

TEST_CASE("rank labels") {
    CHECK(rank_labels(P("5 9 7 10 1 8 3 6 2 4")) ==
          std::vector<int>{1, 2, 2, 3, 1, 3, 2, 3, 2, 3});
    CHECK(rank_labels(P("3 2 1")) == std::vector<int>{1, 1, 1});
    CHECK(rank_labels(P("1 2 3")) == std::vector<int>{1, 2, 3});
}

TEST_CASE("west_f fixtures") {
    CHECK(west_f(P("5 9 7 10 1 8 3 6 2 4"), 4) == P("5 9 7 8 1 10 3 4 2 6"));
    CHECK(west_f(P("3 2 1"), 3) == P("3 2 1"));
    CHECK(west_f(P("3 5 1 4 2"), 3) == P("3 4 1 2 5"));
    CHECK_THROWS_AS(west_f(P("1 2 3"), 3), DomainError);
    CHECK_THROWS_AS(west_f(P("1 2 3"), 2), DomainError);
    CHECK(west_f_inv(P("5 9 7 8 1 10 3 4 2 6"), 4) == P("5 9 7 10 1 8 3 6 2 4"));
    CHECK(west_f_inv(P("3 4 1 2 5"), 3) == P("3 5 1 4 2"));
}

TEST_CASE("west_f with k=3 is a bijection S_5(123) -> S_5(132) fixing rank-1 entries") {
    const auto dom = members(Family::S, "123", 5);
    const auto img = members(Family::S, "132", 5);
    std::set<Permutation> seen;
    for (const auto& p : dom) {
        const auto q = west_f(p, 3);
        CHECK(avoids(q, Pattern::parse("132")));
        seen.insert(q);
        const auto pr = rank_labels(p);
        for (int i = 0; i < 5; ++i)
            if (pr[static_cast<size_t>(i)] == 1)
                CHECK(q.entries()[static_cast<size_t>(i)] == p.entries()[static_cast<size_t>(i)]);
        CHECK(west_f_inv(q, 3) == p);
    }
    CHECK(seen.size() == dom.size());
    CHECK(seen == std::set<Permutation>(img.begin(), img.end()));
}

TEST_CASE("west_f round trips on pattern-avoiding involutions") {
    for (int k : {3, 4}) {
        const char* csv = (k == 3) ? "123" : "1234";
        for (int n = 0; n <= 9; ++n)
            for (const auto& p : members(Family::I, csv, n)) {
                const auto q = west_f(p, k);
                CHECK(is_involution(q));  // f preserves the involution property
                CHECK(west_f_inv(q, k) == p);
            }
    }
}

TEST_CASE("west_f restricts to a bijection on even alternating involutions") {
    for (int n = 0; n <= 12; n += 2) {
        const auto dom = members(Family::AI, "1234", n);
        const auto img = members(Family::AI, "1243", n);
        std::set<Permutation> seen;
        for (const auto& p : dom) {
            const auto q = west_f(p, 4);
            CHECK(is_alternating(q));
            CHECK(is_involution(q));
            seen.insert(q);
        }
        CHECK(seen.size() == dom.size());
        CHECK(seen == std::set<Permutation>(img.begin(), img.end()));
    }
}

TEST_CASE("odd case: west_f maps the sub-family with n at position 2 onto the 1243 class") {
    for (int n = 1; n <= 11; n += 2) {
        std::vector<Permutation> dom;
        for (const auto& p : members(Family::AI, "1234", n))
            if (p.at(2) == n || n == 1) dom.push_back(p);
        const auto img = members(Family::AI, "1243", n);
        std::set<Permutation> seen;
        for (const auto& p : dom) seen.insert(west_f(p, 4));
        CHECK(seen.size() == dom.size());
        CHECK(seen == std::set<Permutation>(img.begin(), img.end()));
    }
}

TEST_CASE("tableau basics") {
    CHECK_THROWS_AS(StandardTableau({{1, 4}, {2, 3}}).size(), ParseError);  // column 4 > 3
    CHECK_THROWS_AS(StandardTableau({{1}, {2, 3}}).size(), ParseError);     // widening row
    const StandardTableau t({{1, 3}, {2, 4}});
    CHECK(t.size() == 4);
    CHECK(transpose(t).rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(descent_set(t) == DescentSet{1, 3});
}

TEST_CASE("rsk fixtures") {
    const auto row = rsk(P("1 2"));
    CHECK(row.rows() == std::vector<std::vector<int>>{{1, 2}});
    CHECK(rsk_inv(transpose(row)) == P("2 1"));

    const auto t = rsk(P("2 1 4 3"));
    CHECK(descent_set(t) == DescentSet{1, 3});
    CHECK(descent_set(rsk(P("2 1 4 3"))) == descent_set(P("2 1 4 3")));
    CHECK(descent_set(rsk_inv(transpose(t))) == DescentSet{2});

    const auto cell = rsk(P("1"));
    CHECK(cell.rows() == std::vector<std::vector<int>>{{1}});
    CHECK(transpose(cell) == cell);
    CHECK_THROWS_AS(rsk(P("2 3 1")), DomainError);
}

TEST_CASE("rsk preserves descent sets and inverts, exhaustively") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            if (!is_involution(p)) continue;
            const auto t = rsk(p);
            CHECK(descent_set(t) == descent_set(p));
            CHECK(rsk_inv(t) == p);
            CHECK((t.column_count() < 4) == avoids(p, Pattern::parse("1234")));
            CHECK((t.row_count() < 4) == avoids(p, Pattern::parse("4321")));
        }
}

TEST_CASE("descent_complement flips the descent set and is an involution") {
    CHECK(descent_complement(P("1 2 3")) == P("3 2 1"));
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : oracle::all_permutations(n)) {
            if (!is_involution(p)) continue;
            const auto q = descent_complement(p);
            CHECK(is_involution(q));
            const auto dp = descent_set(p);
            const auto dq = descent_set(q);
            std::set<int> have(dq.begin(), dq.end());
            for (int i = 1; i < n; ++i) {
                const bool inp = std::binary_search(dp.begin(), dp.end(), i);
                CHECK(have.count(i) == static_cast<size_t>(!inp));
            }
            CHECK(descent_complement(q) == p);
        }
}

TEST_CASE("descent_complement maps the 1234 alternating class onto the 4321 reverse class") {
    for (int n = 0; n <= 10; ++n) {
        const auto dom = members(Family::AI, "1234", n);
        const auto img = members(Family::RAI, "4321", n);
        std::set<Permutation> seen;
        for (const auto& p : dom) {
            const auto q = descent_complement(p);
            CHECK(is_reverse_alternating(q));
            CHECK(avoids(q, Pattern::parse("4321")));
            seen.insert(q);
        }
        CHECK(seen.size() == dom.size());
        CHECK(seen == std::set<Permutation>(img.begin(), img.end()));
    }
}

TEST_CASE("active dots of the nine-point example") {
    const auto tail = parse_tail("435");
    CHECK(active_dots(P("5 9 3 7 1 6 4 8 2"), tail) == std::vector<int>{1, 3, 5});
    CHECK(active_dots(P("3 2 1"), tail).empty());
}

TEST_CASE("lambda of the nine-point example, against the rectangle-union oracle") {
    const auto p = P("5 9 3 7 1 6 4 8 2");
    const auto d = young_lambda(p, parse_tail("435"));
    CHECK(d.column_heights == lambda_heights_naive(p, "435"));
    CHECK(d.column_heights == std::vector<int>{5, 5, 5, 3, 3});
    // self-conjugate shape
    for (size_t c = 0; c < d.column_heights.size(); ++c) {
        int conj = 0;
        for (int h : d.column_heights)
            if (h >= static_cast<int>(c) + 1) ++conj;
        CHECK(conj == d.column_heights[c]);
    }
    // dots inside the shape are exactly the active ones here
    CHECK(d.dots == std::vector<std::pair<int, int>>{{5, 1}, {3, 3}, {1, 5}});
}

TEST_CASE("lambda matches the rectangle-union oracle across a small class") {
    for (const auto& p : members(Family::AI, "", 7))
        CHECK(young_lambda(p, parse_tail("43")).column_heights == lambda_heights_naive(p, "43"));
}

TEST_CASE("jaggard swap fixtures") {
    CHECK(jaggard_swap(P("5 9 3 7 1 6 4 8 2"), parse_tail("435")) == P("1 9 5 7 3 6 4 8 2"));
    // empty active set: unchanged
    CHECK(jaggard_swap(P("1 3 2"), parse_tail("435")) == P("1 3 2"));
    CHECK_THROWS_AS(jaggard_swap(P("2 1"), parse_tail("43")), DomainError);  // not alternating
}

TEST_CASE("jaggard swap realizes the 1243 <-> 2143 equivalence") {
    const auto tail = parse_tail("43");
    for (int n = 0; n <= 9; ++n) {
        const auto dom = members(Family::AI, "1243", n);
        const auto img = members(Family::AI, "2143", n);
        std::set<Permutation> seen;
        for (const auto& p : dom) {
            const auto q = jaggard_swap(p, tail);
            CHECK(is_involution(q));
            CHECK(is_alternating(q));
            CHECK(avoids(q, Pattern::parse("2143")));
            seen.insert(q);
        }
        CHECK(seen.size() == dom.size());          // injective
        CHECK(seen.size() == img.size());          // equal cardinalities
        for (const auto& q : seen) CHECK(std::binary_search(img.begin(), img.end(), q));
    }
}

TEST_CASE("jaggard swap with the length-3 tail across the 12435 class") {
    const auto tail = parse_tail("435");
    for (int n = 0; n <= 8; ++n) {
        const auto dom = members(Family::AI, "12435", n);
        const auto img = members(Family::AI, "21435", n);
        std::set<Permutation> seen;
        for (const auto& p : dom) seen.insert(jaggard_swap(p, tail));
        CHECK(seen.size() == dom.size());
        CHECK(seen.size() == img.size());
    }
}
