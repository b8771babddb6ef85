#include "altinv/bijections.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "altinv/errors.hpp"

namespace altinv {

namespace {

const Pattern& pat4321() {
    static const Pattern p = Pattern::parse("4321");
    return p;
}
const Pattern& pat3412() {
    static const Pattern p = Pattern::parse("3412");
    return p;
}

MotzkinWord steps_from_involution(const Permutation& t) {
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(t.size()));
    for (int i = 1; i <= t.size(); ++i) {
        const int v = t.at(i);
        steps.push_back(v > i ? Step::U : (v == i ? Step::H : Step::D));
    }
    return MotzkinWord(std::move(steps));
}

}  // namespace

MotzkinWord phi(const Permutation& t) {
    if (!is_involution(t)) throw DomainError("phi: input must be an involution");
    if (contains(t, pat4321())) throw DomainError("phi: input must avoid 4321");
    return steps_from_involution(t);
}

Permutation phi_inv(const MotzkinWord& m) {
    const int n = m.size();
    std::vector<int> ups, downs;
    for (int i = 1; i <= n; ++i) {
        if (m.at(i) == Step::U) ups.push_back(i);
        if (m.at(i) == Step::D) downs.push_back(i);
    }
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = i;
    for (size_t k = 0; k < ups.size(); ++k) {
        v[static_cast<size_t>(ups[k]) - 1] = downs[k];
        v[static_cast<size_t>(downs[k]) - 1] = ups[k];
    }
    return Permutation::unchecked(std::move(v));
}

MotzkinWord psi(const Permutation& t) {
    if (!is_involution(t)) throw DomainError("psi: input must be an involution");
    if (contains(t, pat3412())) throw DomainError("psi: input must avoid 3412");
    return steps_from_involution(t);
}

Permutation psi_inv(const MotzkinWord& m) {
    const int n = m.size();
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = i;
    std::vector<int> open;
    for (int i = 1; i <= n; ++i) {
        if (m.at(i) == Step::U) open.push_back(i);
        if (m.at(i) == Step::D) {
            const int a = open.back();  // most recent open up step
            open.pop_back();
            v[static_cast<size_t>(a) - 1] = i;
            v[static_cast<size_t>(i) - 1] = a;
        }
    }
    return Permutation::unchecked(std::move(v));
}

MotzkinWord delta(const DiodWord& m) {
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(m.size()));
    for (Diod d : m.diods()) {
        switch (d) {
            case Diod::UH: steps.push_back(Step::U); break;
            case Diod::HD: steps.push_back(Step::D); break;
            case Diod::UD: steps.push_back(Step::H); break;
        }
    }
    return MotzkinWord(std::move(steps));
}

DiodWord delta_inv(const MotzkinWord& s) {
    std::vector<Diod> diods;
    diods.reserve(static_cast<size_t>(s.size()));
    for (Step st : s.steps()) {
        switch (st) {
            case Step::U: diods.push_back(Diod::UH); break;
            case Step::D: diods.push_back(Diod::HD); break;
            case Step::H: diods.push_back(Diod::UD); break;
        }
    }
    return DiodWord(std::move(diods));
}

namespace {

MotzkinWord hat_common(const Permutation& t, const Pattern& forbidden, const char* name) {
    if (t.size() % 2 != 0)
        throw DomainError(std::string(name) + ": input length must be even");
    if (!is_involution(t)) throw DomainError(std::string(name) + ": input must be an involution");
    if (!is_reverse_alternating(t))
        throw DomainError(std::string(name) + ": input must be reverse alternating");
    if (contains(t, forbidden))
        throw DomainError(std::string(name) + ": input must avoid " + forbidden.str());
    try {
        return delta(DiodWord::from_motzkin(steps_from_involution(t)));
    } catch (const DomainError& e) {
        throw InvariantError(std::string(name) + ": diod decomposition failed on-domain: " +
                             e.what());
    }
}

}  // namespace

MotzkinWord hat_phi(const Permutation& t) { return hat_common(t, pat4321(), "hat_phi"); }

MotzkinWord hat_psi(const Permutation& t) { return hat_common(t, pat3412(), "hat_psi"); }

std::vector<int> rank_labels(const Permutation& p) {
    const int n = p.size();
    std::vector<int> rank(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int best = 0;
        for (int j = 0; j < i; ++j)
            if (p.entries()[static_cast<size_t>(j)] < p.entries()[static_cast<size_t>(i)])
                best = std::max(best, rank[static_cast<size_t>(j)]);
        rank[static_cast<size_t>(i)] = best + 1;
    }
    return rank;
}

namespace {

Pattern increasing_then(int k, bool swap_last_two) {
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = i + 1;
    if (swap_last_two) std::swap(v[static_cast<size_t>(k) - 2], v[static_cast<size_t>(k) - 1]);
    return Pattern(Permutation(std::move(v)));
}

}  // namespace

Permutation west_f(const Permutation& p, int k) {
    if (k < 3) throw DomainError("west_f: k must be >= 3");
    const int n = p.size();
    const auto ranks = rank_labels(p);
    for (int r : ranks)
        if (r >= k) throw DomainError("west_f: input must avoid " + increasing_then(k, false).str());

    std::vector<int> unused;  // values of rank k-1, ascending
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
        if (ranks[static_cast<size_t>(i)] == k - 1) {
            unused.push_back(p.entries()[static_cast<size_t>(i)]);
            positions.push_back(i);
        }
    std::sort(unused.begin(), unused.end());

    std::vector<int> out = p.entries();
    for (int j : positions) {
        int bound = std::numeric_limits<int>::min();
        for (int j2 = j - 1; j2 >= 0; --j2)
            if (ranks[static_cast<size_t>(j2)] == k - 2) {
                bound = p.entries()[static_cast<size_t>(j2)];
                break;
            }
        auto it = std::upper_bound(unused.begin(), unused.end(), bound);
        if (it == unused.end())
            throw InvariantError("west_f: no unused maximal-rank value above the left bound");
        out[static_cast<size_t>(j)] = *it;
        unused.erase(it);
    }
    return Permutation::unchecked(std::move(out));
}

Permutation west_f_inv(const Permutation& q, int k) {
    if (k < 3) throw DomainError("west_f_inv: k must be >= 3");
    if (contains(q, increasing_then(k, true)))
        throw DomainError("west_f_inv: input must avoid " + increasing_then(k, true).str());

    const int n = q.size();
    const auto ranks = rank_labels(q);
    std::vector<int> values;
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
        if (ranks[static_cast<size_t>(i)] >= k - 1) {
            values.push_back(q.entries()[static_cast<size_t>(i)]);
            positions.push_back(i);
        }
    // In the preimage the maximal-rank values sit in decreasing order.
    std::sort(values.begin(), values.end(), std::greater<int>());
    std::vector<int> out = q.entries();
    for (size_t idx = 0; idx < positions.size(); ++idx)
        out[static_cast<size_t>(positions[idx])] = values[idx];

    Permutation result = Permutation::unchecked(std::move(out));
    for (int r : rank_labels(result))
        if (r >= k)
            throw InvariantError("west_f_inv: reconstruction exceeds the rank bound");
    return result;
}

// ---- active dots, lambda, swap -------------------------------------------

Pattern parse_tail(std::string_view text) {
    std::vector<int> word;
    if (text.find(' ') != std::string_view::npos) {
        std::istringstream in{std::string(text)};
        int x = 0;
        while (in >> x) word.push_back(x);
        if (!in.eof()) throw ParseError("bad tail '" + std::string(text) + "'");
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad tail character '" + std::string(1, c) + "'");
            word.push_back(c - '0');
        }
    }
    if (word.empty()) throw ParseError("tail must be nonempty");
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 3)
            throw ParseError("tail must be a permutation of {3,...,m}, got '" +
                             std::string(text) + "'");
    return Pattern(standardize(word));
}

TailPatterns tail_patterns(const Pattern& tau_tail) {
    const Permutation& tail = tau_tail.perm();
    const int k = tail.size();
    auto build = [&](bool swap_head, bool invert_tail) {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(k) + 2);
        v.push_back(swap_head ? 2 : 1);
        v.push_back(swap_head ? 1 : 2);
        const Permutation t = invert_tail ? inverse(tail) : tail;
        for (int x : t.entries()) v.push_back(x + 2);
        return Pattern(Permutation(std::move(v)));
    };
    return TailPatterns{build(false, false), build(false, true), build(true, false),
                        build(true, true)};
}

namespace {

struct ActivePair {
    int pos1, pos2;  // positions, pos1 < pos2
    int val1, val2;
};

// Pairs of dots forming the opening "12" of one of the two 12-headed
// patterns or the opening "21" of one of the two 21-headed patterns.
std::vector<ActivePair> active_pairs(const Permutation& p, const Pattern& tau_tail) {
    const int n = p.size();
    const Pattern tail_std(tau_tail.perm());
    const Pattern tail_std_inv(inverse(tau_tail.perm()));
    std::vector<ActivePair> out;
    std::vector<int> word;
    for (int i1 = 1; i1 <= n; ++i1) {
        for (int i2 = i1 + 1; i2 <= n; ++i2) {
            const int v1 = p.at(i1), v2 = p.at(i2);
            const int cap = std::max(v1, v2);  // tail letters outrank both head letters
            word.clear();
            for (int j = i2 + 1; j <= n; ++j)
                if (p.at(j) > cap) word.push_back(p.at(j));
            if (static_cast<int>(word.size()) < tail_std.size()) continue;
            if (word_contains(word, tail_std) || word_contains(word, tail_std_inv))
                out.push_back(ActivePair{i1, i2, v1, v2});
        }
    }
    return out;
}

std::vector<int> heights_from_pairs(int n, const std::vector<ActivePair>& pairs) {
    std::vector<int> heights(static_cast<size_t>(n), 0);
    for (const auto& pr : pairs) {
        const int cols = pr.pos2;               // rectangle spans columns 1..pos2
        const int rows = std::max(pr.val1, pr.val2);  // and rows 1..max value
        for (int c = 1; c <= cols; ++c)
            heights[static_cast<size_t>(c) - 1] = std::max(heights[static_cast<size_t>(c) - 1], rows);
    }
    while (!heights.empty() && heights.back() == 0) heights.pop_back();
    return heights;
}

int height_at(const std::vector<int>& heights, int col) {
    return col >= 1 && col <= static_cast<int>(heights.size())
               ? heights[static_cast<size_t>(col) - 1]
               : 0;
}

// All symmetric placements on the shape occupying exactly the rows and
// columns in `support`, avoiding 21 in the rook sense (a pair of dots in
// decreasing position whose witness cell lies inside the shape). Search
// stops once `limit` placements were found.
void search_placements(const std::vector<int>& heights, const std::vector<int>& support,
                       size_t limit, std::vector<std::vector<int>>& found) {
    const size_t m = support.size();
    std::vector<int> assign(m, 0);  // assign[idx] = row for column support[idx]

    auto col_index = [&](int col) {
        return static_cast<size_t>(std::lower_bound(support.begin(), support.end(), col) -
                                   support.begin());
    };

    auto rook21_ok = [&](int c_new, int r_new) {
        for (size_t j = 0; j < m; ++j) {
            const int r = assign[j];
            if (r == 0) continue;
            const int c = support[j];
            const int lo_c = std::min(c, c_new), hi_c = std::max(c, c_new);
            const int lo_r = (c < c_new) ? r_new : r;
            const int hi_r = (c < c_new) ? r : r_new;
            (void)lo_c;
            if (hi_r > lo_r && height_at(heights, hi_c) >= hi_r) return false;
        }
        return true;
    };

    std::vector<char> row_used(m, 0);

    std::function<void(size_t)> go = [&](size_t idx) {
        if (found.size() >= limit) return;
        while (idx < m && assign[idx] != 0) ++idx;
        if (idx == m) {
            found.push_back(assign);
            return;
        }
        const int c = support[idx];
        for (size_t ri = 0; ri < m; ++ri) {
            if (row_used[ri]) continue;
            const int r = support[ri];
            if (r > height_at(heights, c)) continue;
            if (r != c && c > height_at(heights, r)) continue;  // mirrored dot
            if (!rook21_ok(c, r)) continue;
            if (r != c) {
                // place the mirror first so the pairwise test sees it
                assign[idx] = r;
                row_used[ri] = 1;
                const size_t mi = col_index(r);
                if (!rook21_ok(r, c)) {
                    assign[idx] = 0;
                    row_used[ri] = 0;
                    continue;
                }
                assign[mi] = c;
                row_used[idx] = 1;
                go(idx + 1);
                assign[mi] = 0;
                row_used[idx] = 0;
                assign[idx] = 0;
                row_used[ri] = 0;
            } else {
                assign[idx] = r;
                row_used[ri] = 1;
                go(idx + 1);
                assign[idx] = 0;
                row_used[ri] = 0;
            }
            if (found.size() >= limit) return;
        }
    };
    go(0);
}

}  // namespace

std::vector<int> active_dots(const Permutation& p, const Pattern& tau_tail) {
    std::vector<int> out;
    for (const auto& pr : active_pairs(p, tau_tail)) {
        out.push_back(pr.pos1);
        out.push_back(pr.pos2);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RookDiagram young_lambda(const Permutation& p, const Pattern& tau_tail) {
    RookDiagram d;
    d.column_heights = heights_from_pairs(p.size(), active_pairs(p, tau_tail));
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) <= height_at(d.column_heights, i)) d.dots.emplace_back(p.at(i), i);
    return d;
}

Permutation jaggard_swap(const Permutation& p, const Pattern& tau_tail) {
    const auto pats = tail_patterns(tau_tail);
    if (!is_involution(p)) throw DomainError("jaggard_swap: input must be an involution");
    if (!is_alternating(p)) throw DomainError("jaggard_swap: input must be alternating");
    if (contains(p, pats.p12tau) || contains(p, pats.p12tau_inv)) {
        std::string what = "jaggard_swap: input must avoid " + pats.p12tau.str();
        if (pats.p12tau_inv != pats.p12tau) what += " and " + pats.p12tau_inv.str();
        throw DomainError(what);
    }

    const auto pairs = active_pairs(p, tau_tail);
    const auto heights = heights_from_pairs(p.size(), pairs);

    std::vector<int> support;  // columns of dots inside the shape
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) <= height_at(heights, i)) support.push_back(i);

    // Symmetry of the diagram puts the mirrored dot of every inside dot
    // inside as well, so occupied rows coincide with occupied columns.
    for (int c : support)
        if (!std::binary_search(support.begin(), support.end(), p.at(c)))
            throw InvariantError("jaggard_swap: occupied rows differ from occupied columns");

    std::vector<std::vector<int>> found;
    search_placements(heights, support, 2, found);
    if (found.size() != 1)
        throw InvariantError("jaggard_swap: expected exactly one 21-avoiding placement, found " +
                             std::to_string(found.size()));

    std::vector<int> out = p.entries();
    for (size_t idx = 0; idx < support.size(); ++idx)
        out[static_cast<size_t>(support[idx]) - 1] = found[0][idx];
    Permutation result(std::move(out));

    if (!is_involution(result) || !is_alternating(result) ||
        contains(result, pats.p21tau) || contains(result, pats.p21tau_inv))
        throw InvariantError("jaggard_swap: image left the target class");
    return result;
}

}  // namespace altinv
