#include "altinv/perm.hpp"

#include <algorithm>
#include <sstream>

#include "altinv/errors.hpp"

namespace altinv {

namespace {

void check_is_rearrangement(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int x : v) {
        if (x < 1 || x > n)
            throw ParseError("permutation entry " + std::to_string(x) +
                             " out of range 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(x)])
            throw ParseError("duplicate permutation entry " + std::to_string(x));
        seen[static_cast<size_t>(x)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) {
    check_is_rearrangement(entries);
    v_ = std::move(entries);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return unchecked(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> v;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            v.push_back(x);
        } catch (const std::exception&) {
            throw ParseError("bad permutation token '" + tok + "'");
        }
    }
    return Permutation(std::move(v));
}

Permutation Permutation::unchecked(std::vector<int> entries) {
    Permutation p;
    p.v_ = std::move(entries);
    return p;
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v_[i]);
    }
    return out;
}

Permutation inverse(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) q[static_cast<size_t>(p.at(i)) - 1] = i;
    return Permutation::unchecked(std::move(q));
}

Permutation reverse(const Permutation& p) {
    std::vector<int> q(p.entries().rbegin(), p.entries().rend());
    return Permutation::unchecked(std::move(q));
}

Permutation complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> q;
    q.reserve(static_cast<size_t>(n));
    for (int x : p.entries()) q.push_back(n + 1 - x);
    return Permutation::unchecked(std::move(q));
}

Permutation reverse_complement(const Permutation& p) {
    return complement(reverse(p));
}

bool is_involution(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        if (p.at(p.at(i)) != i) return false;
    return true;
}

bool is_alternating(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i < n; ++i) {
        const bool ascent = p.at(i) < p.at(i + 1);
        if (ascent != (i % 2 == 1)) return false;
    }
    return true;
}

bool is_reverse_alternating(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i < n; ++i) {
        const bool descent = p.at(i) > p.at(i + 1);
        if (descent != (i % 2 == 1)) return false;
    }
    return true;
}

DescentSet descent_set(const Permutation& p) {
    DescentSet d;
    for (int i = 1; i < p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) d.push_back(i);
    return d;
}

std::vector<int> ltr_minima(const Permutation& p) {
    std::vector<int> out;
    int best = p.size() + 1;
    for (int x : p.entries())
        if (x < best) {
            out.push_back(x);
            best = x;
        }
    return out;
}

std::vector<int> rtl_maxima(const Permutation& p) {
    std::vector<int> out;
    int best = 0;
    for (auto it = p.entries().rbegin(); it != p.entries().rend(); ++it)
        if (*it > best) {
            out.push_back(*it);
            best = *it;
        }
    std::reverse(out.begin(), out.end());
    return out;
}

Permutation standardize(std::span<const int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
    std::vector<int> out(static_cast<size_t>(n));
    for (int rank = 0; rank < n; ++rank) {
        if (rank > 0 && word[static_cast<size_t>(order[static_cast<size_t>(rank)])] ==
                            word[static_cast<size_t>(order[static_cast<size_t>(rank - 1)])])
            throw ParseError("standardize: duplicate entry " +
                             std::to_string(word[static_cast<size_t>(order[static_cast<size_t>(rank)])]));
        out[static_cast<size_t>(order[static_cast<size_t>(rank)])] = rank + 1;
    }
    return Permutation::unchecked(std::move(out));
}

Components connected_components(const Permutation& p) {
    Components out;
    const int n = p.size();
    int start = 1;
    int prefix_max = 0;
    for (int i = 1; i <= n; ++i) {
        prefix_max = std::max(prefix_max, p.at(i));
        if (prefix_max == i) {
            std::vector<int> part;
            part.reserve(static_cast<size_t>(i - start + 1));
            for (int j = start; j <= i; ++j) part.push_back(p.at(j) - (start - 1));
            out.offsets.push_back(start - 1);
            out.parts.push_back(Permutation::unchecked(std::move(part)));
            start = i + 1;
        }
    }
    return out;
}

bool is_connected(const Permutation& p) {
    const int n = p.size();
    int prefix_max = 0;
    for (int i = 1; i < n; ++i) {
        prefix_max = std::max(prefix_max, p.at(i));
        if (prefix_max == i) return false;
    }
    return n >= 1;
}

}  // namespace altinv
