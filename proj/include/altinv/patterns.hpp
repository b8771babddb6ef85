#ifndef ALTINV_PATTERNS_HPP
#define ALTINV_PATTERNS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altinv/perm.hpp"

namespace altinv {

// A classical pattern: a permutation of length >= 1 looked for as an
// order-isomorphic subsequence.
class Pattern {
public:
    explicit Pattern(Permutation p);

    // Compact digit form "4321" when all values are <= 9, otherwise
    // space-separated ("10 1 2 3 ...").
    static Pattern parse(std::string_view text);

    const Permutation& perm() const { return perm_; }
    int size() const { return perm_.size(); }

    std::string str() const;

    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    Permutation perm_;
};

// Containment of t in any word with pairwise-distinct letters. DFS over
// index choices with value-window pruning; indices returned are 0-based
// into `word` and leftmost-lexicographic.
bool word_contains(std::span<const int> word, const Pattern& t);
std::optional<std::vector<int>> find_occurrence_in_word(std::span<const int> word,
                                                        const Pattern& t);

bool contains(const Permutation& p, const Pattern& t);
bool avoids(const Permutation& p, const Pattern& t);
bool avoids_all(const Permutation& p, std::span<const Pattern> ts);

// Leftmost-lexicographic witness, 1-based positions in p; empty optional
// iff p avoids t.
std::optional<std::vector<int>> find_occurrence(const Permutation& p, const Pattern& t);

std::vector<Pattern> parse_pattern_list(std::string_view csv);

}  // namespace altinv

#endif
