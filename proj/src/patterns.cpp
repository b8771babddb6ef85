#include "altinv/patterns.hpp"

#include <algorithm>
#include <limits>

#include "altinv/errors.hpp"

namespace altinv {

Pattern::Pattern(Permutation p) : perm_(std::move(p)) {
    if (perm_.empty()) throw ParseError("pattern must have length >= 1");
}

Pattern Pattern::parse(std::string_view text) {
    if (text.find(' ') != std::string_view::npos)
        return Pattern(Permutation::parse(text));
    std::vector<int> v;
    for (char c : text) {
        if (c < '1' || c > '9')
            throw ParseError("bad pattern character '" + std::string(1, c) +
                             "' (compact form is digits 1-9)");
        v.push_back(c - '0');
    }
    return Pattern(Permutation(std::move(v)));
}

std::string Pattern::str() const {
    const auto& v = perm_.entries();
    if (std::all_of(v.begin(), v.end(), [](int x) { return x <= 9; })) {
        std::string out;
        for (int x : v) out += static_cast<char>('0' + x);
        return out;
    }
    return perm_.str();
}

namespace {

// Matches pattern letters to word indices left to right. `chosen[j]` is the
// word index matched to pattern letter j. The candidate value for letter j
// must fall strictly between the values already matched to the pattern
// letters ranking directly below and above letter j.
struct Matcher {
    std::span<const int> word;
    const std::vector<int>& pat;  // pattern values, 0-based letters
    int k;
    std::vector<int> chosen;

    bool dfs(int letter, int from) {
        if (letter == k) return true;
        const int need = static_cast<int>(k - letter);
        // value window for this letter from already-placed letters
        int lo = std::numeric_limits<int>::min();
        int hi = std::numeric_limits<int>::max();
        for (int j = 0; j < letter; ++j) {
            const int vj = word[static_cast<size_t>(chosen[static_cast<size_t>(j)])];
            if (pat[static_cast<size_t>(j)] < pat[static_cast<size_t>(letter)])
                lo = std::max(lo, vj);
            else
                hi = std::min(hi, vj);
        }
        const int last = static_cast<int>(word.size()) - need;
        for (int i = from; i <= last; ++i) {
            const int v = word[static_cast<size_t>(i)];
            if (v <= lo || v >= hi) continue;
            chosen[static_cast<size_t>(letter)] = i;
            if (dfs(letter + 1, i + 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool word_contains(std::span<const int> word, const Pattern& t) {
    const int k = t.size();
    if (k > static_cast<int>(word.size())) return false;
    Matcher m{word, t.perm().entries(), k, std::vector<int>(static_cast<size_t>(k))};
    return m.dfs(0, 0);
}

std::optional<std::vector<int>> find_occurrence_in_word(std::span<const int> word,
                                                        const Pattern& t) {
    const int k = t.size();
    if (k > static_cast<int>(word.size())) return std::nullopt;
    Matcher m{word, t.perm().entries(), k, std::vector<int>(static_cast<size_t>(k))};
    if (!m.dfs(0, 0)) return std::nullopt;
    return m.chosen;
}

bool contains(const Permutation& p, const Pattern& t) {
    return word_contains(p.entries(), t);
}

bool avoids(const Permutation& p, const Pattern& t) { return !contains(p, t); }

bool avoids_all(const Permutation& p, std::span<const Pattern> ts) {
    for (const auto& t : ts)
        if (contains(p, t)) return false;
    return true;
}

std::optional<std::vector<int>> find_occurrence(const Permutation& p, const Pattern& t) {
    auto idx = find_occurrence_in_word(p.entries(), t);
    if (!idx) return std::nullopt;
    for (int& i : *idx) ++i;
    return idx;
}

std::vector<Pattern> parse_pattern_list(std::string_view csv) {
    std::vector<Pattern> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view item = csv.substr(pos, comma - pos);
        if (!item.empty()) out.push_back(Pattern::parse(item));
        pos = comma + 1;
        if (comma == csv.size()) break;
    }
    return out;
}

}  // namespace altinv
