#ifndef ALTINV_PERM_HPP
#define ALTINV_PERM_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace altinv {

// A permutation of {1,...,n} in one-line notation. Symbols are 1-based
// everywhere; the empty permutation (n = 0) is legal.
class Permutation {
public:
    Permutation() = default;

    // Validates that `entries` is a rearrangement of {1,...,n}; throws
    // ParseError otherwise.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    // Parses the space-separated text form, e.g. "6 2 8 4 5 1 10 3 9 7".
    static Permutation parse(std::string_view text);

    // Skips validation; caller guarantees the invariant. Used on hot paths
    // where entries were built to be a permutation by construction.
    static Permutation unchecked(std::vector<int> entries);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }

    // 1-based access: at(i) = pi_i.
    int at(int pos) const { return v_[static_cast<size_t>(pos) - 1]; }

    const std::vector<int>& entries() const { return v_; }

    std::string str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> v_;
};

// Positions i in [1, n-1] with pi_i > pi_{i+1}, strictly increasing.
using DescentSet = std::vector<int>;

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

bool is_involution(const Permutation& p);

// Alternating: pi_i < pi_{i+1} exactly at odd i. Reverse alternating:
// pi_i > pi_{i+1} exactly at odd i. Lengths 0 and 1 qualify as both.
bool is_alternating(const Permutation& p);
bool is_reverse_alternating(const Permutation& p);

DescentSet descent_set(const Permutation& p);

// Values of left-to-right minima / right-to-left maxima, in position order.
std::vector<int> ltr_minima(const Permutation& p);
std::vector<int> rtl_maxima(const Permutation& p);

// The unique permutation order-isomorphic to `word` (entries pairwise
// distinct; throws ParseError on duplicates).
Permutation standardize(std::span<const int> word);

// Finest decomposition pi = w_1 w_2 ... w_k where each w_i occupies a
// contiguous block of positions and the matching stacked value range.
struct Components {
    std::vector<Permutation> parts;  // standardized components
    std::vector<int> offsets;        // value offset of each part
};

Components connected_components(const Permutation& p);

// True when the only component boundary is at n (single block).
bool is_connected(const Permutation& p);

}  // namespace altinv

#endif
