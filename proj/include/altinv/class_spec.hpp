#ifndef ALTINV_CLASS_SPEC_HPP
#define ALTINV_CLASS_SPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "altinv/patterns.hpp"

namespace altinv {

// The six permutation families: all permutations, involutions, alternating,
// reverse alternating, alternating involutions, reverse alternating
// involutions.
enum class Family { S, I, A, RA, AI, RAI };

Family parse_family(std::string_view text);  // "s" | "i" | "a" | "ra" | "ai" | "rai"
std::string family_str(Family f);

bool family_involution(Family f);
bool family_alternating(Family f);
bool family_reverse_alternating(Family f);

// Membership test against the family predicates only (patterns excluded).
bool in_family(const Permutation& p, Family f);

struct ClassSpec {
    Family family = Family::S;
    std::vector<Pattern> forbidden;
    int n = 0;
};

}  // namespace altinv

#endif
