#ifndef ALTINV_BIJECTIONS_HPP
#define ALTINV_BIJECTIONS_HPP

#include <utility>
#include <vector>

#include "altinv/motzkin.hpp"
#include "altinv/patterns.hpp"
#include "altinv/perm.hpp"

namespace altinv {

// ---- involutions <-> Motzkin paths -------------------------------------

// U at excedances, H at fixed points, D at deficiencies. Defined on
// involutions avoiding 4321; throws DomainError off-domain.
MotzkinWord phi(const Permutation& t);

// Pairs the i-th up step with the i-th down step (both position lists read
// in increasing order) into 2-cycles; lands in the 4321-avoiding involutions.
Permutation phi_inv(const MotzkinWord& m);

// Same step assignment on the 3412-avoiding involutions.
MotzkinWord psi(const Permutation& t);

// Pairs each down step with the most recent open up step (nesting match);
// lands in the 3412-avoiding involutions.
Permutation psi_inv(const MotzkinWord& m);

// UH -> U, HD -> D, UD -> H, halving the length; delta_inv expands back.
MotzkinWord delta(const DiodWord& m);
DiodWord delta_inv(const MotzkinWord& s);

// delta after the diod split of phi (resp. psi), defined on the even-length
// reverse alternating involutions avoiding 4321 (resp. 3412); a bijection
// onto the Motzkin words of half the length.
MotzkinWord hat_phi(const Permutation& t);
MotzkinWord hat_psi(const Permutation& t);

// ---- the rank map -------------------------------------------------------

// rank(pi_i) = longest increasing subsequence ending at pi_i.
std::vector<int> rank_labels(const Permutation& p);

// Rewrites the maximal-rank entries: the image avoids 12..k(k-1) when the
// input avoids 12..(k-1)k, fixing every entry of smaller rank in place.
Permutation west_f(const Permutation& p, int k);
Permutation west_f_inv(const Permutation& q, int k);

// ---- the active-dot swap -------------------------------------------------

// A tail is a permutation of {3,...,m} written in one-line notation
// ("435"). parse_tail validates the symbol set and hands back the
// standardized form, which is what every function below expects; the tail
// extends to the four length-m patterns 12tau, 12tau^{-1}, 21tau,
// 21tau^{-1}.
Pattern parse_tail(std::string_view text);

struct TailPatterns {
    Pattern p12tau, p12tau_inv, p21tau, p21tau_inv;
};
TailPatterns tail_patterns(const Pattern& tau_tail);

// Dots (position i, value pi_i) serving as the first two letters of an
// occurrence of one of the four tail patterns. Returned as sorted positions.
std::vector<int> active_dots(const Permutation& p, const Pattern& tau_tail);

// Young diagram anchored at (1,1): the union over active pairs of the
// smallest rectangles containing both dots. Self-conjugate on involutions.
struct RookDiagram {
    std::vector<int> column_heights;            // weakly decreasing, trailing zeros trimmed
    std::vector<std::pair<int, int>> dots;      // (row, column) of p's dots inside the shape
};
RookDiagram young_lambda(const Permutation& p, const Pattern& tau_tail);

// Replaces the rook placement inside the diagram by the unique symmetric
// 21-avoiding placement occupying the same rows and columns; dots outside
// the diagram stay put. Domain: alternating involutions avoiding 12tau and
// 12tau^{-1}; the image avoids 21tau and 21tau^{-1}. Throws InvariantError
// when the uniqueness search finds zero or several candidates.
Permutation jaggard_swap(const Permutation& p, const Pattern& tau_tail);

}  // namespace altinv

#endif
