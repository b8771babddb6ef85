#ifndef ALTINV_TABLEAU_HPP
#define ALTINV_TABLEAU_HPP

#include <compare>
#include <string>
#include <vector>

#include "altinv/perm.hpp"

namespace altinv {

// Standard Young tableau: rows strictly increasing, columns strictly
// increasing, row lengths weakly decreasing, entries exactly {1..n}.
class StandardTableau {
public:
    StandardTableau() = default;
    explicit StandardTableau(std::vector<std::vector<int>> rows);  // validates

    int size() const;  // number of entries
    int row_count() const { return static_cast<int>(rows_.size()); }
    int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    std::string str() const;  // one row per line

    friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

StandardTableau transpose(const StandardTableau& t);

// i is a descent when i + 1 sits in a strictly lower row than i.
DescentSet descent_set(const StandardTableau& t);

// Row-insertion image of an involution; insertion and recording tableaux
// coincide on involutions, so one tableau determines the map. Throws
// DomainError on non-involutions.
StandardTableau rsk(const Permutation& t);
Permutation rsk_inv(const StandardTableau& T);

// rsk_inv . transpose . rsk: the involution with complementary descent set.
Permutation descent_complement(const Permutation& t);

}  // namespace altinv

#endif
