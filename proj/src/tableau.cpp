#include "altinv/tableau.hpp"

#include <algorithm>

#include "altinv/errors.hpp"

namespace altinv {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) throw ParseError("tableau has an empty row");
        if (r > 0 && row.size() > rows[r - 1].size())
            throw ParseError("tableau row lengths must weakly decrease");
        for (size_t c = 0; c < row.size(); ++c) {
            const int x = row[c];
            if (x < 1 || x > n || seen[static_cast<size_t>(x)])
                throw ParseError("tableau entries must be exactly 1..n");
            seen[static_cast<size_t>(x)] = 1;
            if (c > 0 && row[c - 1] >= x)
                throw ParseError("tableau rows must strictly increase");
            if (r > 0 && rows[r - 1][c] >= x)
                throw ParseError("tableau columns must strictly increase");
        }
    }
    rows_ = std::move(rows);
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

std::string StandardTableau::str() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += '\n';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += ' ';
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

StandardTableau transpose(const StandardTableau& t) {
    const auto& rows = t.rows();
    if (rows.empty()) return t;
    std::vector<std::vector<int>> cols(rows.front().size());
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return StandardTableau(std::move(cols));
}

DescentSet descent_set(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row_of(static_cast<size_t>(n) + 1, 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int x : t.rows()[static_cast<size_t>(r)]) row_of[static_cast<size_t>(x)] = r;
    DescentSet d;
    for (int i = 1; i < n; ++i)
        if (row_of[static_cast<size_t>(i) + 1] > row_of[static_cast<size_t>(i)]) d.push_back(i);
    return d;
}

StandardTableau rsk(const Permutation& t) {
    if (!is_involution(t)) throw DomainError("rsk: input must be an involution");
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= t.size(); ++i) {
        int x = t.at(i);
        for (size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                break;
            }
            std::swap(*it, x);  // bump
        }
    }
    return StandardTableau(std::move(rows));
}

Permutation rsk_inv(const StandardTableau& T) {
    const int n = T.size();
    // Cell of m in the recording tableau = cell created at step m; with the
    // recording tableau equal to T itself, reverse the bumping from there.
    std::vector<std::pair<int, int>> created_at(static_cast<size_t>(n) + 1);
    for (int r = 0; r < T.row_count(); ++r) {
        const auto& row = T.rows()[static_cast<size_t>(r)];
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            created_at[static_cast<size_t>(row[static_cast<size_t>(c)])] = {r, c};
    }

    std::vector<std::vector<int>> rows = T.rows();
    std::vector<int> out(static_cast<size_t>(n));
    for (int m = n; m >= 1; --m) {
        auto [r, c] = created_at[static_cast<size_t>(m)];
        auto& src = rows[static_cast<size_t>(r)];
        if (c != static_cast<int>(src.size()) - 1)
            throw InvariantError("rsk_inv: creation cell is not a corner");
        int x = src.back();
        src.pop_back();
        if (src.empty()) rows.pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = rows[static_cast<size_t>(rr)];
            // rightmost entry smaller than x takes its place
            auto it = std::lower_bound(row.begin(), row.end(), x);
            if (it == row.begin()) throw InvariantError("rsk_inv: reverse bump found no smaller entry");
            std::swap(*(it - 1), x);
        }
        out[static_cast<size_t>(m) - 1] = x;
    }
    return Permutation(std::move(out));
}

Permutation descent_complement(const Permutation& t) {
    return rsk_inv(transpose(rsk(t)));
}

}  // namespace altinv
