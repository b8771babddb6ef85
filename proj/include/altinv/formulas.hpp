#ifndef ALTINV_FORMULAS_HPP
#define ALTINV_FORMULAS_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altinv/class_spec.hpp"

namespace altinv {

// Motzkin numbers, M_0 = 1, M_{n+1} = M_n + sum_{i=0}^{n-1} M_i M_{n-1-i}.
long long motzkin(int n);
// Same with M_k = 0 for k < 0, the convention used by the counting formulas.
long long motzkin_ext(int k);

// Fibonacci numbers with F_1 = F_2 = 1; extended by F_0 = 0, F_{-1} = 1.
long long fibonacci(int k);

// Dense integer polynomial, coefficient of x^i at index i.
struct Poly {
    std::vector<long long> c;

    static Poly monomials(std::initializer_list<std::pair<int, long long>> terms);
    long long at(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0;
    }
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
};

// Ratio of integer polynomials with nonzero constant term in the
// denominator; Taylor coefficients come from the linear recurrence the
// denominator induces, in exact integer arithmetic.
class RationalGF {
public:
    RationalGF(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    std::vector<long long> coefficients(int count) const;
    long long coefficient(int i) const;

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);

private:
    Poly num_;
    Poly den_;
};

struct FormulaValue {
    long long value = 0;
    bool conjectural = false;
};

// One counting statement: an evaluator over the class length, keyed by
// family, normalized forbidden set, and the connected flag. The evaluator
// answers only on the lengths the statement covers. An entry can be shared
// by several theorem ids (equalities across classes share one evaluator).
struct FormulaEntry {
    std::vector<std::string> theorem_ids;
    Family family;
    std::vector<Pattern> patterns;  // normalized key (see normalize_patterns)
    bool connected = false;
    bool conjectural = false;
    std::function<std::optional<long long>(int n)> value;
};

// For involution families a class is unchanged by closing the forbidden set
// under pattern inverse; keys are stored closed, sorted and deduplicated.
std::vector<Pattern> normalize_patterns(Family family, std::span<const Pattern> ts);

class FormulaTable {
public:
    static const FormulaTable& instance();

    // The expected cardinality when some statement covers the query;
    // absent (NO_FORMULA) otherwise.
    std::optional<FormulaValue> expected_count(Family family, std::span<const Pattern> ts,
                                               int n, bool connected = false) const;

    const std::vector<FormulaEntry>& entries() const { return entries_; }

private:
    FormulaTable();
    std::vector<FormulaEntry> entries_;
};

}  // namespace altinv

#endif
