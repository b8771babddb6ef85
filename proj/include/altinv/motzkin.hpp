#ifndef ALTINV_MOTZKIN_HPP
#define ALTINV_MOTZKIN_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace altinv {

enum class Step : char { U = 'U', H = 'H', D = 'D' };

// Word over {U, H, D} with as many U as D and no prefix holding more D
// than U: a lattice path from (0,0) to (n,0) staying weakly above the axis.
class MotzkinWord {
public:
    MotzkinWord() = default;

    // Validates the ballot conditions; throws ParseError otherwise.
    explicit MotzkinWord(std::vector<Step> steps);

    // Compact text form, e.g. "UHUHHDUDHD".
    static MotzkinWord parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size()); }
    Step at(int i) const { return steps_[static_cast<size_t>(i) - 1]; }  // 1-based
    const std::vector<Step>& steps() const { return steps_; }

    std::string str() const;

    friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;

private:
    std::vector<Step> steps_;
};

// The two-step blocks of an even-length Motzkin word whose blocks all lie
// in {UH, HD, UD}.
enum class Diod : char { UH, HD, UD };

class DiodWord {
public:
    DiodWord() = default;
    explicit DiodWord(std::vector<Diod> diods);

    // Splits an even-length Motzkin word into consecutive step pairs;
    // throws DomainError when some pair is not UH, HD or UD.
    static DiodWord from_motzkin(const MotzkinWord& m);

    MotzkinWord to_motzkin() const;

    int size() const { return static_cast<int>(diods_.size()); }
    const std::vector<Diod>& diods() const { return diods_; }

    std::string str() const;  // e.g. "UH UH HD UD HD"

    friend auto operator<=>(const DiodWord&, const DiodWord&) = default;

private:
    std::vector<Diod> diods_;
};

}  // namespace altinv

#endif
