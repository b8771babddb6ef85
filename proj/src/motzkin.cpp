#include "altinv/motzkin.hpp"

#include "altinv/errors.hpp"

namespace altinv {

namespace {

void check_ballot(const std::vector<Step>& steps) {
    int height = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] == Step::U) ++height;
        if (steps[i] == Step::D) --height;
        if (height < 0)
            throw ParseError("Motzkin word dips below the axis at step " + std::to_string(i + 1));
    }
    if (height != 0)
        throw ParseError("Motzkin word ends at height " + std::to_string(height) + ", want 0");
}

}  // namespace

MotzkinWord::MotzkinWord(std::vector<Step> steps) {
    check_ballot(steps);
    steps_ = std::move(steps);
}

MotzkinWord MotzkinWord::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': steps.push_back(Step::U); break;
            case 'H': steps.push_back(Step::H); break;
            case 'D': steps.push_back(Step::D); break;
            default:
                throw ParseError("bad Motzkin step '" + std::string(1, c) + "' (want U, H or D)");
        }
    }
    return MotzkinWord(std::move(steps));
}

std::string MotzkinWord::str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += static_cast<char>(s);
    return out;
}

DiodWord::DiodWord(std::vector<Diod> diods) : diods_(std::move(diods)) {
    to_motzkin();  // validates the concatenation
}

DiodWord DiodWord::from_motzkin(const MotzkinWord& m) {
    if (m.size() % 2 != 0)
        throw DomainError("diod decomposition needs an even-length Motzkin word");
    std::vector<Diod> out;
    out.reserve(static_cast<size_t>(m.size() / 2));
    for (int i = 1; i <= m.size(); i += 2) {
        const Step a = m.at(i), b = m.at(i + 1);
        if (a == Step::U && b == Step::H)
            out.push_back(Diod::UH);
        else if (a == Step::H && b == Step::D)
            out.push_back(Diod::HD);
        else if (a == Step::U && b == Step::D)
            out.push_back(Diod::UD);
        else
            throw DomainError("diod " + std::string(1, static_cast<char>(a)) +
                              std::string(1, static_cast<char>(b)) + " at steps " +
                              std::to_string(i) + "-" + std::to_string(i + 1) +
                              " is not UH, HD or UD");
    }
    DiodWord d;
    d.diods_ = std::move(out);
    return d;
}

MotzkinWord DiodWord::to_motzkin() const {
    std::vector<Step> steps;
    steps.reserve(diods_.size() * 2);
    for (Diod d : diods_) {
        switch (d) {
            case Diod::UH: steps.push_back(Step::U); steps.push_back(Step::H); break;
            case Diod::HD: steps.push_back(Step::H); steps.push_back(Step::D); break;
            case Diod::UD: steps.push_back(Step::U); steps.push_back(Step::D); break;
        }
    }
    return MotzkinWord(std::move(steps));
}

std::string DiodWord::str() const {
    std::string out;
    for (size_t i = 0; i < diods_.size(); ++i) {
        if (i) out += ' ';
        switch (diods_[i]) {
            case Diod::UH: out += "UH"; break;
            case Diod::HD: out += "HD"; break;
            case Diod::UD: out += "UD"; break;
        }
    }
    return out;
}

}  // namespace altinv
