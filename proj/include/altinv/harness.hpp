#ifndef ALTINV_HARNESS_HPP
#define ALTINV_HARNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altinv/formulas.hpp"
#include "altinv/generator.hpp"

namespace altinv {

enum class Verdict { Match, Mismatch, NoFormula, ConjectureMatch, ConjectureMismatch, Skipped };

std::string verdict_str(Verdict v);

struct CountReport {
    std::string theorem_id;
    Family family = Family::S;
    std::vector<Pattern> patterns;
    int n = 0;
    bool connected = false;
    std::optional<long long> brute;
    std::optional<long long> formula;
    bool conjectural = false;
    Verdict verdict = Verdict::NoFormula;
    std::string note;
    double elapsed_s = 0.0;
};

struct HarnessOptions {
    int workers = 1;
    double case_time_limit_s = 300.0;  // per case; expiry yields SKIPPED
};

// Theorem ids in a fixed documentation order; conjecture ids separately.
std::vector<std::string> all_theorem_ids();
std::vector<std::string> all_conjecture_ids();
bool known_id(const std::string& id);

// Human-readable identity behind an id, e.g. "|RAI_2n(4321)| = M_n".
std::string theorem_summary(const std::string& id);

// One report per (id, applicable length <= n_max), ordered by (id, length).
// Unknown ids throw ParseError.
std::vector<CountReport> verify(std::span<const std::string> ids, int n_max,
                                const HarnessOptions& options = {});

std::vector<CountReport> probe_conjecture(const std::string& id, int n_max,
                                          const HarnessOptions& options = {});

struct BijectionParams {
    std::optional<int> k;
    std::optional<std::string> tail;
};

// Applies the named map to the textual input and returns the image in its
// canonical text form. Parse and domain problems throw ParseError or
// DomainError naming the violated precondition.
std::string run_bijection(const std::string& name, const std::string& input,
                          const BijectionParams& params = {});

// Stable field order; counts as exact integers. Timing columns are opt-in so
// identical inputs yield byte-identical output.
std::string emit_csv(std::span<const CountReport> reports, bool timings = false);
std::string emit_json(std::span<const CountReport> reports, bool timings = false);

// 1 when any theorem MISMATCH is present, else 0. Conjecture mismatches and
// skips do not affect it.
int exit_status(std::span<const CountReport> reports);

}  // namespace altinv

#endif
