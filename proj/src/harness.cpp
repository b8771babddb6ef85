#include "altinv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "altinv/bijections.hpp"
#include "altinv/errors.hpp"
#include "altinv/motzkin.hpp"
#include "altinv/tableau.hpp"

namespace altinv {

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<const char*, const char*>>& theorem_docs() {
    static const std::vector<std::pair<const char*, const char*>> docs = {
        {"prop-len3", "all twelve length-3 classes over AI/RAI have the stated 0/1/2 counts"},
        {"thm-rai-4321-even", "|RAI_2n(4321)| = M_n"},
        {"thm-rai-4321-odd", "|RAI_{2n-1}(4321)| = M_n - M_{n-2}"},
        {"thm-ai-1234-even", "|AI_2n(1234)| = M_n"},
        {"thm-odd-fourway",
         "|AI_{2n-1}(1234)| = |AI_{2n-1}(4321)| = |RAI_{2n-1}(1234)| = |RAI_{2n-1}(4321)| = "
         "M_n - M_{n-2}"},
        {"thm-rai-1234-even", "|RAI_2n(1234)| = |AI_2n(4321)| = M_{n+1} - 2M_{n-1} + M_{n-3}"},
        {"thm-3412",
         "|RAI_2n(3412)| = |AI_{2n+2}(3412)| = |AI_{2n+1}(3412)| = |RAI_{2n+1}(3412)| = M_n"},
        {"thm-even-1243-2143-2134", "|AI_2n(1243)| = |AI_2n(2143)| = |AI_2n(2134)| = M_n"},
        {"thm-odd-2134-1243", "|AI_{2n-1}(2134)| = |RAI_{2n-1}(1243)| = M_n - M_{n-2}"},
        {"thm-odd-1243-2143",
         "|AI_{2n+1}(1243)| = |AI_{2n+1}(2143)| = |RAI_{2n+1}(2143)| = |RAI_{2n+1}(2134)| = M_n"},
        {"thm-rai-2143-even", "|RAI_2n(2143)| = M_{n-1}"},
        {"thm-fib", "|AI_n(3421,4312)| = |RAI_n(3421,4312)| = F_{n-1}"},
        {"thm-pow2",
         "|RAI_2n(2431,4132)| = |RAI_2n(3241,4213)| = |RAI_{2n+1}(3241,4213)| = "
         "|AI_{2n+1}(2431,4132)| = 2^{n-1}"},
        {"thm-pow2-floor",
         "|RAI_{2n+1}(2431,4132)| = |AI_{2n+1}(3241,4213)| = floor(5 * 2^{n-1} / 3)"},
        {"lem-conn-2431", "connected members of RAI_{2l+1}(2431,4132) number floor((2l+1)/4)"},
        {"lem-conn-4123",
         "connected counts in RAI_n(4123,2341) and AI_n(4123,2341) follow the small case split "
         "(0, 1 or 2)"},
        {"thm-gf-4123",
         "the (4123,2341) classes have rational generating functions with denominator "
         "1 - 2x^2 - x^6"},
        {"fix-seq-2431", "|AI_2n(3241,4213)| = |AI_2n(2431,4132)| opens 1, 2, 5, 9, 17, 31, 59"},
        {"id-baxter",
         "|AI_{2n+1}(2413,3142)| = |RAI_{2n+1}(2413,3142)| = |RAI_2n(2413,3142)|"},
        {"conj-1", "|RAI_2n(1243)| = |RAI_2n(2134)| = M_n (conjectured)"},
        {"conj-2",
         "the 1432/3214 classes repeat the Motzkin counts of the 1234 family (conjectured)"},
        {"conj-3",
         "|AI_n(123 tau)| = |AI_n(321 tau)| for every tail tau on {4..m} (conjectured; probed "
         "for m <= 6)"},
    };
    return docs;
}

bool is_conjecture(const std::string& id) { return id.rfind("conj-", 0) == 0; }

GenOptions gen_options(const HarnessOptions& h) {
    GenOptions g;
    g.workers = h.workers;
    if (h.case_time_limit_s > 0) g.time_limit_s = h.case_time_limit_s;
    return g;
}

CountReport run_case(const std::string& id, Family f, std::vector<Pattern> pats, int n,
                     bool connected, std::optional<FormulaValue> expected,
                     const HarnessOptions& opt, std::string note = "") {
    CountReport r;
    r.theorem_id = id;
    r.family = f;
    r.patterns = std::move(pats);
    r.n = n;
    r.connected = connected;
    r.note = std::move(note);
    const auto t0 = Clock::now();
    const ClassSpec spec{f, r.patterns, n};
    const auto brute = connected ? count_connected(spec, gen_options(opt))
                                 : count(spec, gen_options(opt));
    r.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    r.brute = brute;
    if (expected) {
        r.formula = expected->value;
        r.conjectural = expected->conjectural;
    }
    if (!brute) {
        r.verdict = Verdict::Skipped;
    } else if (!expected) {
        r.verdict = Verdict::NoFormula;
    } else if (*brute == expected->value) {
        r.verdict = expected->conjectural ? Verdict::ConjectureMatch : Verdict::Match;
    } else {
        r.verdict = expected->conjectural ? Verdict::ConjectureMismatch : Verdict::Mismatch;
    }
    return r;
}

void sweep_formula_id(const std::string& id, int n_max, const HarnessOptions& opt,
                      std::vector<CountReport>& out) {
    const auto& entries = FormulaTable::instance().entries();
    for (int n = 0; n <= n_max; ++n)
        for (const auto& e : entries) {
            if (std::find(e.theorem_ids.begin(), e.theorem_ids.end(), id) == e.theorem_ids.end())
                continue;
            const auto v = e.value(n);
            if (!v) continue;
            out.push_back(run_case(id, e.family, e.patterns, n, e.connected,
                                   FormulaValue{*v, e.conjectural}, opt));
        }
}

void sweep_fixture_2431(int n_max, const HarnessOptions& opt, std::vector<CountReport>& out) {
    static const long long prefix[] = {1, 2, 5, 9, 17, 31, 59};
    for (int n = 2; n <= std::min(n_max, 14); n += 2) {
        const long long want = prefix[n / 2 - 1];
        for (const char* csv : {"3241,4213", "2431,4132"})
            out.push_back(run_case("fix-seq-2431", Family::AI, parse_pattern_list(csv), n, false,
                                   FormulaValue{want, false}, opt, "tabulated prefix"));
    }
}

void sweep_baxter(int n_max, const HarnessOptions& opt, std::vector<CountReport>& out) {
    const auto pats = parse_pattern_list("2413,3142");
    for (int L = 1; L <= n_max; L += 2) {
        const auto rai_odd = count(ClassSpec{Family::RAI, pats, L}, gen_options(opt));
        const auto rai_even = count(ClassSpec{Family::RAI, pats, L - 1}, gen_options(opt));
        std::optional<FormulaValue> vs_odd, vs_even;
        if (rai_odd) vs_odd = FormulaValue{*rai_odd, false};
        if (rai_even) vs_even = FormulaValue{*rai_even, false};
        out.push_back(run_case("id-baxter", Family::AI, pats, L, false, vs_odd, opt,
                               "expected = |RAI_" + std::to_string(L) + "(2413,3142)|"));
        out.push_back(run_case("id-baxter", Family::RAI, pats, L, false, vs_even, opt,
                               "expected = |RAI_" + std::to_string(L - 1) + "(2413,3142)|"));
    }
}

void sweep_conj3(int n_max, const HarnessOptions& opt, std::vector<CountReport>& out) {
    // All tails on {4,5} and on {4,5,6}.
    std::vector<std::vector<int>> tails;
    for (std::vector<int> t : {std::vector<int>{4, 5}, std::vector<int>{4, 5, 6}}) {
        std::sort(t.begin(), t.end());
        do {
            tails.push_back(t);
        } while (std::next_permutation(t.begin(), t.end()));
    }
    for (int n = 0; n <= n_max; ++n)
        for (const auto& tail : tails) {
            auto build = [&](std::initializer_list<int> head) {
                std::vector<int> v(head);
                v.insert(v.end(), tail.begin(), tail.end());
                return Pattern(Permutation(std::move(v)));
            };
            const Pattern inc = build({1, 2, 3});
            const Pattern dec = build({3, 2, 1});
            const auto other =
                count(ClassSpec{Family::AI, {dec}, n}, gen_options(opt));
            std::optional<FormulaValue> expected;
            if (other) expected = FormulaValue{*other, true};
            out.push_back(run_case("conj-3", Family::AI, {inc}, n, false, expected, opt,
                                   "expected = |AI_n(" + dec.str() + ")|"));
        }
}

void run_id(const std::string& id, int n_max, const HarnessOptions& opt,
            std::vector<CountReport>& out) {
    if (!known_id(id)) throw ParseError("unknown theorem id '" + id + "'");
    if (id == "fix-seq-2431")
        sweep_fixture_2431(n_max, opt, out);
    else if (id == "id-baxter")
        sweep_baxter(n_max, opt, out);
    else if (id == "conj-3")
        sweep_conj3(n_max, opt, out);
    else
        sweep_formula_id(id, n_max, opt, out);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string patterns_str(const std::vector<Pattern>& ps) {
    std::string out;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ',';
        out += ps[i].str();
    }
    return out;
}

}  // namespace

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Mismatch: return "MISMATCH";
        case Verdict::NoFormula: return "NO_FORMULA";
        case Verdict::ConjectureMatch: return "CONJECTURE_MATCH";
        case Verdict::ConjectureMismatch: return "CONJECTURE_MISMATCH";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

std::vector<std::string> all_theorem_ids() {
    std::vector<std::string> out;
    for (const auto& [id, doc] : theorem_docs())
        if (!is_conjecture(id)) out.push_back(id);
    return out;
}

std::vector<std::string> all_conjecture_ids() { return {"conj-1", "conj-2", "conj-3"}; }

bool known_id(const std::string& id) {
    for (const auto& [known, doc] : theorem_docs())
        if (id == known) return true;
    return false;
}

std::string theorem_summary(const std::string& id) {
    for (const auto& [known, doc] : theorem_docs())
        if (id == known) return doc;
    throw ParseError("unknown theorem id '" + id + "'");
}

std::vector<CountReport> verify(std::span<const std::string> ids, int n_max,
                                const HarnessOptions& options) {
    if (n_max < 0) throw ParseError("n-max must be >= 0");
    std::vector<CountReport> out;
    for (const auto& id : ids) run_id(id, n_max, options, out);
    return out;
}

std::vector<CountReport> probe_conjecture(const std::string& id, int n_max,
                                          const HarnessOptions& options) {
    if (!is_conjecture(id) || !known_id(id))
        throw ParseError("unknown conjecture id '" + id + "' (want conj-1, conj-2 or conj-3)");
    std::vector<CountReport> out;
    run_id(id, n_max, options, out);
    return out;
}

std::string run_bijection(const std::string& name, const std::string& input,
                          const BijectionParams& params) {
    auto perm_in = [&]() { return Permutation::parse(input); };
    auto word_in = [&]() { return MotzkinWord::parse(input); };
    auto tableau_in = [&]() {
        std::vector<std::vector<int>> rows;
        std::istringstream lines{input};
        std::string row;
        while (std::getline(lines, row, ';')) {
            std::istringstream cells{row};
            std::vector<int> r;
            int x = 0;
            while (cells >> x) r.push_back(x);
            if (!r.empty()) rows.push_back(std::move(r));
        }
        return StandardTableau(std::move(rows));
    };

    if (name == "phi") return phi(perm_in()).str();
    if (name == "phi_inv") return phi_inv(word_in()).str();
    if (name == "psi") return psi(perm_in()).str();
    if (name == "psi_inv") return psi_inv(word_in()).str();
    if (name == "delta") return delta(DiodWord::from_motzkin(word_in())).str();
    if (name == "delta_inv") return delta_inv(word_in()).str();
    if (name == "hat_phi") return hat_phi(perm_in()).str();
    if (name == "hat_psi") return hat_psi(perm_in()).str();
    if (name == "rank_labels") {
        std::string out;
        for (int r : rank_labels(perm_in())) {
            if (!out.empty()) out += ' ';
            out += std::to_string(r);
        }
        return out;
    }
    if (name == "west_f") return west_f(perm_in(), params.k.value_or(4)).str();
    if (name == "west_f_inv") return west_f_inv(perm_in(), params.k.value_or(4)).str();
    if (name == "rsk") return rsk(perm_in()).str();
    if (name == "rsk_inv") return rsk_inv(tableau_in()).str();
    if (name == "descent_complement") return descent_complement(perm_in()).str();
    if (name == "jaggard_swap") {
        if (!params.tail)
            throw ParseError("jaggard_swap requires --tail (a permutation of {3..m}, e.g. 435)");
        return jaggard_swap(perm_in(), parse_tail(*params.tail)).str();
    }
    throw ParseError("unknown bijection '" + name + "'");
}

std::string emit_csv(std::span<const CountReport> reports, bool timings) {
    std::ostringstream out;
    out << "theorem,family,patterns,n,connected,brute_count,formula_count,conjectural,verdict,note";
    if (timings) out << ",elapsed_s";
    out << '\n';
    for (const auto& r : reports) {
        out << csv_escape(r.theorem_id) << ',' << family_str(r.family) << ','
            << csv_escape(patterns_str(r.patterns)) << ',' << r.n << ','
            << (r.connected ? "true" : "false") << ','
            << (r.brute ? std::to_string(*r.brute) : std::string()) << ','
            << (r.formula ? std::to_string(*r.formula) : std::string()) << ','
            << (r.conjectural ? "true" : "false") << ',' << verdict_str(r.verdict) << ','
            << csv_escape(r.note);
        if (timings) out << ',' << r.elapsed_s;
        out << '\n';
    }
    return out.str();
}

std::string emit_json(std::span<const CountReport> reports, bool timings) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["theorem"] = r.theorem_id;
        obj["family"] = family_str(r.family);
        obj["patterns"] = patterns_str(r.patterns);
        obj["n"] = r.n;
        obj["connected"] = r.connected;
        if (r.brute)
            obj["brute_count"] = *r.brute;
        else
            obj["brute_count"] = nullptr;
        if (r.formula)
            obj["formula_count"] = *r.formula;
        else
            obj["formula_count"] = nullptr;
        obj["conjectural"] = r.conjectural;
        obj["verdict"] = verdict_str(r.verdict);
        obj["note"] = r.note;
        if (timings) obj["elapsed_s"] = r.elapsed_s;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

int exit_status(std::span<const CountReport> reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::Mismatch) return 1;
    return 0;
}

}  // namespace altinv
