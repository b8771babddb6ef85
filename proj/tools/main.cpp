// Command-line front end: enumeration, theorem verification, conjecture
// probes and the bijection maps.
//
// Exit codes: 0 ok, 1 theorem mismatch, 2 usage/parse/domain error,
// 3 internal invariant violation.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altinv/bijections.hpp"
#include "altinv/errors.hpp"
#include "altinv/harness.hpp"

using namespace altinv;

namespace {

struct CommonClassArgs {
    std::string family;
    std::string avoid;
    bool connected = false;
};

ClassSpec make_spec(const CommonClassArgs& args, int n) {
    return ClassSpec{parse_family(args.family), parse_pattern_list(args.avoid), n};
}

int run(int argc, char** argv) {
    CLI::App app{"pattern-avoiding alternating involutions: enumeration, bijections and "
                 "theorem verification"};
    app.require_subcommand(1);
    app.fallthrough();
    int workers = 1;
    app.add_option("--workers", workers, "worker threads for the search tree")
        ->capture_default_str();

    // ---- count -----------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "cardinality of one class");
    CommonClassArgs count_args;
    int count_n = 0;
    std::string count_method = "brute";
    double count_limit = 0;
    count_cmd->add_option("--family", count_args.family, "s|i|a|ra|ai|rai")->required();
    count_cmd->add_option("--avoid", count_args.avoid, "comma-separated patterns, e.g. 3421,4312");
    count_cmd->add_option("--n", count_n, "class length")->required();
    count_cmd->add_flag("--connected", count_args.connected, "count only connected members");
    count_cmd->add_option("--method", count_method, "brute|formula")->capture_default_str();
    count_cmd->add_option("--time-limit", count_limit, "seconds before giving up (brute)");

    // ---- enumerate --------------------------------------------------------
    auto* enum_cmd = app.add_subcommand("enumerate", "print the members of one class");
    CommonClassArgs enum_args;
    int enum_n = 0;
    enum_cmd->add_option("--family", enum_args.family, "s|i|a|ra|ai|rai")->required();
    enum_cmd->add_option("--avoid", enum_args.avoid, "comma-separated patterns");
    enum_cmd->add_option("--n", enum_n, "class length")->required();
    enum_cmd->add_flag("--connected", enum_args.connected, "print only connected members");

    // ---- sequence ----------------------------------------------------------
    auto* seq_cmd = app.add_subcommand("sequence", "leading terms of one class counting sequence");
    CommonClassArgs seq_args;
    int seq_min = 0, seq_max = 16;
    std::string seq_parity = "all";
    seq_cmd->add_option("--family", seq_args.family, "s|i|a|ra|ai|rai")->required();
    seq_cmd->add_option("--avoid", seq_args.avoid, "comma-separated patterns");
    seq_cmd->add_option("--n-min", seq_min, "first length")->capture_default_str();
    seq_cmd->add_option("--n-max", seq_max, "last length")->capture_default_str();
    seq_cmd->add_option("--parity", seq_parity, "all|even|odd")->capture_default_str();
    seq_cmd->add_flag("--connected", seq_args.connected, "count only connected members");

    // ---- verify -------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "brute-force counts against the formulas");
    std::string verify_ids = "all";
    int verify_nmax = 12;
    std::string verify_format = "csv";
    bool verify_timings = false;
    double verify_limit = 300.0;
    verify_cmd->add_option("--ids", verify_ids, "comma-separated theorem ids, or 'all'")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_nmax, "largest class length")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "csv|json")->capture_default_str();
    verify_cmd->add_flag("--timings", verify_timings, "include elapsed seconds per case");
    verify_cmd->add_option("--time-limit", verify_limit, "seconds per case before SKIPPED")
        ->capture_default_str();
    bool verify_list = false;
    verify_cmd->add_flag("--list", verify_list, "list known ids with their statements and exit");

    // ---- conjecture -----------------------------------------------------------
    auto* conj_cmd = app.add_subcommand("conjecture", "probe one conjecture against brute force");
    std::string conj_id;
    int conj_nmax = 12;
    std::string conj_format = "csv";
    bool conj_timings = false;
    double conj_limit = 300.0;
    conj_cmd->add_option("--id", conj_id, "conj-1|conj-2|conj-3")->required();
    conj_cmd->add_option("--n-max", conj_nmax, "largest class length")->capture_default_str();
    conj_cmd->add_option("--format", conj_format, "csv|json")->capture_default_str();
    conj_cmd->add_flag("--timings", conj_timings, "include elapsed seconds per case");
    conj_cmd->add_option("--time-limit", conj_limit, "seconds per case before SKIPPED")
        ->capture_default_str();

    // ---- bijection ----------------------------------------------------------
    auto* bij_cmd = app.add_subcommand("bijection", "apply one of the maps to one input");
    std::string bij_name, bij_input, bij_tail;
    int bij_k = 0;
    bij_cmd->add_option("--name", bij_name,
                        "phi|phi_inv|psi|psi_inv|delta|delta_inv|hat_phi|hat_psi|rank_labels|"
                        "west_f|west_f_inv|rsk|rsk_inv|descent_complement|jaggard_swap")
        ->required();
    bij_cmd->add_option("--input", bij_input, "permutation, Motzkin word, or tableau (rows ';')")
        ->required();
    bij_cmd->add_option("--k", bij_k, "rank parameter for west_f / west_f_inv (default 4)");
    bij_cmd->add_option("--tail", bij_tail, "tail for jaggard_swap, e.g. 435");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {  // --help and friends
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count_cmd->parsed()) {
        if (count_method == "formula") {
            const auto spec = make_spec(count_args, count_n);
            const auto v = FormulaTable::instance().expected_count(
                spec.family, spec.forbidden, count_n, count_args.connected);
            if (!v) {
                std::cerr << "no formula covers this class at length " << count_n << "\n";
                return 2;
            }
            if (v->conjectural) std::cerr << "note: this value is conjectural\n";
            std::cout << v->value << "\n";
            return 0;
        }
        if (count_method != "brute") {
            std::cerr << "unknown method '" << count_method << "' (want brute|formula)\n";
            return 2;
        }
        GenOptions opt;
        opt.workers = workers;
        if (count_limit > 0) opt.time_limit_s = count_limit;
        const auto spec = make_spec(count_args, count_n);
        const auto c = count_args.connected ? count_connected(spec, opt) : count(spec, opt);
        if (!c) {
            std::cerr << "timed out after " << count_limit << " s\n";
            return 2;
        }
        std::cout << *c << "\n";
        return 0;
    }

    if (enum_cmd->parsed()) {
        GenOptions opt;
        opt.workers = workers;
        const auto members = enumerate(make_spec(enum_args, enum_n), opt);
        if (!members) return 2;
        for (const auto& p : *members)
            if (!enum_args.connected || is_connected(p)) std::cout << p.str() << "\n";
        return 0;
    }

    if (seq_cmd->parsed()) {
        if (seq_parity != "all" && seq_parity != "even" && seq_parity != "odd") {
            std::cerr << "unknown parity '" << seq_parity << "' (want all|even|odd)\n";
            return 2;
        }
        GenOptions opt;
        opt.workers = workers;
        std::string line;
        for (int n = seq_min; n <= seq_max; ++n) {
            if (seq_parity == "even" && n % 2 != 0) continue;
            if (seq_parity == "odd" && n % 2 != 1) continue;
            const auto spec = make_spec(seq_args, n);
            const auto c = seq_args.connected ? count_connected(spec, opt) : count(spec, opt);
            if (!line.empty()) line += ",";
            line += std::to_string(*c);
        }
        std::cout << line << "\n";
        return 0;
    }

    if (verify_cmd->parsed()) {
        if (verify_list) {
            for (const auto& id : all_theorem_ids())
                std::cout << id << ": " << theorem_summary(id) << "\n";
            for (const auto& id : all_conjecture_ids())
                std::cout << id << ": " << theorem_summary(id) << "\n";
            return 0;
        }
        std::vector<std::string> ids;
        if (verify_ids == "all") {
            ids = all_theorem_ids();
        } else {
            std::istringstream in{verify_ids};
            std::string tok;
            while (std::getline(in, tok, ','))
                if (!tok.empty()) ids.push_back(tok);
        }
        HarnessOptions opt;
        opt.workers = workers;
        opt.case_time_limit_s = verify_limit;
        const auto reports = verify(ids, verify_nmax, opt);
        std::cout << (verify_format == "json" ? emit_json(reports, verify_timings)
                                              : emit_csv(reports, verify_timings));
        for (const auto& r : reports)
            if (r.verdict == Verdict::ConjectureMismatch)
                std::cerr << "FINDING: conjectural value differs from brute force ("
                          << r.theorem_id << ", n = " << r.n << ")\n";
        return exit_status(reports);
    }

    if (conj_cmd->parsed()) {
        HarnessOptions opt;
        opt.workers = workers;
        opt.case_time_limit_s = conj_limit;
        const auto reports = probe_conjecture(conj_id, conj_nmax, opt);
        std::cout << (conj_format == "json" ? emit_json(reports, conj_timings)
                                            : emit_csv(reports, conj_timings));
        bool finding = false;
        for (const auto& r : reports)
            if (r.verdict == Verdict::ConjectureMismatch) finding = true;
        if (finding)
            std::cerr << "==== FINDING ====\n"
                      << "brute force disagrees with " << conj_id << " ("
                      << theorem_summary(conj_id) << ")\n"
                      << "=================\n";
        return 0;
    }

    if (bij_cmd->parsed()) {
        BijectionParams params;
        if (bij_cmd->count("--k")) params.k = bij_k;
        if (bij_cmd->count("--tail")) params.tail = bij_tail;
        std::cout << run_bijection(bij_name, bij_input, params) << "\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {  // ParseError, DomainError
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
