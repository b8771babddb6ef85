#include "altinv/generator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>

#include "altinv/errors.hpp"

namespace altinv {

namespace {

constexpr int kMaxN = 60;

using Clock = std::chrono::steady_clock;

struct AbortControl {
    std::atomic<bool> aborted{false};
    bool has_deadline = false;
    Clock::time_point deadline{};
};

// Snapshot of a partially built permutation. Positions are 1-based;
// entry 0 means unset. For involution families a position is set iff its
// value is used, so the set mask covers both roles.
struct State {
    std::vector<int> perm;     // size n + 1, index 0 unused
    uint64_t set_mask = 0;     // bit p = position p set
    uint64_t used_values = 0;  // bit v = value v used (non-involution families)
    int cursor = 1;
    int dirty = 0;  // placements since the last pattern check on this path
};

class Walker {
public:
    Walker(const ClassSpec& spec, const GenOptions& opt, AbortControl& abort)
        : spec_(spec),
          involution_(family_involution(spec.family)),
          alternating_(family_alternating(spec.family)),
          reverse_alt_(family_reverse_alternating(spec.family)),
          stride_(std::max(1, opt.prune_stride)),
          abort_(abort) {}

    State initial_state() const {
        State s;
        s.perm.assign(static_cast<size_t>(spec_.n) + 1, 0);
        return s;
    }

    // Runs the subtree rooted at `s`, reporting each completed member as a
    // span over positions 1..n. Returns false when aborted.
    template <typename Leaf>
    bool run(State s, Leaf&& leaf) {
        if (abort_.aborted.load(std::memory_order_relaxed)) return false;
        if (abort_.has_deadline && Clock::now() >= abort_.deadline) {
            abort_.aborted.store(true, std::memory_order_relaxed);
            return false;
        }
        return walk(s, leaf);
    }

    // Expands the tree until `depth` free placements were made, collecting
    // the frontier states (and any earlier leaves) in DFS order.
    void collect_tasks(State s, int depth, std::vector<State>& out) {
        advance_cursor(s);
        if (depth == 0 || s.cursor > spec_.n) {
            out.push_back(std::move(s));
            return;
        }
        const int i = s.cursor;
        for (int v = first_candidate(i); v <= spec_.n; ++v) {
            State child = s;
            if (!try_place(child, i, v)) continue;
            if (child.dirty >= stride_) {
                if (partial_hits_pattern(child)) continue;
                child.dirty = 0;
            }
            child.cursor = i + 1;
            collect_tasks(std::move(child), depth - 1, out);
        }
    }

private:
    const ClassSpec& spec_;
    bool involution_;
    bool alternating_;
    bool reverse_alt_;
    int stride_;
    AbortControl& abort_;
    long long nodes_ = 0;
    mutable std::vector<int> word_;

    static bool bit(uint64_t mask, int i) { return (mask >> i) & 1u; }

    int first_candidate(int i) const { return involution_ ? i : 1; }

    bool tick() {
        if ((++nodes_ & 0xFFF) != 0) return true;
        if (abort_.aborted.load(std::memory_order_relaxed)) return false;
        if (abort_.has_deadline && Clock::now() >= abort_.deadline) {
            abort_.aborted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    // pi_j vs pi_{j+1} per the family's zig-zag; vacuous for S and I and
    // while either endpoint is unset.
    bool pair_ok(const State& s, int j) const {
        if (j < 1 || j >= spec_.n) return true;
        const int a = s.perm[static_cast<size_t>(j)];
        const int b = s.perm[static_cast<size_t>(j) + 1];
        if (a == 0 || b == 0) return true;
        if (alternating_) return (a < b) == (j % 2 == 1);
        if (reverse_alt_) return (a > b) == (j % 2 == 1);
        return true;
    }

    bool set_entry(State& s, int pos, int val) const {
        s.perm[static_cast<size_t>(pos)] = val;
        s.set_mask |= (uint64_t{1} << pos);
        s.used_values |= (uint64_t{1} << val);
        return pair_ok(s, pos - 1) && pair_ok(s, pos);
    }

    // Attempts pi(i) = v on `s` (a fresh copy of the parent); involution
    // families force pi(v) = i in the same step. False means the candidate
    // is infeasible and `s` must be discarded.
    bool try_place(State& s, int i, int v) const {
        if (involution_) {
            if (v == i) {
                if (!set_entry(s, i, i)) return false;
                s.dirty += 1;
                return true;
            }
            if (v < i || bit(s.set_mask, v)) return false;
            if (!set_entry(s, i, v)) return false;
            if (!set_entry(s, v, i)) return false;
            s.dirty += 2;
            return true;
        }
        if (bit(s.used_values, v)) return false;
        if (!set_entry(s, i, v)) return false;
        s.dirty += 1;
        return true;
    }

    void advance_cursor(State& s) const {
        while (s.cursor <= spec_.n && bit(s.set_mask, s.cursor)) ++s.cursor;
    }

    // True iff some forbidden pattern occurs among the entries set so far.
    // Sound for pruning: set entries persist into every completion of `s`.
    bool partial_hits_pattern(const State& s) const {
        if (spec_.forbidden.empty()) return false;
        word_.clear();
        for (int j = 1; j <= spec_.n; ++j) {
            const int x = s.perm[static_cast<size_t>(j)];
            if (x != 0) word_.push_back(x);
        }
        for (const auto& t : spec_.forbidden)
            if (word_contains(word_, t)) return true;
        return false;
    }

    template <typename Leaf>
    bool walk(State& s, Leaf& leaf) {
        if (!tick()) return false;
        advance_cursor(s);
        if (s.cursor > spec_.n) {
            if (s.dirty > 0 && partial_hits_pattern(s)) return true;
            leaf(std::span<const int>(s.perm.data() + 1, static_cast<size_t>(spec_.n)));
            return true;
        }
        const int i = s.cursor;
        for (int v = first_candidate(i); v <= spec_.n; ++v) {
            State child = s;  // cheap at desk scale; keeps undo logic trivial
            if (!try_place(child, i, v)) continue;
            if (child.dirty >= stride_) {
                if (partial_hits_pattern(child)) continue;
                child.dirty = 0;
            }
            child.cursor = i + 1;
            if (!walk(child, leaf)) return false;
        }
        return true;
    }
};

// Runs the full search. `per_leaf(result_slot, entries)` is invoked for every
// member; slots are per-subtree, and combining slots in index order yields
// the same stream as a single-threaded run.
template <typename ResultT, typename PerLeaf>
GenOutcome run_search(const ClassSpec& spec, const GenOptions& opt, PerLeaf per_leaf,
                      std::vector<ResultT>& results) {
    if (spec.n < 0) throw ParseError("class length must be >= 0");
    if (spec.n > kMaxN)
        throw ParseError("class length " + std::to_string(spec.n) +
                         " exceeds the supported maximum " + std::to_string(kMaxN));

    AbortControl abort;
    if (opt.time_limit_s) {
        abort.has_deadline = true;
        abort.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(*opt.time_limit_s));
    }

    const int workers = std::max(1, opt.workers);
    if (workers == 1) {
        results.resize(1);
        Walker w(spec, opt, abort);
        bool done = w.run(w.initial_state(), [&](std::span<const int> e) {
            per_leaf(results[0], e);
        });
        return done ? GenOutcome::Complete : GenOutcome::TimedOut;
    }

    Walker splitter(spec, opt, abort);
    std::vector<State> tasks;
    splitter.collect_tasks(splitter.initial_state(), std::max(0, opt.split_depth), tasks);
    results.resize(tasks.size());

    std::atomic<size_t> next{0};
    auto body = [&]() {
        Walker w(spec, opt, abort);
        for (;;) {
            const size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            if (!w.run(tasks[t], [&, t](std::span<const int> e) { per_leaf(results[t], e); }))
                break;
        }
    };

    const size_t nthreads = std::min(static_cast<size_t>(workers), std::max<size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(body);
    for (auto& th : pool) th.join();

    return abort.aborted.load() ? GenOutcome::TimedOut : GenOutcome::Complete;
}

bool span_is_connected(std::span<const int> e) {
    const int n = static_cast<int>(e.size());
    if (n == 0) return false;
    int prefix_max = 0;
    for (int i = 0; i < n - 1; ++i) {
        prefix_max = std::max(prefix_max, e[static_cast<size_t>(i)]);
        if (prefix_max == i + 1) return false;
    }
    return true;
}

}  // namespace

GenOutcome generate(const ClassSpec& spec,
                    const std::function<void(const Permutation&)>& sink,
                    const GenOptions& options) {
    std::vector<std::vector<Permutation>> buffers;
    auto outcome = run_search<std::vector<Permutation>>(
        spec, options,
        [](std::vector<Permutation>& slot, std::span<const int> e) {
            slot.push_back(Permutation::unchecked(std::vector<int>(e.begin(), e.end())));
        },
        buffers);
    if (outcome == GenOutcome::TimedOut) return outcome;
    for (const auto& buf : buffers)
        for (const auto& p : buf) sink(p);
    return GenOutcome::Complete;
}

std::optional<long long> count(const ClassSpec& spec, const GenOptions& options) {
    std::vector<long long> counts;
    auto outcome = run_search<long long>(
        spec, options, [](long long& slot, std::span<const int>) { ++slot; }, counts);
    if (outcome == GenOutcome::TimedOut) return std::nullopt;
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

std::optional<long long> count_connected(const ClassSpec& spec, const GenOptions& options) {
    std::vector<long long> counts;
    auto outcome = run_search<long long>(
        spec, options,
        [](long long& slot, std::span<const int> e) {
            if (span_is_connected(e)) ++slot;
        },
        counts);
    if (outcome == GenOutcome::TimedOut) return std::nullopt;
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

std::optional<std::vector<Permutation>> enumerate(const ClassSpec& spec,
                                                  const GenOptions& options) {
    std::vector<Permutation> out;
    auto outcome = generate(spec, [&](const Permutation& p) { out.push_back(p); }, options);
    if (outcome == GenOutcome::TimedOut) return std::nullopt;
    return out;
}

}  // namespace altinv
