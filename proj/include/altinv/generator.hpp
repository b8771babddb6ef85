#ifndef ALTINV_GENERATOR_HPP
#define ALTINV_GENERATOR_HPP

#include <functional>
#include <optional>
#include <vector>

#include "altinv/class_spec.hpp"

namespace altinv {

struct GenOptions {
    int workers = 1;
    // Partial-word pattern check runs every `prune_stride` placements (and
    // always on completed words, so results never depend on the stride).
    int prune_stride = 2;
    // The search tree is split into independent subtrees after this many
    // free placement decisions when workers > 1.
    int split_depth = 2;
    std::optional<double> time_limit_s;
};

enum class GenOutcome { Complete, TimedOut };

// Yields exactly the members of the class, each once, in lexicographic order
// of one-line notation; the order does not depend on the worker count. On
// TimedOut the sink has received an unspecified prefix of the stream.
GenOutcome generate(const ClassSpec& spec,
                    const std::function<void(const Permutation&)>& sink,
                    const GenOptions& options = {});

// Cardinality of the class, computed without materializing members.
// Empty optional iff the time limit expired first.
std::optional<long long> count(const ClassSpec& spec, const GenOptions& options = {});

// Members that are connected (a single component).
std::optional<long long> count_connected(const ClassSpec& spec,
                                         const GenOptions& options = {});

std::optional<std::vector<Permutation>> enumerate(const ClassSpec& spec,
                                                  const GenOptions& options = {});

}  // namespace altinv

#endif
