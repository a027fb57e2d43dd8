#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burrlab/closed_forms.hpp"
#include "burrlab/sumset.hpp"

namespace burrlab {

/// Prefix-feasibility instance: does a finite A ⊆ [1, window] exist whose
/// subset sums miss exactly `excluded` within [0, window]?
struct PrefixSpec {
    std::vector<std::uint64_t> excluded;  // nonempty, strictly increasing, >= 1
    std::uint64_t window;                 // >= max(excluded)
    // When set, every chosen a > u+1 must satisfy a <= (sum of smaller
    // chosen elements) + 1.
    std::optional<std::uint64_t> side_condition_u;

    void validate() const;
};

/// Each rule is individually toggleable so completeness can be certified
/// against unpruned search.
struct PruneConfig {
    bool excluded_hit = true;    // P1: abandon once an excluded value is summable
    bool gap_cap = true;         // P2: next candidate may not exceed the lowest gap
    bool candidate_skip = true;  // P3: skip candidates that would cover an excluded value
};

enum class Status { Sat, Unsat, Limit };

const char* status_name(Status s);

struct SearchWitness {
    IntSeq a_seq;
    std::vector<std::uint64_t> complement;  // engine-computed, == excluded on SAT
};

struct SearchOutcome {
    Status status = Status::Unsat;
    std::optional<SearchWitness> witness;
    std::uint64_t nodes_explored = 0;
    std::int64_t millis = 0;
    PruneConfig pruning;
};

constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

/// Complete DFS over increasing sequences in [1, window]. UNSAT means the
/// whole space was exhausted; budget exhaustion is Status::Limit, never
/// UNSAT.
///
/// Side-conditioned instances additionally require the witness sum to
/// reach the window: an infinite extension needs a next element with
/// window < a <= sum+1, so finite witnesses below that sum do not
/// correspond to any infinite sequence. Unconditioned instances extend
/// freely with large elements, so no sum requirement applies.
SearchOutcome search_exact(const PrefixSpec& spec,
                           const PruneConfig& pruning = {},
                           std::uint64_t node_budget = kDefaultNodeBudget);

/// Reference decision procedure: enumerates every subset of [1, window].
/// Intended for windows <= 24.
Status brute_force_status(const PrefixSpec& spec);

struct MinNextResult {
    Status status = Status::Unsat;        // Sat: minimum found; Unsat: none up to cap
    std::uint64_t value = 0;              // minimal feasible next excluded value
    std::optional<SearchWitness> witness;
    std::uint64_t nodes_total = 0;
    // Per-candidate statuses for t = max(fixed)+1 .. last tried.
    std::vector<std::pair<std::uint64_t, Status>> sweep;
};

/// Smallest t in (max(fixed), cap] such that excluded = fixed ∪ {t} is
/// feasible at window t, with the side condition at u (disable via
/// with_side_condition for the free variant; the two minima need not
/// coincide). Every smaller t is proven UNSAT along the way.
MinNextResult min_next_excluded(const Params& p,
                                const std::vector<std::uint64_t>& fixed,
                                std::uint64_t cap,
                                std::uint64_t node_budget = kDefaultNodeBudget,
                                bool with_side_condition = true);

struct NonexistenceReport {
    std::vector<std::uint64_t> excluded;
    std::uint64_t window = 0;  // window at which the final status was decided
    SearchOutcome outcome;
    bool ceiling_reached = false;  // SAT persisted up to the ceiling
};

constexpr std::uint64_t kDefaultWindowCeiling = 512;

/// Free-tail nonexistence check: searches the fixed prefix without the
/// side condition, doubling the window from max(excluded) until UNSAT or
/// the ceiling. UNSAT at any window rules out every infinite extension.
NonexistenceReport check_nonexistence(const std::vector<std::uint64_t>& excluded,
                                      std::uint64_t window_ceiling = kDefaultWindowCeiling,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

struct StructureReport {
    std::vector<std::string> violations;
    // Lemma 2.3 prefix: P(prefix) = [0, u+v] \ {u, v} within u+v.
    std::size_t interval_prefix_len = 0;
    bool ok() const { return violations.empty(); }
};

/// Checks a SAT witness for an excluded prefix beginning (u, v, ...)
/// against the structural lemmas: an initial sub-prefix realizing
/// [0,u+v]\{u,v}, divisibility of the following elements by v+1 up to the
/// crossing index, and the interval property of the sub-u prefix.
StructureReport analyze_witness(const SearchWitness& w, const Params& p,
                                const std::vector<std::uint64_t>& excluded);

}  // namespace burrlab
