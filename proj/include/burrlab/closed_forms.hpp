#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burrlab {

/// Admissible (u, v) pair: u in {4,7,8} or u >= 11, v >= 3u+5.
struct Params {
    std::uint64_t u;
    std::uint64_t v;
};

/// True iff u lies in {4,7,8} ∪ [11, ∞).
bool admissible_u(std::uint64_t u);

/// Validates both hypotheses; throws std::invalid_argument naming the
/// violated one.
void validate_params(const Params& p);

enum class Provenance { Closed, Recurrence, Oracle };

const char* provenance_name(Provenance p);

struct CriticalEntry {
    std::uint64_t k;
    std::uint64_t value;
    Provenance provenance;
};

struct CriticalTable {
    Params params;
    std::vector<CriticalEntry> entries;
};

/// k-th critical value, 1-based: odd k = 2j+1 gives (v+1)j + u, even
/// k = 2j+2 gives (v+1)j + v.
std::uint64_t e_closed(const Params& p, std::uint64_t k);

/// Same value via e_k = e_{k-1} + e_{k-2} - e_{k-3}, seeded with
/// e_0 = -1, e_1 = u, e_2 = v.
std::uint64_t e_recurrence(const Params& p, std::uint64_t k);

/// Closed-form table for k = 1..max_k.
CriticalTable critical_table(const Params& p, std::uint64_t max_k);

}  // namespace burrlab
