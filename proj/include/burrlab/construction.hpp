#pragma once

#include <cstdint>
#include <vector>

#include "burrlab/closed_forms.hpp"
#include "burrlab/sumset.hpp"

namespace burrlab {

/// v+1 = (u+1) + (u+2) + ... + (u+s) + r, with the remainder split
/// r = r_2 + ... + r_s + eps.
struct Decomposition {
    std::uint64_t s;                    // >= 3 on the admissible domain
    std::uint64_t r;                    // 0 <= r <= u+s
    std::uint64_t eps;                  // 1 iff r > 0
    std::vector<std::uint64_t> r_list;  // r_2..r_s, ascending, gaps <= u-2
};

/// Full finite construction: base ∪ {a_1..a_s} ∪ {(v+1)n : n = 1..tail_count}.
struct GeneratorPlan {
    Params params;
    Decomposition dec;
    IntSeq base;  // P(base) = [0, u-1]
    IntSeq gens;  // a_1..a_s
    std::uint64_t tail_count;

    /// All elements in ascending order.
    IntSeq full_sequence() const;
};

struct VerificationReport {
    std::uint64_t window;
    std::vector<std::uint64_t> computed;   // engine complement in [0, window]
    std::vector<std::uint64_t> predicted;  // d_1..d_{2m}, m = k(k+1)/2 + 1
    bool match;
};

/// A strictly increasing set with subset sums exactly [0, u-1]
/// (so total sum u-1). Engine-verified before returning; u >= 2.
IntSeq interval_base(std::uint64_t u);

/// Deterministic decomposition of v+1; total on valid Params.
Decomposition decompose(const Params& p);

/// a_1 = u+1, a_t = u+t+r_t for 2 <= t <= s-1, a_s = u+s+r_s+eps.
IntSeq generators(const Params& p, const Decomposition& d);

/// Builds and invariant-checks the finite construction with k tail
/// elements (v+1), 2(v+1), ..., k(v+1).
GeneratorPlan build_plan(const Params& p, std::uint64_t tail_count);

/// Computes the complement of P(plan) in the window Σ tail + u + v and
/// compares it against the predicted critical values. Mismatch is
/// reported, not thrown.
VerificationReport verify_construction(const GeneratorPlan& plan);

}  // namespace burrlab
