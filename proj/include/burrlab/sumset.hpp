#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace burrlab {

/// Strictly increasing sequence of positive integers.
class IntSeq {
public:
    IntSeq() = default;
    explicit IntSeq(std::vector<std::uint64_t> elems);

    const std::vector<std::uint64_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return elems_[i]; }
    std::uint64_t sum() const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<std::uint64_t> elems_;
};

/// Subset-sum membership mask over the window [0, bound], one bit per
/// integer. Bit 0 (the empty sum) is always set; arithmetic truncates
/// at the bound.
class SumsetMask {
public:
    /// Mask of the empty sequence: exactly {0}.
    explicit SumsetMask(std::uint64_t bound);

    std::uint64_t bound() const { return bound_; }
    bool contains(std::uint64_t x) const;

    /// In-place P(A) ∪ (a + P(A)), truncated at the bound. Rejects a = 0.
    /// a > bound is a no-op.
    void add_element(std::uint64_t a);

    /// Ascending list of the unset positions in [0, bound].
    std::vector<std::uint64_t> complement() const;

    /// True iff every bit of [0, bound] is set.
    bool is_full_interval() const;

    std::size_t word_count() const { return words_.size(); }
    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Hex string of the raw bit content, most significant word first.
    std::string to_hex() const;

    friend bool operator==(const SumsetMask&, const SumsetMask&) = default;

private:
    std::uint64_t bound_;
    std::vector<std::uint64_t> words_;
};

/// Pure form of SumsetMask::add_element.
SumsetMask add_element(const SumsetMask& mask, std::uint64_t a);

/// P(A) ∩ [0, N]. Elements above N are skipped; the result is unaffected
/// (window soundness).
SumsetMask psa(const IntSeq& a, std::uint64_t bound);

/// Exact unbounded P(A) by enumerating all 2^|A| subsets. |A| <= 24.
std::set<std::uint64_t> naive_psa(const IntSeq& a);

}  // namespace burrlab
