#include "burrlab/sumset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace burrlab {

IntSeq::IntSeq(std::vector<std::uint64_t> elems) : elems_(std::move(elems)) {
    std::uint64_t prev = 0;
    for (std::uint64_t a : elems_) {
        if (a == 0)
            throw std::invalid_argument("IntSeq: elements must be positive");
        if (a <= prev)
            throw std::invalid_argument("IntSeq: elements must be strictly increasing");
        prev = a;
    }
}

std::uint64_t IntSeq::sum() const {
    std::uint64_t s = 0;
    for (std::uint64_t a : elems_) s += a;
    return s;
}

namespace {
constexpr std::uint64_t kWordBits = 64;
}

SumsetMask::SumsetMask(std::uint64_t bound)
    : bound_(bound), words_((bound / kWordBits) + 1, 0) {
    words_[0] = 1;  // empty sum
}

bool SumsetMask::contains(std::uint64_t x) const {
    if (x > bound_) return false;
    return (words_[x / kWordBits] >> (x % kWordBits)) & 1;
}

void SumsetMask::add_element(std::uint64_t a) {
    if (a == 0)
        throw std::invalid_argument("add_element: a must be positive");
    if (a > bound_) return;

    const std::size_t word_shift = a / kWordBits;
    const unsigned bit_shift = static_cast<unsigned>(a % kWordBits);
    const std::size_t n = words_.size();

    // OR in (mask << a), highest word first so sources stay unmodified.
    for (std::size_t i = n; i-- > word_shift;) {
        std::uint64_t w = words_[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i > word_shift)
            w |= words_[i - word_shift - 1] >> (kWordBits - bit_shift);
        words_[i] |= w;
    }

    // Truncate above the bound.
    const unsigned top = static_cast<unsigned>(bound_ % kWordBits);
    if (top != kWordBits - 1)
        words_.back() &= (std::uint64_t{1} << (top + 1)) - 1;
}

std::vector<std::uint64_t> SumsetMask::complement() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x <= bound_; ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

bool SumsetMask::is_full_interval() const {
    for (std::uint64_t x = 0; x <= bound_; ++x)
        if (!contains(x)) return false;
    return true;
}

std::string SumsetMask::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib)
            out.push_back(digits[(words_[i] >> (nib * 4)) & 0xf]);
    }
    // strip leading zeros, keep at least one digit
    std::size_t first = out.find_first_not_of('0');
    return first == std::string::npos ? "0" : out.substr(first);
}

SumsetMask add_element(const SumsetMask& mask, std::uint64_t a) {
    SumsetMask out = mask;
    out.add_element(a);
    return out;
}

SumsetMask psa(const IntSeq& a, std::uint64_t bound) {
    SumsetMask mask(bound);
    for (std::uint64_t x : a)
        if (x <= bound) mask.add_element(x);
    return mask;
}

std::set<std::uint64_t> naive_psa(const IntSeq& a) {
    if (a.size() > 24)
        throw std::invalid_argument("naive_psa: sequence too long (limit 24)");
    std::set<std::uint64_t> out;
    const std::uint64_t n = a.size();
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
        std::uint64_t s = 0;
        for (std::uint64_t i = 0; i < n; ++i)
            if ((sel >> i) & 1) s += a[i];
        out.insert(s);
    }
    return out;
}

}  // namespace burrlab
