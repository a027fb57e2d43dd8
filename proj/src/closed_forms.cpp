#include "burrlab/closed_forms.hpp"

#include <limits>
#include <stdexcept>

namespace burrlab {

bool admissible_u(std::uint64_t u) {
    return u == 4 || u == 7 || u == 8 || u >= 11;
}

void validate_params(const Params& p) {
    if (!admissible_u(p.u))
        throw std::invalid_argument(
            "u must lie in {4,7,8} or be >= 11 (u in {1,2,3,5,6,9,10} excluded)");
    if (p.v < 3 * p.u + 5)
        throw std::invalid_argument("v < 3u+5: hypothesis violated");
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Closed: return "closed";
        case Provenance::Recurrence: return "recurrence";
        case Provenance::Oracle: return "oracle";
    }
    return "?";
}

namespace {
std::uint64_t checked_mul_add(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t prod, sum;
    if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(prod, c, &sum))
        throw std::overflow_error("critical value overflows 64 bits");
    return sum;
}
}  // namespace

std::uint64_t e_closed(const Params& p, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("e_closed: k must be >= 1");
    // k = 2j+1 -> (v+1)j + u;  k = 2j+2 -> (v+1)j + v
    const std::uint64_t j = (k - 1) / 2;
    return checked_mul_add(p.v + 1, j, k % 2 == 1 ? p.u : p.v);
}

std::uint64_t e_recurrence(const Params& p, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("e_recurrence: k must be >= 1");
    // e_0 = -1 forces signed seeds; values are positive from k = 1 on.
    std::int64_t e0 = -1;
    std::int64_t e1 = static_cast<std::int64_t>(p.u);
    std::int64_t e2 = static_cast<std::int64_t>(p.v);
    if (k == 1) return p.u;
    if (k == 2) return p.v;
    std::int64_t val = 0;
    for (std::uint64_t i = 3; i <= k; ++i) {
        if (__builtin_add_overflow(e2, e1, &val) || __builtin_sub_overflow(val, e0, &val))
            throw std::overflow_error("critical value overflows 64 bits");
        e0 = e1;
        e1 = e2;
        e2 = val;
    }
    return static_cast<std::uint64_t>(val);
}

CriticalTable critical_table(const Params& p, std::uint64_t max_k) {
    if (max_k < 2) throw std::invalid_argument("critical_table: max_k must be >= 2");
    CriticalTable t{p, {}};
    t.entries.reserve(max_k);
    for (std::uint64_t k = 1; k <= max_k; ++k)
        t.entries.push_back({k, e_closed(p, k), Provenance::Closed});
    return t;
}

}  // namespace burrlab
