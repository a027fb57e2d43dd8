#include "burrlab/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace burrlab {

IntSeq GeneratorPlan::full_sequence() const {
    std::vector<std::uint64_t> all(base.begin(), base.end());
    all.insert(all.end(), gens.begin(), gens.end());
    const std::uint64_t v1 = params.v + 1;
    for (std::uint64_t n = 1; n <= tail_count; ++n) all.push_back(v1 * n);
    return IntSeq(std::move(all));
}

namespace {

// Increasing chain with a_1 = 1, each next element <= running sum + 1,
// totalling exactly `remaining`. Largest-first DFS; the next-element cap
// keeps the depth logarithmic.
bool chain_to_sum(std::uint64_t last, std::uint64_t prefix_sum,
                  std::uint64_t remaining, std::vector<std::uint64_t>& out) {
    if (remaining == 0) return true;
    std::uint64_t hi = std::min(prefix_sum + 1, remaining);
    for (std::uint64_t a = hi; a > last; --a) {
        const std::uint64_t rest = remaining - a;
        if (rest != 0 && rest <= a) continue;  // next elements must exceed a
        out.push_back(a);
        if (chain_to_sum(a, prefix_sum + a, rest, out)) return true;
        out.pop_back();
    }
    return false;
}

// Fixed seeds for the small admissible u; larger u go through the search.
const std::vector<std::uint64_t>* base_table(std::uint64_t u) {
    static const std::vector<std::uint64_t> t4{1, 2};
    static const std::vector<std::uint64_t> t7{1, 2, 3};
    static const std::vector<std::uint64_t> t8{1, 2, 4};
    static const std::vector<std::uint64_t> t11{1, 2, 3, 4};
    static const std::vector<std::uint64_t> t12{1, 2, 3, 5};
    switch (u) {
        case 4: return &t4;
        case 7: return &t7;
        case 8: return &t8;
        case 11: return &t11;
        case 12: return &t12;
        default: return nullptr;
    }
}

}  // namespace

IntSeq interval_base(std::uint64_t u) {
    if (u < 2) throw std::invalid_argument("interval_base: u must be >= 2");
    std::vector<std::uint64_t> elems;
    if (const auto* t = base_table(u)) {
        elems = *t;
    } else if (!chain_to_sum(0, 0, u - 1, elems)) {
        throw std::invalid_argument("interval_base: no chain set sums to u-1");
    }
    IntSeq base(std::move(elems));
    if (base.sum() != u - 1 || !psa(base, u - 1).is_full_interval())
        throw std::logic_error("interval_base: postcondition P(A1) = [0,u-1] failed");
    return base;
}

Decomposition decompose(const Params& p) {
    validate_params(p);
    const std::uint64_t u = p.u, target = p.v + 1;

    std::uint64_t s = 0, partial = 0;
    while (partial + (u + s + 1) <= target) {
        ++s;
        partial += u + s;
    }
    Decomposition d;
    d.s = s;
    d.r = target - partial;
    d.eps = d.r > 0 ? 1 : 0;
    if (s < 3) throw std::logic_error("decompose: s < 3 on admissible domain");
    if (d.r > u + s) throw std::logic_error("decompose: remainder out of range");

    // r_2..r_s filled greedily from the top; ascending by construction.
    std::uint64_t rem = d.r - d.eps;
    if (rem > (s - 1) * (u - 1))
        throw std::logic_error("decompose: remainder split infeasible");
    d.r_list.assign(s - 1, 0);
    for (std::size_t i = d.r_list.size(); i-- > 0 && rem > 0;) {
        d.r_list[i] = std::min<std::uint64_t>(u - 1, rem);
        rem -= d.r_list[i];
    }

    // A gap of u-1 forces the pair (0, u-1); at most one exists in a
    // sorted list, so a single swap restores gaps <= u-2.
    bool fixed = false;
    for (std::size_t j = 1; j < d.r_list.size(); ++j) {
        if (d.r_list[j] - d.r_list[j - 1] == u - 1) {
            if (fixed) throw std::logic_error("decompose: second u-1 gap");
            d.r_list[j] -= 1;
            d.r_list[j - 1] += 1;
            fixed = true;
        }
    }
    for (std::size_t j = 1; j < d.r_list.size(); ++j)
        if (d.r_list[j] < d.r_list[j - 1] || d.r_list[j] - d.r_list[j - 1] > u - 2)
            throw std::logic_error("decompose: r_list invariant violated");
    return d;
}

IntSeq generators(const Params& p, const Decomposition& d) {
    const std::uint64_t u = p.u, s = d.s;
    std::vector<std::uint64_t> a;
    a.push_back(u + 1);
    for (std::uint64_t t = 2; t <= s; ++t) {
        std::uint64_t val = u + t + d.r_list[t - 2];
        if (t == s) val += d.eps;
        a.push_back(val);
    }
    for (std::uint64_t t = 1; t < s; ++t)
        if (!(a[t - 1] < a[t] && a[t] <= a[t - 1] + u))
            throw std::logic_error("generators: step bound a_{t-1} < a_t <= a_{t-1}+u violated");
    std::uint64_t tail_sum = u;
    for (std::uint64_t t = 2; t <= s; ++t) tail_sum += a[t - 1];
    if (tail_sum != p.v)
        throw std::logic_error("generators: sum a_2..a_s + u != v");
    return IntSeq(std::move(a));
}

GeneratorPlan build_plan(const Params& p, std::uint64_t tail_count) {
    GeneratorPlan plan;
    plan.params = p;
    plan.dec = decompose(p);
    plan.base = interval_base(p.u);
    plan.gens = generators(p, plan.dec);
    plan.tail_count = tail_count;

    // Side condition: every element above u+1 stays within reach of the
    // smaller elements' sum plus one.
    const IntSeq all = plan.full_sequence();
    std::uint64_t running = 0;
    for (std::uint64_t a : all) {
        if (a > p.u + 1 && a > running + 1)
            throw std::logic_error("build_plan: side condition violated");
        running += a;
    }
    return plan;
}

VerificationReport verify_construction(const GeneratorPlan& plan) {
    const Params& p = plan.params;
    const std::uint64_t k = plan.tail_count;
    const std::uint64_t tail_sum = (p.v + 1) * k * (k + 1) / 2;
    VerificationReport rep;
    rep.window = tail_sum + p.u + p.v;
    rep.computed = psa(plan.full_sequence(), rep.window).complement();
    const std::uint64_t m = k * (k + 1) / 2 + 1;
    for (std::uint64_t i = 1; i <= 2 * m; ++i)
        rep.predicted.push_back(e_closed(p, i));
    rep.match = rep.computed == rep.predicted;
    return rep;
}

}  // namespace burrlab
