#include "burrlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace burrlab {

void PrefixSpec::validate() const {
    if (excluded.empty())
        throw std::invalid_argument("PrefixSpec: excluded must be nonempty");
    std::uint64_t prev = 0;
    for (std::uint64_t b : excluded) {
        if (b == 0 || b <= prev)
            throw std::invalid_argument(
                "PrefixSpec: excluded must be strictly increasing and >= 1");
        prev = b;
    }
    if (window < excluded.back())
        throw std::invalid_argument("PrefixSpec: window < max(excluded)");
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Sat: return "SAT";
        case Status::Unsat: return "UNSAT";
        case Status::Limit: return "LIMIT";
    }
    return "?";
}

namespace {

struct Searcher {
    const PrefixSpec& spec;
    PruneConfig prune;
    std::uint64_t budget;

    std::vector<std::uint64_t> target;  // bits of [0, window] minus excluded
    std::vector<std::uint64_t> excl;    // excluded bits only
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::uint64_t> chosen;
    std::optional<SearchWitness> witness;

    explicit Searcher(const PrefixSpec& s, const PruneConfig& pc, std::uint64_t b)
        : spec(s), prune(pc), budget(b) {
        const std::size_t n = s.window / 64 + 1;
        target.assign(n, ~std::uint64_t{0});
        const unsigned top = static_cast<unsigned>(s.window % 64);
        if (top != 63) target.back() = (std::uint64_t{1} << (top + 1)) - 1;
        excl.assign(n, 0);
        for (std::uint64_t x : s.excluded) {
            excl[x / 64] |= std::uint64_t{1} << (x % 64);
            target[x / 64] &= ~(std::uint64_t{1} << (x % 64));
        }
    }

    bool intersects_excluded(const SumsetMask& m) const {
        for (std::size_t i = 0; i < excl.size(); ++i)
            if (m.words()[i] & excl[i]) return true;
        return false;
    }

    // Lowest position in [0, window] unset in (mask | excl); window+1 if none.
    std::uint64_t lowest_gap(const SumsetMask& mask) const {
        for (std::size_t i = 0; i < excl.size(); ++i) {
            std::uint64_t open = target[i] & ~mask.words()[i];
            if (open) return i * 64 + std::countr_zero(open);
        }
        return spec.window + 1;
    }

    bool at_target(const SumsetMask& m) const { return m.words() == target; }

    bool dfs(const SumsetMask& mask, std::uint64_t last, std::uint64_t sum) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (prune.excluded_hit && intersects_excluded(mask)) return false;
        // Under the side condition a witness must extend to an infinite
        // sequence: the next element needs window < a <= sum+1, so the
        // chosen sum must reach the window. Unconditioned instances extend
        // with arbitrarily large elements and need no such reserve.
        if (at_target(mask) && (!spec.side_condition_u || sum >= spec.window)) {
            witness = SearchWitness{IntSeq(chosen), psa(IntSeq(chosen), spec.window).complement()};
            return true;
        }
        const std::uint64_t gap = lowest_gap(mask);
        const std::uint64_t hi = prune.gap_cap ? std::min(gap, spec.window) : spec.window;
        const std::uint64_t u_limit =
            spec.side_condition_u ? *spec.side_condition_u + 1 : ~std::uint64_t{0};
        for (std::uint64_t a = last + 1; a <= hi; ++a) {
            if (a > u_limit && a > sum + 1) break;  // later candidates only grow
            if (out_of_budget) return false;
            SumsetMask next = mask;
            next.add_element(a);
            if (prune.candidate_skip && intersects_excluded(next)) continue;
            chosen.push_back(a);
            if (dfs(next, a, sum + a)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

SearchOutcome search_exact(const PrefixSpec& spec, const PruneConfig& pruning,
                           std::uint64_t node_budget) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    Searcher s(spec, pruning, node_budget);
    const bool sat = s.dfs(SumsetMask(spec.window), 0, 0);
    SearchOutcome out;
    out.pruning = pruning;
    out.nodes_explored = s.nodes;
    if (sat) {
        out.status = Status::Sat;
        out.witness = std::move(s.witness);
    } else {
        out.status = s.out_of_budget ? Status::Limit : Status::Unsat;
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
    return out;
}

namespace {

// Plain include/skip enumeration over [1, window], single 64-bit word.
struct BruteForcer {
    std::uint64_t window;
    std::uint64_t target;
    std::uint64_t window_mask;
    std::uint64_t u_limit;  // side condition threshold, ~0 when disabled

    bool side_condition = false;

    bool run(std::uint64_t a, std::uint64_t mask, std::uint64_t sum) const {
        if (mask == target && (!side_condition || sum >= window)) return true;
        if (a > window) return false;
        if (run(a + 1, mask, sum)) return true;  // skip a
        if (a > u_limit && a > sum + 1) return false;
        const std::uint64_t next = (mask | (mask << a)) & window_mask;
        return run(a + 1, next, sum + a);
    }
};

}  // namespace

Status brute_force_status(const PrefixSpec& spec) {
    spec.validate();
    if (spec.window > 32)
        throw std::invalid_argument("brute_force_status: window too large");
    BruteForcer bf;
    bf.window = spec.window;
    bf.window_mask = (std::uint64_t{1} << (spec.window + 1)) - 1;
    bf.target = bf.window_mask;
    for (std::uint64_t b : spec.excluded) bf.target &= ~(std::uint64_t{1} << b);
    bf.u_limit = spec.side_condition_u ? *spec.side_condition_u + 1 : ~std::uint64_t{0};
    bf.side_condition = spec.side_condition_u.has_value();
    return bf.run(1, 1, 0) ? Status::Sat : Status::Unsat;
}

MinNextResult min_next_excluded(const Params& p, const std::vector<std::uint64_t>& fixed,
                                std::uint64_t cap, std::uint64_t node_budget,
                                bool with_side_condition) {
    if (fixed.size() < 2 || fixed[0] != p.u || fixed[1] != p.v)
        throw std::invalid_argument("min_next_excluded: fixed must begin (u, v, ...)");
    if (cap <= fixed.back())
        throw std::invalid_argument("min_next_excluded: cap must exceed max(fixed)");

    MinNextResult res;
    for (std::uint64_t t = fixed.back() + 1; t <= cap; ++t) {
        PrefixSpec spec;
        spec.excluded = fixed;
        spec.excluded.push_back(t);
        spec.window = t;
        if (with_side_condition) spec.side_condition_u = p.u;
        SearchOutcome out = search_exact(spec, {}, node_budget);
        res.nodes_total += out.nodes_explored;
        res.sweep.emplace_back(t, out.status);
        if (out.status == Status::Limit) {
            res.status = Status::Limit;
            return res;
        }
        if (out.status == Status::Sat) {
            res.status = Status::Sat;
            res.value = t;
            res.witness = std::move(out.witness);
            return res;
        }
    }
    res.status = Status::Unsat;
    return res;
}

NonexistenceReport check_nonexistence(const std::vector<std::uint64_t>& excluded,
                                      std::uint64_t window_ceiling,
                                      std::uint64_t node_budget) {
    NonexistenceReport rep;
    rep.excluded = excluded;
    std::uint64_t w = excluded.back();
    for (;;) {
        PrefixSpec spec;
        spec.excluded = excluded;
        spec.window = w;
        SearchOutcome out = search_exact(spec, {}, node_budget);
        rep.window = w;
        const Status st = out.status;
        rep.outcome = std::move(out);
        if (st != Status::Sat) return rep;  // UNSAT certificate or budget limit
        if (w * 2 > window_ceiling) {
            rep.ceiling_reached = true;
            return rep;
        }
        w *= 2;
    }
}

StructureReport analyze_witness(const SearchWitness& w, const Params& p,
                                const std::vector<std::uint64_t>& excluded) {
    StructureReport rep;
    if (excluded.size() < 2 || excluded[0] != p.u || excluded[1] != p.v) {
        rep.violations.push_back("excluded prefix does not begin (u, v)");
        return rep;
    }
    const auto& seq = w.a_seq.elements();
    const std::uint64_t u = p.u, v = p.v;

    // Interval property of the sub-u prefix: P({a_1..a_i}) = [0, running sum].
    {
        std::uint64_t running = 0;
        std::vector<std::uint64_t> prefix;
        for (std::uint64_t a : seq) {
            if (a >= u) break;
            prefix.push_back(a);
            running += a;
            if (!psa(IntSeq(prefix), running).is_full_interval()) {
                rep.violations.push_back("sub-u prefix is not an interval at element " +
                                         std::to_string(a));
                break;
            }
        }
    }

    // Locate the prefix realizing [0, u+v] \ {u, v}.
    const std::vector<std::uint64_t> want{u, v};
    std::size_t split = 0;
    for (std::size_t len = 1; len <= seq.size(); ++len) {
        std::vector<std::uint64_t> prefix(seq.begin(), seq.begin() + len);
        if (psa(IntSeq(prefix), u + v).complement() == want) {
            if (len == seq.size() || seq[len] > u + 1) {
                split = len;
                break;
            }
        }
    }
    if (split == 0) {
        rep.violations.push_back("no prefix realizes [0,u+v] minus {u,v}");
        return rep;
    }
    rep.interval_prefix_len = split;

    // Divisibility by v+1 of the tail, up to the index m where the running
    // tail sum plus v first reaches the last fixed excluded value.
    const std::uint64_t d_last = excluded.back();
    std::uint64_t tail_sum = 0;
    for (std::size_t i = split; i < seq.size(); ++i) {
        if (tail_sum + v >= d_last) break;
        if (seq[i] % (v + 1) != 0)
            rep.violations.push_back(std::to_string(seq[i]) + " not divisible by v+1");
        tail_sum += seq[i];
    }
    return rep;
}

}  // namespace burrlab
