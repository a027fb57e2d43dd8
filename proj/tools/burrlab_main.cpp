// burrlab: construct, verify, and rediscover critical complement values
// for subset-sum sequences.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "burrlab/closed_forms.hpp"
#include "burrlab/construction.hpp"
#include "burrlab/oracle.hpp"
#include "burrlab/sumset.hpp"

using json = nlohmann::ordered_json;
using namespace burrlab;

namespace {

constexpr const char* kVersion = "burrlab 0.1.0";

// Exit codes: 0 success/agreement/SAT, 1 mathematical negative
// (mismatch/UNSAT), 2 usage or hypothesis error, 3 resource limit.
enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kLimit = 3 };

struct Output {
    std::string emit = "text";
    bool no_cache = false;
};

std::string cache_path() {
    if (const char* p = std::getenv("BURRLAB_CACHE")) return p;
    return ".burrlab-cache.jsonl";
}

// Append-only run log. The payload is the deterministic result only;
// wall time and timestamp live beside it so replays stay byte-identical.
void record_run(const Output& out, const std::string& command, const json& inputs,
                const json& payload, std::int64_t millis) {
    if (out.no_cache) return;
    json rec;
    rec["command"] = command;
    rec["inputs"] = inputs;
    rec["payload"] = payload;
    rec["millis"] = millis;
    rec["timestamp"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    rec["version"] = kVersion;
    std::ofstream f(cache_path(), std::ios::app);
    if (f) f << rec.dump() << "\n";
}

json witness_json(const SearchWitness& w) {
    json j;
    j["sequence"] = w.a_seq.elements();
    j["complement"] = w.complement;
    return j;
}

json outcome_json(const SearchOutcome& o, const std::vector<std::uint64_t>& excluded,
                  std::uint64_t window, bool with_millis) {
    json j;
    j["status"] = status_name(o.status);
    if (o.witness) j["witness"] = witness_json(*o.witness);
    j["excluded"] = excluded;
    j["window"] = window;
    j["nodes"] = o.nodes_explored;
    if (with_millis) j["millis"] = o.millis;
    if (o.status == Status::Unsat) {
        j["pruning"] = {{"excluded_hit", o.pruning.excluded_hit},
                        {"gap_cap", o.pruning.gap_cap},
                        {"candidate_skip", o.pruning.candidate_skip}};
    }
    return j;
}

int cmd_construct(std::uint64_t u, std::uint64_t v, std::uint64_t k, const Output& out) {
    Params p{u, v};
    try {
        validate_params(p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    GeneratorPlan plan = build_plan(p, k);
    VerificationReport rep = verify_construction(plan);

    json payload;
    payload["u"] = u;
    payload["v"] = v;
    payload["k"] = k;
    payload["base"] = plan.base.elements();
    payload["generators"] = plan.gens.elements();
    payload["sequence"] = plan.full_sequence().elements();
    payload["decomposition"] = {{"s", plan.dec.s},
                                {"r", plan.dec.r},
                                {"eps", plan.dec.eps},
                                {"r_list", plan.dec.r_list}};
    payload["window"] = rep.window;
    payload["computed_complement"] = rep.computed;
    payload["predicted_complement"] = rep.predicted;
    payload["match"] = rep.match;

    if (out.emit == "json") {
        std::cout << payload.dump() << "\n";
    } else {
        std::cout << "A = " << json(plan.full_sequence().elements()).dump() << "\n"
                  << "window " << rep.window << "\n"
                  << "complement " << json(rep.computed).dump() << "\n"
                  << "predicted  " << json(rep.predicted).dump() << "\n"
                  << "match " << (rep.match ? "true" : "false") << "\n";
    }
    record_run(out, "construct", {{"u", u}, {"v", v}, {"k", k}}, payload, 0);
    return rep.match ? kOk : kNegative;
}

int cmd_critical(std::uint64_t u, std::uint64_t v, std::uint64_t max_k, bool use_oracle,
                 bool no_side, std::uint64_t cap, std::uint64_t budget, const Output& out) {
    Params p{u, v};
    try {
        validate_params(p);
        if (max_k < 2) throw std::invalid_argument("--max-k must be >= 2");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    CriticalTable table = critical_table(p, max_k);
    if (cap == 0) cap = 2 * e_closed(p, max_k);

    bool all_agree = true, hit_limit = false;
    json rows = json::array();
    std::int64_t total_ms = 0;
    for (const auto& entry : table.entries) {
        json row;
        row["k"] = entry.k;
        row["e"] = entry.value;
        row["provenance"] = provenance_name(entry.provenance);
        if (use_oracle) {
            if (entry.k <= 2) {
                row["oracle"] = entry.value;  // e_1 = u, e_2 = v by definition
                row["agree"] = true;
            } else {
                std::vector<std::uint64_t> fixed;
                for (std::uint64_t i = 1; i < entry.k; ++i)
                    fixed.push_back(e_closed(p, i));
                const auto t0 = std::chrono::steady_clock::now();
                MinNextResult r = min_next_excluded(p, fixed, cap, budget, !no_side);
                total_ms += std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
                if (r.status == Status::Limit) {
                    row["oracle"] = "limit";
                    row["agree"] = false;
                    hit_limit = true;
                } else if (r.status == Status::Unsat) {
                    row["oracle"] = "unsat-to-cap";
                    row["agree"] = false;
                    all_agree = false;
                } else {
                    row["oracle"] = r.value;
                    row["agree"] = r.value == entry.value;
                    all_agree = all_agree && r.value == entry.value;
                }
            }
        }
        rows.push_back(row);
    }

    json payload;
    payload["u"] = u;
    payload["v"] = v;
    payload["rows"] = rows;
    if (use_oracle) payload["all_agree"] = all_agree;

    if (out.emit == "json") {
        std::cout << payload.dump() << "\n";
    } else if (out.emit == "csv") {
        std::cout << "k,e_k,provenance" << (use_oracle ? ",oracle,agree" : "") << "\n";
        for (const auto& row : rows) {
            std::cout << row["k"] << "," << row["e"] << ","
                      << row["provenance"].get<std::string>();
            if (use_oracle)
                std::cout << "," << (row["oracle"].is_number()
                                         ? std::to_string(row["oracle"].get<std::uint64_t>())
                                         : row["oracle"].get<std::string>())
                          << "," << (row["agree"].get<bool>() ? "true" : "false");
            std::cout << "\n";
        }
    } else {
        for (const auto& row : rows) {
            std::cout << "e_" << row["k"] << " = " << row["e"];
            if (use_oracle) std::cout << "  oracle " << row["oracle"].dump();
            std::cout << "\n";
        }
    }
    record_run(out, "critical",
               {{"u", u}, {"v", v}, {"max_k", max_k}, {"oracle", use_oracle},
                {"no_side", no_side}, {"cap", cap}},
               payload, total_ms);
    if (hit_limit) return kLimit;
    // The closed forms describe the side-conditioned minimum only; the
    // free variant is reported without an agreement claim.
    return (all_agree || no_side) ? kOk : kNegative;
}

int cmd_search(const std::vector<std::uint64_t>& excluded, std::uint64_t window,
               std::optional<std::uint64_t> side_u, std::uint64_t budget, const Output& out) {
    PrefixSpec spec;
    spec.excluded = excluded;
    spec.window = window;
    spec.side_condition_u = side_u;
    try {
        spec.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    SearchOutcome o = search_exact(spec, {}, budget);
    json shown = outcome_json(o, excluded, window, true);
    std::cout << shown.dump() << "\n";
    record_run(out, "search",
               {{"excluded", excluded},
                {"window", window},
                {"side_u", side_u ? json(*side_u) : json(nullptr)}},
               outcome_json(o, excluded, window, false), o.millis);
    if (o.status == Status::Sat) return kOk;
    if (o.status == Status::Unsat) return kNegative;
    return kLimit;
}

int cmd_nonexist(const std::vector<std::uint64_t>& excluded, std::uint64_t ceiling,
                 std::uint64_t budget, const Output& out) {
    try {
        PrefixSpec probe;
        probe.excluded = excluded;
        probe.window = excluded.empty() ? 0 : excluded.back();
        probe.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    NonexistenceReport rep = check_nonexistence(excluded, ceiling, budget);
    json payload = outcome_json(rep.outcome, rep.excluded, rep.window, false);
    payload["ceiling_reached"] = rep.ceiling_reached;
    json shown = payload;
    shown["millis"] = rep.outcome.millis;
    std::cout << shown.dump() << "\n";
    record_run(out, "nonexist", {{"excluded", excluded}, {"ceiling", ceiling}}, payload,
               rep.outcome.millis);
    if (rep.outcome.status == Status::Sat) return kOk;
    if (rep.outcome.status == Status::Unsat) return kNegative;
    return kLimit;
}

int cmd_bench(std::uint64_t elements, std::uint64_t max_element, std::uint64_t window,
              const Output& out) {
    std::mt19937_64 rng(0x5eed);
    std::vector<std::uint64_t> pool;
    if (elements > 0) {
        std::uniform_int_distribution<std::uint64_t> dist(1, std::max<std::uint64_t>(max_element, 1));
        std::set<std::uint64_t> seen;
        while (seen.size() < elements && seen.size() < max_element) seen.insert(dist(rng));
        pool.assign(seen.begin(), seen.end());
    }
    IntSeq seq(pool);

    const auto t0 = std::chrono::steady_clock::now();
    SumsetMask mask = psa(seq, window);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();

    // Oracle node throughput on a fixed small instance.
    PrefixSpec spec;
    spec.excluded = {4, 17, 22};
    spec.window = 22;
    spec.side_condition_u = 4;
    const auto t1 = std::chrono::steady_clock::now();
    SearchOutcome o = search_exact(spec);
    const auto omicros = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - t1)
                             .count();

    json payload;
    payload["elements"] = seq.size();
    payload["window"] = window;
    payload["psa_micros"] = micros;
    payload["elements_per_sec"] =
        micros > 0 ? seq.size() * 1'000'000 / static_cast<std::uint64_t>(micros) : 0;
    payload["mask_bits_set"] =
        static_cast<std::uint64_t>(window + 1 - mask.complement().size());
    payload["oracle_nodes"] = o.nodes_explored;
    payload["oracle_micros"] = omicros;
    payload["oracle_nodes_per_sec"] =
        omicros > 0 ? o.nodes_explored * 1'000'000 / static_cast<std::uint64_t>(omicros) : 0;

    if (out.emit == "json")
        std::cout << payload.dump() << "\n";
    else
        std::cout << "psa: " << seq.size() << " elements, window " << window << ", "
                  << micros << " us\noracle: " << o.nodes_explored << " nodes, " << omicros
                  << " us\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subset-sum complement construction, closed forms, and exhaustive oracle"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Output out;
    std::uint64_t u = 0, v = 0, k = 0, max_k = 6, cap = 0, window = 0;
    std::uint64_t ceiling = kDefaultWindowCeiling, budget = kDefaultNodeBudget;
    std::uint64_t elements = 1000, max_element = 10000, bench_window = 1'000'000;
    std::uint64_t threads = 1;
    bool use_oracle = false;
    std::vector<std::uint64_t> excluded;
    std::optional<std::uint64_t> side_u;
    std::uint64_t side_u_raw = 0;

    app.add_option("--threads", threads, "Max oracle worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--no-cache", out.no_cache, "Disable the run-record cache");
    app.fallthrough();

    auto* construct = app.add_subcommand("construct", "Build and verify the explicit sequence");
    construct->add_option("--u", u)->required();
    construct->add_option("--v", v)->required();
    construct->add_option("--k", k, "Tail element count");
    construct->add_option("--emit", out.emit)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* critical = app.add_subcommand("critical", "Tabulate critical values e_k");
    critical->add_option("--u", u)->required();
    critical->add_option("--v", v)->required();
    critical->add_option("--max-k", max_k);
    critical->add_flag("--oracle", use_oracle, "Cross-check rows with the search oracle");
    bool no_side = false;
    critical->add_flag("--no-side", no_side,
                       "Oracle sweep without the side condition (values reported, "
                       "no agreement asserted)");
    critical->add_option("--cap", cap, "Oracle sweep ceiling (0 = auto)");
    critical->add_option("--node-budget", budget);
    critical->add_option("--emit", out.emit)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* search = app.add_subcommand("search", "Prefix-feasibility search");
    search->add_option("--excluded", excluded, "Comma-separated excluded values")
        ->required()
        ->delimiter(',');
    search->add_option("--window", window)->required();
    auto* side_opt = search->add_option("--side-u", side_u_raw, "Enforce the side condition at u");
    search->add_option("--node-budget", budget);

    auto* nonexist = app.add_subcommand("nonexist", "Escalating-window nonexistence check");
    nonexist->add_option("--excluded", excluded)->required()->delimiter(',');
    nonexist->add_option("--ceiling", ceiling, "Window escalation ceiling");
    nonexist->add_option("--node-budget", budget);

    auto* bench = app.add_subcommand("bench", "Kernel and oracle throughput");
    bench->add_option("--elements", elements);
    bench->add_option("--max-element", max_element);
    bench->add_option("--window", bench_window);
    bench->add_option("--emit", out.emit)->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (side_opt->count() > 0) side_u = side_u_raw;

    try {
        if (construct->parsed()) return cmd_construct(u, v, k, out);
        if (critical->parsed())
            return cmd_critical(u, v, max_k, use_oracle, no_side, cap, budget, out);
        if (search->parsed()) return cmd_search(excluded, window, side_u, budget, out);
        if (nonexist->parsed()) return cmd_nonexist(excluded, ceiling, budget, out);
        if (bench->parsed()) return cmd_bench(elements, max_element, bench_window, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
