#include "parhom/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "parhom/automorphism.hpp"
#include "parhom/corpus.hpp"
#include "parhom/errors.hpp"
#include "parhom/gadgets.hpp"
#include "parhom/homcount.hpp"
#include "parhom/parity.hpp"
#include "parhom/reductions.hpp"

namespace parhom {

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fraction(int good, int total, const std::string& what) {
    return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random cactus with the given property, drawing orders from [lo, hi].
Graph draw_cactus(std::mt19937_64& rng, int lo, int hi, const std::function<bool(const Graph&)>& want) {
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        auto g = random_cactus(uniform(rng, lo, hi), rng, 8);
        if (want(g)) return g;
    }
    throw BudgetError("no suitable random cactus found");
}

bool involution_free(const Graph& g) { return !find_involution(g).has_value(); }

HardnessGadget corrupted(HardnessGadget g) {
    g.outs.push_back(g.selector);
    return g;
}

Outcome involution_congruence(std::mt19937_64& rng) {
    int good = 0;
    const int total = 200;
    for (int k = 0; k < total; ++k) {
        auto h = draw_cactus(rng, 2, 10, [](const Graph& g) { return !involution_free(g); });
        auto g = random_graph(uniform(rng, 1, 6), 0.5, rng);
        auto sigma = *find_involution(h);
        auto fixed = fixed_subgraph(h, sigma).graph;
        if ((count_homs(g, h) % 2) == (count_homs(g, fixed) % 2)) ++good;
    }
    return {good == total, fraction(good, total, "pairs agree")};
}

Outcome reduction_uniqueness(std::mt19937_64& rng) {
    int good = 0;
    const int total = 100;
    for (int k = 0; k < total; ++k) {
        auto h = random_cactus(uniform(rng, 2, 12), rng, 8);
        auto first = involution_free_reduction(h, rng()).final_graph;
        bool same = true;
        for (int order = 1; order < 5; ++order)
            same &= are_isomorphic(first, involution_free_reduction(h, rng()).final_graph);
        good += same;
    }
    return {good == total, fraction(good, total, "graphs with isomorphic reductions")};
}

Outcome gadget_coverage(std::mt19937_64& rng, const SelfcheckOptions& opt) {
    int good = 0, total = 0;
    std::string first_failure;
    auto attempt = [&](const Graph& g) {
        ++total;
        try {
            auto gad = find_hardness_gadget(g);
            if (opt.corrupt_gadgets) gad = corrupted(gad);
            if (verify_hardness_gadget(g, gad).ok()) {
                ++good;
                return;
            }
            if (first_failure.empty()) first_failure = "gadget failed verification: " + serialize_graph(g);
        } catch (const Error& e) {
            if (first_failure.empty()) first_failure = e.what();
        }
    };
    int exhaustive = 0;
    for (int n = 2; n <= opt.exhaustive_max_order; ++n)
        for (const auto& g : all_cacti(n))
            if (involution_free(g)) {
                attempt(g);
                ++exhaustive;
            }
    for (int k = 0; k < 300; ++k) attempt(draw_cactus(rng, 11, 14, involution_free));
    std::string detail = fraction(good, total, "graphs") + " (" + std::to_string(exhaustive) + " exhaustive)";
    if (!first_failure.empty()) detail += "; first failure: " + first_failure;
    return {good == total, detail};
}

Outcome search_agreement(std::mt19937_64& rng, const SelfcheckOptions& opt) {
    std::vector<Graph> graphs = {spider_tree()};
    for (int k = 0; k < 20; ++k) graphs.push_back(draw_cactus(rng, 3, 9, involution_free));
    int good = 0;
    std::size_t visited = 0;
    for (const auto& g : graphs) {
        auto built = normalized(find_hardness_gadget(g));
        if (opt.corrupt_gadgets) built = normalized(corrupted(built));
        auto all = brute_force_gadget_search(g, default_search_bounds(g));
        visited += all.size();
        good += std::any_of(all.begin(), all.end(), [&](const HardnessGadget& x) { return normalized(x) == built; });
    }
    const int total = static_cast<int>(graphs.size());
    return {good == total,
            fraction(good, total, "searches contain the constructed gadget") + ", " +
                std::to_string(visited) + " records in total"};
}

Outcome reduction_congruence() {
    std::vector<std::pair<std::string, Graph>> sources = {{"K1", Graph(1)},        {"K2", path_graph(2)},
                                                          {"P3", path_graph(3)},    {"C3", cycle_graph(3)},
                                                          {"P4", path_graph(4)}};
    std::vector<std::pair<std::string, Graph>> hosts = {{"spider", spider_tree()},
                                                        {"nine-cycle-threefold", threefold_nine_cycle()}};
    int good = 0, total = 0;
    std::string bad;
    for (const auto& [hn, h] : hosts) {
        auto gad = find_hardness_gadget(h);
        for (const auto& [gn, g] : sources) {
            ++total;
            if (verify_reduction(g, h, gad).ok())
                ++good;
            else
                bad += " " + gn + "x" + hn;
        }
    }
    return {good == total, fraction(good, total, "pairs Ok") + (bad.empty() ? "" : "; mismatches:" + bad)};
}

Outcome pinned_endomorphisms() {
    int good = 0, total = 0;
    for (int n = 1; n <= 9; ++n)
        for (const auto& g : all_cacti(n)) {
            if (!involution_free(g)) continue;
            ++total;
            auto autos = automorphisms(g);
            std::sort(autos.begin(), autos.end());
            good += orbit_preserving_endomorphisms(g) == autos;
        }
    auto c4 = cycle_graph(4);
    bool exceeds = orbit_preserving_endomorphisms(c4).size() > automorphisms(c4).size();
    return {good == total && exceeds,
            fraction(good, total, "graphs with equal sets") + "; 4-cycle has extra endomorphisms: " +
                (exceeds ? "yes" : "no")};
}

Outcome reference_verdicts() {
    struct Case {
        const char* name;
        Verdict expected;
    };
    std::vector<Case> cases = {{"square-hard-a", Verdict::parity_p_complete},
                               {"square-easy", Verdict::polynomial_time},
                               {"square-hard-b", Verdict::parity_p_complete},
                               {"nine-cycle-threefold", Verdict::parity_p_complete},
                               {"twelve-cycle-fourfold", Verdict::polynomial_time}};
    int good = 0;
    std::string got;
    for (const auto& c : cases) {
        auto v = classify(named_graph(c.name)).verdict;
        good += v == c.expected;
        got += std::string(got.empty() ? "" : ", ") + c.name + "=" + (v == Verdict::polynomial_time ? "easy" : "hard");
    }
    return {good == static_cast<int>(cases.size()), got};
}

Outcome walk_partition(std::mt19937_64& rng) {
    int good = 0, total = 0;
    while (total < 100) {
        auto g = random_cactus(uniform(rng, 2, 12), rng, 8);
        int u = uniform(rng, 0, g.order() - 1), v = uniform(rng, 0, g.order() - 1);
        if (u == v) continue;
        auto p = unique_path(g, u, v);
        if (!p || p->length() > 6) continue;
        ++total;
        auto part = t_walk_partition(g, *p);
        good += BigNat(part.total()) == walk_count(g, u, v, p->length() + 2);
    }
    return {good == total, fraction(good, total, "paths with matching totals")};
}

Outcome counter_agreement(std::mt19937_64& rng) {
    int good = 0;
    const int total = 500;
    for (int k = 0; k < total; ++k) {
        auto g = random_graph(uniform(rng, 1, 5), 0.5, rng);
        auto h = random_graph(uniform(rng, 1, 5), 0.5, rng);
        PinningFunction pin;
        for (int v = 0; v < g.order(); ++v) {
            if (uniform(rng, 0, 2) != 0) continue;
            std::vector<int> allowed;
            for (int w = 0; w < h.order(); ++w)
                if (uniform(rng, 0, 1)) allowed.push_back(w);
            pin.restrict(v, allowed);
        }
        bool plain = count_homs_brute_force(g, h, {}) == count_homs_tree_decomposition(g, h, {});
        bool pinned = count_homs_brute_force(g, h, pin) == count_homs_tree_decomposition(g, h, pin);
        good += plain && pinned;
    }
    return {good == total, fraction(good, total, "pairs agree pinned and unpinned")};
}

Outcome weighted_independent_sets(std::mt19937_64& rng) {
    int good = 0;
    const int total = 100;
    const std::uint64_t weights[] = {1, 3, 5};
    for (int k = 0; k < total; ++k) {
        auto g = random_graph(uniform(rng, 1, 15), 0.3, rng);
        auto lambda = weights[uniform(rng, 0, 2)], mu = weights[uniform(rng, 0, 2)];
        good += z_general_is(g, lambda, mu) == independent_set_parity(g);
    }
    return {good == total, fraction(good, total, "graphs agree")};
}

}  // namespace

bool SelfcheckReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass; });
}

std::string SelfcheckReport::text(bool timing) const {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(1);
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << ": " << r.detail;
        if (timing) {
            out << " [" << r.seconds << "s";
            if (r.limit_seconds > 0) out << ", limit " << r.limit_seconds << "s";
            out << "]";
        }
        out << '\n';
    }
    return out.str();
}

SelfcheckReport run_selfcheck(const SelfcheckOptions& opt) {
    struct Criterion {
        const char* name;
        double limit;
        std::function<Outcome(std::mt19937_64&)> run;
    };
    std::vector<Criterion> criteria = {
        {"involution congruence", 60, involution_congruence},
        {"reduction uniqueness", 0, reduction_uniqueness},
        {"gadget coverage", 600, [&](std::mt19937_64& rng) { return gadget_coverage(rng, opt); }},
        {"search agreement", 0, [&](std::mt19937_64& rng) { return search_agreement(rng, opt); }},
        {"reduction congruence", 300, [](std::mt19937_64&) { return reduction_congruence(); }},
        {"pinned endomorphisms", 0, [](std::mt19937_64&) { return pinned_endomorphisms(); }},
        {"reference verdicts", 0, [](std::mt19937_64&) { return reference_verdicts(); }},
        {"walk partition", 0, walk_partition},
        {"counter agreement", 0, counter_agreement},
        {"weighted independent sets", 0, weighted_independent_sets},
    };
    SelfcheckReport report;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        const auto& c = criteria[static_cast<std::size_t>(id - 1)];
        CriterionResult r;
        r.id = id;
        r.name = c.name;
        r.limit_seconds = c.limit;
        std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(id));
        auto start = std::chrono::steady_clock::now();
        try {
            auto o = c.run(rng);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
            r.pass = false;
            r.detail += "; over the time limit";
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace parhom
