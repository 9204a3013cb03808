#include "parhom/homcount.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <unordered_map>

#include "parhom/errors.hpp"

namespace parhom {

void PinningFunction::restrict(int source, std::vector<int> allowed) {
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
    allowed_[source] = std::move(allowed);
}

std::vector<std::vector<int>> PinningFunction::domains(int source_order, int target_order) const {
    std::vector<int> everything(static_cast<std::size_t>(target_order));
    for (int h = 0; h < target_order; ++h) everything[static_cast<std::size_t>(h)] = h;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(source_order), everything);
    for (const auto& [v, allowed] : allowed_) {
        if (v < 0 || v >= source_order)
            throw PreconditionError("pinned vertex " + std::to_string(v) + " not in source graph");
        for (int h : allowed)
            if (h < 0 || h >= target_order)
                throw PreconditionError("pinned image " + std::to_string(h) + " not in target graph");
        out[static_cast<std::size_t>(v)] = allowed;
    }
    return out;
}

PinningFunction parse_pinning(std::string_view text) {
    PinningFunction p;
    std::set<int> seen;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string line(text.substr(start, end - start));
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'v: h1 h2 ...'");
        std::istringstream head(line.substr(0, colon));
        int v = -1;
        std::string extra;
        if (!(head >> v) || (head >> extra) || v < 0) throw ParseError(line_no, "bad source vertex");
        if (!seen.insert(v).second) throw ParseError(line_no, "vertex " + std::to_string(v) + " pinned twice");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> allowed;
        std::string token;
        while (rest >> token) {
            int h = -1;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), h);
            if (ec != std::errc() || ptr != token.data() + token.size() || h < 0)
                throw ParseError(line_no, "bad target vertex '" + token + "'");
            allowed.push_back(h);
        }
        p.restrict(v, std::move(allowed));
    }
    return p;
}

std::string serialize_pinning(const PinningFunction& p) {
    std::ostringstream out;
    for (const auto& [v, allowed] : p.entries()) {
        out << v << ':';
        for (int h : allowed) out << ' ' << h;
        out << '\n';
    }
    return out.str();
}

CountBudget CountBudget::from_environment() {
    CountBudget b;
    const char* env = std::getenv("PARHOM_BUDGET");
    if (env == nullptr || *env == '\0') return b;
    std::istringstream parts{std::string(env)};
    std::string item;
    while (std::getline(parts, item, ',')) {
        auto eq = item.find('=');
        try {
            if (eq == std::string::npos) {
                b.brute_force_assignments = b.table_entries = std::stod(item);
                continue;
            }
            auto key = item.substr(0, eq);
            auto value = std::stod(item.substr(eq + 1));
            if (key == "brute") b.brute_force_assignments = value;
            else if (key == "table") b.table_entries = value;
            else if (key == "width") b.width_cap = static_cast<int>(value);
            else throw PreconditionError("unknown PARHOM_BUDGET key '" + key + "'");
        } catch (const std::logic_error&) {
            throw PreconditionError("malformed PARHOM_BUDGET entry '" + item + "'");
        }
    }
    return b;
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
    const int n = g.order();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    TreeDecomposition td;
    std::vector<int> bag_of(static_cast<std::size_t>(n), -1);

    for (int round = 0; round < n; ++round) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            const auto& nb = adj[static_cast<std::size_t>(v)];
            long fill = 0;
            for (auto a = nb.begin(); a != nb.end(); ++a)
                for (auto b = std::next(a); b != nb.end(); ++b)
                    if (!adj[static_cast<std::size_t>(*a)].count(*b)) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        const auto& nb = adj[static_cast<std::size_t>(best)];
        std::vector<int> bag{best};
        bag.insert(bag.end(), nb.begin(), nb.end());
        for (int a : nb)
            for (int b : nb)
                if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
        for (int a : nb) adj[static_cast<std::size_t>(a)].erase(best);
        gone[static_cast<std::size_t>(best)] = 1;
        bag_of[static_cast<std::size_t>(best)] = static_cast<int>(td.bags.size());
        td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        td.eliminated.push_back(best);
    }
    // Parent: the bag of the earliest-eliminated later neighbour.
    td.parent.assign(td.bags.size(), -1);
    for (std::size_t k = 0; k < td.bags.size(); ++k) {
        int parent = -1;
        for (int v : td.bags[k]) {
            if (v == td.eliminated[k]) continue;
            int b = bag_of[static_cast<std::size_t>(v)];
            if (parent < 0 || b < parent) parent = b;
        }
        td.parent[k] = parent;
    }
    return td;
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
    const auto nb = td.bags.size();
    if (td.parent.size() != nb) return false;
    for (std::size_t k = 0; k < nb; ++k)
        if (td.parent[k] >= static_cast<int>(nb) || td.parent[k] == static_cast<int>(k)) return false;
    for (int v = 0; v < g.order(); ++v) {
        bool covered = false;
        for (const auto& bag : td.bags) covered |= std::binary_search(bag.begin(), bag.end(), v);
        if (!covered) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags)
            covered |= std::binary_search(bag.begin(), bag.end(), u) && std::binary_search(bag.begin(), bag.end(), v);
        if (!covered) return false;
    }
    // Bags holding v must be connected through parent links.
    for (int v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> holding;
        for (std::size_t k = 0; k < nb; ++k)
            if (std::binary_search(td.bags[k].begin(), td.bags[k].end(), v)) holding.push_back(k);
        int tops = 0;
        for (auto k : holding) {
            int p = td.parent[k];
            if (p < 0 || !std::binary_search(td.bags[static_cast<std::size_t>(p)].begin(),
                                             td.bags[static_cast<std::size_t>(p)].end(), v))
                ++tops;
        }
        if (tops != 1) return false;
    }
    return true;
}

namespace {

struct ExactRing {
    using Value = BigNat;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static void add(Value& a, const Value& b) { a += b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static bool is_zero(const Value& a) { return a.is_zero(); }
};

struct ParityRing {
    using Value = std::uint8_t;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static void add(Value& a, Value b) { a ^= b; }
    static Value mul(Value a, Value b) { return a & b; }
    static bool is_zero(Value a) { return a == 0; }
};

template <class Ring>
struct Factor {
    std::vector<int> scope;
    std::vector<typename Ring::Value> values;
};

double domain_product(const std::vector<std::vector<int>>& dom, const std::vector<int>& vars) {
    double p = 1;
    for (int v : vars) p *= static_cast<double>(dom[static_cast<std::size_t>(v)].size());
    return p;
}

std::string fmt(double x) {
    std::ostringstream o;
    o << x;
    return o.str();
}

void check_decomposition_budget(const TreeDecomposition& td, const std::vector<std::vector<int>>& dom,
                                const CountBudget& budget) {
    if (td.width > budget.width_cap)
        throw BudgetError("decomposition width " + std::to_string(td.width) + " exceeds cap " +
                          std::to_string(budget.width_cap));
    for (const auto& bag : td.bags) {
        double size = domain_product(dom, bag);
        if (size > budget.table_entries)
            throw BudgetError("decomposition table of " + fmt(size) + " entries exceeds budget " +
                              fmt(budget.table_entries));
    }
}

// Variable elimination along the min-fill order: each elimination step
// multiplies the factors touching one vertex over its bag and sums it out.
template <class Ring>
typename Ring::Value eliminate(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& dom,
                               const TreeDecomposition& td) {
    using Value = typename Ring::Value;
    std::vector<Factor<Ring>> pool;
    for (auto [u, v] : g.edges()) {
        const auto& du = dom[static_cast<std::size_t>(u)];
        const auto& dv = dom[static_cast<std::size_t>(v)];
        Factor<Ring> f{{u, v}, std::vector<Value>(du.size() * dv.size(), Ring::zero())};
        for (std::size_t a = 0; a < du.size(); ++a)
            for (std::size_t b = 0; b < dv.size(); ++b)
                if (h.adjacent(du[a], dv[b])) f.values[a * dv.size() + b] = Ring::one();
        pool.push_back(std::move(f));
    }
    Value total = Ring::one();
    for (std::size_t step = 0; step < td.eliminated.size(); ++step) {
        const int v = td.eliminated[step];
        std::vector<Factor<Ring>> touching, rest;
        for (auto& f : pool) (std::binary_search(f.scope.begin(), f.scope.end(), v) ? touching : rest).push_back(std::move(f));
        pool = std::move(rest);

        std::vector<int> bag{v};
        for (const auto& f : touching) bag.insert(bag.end(), f.scope.begin(), f.scope.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        const std::size_t vpos = static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());

        std::vector<std::size_t> radix(bag.size());
        for (std::size_t k = 0; k < bag.size(); ++k) radix[k] = dom[static_cast<std::size_t>(bag[k])].size();

        Factor<Ring> out;
        for (std::size_t k = 0; k < bag.size(); ++k)
            if (k != vpos) out.scope.push_back(bag[k]);
        std::size_t out_size = 1;
        for (std::size_t k = 0; k < bag.size(); ++k)
            if (k != vpos) out_size *= radix[k];
        out.values.assign(out_size, Ring::zero());

        // Strides of each factor and of the output, expressed per bag position.
        auto strides_for = [&](const std::vector<int>& scope) {
            std::vector<std::size_t> s(bag.size(), 0);
            std::size_t stride = 1;
            for (std::size_t k = scope.size(); k-- > 0;) {
                auto pos = static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), scope[k]) - bag.begin());
                s[pos] = stride;
                stride *= radix[pos];
            }
            return s;
        };
        std::vector<std::vector<std::size_t>> fstrides;
        for (const auto& f : touching) fstrides.push_back(strides_for(f.scope));
        auto ostride = strides_for(out.scope);

        bool empty_domain = false;
        for (auto r : radix) empty_domain |= (r == 0);
        if (!empty_domain) {
            std::vector<std::size_t> digit(bag.size(), 0);
            std::vector<std::size_t> fidx(touching.size(), 0);
            std::size_t oidx = 0;
            while (true) {
                Value prod = Ring::one();
                for (std::size_t f = 0; f < touching.size() && !Ring::is_zero(prod); ++f)
                    prod = Ring::mul(prod, touching[f].values[fidx[f]]);
                if (!Ring::is_zero(prod)) Ring::add(out.values[oidx], prod);
                std::size_t k = bag.size();
                while (k-- > 0) {
                    if (++digit[k] < radix[k]) {
                        for (std::size_t f = 0; f < touching.size(); ++f) fidx[f] += fstrides[f][k];
                        oidx += ostride[k];
                        break;
                    }
                    for (std::size_t f = 0; f < touching.size(); ++f) fidx[f] -= fstrides[f][k] * (radix[k] - 1);
                    oidx -= ostride[k] * (radix[k] - 1);
                    digit[k] = 0;
                }
                if (k == static_cast<std::size_t>(-1)) break;
            }
        }
        if (out.scope.empty()) {
            total = Ring::mul(total, out.values.front());
            if (Ring::is_zero(total)) return total;
        } else {
            pool.push_back(std::move(out));
        }
    }
    for (const auto& f : pool) total = Ring::mul(total, f.values.front());
    return total;
}

std::uint64_t brute_force_leaves(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& dom) {
    // Visit vertices in BFS order so that constraints bite early.
    std::vector<int> order;
    for (const auto& comp : connected_components(g)) {
        auto dist = bfs_distances(g, comp.front());
        std::vector<int> c = comp;
        std::stable_sort(c.begin(), c.end(), [&](int a, int b) {
            return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
        });
        order.insert(order.end(), c.begin(), c.end());
    }
    std::vector<int> image(static_cast<std::size_t>(g.order()), -1);
    std::uint64_t count = 0;
    auto extend = [&](auto& self, std::size_t k) -> void {
        if (k == order.size()) {
            ++count;
            return;
        }
        const int v = order[k];
        for (int x : dom[static_cast<std::size_t>(v)]) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                int y = image[static_cast<std::size_t>(w)];
                if (y >= 0 && !h.adjacent(x, y)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = x;
            self(self, k + 1);
        }
        image[static_cast<std::size_t>(v)] = -1;
    };
    extend(extend, 0);
    return count;
}

enum class Strategy { brute_force, decomposition };

Strategy choose(const Graph& g, const std::vector<std::vector<int>>& dom, const CountBudget& budget,
                TreeDecomposition& td) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    const double assignments = domain_product(dom, all);
    if (assignments <= budget.brute_force_assignments) return Strategy::brute_force;
    td = min_fill_decomposition(g);
    try {
        check_decomposition_budget(td, dom, budget);
    } catch (const BudgetError& e) {
        throw BudgetError("brute force needs " + fmt(assignments) + " assignments (budget " +
                          fmt(budget.brute_force_assignments) + ") and " + e.what());
    }
    return Strategy::decomposition;
}

bool has_empty_domain(const std::vector<std::vector<int>>& dom) {
    return std::any_of(dom.begin(), dom.end(), [](const auto& d) { return d.empty(); });
}

}  // namespace

BigNat count_homs_brute_force(const Graph& g, const Graph& h, const PinningFunction& p, const CountBudget& budget) {
    auto dom = p.domains(g.order(), h.order());
    if (has_empty_domain(dom)) return 0;
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    const double assignments = domain_product(dom, all);
    if (assignments > budget.brute_force_assignments)
        throw BudgetError("brute force needs " + fmt(assignments) + " assignments (budget " +
                          fmt(budget.brute_force_assignments) + ")");
    return BigNat(brute_force_leaves(g, h, dom));
}

BigNat count_homs_tree_decomposition(const Graph& g, const Graph& h, const PinningFunction& p,
                                     const CountBudget& budget) {
    auto dom = p.domains(g.order(), h.order());
    if (has_empty_domain(dom)) return 0;
    auto td = min_fill_decomposition(g);
    check_decomposition_budget(td, dom, budget);
    return eliminate<ExactRing>(g, h, dom, td);
}

bool count_homs_tree_decomposition_mod2(const Graph& g, const Graph& h, const PinningFunction& p,
                                        const CountBudget& budget) {
    auto dom = p.domains(g.order(), h.order());
    if (has_empty_domain(dom)) return false;
    auto td = min_fill_decomposition(g);
    check_decomposition_budget(td, dom, budget);
    return eliminate<ParityRing>(g, h, dom, td) != 0;
}

BigNat count_pinned_homs(const Graph& g, const Graph& h, const PinningFunction& p, const CountBudget& budget) {
    auto dom = p.domains(g.order(), h.order());
    if (has_empty_domain(dom)) return 0;
    TreeDecomposition td;
    if (choose(g, dom, budget, td) == Strategy::brute_force) return BigNat(brute_force_leaves(g, h, dom));
    return eliminate<ExactRing>(g, h, dom, td);
}

bool count_pinned_homs_mod2(const Graph& g, const Graph& h, const PinningFunction& p, const CountBudget& budget) {
    auto dom = p.domains(g.order(), h.order());
    if (has_empty_domain(dom)) return false;
    TreeDecomposition td;
    if (choose(g, dom, budget, td) == Strategy::brute_force) return (brute_force_leaves(g, h, dom) & 1U) != 0;
    return eliminate<ParityRing>(g, h, dom, td) != 0;
}

BigNat count_homs(const Graph& g, const Graph& h, const CountBudget& budget) {
    return count_pinned_homs(g, h, PinningFunction{}, budget);
}

bool count_homs_mod2(const Graph& g, const Graph& h, const CountBudget& budget) {
    return count_pinned_homs_mod2(g, h, PinningFunction{}, budget);
}

BigNat count_independent_sets(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw BudgetError("independent-set counting limited to 64 vertices");
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        closed[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
        for (int w : g.neighbors(v)) closed[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    std::unordered_map<std::uint64_t, BigNat> memo;
    auto count = [&](auto& self, std::uint64_t live) -> BigNat {
        if (live == 0) return 1;
        if (auto it = memo.find(live); it != memo.end()) return it->second;
        int pick = -1, best = 0;
        for (int v = 0; v < n; ++v) {
            if (!((live >> v) & 1U)) continue;
            int deg = std::popcount(closed[static_cast<std::size_t>(v)] & live) - 1;
            if (pick < 0 || deg > best) {
                pick = v;
                best = deg;
            }
        }
        BigNat result;
        if (best == 0) {
            result = BigNat(1) << std::popcount(live);
        } else {
            const auto bit = std::uint64_t{1} << pick;
            result = self(self, live & ~bit) + self(self, live & ~closed[static_cast<std::size_t>(pick)]);
        }
        memo.emplace(live, result);
        return result;
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return count(count, all);
}

bool independent_set_parity(const Graph& g) { return bit_test(count_independent_sets(g), 0); }

bool z_general_is(const Graph& g, std::uint64_t lambda, std::uint64_t mu) {
    const bool lambda_odd = lambda & 1U;
    const bool mu_odd = mu & 1U;
    const int n = g.order();
    if (lambda_odd && mu_odd) return independent_set_parity(g);
    // With lambda even only J = {} survives; with mu even only J = V(G).
    if (!lambda_odd && mu_odd) return true;
    if (lambda_odd && !mu_odd) return g.size() == 0;
    return n == 0;
}

bool z_general_is_by_enumeration(const Graph& g, std::uint64_t lambda, std::uint64_t mu) {
    const int n = g.order();
    if (n > 25) throw BudgetError("subset enumeration limited to 25 vertices");
    auto edges = g.edges();
    const bool lambda_odd = lambda & 1U;
    const bool mu_odd = mu & 1U;
    bool parity = false;
    for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
        bool independent = true;
        for (auto [u, v] : edges)
            if (((set >> u) & 1U) && ((set >> v) & 1U)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        const int size = std::popcount(set);
        const bool term = (size == 0 || lambda_odd) && (size == n || mu_odd);
        parity ^= term;
    }
    return parity;
}

}  // namespace parhom
