#include <algorithm>
#include <set>
#include <sstream>

#include "parhom/errors.hpp"
#include "parhom/gadgets.hpp"
#include "parhom/parity.hpp"

namespace parhom {

namespace {

std::string list(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(x);
    }
    return out;
}

bool in_range(const Graph& h, int v) { return v >= 0 && v < h.order(); }

Path extended(Path p, int v) {
    p.vertices.push_back(v);
    return p;
}

bool is_unique_shortest(const Graph& h, const Path& p) {
    if (p.vertices.empty()) return false;
    auto best = unique_path(h, p.front(), p.back());
    return best && *best == p;
}

}  // namespace

std::string CheckResult::summary() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.clause + ": " + v.detail;
    }
    return out;
}

CheckResult verify_hardness_gadget(const Graph& h, const HardnessGadget& g) {
    CheckResult r;
    auto fail = [&](std::string clause, std::string detail) {
        r.violations.push_back({std::move(clause), std::move(detail)});
    };

    std::vector<int> named = {g.hub, g.target, g.selector};
    named.insert(named.end(), g.outs.begin(), g.outs.end());
    named.insert(named.end(), g.cancelled.begin(), g.cancelled.end());
    for (const auto& [u, w] : g.anchor) named.push_back(w);
    for (int v : named)
        if (!in_range(h, v)) {
            fail("range", "vertex " + std::to_string(v) + " not in graph");
            return r;
        }
    if (g.beta < 1) {
        fail("range", "beta must be positive");
        return r;
    }
    std::set<int> cancelled(g.cancelled.begin(), g.cancelled.end());
    std::set<int> with_length, with_anchor;
    for (const auto& [u, k] : g.walk_length) {
        with_length.insert(u);
        if (k < 1) fail("range", "walk length of " + std::to_string(u) + " must be positive");
    }
    for (const auto& [u, w] : g.anchor) with_anchor.insert(u);
    if (with_length != cancelled || with_anchor != cancelled)
        fail("range", "walk lengths and anchors must be given exactly for the cancelled set");
    if (!r.ok()) return r;

    // Neighbourhood partition.
    std::vector<int> parts = g.outs;
    parts.push_back(g.selector);
    parts.insert(parts.end(), g.cancelled.begin(), g.cancelled.end());
    std::sort(parts.begin(), parts.end());
    std::vector<int> nbrs(h.neighbors(g.hub).begin(), h.neighbors(g.hub).end());
    if (std::adjacent_find(parts.begin(), parts.end()) != parts.end())
        fail("partition", "outer set, selector and cancelled set overlap");
    else if (parts != nbrs)
        fail("partition", "outer set, selector and cancelled set {" + list(parts) +
                              "} do not cover the hub neighbourhood {" + list(nbrs) + "}");
    if (g.outs.size() % 2 == 0) fail("odd-outer-set", "outer set has even size " + std::to_string(g.outs.size()));

    WalkParity parity(h);
    std::vector<int> ys = g.outs;
    ys.push_back(g.selector);
    for (int o : g.outs) {
        for (int y : ys) {
            std::vector<int> found;
            for (int z : h.neighbors(o))
                if (h.adjacent(z, y) && parity(z, g.target, g.beta)) found.push_back(z);
            if (found != std::vector<int>{g.hub})
                fail("unique-hub", "common neighbours of " + std::to_string(o) + " and " + std::to_string(y) +
                                       " with odd walk count to target: {" + list(found) + "}");
        }
    }
    if (parity(g.selector, g.target, g.beta + 1))
        fail("even-return", "odd number of " + std::to_string(g.beta + 1) + "-walks from selector to target");
    for (int u : g.cancelled) {
        int w = g.anchor.at(u);
        int k = g.walk_length.at(u);
        if (parity(w, u, k))
            fail("cancelled-neighbour", "anchor " + std::to_string(w) + " has odd " + std::to_string(k) +
                                            "-walk count to " + std::to_string(u));
        for (int y : ys)
            if (!parity(w, y, k))
                fail("cancelled-neighbour", "anchor " + std::to_string(w) + " has even " + std::to_string(k) +
                                                "-walk count to " + std::to_string(y));
    }
    return r;
}

CheckResult check_distance_requirements(const Graph& h, const HardnessGadget& g, int v) {
    CheckResult r;
    auto d = bfs_distances(h, v);
    auto to_set = [&](std::vector<int> targets) {
        int best = kInfiniteDistance;
        for (int t : targets) best = std::min(best, d[static_cast<std::size_t>(t)]);
        return best;
    };
    std::vector<int> base = g.outs;
    base.push_back(g.selector);
    long primary = static_cast<long>(to_set(base)) + d[static_cast<std::size_t>(g.target)];
    if (primary <= g.beta - 1)
        r.violations.push_back({"primary-distance", "vertex " + std::to_string(v) + ": " + std::to_string(primary) +
                                                        " <= " + std::to_string(g.beta - 1)});
    for (int u : g.cancelled) {
        auto with_u = base;
        with_u.push_back(u);
        long secondary = static_cast<long>(d[static_cast<std::size_t>(g.anchor.at(u))]) + to_set(with_u);
        int k = g.walk_length.at(u);
        if (secondary <= k - 2)
            r.violations.push_back({"secondary-distance", "vertex " + std::to_string(v) + ", cancelled " +
                                                              std::to_string(u) + ": " + std::to_string(secondary) +
                                                              " <= " + std::to_string(k - 2)});
    }
    return r;
}

CheckResult check_distance_requirements(const Graph& h, const HardnessGadget& g, const std::vector<int>& vertices) {
    CheckResult r;
    for (int v : vertices) {
        auto one = check_distance_requirements(h, g, v);
        r.violations.insert(r.violations.end(), one.violations.begin(), one.violations.end());
    }
    return r;
}

CheckResult verify_partial_gadget(const Graph& h, int root, const PartialHardnessGadget& p) {
    CheckResult r;
    auto fail = [&](std::string clause, std::string detail) {
        r.violations.push_back({std::move(clause), std::move(detail)});
    };
    std::vector<int> named = {root, p.hub, p.selector};
    named.insert(named.end(), p.outs.begin(), p.outs.end());
    named.insert(named.end(), p.root_path.vertices.begin(), p.root_path.vertices.end());
    for (int v : named)
        if (!in_range(h, v)) {
            fail("range", "vertex " + std::to_string(v) + " not in graph");
            return r;
        }
    std::vector<int> parts = p.outs;
    parts.push_back(p.selector);
    std::sort(parts.begin(), parts.end());
    std::vector<int> nbrs(h.neighbors(p.hub).begin(), h.neighbors(p.hub).end());
    if (parts != nbrs) fail("partition", "selector and outer set do not partition the hub neighbourhood");
    if (p.outs.size() % 2 == 0) fail("odd-outer-set", "outer set has even size " + std::to_string(p.outs.size()));
    const Path& path = p.root_path;
    if (path.vertices.empty() || path.front() != root || path.back() != p.selector) {
        fail("root-path", "path must run from the root to the selector");
        return r;
    }
    if (!is_unique_shortest(h, path)) fail("root-path", "path to selector is not the unique shortest path");
    if (!is_unique_shortest(h, extended(path, p.hub)))
        fail("root-path", "path to hub is not the unique shortest path");
    for (int o : p.outs)
        if (!is_unique_shortest(h, extended(extended(path, p.hub), o)))
            fail("root-path", "path to outer vertex " + std::to_string(o) + " is not the unique shortest path");
    return r;
}

CheckResult verify_23path(const Graph& h, int root, const TwoThreePath& p) {
    CheckResult r;
    auto fail = [&](std::string clause, std::string detail) {
        r.violations.push_back({std::move(clause), std::move(detail)});
    };
    for (int v : {root, p.degree_two, p.degree_three})
        if (!in_range(h, v)) {
            fail("range", "vertex " + std::to_string(v) + " not in graph");
            return r;
        }
    if (h.degree(p.degree_two) != 2) fail("degrees", "first end must have degree 2");
    if (h.degree(p.degree_three) != 3) fail("degrees", "second end must have degree 3");
    bool together = false;
    for (const auto& c : cycles(h))
        if (std::find(c.begin(), c.end(), p.degree_two) != c.end() &&
            std::find(c.begin(), c.end(), p.degree_three) != c.end())
            together = true;
    if (!together) fail("common-cycle", "ends are not on a common cycle");
    if (p.root_path.vertices.empty() || p.root_path.front() != root) {
        fail("root-path", "path must start at the root");
        return r;
    }
    for (int v : {p.degree_two, p.degree_three})
        if (!is_unique_shortest(h, extended(p.root_path, v)))
            fail("root-path", "path to " + std::to_string(v) + " is not the unique shortest path");
    return r;
}

CheckResult verify_shortcut(const Graph& h, int root, const Shortcut& s) {
    CheckResult r;
    auto fail = [&](std::string clause, std::string detail) {
        r.violations.push_back({std::move(clause), std::move(detail)});
    };
    for (int v : {root, s.first, s.second})
        if (!in_range(h, v)) {
            fail("range", "vertex " + std::to_string(v) + " not in graph");
            return r;
        }
    if (s.first == s.second) fail("ends", "ends coincide");
    for (int v : {s.first, s.second})
        if (h.degree(v) < 3 || h.degree(v) % 2 == 0)
            fail("ends", "vertex " + std::to_string(v) + " does not have odd degree at least 3");
    if (s.path.vertices.empty() || s.path.front() != s.first || s.path.back() != s.second)
        fail("path", "path must run between the ends");
    else if (!is_unique_shortest(h, s.path))
        fail("path", "not the unique shortest path between the ends");
    if (s.path.contains(root)) fail("path", "path passes through the root");
    return r;
}

Path map_path(const Path& p, const std::vector<int>& to_host) {
    Path out;
    for (int v : p.vertices) out.vertices.push_back(to_host[static_cast<std::size_t>(v)]);
    return out;
}

namespace {

std::vector<int> map_set(const std::vector<int>& xs, const std::vector<int>& to_host) {
    std::vector<int> out;
    for (int v : xs) out.push_back(to_host[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

HardnessGadget map_gadget(const HardnessGadget& g, const std::vector<int>& to_host) {
    auto at = [&](int v) { return to_host[static_cast<std::size_t>(v)]; };
    HardnessGadget out;
    out.beta = g.beta;
    out.hub = at(g.hub);
    out.target = at(g.target);
    out.selector = at(g.selector);
    out.outs = map_set(g.outs, to_host);
    out.cancelled = map_set(g.cancelled, to_host);
    for (const auto& [u, k] : g.walk_length) out.walk_length[at(u)] = k;
    for (const auto& [u, w] : g.anchor) out.anchor[at(u)] = at(w);
    return out;
}

PartialHardnessGadget map_partial(const PartialHardnessGadget& p, const std::vector<int>& to_host) {
    auto at = [&](int v) { return to_host[static_cast<std::size_t>(v)]; };
    return {at(p.hub), at(p.selector), map_set(p.outs, to_host), map_path(p.root_path, to_host)};
}

TwoThreePath map_23path(const TwoThreePath& p, const std::vector<int>& to_host) {
    auto at = [&](int v) { return to_host[static_cast<std::size_t>(v)]; };
    return {map_path(p.root_path, to_host), at(p.degree_two), at(p.degree_three)};
}

MosaicCertificate map_mosaic(const MosaicCertificate& m, const std::vector<int>& to_host) {
    auto at = [&](int v) { return to_host[static_cast<std::size_t>(v)]; };
    MosaicCertificate out = m;
    out.core = map_set(m.core, to_host);
    out.bristle_vertices = map_set(m.bristle_vertices, to_host);
    out.bristles.clear();
    for (auto [a, b] : m.bristles) out.bristles.emplace_back(at(a), at(b));
    std::sort(out.bristles.begin(), out.bristles.end());
    return out;
}

HardnessGadget normalized(HardnessGadget g) {
    std::sort(g.outs.begin(), g.outs.end());
    std::sort(g.cancelled.begin(), g.cancelled.end());
    return g;
}

std::string serialize_gadget(const HardnessGadget& g) {
    auto n = normalized(g);
    std::ostringstream out;
    out << "beta: " << n.beta << '\n';
    out << "s: " << n.hub << '\n';
    out << "t: " << n.target << '\n';
    out << "i: " << n.selector << '\n';
    out << "O:";
    for (int v : n.outs) out << ' ' << v;
    out << "\nK:";
    for (int v : n.cancelled) out << ' ' << v;
    out << "\nk:";
    for (const auto& [u, k] : n.walk_length) out << ' ' << u << '=' << k;
    out << "\nw:";
    for (const auto& [u, w] : n.anchor) out << ' ' << u << '=' << w;
    out << '\n';
    return out.str();
}

HardnessGadget parse_gadget(std::string_view text) {
    HardnessGadget g;
    std::set<std::string> seen;
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
        if (colon == std::string::npos) throw ParseError(line_no, "expected 'key: value'");
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<std::string> tokens;
        for (std::string tok; rest >> tok;) tokens.push_back(tok);
        auto number = [&](const std::string& tok) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || tok.empty()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
            return v;
        };
        auto single = [&]() {
            if (tokens.size() != 1) throw ParseError(line_no, "key '" + key + "' takes one integer");
            return number(tokens[0]);
        };
        auto pairs = [&](std::map<int, int>& out) {
            for (const auto& tok : tokens) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError(line_no, "expected 'u=value', got '" + tok + "'");
                int u = number(tok.substr(0, eq));
                if (!out.emplace(u, number(tok.substr(eq + 1))).second)
                    throw ParseError(line_no, "vertex " + std::to_string(u) + " listed twice");
            }
        };
        if (key == "beta") g.beta = single();
        else if (key == "s") g.hub = single();
        else if (key == "t") g.target = single();
        else if (key == "i") g.selector = single();
        else if (key == "O") for (const auto& tok : tokens) g.outs.push_back(number(tok));
        else if (key == "K") for (const auto& tok : tokens) g.cancelled.push_back(number(tok));
        else if (key == "k") pairs(g.walk_length);
        else if (key == "w") pairs(g.anchor);
        else throw ParseError(line_no, "unknown key '" + key + "'");
    }
    for (const char* required : {"beta", "s", "t", "i", "O"})
        if (!seen.contains(required)) throw ParseError(line_no, std::string("missing key '") + required + "'");
    return normalized(g);
}

const char* to_string(MosaicVerdict v) {
    switch (v) {
        case MosaicVerdict::not_mosaic: return "not_mosaic";
        case MosaicVerdict::mosaic: return "mosaic";
        case MosaicVerdict::proper_mosaic: return "proper_mosaic";
    }
    return "unknown";
}

}  // namespace parhom
