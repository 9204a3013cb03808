#include "parhom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "parhom/errors.hpp"

namespace parhom {

Graph::Graph(int n) : adjacency_(static_cast<std::size_t>(std::max(n, 0))) {}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw PreconditionError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Path::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_path_in(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::vector<int> seen;
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        int v = p.vertices[k];
        if (v < 0 || v >= g.order()) return false;
        if (k > 0 && !g.adjacent(p.vertices[k - 1], v)) return false;
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

int Subgraph::local(int host) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
    if (it == to_host.end() || *it != host) return -1;
    return static_cast<int>(it - to_host.begin());
}

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) local[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (int u : vertices)
        for (int v : g.neighbors(u))
            if (u < v && local[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(v)]);
    return Subgraph{Graph::from_edges(static_cast<int>(vertices.size()), edges), std::move(vertices)};
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph::from_edges(g.order(), edges);
}

namespace {

std::vector<long long> parse_integers(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        if (pos >= line.size()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
            throw ParseError(line_no, "expected integers, got '" + std::string(line) + "'");
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto line = text.substr(start, end - start);
        if (!is_blank(line) && line.find_first_not_of(" \t") != std::string_view::npos &&
            line[line.find_first_not_of(" \t")] != '#')
            lines.emplace_back(line_no, line);
        start = end + 1;
    }
    if (lines.empty()) throw ParseError(1, "missing header 'n m'");

    auto header = parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
    if (header[0] < 0 || header[1] < 0) throw ParseError(lines[0].first, "negative count in header");
    const long long n = header[0];
    const long long m = header[1];
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw ParseError(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                                 std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto [no, line] = lines[k];
        auto vals = parse_integers(line, no);
        if (vals.size() != 2) throw ParseError(no, "edge line must be 'u v'");
        if (vals[0] < 0 || vals[1] < 0 || vals[0] >= n || vals[1] >= n)
            throw ParseError(no, "vertex id out of range 0.." + std::to_string(n - 1));
        if (vals[0] == vals[1]) throw ParseError(no, "self-loop at vertex " + std::to_string(vals[0]));
        edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, std::optional<int> root) {
    std::ostringstream out;
    out << "graph H {\n  node [shape=circle];\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (root && *root == v) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        int root_children = 0;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                auto wi = static_cast<std::size_t>(w);
                auto vi = static_cast<std::size_t>(f.v);
                if (disc[wi] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[wi] = low[wi] = timer++;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[wi] < disc[vi]) {
                    edge_stack.emplace_back(f.v, w);
                    low[vi] = std::min(low[vi], disc[wi]);
                }
                continue;
            }
            const int w = f.v;
            const int v = f.parent;
            stack.pop_back();
            if (v < 0) continue;
            auto vi = static_cast<std::size_t>(v);
            auto wi = static_cast<std::size_t>(w);
            low[vi] = std::min(low[vi], low[wi]);
            if (low[wi] >= disc[vi]) {
                if (v != root) is_cut[vi] = 1;
                std::vector<Edge> block_edges;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block_edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
                    if (e == Edge{v, w}) break;
                }
                std::vector<int> verts;
                for (auto [a, b] : block_edges) {
                    verts.push_back(a);
                    verts.push_back(b);
                }
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                std::sort(block_edges.begin(), block_edges.end());
                out.blocks.push_back(std::move(verts));
                out.block_edges.push_back(std::move(block_edges));
            }
        }
        if (root_children >= 2) is_cut[static_cast<std::size_t>(root)] = 1;
    }

    // Canonical block order: by sorted vertex list.
    std::vector<std::size_t> order(out.blocks.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return out.blocks[a] < out.blocks[b]; });
    BlockDecomposition sorted;
    for (auto k : order) {
        sorted.blocks.push_back(std::move(out.blocks[k]));
        sorted.block_edges.push_back(std::move(out.block_edges[k]));
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) sorted.cut_vertices.push_back(v);

    const int nb = static_cast<int>(sorted.blocks.size());
    std::vector<Edge> tree_edges;
    for (int b = 0; b < nb; ++b)
        for (int v : sorted.blocks[static_cast<std::size_t>(b)]) {
            auto it = std::lower_bound(sorted.cut_vertices.begin(), sorted.cut_vertices.end(), v);
            if (it != sorted.cut_vertices.end() && *it == v)
                tree_edges.emplace_back(b, nb + static_cast<int>(it - sorted.cut_vertices.begin()));
        }
    sorted.block_cut_tree = Graph::from_edges(nb + static_cast<int>(sorted.cut_vertices.size()), tree_edges);
    return sorted;
}

std::optional<Edge> cactus_violation(const Graph& g) {
    auto bd = blocks(g);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto k = bd.blocks[b].size();
        if (k >= 3 && bd.block_edges[b].size() != k) return bd.block_edges[b].front();
    }
    return std::nullopt;
}

bool is_cactus(const Graph& g) { return !cactus_violation(g).has_value(); }

std::vector<std::vector<int>> cycles(const Graph& g) {
    auto bd = blocks(g);
    std::vector<std::vector<int>> out;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto& verts = bd.blocks[b];
        if (verts.size() < 3) continue;
        if (bd.block_edges[b].size() != verts.size()) throw PreconditionError("cycles() requires a cactus graph");
        auto in_block = [&](int v) { return std::binary_search(verts.begin(), verts.end(), v); };
        std::vector<int> cyc{verts.front()};
        int prev = -1;
        int cur = verts.front();
        while (true) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev && in_block(w)) {
                    next = w;
                    break;
                }
            if (next == verts.front()) break;
            prev = cur;
            cur = next;
            cyc.push_back(cur);
        }
        out.push_back(std::move(cyc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Split split_at(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw PreconditionError("split vertex out of range");
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(v)] = 1;
    Split out;
    out.cut_vertex = v;
    for (int start : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> comp{v};
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            comp.push_back(a);
            for (int b : g.neighbors(a))
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = 1;
                    stack.push_back(b);
                }
        }
        out.components.push_back(induced_subgraph(g, std::move(comp)));
    }
    if (out.components.size() < 2)
        throw PreconditionError("vertex " + std::to_string(v) + " is not a cut vertex");
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kInfiniteDistance);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] == kInfiniteDistance) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[static_cast<std::size_t>(v)]; }

int distance_to_set(const Graph& g, int u, std::span<const int> targets) {
    if (targets.empty()) return kInfiniteDistance;
    auto dist = bfs_distances(g, u);
    int best = kInfiniteDistance;
    for (int t : targets) best = std::min(best, dist[static_cast<std::size_t>(t)]);
    return best;
}

ShortestPath unique_shortest_path(const Graph& g, int u, int v) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n, kInfiniteDistance), ways(n, 0);
    std::deque<int> queue{u};
    dist[static_cast<std::size_t>(u)] = 0;
    ways[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        auto ai = static_cast<std::size_t>(a);
        for (int b : g.neighbors(a)) {
            auto bi = static_cast<std::size_t>(b);
            if (dist[bi] == kInfiniteDistance) {
                dist[bi] = dist[ai] + 1;
                queue.push_back(b);
            }
            if (dist[bi] == dist[ai] + 1) ways[bi] = std::min(2, ways[bi] + ways[ai]);
        }
    }
    auto vi = static_cast<std::size_t>(v);
    if (dist[vi] == kInfiniteDistance) return Unreachable{};
    if (ways[vi] > 1) return NotUnique{};
    Path p;
    int cur = v;
    p.vertices.push_back(cur);
    while (cur != u) {
        for (int b : g.neighbors(cur))
            if (dist[static_cast<std::size_t>(b)] + 1 == dist[static_cast<std::size_t>(cur)]) {
                cur = b;
                break;
            }
        p.vertices.push_back(cur);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

std::optional<Path> unique_path(const Graph& g, int u, int v) {
    auto r = unique_shortest_path(g, u, v);
    if (auto* p = std::get_if<Path>(&r)) return *p;
    return std::nullopt;
}

}  // namespace parhom
