#include "pentacover/graph.hpp"

#include <algorithm>
#include <deque>

namespace pentacover {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw graph_error("Graph: negative vertex count");
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
    nbr_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw graph_error("Graph: vertex out of range");
        if (u == v) throw graph_error("Graph: loop rejected");
        uint64_t& wu = bits_[static_cast<size_t>(u) * words_ + (v >> 6)];
        if ((wu >> (v & 63)) & 1ULL) continue; // duplicate edge, keep simple
        wu |= 1ULL << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
        nbr_[u].push_back(v);
        nbr_[v].push_back(u);
        ++m_;
    }
    for (auto& l : nbr_) std::sort(l.begin(), l.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbr_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::optional<int> regular_valency(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::deque<int> q;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool contains_cycle(const Graph& g, const std::vector<int>& vertices) {
    size_t len = vertices.size();
    if (len < 3) throw graph_error("contains_cycle: need at least 3 vertices");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (size_t i = 0; i < len; ++i)
        if (!g.adjacent(vertices[i], vertices[(i + 1) % len])) return false;
    return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> d(g.vertex_count(), -1);
    d[source] = 0;
    std::deque<int> q{source};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (d[w] == -1) {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
    }
    return d;
}

int girth(const Graph& g) {
    // Per-vertex BFS; a non-tree edge at depth d closes a cycle of
    // length 2d+1 or 2d+2 depending on the endpoints' levels.
    int best = -1;
    int n = g.vertex_count();
    std::vector<int> d(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(d.begin(), d.end(), -1);
        d[s] = 0;
        parent[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (best != -1 && 2 * d[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (d[w] == -1) {
                    d[w] = d[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (w != parent[v]) {
                    int len = d[v] + d[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) throw graph_error("girth: graph is a forest");
    return best;
}

} // namespace pentacover
