#pragma once

// Simple undirected graph on {0..n-1} with dense bit-row adjacency.
// Symmetry and zero diagonal are enforced at construction.  Neighbor
// lists are kept alongside the bit rows: the refinement engine walks
// lists, the verifiers test bits.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentacover {

struct graph_error : std::runtime_error {
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1ULL;
    }
    int degree(int v) const { return static_cast<int>(nbr_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return nbr_[v]; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<std::vector<int>> nbr_;
};

bool is_connected(const Graph& g);

/// k if every vertex has degree k, otherwise absent.
std::optional<int> regular_valency(const Graph& g);

/// A proper 2-coloring (0/1 per vertex) or absent.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

/// True iff the vertices are distinct and consecutive pairs (cyclically)
/// are all edges.  Requires length >= 3.
bool contains_cycle(const Graph& g, const std::vector<int>& vertices);

/// Length of a shortest cycle; throws on forests.
int girth(const Graph& g);

/// All-pairs BFS distances from one source (-1 where unreachable).
std::vector<int> bfs_distances(const Graph& g, int source);

} // namespace pentacover
