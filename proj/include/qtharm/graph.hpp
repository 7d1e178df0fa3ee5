#pragma once

#include <span>
#include <utility>
#include <vector>

namespace qtharm {

// Simple undirected graph on vertices 0..n-1, adjacency-set representation
// with sorted neighbor lists. Immutable after construction; all operations
// are pure, so values are safe to share across threads.
class Graph {
public:
    static constexpr int kMaxOrder = 64;
    static constexpr int kUnreachable = -1;  // distance_matrix sentinel

    Graph() = default;
    explicit Graph(int n);  // edgeless
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    std::span<const int> neighbors(int v) const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    int degree(int v) const;
    int min_degree() const;
    bool is_connected() const;

    // Hop counts from BFS per source; kUnreachable where no path exists.
    std::vector<std::vector<int>> distance_matrix() const;

    // Max finite distance. Domain error on a disconnected graph; 0 for K1.
    int diameter() const;

    bool is_tree() const;  // connected and |E| = n-1

    // Graph on n-1 vertices with v removed; remaining ids shift down by one
    // above v (order-preserving relabeling).
    Graph delete_vertex(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_vertex(int v) const;
};

// All vertices v such that g - v is a tree (connected, n-2 edges), sorted.
// Empty iff g is not a quasi-tree, except that trees also report their
// leaves here while being excluded from is_quasi_tree.
struct QuasiTreeWitness {
    std::vector<int> witnesses;
    bool empty() const { return witnesses.empty(); }
};

QuasiTreeWitness quasi_tree_witnesses(const Graph& g);  // domain error if disconnected

// Connected, not a tree, and some vertex deletion leaves a tree.
bool is_quasi_tree(const Graph& g);

}  // namespace qtharm
