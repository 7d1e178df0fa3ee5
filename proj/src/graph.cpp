#include "qtharm/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qtharm/errors.hpp"

namespace qtharm {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw InputError("graph: negative order");
    if (n > kMaxOrder) throw CapacityError("graph: order " + std::to_string(n) + " exceeds cap 64");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw InputError("graph: edge endpoint out of range");
        if (u == v) throw InputError("graph: self-loop rejected");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InputError("graph: duplicate edge rejected");
    }
    m_ = static_cast<int>(edge_list.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("graph: vertex id " + std::to_string(v) + " out of range");
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::min_degree() const {
    if (n_ < 1) throw InputError("graph: min_degree needs at least one vertex");
    int best = n_;
    for (const auto& nb : adj_) best = std::min(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::is_connected() const {
    if (n_ < 1) throw InputError("graph: connectivity needs at least one vertex");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n_;
}

std::vector<std::vector<int>> Graph::distance_matrix() const {
    std::vector<std::vector<int>> dist(
        static_cast<std::size_t>(n_),
        std::vector<int>(static_cast<std::size_t>(n_), kUnreachable));
    std::vector<int> queue_buf(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        int head = 0, tail = 0;
        queue_buf[tail++] = s;
        while (head < tail) {
            int u = queue_buf[head++];
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (d[static_cast<std::size_t>(v)] == kUnreachable) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    queue_buf[tail++] = v;
                }
            }
        }
    }
    return dist;
}

int Graph::diameter() const {
    if (!is_connected()) throw DomainError("graph: diameter undefined for disconnected graph");
    int best = 0;
    for (const auto& row : distance_matrix())
        for (int d : row) best = std::max(best, d);
    return best;
}

bool Graph::is_tree() const {
    if (n_ < 1) return false;
    return m_ == n_ - 1 && is_connected();
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    std::vector<std::pair<int, int>> kept;
    kept.reserve(static_cast<std::size_t>(m_));
    auto relabel = [v](int u) { return u > v ? u - 1 : u; };
    for (auto [a, b] : edges())
        if (a != v && b != v) kept.emplace_back(relabel(a), relabel(b));
    return Graph(n_ - 1, kept);
}

QuasiTreeWitness quasi_tree_witnesses(const Graph& g) {
    if (!g.is_connected()) throw DomainError("quasi_tree_witnesses: graph must be connected");
    QuasiTreeWitness out;
    for (int v = 0; v < g.order(); ++v) {
        // g - v is a tree iff it keeps n-2 edges and stays connected
        if (g.edge_count() - g.degree(v) != g.order() - 2) continue;
        if (g.order() - 1 >= 1 && g.delete_vertex(v).is_tree()) out.witnesses.push_back(v);
    }
    return out;
}

bool is_quasi_tree(const Graph& g) {
    if (g.is_tree()) return false;
    return !quasi_tree_witnesses(g).empty();
}

}  // namespace qtharm
