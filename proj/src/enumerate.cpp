#include "qtharm/enumerate.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "qtharm/errors.hpp"

namespace qtharm {

namespace {

// ---------------------------------------------------------------------------
// Packed adjacency for the enumeration inner loops (n <= 12).

struct BitGraph {
    int n = 0;
    std::array<std::uint16_t, kMaxCanonicalOrder> adj{};

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    bool has_edge(int u, int v) const { return adj[static_cast<std::size_t>(u)] >> v & 1; }
    int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)]); }
    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
};

BitGraph to_bitgraph(const Graph& g) {
    BitGraph bg;
    bg.n = g.order();
    for (auto [u, v] : g.edges()) bg.add_edge(u, v);
    return bg;
}

// Connectivity of the subgraph induced on `vmask` (flood fill over bitmasks).
bool connected_on(const BitGraph& g, std::uint32_t vmask) {
    if (vmask == 0) return false;
    std::uint32_t start = vmask & (~vmask + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[static_cast<std::size_t>(v)];
        }
        next &= vmask;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vmask;
}

std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1); }

bool bg_connected(const BitGraph& g) { return connected_on(g, full_mask(g.n)); }

bool bg_is_tree(const BitGraph& g, int edge_cnt) {
    return edge_cnt == g.n - 1 && bg_connected(g);
}

// Some vertex whose deletion leaves a tree. Candidates are exactly the
// vertices with m - deg(v) = (n-1) - 1.
bool bg_has_tree_witness(const BitGraph& g, int edge_cnt) {
    std::uint32_t all = full_mask(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (edge_cnt - g.degree(v) != g.n - 2) continue;
        if (g.n == 1 || connected_on(g, all & ~(1u << v))) return true;
    }
    return false;
}

bool bg_is_quasi_tree(const BitGraph& g) {
    int m = g.edge_count();
    // a quasi-tree has n <= m <= (n-2) + deg(witness) <= 2n-3
    if (m < g.n || m > 2 * g.n - 3) return false;
    if (!bg_connected(g)) return false;
    return bg_has_tree_witness(g, m);
}

// ---------------------------------------------------------------------------
// Canonical form: branch-and-bound over vertex orderings. The objective is
// the per-depth key sequence ((column bits << 4) | degree); at every node
// only candidates attaining the minimal key can start the minimal
// completion, and structurally interchangeable candidates (twins) collapse
// to one branch. The surviving keys reproduce the adjacency columns of the
// minimal isomorph.

struct Canonicalizer {
    const BitGraph& g;
    int n;
    std::array<int, kMaxCanonicalOrder> deg{};
    std::array<int, kMaxCanonicalOrder> chosen{};
    std::array<std::uint32_t, kMaxCanonicalOrder> keys{};
    std::array<std::uint32_t, kMaxCanonicalOrder> best{};
    bool have_best = false;

    explicit Canonicalizer(const BitGraph& graph) : g(graph), n(graph.n) {
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    }

    void run() {
        if (n > 0) dfs(0, 0);
    }

    void dfs(int depth, std::uint32_t used) {
        if (have_best) {
            for (int i = 0; i < depth; ++i) {
                if (keys[static_cast<std::size_t>(i)] < best[static_cast<std::size_t>(i)]) break;
                if (keys[static_cast<std::size_t>(i)] > best[static_cast<std::size_t>(i)]) return;
            }
        }
        if (depth == n) {
            best = keys;
            have_best = true;
            return;
        }

        std::uint32_t kmin = ~0u;
        std::array<int, kMaxCanonicalOrder> cands{};
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = (col << 1) | (g.adj[static_cast<std::size_t>(v)] >> chosen[static_cast<std::size_t>(i)] & 1);
            std::uint32_t key = (col << 4) | static_cast<std::uint32_t>(deg[static_cast<std::size_t>(v)]);
            if (key < kmin) {
                kmin = key;
                nc = 0;
            }
            if (key == kmin) cands[static_cast<std::size_t>(nc++)] = v;
        }

        keys[static_cast<std::size_t>(depth)] = kmin;
        for (int idx = 0; idx < nc; ++idx) {
            int v = cands[static_cast<std::size_t>(idx)];
            bool dup = false;
            for (int j = 0; j < idx && !dup; ++j) {
                int u = cands[static_cast<std::size_t>(j)];
                std::uint16_t mu = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(u)] & ~(1u << v));
                std::uint16_t mv = static_cast<std::uint16_t>(g.adj[static_cast<std::size_t>(v)] & ~(1u << u));
                dup = mu == mv;  // swapping twins is an automorphism
            }
            if (dup) continue;
            chosen[static_cast<std::size_t>(depth)] = v;
            dfs(depth + 1, used | (1u << v));
        }
    }
};

CanonicalForm bg_canonical_form(const BitGraph& g) {
    Canonicalizer search(g);
    search.run();
    CanonicalForm f;
    f.n = g.n;
    for (int j = 1; j < g.n; ++j) {
        std::uint32_t col = search.best[static_cast<std::size_t>(j)] >> 4;
        for (int i = 0; i < j; ++i) {
            if (col >> (j - 1 - i) & 1) {
                int p = j * (j - 1) / 2 + i;
                f.bits[static_cast<std::size_t>(p >> 6)] |= 1ULL << (p & 63);
            }
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Deterministic deduplicating merge: partitions are processed in index
// order, so the output stream does not depend on the worker count.

class FormMerger {
public:
    explicit FormMerger(std::size_t partitions) : parts_(partitions) {}

    std::vector<CanonicalForm>& slot(std::size_t i) { return parts_[i]; }

    template <class Yield>
    void drain(Yield&& yield) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        for (auto& part : parts_) {
            for (const auto& f : part)
                if (seen.insert(f).second) yield(f);
            part.clear();
        }
    }

private:
    std::vector<std::vector<CanonicalForm>> parts_;
};

bool class_member(const BitGraph& g, int edge_cnt, GraphClass cls) {
    switch (cls) {
        case GraphClass::Connected: return bg_connected(g);
        case GraphClass::Tree: return bg_is_tree(g, edge_cnt);
        case GraphClass::Unicyclic: return edge_cnt == g.n && bg_connected(g);
        case GraphClass::QuasiTree: return bg_is_quasi_tree(g);
    }
    return false;
}

// Quick popcount gate applied before building the candidate at all.
bool edge_count_possible(int m, int n, GraphClass cls) {
    switch (cls) {
        case GraphClass::Connected: return m >= n - 1;
        case GraphClass::Tree: return m == n - 1;
        case GraphClass::Unicyclic: return m == n;
        case GraphClass::QuasiTree: return m >= n && m <= 2 * n - 3;
    }
    return false;
}

constexpr int kScanMaxOrder = 7;  // direct scan of all 2^(n(n-1)/2) labeled graphs

void scan_labeled_graphs(int n, GraphClass cls, FormMerger& merger, int jobs) {
    int bit_count = n * (n - 1) / 2;
    std::uint32_t total = 1u << bit_count;

    std::array<std::pair<int, int>, 32> pair_of{};
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pair_of[static_cast<std::size_t>(p++)] = {i, j};

    std::uint32_t block_size = 1u << std::max(0, bit_count - 10);  // fixed partitioning
    std::size_t blocks = (total + block_size - 1) / block_size;

    detail::parallel_for(blocks, jobs, [&](std::size_t b) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        auto& out = merger.slot(b);
        std::uint32_t lo = static_cast<std::uint32_t>(b) * block_size;
        std::uint64_t hi = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(lo) + block_size);
        for (std::uint64_t mask64 = lo; mask64 < hi; ++mask64) {
            auto mask = static_cast<std::uint32_t>(mask64);
            if (!edge_count_possible(std::popcount(mask), n, cls)) continue;
            BitGraph g;
            g.n = n;
            for (int q = 0; q < bit_count; ++q)
                if (mask >> q & 1) g.add_edge(pair_of[static_cast<std::size_t>(q)].first,
                                              pair_of[static_cast<std::size_t>(q)].second);
            if (!class_member(g, std::popcount(mask), cls)) continue;
            CanonicalForm f = bg_canonical_form(g);
            if (seen.insert(f).second) out.push_back(f);
        }
    });
}

// ---------------------------------------------------------------------------
// Catalogs reused across calls (the augmentation paths recurse on them).

std::mutex cache_mutex;
std::map<int, std::vector<BitGraph>> tree_cache;
std::map<int, std::vector<BitGraph>> connected_cache;

std::vector<BitGraph> collect_class(int n, GraphClass cls, int jobs);

const std::vector<BitGraph>& cached_catalog(int n, GraphClass cls, int jobs) {
    auto& cache = cls == GraphClass::Tree ? tree_cache : connected_cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto built = collect_class(n, cls, jobs);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(built)).first->second;
}

// Trees grow by attaching one leaf to every vertex of every smaller tree.
void enumerate_trees(int n, FormMerger& merger, int jobs) {
    if (n == 1) {
        BitGraph k1;
        k1.n = 1;
        merger.slot(0).push_back(bg_canonical_form(k1));
        return;
    }
    const auto& parents = cached_catalog(n - 1, GraphClass::Tree, jobs);
    detail::parallel_for(parents.size(), jobs, [&](std::size_t pi) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        auto& out = merger.slot(pi);
        for (int v = 0; v < n - 1; ++v) {
            BitGraph child = parents[pi];
            child.n = n;
            child.add_edge(v, n - 1);
            CanonicalForm f = bg_canonical_form(child);
            if (seen.insert(f).second) out.push_back(f);
        }
    });
}

// Orders 8 and 9: every connected graph (hence every member of the denser
// classes) arises from a connected graph one vertex smaller by adding a
// vertex over a nonempty neighbor subset, so augment the n-1 catalog and
// filter by class membership before canonicalizing.
void augment_connected(int n, GraphClass cls, FormMerger& merger, int jobs) {
    const auto& parents = cached_catalog(n - 1, GraphClass::Connected, jobs);
    std::uint32_t subsets = full_mask(n - 1);
    detail::parallel_for(parents.size(), jobs, [&](std::size_t pi) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        auto& out = merger.slot(pi);
        int parent_edges = parents[pi].edge_count();
        for (std::uint32_t s = 1; s <= subsets; ++s) {
            int m = parent_edges + std::popcount(s);
            if (!edge_count_possible(m, n, cls)) continue;
            BitGraph child = parents[pi];
            child.n = n;
            for (std::uint32_t rest = s; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                child.add_edge(v, n - 1);
            }
            // children are connected by construction; Connected and
            // Unicyclic (m == n gated above) need no further filter
            if (cls == GraphClass::QuasiTree && !bg_has_tree_witness(child, m)) continue;
            CanonicalForm f = bg_canonical_form(child);
            if (seen.insert(f).second) out.push_back(f);
        }
    });
}

std::size_t partition_count(int n, GraphClass cls, int jobs) {
    if (cls == GraphClass::Tree)
        return n == 1 ? 1 : cached_catalog(n - 1, GraphClass::Tree, jobs).size();
    if (n <= kScanMaxOrder) {
        int bit_count = n * (n - 1) / 2;
        std::uint32_t total = 1u << bit_count;
        std::uint32_t block_size = 1u << std::max(0, bit_count - 10);
        return (total + block_size - 1) / block_size;
    }
    return cached_catalog(n - 1, GraphClass::Connected, jobs).size();
}

void enumerate_forms(int n, GraphClass cls, FormMerger& merger, int jobs) {
    if (cls == GraphClass::Tree) {
        enumerate_trees(n, merger, jobs);
    } else if (n <= kScanMaxOrder) {
        scan_labeled_graphs(n, cls, merger, jobs);
    } else {
        augment_connected(n, cls, merger, jobs);
    }
}

std::vector<BitGraph> collect_class(int n, GraphClass cls, int jobs) {
    FormMerger merger(partition_count(n, cls, jobs));
    enumerate_forms(n, cls, merger, jobs);
    std::vector<BitGraph> out;
    merger.drain([&](const CanonicalForm& f) {
        BitGraph g;
        g.n = f.n;
        int p = 0;
        for (int j = 1; j < f.n; ++j)
            for (int i = 0; i < j; ++i, ++p)
                if (f.test(p)) g.add_edge(i, j);
        out.push_back(g);
    });
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kMaxCanonicalOrder)
        throw CapacityError("canonical_form: order " + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(kMaxCanonicalOrder));
    return bg_canonical_form(to_bitgraph(g));
}

Graph canonical_graph(const CanonicalForm& f) {
    std::vector<std::pair<int, int>> edges;
    int p = 0;
    for (int j = 1; j < f.n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if (f.test(p)) edges.emplace_back(i, j);
    return Graph(f.n, edges);
}

std::string_view class_name(GraphClass cls) {
    switch (cls) {
        case GraphClass::Connected: return "connected";
        case GraphClass::Tree: return "tree";
        case GraphClass::Unicyclic: return "unicyclic";
        case GraphClass::QuasiTree: return "quasi-tree";
    }
    return "?";
}

GraphClass class_from_name(std::string_view s) {
    if (s == "connected") return GraphClass::Connected;
    if (s == "tree") return GraphClass::Tree;
    if (s == "unicyclic") return GraphClass::Unicyclic;
    if (s == "quasi-tree" || s == "quasitree") return GraphClass::QuasiTree;
    throw InputError("enumerate: unknown graph class '" + std::string(s) + "'");
}

int enumeration_cap(GraphClass cls) { return cls == GraphClass::Tree ? 11 : 9; }

void enumerate_class(int n, GraphClass cls, const std::function<void(const Graph&)>& yield,
                     int jobs) {
    if (n < 1) throw InputError("enumerate_class: order must be positive");
    if (n > enumeration_cap(cls))
        throw CapacityError("enumerate_class: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(enumeration_cap(cls)) + " for class " +
                            std::string(class_name(cls)));
    FormMerger merger(partition_count(n, cls, jobs));
    enumerate_forms(n, cls, merger, jobs);
    merger.drain([&](const CanonicalForm& f) { yield(canonical_graph(f)); });
}

std::vector<Graph> enumerate_class(int n, GraphClass cls, int jobs) {
    std::vector<Graph> out;
    enumerate_class(n, cls, [&](const Graph& g) { out.push_back(g); }, jobs);
    return out;
}

void quasi_trees_via_trees(int n, const std::function<void(const Graph&)>& yield, int jobs) {
    if (n < 1) throw InputError("quasi_trees_via_trees: order must be positive");
    if (n > 10) throw CapacityError("quasi_trees_via_trees: order exceeds cap 10");
    if (n < 3) return;  // smallest quasi-tree is K3

    const auto& trees = cached_catalog(n - 1, GraphClass::Tree, jobs);
    FormMerger merger(trees.size());
    std::uint32_t subsets = full_mask(n - 1);
    detail::parallel_for(trees.size(), jobs, [&](std::size_t ti) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        auto& out = merger.slot(ti);
        for (std::uint32_t s = 1; s <= subsets; ++s) {
            if (std::popcount(s) < 2) continue;  // one edge keeps it a tree
            BitGraph g = trees[ti];
            g.n = n;
            for (std::uint32_t rest = s; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                g.add_edge(v, n - 1);
            }
            CanonicalForm f = bg_canonical_form(g);
            if (seen.insert(f).second) out.push_back(f);
        }
    });
    merger.drain([&](const CanonicalForm& f) { yield(canonical_graph(f)); });
}

std::vector<Graph> quasi_trees_via_trees(int n, int jobs) {
    std::vector<Graph> out;
    quasi_trees_via_trees(n, [&](const Graph& g) { out.push_back(g); }, jobs);
    return out;
}

}  // namespace qtharm
