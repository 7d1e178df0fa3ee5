#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "qtharm/graph.hpp"

namespace qtharm {

// Hard cap for canonicalization (exhaustive pruned permutation search).
inline constexpr int kMaxCanonicalOrder = 12;

// Canonical certificate: upper-triangle adjacency bits of the minimal
// isomorph under the search order used by canonical_form. Bit for the pair
// (i, j), i < j, lives at position j(j-1)/2 + i (the graph6 column order).
// Two graphs have equal CanonicalForm iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 2> bits{};

    bool test(int position) const { return bits[position >> 6] >> (position & 63) & 1; }

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::uint64_t h = static_cast<std::uint64_t>(f.n) * 0x9e3779b97f4a7c15ULL;
        h ^= f.bits[0] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= f.bits[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

CanonicalForm canonical_form(const Graph& g);    // capacity error when n > 12
Graph canonical_graph(const CanonicalForm& f);   // the canonical representative

enum class GraphClass { Connected, Tree, Unicyclic, QuasiTree };

std::string_view class_name(GraphClass cls);
GraphClass class_from_name(std::string_view s);  // input error if unknown

// Order caps for enumerate_class: Tree up to 11, everything else up to 9.
int enumeration_cap(GraphClass cls);

// Yields exactly one representative per isomorphism class of the given
// class and order, in a deterministic order independent of the number of
// jobs (0 = use all hardware threads). Strategy: direct scan of all labeled
// graphs for n <= 7, vertex augmentation of the order n-1 catalog above.
void enumerate_class(int n, GraphClass cls, const std::function<void(const Graph&)>& yield,
                     int jobs = 0);
std::vector<Graph> enumerate_class(int n, GraphClass cls, int jobs = 0);

// Independent quasi-tree generator (cross-validation oracle for
// enumerate_class): every tree on n-1 vertices extended by a new vertex
// joined to each subset of size >= 2, deduplicated. Cap n <= 10.
void quasi_trees_via_trees(int n, const std::function<void(const Graph&)>& yield, int jobs = 0);
std::vector<Graph> quasi_trees_via_trees(int n, int jobs = 0);

}  // namespace qtharm
