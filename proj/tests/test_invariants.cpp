#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtharm/enumerate.hpp"
#include "qtharm/errors.hpp"
#include "qtharm/families.hpp"
#include "qtharm/invariants.hpp"

using qtharm::BoundId;
using qtharm::BoundStatus;
using qtharm::bound_value;
using qtharm::FamilyKind;
using qtharm::FamilySpec;
using qtharm::Graph;
using qtharm::harmonic_index;
using qtharm::Rational;

namespace {

Graph fam(FamilyKind kind, int a = 0, int b = 0) { return qtharm::build({kind, a, b}); }

Rational direct_delta(const Graph& g, int t) {
    return harmonic_index(g) - harmonic_index(g.delete_vertex(t));
}

}  // namespace

TEST_CASE("harmonic index of the named small graphs") {
    CHECK(harmonic_index(fam(FamilyKind::Complete, 3)) == Rational(3, 2));
    CHECK(harmonic_index(fam(FamilyKind::VFamily, 1, 1)) == Rational(8, 3));
    CHECK(harmonic_index(fam(FamilyKind::VFamily, 0, 0)) == Rational(29, 15));
    CHECK(harmonic_index(fam(FamilyKind::Star, 5)) == Rational(8, 5));

    // U(6): four cycle edges at 2/5 plus two pendant edges at 1/2
    Graph u641 = fam(FamilyKind::U641);
    CHECK(oracle::same(Rational(2, 5) * 4 + Rational(1, 2) * 2, oracle::harmonic(u641)));
    CHECK(harmonic_index(u641) == Rational(13, 5));

    // U531: 1/3 + 4/5 + 1
    CHECK(harmonic_index(fam(FamilyKind::U531)) == Rational(32, 15));

    CHECK_THROWS_AS(harmonic_index(Graph(3)), qtharm::DomainError);
    CHECK_THROWS_AS(harmonic_index(Graph(1)), qtharm::DomainError);
}

TEST_CASE("harmonic index agrees with the matrix oracle") {
    std::mt19937 rng(555);
    for (int round = 0; round < 200; ++round) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.45);
        if (g.edge_count() == 0) continue;
        CHECK(oracle::same(harmonic_index(g), oracle::harmonic(g)));
    }
}

TEST_CASE("bound values from the catalog") {
    CHECK(bound_value(BoundId::QtAdditive, 5, 3) == Rational(13, 6));
    CHECK(bound_value(BoundId::QtMultiplicative, 6, 2) == Rational(4, 3));
    CHECK(bound_value(BoundId::QtAdditive, 6, 2) == Rational(2, 3));
    CHECK(bound_value(BoundId::QtAdditive, 6, 4) == Rational(8, 3));
    CHECK(bound_value(BoundId::QtMultiplicative, 6, 4) == Rational(8, 3));
    CHECK(bound_value(BoundId::QtAdditive, 4, 2) == Rational(5, 3));
    CHECK(bound_value(BoundId::UpperAdditive, 6, 3) == Rational(5));
    CHECK(bound_value(BoundId::UpperMultiplicative, 6, 3) == Rational(9));
    CHECK(bound_value(BoundId::TreeAdditive, 5, 4) == Rational(4) + Rational(5, 6) - Rational(5, 2));
    CHECK(bound_value(BoundId::TreeMultiplicative, 5, 4) ==
          (Rational(1, 2) + Rational(1, 12)) * Rational(4));

    CHECK_THROWS_AS(bound_value(BoundId::QtAdditive, 2, 1), qtharm::DomainError);
    CHECK_THROWS_AS(bound_value(BoundId::QtMultiplicative, 2, 1), qtharm::DomainError);
    CHECK_THROWS_AS(bound_value(BoundId::QtAdditive, 5, 0), qtharm::DomainError);
    CHECK_THROWS_AS(bound_value(BoundId::TreeMultiplicative, 1, 1), qtharm::DomainError);
}

TEST_CASE("bound ids round trip through names") {
    for (BoundId id : qtharm::kAllBounds) {
        auto back = qtharm::bound_from_name(qtharm::bound_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(qtharm::bound_from_name("nope").has_value());
}

TEST_CASE("evaluate statuses") {
    const BoundId qt[] = {BoundId::QtAdditive, BoundId::QtMultiplicative};

    auto v11 = qtharm::evaluate(fam(FamilyKind::VFamily, 1, 1), qt);
    CHECK(v11.find(BoundId::QtAdditive)->status == BoundStatus::Equal);
    CHECK(v11.find(BoundId::QtMultiplicative)->status == BoundStatus::Equal);

    auto u641 = qtharm::evaluate(fam(FamilyKind::U641), qt);
    CHECK(u641.h == Rational(13, 5));
    CHECK(u641.find(BoundId::QtAdditive)->value == Rational(8, 3));
    CHECK(u641.find(BoundId::QtAdditive)->status == BoundStatus::Violated);
    CHECK(u641.find(BoundId::QtMultiplicative)->status == BoundStatus::Violated);

    auto u531 = qtharm::evaluate(fam(FamilyKind::U531), qt);
    CHECK(u531.h == Rational(32, 15));
    CHECK(u531.find(BoundId::QtAdditive)->value == Rational(13, 6));
    CHECK(u531.find(BoundId::QtAdditive)->status == BoundStatus::Violated);

    const BoundId upper[] = {BoundId::UpperAdditive, BoundId::UpperMultiplicative};
    // complete graphs attain both upper bounds exactly
    auto k4 = qtharm::evaluate(fam(FamilyKind::Complete, 4), upper);
    CHECK(k4.find(BoundId::UpperAdditive)->status == BoundStatus::Equal);
    CHECK(k4.find(BoundId::UpperMultiplicative)->status == BoundStatus::Equal);
    auto p4 = qtharm::evaluate(fam(FamilyKind::Path, 4), upper);
    CHECK(p4.find(BoundId::UpperAdditive)->status == BoundStatus::Strict);

    CHECK_THROWS_AS(qtharm::evaluate(Graph(4, {{0, 1}, {2, 3}}), qt), qtharm::DomainError);
}

TEST_CASE("pendant deletion identity") {
    // P3, delete an endpoint: H(P3) - H(P2) = 4/3 - 1
    Graph p3 = fam(FamilyKind::Path, 3);
    CHECK(qtharm::pendant_deletion_delta(p3, 0) == Rational(1, 3));
    CHECK(qtharm::pendant_deletion_delta(p3, 0) == direct_delta(p3, 0));

    // star: H(K_{1,4}) - H(K_{1,3}) = 8/5 - 3/2
    Graph s5 = fam(FamilyKind::Star, 5);
    CHECK(qtharm::pendant_deletion_delta(s5, 4) == Rational(1, 10));
    CHECK(qtharm::pendant_deletion_delta(s5, 4) == direct_delta(s5, 4));

    // U(7), its pendant vertex 4
    Graph u7 = fam(FamilyKind::UFamily, 7);
    CHECK(qtharm::pendant_deletion_delta(u7, 4) == direct_delta(u7, 4));

    CHECK_THROWS_AS(qtharm::pendant_deletion_delta(p3, 1), qtharm::InputError);
}

TEST_CASE("degree-2 deletion identity") {
    // C4: neighbors of any vertex are nonadjacent; H(C4) - H(P3) = 2 - 4/3
    Graph c4 = fam(FamilyKind::Cycle, 4);
    auto d = qtharm::degree2_deletion_delta(c4, 0);
    CHECK_FALSE(d.neighbors_adjacent);
    CHECK(d.delta == Rational(2, 3));
    CHECK(d.delta == direct_delta(c4, 0));

    // paw = K3 plus a pendant: a degree-2 cycle vertex has adjacent neighbors
    Graph paw(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto dp = qtharm::degree2_deletion_delta(paw, 1);
    CHECK(dp.neighbors_adjacent);
    CHECK(dp.delta == direct_delta(paw, 1));

    // U(7): vertex 3 sits on the cycle off the long path
    Graph u7 = fam(FamilyKind::UFamily, 7);
    auto du = qtharm::degree2_deletion_delta(u7, 3);
    CHECK_FALSE(du.neighbors_adjacent);
    CHECK(du.delta == direct_delta(u7, 3));

    CHECK_THROWS_AS(qtharm::degree2_deletion_delta(paw, 0), qtharm::InputError);  // degree 3
    // middle of a path disconnects
    CHECK_THROWS_AS(qtharm::degree2_deletion_delta(fam(FamilyKind::Path, 3), 1),
                    qtharm::InputError);
}

TEST_CASE("deletion identities hold across random quasi-trees") {
    std::mt19937 rng(321);
    auto qts = qtharm::enumerate_class(6, qtharm::GraphClass::QuasiTree);
    for (const auto& g : qts) {
        for (int t = 0; t < g.order(); ++t) {
            if (g.degree(t) == 1) {
                CHECK(qtharm::pendant_deletion_delta(g, t) == direct_delta(g, t));
            } else if (g.degree(t) == 2 && g.delete_vertex(t).is_connected()) {
                CHECK(qtharm::degree2_deletion_delta(g, t).delta == direct_delta(g, t));
            }
        }
    }
}

TEST_CASE("H is edge-local") {
    std::mt19937 rng(777);
    for (int round = 0; round < 120; ++round) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracle::random_graph(rng, n, 0.4);
        if (g.edge_count() == 0) continue;
        // pick a non-edge
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n && u < 0; ++b)
                if (!g.has_edge(a, b)) u = a, v = b;
        if (u < 0) continue;

        // predicted change: new edge term plus the shift of incident terms
        Rational predicted(2, g.degree(u) + g.degree(v) + 2);
        for (int x : g.neighbors(u))
            predicted += Rational(2, g.degree(u) + 1 + g.degree(x)) -
                         Rational(2, g.degree(u) + g.degree(x));
        for (int y : g.neighbors(v))
            predicted += Rational(2, g.degree(v) + 1 + g.degree(y)) -
                         Rational(2, g.degree(v) + g.degree(y));

        auto edges = g.edges();
        edges.emplace_back(u, v);
        Graph h(n, edges);
        CHECK(harmonic_index(h) - harmonic_index(g) == predicted);
    }
}

TEST_CASE("qt bounds dominate the conj1 bounds on the parameter grid") {
    for (int n = 3; n <= 50; ++n) {
        for (int d = 1; d <= n - 1; ++d) {
            CHECK(bound_value(BoundId::QtAdditive, n, d) >
                  bound_value(BoundId::Conj1Additive, n, d));
            if (n >= 4)
                CHECK(bound_value(BoundId::QtMultiplicative, n, d) >
                      bound_value(BoundId::Conj1Multiplicative, n, d));
        }
    }
}

TEST_CASE("upper and tree bounds hold exhaustively at small orders") {
    const BoundId upper[] = {BoundId::UpperAdditive, BoundId::UpperMultiplicative};
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : qtharm::enumerate_class(n, qtharm::GraphClass::Connected))
            CHECK_FALSE(qtharm::evaluate(g, upper).any_violated());

    const BoundId tree[] = {BoundId::TreeAdditive, BoundId::TreeMultiplicative};
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : qtharm::enumerate_class(n, qtharm::GraphClass::Tree))
            CHECK_FALSE(qtharm::evaluate(g, tree).any_violated());
}
