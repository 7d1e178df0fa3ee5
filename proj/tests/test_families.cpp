#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qtharm/enumerate.hpp"
#include "qtharm/errors.hpp"
#include "qtharm/families.hpp"
#include "qtharm/invariants.hpp"

using qtharm::BoundId;
using qtharm::BoundStatus;
using qtharm::closed_form;
using qtharm::FamilyKind;
using qtharm::FamilySpec;
using qtharm::Graph;
using qtharm::Rational;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("family construction shapes") {
    Graph v00 = qtharm::build({FamilyKind::VFamily, 0, 0});
    CHECK(v00.order() == 4);
    CHECK(v00.edge_count() == 5);
    CHECK(degree_sequence(v00) == std::vector<int>{2, 2, 3, 3});
    CHECK(qtharm::canonical_form(v00) ==
          qtharm::canonical_form(qtharm::build({FamilyKind::K4Minus})));

    Graph u6 = qtharm::build({FamilyKind::UFamily, 6});
    CHECK(u6.order() == 6);
    CHECK(u6.edge_count() == 6);
    CHECK(u6 == qtharm::build({FamilyKind::U641}));

    Graph u8 = qtharm::build({FamilyKind::UFamily, 8});
    CHECK(u8.order() == 8);
    CHECK(u8.edge_count() == 8);
    CHECK(u8.diameter() == 6);

    for (int r = 0; r <= 4; ++r) {
        for (int s = 0; s <= 4; ++s) {
            Graph v = qtharm::build({FamilyKind::VFamily, r, s});
            CHECK(v.order() == 4 + r + s);
            CHECK(v.edge_count() == 5 + r + s);
        }
    }

    CHECK(degree_sequence(qtharm::build({FamilyKind::U531})) ==
          std::vector<int>{1, 1, 2, 3, 3});
    CHECK(qtharm::build({FamilyKind::K13Plus}).is_tree());

    CHECK_THROWS_AS(qtharm::build({FamilyKind::UFamily, 5}), qtharm::InputError);
    CHECK_THROWS_AS(qtharm::build({FamilyKind::VFamily, -1, 0}), qtharm::InputError);
    CHECK_THROWS_AS(qtharm::build({FamilyKind::Cycle, 2}), qtharm::InputError);
    CHECK_THROWS_AS(qtharm::build({FamilyKind::Star, 1}), qtharm::InputError);
}

TEST_CASE("closed forms of the V family") {
    CHECK(closed_form({FamilyKind::VFamily, 0, 1}).h == Rational(23, 10));
    CHECK(closed_form({FamilyKind::VFamily, 2, 3}).h == Rational(43, 10));
    CHECK(closed_form({FamilyKind::VFamily, 2, 3}).diameter == 7);
    CHECK(closed_form({FamilyKind::VFamily, 0, 2}).h == Rational(43, 15));
    CHECK(closed_form({FamilyKind::VFamily, 0, 2}).diameter == 4);
    CHECK(closed_form({FamilyKind::VFamily, 1, 0}).h == Rational(23, 10));  // symmetric
}

TEST_CASE("closed form of U(n) and the fixed families") {
    CHECK(closed_form({FamilyKind::UFamily, 9}).h == Rational(25, 6));
    CHECK(closed_form({FamilyKind::UFamily, 9}).diameter == 7);
    CHECK_THROWS_AS(closed_form({FamilyKind::UFamily, 6}), qtharm::UnsupportedError);
    CHECK_THROWS_AS(closed_form({FamilyKind::U641}), qtharm::UnsupportedError);
    CHECK_THROWS_AS(closed_form({FamilyKind::U531}), qtharm::UnsupportedError);
    CHECK_THROWS_AS(closed_form({FamilyKind::K13Plus}), qtharm::UnsupportedError);

    CHECK(closed_form({FamilyKind::Path, 2}).h == Rational(1));
    CHECK(closed_form({FamilyKind::Path, 5}).h == Rational(4, 3) + Rational(1));
    CHECK(closed_form({FamilyKind::Cycle, 7}).h == Rational(7, 2));
    CHECK(closed_form({FamilyKind::Cycle, 7}).diameter == 3);
    CHECK(closed_form({FamilyKind::Star, 5}).h == Rational(8, 5));
    CHECK(closed_form({FamilyKind::Complete, 4}).h == Rational(2));
}

TEST_CASE("closed forms match direct computation across the grids") {
    for (int r = 0; r <= 10; ++r) {
        for (int s = 0; s <= 10; ++s) {
            FamilySpec spec{FamilyKind::VFamily, r, s};
            Graph g = qtharm::build(spec);
            auto cf = closed_form(spec);
            CHECK(qtharm::harmonic_index(g) == cf.h);
            CHECK(g.diameter() == cf.diameter);
        }
    }
    for (int n = 7; n <= 30; ++n) {
        FamilySpec spec{FamilyKind::UFamily, n};
        Graph g = qtharm::build(spec);
        auto cf = closed_form(spec);
        CHECK(qtharm::harmonic_index(g) == cf.h);
        CHECK(oracle::same(cf.h, oracle::harmonic(g)));
        CHECK(g.diameter() == cf.diameter);
    }
    for (int n = 2; n <= 30; ++n) {
        for (FamilyKind kind : {FamilyKind::Path, FamilyKind::Star, FamilyKind::Complete}) {
            auto cf = closed_form({kind, n});
            Graph g = qtharm::build({kind, n});
            CHECK(qtharm::harmonic_index(g) == cf.h);
            CHECK(g.diameter() == cf.diameter);
        }
        if (n >= 3) {
            auto cf = closed_form({FamilyKind::Cycle, n});
            Graph g = qtharm::build({FamilyKind::Cycle, n});
            CHECK(qtharm::harmonic_index(g) == cf.h);
            CHECK(g.diameter() == cf.diameter);
        }
    }
}

TEST_CASE("U(n) attains both qt bounds exactly for n = 7..30") {
    const BoundId qt[] = {BoundId::QtAdditive, BoundId::QtMultiplicative};
    for (int n = 7; n <= 30; ++n) {
        auto v = qtharm::evaluate(qtharm::build({FamilyKind::UFamily, n}), qt);
        CHECK(v.find(BoundId::QtAdditive)->status == BoundStatus::Equal);
        CHECK(v.find(BoundId::QtMultiplicative)->status == BoundStatus::Equal);
    }
}

TEST_CASE("the two exceptional graphs break both qt bounds") {
    const BoundId qt[] = {BoundId::QtAdditive, BoundId::QtMultiplicative};
    for (FamilyKind kind : {FamilyKind::U641, FamilyKind::U531}) {
        auto v = qtharm::evaluate(qtharm::build({kind}), qt);
        CHECK(v.find(BoundId::QtAdditive)->status == BoundStatus::Violated);
        CHECK(v.find(BoundId::QtMultiplicative)->status == BoundStatus::Violated);
    }
}

TEST_CASE("family members are quasi-trees where expected") {
    for (int n = 6; n <= 12; ++n)
        CHECK(qtharm::is_quasi_tree(qtharm::build({FamilyKind::UFamily, n})));
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s)
            CHECK(qtharm::is_quasi_tree(qtharm::build({FamilyKind::VFamily, r, s})));
    for (int n = 3; n <= 9; ++n)
        CHECK(qtharm::is_quasi_tree(qtharm::build({FamilyKind::Cycle, n})));
}

TEST_CASE("family spec parsing") {
    CHECK(FamilySpec::parse("V(1,1)") == FamilySpec{FamilyKind::VFamily, 1, 1});
    CHECK(FamilySpec::parse("v( 2 , 10 )") == FamilySpec{FamilyKind::VFamily, 2, 10});
    CHECK(FamilySpec::parse("U(8)") == FamilySpec{FamilyKind::UFamily, 8});
    CHECK(FamilySpec::parse("u641") == FamilySpec{FamilyKind::U641});
    CHECK(FamilySpec::parse("U531") == FamilySpec{FamilyKind::U531});
    CHECK(FamilySpec::parse("k4-") == FamilySpec{FamilyKind::K4Minus});
    CHECK(FamilySpec::parse("K13+") == FamilySpec{FamilyKind::K13Plus});
    CHECK(FamilySpec::parse("P(5)") == FamilySpec{FamilyKind::Path, 5});
    CHECK(FamilySpec::parse("C(4)") == FamilySpec{FamilyKind::Cycle, 4});
    CHECK(FamilySpec::parse("K(3)") == FamilySpec{FamilyKind::Complete, 3});
    CHECK(FamilySpec::parse("s(6)") == FamilySpec{FamilyKind::Star, 6});

    CHECK_THROWS_AS(FamilySpec::parse("X(3)"), qtharm::ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("V(1)"), qtharm::ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("U()"), qtharm::ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("P(2,3)"), qtharm::ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("V(-1,2)"), qtharm::ParseError);
    CHECK_THROWS_AS(FamilySpec::parse(""), qtharm::ParseError);

    // round trip through the printed form
    for (FamilySpec spec : {FamilySpec{FamilyKind::VFamily, 3, 4}, FamilySpec{FamilyKind::UFamily, 9},
                            FamilySpec{FamilyKind::U531}, FamilySpec{FamilyKind::K4Minus},
                            FamilySpec{FamilyKind::Star, 7}})
        CHECK(FamilySpec::parse(spec.str()) == spec);
}
