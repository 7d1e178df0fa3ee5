#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "qtharm/enumerate.hpp"
#include "qtharm/errors.hpp"
#include "qtharm/families.hpp"
#include "qtharm/formats.hpp"
#include "qtharm/verify.hpp"

using qtharm::BoundId;
using qtharm::check_lemma_f;
using qtharm::check_lemma_g;
using qtharm::FamilyKind;
using qtharm::FamilySpec;
using qtharm::Graph;
using qtharm::GraphClass;
using qtharm::Rational;
using qtharm::ReportFormat;
using qtharm::VerificationReport;

namespace {

std::string family_g6(const FamilySpec& spec) {
    return qtharm::encode_graph6(
        qtharm::canonical_graph(qtharm::canonical_form(qtharm::build(spec))));
}

}  // namespace

TEST_CASE("lemma f on small grids") {
    auto r = check_lemma_f(2, 2);
    CHECK(r.ok);
    CHECK(r.points == 1);
    CHECK(r.min_value == Rational(1, 4));
    CHECK(r.min_at_x == Rational(2));
    CHECK(r.min_at_y == Rational(2));

    // symmetry: transposed grids attain the same minimum at swapped argmin
    auto a = check_lemma_f(2, 3);
    auto b = check_lemma_f(3, 2);
    CHECK(a.min_value == b.min_value);
    CHECK(a.min_value == Rational(7, 30));
    CHECK(a.min_at_x == b.min_at_y);
    CHECK(a.min_at_y == b.min_at_x);

    auto grid = check_lemma_f(50, 50);
    CHECK(grid.ok);
    CHECK(grid.points == 49 * 49);
    CHECK(grid.min_value.sign() > 0);

    auto dense = check_lemma_f(6, 6, 4);
    CHECK(dense.ok);
    CHECK(dense.points > 49);

    CHECK_THROWS_AS(check_lemma_f(1, 5), qtharm::InputError);
    CHECK_THROWS_AS(check_lemma_f(5, 1), qtharm::InputError);
    CHECK_THROWS_AS(check_lemma_f(5, 5, 0), qtharm::InputError);
}

TEST_CASE("lemma g chain and monotonicity") {
    auto r = check_lemma_g(100);
    CHECK(r.ok);
    CHECK(r.min_value == Rational(11, 28));  // attained exactly at the left end
    CHECK(r.min_at_x == Rational(2));

    CHECK(qtharm::check_lemma_g(2).min_value == Rational(11, 28));
    CHECK_THROWS_AS(check_lemma_g(1), qtharm::InputError);

    auto dense = check_lemma_g(10, 6);
    CHECK(dense.ok);
    CHECK(dense.min_value == Rational(11, 28));
}

TEST_CASE("lemma value helpers match hand computations") {
    CHECK(qtharm::lemma_f_value(Rational(2), Rational(2)) == Rational(1, 4));
    CHECK(qtharm::lemma_f_value(Rational(2), Rational(3)) ==
          qtharm::lemma_f_value(Rational(3), Rational(2)));
    CHECK(qtharm::lemma_g_value(Rational(2)) == Rational(11, 28));
    CHECK(qtharm::lemma_g_value(Rational(3)) == Rational(21, 40));
    CHECK(qtharm::lemma_g_value(Rational(3)) <= Rational(3, 5));
    CHECK(qtharm::lemma_g_value(Rational(10)) >= Rational(11, 28));
    CHECK(qtharm::lemma_g_value(Rational(10)) <= Rational(10, 12));
}

TEST_CASE("theorem sweep over orders 3..4 is clean") {
    auto report = qtharm::verify_theorems(3, 4, 1);
    REQUIRE(report.orders.size() == 2);
    CHECK(report.orders[0].graph_count == 1);
    CHECK(report.orders[1].graph_count == 3);
    for (const auto& o : report.orders) {
        CHECK(o.violations.empty());
        CHECK(o.equalities.empty());
        REQUIRE(o.min_strict_slack.has_value());
        CHECK(o.min_strict_slack->sign() > 0);
    }
    CHECK(report.contract_checked);
    CHECK(report.contract_ok);
}

TEST_CASE("theorem sweep over orders 5..6 finds the named graphs") {
    auto report = qtharm::verify_theorems(5, 6, 0);
    REQUIRE(report.orders.size() == 2);

    const auto& o5 = report.orders[0];
    REQUIRE(o5.violations.size() == 1);
    CHECK(o5.violations[0].graph6 == family_g6({FamilyKind::U531}));
    REQUIRE(o5.violations[0].family.has_value());
    CHECK(o5.violations[0].family->kind == FamilyKind::U531);
    CHECK(o5.violations[0].h == Rational(32, 15));
    CHECK(o5.equalities.empty());

    const auto& o6 = report.orders[1];
    REQUIRE(o6.violations.size() == 1);
    CHECK(o6.violations[0].graph6 == family_g6({FamilyKind::UFamily, 6}));
    CHECK(o6.violations[0].h == Rational(13, 5));
    REQUIRE(o6.equalities.size() == 1);
    CHECK(o6.equalities[0].graph6 == family_g6({FamilyKind::VFamily, 1, 1}));
    CHECK(o6.equalities[0].h == Rational(8, 3));

    CHECK(report.contract_ok);

    // every reported finding re-verifies from its graph6 line
    for (const auto& o : report.orders) {
        for (const auto* list : {&o.violations, &o.equalities}) {
            for (const auto& f : *list) {
                Graph g = qtharm::decode_graph6(f.graph6);
                auto v = qtharm::evaluate(g, report.bounds);
                CHECK(v.h == f.h);
                CHECK(v.diameter == f.diameter);
                for (std::size_t i = 0; i < v.bounds.size(); ++i) {
                    CHECK(v.bounds[i].value == f.bounds[i].value);
                    CHECK(v.bounds[i].status == f.bounds[i].status);
                }
            }
        }
    }
}

TEST_CASE("conjecture 1 sweep stays clean at small orders") {
    auto report = qtharm::verify_conjecture1(4, 5, 0);
    CHECK_FALSE(report.contract_checked);
    REQUIRE(report.orders.size() == 2);
    CHECK(report.orders[0].graph_count == 6);
    CHECK(report.orders[1].graph_count == 21);
    for (const auto& o : report.orders) {
        CHECK(o.violations.empty());
        // paths attain both conj1 bounds exactly
        bool path_equal = false;
        for (const auto& f : o.equalities)
            path_equal = path_equal || (f.family && f.family->kind == FamilyKind::Path);
        CHECK(path_equal);
    }
}

TEST_CASE("sweep range capacity checks") {
    CHECK_THROWS_AS(qtharm::verify_theorems(2, 5, 1), qtharm::CapacityError);
    CHECK_THROWS_AS(qtharm::verify_theorems(3, 10, 1), qtharm::CapacityError);
    CHECK_THROWS_AS(qtharm::verify_conjecture1(3, 5, 1), qtharm::CapacityError);
    CHECK_THROWS_AS(qtharm::verify_conjecture1(4, 9, 1), qtharm::CapacityError);
    CHECK_THROWS_AS(qtharm::verify_theorems(5, 4, 1), qtharm::InputError);
    const BoundId none[] = {BoundId::QtAdditive};
    CHECK_NOTHROW(qtharm::sweep_bounds(GraphClass::Tree, none, 4, 5, 1));
}

TEST_CASE("report rendering is reproducible without timings") {
    auto r1 = qtharm::verify_theorems(3, 5, 1);
    auto r2 = qtharm::verify_theorems(3, 5, 4);
    CHECK(qtharm::render(r1, ReportFormat::Json, false) ==
          qtharm::render(r2, ReportFormat::Json, false));
    CHECK(qtharm::render(r1, ReportFormat::Text, false) ==
          qtharm::render(r2, ReportFormat::Text, false));
    CHECK(qtharm::render(r1, ReportFormat::Csv) == qtharm::render(r2, ReportFormat::Csv));
}

TEST_CASE("report JSON carries the documented schema") {
    auto report = qtharm::verify_theorems(5, 5, 1);
    auto parsed = nlohmann::json::parse(qtharm::render(report, ReportFormat::Json, true));
    CHECK(parsed["kind"] == "bound-sweep");
    CHECK(parsed["class"] == "quasi-tree");
    CHECK(parsed["range"]["min"] == 5);
    CHECK(parsed["range"]["max"] == 5);
    CHECK(parsed["bounds"].size() == 2);
    REQUIRE(parsed["orders"].size() == 1);
    auto order = parsed["orders"][0];
    CHECK(order["n"] == 5);
    CHECK(order.contains("count"));
    CHECK(order.contains("min_slack"));
    CHECK(order.contains("wall_seconds"));
    REQUIRE(order["violations"].size() == 1);
    auto viol = order["violations"][0];
    CHECK(viol["family"] == "U531");
    CHECK(viol["h"] == "32/15");
    CHECK(viol["bounds"][0]["status"] == "violated");
    CHECK(parsed["contract"]["ok"] == true);

    auto text = qtharm::render(report, ReportFormat::Text, true);
    CHECK(text.find("contract: ok") != std::string::npos);
    auto csv = qtharm::render(report, ReportFormat::Csv);
    CHECK(csv.find("violation,5,") != std::string::npos);
}

TEST_CASE("lemma rendering formats") {
    auto r = check_lemma_g(10);
    auto parsed = nlohmann::json::parse(qtharm::render(r, ReportFormat::Json));
    CHECK(parsed["lemma"] == "g");
    CHECK(parsed["ok"] == true);
    CHECK(parsed["min_value"] == "11/28");
    CHECK(qtharm::render(r, ReportFormat::Text).find("pass") != std::string::npos);
    CHECK(qtharm::render(r, ReportFormat::Csv).find("11/28") != std::string::npos);
}

TEST_CASE("recognize_named") {
    std::mt19937 rng(31337);

    Graph v11 = qtharm::build({FamilyKind::VFamily, 1, 1});
    Graph shuffled = oracle::relabel(v11, oracle::random_permutation(rng, v11.order()));
    auto spec = qtharm::recognize_named(shuffled);
    REQUIRE(spec.has_value());
    CHECK(spec->kind == FamilyKind::VFamily);
    CHECK(spec->a + spec->b == 2);

    auto c7 = qtharm::recognize_named(qtharm::build({FamilyKind::Cycle, 7}));
    REQUIRE(c7.has_value());
    CHECK(*c7 == FamilySpec{FamilyKind::Cycle, 7});

    // V(2,1) and V(1,2) are the same class; recognition is deterministic
    auto v12 = qtharm::recognize_named(qtharm::build({FamilyKind::VFamily, 2, 1}));
    REQUIRE(v12.has_value());
    CHECK(v12->a <= v12->b);

    // K3 is simultaneously C3 and K(3); the cycle name wins by priority
    auto k3 = qtharm::recognize_named(qtharm::build({FamilyKind::Complete, 3}));
    REQUIRE(k3.has_value());
    CHECK(k3->kind == FamilyKind::Cycle);

    // order-6 member of the U series reports the U(n) spelling
    auto u6 = qtharm::recognize_named(qtharm::build({FamilyKind::U641}));
    REQUIRE(u6.has_value());
    CHECK(*u6 == FamilySpec{FamilyKind::UFamily, 6});

    // an 8-vertex quasi-tree matching no named family
    Graph anon(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {7, 1}, {7, 2}});
    CHECK(qtharm::is_quasi_tree(anon));
    CHECK_FALSE(qtharm::recognize_named(anon).has_value());

    CHECK_FALSE(qtharm::recognize_named(Graph(13)).has_value());
}

TEST_CASE("min slack stays positive across clean sweeps") {
    auto report = qtharm::verify_theorems(3, 6, 0);
    for (const auto& o : report.orders) {
        REQUIRE(o.min_strict_slack.has_value());
        CHECK(o.min_strict_slack->sign() > 0);
    }
}
