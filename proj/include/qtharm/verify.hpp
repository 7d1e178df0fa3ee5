#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtharm/enumerate.hpp"
#include "qtharm/families.hpp"
#include "qtharm/graph.hpp"
#include "qtharm/invariants.hpp"
#include "qtharm/rational.hpp"

namespace qtharm {

// One graph that tied or broke a bound during a sweep. Stored by canonical
// graph6 line so every entry re-verifies on demand.
struct GraphFinding {
    int n = 0;
    std::string graph6;
    std::optional<FamilySpec> family;
    Rational h;
    int diameter = 0;
    std::vector<BoundOutcome> bounds;
};

struct OrderSummary {
    int n = 0;
    std::uint64_t graph_count = 0;
    std::vector<GraphFinding> violations;
    std::vector<GraphFinding> equalities;
    std::optional<Rational> min_strict_slack;  // absent when no strict case
    double wall_seconds = 0.0;
};

struct VerificationReport {
    GraphClass swept_class = GraphClass::QuasiTree;
    std::vector<BoundId> bounds;
    int n_min = 0;
    int n_max = 0;
    std::vector<OrderSummary> orders;
    bool contract_checked = false;  // true only for the theorem sweep
    bool contract_ok = false;
    double wall_seconds = 0.0;
};

// Sweeps every graph of the class and order range through the given bounds.
// Report-only: no built-in expectation.
VerificationReport sweep_bounds(GraphClass cls, std::span<const BoundId> ids, int n_min,
                                int n_max, int jobs = 0);

// Quasi-tree sweep of both qt bounds (3 <= n_min <= n_max <= 9) with the
// built-in contract: violations are exactly U531 at order 5 and U(6) at
// order 6; equalities are exactly V(1,1) at order 6 and U(n) for n >= 7.
VerificationReport verify_theorems(int n_min, int n_max, int jobs = 0);

// All-connected-graph sweep of the conj1 bounds (4 <= n_min <= n_max <= 8),
// report-only.
VerificationReport verify_conjecture1(int n_min, int n_max, int jobs = 0);

enum class ReportFormat { Text, Json, Csv };

ReportFormat report_format_from_name(std::string_view s);  // input error if unknown

// with_timings = false yields byte-identical output for identical inputs.
std::string render(const VerificationReport& report, ReportFormat format,
                   bool with_timings = true);

// Exact grid check of a one- or two-variable inequality family.
struct LemmaCheckResult {
    std::string lemma;  // "f" or "g"
    std::string grid;
    std::uint64_t points = 0;
    bool ok = false;
    Rational min_value;
    Rational min_at_x;
    Rational min_at_y;                    // meaningful for "f" only
    std::optional<std::string> failure;   // first violating point, if any
};

// The two checked functions, exposed for direct evaluation.
Rational lemma_f_value(const Rational& x, const Rational& y);
Rational lemma_g_value(const Rational& x);

// f(x,y) = (x+4)/(x(x+1)(x+2)) + (y+4)/(y(y+1)(y+2)) - 2/((x+y)(x+y-2)),
// checked > 0 on the grid [2, x_max] x [2, y_max]. denominator_cap > 1
// additionally samples rationals p/q with q <= cap (evidence beyond the
// integer grid, not a proof over the reals).
LemmaCheckResult check_lemma_f(long x_max, long y_max, int denominator_cap = 1);

// g(x) = 1/(5+x) + (x-1)/(2+x): checks x/(x+2) >= g(x) >= 11/28 on
// [2, x_max], plus monotonicity of g over the sampled points in order.
LemmaCheckResult check_lemma_g(long x_max, int denominator_cap = 1);

std::string render(const LemmaCheckResult& result, ReportFormat format);

// The named family isomorphic to g, if any, in fixed priority order
// (U(n), V(r,s), U641, U531, cycle, path, star, complete, K4-).
std::optional<FamilySpec> recognize_named(const Graph& g);

}  // namespace qtharm
