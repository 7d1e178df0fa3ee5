#include "qtharm/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "qtharm/errors.hpp"
#include "qtharm/formats.hpp"

namespace qtharm {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RangeCaps {
    int lo;
    int hi;
};

RangeCaps sweep_caps(GraphClass cls) {
    switch (cls) {
        case GraphClass::QuasiTree: return {3, 9};
        case GraphClass::Unicyclic: return {3, 9};
        case GraphClass::Connected: return {4, 8};
        case GraphClass::Tree: return {4, 11};
    }
    return {3, 9};
}

// Slack of a single bound: how far H sits inside the inequality.
Rational outcome_slack(const Rational& h, const BoundOutcome& b) {
    return is_lower_bound(b.id) ? h - b.value : b.value - h;
}

OrderSummary process_order(GraphClass cls, std::span<const BoundId> ids, int n, int jobs) {
    auto t0 = Clock::now();
    OrderSummary summary;
    summary.n = n;

    std::vector<Graph> graphs = enumerate_class(n, cls, jobs);
    std::vector<Verdict> verdicts(graphs.size());
    detail::parallel_for(graphs.size(), jobs,
                         [&](std::size_t i) { verdicts[i] = evaluate(graphs[i], ids); });

    summary.graph_count = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Verdict& v = verdicts[i];
        if (v.any_violated() || v.any_equal()) {
            GraphFinding f;
            f.n = n;
            f.graph6 = encode_graph6(graphs[i]);
            f.family = recognize_named(graphs[i]);
            f.h = v.h;
            f.diameter = v.diameter;
            f.bounds = v.bounds;
            (v.any_violated() ? summary.violations : summary.equalities).push_back(std::move(f));
        } else {
            Rational slack = outcome_slack(v.h, v.bounds.front());
            for (const auto& b : v.bounds) slack = std::min(slack, outcome_slack(v.h, b));
            if (!summary.min_strict_slack || slack < *summary.min_strict_slack)
                summary.min_strict_slack = slack;
        }
    }
    summary.wall_seconds = seconds_since(t0);
    return summary;
}

std::set<std::string> finding_keys(const std::vector<GraphFinding>& fs) {
    std::set<std::string> keys;
    for (const auto& f : fs) keys.insert(f.graph6);
    return keys;
}

std::string family_graph6(const FamilySpec& spec) {
    return encode_graph6(canonical_graph(canonical_form(build(spec))));
}

bool theorem_contract_holds(const VerificationReport& report) {
    for (const auto& order : report.orders) {
        std::set<std::string> expect_violations;
        std::set<std::string> expect_equalities;
        if (order.n == 5) expect_violations.insert(family_graph6({FamilyKind::U531}));
        if (order.n == 6) expect_violations.insert(family_graph6({FamilyKind::UFamily, 6}));
        if (order.n == 6) expect_equalities.insert(family_graph6({FamilyKind::VFamily, 1, 1}));
        if (order.n >= 7) expect_equalities.insert(family_graph6({FamilyKind::UFamily, order.n}));
        if (finding_keys(order.violations) != expect_violations) return false;
        if (finding_keys(order.equalities) != expect_equalities) return false;
    }
    return true;
}

}  // namespace

VerificationReport sweep_bounds(GraphClass cls, std::span<const BoundId> ids, int n_min,
                                int n_max, int jobs) {
    auto caps = sweep_caps(cls);
    if (n_min > n_max) throw InputError("sweep: empty order range");
    if (n_min < caps.lo || n_max > caps.hi)
        throw CapacityError("sweep: range " + std::to_string(n_min) + ".." + std::to_string(n_max) +
                            " outside " + std::to_string(caps.lo) + ".." + std::to_string(caps.hi) +
                            " for class " + std::string(class_name(cls)));
    if (ids.empty()) throw InputError("sweep: no bounds requested");

    auto t0 = Clock::now();
    VerificationReport report;
    report.swept_class = cls;
    report.bounds.assign(ids.begin(), ids.end());
    report.n_min = n_min;
    report.n_max = n_max;
    for (int n = n_min; n <= n_max; ++n)
        report.orders.push_back(process_order(cls, ids, n, jobs));
    report.wall_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_theorems(int n_min, int n_max, int jobs) {
    const BoundId ids[] = {BoundId::QtAdditive, BoundId::QtMultiplicative};
    VerificationReport report = sweep_bounds(GraphClass::QuasiTree, ids, n_min, n_max, jobs);
    report.contract_checked = true;
    report.contract_ok = theorem_contract_holds(report);
    return report;
}

VerificationReport verify_conjecture1(int n_min, int n_max, int jobs) {
    const BoundId ids[] = {BoundId::Conj1Additive, BoundId::Conj1Multiplicative};
    return sweep_bounds(GraphClass::Connected, ids, n_min, n_max, jobs);
}

ReportFormat report_format_from_name(std::string_view s) {
    if (s == "text") return ReportFormat::Text;
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    throw InputError("render: unknown format '" + std::string(s) + "'");
}

namespace {

json finding_json(const GraphFinding& f) {
    json out;
    out["graph6"] = f.graph6;
    out["n"] = f.n;
    out["family"] = f.family ? json(f.family->str()) : json(nullptr);
    out["h"] = f.h.str();
    out["diameter"] = f.diameter;
    json bounds = json::array();
    for (const auto& b : f.bounds) {
        bounds.push_back({{"id", std::string(bound_name(b.id))},
                          {"value", b.value.str()},
                          {"status", std::string(status_name(b.status))}});
    }
    out["bounds"] = bounds;
    return out;
}

std::string finding_text(const GraphFinding& f) {
    std::ostringstream os;
    os << "n=" << f.n << "  " << f.graph6;
    os << "  family=" << (f.family ? f.family->str() : std::string("-"));
    os << "  H=" << f.h.str() << "  D=" << f.diameter;
    for (const auto& b : f.bounds)
        os << "  " << bound_name(b.id) << "=" << b.value.str() << ":" << status_name(b.status);
    return os.str();
}

}  // namespace

std::string render(const VerificationReport& report, ReportFormat format, bool with_timings) {
    if (format == ReportFormat::Json) {
        json out;
        out["kind"] = "bound-sweep";
        out["class"] = std::string(class_name(report.swept_class));
        json bounds = json::array();
        for (BoundId id : report.bounds) bounds.push_back(std::string(bound_name(id)));
        out["bounds"] = bounds;
        out["range"] = {{"min", report.n_min}, {"max", report.n_max}};
        json orders = json::array();
        for (const auto& o : report.orders) {
            json oj;
            oj["n"] = o.n;
            oj["count"] = o.graph_count;
            json viols = json::array();
            for (const auto& f : o.violations) viols.push_back(finding_json(f));
            json equals = json::array();
            for (const auto& f : o.equalities) equals.push_back(finding_json(f));
            oj["violations"] = viols;
            oj["equalities"] = equals;
            oj["min_slack"] = o.min_strict_slack ? json(o.min_strict_slack->str()) : json(nullptr);
            if (with_timings) oj["wall_seconds"] = o.wall_seconds;
            orders.push_back(oj);
        }
        out["orders"] = orders;
        if (report.contract_checked)
            out["contract"] = {{"checked", true}, {"ok", report.contract_ok}};
        else
            out["contract"] = {{"checked", false}};
        if (with_timings) out["wall_seconds"] = report.wall_seconds;
        return out.dump(2) + "\n";
    }

    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "kind,n,graph6,family,h,diameter,bound,value,status\n";
        for (const auto& o : report.orders) {
            auto rows = [&](const char* kind, const std::vector<GraphFinding>& fs) {
                for (const auto& f : fs)
                    for (const auto& b : f.bounds)
                        os << kind << ',' << f.n << ',' << f.graph6 << ','
                           << (f.family ? f.family->str() : std::string()) << ',' << f.h.str()
                           << ',' << f.diameter << ',' << bound_name(b.id) << ',' << b.value.str()
                           << ',' << status_name(b.status) << '\n';
            };
            rows("violation", o.violations);
            rows("equality", o.equalities);
        }
        return os.str();
    }

    std::ostringstream os;
    os << "bound sweep: class=" << class_name(report.swept_class) << " range=" << report.n_min
       << ".." << report.n_max << " bounds=";
    for (std::size_t i = 0; i < report.bounds.size(); ++i)
        os << (i ? "," : "") << bound_name(report.bounds[i]);
    os << "\n\n";
    os << "    n      count  violations  equalities  min-slack\n";
    for (const auto& o : report.orders) {
        std::string slack = o.min_strict_slack ? o.min_strict_slack->str() : std::string("-");
        char line[128];
        std::snprintf(line, sizeof(line), "  %3d %10llu  %10zu  %10zu  %s", o.n,
                      static_cast<unsigned long long>(o.graph_count), o.violations.size(),
                      o.equalities.size(), slack.c_str());
        os << line;
        if (with_timings) {
            std::snprintf(line, sizeof(line), "  (%.2fs)", o.wall_seconds);
            os << line;
        }
        os << "\n";
    }
    bool any = false;
    for (const auto& o : report.orders) any = any || !o.violations.empty();
    if (any) {
        os << "\nviolations:\n";
        for (const auto& o : report.orders)
            for (const auto& f : o.violations) os << "  " << finding_text(f) << "\n";
    }
    any = false;
    for (const auto& o : report.orders) any = any || !o.equalities.empty();
    if (any) {
        os << "\nequalities:\n";
        for (const auto& o : report.orders)
            for (const auto& f : o.equalities) os << "  " << finding_text(f) << "\n";
    }
    if (report.contract_checked)
        os << "\ncontract: " << (report.contract_ok ? "ok" : "VIOLATED") << "\n";
    if (with_timings) {
        char line[64];
        std::snprintf(line, sizeof(line), "total time: %.2fs\n", report.wall_seconds);
        os << line;
    }
    return os.str();
}

namespace {

// Sample points in [2, x_max]: integers for cap 1, otherwise every p/q with
// q <= cap, ascending and deduplicated.
std::vector<Rational> grid_points(long x_max, int denominator_cap) {
    if (x_max < 2) throw InputError("lemma grid: upper end must be >= 2");
    if (denominator_cap < 1) throw InputError("lemma grid: denominator cap must be >= 1");
    std::set<Rational> pts;
    for (int q = 1; q <= denominator_cap; ++q)
        for (long p = 2 * q; p <= x_max * q; ++p) pts.insert(Rational(p, q));
    return {pts.begin(), pts.end()};
}

std::string grid_descr(long x_max, int cap, bool two_dim) {
    std::string base = two_dim ? "[2," + std::to_string(x_max) + "]^2"
                               : "[2," + std::to_string(x_max) + "]";
    if (cap == 1) return "integers in " + base;
    return "rationals with denominator <= " + std::to_string(cap) + " in " + base;
}

}  // namespace

Rational lemma_f_value(const Rational& x, const Rational& y) {
    Rational tx = (x + 4) / (x * (x + 1) * (x + 2));
    Rational ty = (y + 4) / (y * (y + 1) * (y + 2));
    return tx + ty - Rational(2) / ((x + y) * (x + y - 2));
}

Rational lemma_g_value(const Rational& x) {
    return Rational(1) / (x + 5) + (x - 1) / (x + 2);
}

LemmaCheckResult check_lemma_f(long x_max, long y_max, int denominator_cap) {
    if (x_max < 2 || y_max < 2) throw InputError("check_lemma_f: grid ends must be >= 2");
    auto xs = grid_points(x_max, denominator_cap);
    auto ys = grid_points(y_max, denominator_cap);

    LemmaCheckResult result;
    result.lemma = "f";
    result.grid = grid_descr(std::max(x_max, y_max), denominator_cap, true);
    result.ok = true;
    bool first = true;
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            Rational v = lemma_f_value(x, y);
            ++result.points;
            if (first || v < result.min_value) {
                result.min_value = v;
                result.min_at_x = x;
                result.min_at_y = y;
                first = false;
            }
            if (v.sign() <= 0 && result.ok) {
                result.ok = false;
                result.failure = "f(" + x.str() + "," + y.str() + ") = " + v.str() + " <= 0";
            }
        }
    }
    return result;
}

LemmaCheckResult check_lemma_g(long x_max, int denominator_cap) {
    if (x_max < 2) throw InputError("check_lemma_g: grid end must be >= 2");
    auto xs = grid_points(x_max, denominator_cap);

    LemmaCheckResult result;
    result.lemma = "g";
    result.grid = grid_descr(x_max, denominator_cap, false);
    result.ok = true;
    const Rational floor_value(11, 28);
    bool first = true;
    Rational prev;
    for (const auto& x : xs) {
        Rational mid = lemma_g_value(x);
        Rational upper = x / (x + 2);
        ++result.points;
        if (first || mid < result.min_value) {
            result.min_value = mid;
            result.min_at_x = x;
        }
        if (result.ok && upper < mid)
            result.failure = "x/(x+2) < g(x) at x = " + x.str(), result.ok = false;
        if (result.ok && mid < floor_value)
            result.failure = "g(" + x.str() + ") = " + mid.str() + " < 11/28", result.ok = false;
        if (result.ok && !first && mid < prev)
            result.failure = "g not nondecreasing at x = " + x.str(), result.ok = false;
        prev = mid;
        first = false;
    }
    return result;
}

std::string render(const LemmaCheckResult& result, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json out;
        out["kind"] = "lemma-check";
        out["lemma"] = result.lemma;
        out["grid"] = result.grid;
        out["points"] = result.points;
        out["ok"] = result.ok;
        out["min_value"] = result.min_value.str();
        out["min_at_x"] = result.min_at_x.str();
        if (result.lemma == "f") out["min_at_y"] = result.min_at_y.str();
        out["failure"] = result.failure ? json(*result.failure) : json(nullptr);
        return out.dump(2) + "\n";
    }
    if (format == ReportFormat::Csv) {
        std::ostringstream os;
        os << "lemma,grid,points,ok,min_value,min_at_x,min_at_y,failure\n";
        os << result.lemma << ",\"" << result.grid << "\"," << result.points << ','
           << (result.ok ? "true" : "false") << ',' << result.min_value.str() << ','
           << result.min_at_x.str() << ',' << (result.lemma == "f" ? result.min_at_y.str() : std::string())
           << ',' << (result.failure ? *result.failure : std::string()) << '\n';
        return os.str();
    }
    std::ostringstream os;
    os << "lemma " << result.lemma << " over " << result.grid << ": "
       << (result.ok ? "pass" : "FAIL") << "\n";
    os << "  points checked: " << result.points << "\n";
    os << "  min value: " << result.min_value.str() << " at x = " << result.min_at_x.str();
    if (result.lemma == "f") os << ", y = " << result.min_at_y.str();
    os << "\n";
    if (result.failure) os << "  failure: " << *result.failure << "\n";
    return os.str();
}

std::optional<FamilySpec> recognize_named(const Graph& g) {
    int n = g.order();
    if (n < 1 || n > kMaxCanonicalOrder) return std::nullopt;
    CanonicalForm target = canonical_form(g);

    std::vector<FamilySpec> candidates;
    if (n >= 6) candidates.push_back({FamilyKind::UFamily, n});
    for (int r = 0; 2 * r <= n - 4; ++r) candidates.push_back({FamilyKind::VFamily, r, n - 4 - r});
    if (n == 6) candidates.push_back({FamilyKind::U641});
    if (n == 5) candidates.push_back({FamilyKind::U531});
    if (n >= 3) candidates.push_back({FamilyKind::Cycle, n});
    candidates.push_back({FamilyKind::Path, n});
    if (n >= 2) candidates.push_back({FamilyKind::Star, n});
    candidates.push_back({FamilyKind::Complete, n});
    if (n == 4) candidates.push_back({FamilyKind::K4Minus});

    for (const auto& spec : candidates) {
        if (canonical_form(build(spec)) == target) return spec;
    }
    return std::nullopt;
}

}  // namespace qtharm
