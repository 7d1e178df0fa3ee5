#include "qtharm.h"

#include <json.hpp>

#include <cstring>
#include <string>

#include "qtharm/enumerate.hpp"
#include "qtharm/errors.hpp"
#include "qtharm/families.hpp"
#include "qtharm/formats.hpp"
#include "qtharm/graph.hpp"
#include "qtharm/invariants.hpp"
#include "qtharm/verify.hpp"

struct qth_graph {
    qtharm::Graph g;
};

struct qth_report {
    qtharm::VerificationReport r;
};

struct qth_lemma_result {
    qtharm::LemmaCheckResult r;
};

namespace {

thread_local std::string t_last_error;

int code_for(const qtharm::Error& e) {
    using Kind = qtharm::Error::Kind;
    switch (e.kind()) {
        case Kind::Input: return QTH_ERR_INPUT;
        case Kind::Domain: return QTH_ERR_DOMAIN;
        case Kind::Capacity: return QTH_ERR_CAPACITY;
        case Kind::Parse: return QTH_ERR_PARSE;
        case Kind::Unsupported: return QTH_ERR_UNSUPPORTED;
    }
    return QTH_ERR_INTERNAL;
}

// Every entry point funnels through here so exceptions never cross the ABI.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        t_last_error.clear();
        return fn();
    } catch (const qtharm::Error& e) {
        t_last_error = e.what();
        return code_for(e);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QTH_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return QTH_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool ok, const char* what) {
    if (!ok) {
        t_last_error = what;
        return QTH_ERR_INPUT;
    }
    return QTH_OK;
}

std::vector<qtharm::BoundId> parse_bounds_csv(const char* csv) {
    std::vector<qtharm::BoundId> ids;
    std::string s = csv ? csv : "";
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(start, end - start);
        if (!tok.empty()) {
            auto id = qtharm::bound_from_name(tok);
            if (!id) throw qtharm::InputError("unknown bound id '" + tok + "'");
            ids.push_back(*id);
        }
        start = end + 1;
    }
    if (ids.empty()) throw qtharm::InputError("no bound ids given");
    return ids;
}

}  // namespace

extern "C" {

const char* qth_version(void) { return "0.1.0"; }

const char* qth_last_error(void) { return t_last_error.c_str(); }

void qth_string_free(char* s) { delete[] s; }

int qth_graph_from_graph6(const char* line, qth_graph** out) {
    return guarded([&]() -> int {
        if (int rc = require(line && out, "null argument")) return rc;
        *out = new qth_graph{qtharm::decode_graph6(line)};
        return QTH_OK;
    });
}

int qth_graph_from_edge_list(const char* text, qth_graph** out) {
    return guarded([&]() -> int {
        if (int rc = require(text && out, "null argument")) return rc;
        *out = new qth_graph{qtharm::parse_edge_list(text)};
        return QTH_OK;
    });
}

int qth_graph_from_family(const char* spec, qth_graph** out) {
    return guarded([&]() -> int {
        if (int rc = require(spec && out, "null argument")) return rc;
        *out = new qth_graph{qtharm::build(qtharm::FamilySpec::parse(spec))};
        return QTH_OK;
    });
}

void qth_graph_free(qth_graph* g) { delete g; }

int qth_graph_order(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.order();
    });
}

int qth_graph_edge_count(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.edge_count();
    });
}

int qth_graph_degree(const qth_graph* g, int v) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.degree(v);
    });
}

int qth_graph_min_degree(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.min_degree();
    });
}

int qth_graph_is_connected(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.is_connected() ? 1 : 0;
    });
}

int qth_graph_is_tree(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.is_tree() ? 1 : 0;
    });
}

int qth_graph_is_quasi_tree(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return qtharm::is_quasi_tree(g->g) ? 1 : 0;
    });
}

int qth_graph_diameter(const qth_graph* g) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        return g->g.diameter();
    });
}

int qth_graph_quasi_tree_witnesses(const qth_graph* g, int* buf, int cap) {
    return guarded([&]() -> int {
        if (int rc = require(g != nullptr, "null graph")) return rc;
        auto w = qtharm::quasi_tree_witnesses(g->g);
        int count = static_cast<int>(w.witnesses.size());
        for (int i = 0; i < count && i < cap && buf; ++i) buf[i] = w.witnesses[static_cast<std::size_t>(i)];
        return count;
    });
}

int qth_graph_harmonic_index(const qth_graph* g, char** out_pq) {
    return guarded([&]() -> int {
        if (int rc = require(g && out_pq, "null argument")) return rc;
        *out_pq = dup_string(qtharm::harmonic_index(g->g).str());
        return QTH_OK;
    });
}

int qth_graph_to_graph6(const qth_graph* g, char** out) {
    return guarded([&]() -> int {
        if (int rc = require(g && out, "null argument")) return rc;
        *out = dup_string(qtharm::encode_graph6(g->g));
        return QTH_OK;
    });
}

int qth_graph_to_edge_list(const qth_graph* g, char** out) {
    return guarded([&]() -> int {
        if (int rc = require(g && out, "null argument")) return rc;
        *out = dup_string(qtharm::emit_edge_list(g->g));
        return QTH_OK;
    });
}

int qth_graph_recognize(const qth_graph* g, char** out_spec) {
    return guarded([&]() -> int {
        if (int rc = require(g && out_spec, "null argument")) return rc;
        auto spec = qtharm::recognize_named(g->g);
        *out_spec = dup_string(spec ? spec->str() : std::string());
        return QTH_OK;
    });
}

int qth_bound_value(const char* bound_id, int n, int diameter, char** out_pq) {
    return guarded([&]() -> int {
        if (int rc = require(bound_id && out_pq, "null argument")) return rc;
        auto id = qtharm::bound_from_name(bound_id);
        if (!id) throw qtharm::InputError("unknown bound id '" + std::string(bound_id) + "'");
        *out_pq = dup_string(qtharm::bound_value(*id, n, diameter).str());
        return QTH_OK;
    });
}

int qth_graph_evaluate(const qth_graph* g, const char* bounds_csv, char** out_json) {
    return guarded([&]() -> int {
        if (int rc = require(g && bounds_csv && out_json, "null argument")) return rc;
        auto ids = parse_bounds_csv(bounds_csv);
        qtharm::Verdict v = qtharm::evaluate(g->g, ids);
        nlohmann::ordered_json out;
        out["n"] = v.n;
        out["diameter"] = v.diameter;
        out["h"] = v.h.str();
        auto bounds = nlohmann::ordered_json::array();
        for (const auto& b : v.bounds)
            bounds.push_back({{"id", std::string(qtharm::bound_name(b.id))},
                              {"value", b.value.str()},
                              {"status", std::string(qtharm::status_name(b.status))}});
        out["bounds"] = bounds;
        *out_json = dup_string(out.dump(2) + "\n");
        return QTH_OK;
    });
}

int qth_family_closed_form(const char* spec, char** out_h_pq, long* out_diameter) {
    return guarded([&]() -> int {
        if (int rc = require(spec && out_h_pq && out_diameter, "null argument")) return rc;
        auto cf = qtharm::closed_form(qtharm::FamilySpec::parse(spec));
        *out_h_pq = dup_string(cf.h.str());
        *out_diameter = cf.diameter;
        return QTH_OK;
    });
}

int qth_rational_decimal(const char* pq, unsigned digits, char** out) {
    return guarded([&]() -> int {
        if (int rc = require(pq && out, "null argument")) return rc;
        *out = dup_string(qtharm::Rational::parse(pq).decimal(digits));
        return QTH_OK;
    });
}

namespace {

int run_enumeration(int n, int jobs, qth_graph6_sink sink, void* user, bool via_trees,
                    qtharm::GraphClass cls = qtharm::GraphClass::QuasiTree) {
    struct Stop {};
    auto yield = [&](const qtharm::Graph& g) {
        if (sink(qtharm::encode_graph6(g).c_str(), user) != 0) throw Stop{};
    };
    try {
        if (via_trees)
            qtharm::quasi_trees_via_trees(n, yield, jobs);
        else
            qtharm::enumerate_class(n, cls, yield, jobs);
    } catch (const Stop&) {
        // sink asked to stop early; not an error
    }
    return QTH_OK;
}

}  // namespace

int qth_enumerate(int n, const char* graph_class, int jobs, qth_graph6_sink sink, void* user) {
    return guarded([&]() -> int {
        if (int rc = require(graph_class && sink, "null argument")) return rc;
        return run_enumeration(n, jobs, sink, user, false, qtharm::class_from_name(graph_class));
    });
}

int qth_enumerate_quasi_trees_via_trees(int n, int jobs, qth_graph6_sink sink, void* user) {
    return guarded([&]() -> int {
        if (int rc = require(sink != nullptr, "null sink")) return rc;
        return run_enumeration(n, jobs, sink, user, true);
    });
}

int qth_verify_theorems(int n_min, int n_max, int jobs, qth_report** out) {
    return guarded([&]() -> int {
        if (int rc = require(out != nullptr, "null output")) return rc;
        *out = new qth_report{qtharm::verify_theorems(n_min, n_max, jobs)};
        return QTH_OK;
    });
}

int qth_verify_conjecture1(int n_min, int n_max, int jobs, qth_report** out) {
    return guarded([&]() -> int {
        if (int rc = require(out != nullptr, "null output")) return rc;
        *out = new qth_report{qtharm::verify_conjecture1(n_min, n_max, jobs)};
        return QTH_OK;
    });
}

int qth_verify_sweep(const char* graph_class, const char* bounds_csv, int n_min, int n_max,
                     int jobs, qth_report** out) {
    return guarded([&]() -> int {
        if (int rc = require(graph_class && bounds_csv && out, "null argument")) return rc;
        auto ids = parse_bounds_csv(bounds_csv);
        *out = new qth_report{qtharm::sweep_bounds(qtharm::class_from_name(graph_class), ids,
                                                   n_min, n_max, jobs)};
        return QTH_OK;
    });
}

int qth_report_contract_ok(const qth_report* r) {
    return guarded([&]() -> int {
        if (int rc = require(r != nullptr, "null report")) return rc;
        if (!r->r.contract_checked) return -1;
        return r->r.contract_ok ? 1 : 0;
    });
}

int qth_report_render(const qth_report* r, const char* format, int with_timings, char** out) {
    return guarded([&]() -> int {
        if (int rc = require(r && format && out, "null argument")) return rc;
        auto fmt = qtharm::report_format_from_name(format);
        *out = dup_string(qtharm::render(r->r, fmt, with_timings != 0));
        return QTH_OK;
    });
}

void qth_report_free(qth_report* r) { delete r; }

int qth_check_lemma_f(long x_max, long y_max, int denominator_cap, qth_lemma_result** out) {
    return guarded([&]() -> int {
        if (int rc = require(out != nullptr, "null output")) return rc;
        *out = new qth_lemma_result{qtharm::check_lemma_f(x_max, y_max, denominator_cap)};
        return QTH_OK;
    });
}

int qth_check_lemma_g(long x_max, int denominator_cap, qth_lemma_result** out) {
    return guarded([&]() -> int {
        if (int rc = require(out != nullptr, "null output")) return rc;
        *out = new qth_lemma_result{qtharm::check_lemma_g(x_max, denominator_cap)};
        return QTH_OK;
    });
}

int qth_lemma_result_ok(const qth_lemma_result* r) {
    return guarded([&]() -> int {
        if (int rc = require(r != nullptr, "null result")) return rc;
        return r->r.ok ? 1 : 0;
    });
}

int qth_lemma_result_min(const qth_lemma_result* r, char** out_pq) {
    return guarded([&]() -> int {
        if (int rc = require(r && out_pq, "null argument")) return rc;
        *out_pq = dup_string(r->r.min_value.str());
        return QTH_OK;
    });
}

int qth_lemma_result_render(const qth_lemma_result* r, const char* format, char** out) {
    return guarded([&]() -> int {
        if (int rc = require(r && format && out, "null argument")) return rc;
        auto fmt = qtharm::report_format_from_name(format);
        *out = dup_string(qtharm::render(r->r, fmt));
        return QTH_OK;
    });
}

void qth_lemma_result_free(qth_lemma_result* r) { delete r; }

}  // extern "C"
