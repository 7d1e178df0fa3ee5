// qtharm command line tool. Talks to the library exclusively through the
// C API in qtharm.h.
//
// Exit codes: 0 success (and theorem contract satisfied where one applies),
// 1 contract or lemma check failed, 2 usage/parse/input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qtharm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitUsage = 2;

struct CStr {
    char* p = nullptr;
    ~CStr() { qth_string_free(p); }
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
    qth_graph* g = nullptr;
    ~GraphHandle() { qth_graph_free(g); }
    GraphHandle() = default;
    GraphHandle(GraphHandle&& o) noexcept : g(o.g) { o.g = nullptr; }
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
};

int fail(int rc, const std::string& context) {
    std::cerr << "qtharm: " << context << ": " << qth_last_error() << "\n";
    (void)rc;
    return kExitUsage;
}

std::string read_stream(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool read_input_text(const std::string& path, std::string& out) {
    if (path.empty()) {
        out = read_stream(std::cin);
        return true;
    }
    std::ifstream f(path);
    if (!f) {
        std::cerr << "qtharm: cannot open '" << path << "'\n";
        return false;
    }
    out = read_stream(f);
    return true;
}

bool open_output(const std::string& path, std::ofstream& file, std::ostream*& out) {
    if (path.empty()) {
        out = &std::cout;
        return true;
    }
    file.open(path);
    if (!file) {
        std::cerr << "qtharm: cannot open '" << path << "' for writing\n";
        return false;
    }
    out = &file;
    return true;
}

struct NamedGraph {
    std::string label;
    GraphHandle handle;
};

// Decodes the input as one graph per graph6 line, or one edge-list graph.
int load_graphs(const std::string& family, const std::string& in_path, const std::string& format,
                std::vector<NamedGraph>& out) {
    if (!family.empty()) {
        NamedGraph g;
        g.label = family;
        if (int rc = qth_graph_from_family(family.c_str(), &g.handle.g))
            return fail(rc, "family '" + family + "'");
        out.push_back(std::move(g));
        return kExitOk;
    }
    std::string text;
    if (!read_input_text(in_path, text)) return kExitUsage;
    if (format == "edgelist") {
        NamedGraph g;
        g.label = in_path.empty() ? "stdin" : in_path;
        if (int rc = qth_graph_from_edge_list(text.c_str(), &g.handle.g))
            return fail(rc, "edge list");
        out.push_back(std::move(g));
        return kExitOk;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        NamedGraph g;
        g.label = line;
        if (int rc = qth_graph_from_graph6(line.c_str(), &g.handle.g))
            return fail(rc, "graph6 line '" + line + "'");
        out.push_back(std::move(g));
    }
    if (out.empty()) {
        std::cerr << "qtharm: no input graphs\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_index(const std::string& family, const std::string& in_path, const std::string& from,
              const std::string& format, unsigned decimal) {
    std::vector<NamedGraph> graphs;
    if (int rc = load_graphs(family, in_path, from, graphs)) return rc;

    for (const auto& g : graphs) {
        int n = qth_graph_order(g.handle.g);
        int m = qth_graph_edge_count(g.handle.g);
        int connected = qth_graph_is_connected(g.handle.g);
        if (connected != 1) {
            std::cerr << "qtharm: input graph is not connected\n";
            return kExitUsage;
        }
        CStr h;
        if (int rc = qth_graph_harmonic_index(g.handle.g, &h.p)) return fail(rc, "harmonic index");
        int diameter = qth_graph_diameter(g.handle.g);
        if (diameter < 0) return fail(diameter, "diameter");
        int min_deg = qth_graph_min_degree(g.handle.g);
        int quasi = qth_graph_is_quasi_tree(g.handle.g);
        std::vector<int> witnesses(static_cast<std::size_t>(n > 0 ? n : 1));
        int wcount = qth_graph_quasi_tree_witnesses(g.handle.g, witnesses.data(),
                                                    static_cast<int>(witnesses.size()));
        if (wcount < 0) return fail(wcount, "witnesses");
        witnesses.resize(static_cast<std::size_t>(wcount));
        CStr fam;
        if (int rc = qth_graph_recognize(g.handle.g, &fam.p)) return fail(rc, "recognize");
        CStr hdec;
        if (decimal > 0)
            if (int rc = qth_rational_decimal(h.p, decimal, &hdec.p)) return fail(rc, "decimal");

        if (format == "json") {
            nlohmann::ordered_json out;
            out["input"] = g.label;
            out["n"] = n;
            out["edges"] = m;
            out["h"] = h.str();
            if (decimal > 0) out["h_decimal"] = hdec.str();
            out["diameter"] = diameter;
            out["min_degree"] = min_deg;
            out["quasi_tree"] = quasi == 1;
            out["witnesses"] = witnesses;
            out["family"] = fam.str().empty() ? nlohmann::ordered_json(nullptr)
                                              : nlohmann::ordered_json(fam.str());
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "graph: " << g.label << "\n";
            std::cout << "  n: " << n << "  edges: " << m << "\n";
            std::cout << "  H: " << h.str();
            if (decimal > 0) std::cout << "  (~ " << hdec.str() << ")";
            std::cout << "\n";
            std::cout << "  diameter: " << diameter << "\n";
            std::cout << "  min degree: " << min_deg << "\n";
            std::cout << "  quasi-tree: " << (quasi == 1 ? "yes" : "no");
            if (!witnesses.empty()) {
                std::cout << (quasi == 1 ? " (witnesses:" : " (tree; leaf witnesses:");
                for (int w : witnesses) std::cout << ' ' << w;
                std::cout << ")";
            }
            std::cout << "\n";
            if (!fam.str().empty()) std::cout << "  family: " << fam.str() << "\n";
        }
    }
    return kExitOk;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int cmd_verify(const std::string& range, const std::string& bounds, const std::string& format,
               const std::string& out_path, int jobs, bool timings) {
    int lo = 0, hi = 0;
    if (!parse_range(range, lo, hi)) {
        std::cerr << "qtharm: bad order range '" << range << "' (expected A..B)\n";
        return kExitUsage;
    }

    qth_report* report = nullptr;
    int rc;
    if (bounds == "qt") {
        rc = qth_verify_theorems(lo, hi, jobs, &report);
    } else if (bounds == "conj1") {
        rc = qth_verify_conjecture1(lo, hi, jobs, &report);
    } else if (bounds == "upper") {
        rc = qth_verify_sweep("connected", "upper_additive,upper_multiplicative", lo, hi, jobs,
                              &report);
    } else if (bounds == "tree") {
        rc = qth_verify_sweep("tree", "tree_additive,tree_multiplicative", lo, hi, jobs, &report);
    } else {
        // explicit comma-separated bound ids over the quasi-tree class
        rc = qth_verify_sweep("quasi-tree", bounds.c_str(), lo, hi, jobs, &report);
    }
    if (rc) return fail(rc, "verify");
    std::unique_ptr<qth_report, decltype(&qth_report_free)> guard(report, qth_report_free);

    CStr text;
    if ((rc = qth_report_render(report, format.c_str(), timings ? 1 : 0, &text.p)))
        return fail(rc, "render");
    std::ofstream file;
    std::ostream* out = nullptr;
    if (!open_output(out_path, file, out)) return kExitUsage;
    *out << text.str();

    int contract = qth_report_contract_ok(report);
    return contract == 0 ? kExitContract : kExitOk;
}

int cmd_enumerate(int n, const std::string& cls, const std::string& out_path, int jobs,
                  bool via_trees) {
    std::ofstream file;
    std::ostream* out = nullptr;
    if (!open_output(out_path, file, out)) return kExitUsage;

    auto sink = [](const char* line, void* user) {
        *static_cast<std::ostream*>(user) << line << "\n";
        return 0;
    };
    int rc = via_trees ? qth_enumerate_quasi_trees_via_trees(n, jobs, sink, out)
                       : qth_enumerate(n, cls.c_str(), jobs, sink, out);
    if (rc) return fail(rc, "enumerate");
    return kExitOk;
}

int cmd_lemmas(long fx, long fy, long gx, int den, const std::string& format) {
    qth_lemma_result* f = nullptr;
    if (int rc = qth_check_lemma_f(fx, fy, den, &f)) return fail(rc, "lemma f");
    std::unique_ptr<qth_lemma_result, decltype(&qth_lemma_result_free)> fguard(
        f, qth_lemma_result_free);
    qth_lemma_result* g = nullptr;
    if (int rc = qth_check_lemma_g(gx, den, &g)) return fail(rc, "lemma g");
    std::unique_ptr<qth_lemma_result, decltype(&qth_lemma_result_free)> gguard(
        g, qth_lemma_result_free);

    for (auto* r : {f, g}) {
        CStr text;
        if (int rc = qth_lemma_result_render(r, format.c_str(), &text.p))
            return fail(rc, "render");
        std::cout << text.str();
    }
    bool ok = qth_lemma_result_ok(f) == 1 && qth_lemma_result_ok(g) == 1;
    return ok ? kExitOk : kExitContract;
}

int cmd_family(const std::string& spec, const std::string& out_path) {
    GraphHandle g;
    if (int rc = qth_graph_from_family(spec.c_str(), &g.g)) return fail(rc, "family");
    CStr g6, el, h;
    if (int rc = qth_graph_to_graph6(g.g, &g6.p)) return fail(rc, "encode");
    if (int rc = qth_graph_to_edge_list(g.g, &el.p)) return fail(rc, "edge list");
    if (int rc = qth_graph_harmonic_index(g.g, &h.p)) return fail(rc, "harmonic index");
    int diameter = qth_graph_diameter(g.g);
    if (diameter < 0) return fail(diameter, "diameter");

    std::ofstream file;
    std::ostream* out = nullptr;
    if (!open_output(out_path, file, out)) return kExitUsage;

    *out << "family: " << spec << "\n";
    *out << "graph6: " << g6.str() << "\n";
    *out << "n: " << qth_graph_order(g.g) << "  edges: " << qth_graph_edge_count(g.g) << "\n";
    *out << "H: " << h.str() << "  diameter: " << diameter << "\n";
    CStr cf_h;
    long cf_d = 0;
    if (qth_family_closed_form(spec.c_str(), &cf_h.p, &cf_d) == QTH_OK)
        *out << "closed form: H = " << cf_h.str() << ", diameter = " << cf_d << "\n";
    *out << "edge list:\n" << el.str();
    return kExitOk;
}

int cmd_convert(const std::string& from, const std::string& to, const std::string& in_path,
                const std::string& out_path) {
    std::vector<NamedGraph> graphs;
    if (int rc = load_graphs("", in_path, from, graphs)) return rc;
    std::ofstream file;
    std::ostream* out = nullptr;
    if (!open_output(out_path, file, out)) return kExitUsage;

    if (to == "edgelist" && graphs.size() > 1) {
        std::cerr << "qtharm: edge list output carries a single graph, got "
                  << graphs.size() << "\n";
        return kExitUsage;
    }
    for (const auto& g : graphs) {
        CStr text;
        int rc = to == "edgelist" ? qth_graph_to_edge_list(g.handle.g, &text.p)
                                  : qth_graph_to_graph6(g.handle.g, &text.p);
        if (rc) return fail(rc, "convert");
        *out << text.str();
        if (to != "edgelist") *out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact harmonic index, diameter and quasi-tree verification for small graphs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string family, in_path, out_path, range, spec;
    std::string from = "g6", to = "g6", format = "text", bounds = "qt", cls = "quasi-tree";
    unsigned decimal = 0;
    int jobs = 0;
    long fx = 100, fy = 100, gx = 1000;
    int den = 1;
    int n = 0;
    bool via_trees = false;
    bool no_timings = false;

    auto* index = app.add_subcommand("index", "exact invariants of one or more graphs");
    auto* family_opt =
        index->add_option("--family", family, "build a named family instead of reading input");
    index->add_option("--in", in_path, "input file (default: stdin)")->excludes(family_opt);
    index->add_option("--from", from, "input format: g6 | edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    index->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    index->add_option("--decimal", decimal, "append decimal approximations with this many digits");

    auto* verify = app.add_subcommand("verify", "sweep bound checks over an order range");
    verify->add_option("--n", range, "order range A..B")->required();
    verify->add_option("--bounds", bounds,
                       "qt | conj1 | upper | tree, or explicit comma-separated bound ids");
    verify->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify->add_flag("--no-timings", no_timings, "omit wall-clock fields (reproducible bytes)");

    auto* enumerate = app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
    enumerate->add_option("--n", n, "graph order")->required();
    enumerate->add_option("--class", cls, "connected | tree | unicyclic | quasi-tree");
    enumerate->add_option("--out", out_path, "output file (default: stdout)");
    enumerate->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    enumerate->add_flag("--via-trees", via_trees,
                        "use the tree-augmentation quasi-tree generator instead");

    auto* lemmas = app.add_subcommand("lemmas", "exact grid checks of the two bound lemmas");
    lemmas->add_option("--fx", fx, "f grid upper end for x (default 100)");
    lemmas->add_option("--fy", fy, "f grid upper end for y (default 100)");
    lemmas->add_option("--gx", gx, "g grid upper end (default 1000)");
    lemmas->add_option("--den", den, "denominator cap for rational sample points (default 1)");
    lemmas->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* fam = app.add_subcommand("family", "build a named family and print it");
    fam->add_option("--spec", spec, "family spec, e.g. V(1,1) or U(8)")->required();
    fam->add_option("--out", out_path, "output file (default: stdout)");

    auto* convert = app.add_subcommand("convert", "transcode between graph formats");
    convert->add_option("--from", from, "g6 | edgelist")->check(CLI::IsMember({"g6", "edgelist"}));
    convert->add_option("--to", to, "g6 | edgelist")
        ->required()
        ->check(CLI::IsMember({"g6", "edgelist"}));
    convert->add_option("--in", in_path, "input file (default: stdin)");
    convert->add_option("--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (index->parsed()) return cmd_index(family, in_path, from, format, decimal);
    if (verify->parsed()) return cmd_verify(range, bounds, format, out_path, jobs, !no_timings);
    if (enumerate->parsed()) return cmd_enumerate(n, cls, out_path, jobs, via_trees);
    if (lemmas->parsed()) return cmd_lemmas(fx, fy, gx, den, format);
    if (fam->parsed()) return cmd_family(spec, out_path);
    if (convert->parsed()) return cmd_convert(from, to, in_path, out_path);
    return kExitUsage;
}
