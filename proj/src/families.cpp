#include "qtharm/families.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qtharm/errors.hpp"

namespace qtharm {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void append_pendant_path(EdgeList& edges, int attach, int first_new, int length) {
    int prev = attach;
    for (int i = 0; i < length; ++i) {
        edges.emplace_back(prev, first_new + i);
        prev = first_new + i;
    }
}

}  // namespace

std::string FamilySpec::str() const {
    switch (kind) {
        case FamilyKind::UFamily: return "U(" + std::to_string(a) + ")";
        case FamilyKind::VFamily: return "V(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case FamilyKind::U641: return "U641";
        case FamilyKind::U531: return "U531";
        case FamilyKind::Path: return "P(" + std::to_string(a) + ")";
        case FamilyKind::Cycle: return "C(" + std::to_string(a) + ")";
        case FamilyKind::Complete: return "K(" + std::to_string(a) + ")";
        case FamilyKind::Star: return "S(" + std::to_string(a) + ")";
        case FamilyKind::K4Minus: return "K4-";
        case FamilyKind::K13Plus: return "K13+";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto bad = [&]() -> FamilySpec {
        throw ParseError("family: unrecognized spec '" + std::string(text) + "'");
    };

    if (s == "U641") return {FamilyKind::U641};
    if (s == "U531") return {FamilyKind::U531};
    if (s == "K4-") return {FamilyKind::K4Minus};
    if (s == "K13+") return {FamilyKind::K13Plus};

    if (s.size() < 4 || s[1] != '(' || s.back() != ')') return bad();
    std::string body = s.substr(2, s.size() - 3);
    auto parse_int = [&](const std::string& tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            bad();
        return std::atoi(tok.c_str());
    };

    if (s[0] == 'V') {
        auto comma = body.find(',');
        if (comma == std::string::npos) return bad();
        int r = parse_int(body.substr(0, comma));
        int ss = parse_int(body.substr(comma + 1));
        return {FamilyKind::VFamily, r, ss};
    }
    if (body.find(',') != std::string::npos) return bad();
    int n = parse_int(body);
    switch (s[0]) {
        case 'U': return {FamilyKind::UFamily, n};
        case 'P': return {FamilyKind::Path, n};
        case 'C': return {FamilyKind::Cycle, n};
        case 'K': return {FamilyKind::Complete, n};
        case 'S': return {FamilyKind::Star, n};
        default: return bad();
    }
}

Graph build(const FamilySpec& spec) {
    EdgeList edges;
    switch (spec.kind) {
        case FamilyKind::UFamily: {
            int n = spec.a;
            if (n < 6) throw InputError("family: U(n) needs n >= 6");
            // cycle 0-1-2-3, pendant 4 on 0, pendant path on the antipode 2
            edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}};
            append_pendant_path(edges, 2, 5, n - 5);
            return Graph(n, edges);
        }
        case FamilyKind::VFamily: {
            int r = spec.a, s = spec.b;
            if (r < 0 || s < 0) throw InputError("family: V(r,s) needs r,s >= 0");
            // hubs 0,1 adjacent; 2,3 the nonadjacent attachment vertices
            edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
            append_pendant_path(edges, 2, 4, r);
            append_pendant_path(edges, 3, 4 + r, s);
            return Graph(4 + r + s, edges);
        }
        case FamilyKind::U641:
            return build({FamilyKind::UFamily, 6});
        case FamilyKind::U531:
            return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
        case FamilyKind::Path: {
            int n = spec.a;
            if (n < 1) throw InputError("family: P(n) needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph(n, edges);
        }
        case FamilyKind::Cycle: {
            int n = spec.a;
            if (n < 3) throw InputError("family: C(n) needs n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            std::for_each(edges.begin(), edges.end(), [](auto& e) {
                if (e.first > e.second) std::swap(e.first, e.second);
            });
            return Graph(n, edges);
        }
        case FamilyKind::Complete: {
            int n = spec.a;
            if (n < 1) throw InputError("family: K(n) needs n >= 1");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return Graph(n, edges);
        }
        case FamilyKind::Star: {
            int n = spec.a;
            if (n < 2) throw InputError("family: S(n) needs n >= 2");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return Graph(n, edges);
        }
        case FamilyKind::K4Minus:
            return build({FamilyKind::VFamily, 0, 0});
        case FamilyKind::K13Plus:
            return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    }
    throw InputError("family: unknown kind");
}

ClosedForm closed_form(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::UFamily: {
            int n = spec.a;
            if (n < 7)
                throw UnsupportedError("family: closed form for U(n) covers n >= 7 only");
            return {Rational(n, 2) - Rational(1, 3), n - 2};
        }
        case FamilyKind::VFamily: {
            int lo = std::min(spec.a, spec.b);
            int hi = std::max(spec.a, spec.b);
            int d = spec.a + spec.b + 2;
            Rational half_d(d, 2);
            if (lo == 0 && hi == 0) return {Rational(29, 15), d};
            if (lo == 0 && hi == 1) return {Rational(23, 10), d};
            if (lo == 1 && hi == 1) return {Rational(8, 3), d};
            if (lo == 0) return {half_d + Rational(13, 15), d};
            if (lo == 1) return {half_d + Rational(11, 15), d};
            return {half_d + Rational(4, 5), d};
        }
        case FamilyKind::Path: {
            int n = spec.a;
            if (n < 2) throw UnsupportedError("family: closed form needs P(n) with n >= 2");
            if (n == 2) return {Rational(1), 1};
            return {Rational(4, 3) + Rational(n - 3, 2), n - 1};
        }
        case FamilyKind::Cycle: {
            int n = spec.a;
            if (n < 3) throw InputError("family: C(n) needs n >= 3");
            return {Rational(n, 2), n / 2};
        }
        case FamilyKind::Star: {
            int n = spec.a;
            if (n < 2) throw InputError("family: S(n) needs n >= 2");
            return {Rational(2 * (n - 1), n), n == 2 ? 1 : 2};
        }
        case FamilyKind::Complete: {
            int n = spec.a;
            if (n < 2) throw UnsupportedError("family: closed form needs K(n) with n >= 2");
            return {Rational(n, 2), 1};
        }
        default:
            throw UnsupportedError("family: no closed form for " + spec.str());
    }
}

}  // namespace qtharm
