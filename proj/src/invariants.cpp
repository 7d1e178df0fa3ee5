#include "qtharm/invariants.hpp"

#include <algorithm>
#include <string>

#include "qtharm/errors.hpp"

namespace qtharm {

Rational harmonic_index(const Graph& g) {
    if (g.order() < 2 || g.edge_count() == 0)
        throw DomainError("harmonic_index: undefined for graphs without edges");
    Rational h;
    for (auto [u, v] : g.edges()) h += Rational(2, g.degree(u) + g.degree(v));
    return h;
}

bool is_lower_bound(BoundId id) {
    return id != BoundId::UpperAdditive && id != BoundId::UpperMultiplicative;
}

std::string_view bound_name(BoundId id) {
    switch (id) {
        case BoundId::QtAdditive: return "qt_additive";
        case BoundId::QtMultiplicative: return "qt_multiplicative";
        case BoundId::Conj1Additive: return "conj1_additive";
        case BoundId::Conj1Multiplicative: return "conj1_multiplicative";
        case BoundId::TreeAdditive: return "tree_additive";
        case BoundId::TreeMultiplicative: return "tree_multiplicative";
        case BoundId::UpperAdditive: return "upper_additive";
        case BoundId::UpperMultiplicative: return "upper_multiplicative";
    }
    return "?";
}

std::optional<BoundId> bound_from_name(std::string_view s) {
    for (BoundId id : kAllBounds)
        if (bound_name(id) == s) return id;
    return std::nullopt;
}

std::string_view status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::Strict: return "strict";
        case BoundStatus::Equal: return "equal";
        case BoundStatus::Violated: return "violated";
    }
    return "?";
}

Rational bound_value(BoundId id, int n, int diameter) {
    if (diameter < 1) throw DomainError("bound_value: diameter must be >= 1");
    const Rational d(diameter);
    const Rational half(1, 2);
    switch (id) {
        case BoundId::QtAdditive:
            if (n < 3) throw DomainError("bound_value: qt_additive needs n >= 3");
            return d + Rational(5, 3) - Rational(n, 2);
        case BoundId::QtMultiplicative:
            if (n < 3) throw DomainError("bound_value: qt_multiplicative needs n >= 3");
            return (half + Rational(2, 3 * (n - 2))) * d;
        case BoundId::Conj1Additive:
            return d + Rational(5, 6) - Rational(n, 2);
        case BoundId::Conj1Multiplicative:
            if (n < 2) throw DomainError("bound_value: conj1_multiplicative needs n >= 2");
            return (half + Rational(1, 3 * (n - 1))) * d;
        case BoundId::TreeAdditive:
            return d + Rational(5, 6) - Rational(n, 2);
        case BoundId::TreeMultiplicative:
            if (n < 2) throw DomainError("bound_value: tree_multiplicative needs n >= 2");
            return (half + Rational(1, 3 * (n - 1))) * d;
        case BoundId::UpperAdditive:
            return d + Rational(n, 2) - Rational(1);
        case BoundId::UpperMultiplicative:
            return Rational(n, 2) * d;
    }
    throw InputError("bound_value: unknown bound id");
}

const BoundOutcome* Verdict::find(BoundId id) const {
    for (const auto& b : bounds)
        if (b.id == id) return &b;
    return nullptr;
}

bool Verdict::any_violated() const {
    return std::any_of(bounds.begin(), bounds.end(),
                       [](const BoundOutcome& b) { return b.status == BoundStatus::Violated; });
}

bool Verdict::any_equal() const {
    return std::any_of(bounds.begin(), bounds.end(),
                       [](const BoundOutcome& b) { return b.status == BoundStatus::Equal; });
}

Verdict evaluate(const Graph& g, std::span<const BoundId> ids) {
    Verdict v;
    v.n = g.order();
    v.diameter = g.diameter();  // rejects disconnected input
    v.h = harmonic_index(g);
    v.bounds.reserve(ids.size());
    for (BoundId id : ids) {
        BoundOutcome out;
        out.id = id;
        out.value = bound_value(id, v.n, v.diameter);
        if (v.h == out.value) {
            out.status = BoundStatus::Equal;
        } else if (is_lower_bound(id)) {
            out.status = v.h > out.value ? BoundStatus::Strict : BoundStatus::Violated;
        } else {
            out.status = v.h < out.value ? BoundStatus::Strict : BoundStatus::Violated;
        }
        v.bounds.push_back(std::move(out));
    }
    return v;
}

Rational pendant_deletion_delta(const Graph& g, int t) {
    if (g.degree(t) != 1) throw InputError("pendant_deletion_delta: vertex is not pendant");
    int r = g.neighbors(t)[0];
    int dr = g.degree(r);
    Rational delta(2, dr + 1);
    for (int x : g.neighbors(r)) {
        if (x == t) continue;
        int dx = g.degree(x);
        delta -= Rational(2, (dr + dx - 1) * (dr + dx));
    }
    return delta;
}

Degree2Delta degree2_deletion_delta(const Graph& g, int t) {
    if (g.degree(t) != 2) throw InputError("degree2_deletion_delta: vertex is not of degree 2");
    int r = g.neighbors(t)[0];
    int s = g.neighbors(t)[1];
    if (!g.delete_vertex(t).is_connected())
        throw InputError("degree2_deletion_delta: g - t is disconnected");
    int dr = g.degree(r);
    int ds = g.degree(s);

    Degree2Delta out;
    out.neighbors_adjacent = g.has_edge(r, s);
    Rational delta = Rational(2, 2 + dr) + Rational(2, 2 + ds);
    if (out.neighbors_adjacent) {
        // the r-s edge changes weight on both ends at once
        delta += Rational(2, dr + ds) - Rational(2, dr + ds - 2);
        for (int x : g.neighbors(r)) {
            if (x == t || x == s) continue;
            int dx = g.degree(x);
            delta -= Rational(2, (dx + dr - 1) * (dx + dr));
        }
        for (int y : g.neighbors(s)) {
            if (y == t || y == r) continue;
            int dy = g.degree(y);
            delta -= Rational(2, (dy + ds - 1) * (dy + ds));
        }
    } else {
        for (int x : g.neighbors(r)) {
            if (x == t) continue;
            int dx = g.degree(x);
            delta -= Rational(2, (dr - 1 + dx) * (dr + dx));
        }
        for (int y : g.neighbors(s)) {
            if (y == t) continue;
            int dy = g.degree(y);
            delta -= Rational(2, (ds - 1 + dy) * (ds + dy));
        }
    }
    out.delta = std::move(delta);
    return out;
}

}  // namespace qtharm
