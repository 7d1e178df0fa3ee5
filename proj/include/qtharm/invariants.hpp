#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtharm/graph.hpp"
#include "qtharm/rational.hpp"

namespace qtharm {

// Sum over edges uv of 2/(d_u + d_v), exact. Domain error when the graph
// has fewer than 2 vertices or no edges.
Rational harmonic_index(const Graph& g);

// The catalog of bound formulas over (n, D). The four lower-bound pairs,
// then the two upper bounds:
//   QtAdditive          D + 5/3 - n/2                (n >= 3)
//   QtMultiplicative    (1/2 + 2/(3(n-2))) * D       (n >= 3)
//   Conj1Additive       D + 5/6 - n/2
//   Conj1Multiplicative (1/2 + 1/(3(n-1))) * D       (n >= 2)
//   TreeAdditive        D + 5/6 - n/2
//   TreeMultiplicative  (1/2 + 1/(3(n-1))) * D       (n >= 2)
//   UpperAdditive       D + n/2 - 1                  (upper: H <= value)
//   UpperMultiplicative (n/2) * D                    (upper: H <= value)
enum class BoundId {
    QtAdditive,
    QtMultiplicative,
    Conj1Additive,
    Conj1Multiplicative,
    TreeAdditive,
    TreeMultiplicative,
    UpperAdditive,
    UpperMultiplicative,
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::QtAdditive,        BoundId::QtMultiplicative,
    BoundId::Conj1Additive,     BoundId::Conj1Multiplicative,
    BoundId::TreeAdditive,      BoundId::TreeMultiplicative,
    BoundId::UpperAdditive,     BoundId::UpperMultiplicative,
};

bool is_lower_bound(BoundId id);
std::string_view bound_name(BoundId id);                     // "qt_additive", ...
std::optional<BoundId> bound_from_name(std::string_view s);  // nullopt if unknown

// Exact value of the named formula. Domain error when (n, D) is outside
// the formula's domain (see table above; D >= 1 everywhere).
Rational bound_value(BoundId id, int n, int diameter);

// For lower bounds: Strict H > bound, Equal H = bound, Violated H < bound.
// Polarity flips for the upper bounds.
enum class BoundStatus { Strict, Equal, Violated };

std::string_view status_name(BoundStatus s);

struct BoundOutcome {
    BoundId id;
    Rational value;
    BoundStatus status;
};

struct Verdict {
    int n = 0;
    int diameter = 0;
    Rational h;
    std::vector<BoundOutcome> bounds;  // requested order

    const BoundOutcome* find(BoundId id) const;
    bool any_violated() const;
    bool any_equal() const;
};

// Evaluates H, D and every requested bound with exact comparisons.
Verdict evaluate(const Graph& g, std::span<const BoundId> ids);

// H(g) - H(g-t) for a pendant vertex t with neighbor r, evaluated through
// the telescoped identity
//   2/(d_r+1) - sum_{x in N(r), x != t} 2/((d_r+d_x-1)(d_r+d_x))
// with all degrees taken in g. Input error unless deg(t) = 1.
Rational pendant_deletion_delta(const Graph& g, int t);

// H(g) - H(g-t) for a degree-2 vertex t with neighbors r, s, branching on
// whether r and s are adjacent. Input error unless deg(t) = 2 and g-t is
// connected.
struct Degree2Delta {
    Rational delta;
    bool neighbors_adjacent;
};

Degree2Delta degree2_deletion_delta(const Graph& g, int t);

}  // namespace qtharm
