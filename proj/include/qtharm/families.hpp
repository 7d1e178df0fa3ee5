#pragma once

#include <string>
#include <string_view>

#include "qtharm/graph.hpp"
#include "qtharm/rational.hpp"

namespace qtharm {

// Named parameterized graph families. CLI spellings, case-insensitive:
//   U(n)    C4 with a pendant vertex on one antipodal vertex and a pendant
//           path of n-5 edges on the other (n >= 6)
//   V(r,s)  K4 minus an edge with pendant paths of r and s edges on its two
//           nonadjacent vertices (r, s >= 0)
//   U641    the n = 6 member of the U series (two antipodal pendants on C4)
//   U531    K3 with pendant vertices on two of its corners
//   P(n) C(n) K(n) S(n)   path, cycle, complete, star (S(n) = K_{1,n-1})
//   K4-     K4 minus an edge
//   K13+    K_{1,3} with an extra pendant hung off one of its leaves
enum class FamilyKind { UFamily, VFamily, U641, U531, Path, Cycle, Complete, Star, K4Minus, K13Plus };

struct FamilySpec {
    FamilyKind kind;
    int a = 0;  // n for sized kinds, r for VFamily
    int b = 0;  // s for VFamily

    std::string str() const;
    static FamilySpec parse(std::string_view text);  // parse error on bad syntax

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Constructs the family member with its documented canonical numbering
// (cycle/core first, then attachments in order). Input error on parameters
// outside the family's domain.
Graph build(const FamilySpec& spec);

struct ClosedForm {
    Rational h;
    int diameter = 0;
};

// Exact closed-form H and D. Supported kinds: UFamily (n >= 7), VFamily,
// Path (n >= 2), Cycle, Star, Complete (n >= 2); unsupported error otherwise.
ClosedForm closed_form(const FamilySpec& spec);

}  // namespace qtharm
