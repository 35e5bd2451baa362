#pragma once

#include <array>
#include <string>

#include "ainfty/multimap.hpp"

namespace ainfty {

// Plain insertion sum over all slots.
MultiMap star(const MultiMap& f, const MultiMap& g);

// Insertion in the weight-graded system: for f of arity n and g of arity m,
// degree j, the slot-k insertion acquires (-1)^{(j+m-1)(n-1)+(m-1)(k-1)}.
MultiMap weight_insertion(const MultiMap& f, int k, const MultiMap& g);

// Sum of weight insertions over all slots.
MultiMap circle(const MultiMap& f, const MultiMap& g);

// f * g - (-1)^{deg f deg g} g * f.
MultiMap brace(const MultiMap& f, const MultiMap& g);

// f . g - (-1)^{weight f * weight g} g . f.
MultiMap bracket(const MultiMap& f, const MultiMap& g);

// [d, f] for the differential of the underlying complex; equals
// operator_differential(f).
MultiMap prelie_differential(const MultiMap& f);

// Leibniz form of the Jacobi identity for the weight bracket:
// [a, [b, c]] == [[a, b], c] + (-1)^{|a||b|} [b, [a, c]].
bool jacobi_holds(const MultiMap& a, const MultiMap& b, const MultiMap& c);

// [a, b] == -(-1)^{|a||b|} [b, a].
bool antisymmetry_holds(const MultiMap& a, const MultiMap& b);

using InsertionFn = std::function<MultiMap(const MultiMap&, int, const MultiMap&)>;

struct SystemViolation {
  std::size_t triple = 0;
  int u = 0, v = 0;
  std::string relation;
};

struct SystemCheckReport {
  std::size_t checked = 0;
  std::vector<SystemViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Composition-system axioms on explicit triples (f, g, h):
//   sequential: f o_u (g o_v h) == (f o_u g) o_{v+u-1} h
//   parallel:   (f o_u g) o_{v+m-1} h == sign * (f o_v h) o_u g  for u < v
// The graded system signs the parallel relation by degrees, the weight system
// by weights. `insert` defaults to the matching insertion and is overridable
// so a corrupted composition can be shown to fail.
SystemCheckReport check_graded_system(const std::vector<std::array<MultiMap, 3>>& triples,
                                      InsertionFn insert = {});
SystemCheckReport check_weight_system(const std::vector<std::array<MultiMap, 3>>& triples,
                                      InsertionFn insert = {});

struct SquareIdentities {
  bool compose_square = false;  // (f o g) o g == f o (g o g)
  bool bracket_left = false;    // [f, g o g] == -[g, [g, f]]
  bool bracket_right = false;   // [f, g o g] == -[g o g, f]
  bool ok() const { return compose_square && bracket_left && bracket_right; }
};

// Identities available without dividing by 2, for g of odd weight (circle
// system) or odd degree (star system). Throws EvenWeight otherwise.
SquareIdentities odd_weight_square(const MultiMap& f, const MultiMap& g);
SquareIdentities odd_degree_square(const MultiMap& f, const MultiMap& g);

// Degree shift Hom_i((sV)^{@n}, sV) -> Hom_{i+n-1}(V^{@n}, V):
//   theta(F) = (-1)^{n(n-1)/2} s^{-1} . F . s^{@n},
// the sign being the Koszul cost of (s^{-1})^{@n} s^{@n}. Intertwines star
// composition with the weight-graded circle composition.
MultiMap theta(const MultiMap& f, const DgModule& v);  // throws SourceNotASuspension
MultiMap theta(const MultiMap& f);
MultiMap theta_inv(const MultiMap& f);

}  // namespace ainfty
