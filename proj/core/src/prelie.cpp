#include "ainfty/prelie.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

Scalar sign_of(const RingSpec& ring, int exponent) {
  return exponent % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
}

MultiMap star_insert(const MultiMap& f, int k, const MultiMap& g) { return f.insert_at(k, g); }

}  // namespace

MultiMap star(const MultiMap& f, const MultiMap& g) {
  MultiMap out = f.insert_at(1, g);
  for (int k = 2; k <= f.arity(); ++k) out = out + f.insert_at(k, g);
  return out;
}

MultiMap weight_insertion(const MultiMap& f, int k, const MultiMap& g) {
  const int n = f.arity();
  const int m = g.arity();
  const int j = g.degree();
  int exp = (j + m - 1) * (n - 1) + (m - 1) * (k - 1);
  return f.insert_at(k, g).scaled(sign_of(f.source().ring(), exp));
}

MultiMap circle(const MultiMap& f, const MultiMap& g) {
  MultiMap out = weight_insertion(f, 1, g);
  for (int k = 2; k <= f.arity(); ++k) out = out + weight_insertion(f, k, g);
  return out;
}

MultiMap brace(const MultiMap& f, const MultiMap& g) {
  return star(f, g) - star(g, f).scaled(sign_of(f.source().ring(), f.degree() * g.degree()));
}

MultiMap bracket(const MultiMap& f, const MultiMap& g) {
  return circle(f, g) - circle(g, f).scaled(sign_of(f.source().ring(), f.weight() * g.weight()));
}

MultiMap prelie_differential(const MultiMap& f) {
  return bracket(MultiMap::from_differential(f.source()), f);
}

bool jacobi_holds(const MultiMap& a, const MultiMap& b, const MultiMap& c) {
  MultiMap lhs = bracket(a, bracket(b, c));
  MultiMap tail = bracket(b, bracket(a, c));
  if ((a.weight() * b.weight()) % 2 != 0) tail = -tail;
  return lhs == bracket(bracket(a, b), c) + tail;
}

bool antisymmetry_holds(const MultiMap& a, const MultiMap& b) {
  MultiMap rhs = bracket(b, a);
  if ((a.weight() * b.weight()) % 2 == 0) rhs = -rhs;
  return bracket(a, b) == rhs;
}

namespace {

SystemCheckReport check_system(const std::vector<std::array<MultiMap, 3>>& triples,
                               InsertionFn insert, bool weight_signs) {
  SystemCheckReport report;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const MultiMap& f = triples[t][0];
    const MultiMap& g = triples[t][1];
    const MultiMap& h = triples[t][2];
    const int n = f.arity();
    const int m = g.arity();
    const RingSpec ring = f.source().ring();
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= m; ++v) {
        MultiMap lhs = insert(f, u, insert(g, v, h));
        MultiMap rhs = insert(insert(f, u, g), v + u - 1, h);
        ++report.checked;
        if (lhs != rhs) report.violations.push_back({t, u, v, "sequential"});
      }
    }
    int exp = weight_signs ? g.weight() * h.weight() : g.degree() * h.degree();
    Scalar sign = sign_of(ring, exp);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        MultiMap lhs = insert(insert(f, u, g), v + m - 1, h);
        MultiMap rhs = insert(insert(f, v, h), u, g).scaled(sign);
        ++report.checked;
        if (lhs != rhs) report.violations.push_back({t, u, v, "parallel"});
      }
    }
  }
  return report;
}

}  // namespace

SystemCheckReport check_graded_system(const std::vector<std::array<MultiMap, 3>>& triples,
                                      InsertionFn insert) {
  if (!insert) insert = star_insert;
  return check_system(triples, std::move(insert), false);
}

SystemCheckReport check_weight_system(const std::vector<std::array<MultiMap, 3>>& triples,
                                      InsertionFn insert) {
  if (!insert) insert = weight_insertion;
  return check_system(triples, std::move(insert), true);
}

SquareIdentities odd_weight_square(const MultiMap& f, const MultiMap& g) {
  if (g.weight() % 2 == 0) throw EvenWeight("square identities need odd weight");
  SquareIdentities out;
  MultiMap gg = circle(g, g);
  out.compose_square = circle(circle(f, g), g) == circle(f, gg);
  MultiMap lhs = bracket(f, gg);
  out.bracket_left = lhs == -bracket(g, bracket(g, f));
  out.bracket_right = lhs == -bracket(gg, f);
  return out;
}

SquareIdentities odd_degree_square(const MultiMap& f, const MultiMap& g) {
  if (g.degree() % 2 == 0) throw EvenWeight("square identities need odd degree");
  SquareIdentities out;
  MultiMap gg = star(g, g);
  out.compose_square = star(star(f, g), g) == star(f, gg);
  MultiMap lhs = brace(f, gg);
  out.bracket_left = lhs == -brace(g, brace(g, f));
  out.bracket_right = lhs == -brace(gg, f);
  return out;
}

MultiMap theta(const MultiMap& f, const DgModule& v) {
  if (!f.is_endo() || !(f.source() == suspend(v))) {
    throw SourceNotASuspension("operator does not live on the suspension of the given module");
  }
  const int n = f.arity();
  TensorSpace vpow = tensor_power(v, n);
  TensorSpace spow = tensor_power(f.source(), n);
  GradedMap s = suspension_map(v);
  GradedMap sn = koszul_tensor(std::vector<GradedMap>(static_cast<std::size_t>(n), s), vpow, spow);
  GradedMap comp = compose(desuspension_map(v), compose(f.to_graded_map(spow), sn));
  Scalar sign = sign_of(v.ring(), n * (n - 1) / 2);
  return MultiMap::from_graded_map(vpow, v, comp.scaled(sign));
}

MultiMap theta(const MultiMap& f) { return theta(f, desuspend(f.source())); }

MultiMap theta_inv(const MultiMap& f) {
  if (!f.is_endo()) throw ShapeMismatch("theta_inv needs an endomorphism operator");
  const DgModule& v = f.source();
  const int n = f.arity();
  DgModule sv = suspend(v);
  TensorSpace vpow = tensor_power(v, n);
  TensorSpace spow = tensor_power(sv, n);
  GradedMap sinv = desuspension_map(v);
  GradedMap sninv =
      koszul_tensor(std::vector<GradedMap>(static_cast<std::size_t>(n), sinv), spow, vpow);
  GradedMap comp = compose(suspension_map(v), compose(f.to_graded_map(vpow), sninv));
  return MultiMap::from_graded_map(spow, sv, comp);
}

}  // namespace ainfty
