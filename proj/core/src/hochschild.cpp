#include "ainfty/hochschild.hpp"

#include <string>
#include <utility>

#include "ainfty/errors.hpp"
#include "ainfty/linalg.hpp"
#include "ainfty/prelie.hpp"

namespace ainfty {

namespace {

void require_arity_bound(int needed, const HochschildOptions& opts) {
  if (needed > opts.max_arity)
    throw ArityOutOfRange("operator arity " + std::to_string(needed) +
                          " exceeds the configured bound " +
                          std::to_string(opts.max_arity));
}

}  // namespace

GradedAlgebra::GradedAlgebra(DgModule b, MultiMap mu)
    : b_(std::move(b)), mu_(std::move(mu)) {
  if (!b_.has_zero_differential())
    throw ValidationError("algebra carrier must have zero differential");
  if (!mu_.is_endo() || mu_.source() != b_)
    throw ValidationError("product does not act on the carrier");
  if (mu_.arity() != 2 || mu_.degree() != 0)
    throw ValidationError("product must have arity 2 and degree 0");
  if (!circle(mu_, mu_).is_zero()) throw NotAssociative("product fails associativity");
}

MultiMap hochschild_d(const GradedAlgebra& alg, const MultiMap& f) {
  return bracket(alg.mu(), f);
}

Matrix hochschild_matrix(const GradedAlgebra& alg, int n, int i) {
  EndoBasis dom(alg.complex(), n, i);
  EndoBasis cod(alg.complex(), n + 1, i);
  return operator_matrix(dom, cod,
                         [&](const MultiMap& g) { return hochschild_d(alg, g); });
}

HochschildGroup hh(const GradedAlgebra& alg, int n, int i, const HochschildOptions& opts) {
  if (n < 1) throw ArityOutOfRange("cohomology arity must be positive");
  require_arity_bound(n + 1, opts);
  EndoBasis basis(alg.complex(), n, i);
  Matrix dnext = hochschild_matrix(alg, n, i);
  Matrix dprev = n >= 2 ? hochschild_matrix(alg, n - 1, i)
                        : Matrix(alg.complex().ring(), basis.size(), 0);
  Subquotient sq = subquotient(dnext, dprev);
  HochschildGroup out;
  out.n = n;
  out.i = i;
  out.cocycle_rank = sq.cycles;
  out.coboundary_rank = sq.boundaries;
  out.rank = sq.rank;
  out.torsion = std::move(sq.torsion);
  for (int j = 0; j < sq.representatives.cols(); ++j)
    out.representatives.push_back(basis.devectorize(sq.representatives.column_vec(j)));
  return out;
}

std::optional<MultiMap> is_coboundary(const GradedAlgebra& alg, const MultiMap& c,
                                      const HochschildOptions& opts) {
  int n = c.arity();
  require_arity_bound(n + 1, opts);
  if (!hochschild_d(alg, c).is_zero()) throw NotACocycle("input is not closed");
  // The operator spaces start at arity 1, so nothing maps onto arity 1.
  if (n == 1) return std::nullopt;
  Matrix m = hochschild_matrix(alg, n - 1, c.degree());
  EndoBasis cod(alg.complex(), n, c.degree());
  auto x = solve_exact(m, cod.vectorize(c));
  if (!x) return std::nullopt;
  EndoBasis dom(alg.complex(), n - 1, c.degree());
  return dom.devectorize(*x);
}

AnticommuteReport check_anticommute(const ArStructure& s,
                                    const std::vector<MultiMap>& samples) {
  if (s.level() < 2) throw RTooSmall("anticommutation check needs level >= 2");
  ArStructure c = convert_convention(s, Convention::circle);
  const MultiMap& m2 = c.map(2);
  AnticommuteReport rep;
  for (const MultiMap& f : samples) {
    ++rep.checked;
    MultiMap lhs = prelie_differential(bracket(m2, f));
    MultiMap rhs = bracket(m2, prelie_differential(f));
    if (lhs != -rhs) ++rep.failures;
  }
  return rep;
}

}  // namespace ainfty
