#include "fixtures.hpp"

#include <utility>

#include "ainfty/errors.hpp"
#include "ainfty/linalg.hpp"
#include "ainfty/obstruction.hpp"
#include "ainfty/prelie.hpp"

namespace fixtures {

Matrix random_unimodular(Sampler& s, const RingSpec& ring, int n, int ops) {
  Matrix u = Matrix::identity(ring, n);
  if (n == 0) return u;
  for (int t = 0; t < ops; ++t) {
    int kind = n >= 2 ? s.uniform(0, 2) : 2;
    int i = s.uniform(0, n - 1);
    if (kind == 2) {
      for (int c = 0; c < n; ++c) u.at(i, c) = -u.at(i, c);
      continue;
    }
    int j = (i + 1 + s.uniform(0, n - 2)) % n;
    if (kind == 1) {
      for (int c = 0; c < n; ++c) std::swap(u.at(i, c), u.at(j, c));
      continue;
    }
    Scalar coef = s.scalar(ring, 2);
    for (int c = 0; c < n; ++c) u.at(i, c) += coef * u.at(j, c);
  }
  return u;
}

DgModule random_split_complex(Sampler& s, const RingSpec& ring, int min_deg, int max_deg,
                              int max_h, int max_pairs) {
  std::map<int, int> h, pairs;  // pairs[n]: source degree n, target n - 1
  for (int n = min_deg; n <= max_deg; ++n) h[n] = s.uniform(0, max_h);
  for (int n = min_deg + 1; n <= max_deg; ++n) pairs[n] = s.uniform(0, max_pairs);
  auto src = [&](int n) { return pairs.count(n) ? pairs[n] : 0; };
  std::map<int, int> dims;
  for (int n = min_deg; n <= max_deg; ++n) dims[n] = h[n] + src(n) + src(n + 1);

  // Basis per degree: [homology | pair sources | pair targets].
  std::map<int, Matrix> diff;
  for (int n = min_deg + 1; n <= max_deg; ++n) {
    if (src(n) == 0) continue;
    Matrix d(ring, dims[n - 1], dims[n]);
    for (int k = 0; k < src(n); ++k) d.at(h[n - 1] + src(n - 1) + k, h[n] + k) = Scalar::one(ring);
    diff[n] = std::move(d);
  }

  std::map<int, Matrix> change;
  for (int n = min_deg; n <= max_deg; ++n)
    change.emplace(n, random_unimodular(s, ring, dims[n], 2 * dims[n] + 2));
  std::map<int, Matrix> conj;
  for (auto& [n, d] : diff) {
    Matrix m = inverse(change.at(n - 1)) * d * change.at(n);
    if (!m.is_zero()) conj[n] = std::move(m);
  }
  std::map<int, int> positive;
  for (auto [n, k] : dims)
    if (k > 0) positive[n] = k;
  return DgModule(GradedModule(ring, positive), std::move(conj));
}

DgModule doubling_complex() {
  RingSpec z = RingSpec::integers();
  Matrix d(z, 1, 1);
  d.at(0, 0) = Scalar::from_int(z, 2);
  return DgModule(GradedModule(z, {{0, 1}, {1, 1}}), {{1, d}});
}

MultiMap chain_op_inducing(const Splitting& split, const MultiMap& u, Sampler& s,
                           int noise_entries) {
  MultiMap lifted = MultiHomIso(split, u.arity()).lift(u);
  MultiMap eta = s.multimap(split.complex(), u.arity(), u.degree() + 1, noise_entries);
  return lifted + prelie_differential(eta);
}

CatalogAlgebra catalog_algebra(const RingSpec& ring, int l, int m, int n) {
  DgModule h = DgModule::with_zero_differential(GradedModule(ring, {{0, 1}, {1, 1}}));
  BasisElt a{0, 0}, b{1, 0};
  std::vector<MultiMapEntry> entries = {
      {a, {a, a}, Scalar::from_int(ring, l)},
      {b, {a, b}, Scalar::from_int(ring, m)},
      {b, {b, a}, Scalar::from_int(ring, n)},
  };
  return {h, MultiMap(h, h, 2, 0, std::move(entries))};
}

CatalogAlgebra split_pair_algebra(const RingSpec& ring) {
  DgModule h = DgModule::with_zero_differential(GradedModule(ring, {{0, 2}}));
  Scalar one = Scalar::one(ring);
  std::vector<MultiMapEntry> entries = {
      {{0, 0}, {{0, 0}, {0, 0}}, one},
      {{0, 1}, {{0, 1}, {0, 1}}, one},
  };
  return {h, MultiMap(h, h, 2, 0, std::move(entries))};
}

ArStructure a3_fixture(Sampler& s, const RingSpec& ring, bool degree_zero_homology) {
  CatalogAlgebra cat = degree_zero_homology
                           ? split_pair_algebra(ring)
                           : catalog_algebra(ring, 1, s.uniform(0, 1), s.uniform(0, 1));
  int h0 = cat.h.dim(0), h1 = cat.h.dim(1);
  int p1 = s.uniform(1, 2), p2 = s.uniform(0, 1);

  // Degree n basis: [homology | sources S_n | targets T_n]; d maps S_n
  // identically onto T_{n-1}, so homology is the leading block.
  std::map<int, int> dims;
  dims[0] = h0 + p1;
  if (h1 + p1 + p2 > 0) dims[1] = h1 + p1 + p2;
  if (p2 > 0) dims[2] = p2;
  std::map<int, Matrix> diff;
  {
    Matrix d1(ring, dims[0], dims[1]);
    for (int k = 0; k < p1; ++k) d1.at(h0 + k, h1 + k) = Scalar::one(ring);
    diff[1] = std::move(d1);
    if (p2 > 0) {
      Matrix d2(ring, dims[1], p2);
      for (int k = 0; k < p2; ++k) d2.at(h1 + p1 + k, k) = Scalar::one(ring);
      diff[2] = std::move(d2);
    }
  }
  DgModule a(GradedModule(ring, dims), std::move(diff));

  // The product transported along the leading-block inclusion is a chain
  // operator: outputs avoid the source block, inputs vanish on targets.
  MultiMap m2 = MultiMap(a, a, 2, 0, cat.mu.entries()) +
                prelie_differential(s.multimap(a, 2, 1, 3));

  EndoBasis dom(a, 3, 1), cod(a, 3, 0);
  Matrix dm = operator_matrix(dom, cod, [](const MultiMap& f) { return prelie_differential(f); });
  auto x = solve_exact(dm, cod.vectorize(-circle(m2, m2)));
  if (!x) throw Error("level-3 correction unexpectedly not exact");
  std::vector<MultiMap> maps = {MultiMap::from_differential(a), std::move(m2),
                                dom.devectorize(*x)};
  return ArStructure(std::move(a), 3, std::move(maps), Convention::circle);
}

std::optional<ArStructure> blocking_fixture(std::uint64_t seed) {
  // Minimal carrier: one generator x, y, z in degrees 0, 1, 2, zero
  // differential, so the complex is its own homology and the induced product
  // vanishes. With m_2 = 0 every level-4 relation is vacuous, while the
  // level-4 obstruction collapses to m_3 . m_3. On (x,..,x) that evaluates to
  // (l_1 + l_2 + l_3) z, so any odd choice of the l pattern below blocks.
  RingSpec f2 = RingSpec::prime_field(2);
  DgModule a = DgModule::with_zero_differential(GradedModule(f2, {{0, 1}, {1, 1}, {2, 1}}));
  BasisElt x{0, 0}, y{1, 0}, z{2, 0};
  Scalar one = Scalar::one(f2);

  constexpr int kOdd[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const int* l = kOdd[seed % 4];
  std::vector<MultiMapEntry> m3_entries = {{y, {x, x, x}, one}};
  if (l[0]) m3_entries.push_back({z, {y, x, x}, one});
  if (l[1]) m3_entries.push_back({z, {x, y, x}, one});
  if (l[2]) m3_entries.push_back({z, {x, x, y}, one});

  // The top map is unconstrained (every relation it enters also carries m_1
  // or m_2) and drops out of m_3 . m_3, so the obstruction class ignores it.
  std::vector<MultiMapEntry> m4_entries;
  if ((seed >> 2) & 1) m4_entries.push_back({z, {x, x, x, x}, one});

  std::vector<MultiMap> maps = {MultiMap::from_differential(a), MultiMap::zero(a, a, 2, 0),
                                MultiMap(a, a, 3, 1, std::move(m3_entries)),
                                MultiMap(a, a, 4, 2, std::move(m4_entries))};
  return ArStructure(std::move(a), 4, std::move(maps), Convention::circle);
}

}  // namespace fixtures
