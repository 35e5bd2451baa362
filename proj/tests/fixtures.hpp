#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ainfty/ar_structure.hpp"
#include "ainfty/homology.hpp"
#include "ainfty/sampling.hpp"

namespace fixtures {

using namespace ainfty;

// Determinant +-1 product of elementary operations; invertible over every
// ring of the library.
Matrix random_unimodular(Sampler& s, const RingSpec& ring, int n, int ops);

// Complex with free homology: block sum of homology generators and acyclic
// two-term pairs, conjugated by unimodular changes of basis per degree.
DgModule random_split_complex(Sampler& s, const RingSpec& ring, int min_deg, int max_deg,
                              int max_h, int max_pairs);

// C_1 = Z --(x2)--> C_0 = Z with homology Z/2 in degree 0.
DgModule doubling_complex();

// Chain operator inducing u on homology: the canonical lift plus boundary
// noise (operators inducing zero are exactly the mapping-complex boundaries).
MultiMap chain_op_inducing(const Splitting& split, const MultiMap& u, Sampler& s,
                           int noise_entries);

// Associative products on <a> in degree 0 and <b> in degree 1:
//   a.a = l a, a.b = m b, b.a = n b, b.b = 0, with l m = m^2 and n^2 = n l.
struct CatalogAlgebra {
  DgModule h;
  MultiMap mu;
};
CatalogAlgebra catalog_algebra(const RingSpec& ring, int l, int m, int n);

// Two-dimensional product-of-fields algebra in degree 0.
CatalogAlgebra split_pair_algebra(const RingSpec& ring);

// Level-3 structure on a padded complex: m_2 lifts the homology product up to
// boundary noise, m_3 is solved exactly. With degree-zero homology every
// obstruction group vanishes, so the structure extends to any level.
ArStructure a3_fixture(Sampler& s, const RingSpec& ring, bool degree_zero_homology);

// Level-4 F_2 structure with zero homology product whose level-5 obstruction
// class is nonzero; the seed varies the maps without unblocking. Always
// engages; optional only so callers can scan seeds uniformly.
std::optional<ArStructure> blocking_fixture(std::uint64_t seed);

}  // namespace fixtures
