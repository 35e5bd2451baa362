#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ainfty/multimap.hpp"

namespace ainfty {

struct HomologyDegree {
  int cycles = 0;      // rank of Z_n
  int boundaries = 0;  // rank of B_n
  int rank = 0;        // free rank of H_n
  std::vector<BigInt> torsion;  // invariant factors > 1, integer ring only
};

struct HomologyData {
  RingSpec ring;
  std::map<int, HomologyDegree> by_degree;

  bool has_torsion() const;
  const HomologyDegree& at(int n) const;
  GradedModule free_module() const;
};

HomologyData homology(const DgModule& c);

// Homology at the middle of  .  --dprev-->  .  --dnext-->  . : the kernel of
// dnext modulo the image of dprev. Representative columns are cycles spanning
// the free part and remain valid when torsion is present.
struct Subquotient {
  int cycles = 0, boundaries = 0, rank = 0;
  std::vector<BigInt> torsion;
  Matrix representatives;
};

Subquotient subquotient(const Matrix& dnext, const Matrix& dprev);

// Basis data for one degree of the decomposition C_n = s(H_n) + B_n + t(B_{n-1}):
// sigma columns are cycle representatives, beta a basis of boundaries, tau
// preimages of the degree n-1 boundary basis. decomp = [sigma | beta | tau].
struct DegreeSplitting {
  Matrix sigma, beta, tau;
  Matrix decomp, decomp_inv;
  int h = 0, b = 0, bprev = 0;
};

class Splitting {
 public:
  Splitting(DgModule c, std::map<int, DegreeSplitting> parts, HomologyData data);

  const DgModule& complex() const { return c_; }
  const HomologyData& data() const { return data_; }
  const DegreeSplitting& at(int n) const;
  DgModule homology_complex() const;  // zero differential

  // Coordinate projections of x in C_n onto the three summands.
  Vec proj_h(int n, const Vec& x) const;
  Vec proj_b(int n, const Vec& x) const;
  Vec proj_t(int n, const Vec& x) const;
  Vec sigma_apply(int n, const Vec& h_coords) const;

 private:
  DgModule c_;
  std::map<int, DegreeSplitting> parts_;
  HomologyData data_;
  mutable std::map<int, DegreeSplitting> empty_cache_;
};

// Cycles and homology split off C degreewise over a field always; over Z this
// fails exactly when homology has torsion.
struct SplittingCheck {
  bool splits = false;
  HomologyData data;
  std::optional<Splitting> splitting;
};

SplittingCheck check_split(const DgModule& c);
// Convenience: the splitting, or NotSplit with the torsion location.
Splitting require_split(const DgModule& c);

// Map induced on homology by a chain map f. Throws NotAChainMap.
GradedMap induced_map(const GradedMap& f, const Splitting& sc, const Splitting& sd);

// Chain map with induced_map == g, built as sigma . g . proj_H.
GradedMap lift_cycle_map(const GradedMap& g, const Splitting& sc, const Splitting& sd);

// For a chain map f of degree i inducing zero on homology, produces u of
// degree i+1 with hom_differential(u) == f:
//   u(s h + y + t z) = (-1)^i f(tau y) + tau_D f(s h).
// Throws NotAChainMap / NonzeroInducedMap.
GradedMap write_as_boundary(const GradedMap& f, const Splitting& sc, const Splitting& sd);

// Constructive isomorphism H(Hom(C, D)) = Hom(H(C), H(D)). The constructor
// materializes Hom(C, D), splits it, and verifies the per-degree rank match
// and bijectivity; it throws if either fails.
class HomHomologyIso {
 public:
  HomHomologyIso(const DgModule& c, const DgModule& d);

  const HomComplex& hom() const { return hom_; }
  const Splitting& hom_splitting() const { return hom_split_; }
  const Splitting& source_splitting() const { return sc_; }
  const Splitting& target_splitting() const { return sd_; }

  GradedMap forward(const GradedMap& cycle) const;  // induced map on homology
  GradedMap lift(const GradedMap& g) const;         // chain-map representative

  const std::map<int, int>& homology_ranks() const { return hom_ranks_; }
  const std::map<int, int>& hom_of_homology_dims() const { return target_dims_; }

 private:
  Splitting sc_, sd_;
  HomComplex hom_;
  Splitting hom_split_;
  std::map<int, int> hom_ranks_, target_dims_;
};

// Same correspondence for multilinear operators: chain operators C^{@n} -> C
// against operators on H(C)^{@n} -> H(C).
class MultiHomIso {
 public:
  MultiHomIso(Splitting split, int arity);

  const Splitting& splitting() const { return split_; }
  int arity() const { return arity_; }
  const DgModule& homology() const { return h_; }

  MultiMap forward(const MultiMap& f) const;  // throws NotAChainMap
  MultiMap lift(const MultiMap& u) const;

  // Materializes Hom(C^{@n}, C) and checks rank equality and bijectivity of
  // `forward` degreewise; throws on failure.
  void verify() const;

 private:
  Splitting split_;
  int arity_;
  DgModule h_;
};

}  // namespace ainfty
