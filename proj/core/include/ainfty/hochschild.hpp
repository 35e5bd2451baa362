#pragma once

#include <optional>

#include "ainfty/ar_structure.hpp"

namespace ainfty {

// Graded associative algebra: a complex with zero differential together with
// an arity 2, degree 0 product whose circle square vanishes (which is exactly
// associativity). Construction throws NotAssociative / ValidationError.
class GradedAlgebra {
 public:
  GradedAlgebra(DgModule b, MultiMap mu);

  const DgModule& complex() const { return b_; }
  const MultiMap& mu() const { return mu_; }

 private:
  DgModule b_;
  MultiMap mu_;
};

struct HochschildOptions {
  // Operator spaces grow exponentially in arity; queries with n + 1 above the
  // bound are refused rather than silently attempted.
  int max_arity = 8;
};

// Cohomology differential [mu, f], raising arity by one and preserving the
// internal degree.
MultiMap hochschild_d(const GradedAlgebra& alg, const MultiMap& f);

// Matrix of the differential on the operator spaces of arity n -> n + 1 at
// internal degree i, in canonical operator bases.
Matrix hochschild_matrix(const GradedAlgebra& alg, int n, int i);

struct HochschildGroup {
  int n = 0, i = 0;
  int cocycle_rank = 0, coboundary_rank = 0;
  int rank = 0;                       // free rank of the cohomology group
  std::vector<BigInt> torsion;        // integer ring only
  std::vector<MultiMap> representatives;  // cocycles spanning the free part
};

// Cohomology of arity-n operators of internal degree i. n >= 1.
HochschildGroup hh(const GradedAlgebra& alg, int n, int i,
                   const HochschildOptions& opts = {});

// A primitive u of arity n - 1 with [mu, u] == c, or nullopt when no such
// operator exists; the spaces start at arity 1, so arity-1 inputs never have
// one. Throws NotACocycle when [mu, c] != 0.
std::optional<MultiMap> is_coboundary(const GradedAlgebra& alg, const MultiMap& c,
                                      const HochschildOptions& opts = {});

struct AnticommuteReport {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

// For a structure of level >= 2, [m_2, -] anticommutes with the mapping
// differential on operator samples; this is forced by m_2 being a chain
// operator of odd weight.
AnticommuteReport check_anticommute(const ArStructure& s,
                                    const std::vector<MultiMap>& samples);

}  // namespace ainfty
