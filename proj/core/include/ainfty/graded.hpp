#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "ainfty/linalg.hpp"
#include "ainfty/matrix.hpp"

namespace ainfty {

// One basis element of a graded module: position `index` in the implicit
// ordered basis of the homogeneous piece in degree `degree`.
struct BasisElt {
  int degree = 0;
  int index = 0;
  auto operator<=>(const BasisElt&) const = default;
};

// Finitely supported lower-graded free module: a rank per degree.
class GradedModule {
 public:
  GradedModule(RingSpec ring, std::map<int, int> dims);

  const RingSpec& ring() const { return ring_; }
  int dim(int degree) const;
  const std::map<int, int>& dims() const { return dims_; }
  int total_rank() const;
  int min_degree() const;  // 0 for the zero module
  int max_degree() const;
  bool valid_elt(BasisElt e) const;
  std::vector<BasisElt> basis() const;  // (degree, index) ascending

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  RingSpec ring_;
  std::map<int, int> dims_;  // only strictly positive ranks are stored
};

// Chain complex: graded module with a square-zero differential of degree -1.
// diff[n] is the block C_n -> C_{n-1}; blocks that are zero or have a zero
// extent are not stored, so equality of the map is canonical.
class DgModule {
 public:
  DgModule(GradedModule mod, std::map<int, Matrix> diff);
  static DgModule with_zero_differential(GradedModule mod);

  const GradedModule& module() const { return mod_; }
  const RingSpec& ring() const { return mod_.ring(); }
  int dim(int n) const { return mod_.dim(n); }
  Matrix diff(int n) const;  // dim(n-1) x dim(n), zero when absent
  const std::map<int, Matrix>& diff_blocks() const { return diff_; }
  bool has_zero_differential() const { return diff_.empty(); }

  friend bool operator==(const DgModule&, const DgModule&) = default;

 private:
  GradedModule mod_;
  std::map<int, Matrix> diff_;
};

// Degree-homogeneous module map f : C -> D, block per source degree.
class GradedMap {
 public:
  GradedMap(DgModule source, DgModule target, int degree, std::map<int, Matrix> blocks);
  static GradedMap zero(DgModule source, DgModule target, int degree);
  static GradedMap identity(const DgModule& c);

  const DgModule& source() const { return source_; }
  const DgModule& target() const { return target_; }
  int degree() const { return degree_; }
  Matrix block(int n) const;  // target.dim(n+degree) x source.dim(n)
  const std::map<int, Matrix>& blocks() const { return blocks_; }

  Vec apply(int n, const Vec& v) const;  // lands in degree n + degree()
  bool is_zero() const { return blocks_.empty(); }

  GradedMap operator+(const GradedMap& rhs) const;
  GradedMap operator-(const GradedMap& rhs) const;
  GradedMap scaled(const Scalar& c) const;

  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  DgModule source_, target_;
  int degree_;
  std::map<int, Matrix> blocks_;  // zero and zero-extent blocks dropped
};

// g after f; degrees add.
GradedMap compose(const GradedMap& g, const GradedMap& f);

// The differential of C as a degree -1 graded map.
GradedMap differential_map(const DgModule& c);

// Differential of the mapping complex: d_D f - (-1)^{deg f} f d_C.
GradedMap hom_differential(const GradedMap& f);
bool is_chain_map(const GradedMap& f);

// (sC)_n = C_{n-1} with negated differential.
DgModule suspend(const DgModule& c);
DgModule desuspend(const DgModule& c);
// s : C -> sC, degree +1, identity blocks (not a chain map).
GradedMap suspension_map(const DgModule& c);
// s^{-1} : sC -> C, degree -1.
GradedMap desuspension_map(const DgModule& c);

// Tensor product of complexes. Basis of degree n: tuples (e_1, ..., e_k) of
// factor basis elements with degrees summing to n, ordered lexicographically
// by the (degree, index) sequence. The differential follows the sign rule
// d(x_1 @ ... @ x_k) = sum_j (-1)^{deg x_1 + ... + deg x_{j-1}} x_1 @ ... @ d x_j @ ... @ x_k.
class TensorSpace {
 public:
  explicit TensorSpace(std::vector<DgModule> factors);

  const DgModule& complex() const { return complex_; }
  int arity() const { return static_cast<int>(factors_.size()); }
  const std::vector<DgModule>& factors() const { return factors_; }

  BasisElt flatten(const std::vector<BasisElt>& tuple) const;
  const std::vector<BasisElt>& expand(BasisElt flat) const;
  const std::vector<std::vector<BasisElt>>& tuples(int degree) const;

 private:
  std::vector<DgModule> factors_;
  std::map<int, std::vector<std::vector<BasisElt>>> tuples_;
  DgModule complex_;
};

TensorSpace tensor(const DgModule& c, const DgModule& d);
TensorSpace tensor_power(const DgModule& c, int n);

// f_1 @ ... @ f_k with the Koszul rule: on x_1 @ ... @ x_k the sign exponent
// is sum over i < j of deg f_j * deg x_i.
GradedMap koszul_tensor(const std::vector<GradedMap>& fs, const TensorSpace& source,
                        const TensorSpace& target);

// Mapping complex Hom(C, D): degree i part has basis E_{c -> e} indexed by
// pairs (c, e) with deg e - deg c = i, ordered by (deg c, index c, index e).
class HomComplex {
 public:
  HomComplex(DgModule source, DgModule target);

  const DgModule& complex() const { return complex_; }
  const DgModule& source() const { return source_; }
  const DgModule& target() const { return target_; }

  BasisElt flatten(BasisElt in, BasisElt out) const;
  const std::pair<BasisElt, BasisElt>& expand(BasisElt flat) const;

  GradedMap to_graded_map(int hom_degree, const Vec& coords) const;
  Vec from_graded_map(const GradedMap& f) const;

 private:
  DgModule source_, target_;
  std::map<int, std::vector<std::pair<BasisElt, BasisElt>>> pairs_;
  DgModule complex_;
};

}  // namespace ainfty
