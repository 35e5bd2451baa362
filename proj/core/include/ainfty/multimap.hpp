#pragma once

#include <functional>
#include <vector>

#include "ainfty/graded.hpp"

namespace ainfty {

// One coefficient of a multilinear operator: out receives coef * (in tuple).
struct MultiMapEntry {
  BasisElt out;
  std::vector<BasisElt> in;
  Scalar coef;
};

// Sparse multilinear operator f : C^{@n} -> D of homogeneous degree i, i.e.
// deg(out) = deg(in_1) + ... + deg(in_n) + i for every entry. Entries are
// kept sorted by (out degree, out index, input tuple) with duplicates merged
// and zero coefficients dropped, so equality is plain entry comparison.
class MultiMap {
 public:
  MultiMap(DgModule source, DgModule target, int arity, int degree,
           std::vector<MultiMapEntry> entries);
  static MultiMap zero(DgModule source, DgModule target, int arity, int degree);
  // Identity operator of arity 1, degree 0 on C.
  static MultiMap identity(const DgModule& c);
  // The differential of C as an arity 1, degree -1 operator.
  static MultiMap from_differential(const DgModule& c);

  const DgModule& source() const { return source_; }
  const DgModule& target() const { return target_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  // Weight grading: degree + arity - 1.
  int weight() const { return degree_ + arity_ - 1; }
  bool is_endo() const { return source_ == target_; }

  const std::vector<MultiMapEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  MultiMap operator+(const MultiMap& rhs) const;
  MultiMap operator-(const MultiMap& rhs) const;
  MultiMap scaled(const Scalar& c) const;
  MultiMap operator-() const;

  friend bool operator==(const MultiMap& a, const MultiMap& b);
  friend bool operator!=(const MultiMap& a, const MultiMap& b) { return !(a == b); }

  // Value on a basis tuple, as a dense vector in the target degree
  // sum(deg in) + degree().
  Vec apply(const std::vector<BasisElt>& in) const;

  // Multilinear extension: argument k is a homogeneous vector in source
  // degree args[k].first. Returns the target degree and the value.
  std::pair<int, Vec> apply_linear(const std::vector<std::pair<int, Vec>>& args) const;

  // Insertion f o_k g for endomorphism operators on one module, 1 <= k <=
  // arity. Output tuple (a_1 .. a_{k-1}, b_1 .. b_m, a_{k+1} .. a_n) picks up
  // the Koszul sign (-1)^{deg g * (deg a_1 + ... + deg a_{k-1})}.
  MultiMap insert_at(int k, const MultiMap& g) const;

  // View as a linear map on the materialized tensor power of the source.
  GradedMap to_graded_map(const TensorSpace& pow) const;
  static MultiMap from_graded_map(const TensorSpace& pow, const DgModule& target,
                                  const GradedMap& f);

 private:
  DgModule source_, target_;
  int arity_, degree_;
  std::vector<MultiMapEntry> entries_;
};

// Ordered basis of the endomorphism operator space Hom_i(C^{@n}, C): all
// degree-consistent (out, in tuple) pairs, sorted by (in tuple, out index).
class EndoBasis {
 public:
  EndoBasis(DgModule c, int arity, int degree);

  const DgModule& complex() const { return c_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::pair<BasisElt, std::vector<BasisElt>>& elt(int k) const { return elems_[k]; }
  int index_of(const BasisElt& out, const std::vector<BasisElt>& in) const;  // -1 if absent

  MultiMap basis_map(int k) const;
  Vec vectorize(const MultiMap& f) const;
  MultiMap devectorize(const Vec& coords) const;

 private:
  DgModule c_;
  int arity_, degree_;
  std::vector<std::pair<BasisElt, std::vector<BasisElt>>> elems_;
};

// Matrix of a linear operator between operator spaces, columns indexed by
// dom, rows by cod.
Matrix operator_matrix(const EndoBasis& dom, const EndoBasis& cod,
                       const std::function<MultiMap(const MultiMap&)>& op);

// Mapping-complex differential on endomorphism operators:
//   df = d o_1 f - (-1)^{deg f} sum_k f o_k d.
// Agrees with hom_differential through to_graded_map.
MultiMap operator_differential(const MultiMap& f);

}  // namespace ainfty
