#pragma once

#include <optional>
#include <string_view>

#include "ainfty/homology.hpp"
#include "ainfty/prelie.hpp"

namespace ainfty {

// Sign conventions for truncated multiplications. The three carry the same
// data:
//   circle:    m_i on A, degree i-2, relations sum m_i . m_j = 0
//   suspended: b_i on sA, degree -1, relations sum b_i * b_j = 0, m_i = theta(b_i)
//   stasheff:  t_i on A,  degree i-2, m_i = (-1)^{i(i-1)/2} t_i
enum class Convention { circle, suspended, stasheff };

std::string convention_name(Convention c);
std::optional<Convention> convention_from_name(std::string_view name);

// Degree forced on an arity-i map by the convention.
int convention_degree(Convention c, int arity);
// The level-1 map every structure must carry: the carrier differential, up to
// the sign the suspension introduces.
MultiMap convention_differential(Convention c, const DgModule& carrier);

// Multiplications m_1 .. m_r with m_1 tied to the differential: in circle and
// stasheff conventions m_1 = d_A, in the suspended convention b_1 = s d_A s^{-1}
// (equivalently -d_{sA}).
class ArStructure {
 public:
  ArStructure(DgModule a, int r, std::vector<MultiMap> maps, Convention conv);

  const DgModule& complex() const { return a_; }
  // The complex the maps act on: A, or sA in the suspended convention.
  const DgModule& carrier() const { return carrier_; }
  int level() const { return r_; }
  Convention convention() const { return conv_; }
  const MultiMap& map(int i) const;  // 1 <= i <= level
  const std::vector<MultiMap>& maps() const { return maps_; }

 private:
  DgModule a_;
  DgModule carrier_;
  int r_;
  Convention conv_;
  std::vector<MultiMap> maps_;
};

// Defect of the arity-n relation in the structure's own convention; indices
// above the level contribute zero. The structure is A_n iff the defects
// vanish for 1 <= n' <= n.
MultiMap relation_defect(const ArStructure& s, int n);

struct ArCheckReport {
  int level = 0;
  int checked_up_to = 0;
  int first_failure = 0;  // 0 when all defects vanish
  std::optional<MultiMap> defect;
  bool ok() const { return first_failure == 0; }
};

ArCheckReport check_ar(const ArStructure& s);
ArCheckReport check_ar(const ArStructure& s, int up_to);

// Rewrites the structure in another convention. Relation defects vanish in
// the source iff they vanish in the target; this is asserted on conversion.
ArStructure convert_convention(const ArStructure& s, Convention to);

struct HomologyAlgebra {
  Splitting splitting;
  DgModule h;    // homology with zero differential
  MultiMap mu;   // induced product on h
};

// Product induced on homology by m_2. Needs level >= 2 and the splitting;
// associativity of mu is asserted when level >= 3.
HomologyAlgebra homology_algebra(const ArStructure& s);

}  // namespace ainfty
