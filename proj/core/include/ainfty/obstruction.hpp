#pragma once

#include <variant>

#include "ainfty/hochschild.hpp"

namespace ainfty {

// Sum over i + j = level + 2 with i, j >= 2 of m_i . m_j: a chain operator of
// arity level + 1, degree level - 2, whose class on the homology algebra is
// the sole obstruction to extending the structure one level. Throws RTooSmall
// below level 3 and InvalidArStructure when the relations fail.
MultiMap obstruction_cocycle(const ArStructure& s);

struct ObstructionReport {
  int level = 0;
  bool class_zero = false;
  MultiMap cocycle;  // on the complex
  MultiMap induced;  // on homology
  std::optional<MultiMap> primitive;    // u with [mu, u] = induced
  std::optional<MultiMap> correction;   // chain operator inducing u
  std::optional<MultiMap> next;         // new top multiplication
  std::optional<ArStructure> extended;  // one level up, in the input convention
};

// Decides the obstruction class and, when it vanishes, assembles the
// extension {m_1, .., m_{level-1}, m_level - correction, next}. Needs free
// homology (NotSplit otherwise).
ObstructionReport lift_once(const ArStructure& s);

// Iterates lift_once up to level n; either every level lifts, or the report
// of the first blocking level comes back.
std::variant<ArStructure, ObstructionReport> extend_to_ainfty(const ArStructure& s, int n);

}  // namespace ainfty
