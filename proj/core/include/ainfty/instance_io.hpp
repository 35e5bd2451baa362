#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ainfty/ar_structure.hpp"

namespace ainfty {

// A validated input: a complex over an exact ring, optionally carrying a
// truncated multiplication structure.
struct Instance {
  RingSpec ring;
  DgModule complex;
  std::optional<ArStructure> structure;
};

// Schema-checked pieces before any mathematical validation. Entry indices are
// already range-checked against the declared module (shifted to the carrier
// basis in the suspended convention).
struct RawStructure {
  Convention convention = Convention::circle;
  int level = 0;
  // (arity, declared degree, entries), one per arity present in the file.
  std::vector<std::tuple<int, int, std::vector<MultiMapEntry>>> maps;
};

struct RawInstance {
  RingSpec ring;
  std::map<int, int> dims;
  std::map<int, std::vector<std::tuple<int, int, Scalar>>> diff;
  std::optional<RawStructure> structure;
};

// Strict reader: unknown keys, wrong types, malformed scalars, duplicate or
// out-of-range indices are all ParseError.
RawInstance parse_raw(const std::string& text);

// d^2 = 0 (NotADifferential).
DgModule build_complex(const RawInstance& raw);
// Entry degree consistency (ValidationError), map degrees and map 1
// (InvalidArStructure). Arities absent from the file become zero maps.
std::optional<ArStructure> build_structure(const RawInstance& raw, const DgModule& complex);

Instance build_instance(const RawInstance& raw);

Instance parse_instance(const std::string& text);

// Canonical bytes: fixed key order, sorted entries, reduced scalars. Equal
// instances serialize to equal bytes.
std::string serialize_instance(const Instance& inst);

// "fnv1a:" + 16 hex digits over the canonical serialization.
std::string instance_digest(const Instance& inst);

}  // namespace ainfty
