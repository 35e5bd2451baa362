#include "ainfty/ar_structure.hpp"

#include <string>
#include <utility>

#include "ainfty/errors.hpp"

namespace ainfty {

int convention_degree(Convention c, int arity) {
  return c == Convention::suspended ? -1 : arity - 2;
}

// Transporting d_A through the suspension gives s d_A s^{-1} = -d_{sA}.
MultiMap convention_differential(Convention c, const DgModule& carrier) {
  MultiMap d = MultiMap::from_differential(carrier);
  return c == Convention::suspended ? -d : d;
}

namespace {

// m_i = (-1)^{i(i-1)/2} t_i; the factor is an involution, so it converts in
// both directions.
MultiMap stasheff_resign(const MultiMap& m, int i) {
  return (i * (i - 1) / 2) % 2 != 0 ? -m : m;
}

ArStructure to_circle(const ArStructure& s) {
  std::vector<MultiMap> maps;
  maps.reserve(s.level());
  switch (s.convention()) {
    case Convention::circle:
      return s;
    case Convention::stasheff:
      for (int i = 1; i <= s.level(); ++i) maps.push_back(stasheff_resign(s.map(i), i));
      break;
    case Convention::suspended:
      for (int i = 1; i <= s.level(); ++i) maps.push_back(theta(s.map(i), s.complex()));
      break;
  }
  return ArStructure(s.complex(), s.level(), std::move(maps), Convention::circle);
}

ArStructure from_circle(const ArStructure& s, Convention to) {
  std::vector<MultiMap> maps;
  maps.reserve(s.level());
  switch (to) {
    case Convention::circle:
      return s;
    case Convention::stasheff:
      for (int i = 1; i <= s.level(); ++i) maps.push_back(stasheff_resign(s.map(i), i));
      break;
    case Convention::suspended:
      for (int i = 1; i <= s.level(); ++i) maps.push_back(theta_inv(s.map(i)));
      break;
  }
  return ArStructure(s.complex(), s.level(), std::move(maps), to);
}

}  // namespace

std::string convention_name(Convention c) {
  switch (c) {
    case Convention::circle: return "circle";
    case Convention::suspended: return "suspended";
    case Convention::stasheff: return "stasheff";
  }
  throw Error("unknown convention");
}

std::optional<Convention> convention_from_name(std::string_view name) {
  if (name == "circle") return Convention::circle;
  if (name == "suspended") return Convention::suspended;
  if (name == "stasheff") return Convention::stasheff;
  return std::nullopt;
}

ArStructure::ArStructure(DgModule a, int r, std::vector<MultiMap> maps, Convention conv)
    : a_(std::move(a)),
      carrier_(conv == Convention::suspended ? suspend(a_) : a_),
      r_(r),
      conv_(conv),
      maps_(std::move(maps)) {
  if (r_ < 1) throw InvalidArStructure("level must be at least 1");
  if (static_cast<int>(maps_.size()) != r_)
    throw InvalidArStructure("expected " + std::to_string(r_) + " maps, got " +
                             std::to_string(maps_.size()));
  for (int i = 1; i <= r_; ++i) {
    const MultiMap& m = maps_[i - 1];
    if (!m.is_endo() || m.source() != carrier_)
      throw InvalidArStructure("map " + std::to_string(i) +
                               " does not act on the carrier complex");
    if (m.arity() != i)
      throw InvalidArStructure("map " + std::to_string(i) + " has arity " +
                               std::to_string(m.arity()));
    if (m.degree() != convention_degree(conv_, i))
      throw InvalidArStructure("map " + std::to_string(i) + " has degree " +
                               std::to_string(m.degree()) + ", expected " +
                               std::to_string(convention_degree(conv_, i)));
  }
  if (maps_[0] != convention_differential(conv_, carrier_))
    throw InvalidArStructure("map 1 is not induced by the differential");
}

const MultiMap& ArStructure::map(int i) const {
  if (i < 1 || i > r_) throw ArityOutOfRange("map index outside [1, level]");
  return maps_[i - 1];
}

MultiMap relation_defect(const ArStructure& s, int n) {
  if (n < 1) throw ArityOutOfRange("relation index must be positive");
  const DgModule& c = s.carrier();
  int degree = s.convention() == Convention::suspended ? -2 : n - 3;
  MultiMap acc = MultiMap::zero(c, c, n, degree);
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (i > s.level() || j > s.level()) continue;
    const MultiMap& f = s.map(i);
    const MultiMap& g = s.map(j);
    switch (s.convention()) {
      case Convention::circle:
        acc = acc + circle(f, g);
        break;
      case Convention::suspended:
        acc = acc + star(f, g);
        break;
      case Convention::stasheff: {
        // sum_k (-1)^{jn + k(j-1)} t_i o_k t_j with plain insertions; same
        // zero set as either other convention's relation.
        MultiMap term = MultiMap::zero(c, c, n, degree);
        for (int k = 1; k <= i; ++k) {
          MultiMap ins = f.insert_at(k, g);
          term = (k * (j - 1)) % 2 != 0 ? term - ins : term + ins;
        }
        acc = (j * n) % 2 != 0 ? acc - term : acc + term;
        break;
      }
    }
  }
  return acc;
}

ArCheckReport check_ar(const ArStructure& s, int up_to) {
  if (up_to < 1 || up_to > s.level())
    throw ArityOutOfRange("check bound must lie in [1, level]");
  ArCheckReport rep;
  rep.level = s.level();
  rep.checked_up_to = up_to;
  for (int n = 1; n <= up_to; ++n) {
    MultiMap d = relation_defect(s, n);
    if (!d.is_zero()) {
      rep.first_failure = n;
      rep.defect = std::move(d);
      break;
    }
  }
  return rep;
}

ArCheckReport check_ar(const ArStructure& s) { return check_ar(s, s.level()); }

ArStructure convert_convention(const ArStructure& s, Convention to) {
  if (s.convention() == to) return s;
  ArStructure out = from_circle(to_circle(s), to);
  for (int n = 1; n <= s.level(); ++n) {
    if (relation_defect(s, n).is_zero() != relation_defect(out, n).is_zero())
      throw Error("conversion changed the zero set of relation " + std::to_string(n));
  }
  return out;
}

HomologyAlgebra homology_algebra(const ArStructure& s) {
  if (s.level() < 2) throw RTooSmall("homology algebra needs level >= 2");
  ArStructure c = to_circle(s);
  if (!relation_defect(c, 2).is_zero())
    throw InvalidArStructure("map 2 is not a chain operator");
  Splitting split = require_split(c.complex());
  MultiHomIso iso(split, 2);
  MultiMap mu = iso.forward(c.map(2));
  DgModule h = split.homology_complex();
  if (c.level() >= 3 && !circle(mu, mu).is_zero())
    throw NotAssociative("induced product on homology fails associativity");
  return HomologyAlgebra{std::move(split), std::move(h), std::move(mu)};
}

}  // namespace ainfty
