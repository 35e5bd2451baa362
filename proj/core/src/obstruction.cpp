#include "ainfty/obstruction.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ainfty/errors.hpp"
#include "ainfty/linalg.hpp"
#include "ainfty/prelie.hpp"

namespace ainfty {

namespace {

// s must already be in the circle convention.
MultiMap obstruction_of(const ArStructure& s) {
  const DgModule& c = s.complex();
  int r = s.level();
  MultiMap acc = MultiMap::zero(c, c, r + 1, r - 2);
  for (int i = 2; i <= r; ++i) {
    int j = r + 2 - i;
    if (j < 2 || j > r) continue;
    acc = acc + circle(s.map(i), s.map(j));
  }
  return acc;
}

}  // namespace

MultiMap obstruction_cocycle(const ArStructure& s) {
  if (s.level() < 3) throw RTooSmall("obstruction needs level >= 3");
  ArStructure c = convert_convention(s, Convention::circle);
  ArCheckReport chk = check_ar(c);
  if (!chk.ok())
    throw InvalidArStructure("relation " + std::to_string(chk.first_failure) + " fails");
  MultiMap o = obstruction_of(c);
  if (!prelie_differential(o).is_zero())
    throw Error("internal: obstruction is not a chain operator");
  return o;
}

ObstructionReport lift_once(const ArStructure& s) {
  ArStructure c = convert_convention(s, Convention::circle);
  int r = c.level();
  MultiMap o = obstruction_cocycle(c);
  HomologyAlgebra ha = homology_algebra(c);
  GradedAlgebra alg(ha.h, ha.mu);
  MultiMap obar = MultiHomIso(ha.splitting, r + 1).forward(o);
  if (!hochschild_d(alg, obar).is_zero())
    throw Error("internal: induced obstruction is not closed");

  HochschildOptions opts;
  opts.max_arity = std::max(opts.max_arity, r + 2);
  auto u = is_coboundary(alg, obar, opts);
  if (!u)
    return {r, false, std::move(o), std::move(obar), {}, {}, {}, {}};

  MultiHomIso iso_r(ha.splitting, r);
  MultiMap mprime = iso_r.lift(*u);
  if (!operator_differential(mprime).is_zero())
    throw Error("internal: lifted correction is not a chain operator");
  if (iso_r.forward(mprime) != *u)
    throw Error("internal: correction does not induce its primitive");

  // The corrected next relation reads d(m_{r+1}) = [m_2, correction - m_r]
  // minus the index-3-and-up part of the next obstruction sum.
  MultiMap g = bracket(c.map(2), mprime - c.map(r));
  for (int i = 3; i <= r; ++i) {
    int j = r + 2 - i;
    if (j < 3 || j > r) continue;
    g = g - circle(c.map(i), c.map(j));
  }

  EndoBasis dom(c.complex(), r + 1, r - 1);
  EndoBasis cod(c.complex(), r + 1, r - 2);
  Matrix dm = operator_matrix(dom, cod,
                              [](const MultiMap& f) { return prelie_differential(f); });
  auto x = solve_exact(dm, cod.vectorize(g));
  if (!x) throw Error("internal: corrected defect is not exact");
  MultiMap mnext = dom.devectorize(*x);

  std::vector<MultiMap> maps;
  maps.reserve(r + 1);
  for (int i = 1; i < r; ++i) maps.push_back(c.map(i));
  maps.push_back(c.map(r) - mprime);
  maps.push_back(std::move(mnext));
  ArStructure ext(c.complex(), r + 1, std::move(maps), Convention::circle);
  ArCheckReport chk = check_ar(ext);
  if (!chk.ok())
    throw Error("internal: extension fails relation " + std::to_string(chk.first_failure));

  return {r,
          true,
          std::move(o),
          std::move(obar),
          std::move(*u),
          std::move(mprime),
          ext.map(r + 1),
          convert_convention(ext, s.convention())};
}

std::variant<ArStructure, ObstructionReport> extend_to_ainfty(const ArStructure& s, int n) {
  if (n < s.level()) throw ArityOutOfRange("target level below the current level");
  ArCheckReport chk = check_ar(s);
  if (!chk.ok())
    throw InvalidArStructure("relation " + std::to_string(chk.first_failure) + " fails");
  ArStructure cur = s;
  while (cur.level() < n) {
    ObstructionReport rep = lift_once(cur);
    if (!rep.class_zero) return rep;
    cur = std::move(*rep.extended);
  }
  return cur;
}

}  // namespace ainfty
