#include "ainfty/homology.hpp"

#include <algorithm>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

Matrix row_slice(const Matrix& m, int from, int count) {
  Matrix out(m.ring(), count, m.cols());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(from + i, j);
  }
  return out;
}

Matrix col_slice(const Matrix& m, int from, int count) {
  Matrix out(m.ring(), m.rows(), count);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < count; ++j) out.at(i, j) = m.at(i, from + j);
  }
  return out;
}

// Greedy complement over a field: reduce candidates against an incremental
// echelon and keep the ones that stay independent, in ascending column order.
struct FieldEchelon {
  std::vector<std::pair<int, Vec>> reducers;  // (pivot row, reduced column)

  bool absorb(Vec v) {
    for (;;) {
      int p = -1;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
          p = static_cast<int>(i);
          break;
        }
      }
      if (p < 0) return false;
      bool reduced = false;
      for (const auto& [rp, rv] : reducers) {
        if (rp == p) {
          Scalar f = v[p] * rv[p].inverse();
          for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * rv[i];
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        reducers.push_back({p, std::move(v)});
        return true;
      }
    }
  }
};

struct DegreeCore {
  int z = 0, b = 0, h = 0;
  std::vector<BigInt> torsion;
  Matrix sigma, beta;  // sigma spans the free part even with torsion present
};

DegreeCore matrix_core(const RingSpec& ring, const Matrix& dnext, const Matrix& dprev) {
  DegreeCore out;
  Matrix k = kernel_basis(dnext);
  Matrix bm = image_basis(dprev);
  out.z = k.cols();
  out.b = bm.cols();
  out.h = out.z - out.b;

  if (ring.is_field()) {
    FieldEchelon ech;
    for (int j = 0; j < bm.cols(); ++j) ech.absorb(bm.column_vec(j));
    Matrix sigma(ring, dnext.cols(), out.h);
    int got = 0;
    for (int j = 0; j < k.cols() && got < out.h; ++j) {
      Vec col = k.column_vec(j);
      if (ech.absorb(col)) sigma.set_column(got++, k.column_vec(j));
    }
    if (got != out.h) throw Error("internal: cycle complement selection failed");
    out.sigma = std::move(sigma);
    out.beta = std::move(bm);
    return out;
  }

  // Integer ring: express boundaries in the kernel basis and diagonalize.
  // The recombined kernel basis lists near-boundaries first (scaled by the
  // invariant factors) and free-part representatives after; the factors are
  // all units exactly when the homology is free.
  auto x = solve_many(k, bm);
  if (!x) throw Error("internal: boundaries escape the cycle lattice");
  SmithNormalForm s = smith_normal_form(*x);
  if (s.rank != out.b) throw Error("internal: boundary basis is degenerate");
  for (const BigInt& d : s.diagonal) {
    if (d != 1) out.torsion.push_back(d);
  }
  Matrix kp = k * s.Uinv;
  out.beta = col_slice(kp, 0, out.b);
  out.sigma = col_slice(kp, out.b, out.h);
  return out;
}

DegreeCore degree_core(const DgModule& c, int n) {
  return matrix_core(c.ring(), c.diff(n), c.diff(n + 1));
}

}  // namespace

bool HomologyData::has_torsion() const {
  for (const auto& [n, d] : by_degree) {
    if (!d.torsion.empty()) return true;
  }
  return false;
}

const HomologyDegree& HomologyData::at(int n) const {
  static const HomologyDegree empty;
  auto it = by_degree.find(n);
  return it == by_degree.end() ? empty : it->second;
}

GradedModule HomologyData::free_module() const {
  std::map<int, int> dims;
  for (const auto& [n, d] : by_degree) {
    if (d.rank > 0) dims[n] = d.rank;
  }
  return GradedModule(ring, std::move(dims));
}

HomologyData homology(const DgModule& c) {
  HomologyData data{c.ring(), {}};
  for (const auto& [n, dim] : c.module().dims()) {
    (void)dim;
    DegreeCore core = degree_core(c, n);
    data.by_degree[n] = {core.z, core.b, core.h, core.torsion};
  }
  return data;
}

Subquotient subquotient(const Matrix& dnext, const Matrix& dprev) {
  if (dnext.ring() != dprev.ring()) throw RingMismatch("subquotient over mixed rings");
  if (dprev.rows() != dnext.cols()) throw ShapeMismatch("two-step maps do not compose");
  if (!(dnext * dprev).is_zero()) throw ValidationError("two-step composite is nonzero");
  DegreeCore core = matrix_core(dnext.ring(), dnext, dprev);
  return {core.z, core.b, core.h, std::move(core.torsion), std::move(core.sigma)};
}

Splitting::Splitting(DgModule c, std::map<int, DegreeSplitting> parts, HomologyData data)
    : c_(std::move(c)), parts_(std::move(parts)), data_(std::move(data)) {}

const DegreeSplitting& Splitting::at(int n) const {
  auto it = parts_.find(n);
  if (it != parts_.end()) return it->second;
  auto ce = empty_cache_.find(n);
  if (ce != empty_cache_.end()) return ce->second;
  const RingSpec ring = c_.ring();
  DegreeSplitting empty{Matrix(ring, 0, 0), Matrix(ring, 0, 0), Matrix(ring, 0, 0),
                        Matrix(ring, 0, 0), Matrix(ring, 0, 0), 0, 0, 0};
  return empty_cache_.emplace(n, std::move(empty)).first->second;
}

DgModule Splitting::homology_complex() const {
  return DgModule::with_zero_differential(data_.free_module());
}

Vec Splitting::proj_h(int n, const Vec& x) const {
  const DegreeSplitting& p = at(n);
  return row_slice(p.decomp_inv, 0, p.h).apply(x);
}

Vec Splitting::proj_b(int n, const Vec& x) const {
  const DegreeSplitting& p = at(n);
  return row_slice(p.decomp_inv, p.h, p.b).apply(x);
}

Vec Splitting::proj_t(int n, const Vec& x) const {
  const DegreeSplitting& p = at(n);
  return row_slice(p.decomp_inv, p.h + p.b, p.bprev).apply(x);
}

Vec Splitting::sigma_apply(int n, const Vec& h_coords) const { return at(n).sigma.apply(h_coords); }

SplittingCheck check_split(const DgModule& c) {
  SplittingCheck out;
  out.data.ring = c.ring();
  std::map<int, DegreeCore> cores;
  bool ok = true;
  for (const auto& [n, dim] : c.module().dims()) {
    (void)dim;
    DegreeCore core = degree_core(c, n);
    out.data.by_degree[n] = {core.z, core.b, core.h, core.torsion};
    if (!core.torsion.empty()) ok = false;
    cores.emplace(n, std::move(core));
  }
  out.splits = ok;
  if (!ok) return out;

  std::map<int, DegreeSplitting> parts;
  for (const auto& [n, core] : cores) {
    DegreeSplitting p;
    p.h = core.h;
    p.b = core.b;
    p.sigma = core.sigma;
    p.beta = core.beta;
    auto below = cores.find(n - 1);
    int bprev = below == cores.end() ? 0 : below->second.b;
    p.bprev = bprev;
    if (bprev > 0) {
      auto tau = solve_many(c.diff(n), below->second.beta);
      if (!tau) throw Error("internal: boundary basis has no preimage");
      p.tau = *tau;
    } else {
      p.tau = Matrix(c.ring(), c.dim(n), 0);
    }
    if (p.h + p.b + p.bprev != c.dim(n)) throw Error("internal: splitting ranks do not fill the degree");
    p.decomp = p.sigma.hcat(p.beta).hcat(p.tau);
    p.decomp_inv = inverse(p.decomp);
    parts.emplace(n, std::move(p));
  }
  out.splitting.emplace(c, std::move(parts), out.data);
  return out;
}

Splitting require_split(const DgModule& c) {
  SplittingCheck chk = check_split(c);
  if (!chk.splits) {
    std::string where;
    for (const auto& [n, d] : chk.data.by_degree) {
      if (d.torsion.empty()) continue;
      where += " degree " + std::to_string(n) + ":";
      for (const BigInt& t : d.torsion) where += " " + t.str();
    }
    throw NotSplit("homology has torsion;" + where);
  }
  return std::move(*chk.splitting);
}

GradedMap induced_map(const GradedMap& f, const Splitting& sc, const Splitting& sd) {
  if (!(f.source() == sc.complex()) || !(f.target() == sd.complex())) {
    throw ShapeMismatch("map does not match the given splittings");
  }
  if (!is_chain_map(f)) throw NotAChainMap("induced map of a non-chain map");
  const int i = f.degree();
  DgModule hc = sc.homology_complex();
  DgModule hd = sd.homology_complex();
  std::map<int, Matrix> blocks;
  for (const auto& [n, dim] : hc.module().dims()) {
    (void)dim;
    const DegreeSplitting& pd = sd.at(n + i);
    Matrix ph = row_slice(pd.decomp_inv, 0, pd.h);
    Matrix block = ph * f.block(n) * sc.at(n).sigma;
    if (!block.is_zero()) blocks.emplace(n, std::move(block));
  }
  return GradedMap(std::move(hc), std::move(hd), i, std::move(blocks));
}

GradedMap lift_cycle_map(const GradedMap& g, const Splitting& sc, const Splitting& sd) {
  if (!(g.source() == sc.homology_complex()) || !(g.target() == sd.homology_complex())) {
    throw ShapeMismatch("map does not live on the split homology");
  }
  const int i = g.degree();
  std::map<int, Matrix> blocks;
  for (const auto& [n, dim] : sc.complex().module().dims()) {
    (void)dim;
    const DegreeSplitting& pc = sc.at(n);
    Matrix ph = row_slice(pc.decomp_inv, 0, pc.h);
    Matrix block = sd.at(n + i).sigma * g.block(n) * ph;
    if (!block.is_zero()) blocks.emplace(n, std::move(block));
  }
  return GradedMap(sc.complex(), sd.complex(), i, std::move(blocks));
}

GradedMap write_as_boundary(const GradedMap& f, const Splitting& sc, const Splitting& sd) {
  if (!(f.source() == sc.complex()) || !(f.target() == sd.complex())) {
    throw ShapeMismatch("map does not match the given splittings");
  }
  if (!is_chain_map(f)) throw NotAChainMap("only chain maps bound");
  GradedMap ind = induced_map(f, sc, sd);
  if (!ind.is_zero()) throw NonzeroInducedMap("map is nonzero on homology");
  const int i = f.degree();
  const RingSpec ring = f.source().ring();
  const Scalar sign = i % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
  std::map<int, Matrix> blocks;
  for (const auto& [n, dim] : sc.complex().module().dims()) {
    (void)dim;
    const DegreeSplitting& pc = sc.at(n);
    const DegreeSplitting& pd = sd.at(n + i);
    Matrix pb_c = row_slice(pc.decomp_inv, pc.h, pc.b);
    Matrix ph_c = row_slice(pc.decomp_inv, 0, pc.h);
    Matrix pb_d = row_slice(pd.decomp_inv, pd.h, pd.b);
    Matrix block = f.block(n + 1) * sc.at(n + 1).tau * pb_c;
    block = block.scaled(sign) + sd.at(n + i + 1).tau * pb_d * f.block(n) * pc.sigma * ph_c;
    if (!block.is_zero()) blocks.emplace(n, std::move(block));
  }
  return GradedMap(f.source(), f.target(), i + 1, std::move(blocks));
}

HomHomologyIso::HomHomologyIso(const DgModule& c, const DgModule& d)
    : sc_(require_split(c)),
      sd_(require_split(d)),
      hom_(c, d),
      hom_split_(require_split(hom_.complex())) {
  for (const auto& [i, deg] : hom_split_.data().by_degree) {
    if (deg.rank > 0) hom_ranks_[i] = deg.rank;
  }
  const HomologyData& dc = sc_.data();
  const HomologyData& dd = sd_.data();
  for (const auto& [n, hn] : dc.by_degree) {
    if (hn.rank == 0) continue;
    for (const auto& [m, hm] : dd.by_degree) {
      if (hm.rank == 0) continue;
      target_dims_[m - n] += hn.rank * hm.rank;
    }
  }
  if (hom_ranks_ != target_dims_) {
    throw Error("homology of the mapping complex does not match maps of homology");
  }

  // Bijectivity: induced maps of the homology representatives must form an
  // invertible (over Z: unimodular) matrix in each degree.
  HomComplex hh(sc_.homology_complex(), sd_.homology_complex());
  for (const auto& [i, r] : hom_ranks_) {
    Matrix m(c.ring(), r, r);
    const DegreeSplitting& p = hom_split_.at(i);
    for (int k = 0; k < r; ++k) {
      GradedMap cycle = hom_.to_graded_map(i, p.sigma.column_vec(k));
      m.set_column(k, hh.from_graded_map(induced_map(cycle, sc_, sd_)));
    }
    try {
      inverse(m);
    } catch (const NotInvertible&) {
      throw Error("induced correspondence fails to be bijective in degree " + std::to_string(i));
    }
  }
}

GradedMap HomHomologyIso::forward(const GradedMap& cycle) const {
  return induced_map(cycle, sc_, sd_);
}

GradedMap HomHomologyIso::lift(const GradedMap& g) const { return lift_cycle_map(g, sc_, sd_); }

MultiHomIso::MultiHomIso(Splitting split, int arity)
    : split_(std::move(split)), arity_(arity), h_(split_.homology_complex()) {
  if (arity_ < 1) throw ArityOutOfRange("operator arity must be >= 1");
}

MultiMap MultiHomIso::forward(const MultiMap& f) const {
  if (!(f.source() == split_.complex()) || !f.is_endo() || f.arity() != arity_) {
    throw ShapeMismatch("operator does not match this correspondence");
  }
  if (!operator_differential(f).is_zero()) throw NotAChainMap("operator is not a chain operator");
  std::vector<BasisElt> hbasis = h_.module().basis();
  std::vector<MultiMapEntry> entries;
  std::vector<BasisElt> tuple(arity_);
  std::vector<std::pair<int, Vec>> args(arity_);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == arity_) {
      auto [odeg, val] = f.apply_linear(args);
      if (is_zero_vec(val)) return;
      Vec hv = split_.proj_h(odeg, val);
      for (int r = 0; r < static_cast<int>(hv.size()); ++r) {
        if (hv[r].is_zero()) continue;
        entries.push_back({{odeg, r}, tuple, hv[r]});
      }
      return;
    }
    for (const BasisElt& e : hbasis) {
      tuple[slot] = e;
      args[slot] = {e.degree, split_.at(e.degree).sigma.column_vec(e.index)};
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
  return MultiMap(h_, h_, arity_, f.degree(), std::move(entries));
}

MultiMap MultiHomIso::lift(const MultiMap& u) const {
  if (!(u.source() == h_) || !u.is_endo() || u.arity() != arity_) {
    throw ShapeMismatch("operator does not live on the split homology");
  }
  const DgModule& c = split_.complex();
  std::vector<BasisElt> cbasis = c.module().basis();
  std::vector<MultiMapEntry> entries;
  std::vector<BasisElt> tuple(arity_);
  std::vector<std::pair<int, Vec>> args(arity_);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == arity_) {
      auto [odeg, hval] = u.apply_linear(args);
      if (is_zero_vec(hval)) return;
      Vec val = split_.sigma_apply(odeg, hval);
      for (int r = 0; r < static_cast<int>(val.size()); ++r) {
        if (val[r].is_zero()) continue;
        entries.push_back({{odeg, r}, tuple, val[r]});
      }
      return;
    }
    for (const BasisElt& e : cbasis) {
      tuple[slot] = e;
      Vec unit = zero_vec(c.ring(), c.dim(e.degree));
      unit[e.index] = Scalar::one(c.ring());
      args[slot] = {e.degree, split_.proj_h(e.degree, unit)};
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
  return MultiMap(c, c, arity_, u.degree(), std::move(entries));
}

void MultiHomIso::verify() const {
  const DgModule& c = split_.complex();
  TensorSpace pow = tensor_power(c, arity_);
  HomComplex hom(pow.complex(), c);
  Splitting hsplit = require_split(hom.complex());

  std::map<int, int> hom_ranks;
  for (const auto& [i, deg] : hsplit.data().by_degree) {
    if (deg.rank > 0) hom_ranks[i] = deg.rank;
  }
  std::map<int, int> target_dims;
  if (h_.module().total_rank() > 0) {
    int lo = h_.module().min_degree() - arity_ * std::max(h_.module().max_degree(), 0) - 1;
    int hi = h_.module().max_degree() - arity_ * std::min(h_.module().min_degree(), 0) + 1;
    for (int i = lo; i <= hi; ++i) {
      int sz = EndoBasis(h_, arity_, i).size();
      if (sz > 0) target_dims[i] = sz;
    }
  }
  if (hom_ranks != target_dims) {
    throw Error("operator homology does not match operators on homology at arity " +
                std::to_string(arity_));
  }
  for (const auto& [i, r] : hom_ranks) {
    EndoBasis basis(h_, arity_, i);
    Matrix m(c.ring(), r, r);
    const DegreeSplitting& p = hsplit.at(i);
    for (int k = 0; k < r; ++k) {
      GradedMap cycle = hom.to_graded_map(i, p.sigma.column_vec(k));
      MultiMap op = MultiMap::from_graded_map(pow, c, cycle);
      m.set_column(k, basis.vectorize(forward(op)));
    }
    try {
      inverse(m);
    } catch (const NotInvertible&) {
      throw Error("operator correspondence fails to be bijective in degree " + std::to_string(i));
    }
  }
}

}  // namespace ainfty
