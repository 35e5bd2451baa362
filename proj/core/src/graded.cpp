#include "ainfty/graded.hpp"

#include <algorithm>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

// Drops zero-extent and identically zero blocks so stored maps are canonical.
std::map<int, Matrix> normalize_blocks(std::map<int, Matrix> blocks) {
  for (auto it = blocks.begin(); it != blocks.end();) {
    if (it->second.rows() == 0 || it->second.cols() == 0 || it->second.is_zero()) {
      it = blocks.erase(it);
    } else {
      ++it;
    }
  }
  return blocks;
}

}  // namespace

GradedModule::GradedModule(RingSpec ring, std::map<int, int> dims) : ring_(ring), dims_(std::move(dims)) {
  for (auto it = dims_.begin(); it != dims_.end();) {
    if (it->second < 0) throw ValidationError("negative rank in graded module");
    if (it->second == 0) {
      it = dims_.erase(it);
    } else {
      ++it;
    }
  }
}

int GradedModule::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

int GradedModule::total_rank() const {
  int t = 0;
  for (const auto& [deg, d] : dims_) t += d;
  return t;
}

int GradedModule::min_degree() const { return dims_.empty() ? 0 : dims_.begin()->first; }

int GradedModule::max_degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

bool GradedModule::valid_elt(BasisElt e) const { return e.index >= 0 && e.index < dim(e.degree); }

std::vector<BasisElt> GradedModule::basis() const {
  std::vector<BasisElt> out;
  out.reserve(total_rank());
  for (const auto& [deg, d] : dims_) {
    for (int i = 0; i < d; ++i) out.push_back({deg, i});
  }
  return out;
}

DgModule::DgModule(GradedModule mod, std::map<int, Matrix> diff) : mod_(std::move(mod)) {
  // Validate before canonicalization so a misshapen zero block still fails.
  for (const auto& [n, m] : diff) {
    if (!(m.ring() == mod_.ring())) throw RingMismatch("differential ring mismatch");
    if (m.rows() != mod_.dim(n - 1) || m.cols() != mod_.dim(n)) {
      throw ShapeMismatch("differential block shape mismatch at degree " + std::to_string(n));
    }
  }
  diff_ = normalize_blocks(std::move(diff));
  for (const auto& [n, m] : diff_) {
    auto below = diff_.find(n - 1);
    if (below == diff_.end()) continue;
    if (!(below->second * m).is_zero()) {
      throw NotADifferential("differential square is nonzero at degree " + std::to_string(n));
    }
  }
}

DgModule DgModule::with_zero_differential(GradedModule mod) { return DgModule(std::move(mod), {}); }

Matrix DgModule::diff(int n) const {
  auto it = diff_.find(n);
  if (it != diff_.end()) return it->second;
  return Matrix(ring(), dim(n - 1), dim(n));
}

GradedMap::GradedMap(DgModule source, DgModule target, int degree, std::map<int, Matrix> blocks)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_(degree),
      blocks_(normalize_blocks(std::move(blocks))) {
  if (!(source_.ring() == target_.ring())) throw RingMismatch("graded map ring mismatch");
  for (const auto& [n, m] : blocks_) {
    if (!(m.ring() == source_.ring())) throw RingMismatch("graded map block ring mismatch");
    if (m.rows() != target_.dim(n + degree_) || m.cols() != source_.dim(n)) {
      throw ShapeMismatch("graded map block shape mismatch at degree " + std::to_string(n));
    }
  }
}

GradedMap GradedMap::zero(DgModule source, DgModule target, int degree) {
  return GradedMap(std::move(source), std::move(target), degree, {});
}

GradedMap GradedMap::identity(const DgModule& c) {
  std::map<int, Matrix> blocks;
  for (const auto& [deg, d] : c.module().dims()) blocks.emplace(deg, Matrix::identity(c.ring(), d));
  return GradedMap(c, c, 0, std::move(blocks));
}

Matrix GradedMap::block(int n) const {
  auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  return Matrix(source_.ring(), target_.dim(n + degree_), source_.dim(n));
}

Vec GradedMap::apply(int n, const Vec& v) const { return block(n).apply(v); }

GradedMap GradedMap::operator+(const GradedMap& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_) || degree_ != rhs.degree_) {
    throw ShapeMismatch("graded map sum mismatch");
  }
  std::map<int, Matrix> blocks = blocks_;
  for (const auto& [n, m] : rhs.blocks_) {
    auto it = blocks.find(n);
    if (it == blocks.end()) {
      blocks.emplace(n, m);
    } else {
      it->second = it->second + m;
    }
  }
  return GradedMap(source_, target_, degree_, std::move(blocks));
}

GradedMap GradedMap::operator-(const GradedMap& rhs) const {
  return *this + rhs.scaled(-Scalar::one(source_.ring()));
}

GradedMap GradedMap::scaled(const Scalar& c) const {
  std::map<int, Matrix> blocks;
  for (const auto& [n, m] : blocks_) blocks.emplace(n, m.scaled(c));
  return GradedMap(source_, target_, degree_, std::move(blocks));
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!(g.source() == f.target())) throw ShapeMismatch("composition middle module mismatch");
  std::map<int, Matrix> blocks;
  for (const auto& [n, fb] : f.blocks()) {
    Matrix gb = g.block(n + f.degree());
    if (gb.rows() == 0) continue;
    blocks.emplace(n, gb * fb);
  }
  return GradedMap(f.source(), g.target(), f.degree() + g.degree(), std::move(blocks));
}

GradedMap differential_map(const DgModule& c) {
  return GradedMap(c, c, -1, c.diff_blocks());
}

GradedMap hom_differential(const GradedMap& f) {
  const DgModule& c = f.source();
  const DgModule& d = f.target();
  const int i = f.degree();
  const Scalar sign = i % 2 == 0 ? Scalar::one(c.ring()) : -Scalar::one(c.ring());
  std::map<int, Matrix> blocks;
  for (const auto& [deg, dims] : c.module().dims()) {
    (void)dims;
    Matrix b = d.diff(deg + i) * f.block(deg) - f.block(deg - 1).scaled(sign) * c.diff(deg);
    if (!b.is_zero()) blocks.emplace(deg, b);
  }
  return GradedMap(c, d, i - 1, std::move(blocks));
}

bool is_chain_map(const GradedMap& f) { return hom_differential(f).is_zero(); }

DgModule suspend(const DgModule& c) {
  std::map<int, int> dims;
  for (const auto& [deg, d] : c.module().dims()) dims[deg + 1] = d;
  std::map<int, Matrix> diff;
  for (const auto& [n, m] : c.diff_blocks()) diff.emplace(n + 1, m.scaled(-Scalar::one(c.ring())));
  return DgModule(GradedModule(c.ring(), std::move(dims)), std::move(diff));
}

DgModule desuspend(const DgModule& c) {
  std::map<int, int> dims;
  for (const auto& [deg, d] : c.module().dims()) dims[deg - 1] = d;
  std::map<int, Matrix> diff;
  for (const auto& [n, m] : c.diff_blocks()) diff.emplace(n - 1, m.scaled(-Scalar::one(c.ring())));
  return DgModule(GradedModule(c.ring(), std::move(dims)), std::move(diff));
}

GradedMap suspension_map(const DgModule& c) {
  std::map<int, Matrix> blocks;
  for (const auto& [deg, d] : c.module().dims()) blocks.emplace(deg, Matrix::identity(c.ring(), d));
  return GradedMap(c, suspend(c), 1, std::move(blocks));
}

GradedMap desuspension_map(const DgModule& c) {
  std::map<int, Matrix> blocks;
  for (const auto& [deg, d] : c.module().dims()) blocks.emplace(deg + 1, Matrix::identity(c.ring(), d));
  return GradedMap(suspend(c), c, -1, std::move(blocks));
}

namespace {

std::map<int, std::vector<std::vector<BasisElt>>> build_tuples(const std::vector<DgModule>& factors) {
  std::vector<std::vector<BasisElt>> bases;
  for (const DgModule& f : factors) bases.push_back(f.module().basis());
  std::map<int, std::vector<std::vector<BasisElt>>> out;
  std::vector<BasisElt> cur;
  // Depth-first over ascending factor bases yields tuples in lex order, and
  // bucketing by total degree keeps that order within each degree.
  auto rec = [&](auto&& self, std::size_t slot, int deg) -> void {
    if (slot == bases.size()) {
      out[deg].push_back(cur);
      return;
    }
    for (const BasisElt& e : bases[slot]) {
      cur.push_back(e);
      self(self, slot + 1, deg + e.degree);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

DgModule build_tensor_complex(const std::vector<DgModule>& factors,
                              const std::map<int, std::vector<std::vector<BasisElt>>>& tuples) {
  const RingSpec ring = factors.front().ring();
  std::map<int, int> dims;
  for (const auto& [deg, tt] : tuples) dims[deg] = static_cast<int>(tt.size());

  auto flat_index = [&](int deg, const std::vector<BasisElt>& t) -> int {
    auto it = tuples.find(deg);
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), t);
    return static_cast<int>(pos - it->second.begin());
  };

  std::map<int, Matrix> diff;
  for (const auto& [deg, tt] : tuples) {
    auto below = tuples.find(deg - 1);
    if (below == tuples.end()) continue;
    Matrix m(ring, static_cast<int>(below->second.size()), static_cast<int>(tt.size()));
    for (int col = 0; col < static_cast<int>(tt.size()); ++col) {
      const std::vector<BasisElt>& t = tt[col];
      int prefix = 0;
      for (std::size_t k = 0; k < t.size(); ++k) {
        Matrix dk = factors[k].diff(t[k].degree);
        if (dk.rows() > 0) {
          Scalar sign = prefix % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
          for (int r = 0; r < dk.rows(); ++r) {
            if (dk.at(r, t[k].index).is_zero()) continue;
            std::vector<BasisElt> t2 = t;
            t2[k] = {t[k].degree - 1, r};
            m.at(flat_index(deg - 1, t2), col) += sign * dk.at(r, t[k].index);
          }
        }
        prefix += t[k].degree;
      }
    }
    if (!m.is_zero()) diff.emplace(deg, std::move(m));
  }
  return DgModule(GradedModule(ring, std::move(dims)), std::move(diff));
}

}  // namespace

namespace {

std::vector<DgModule> validate_factors(std::vector<DgModule> factors) {
  if (factors.empty()) throw ArityOutOfRange("tensor product needs at least one factor");
  for (const DgModule& f : factors) {
    if (!(f.ring() == factors.front().ring())) throw RingMismatch("tensor factor ring mismatch");
  }
  return factors;
}

}  // namespace

TensorSpace::TensorSpace(std::vector<DgModule> factors)
    : factors_(validate_factors(std::move(factors))),
      tuples_(build_tuples(factors_)),
      complex_(build_tensor_complex(factors_, tuples_)) {}

BasisElt TensorSpace::flatten(const std::vector<BasisElt>& tuple) const {
  if (tuple.size() != factors_.size()) throw ShapeMismatch("tuple arity mismatch");
  int deg = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (!factors_[k].module().valid_elt(tuple[k])) throw ShapeMismatch("tuple element out of range");
    deg += tuple[k].degree;
  }
  const auto& tt = tuples_.at(deg);
  auto pos = std::lower_bound(tt.begin(), tt.end(), tuple);
  return {deg, static_cast<int>(pos - tt.begin())};
}

const std::vector<BasisElt>& TensorSpace::expand(BasisElt flat) const {
  return tuples_.at(flat.degree).at(flat.index);
}

const std::vector<std::vector<BasisElt>>& TensorSpace::tuples(int degree) const {
  static const std::vector<std::vector<BasisElt>> empty;
  auto it = tuples_.find(degree);
  return it == tuples_.end() ? empty : it->second;
}

TensorSpace tensor(const DgModule& c, const DgModule& d) { return TensorSpace({c, d}); }

TensorSpace tensor_power(const DgModule& c, int n) {
  if (n < 1) throw ArityOutOfRange("tensor power needs arity >= 1");
  return TensorSpace(std::vector<DgModule>(static_cast<std::size_t>(n), c));
}

GradedMap koszul_tensor(const std::vector<GradedMap>& fs, const TensorSpace& source,
                        const TensorSpace& target) {
  const int k = source.arity();
  if (static_cast<int>(fs.size()) != k || target.arity() != k) {
    throw ShapeMismatch("tensor map arity mismatch");
  }
  for (int i = 0; i < k; ++i) {
    if (!(fs[i].source() == source.factors()[i]) || !(fs[i].target() == target.factors()[i])) {
      throw ShapeMismatch("tensor map factor mismatch");
    }
  }
  const RingSpec ring = source.complex().ring();
  int degree = 0;
  for (const GradedMap& f : fs) degree += f.degree();

  std::map<int, Matrix> blocks;
  for (const auto& [deg, dim] : source.complex().module().dims()) {
    (void)dim;
    const auto& tt = source.tuples(deg);
    Matrix block(ring, target.complex().dim(deg + degree), static_cast<int>(tt.size()));
    for (int col = 0; col < static_cast<int>(tt.size()); ++col) {
      const std::vector<BasisElt>& t = tt[col];
      // Koszul sign: each f_j moves past x_1, ..., x_{j-1}.
      int exp = 0, prefix = 0;
      for (int j = 0; j < k; ++j) {
        exp += fs[j].degree() * prefix;
        prefix += t[j].degree;
      }
      Scalar sign = exp % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
      std::vector<Vec> images(k);
      bool dead = false;
      for (int j = 0; j < k && !dead; ++j) {
        Matrix b = fs[j].block(t[j].degree);
        images[j] = b.column_vec(t[j].index);
        dead = is_zero_vec(images[j]);
      }
      if (dead) continue;
      std::vector<BasisElt> out(k);
      auto emit = [&](auto&& self, int slot, const Scalar& coef) -> void {
        if (coef.is_zero()) return;
        if (slot == k) {
          BasisElt flat = target.flatten(out);
          block.at(flat.index, col) += coef;
          return;
        }
        int out_deg = t[slot].degree + fs[slot].degree();
        for (int r = 0; r < static_cast<int>(images[slot].size()); ++r) {
          if (images[slot][r].is_zero()) continue;
          out[slot] = {out_deg, r};
          self(self, slot + 1, coef * images[slot][r]);
        }
      };
      emit(emit, 0, sign);
    }
    if (!block.is_zero()) blocks.emplace(deg, std::move(block));
  }
  return GradedMap(source.complex(), target.complex(), degree, std::move(blocks));
}

namespace {

std::map<int, std::vector<std::pair<BasisElt, BasisElt>>> build_pairs(const DgModule& source,
                                                                      const DgModule& target) {
  std::map<int, std::vector<std::pair<BasisElt, BasisElt>>> pairs;
  for (const auto& [n, sd] : source.module().dims()) {
    for (const auto& [m, td] : target.module().dims()) {
      int i = m - n;
      auto& list = pairs[i];
      for (int a = 0; a < sd; ++a) {
        for (int b = 0; b < td; ++b) list.push_back({{n, a}, {m, b}});
      }
    }
  }
  // Within one hom degree the pairs are ordered by (source degree, source
  // index, target index); the loop above inserts per source degree block, so
  // a final sort fixes the interleaving across target degrees.
  for (auto& [i, list] : pairs) std::sort(list.begin(), list.end());
  return pairs;
}

DgModule build_hom_complex(const DgModule& source, const DgModule& target,
                           const std::map<int, std::vector<std::pair<BasisElt, BasisElt>>>& pairs) {
  const RingSpec ring = source.ring();
  std::map<int, int> dims;
  for (const auto& [i, list] : pairs) dims[i] = static_cast<int>(list.size());

  auto flat_index = [&](int i, const std::pair<BasisElt, BasisElt>& pr) -> int {
    const auto& list = pairs.at(i);
    auto pos = std::lower_bound(list.begin(), list.end(), pr);
    return static_cast<int>(pos - list.begin());
  };

  std::map<int, Matrix> diff;
  for (const auto& [i, list] : pairs) {
    auto below = pairs.find(i - 1);
    if (below == pairs.end()) continue;
    Matrix m(ring, static_cast<int>(below->second.size()), static_cast<int>(list.size()));
    Scalar sign = i % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring);
    for (int col = 0; col < static_cast<int>(list.size()); ++col) {
      const auto& [c, e] = list[col];
      // d_D after E_{c -> e}.
      Matrix dt = target.diff(e.degree);
      for (int r = 0; r < dt.rows(); ++r) {
        if (dt.at(r, e.index).is_zero()) continue;
        m.at(flat_index(i - 1, {c, {e.degree - 1, r}}), col) += dt.at(r, e.index);
      }
      // -(-1)^i E_{c -> e} after d_C, which hits basis elements one degree up.
      Matrix dc = source.diff(c.degree + 1);
      for (int j = 0; j < dc.cols(); ++j) {
        if (dc.at(c.index, j).is_zero()) continue;
        m.at(flat_index(i - 1, {{c.degree + 1, j}, e}), col) -= sign * dc.at(c.index, j);
      }
    }
    if (!m.is_zero()) diff.emplace(i, std::move(m));
  }
  return DgModule(GradedModule(ring, std::move(dims)), std::move(diff));
}

}  // namespace

namespace {

DgModule check_hom_rings(DgModule source, const DgModule& target) {
  if (!(source.ring() == target.ring())) throw RingMismatch("hom complex ring mismatch");
  return source;
}

}  // namespace

HomComplex::HomComplex(DgModule source, DgModule target)
    : source_(check_hom_rings(std::move(source), target)),
      target_(std::move(target)),
      pairs_(build_pairs(source_, target_)),
      complex_(build_hom_complex(source_, target_, pairs_)) {}

BasisElt HomComplex::flatten(BasisElt in, BasisElt out) const {
  int i = out.degree - in.degree;
  const auto& list = pairs_.at(i);
  std::pair<BasisElt, BasisElt> pr{in, out};
  auto pos = std::lower_bound(list.begin(), list.end(), pr);
  if (pos == list.end() || *pos != pr) throw ShapeMismatch("hom basis pair out of range");
  return {i, static_cast<int>(pos - list.begin())};
}

const std::pair<BasisElt, BasisElt>& HomComplex::expand(BasisElt flat) const {
  return pairs_.at(flat.degree).at(flat.index);
}

GradedMap HomComplex::to_graded_map(int hom_degree, const Vec& coords) const {
  auto it = pairs_.find(hom_degree);
  std::map<int, Matrix> blocks;
  if (it != pairs_.end()) {
    if (coords.size() != it->second.size()) throw ShapeMismatch("hom coordinate length mismatch");
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      if (coords[k].is_zero()) continue;
      const auto& [c, e] = it->second[k];
      auto bit = blocks.find(c.degree);
      if (bit == blocks.end()) {
        bit = blocks
                  .emplace(c.degree, Matrix(source_.ring(), target_.dim(c.degree + hom_degree),
                                            source_.dim(c.degree)))
                  .first;
      }
      bit->second.at(e.index, c.index) += coords[k];
    }
  } else if (!coords.empty()) {
    throw ShapeMismatch("hom coordinate length mismatch");
  }
  return GradedMap(source_, target_, hom_degree, std::move(blocks));
}

Vec HomComplex::from_graded_map(const GradedMap& f) const {
  if (!(f.source() == source_) || !(f.target() == target_)) {
    throw ShapeMismatch("graded map does not live in this hom complex");
  }
  auto it = pairs_.find(f.degree());
  if (it == pairs_.end()) {
    if (!f.is_zero()) throw ShapeMismatch("graded map degree outside hom support");
    return {};
  }
  Vec coords = zero_vec(source_.ring(), static_cast<int>(it->second.size()));
  for (std::size_t k = 0; k < it->second.size(); ++k) {
    const auto& [c, e] = it->second[k];
    coords[k] = f.block(c.degree).at(e.index, c.index);
  }
  return coords;
}

}  // namespace ainfty
