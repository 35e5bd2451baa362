#include "ainfty/multimap.hpp"

#include <algorithm>
#include <tuple>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

bool entry_order(const MultiMapEntry& a, const MultiMapEntry& b) {
  return std::tie(a.out, a.in) < std::tie(b.out, b.in);
}

}  // namespace

MultiMap::MultiMap(DgModule source, DgModule target, int arity, int degree,
                   std::vector<MultiMapEntry> entries)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), degree_(degree) {
  if (arity_ < 1) throw ArityOutOfRange("operator arity must be >= 1");
  if (!(source_.ring() == target_.ring())) throw RingMismatch("operator ring mismatch");
  for (const MultiMapEntry& e : entries) {
    if (static_cast<int>(e.in.size()) != arity_) throw ShapeMismatch("entry arity mismatch");
    if (!(e.coef.ring() == source_.ring())) throw RingMismatch("entry coefficient ring mismatch");
    int deg = degree_;
    for (const BasisElt& b : e.in) {
      if (!source_.module().valid_elt(b)) throw ValidationError("entry input out of range");
      deg += b.degree;
    }
    if (e.out.degree != deg) throw ValidationError("degree-inconsistent operator entry");
    if (!target_.module().valid_elt(e.out)) throw ValidationError("entry output out of range");
  }
  std::sort(entries.begin(), entries.end(), entry_order);
  for (const MultiMapEntry& e : entries) {
    if (!entries_.empty() && entries_.back().out == e.out && entries_.back().in == e.in) {
      entries_.back().coef += e.coef;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const MultiMapEntry& e) { return e.coef.is_zero(); });
}

MultiMap MultiMap::zero(DgModule source, DgModule target, int arity, int degree) {
  return MultiMap(std::move(source), std::move(target), arity, degree, {});
}

MultiMap MultiMap::identity(const DgModule& c) {
  std::vector<MultiMapEntry> entries;
  for (const BasisElt& e : c.module().basis()) entries.push_back({e, {e}, Scalar::one(c.ring())});
  return MultiMap(c, c, 1, 0, std::move(entries));
}

MultiMap MultiMap::from_differential(const DgModule& c) {
  std::vector<MultiMapEntry> entries;
  for (const auto& [n, m] : c.diff_blocks()) {
    for (int col = 0; col < m.cols(); ++col) {
      for (int row = 0; row < m.rows(); ++row) {
        if (m.at(row, col).is_zero()) continue;
        entries.push_back({{n - 1, row}, {{n, col}}, m.at(row, col)});
      }
    }
  }
  return MultiMap(c, c, 1, -1, std::move(entries));
}

MultiMap MultiMap::operator+(const MultiMap& rhs) const {
  if (!(source_ == rhs.source_) || !(target_ == rhs.target_) || arity_ != rhs.arity_ ||
      degree_ != rhs.degree_) {
    throw ShapeMismatch("operator sum mismatch");
  }
  std::vector<MultiMapEntry> entries = entries_;
  entries.insert(entries.end(), rhs.entries_.begin(), rhs.entries_.end());
  return MultiMap(source_, target_, arity_, degree_, std::move(entries));
}

MultiMap MultiMap::operator-(const MultiMap& rhs) const { return *this + (-rhs); }

MultiMap MultiMap::scaled(const Scalar& c) const {
  std::vector<MultiMapEntry> entries = entries_;
  for (MultiMapEntry& e : entries) e.coef *= c;
  return MultiMap(source_, target_, arity_, degree_, std::move(entries));
}

MultiMap MultiMap::operator-() const { return scaled(-Scalar::one(source_.ring())); }

bool operator==(const MultiMap& a, const MultiMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_) || a.arity_ != b.arity_ ||
      a.degree_ != b.degree_ || a.entries_.size() != b.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const MultiMapEntry& x = a.entries_[i];
    const MultiMapEntry& y = b.entries_[i];
    if (x.out != y.out || x.in != y.in || x.coef != y.coef) return false;
  }
  return true;
}

Vec MultiMap::apply(const std::vector<BasisElt>& in) const {
  if (static_cast<int>(in.size()) != arity_) throw ShapeMismatch("apply arity mismatch");
  int deg = degree_;
  for (const BasisElt& b : in) deg += b.degree;
  Vec out = zero_vec(source_.ring(), target_.dim(deg));
  for (const MultiMapEntry& e : entries_) {
    if (e.in == in) out[e.out.index] += e.coef;
  }
  return out;
}

std::pair<int, Vec> MultiMap::apply_linear(const std::vector<std::pair<int, Vec>>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw ShapeMismatch("apply arity mismatch");
  int deg = degree_;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (static_cast<int>(args[k].second.size()) != source_.dim(args[k].first)) {
      throw ShapeMismatch("argument vector length mismatch");
    }
    deg += args[k].first;
  }
  Vec out = zero_vec(source_.ring(), target_.dim(deg));
  for (const MultiMapEntry& e : entries_) {
    Scalar c = e.coef;
    bool dead = false;
    for (int k = 0; k < arity_ && !dead; ++k) {
      if (e.in[k].degree != args[k].first) {
        dead = true;
        break;
      }
      const Scalar& x = args[k].second[e.in[k].index];
      if (x.is_zero()) {
        dead = true;
      } else {
        c *= x;
      }
    }
    if (!dead) out[e.out.index] += c;
  }
  return {deg, std::move(out)};
}

MultiMap MultiMap::insert_at(int k, const MultiMap& g) const {
  if (!is_endo() || !g.is_endo() || !(source_ == g.source_)) {
    throw ShapeMismatch("insertion needs endomorphism operators on one module");
  }
  if (k < 1 || k > arity_) throw ArityOutOfRange("insertion slot out of range");
  const RingSpec ring = source_.ring();
  const bool g_odd = g.degree_ % 2 != 0;

  std::vector<MultiMapEntry> out;
  for (const MultiMapEntry& fe : entries_) {
    const BasisElt slot = fe.in[k - 1];
    int prefix = 0;
    for (int t = 0; t < k - 1; ++t) prefix += fe.in[t].degree;
    const bool flip = g_odd && prefix % 2 != 0;
    for (const MultiMapEntry& ge : g.entries_) {
      if (ge.out != slot) continue;
      Scalar c = fe.coef * ge.coef;
      if (flip) c = -c;
      std::vector<BasisElt> in;
      in.reserve(arity_ + g.arity_ - 1);
      in.insert(in.end(), fe.in.begin(), fe.in.begin() + (k - 1));
      in.insert(in.end(), ge.in.begin(), ge.in.end());
      in.insert(in.end(), fe.in.begin() + k, fe.in.end());
      out.push_back({fe.out, std::move(in), c});
    }
  }
  return MultiMap(source_, target_, arity_ + g.arity_ - 1, degree_ + g.degree_, std::move(out));
}

GradedMap MultiMap::to_graded_map(const TensorSpace& pow) const {
  if (pow.arity() != arity_) throw ShapeMismatch("tensor power arity mismatch");
  for (const DgModule& f : pow.factors()) {
    if (!(f == source_)) throw ShapeMismatch("tensor power factor mismatch");
  }
  std::map<int, Matrix> blocks;
  for (const MultiMapEntry& e : entries_) {
    BasisElt flat = pow.flatten(e.in);
    auto it = blocks.find(flat.degree);
    if (it == blocks.end()) {
      it = blocks
               .emplace(flat.degree, Matrix(source_.ring(), target_.dim(flat.degree + degree_),
                                            pow.complex().dim(flat.degree)))
               .first;
    }
    it->second.at(e.out.index, flat.index) += e.coef;
  }
  return GradedMap(pow.complex(), target_, degree_, std::move(blocks));
}

MultiMap MultiMap::from_graded_map(const TensorSpace& pow, const DgModule& target,
                                   const GradedMap& f) {
  if (!(f.source() == pow.complex())) throw ShapeMismatch("graded map source mismatch");
  if (!(f.target() == target)) throw ShapeMismatch("graded map target mismatch");
  std::vector<MultiMapEntry> entries;
  for (const auto& [deg, block] : f.blocks()) {
    const auto& tt = pow.tuples(deg);
    for (int col = 0; col < block.cols(); ++col) {
      for (int row = 0; row < block.rows(); ++row) {
        if (block.at(row, col).is_zero()) continue;
        entries.push_back({{deg + f.degree(), row}, tt[col], block.at(row, col)});
      }
    }
  }
  return MultiMap(pow.factors().front(), target, pow.arity(), f.degree(), std::move(entries));
}

EndoBasis::EndoBasis(DgModule c, int arity, int degree)
    : c_(std::move(c)), arity_(arity), degree_(degree) {
  if (arity_ < 1) throw ArityOutOfRange("operator arity must be >= 1");
  std::vector<BasisElt> basis = c_.module().basis();
  std::vector<BasisElt> cur;
  auto rec = [&](auto&& self, int slot, int deg) -> void {
    if (slot == arity_) {
      int out_deg = deg + degree_;
      for (int r = 0; r < c_.dim(out_deg); ++r) elems_.push_back({{out_deg, r}, cur});
      return;
    }
    for (const BasisElt& e : basis) {
      cur.push_back(e);
      self(self, slot + 1, deg + e.degree);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  // (in tuple, out index) ascending; the recursion already emits inputs in
  // lex order with outputs grouped, so the order is canonical as built.
}

int EndoBasis::index_of(const BasisElt& out, const std::vector<BasisElt>& in) const {
  std::pair<BasisElt, std::vector<BasisElt>> probe{out, in};
  auto cmp = [](const std::pair<BasisElt, std::vector<BasisElt>>& a,
                const std::pair<BasisElt, std::vector<BasisElt>>& b) {
    return std::tie(a.second, a.first) < std::tie(b.second, b.first);
  };
  auto pos = std::lower_bound(elems_.begin(), elems_.end(), probe, cmp);
  if (pos == elems_.end() || pos->first != out || pos->second != in) return -1;
  return static_cast<int>(pos - elems_.begin());
}

MultiMap EndoBasis::basis_map(int k) const {
  const auto& [out, in] = elems_.at(k);
  return MultiMap(c_, c_, arity_, degree_, {{out, in, Scalar::one(c_.ring())}});
}

Vec EndoBasis::vectorize(const MultiMap& f) const {
  if (!(f.source() == c_) || !(f.target() == c_) || f.arity() != arity_ || f.degree() != degree_) {
    throw ShapeMismatch("operator does not live in this basis");
  }
  Vec coords = zero_vec(c_.ring(), size());
  for (const MultiMapEntry& e : f.entries()) {
    int k = index_of(e.out, e.in);
    if (k < 0) throw ShapeMismatch("operator entry missing from basis");
    coords[k] = e.coef;
  }
  return coords;
}

MultiMap EndoBasis::devectorize(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != size()) throw ShapeMismatch("coordinate length mismatch");
  std::vector<MultiMapEntry> entries;
  for (int k = 0; k < size(); ++k) {
    if (coords[k].is_zero()) continue;
    entries.push_back({elems_[k].first, elems_[k].second, coords[k]});
  }
  return MultiMap(c_, c_, arity_, degree_, std::move(entries));
}

Matrix operator_matrix(const EndoBasis& dom, const EndoBasis& cod,
                       const std::function<MultiMap(const MultiMap&)>& op) {
  Matrix m(dom.complex().ring(), cod.size(), dom.size());
  for (int k = 0; k < dom.size(); ++k) {
    m.set_column(k, cod.vectorize(op(dom.basis_map(k))));
  }
  return m;
}

MultiMap operator_differential(const MultiMap& f) {
  if (!f.is_endo()) throw ShapeMismatch("differential of a non-endomorphism operator");
  MultiMap d = MultiMap::from_differential(f.source());
  MultiMap out = d.insert_at(1, f);
  Scalar sign = f.degree() % 2 == 0 ? Scalar::one(f.source().ring()) : -Scalar::one(f.source().ring());
  for (int k = 1; k <= f.arity(); ++k) {
    out = out - f.insert_at(k, d).scaled(sign);
  }
  return out;
}

}  // namespace ainfty
