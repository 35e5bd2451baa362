#include "ainfty/sampling.hpp"

#include <limits>

#include "ainfty/errors.hpp"

namespace ainfty {

int Sampler::uniform(int lo, int hi) {
  if (hi < lo) throw Error("internal: empty sampling range");
  std::uint64_t n = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v = rng_();
  while (v >= limit) v = rng_();
  return lo + static_cast<int>(v % n);
}

Scalar Sampler::scalar(const RingSpec& ring, int bound) {
  Scalar num = Scalar::from_int(ring, uniform(-bound, bound));
  if (ring.kind == RingKind::rationals && uniform(0, 3) == 0)
    return num * Scalar::from_int(ring, uniform(2, bound < 2 ? 2 : bound)).inverse();
  return num;
}

Scalar Sampler::nonzero_scalar(const RingSpec& ring, int bound) {
  for (;;) {
    Scalar s = scalar(ring, bound);
    if (!s.is_zero()) return s;
  }
}

MultiMap Sampler::multimap(const DgModule& c, int arity, int degree, int max_entries) {
  std::vector<BasisElt> basis = c.module().basis();
  std::vector<MultiMapEntry> entries;
  if (!basis.empty() && max_entries > 0) {
    int want = uniform(1, max_entries);
    for (int attempt = 0; attempt < 8 * want; ++attempt) {
      if (static_cast<int>(entries.size()) >= want) break;
      std::vector<BasisElt> in;
      int total = degree;
      for (int k = 0; k < arity; ++k) {
        BasisElt e = basis[uniform(0, static_cast<int>(basis.size()) - 1)];
        total += e.degree;
        in.push_back(e);
      }
      if (c.dim(total) == 0) continue;
      BasisElt out{total, uniform(0, c.dim(total) - 1)};
      entries.push_back({out, std::move(in), nonzero_scalar(c.ring())});
    }
  }
  return MultiMap(c, c, arity, degree, std::move(entries));
}

}  // namespace ainfty
