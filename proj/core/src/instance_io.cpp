#include "ainfty/instance_io.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

void allow_only(const Json& obj, std::initializer_list<const char*> keys, const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail("unknown field '" + it.key() + "' in " + where);
  }
}

std::int64_t int64_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int int_field(const Json& j, const char* what) {
  std::int64_t v = int64_field(j, what);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(std::string(what) + " is out of range");
  return static_cast<int>(v);
}

std::string string_field(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

RingSpec parse_ring(const Json& j) {
  if (!j.is_object()) fail("ring must be an object");
  allow_only(j, {"kind", "p"}, "ring");
  std::string kind = string_field(field(j, "kind"), "ring.kind");
  if (kind == "prime_field") {
    std::int64_t p = int64_field(field(j, "p"), "ring.p");
    try {
      return RingSpec::prime_field(p);
    } catch (const ValidationError& e) {
      fail(e.what());
    }
  }
  allow_only(j, {"kind"}, "ring");
  if (kind == "rationals") return RingSpec::rationals();
  if (kind == "integers") return RingSpec::integers();
  fail("ring.kind must be rationals, integers or prime_field");
}

std::map<int, int> parse_dims(const Json& j) {
  if (!j.is_array()) fail("module must be an array of [degree, rank] pairs");
  std::map<int, int> dims;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) fail("module entries must be [degree, rank]");
    int deg = int_field(e[0], "module degree");
    int rank = int_field(e[1], "module rank");
    if (rank < 0) fail("module rank must be nonnegative");
    if (!dims.emplace(deg, rank).second) fail("duplicate module degree");
  }
  return dims;
}

int dim_at(const std::map<int, int>& dims, int n) {
  auto it = dims.find(n);
  return it == dims.end() ? 0 : it->second;
}

std::map<int, std::vector<std::tuple<int, int, Scalar>>> parse_diff(
    const Json& j, const std::map<int, int>& dims, const RingSpec& ring) {
  if (!j.is_array()) fail("differential must be an array of blocks");
  std::map<int, std::vector<std::tuple<int, int, Scalar>>> out;
  for (const Json& blk : j) {
    if (!blk.is_object()) fail("differential blocks must be objects");
    allow_only(blk, {"degree", "entries"}, "differential block");
    int n = int_field(field(blk, "degree"), "differential degree");
    if (out.count(n)) fail("duplicate differential degree");
    const Json& ents = field(blk, "entries");
    if (!ents.is_array()) fail("differential entries must be an array");
    int rows = dim_at(dims, n - 1), cols = dim_at(dims, n);
    std::set<std::pair<int, int>> seen;
    std::vector<std::tuple<int, int, Scalar>> trips;
    for (const Json& t : ents) {
      if (!t.is_array() || t.size() != 3) fail("differential entries must be [row, col, value]");
      int r = int_field(t[0], "differential row");
      int c = int_field(t[1], "differential col");
      if (r < 0 || r >= rows || c < 0 || c >= cols) fail("differential entry out of range");
      if (!seen.insert({r, c}).second) fail("duplicate differential entry");
      Scalar v = Scalar::from_string(ring, string_field(t[2], "differential value"));
      if (!v.is_zero()) trips.emplace_back(r, c, std::move(v));
    }
    out.emplace(n, std::move(trips));
  }
  return out;
}

BasisElt parse_elt(const Json& j, const std::map<int, int>& dims, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string(what) + " must be [degree, index]");
  int deg = int_field(j[0], what);
  int idx = int_field(j[1], what);
  if (idx < 0 || idx >= dim_at(dims, deg)) fail(std::string(what) + " is out of range");
  return BasisElt{deg, idx};
}

RawStructure parse_structure(const Json& j, const std::map<int, int>& dims,
                             const RingSpec& ring) {
  if (!j.is_object()) fail("structure must be an object");
  allow_only(j, {"convention", "level", "maps"}, "structure");
  auto conv = convention_from_name(string_field(field(j, "convention"), "structure.convention"));
  if (!conv) fail("unknown convention");
  int level = int_field(field(j, "level"), "structure.level");
  if (level < 1) fail("structure.level must be at least 1");

  std::map<int, int> cdims;
  for (const auto& [d, r] : dims) cdims[*conv == Convention::suspended ? d + 1 : d] = r;

  RawStructure out{*conv, level, {}};
  const Json& maps = field(j, "maps");
  if (!maps.is_array()) fail("structure.maps must be an array");
  std::set<int> arities;
  for (const Json& m : maps) {
    if (!m.is_object()) fail("structure maps must be objects");
    allow_only(m, {"arity", "degree", "entries"}, "structure map");
    int arity = int_field(field(m, "arity"), "map arity");
    if (arity < 2 || arity > level) fail("map arity must lie in [2, level]");
    if (!arities.insert(arity).second) fail("duplicate map arity");
    int degree = int_field(field(m, "degree"), "map degree");
    const Json& ents = field(m, "entries");
    if (!ents.is_array()) fail("map entries must be an array");
    std::vector<MultiMapEntry> list;
    for (const Json& t : ents) {
      if (!t.is_array() || t.size() != 3) fail("map entries must be [output, inputs, value]");
      BasisElt out_e = parse_elt(t[0], cdims, "map output");
      if (!t[1].is_array() || static_cast<int>(t[1].size()) != arity)
        fail("map entry inputs must list one element per slot");
      std::vector<BasisElt> in;
      for (const Json& p : t[1]) in.push_back(parse_elt(p, cdims, "map input"));
      Scalar v = Scalar::from_string(ring, string_field(t[2], "map value"));
      if (!v.is_zero()) list.push_back({out_e, std::move(in), std::move(v)});
    }
    out.maps.emplace_back(arity, degree, std::move(list));
  }
  return out;
}

Json ring_json(const RingSpec& ring) {
  Json j = Json::object();
  switch (ring.kind) {
    case RingKind::rationals: j["kind"] = "rationals"; break;
    case RingKind::integers: j["kind"] = "integers"; break;
    case RingKind::prime_field:
      j["kind"] = "prime_field";
      j["p"] = ring.p;
      break;
  }
  return j;
}

Json entries_json(const MultiMap& m) {
  Json arr = Json::array();
  for (const MultiMapEntry& e : m.entries()) {
    Json ins = Json::array();
    for (const BasisElt& b : e.in) ins.push_back(Json::array({b.degree, b.index}));
    arr.push_back(Json::array(
        {Json::array({e.out.degree, e.out.index}), ins, e.coef.to_string()}));
  }
  return arr;
}

}  // namespace

RawInstance parse_raw(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  allow_only(j, {"format", "version", "ring", "module", "differential", "structure"},
             "instance");
  if (string_field(field(j, "format"), "format") != "ainfty-instance")
    fail("format must be ainfty-instance");
  if (int_field(field(j, "version"), "version") != 1) fail("unsupported version");
  RawInstance out{parse_ring(field(j, "ring")), {}, {}, {}};
  out.dims = parse_dims(field(j, "module"));
  out.diff = parse_diff(field(j, "differential"), out.dims, out.ring);
  if (j.contains("structure"))
    out.structure = parse_structure(field(j, "structure"), out.dims, out.ring);
  return out;
}

DgModule build_complex(const RawInstance& raw) {
  GradedModule mod(raw.ring, raw.dims);
  std::map<int, Matrix> blocks;
  for (const auto& [n, trips] : raw.diff) {
    Matrix m(raw.ring, mod.dim(n - 1), mod.dim(n));
    for (const auto& [r, c, v] : trips) m.at(r, c) = v;
    blocks.emplace(n, std::move(m));
  }
  return DgModule(std::move(mod), std::move(blocks));
}

std::optional<ArStructure> build_structure(const RawInstance& raw, const DgModule& complex) {
  if (!raw.structure) return std::nullopt;
  const RawStructure& rs = *raw.structure;
  DgModule carrier = rs.convention == Convention::suspended ? suspend(complex) : complex;
  std::vector<MultiMap> maps;
  maps.push_back(convention_differential(rs.convention, carrier));
  for (int i = 2; i <= rs.level; ++i) {
    const std::vector<MultiMapEntry>* found = nullptr;
    int declared = 0;
    for (const auto& [arity, degree, entries] : rs.maps) {
      if (arity == i) {
        found = &entries;
        declared = degree;
        break;
      }
    }
    if (found)
      maps.emplace_back(carrier, carrier, i, declared, *found);
    else
      maps.push_back(MultiMap::zero(carrier, carrier, i,
                                    convention_degree(rs.convention, i)));
  }
  return ArStructure(complex, rs.level, std::move(maps), rs.convention);
}

Instance build_instance(const RawInstance& raw) {
  DgModule complex = build_complex(raw);
  std::optional<ArStructure> s = build_structure(raw, complex);
  return Instance{raw.ring, std::move(complex), std::move(s)};
}

Instance parse_instance(const std::string& text) { return build_instance(parse_raw(text)); }

std::string serialize_instance(const Instance& inst) {
  Json j = Json::object();
  j["format"] = "ainfty-instance";
  j["version"] = 1;
  j["ring"] = ring_json(inst.ring);
  Json mod = Json::array();
  for (const auto& [n, d] : inst.complex.module().dims()) mod.push_back(Json::array({n, d}));
  j["module"] = std::move(mod);
  Json diff = Json::array();
  for (const auto& [n, m] : inst.complex.diff_blocks()) {
    Json ents = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        if (!m.at(r, c).is_zero()) ents.push_back(Json::array({r, c, m.at(r, c).to_string()}));
      }
    }
    diff.push_back({{"degree", n}, {"entries", std::move(ents)}});
  }
  j["differential"] = std::move(diff);
  if (inst.structure) {
    const ArStructure& s = *inst.structure;
    Json maps = Json::array();
    for (int i = 2; i <= s.level(); ++i) {
      maps.push_back({{"arity", i},
                      {"degree", s.map(i).degree()},
                      {"entries", entries_json(s.map(i))}});
    }
    j["structure"] = {{"convention", convention_name(s.convention())},
                      {"level", s.level()},
                      {"maps", std::move(maps)}};
  }
  return j.dump(2) + "\n";
}

std::string instance_digest(const Instance& inst) {
  std::string bytes = serialize_instance(inst);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace ainfty
