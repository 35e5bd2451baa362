#include "ainfty/commands.hpp"

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ainfty/errors.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/obstruction.hpp"
#include "ainfty/prelie.hpp"
#include "ainfty/sampling.hpp"

namespace ainfty {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json frame(const char* command) {
  Json j = Json::object();
  j["format"] = "ainfty-report";
  j["version"] = 1;
  j["command"] = command;
  return j;
}

Json frame(const char* command, const Instance& inst) {
  Json j = frame(command);
  j["ring"] = inst.ring.name();
  j["input_digest"] = instance_digest(inst);
  return j;
}

CommandResult error_result(const char* command, int code, const std::string& what) {
  Json j = frame(command);
  j["error"] = what;
  j["ok"] = false;
  return {code, dump(j), {}};
}

Json multimap_json(const MultiMap& m) {
  Json ents = Json::array();
  for (const MultiMapEntry& e : m.entries()) {
    Json ins = Json::array();
    for (const BasisElt& b : e.in) ins.push_back(Json::array({b.degree, b.index}));
    ents.push_back(
        Json::array({Json::array({e.out.degree, e.out.index}), ins, e.coef.to_string()}));
  }
  return Json{{"arity", m.arity()}, {"degree", m.degree()}, {"entries", std::move(ents)}};
}

Json instance_json(const Instance& inst) { return Json::parse(serialize_instance(inst)); }

template <typename Fn>
CommandResult run_on_instance(const char* command, const std::string& text, Fn&& body) {
  std::optional<Instance> inst;
  try {
    inst = parse_instance(text);
  } catch (const NotADifferential& e) {
    // Well-formed file, defective mathematics: same verdict validate gives.
    return error_result(command, 1, e.what());
  } catch (const Error& e) {
    return error_result(command, 2, e.what());
  }
  try {
    return body(*inst);
  } catch (const NotSplit& e) {
    return error_result(command, 1, e.what());
  } catch (const NotAssociative& e) {
    return error_result(command, 1, e.what());
  } catch (const InvalidArStructure& e) {
    // Declaration problems are caught at parse; past it this means the maps
    // fail their relations, a mathematical failure of the instance.
    return error_result(command, 1, e.what());
  } catch (const Error& e) {
    return error_result(command, 2, e.what());
  }
}

const ArStructure& require_structure(const Instance& inst) {
  if (!inst.structure) throw ValidationError("instance carries no structure");
  return *inst.structure;
}

ArStructure truncate(const ArStructure& s, int r) {
  std::vector<MultiMap> maps;
  maps.reserve(r);
  for (int i = 1; i <= r; ++i) maps.push_back(s.map(i));
  return ArStructure(s.complex(), r, std::move(maps), s.convention());
}

}  // namespace

CommandResult cmd_validate(const std::string& instance_text) {
  RawInstance raw;
  try {
    raw = parse_raw(instance_text);
  } catch (const Error& e) {
    return error_result("validate", 2, e.what());
  }
  Json j = frame("validate");
  j["ring"] = raw.ring.name();
  Json checks = Json::object();
  bool ok = true;
  std::optional<DgModule> complex;
  try {
    complex = build_complex(raw);
    checks["complex_valid"] = true;
  } catch (const Error& e) {
    checks["complex_valid"] = false;
    checks["complex_error"] = e.what();
    ok = false;
  }
  checks["structure_present"] = raw.structure.has_value();
  std::optional<ArStructure> s;
  if (complex && raw.structure) {
    try {
      s = build_structure(raw, *complex);
      checks["structure_valid"] = true;
    } catch (const Error& e) {
      checks["structure_valid"] = false;
      checks["structure_error"] = e.what();
      ok = false;
    }
    if (s) {
      checks["convention"] = convention_name(s->convention());
      checks["level"] = s->level();
      ArCheckReport rep = check_ar(*s);
      checks["relations_ok"] = rep.ok();
      if (!rep.ok()) {
        checks["first_failing_relation"] = rep.first_failure;
        ok = false;
      }
    }
  }
  if (complex) {
    Instance inst{raw.ring, *complex, std::move(s)};
    j["input_digest"] = instance_digest(inst);
  }
  j["checks"] = std::move(checks);
  j["ok"] = ok;
  return {ok ? 0 : 1, dump(j), {}};
}

CommandResult cmd_homology(const std::string& instance_text) {
  return run_on_instance("homology", instance_text, [&](const Instance& inst) -> CommandResult {
    SplittingCheck chk = check_split(inst.complex);
    Json j = frame("homology", inst);
    j["split"] = chk.splits;
    Json degs = Json::array();
    for (const auto& [n, d] : chk.data.by_degree) {
      Json e = {{"degree", n},
                {"cycles", d.cycles},
                {"boundaries", d.boundaries},
                {"rank", d.rank}};
      if (!d.torsion.empty()) {
        Json t = Json::array();
        for (const BigInt& v : d.torsion) t.push_back(v.str());
        e["torsion"] = std::move(t);
      }
      degs.push_back(std::move(e));
    }
    j["homology"] = std::move(degs);
    j["ok"] = true;
    return {0, dump(j), {}};
  });
}

CommandResult cmd_check_prelie(const std::string& instance_text, int trials,
                               std::uint64_t seed) {
  return run_on_instance("check-prelie", instance_text, [&](const Instance& inst) -> CommandResult {
    if (trials < 1) throw ValidationError("trials must be positive");
    const DgModule& c = inst.complex;
    Sampler sampler(seed);
    auto op = [&]() {
      return sampler.multimap(c, sampler.uniform(1, 3), sampler.uniform(-2, 2), 4);
    };
    std::vector<std::array<MultiMap, 3>> triples;
    triples.reserve(trials);
    for (int t = 0; t < trials; ++t) triples.push_back({op(), op(), op()});

    Json suites = Json::array();
    auto add = [&](const char* name, std::size_t checked, std::size_t violations) {
      suites.push_back({{"name", name}, {"checked", checked}, {"violations", violations}});
      return violations == 0;
    };
    bool ok = true;
    SystemCheckReport g = check_graded_system(triples);
    ok &= add("graded_system", g.checked, g.violations.size());
    SystemCheckReport w = check_weight_system(triples);
    ok &= add("weight_system", w.checked, w.violations.size());

    std::size_t jac_bad = 0, anti_bad = 0;
    for (const auto& tr : triples) {
      if (!jacobi_holds(tr[0], tr[1], tr[2])) ++jac_bad;
      if (!antisymmetry_holds(tr[0], tr[1])) ++anti_bad;
    }
    ok &= add("jacobi", triples.size(), jac_bad);
    ok &= add("antisymmetry", triples.size(), anti_bad);

    std::size_t deg_bad = 0, wt_bad = 0;
    for (int t = 0; t < trials; ++t) {
      MultiMap f = op();
      int an = sampler.uniform(1, 3);
      int dd = sampler.uniform(-2, 1);
      if (dd % 2 == 0) ++dd;  // odd degree
      if (!odd_degree_square(f, sampler.multimap(c, an, dd, 4)).ok()) ++deg_bad;
      int am = sampler.uniform(1, 3);
      int dw = sampler.uniform(-2, 1);
      if (((dw + am) % 2 + 2) % 2 != 0) ++dw;  // odd weight
      if (!odd_weight_square(f, sampler.multimap(c, am, dw, 4)).ok()) ++wt_bad;
    }
    ok &= add("odd_degree_square", static_cast<std::size_t>(trials), deg_bad);
    ok &= add("odd_weight_square", static_cast<std::size_t>(trials), wt_bad);

    Json j = frame("check-prelie", inst);
    j["trials"] = trials;
    j["seed"] = seed;
    j["suites"] = std::move(suites);
    j["ok"] = ok;
    return {ok ? 0 : 1, dump(j), {}};
  });
}

CommandResult cmd_check_ar(const std::string& instance_text, std::optional<int> up_to) {
  return run_on_instance("check-ar", instance_text, [&](const Instance& inst) -> CommandResult {
    const ArStructure& s = require_structure(inst);
    int bound = up_to.value_or(s.level());
    ArCheckReport rep = check_ar(s, bound);
    Json j = frame("check-ar", inst);
    j["convention"] = convention_name(s.convention());
    j["level"] = s.level();
    j["checked_up_to"] = rep.checked_up_to;
    if (!rep.ok()) {
      j["first_failing_relation"] = rep.first_failure;
      j["defect"] = multimap_json(*rep.defect);
    }
    j["ok"] = rep.ok();
    return {rep.ok() ? 0 : 1, dump(j), {}};
  });
}

CommandResult cmd_hochschild(const std::string& instance_text, int n, int i) {
  return run_on_instance("hochschild", instance_text, [&](const Instance& inst) -> CommandResult {
    const ArStructure& s = require_structure(inst);
    HomologyAlgebra ha = homology_algebra(s);
    GradedAlgebra alg(ha.h, ha.mu);
    HochschildGroup grp = hh(alg, n, i);
    Json j = frame("hochschild", inst);
    j["n"] = n;
    j["i"] = i;
    Json hmod = Json::array();
    for (const auto& [d, r] : ha.h.module().dims()) hmod.push_back(Json::array({d, r}));
    j["homology_module"] = std::move(hmod);
    j["mu"] = multimap_json(ha.mu);
    j["cocycle_rank"] = grp.cocycle_rank;
    j["coboundary_rank"] = grp.coboundary_rank;
    j["rank"] = grp.rank;
    if (!grp.torsion.empty()) {
      Json t = Json::array();
      for (const BigInt& v : grp.torsion) t.push_back(v.str());
      j["torsion"] = std::move(t);
    }
    Json reps = Json::array();
    for (const MultiMap& m : grp.representatives) reps.push_back(multimap_json(m));
    j["representatives"] = std::move(reps);
    j["ok"] = true;
    return {0, dump(j), {}};
  });
}

CommandResult cmd_obstruct(const std::string& instance_text, std::optional<int> level) {
  return run_on_instance("obstruct", instance_text, [&](const Instance& inst) -> CommandResult {
    const ArStructure& s0 = require_structure(inst);
    int r = level.value_or(s0.level());
    if (r > s0.level()) throw ValidationError("requested level exceeds the structure");
    ObstructionReport rep = lift_once(r == s0.level() ? s0 : truncate(s0, r));
    Json j = frame("obstruct", inst);
    j["level"] = r;
    j["class_zero"] = rep.class_zero;
    j["cocycle"] = multimap_json(rep.cocycle);
    j["induced"] = multimap_json(rep.induced);
    std::optional<std::string> out;
    if (rep.class_zero) {
      j["primitive"] = multimap_json(*rep.primitive);
      j["correction"] = multimap_json(*rep.correction);
      j["next"] = multimap_json(*rep.next);
      Instance ext{inst.ring, inst.complex, std::move(rep.extended)};
      out = serialize_instance(ext);
      j["instance"] = instance_json(ext);
    }
    j["ok"] = rep.class_zero;
    return {rep.class_zero ? 0 : 1, dump(j), std::move(out)};
  });
}

CommandResult cmd_extend(const std::string& instance_text, int to) {
  return run_on_instance("extend", instance_text, [&](const Instance& inst) -> CommandResult {
    const ArStructure& s = require_structure(inst);
    auto res = extend_to_ainfty(s, to);
    Json j = frame("extend", inst);
    j["from"] = s.level();
    j["to"] = to;
    if (std::holds_alternative<ArStructure>(res)) {
      j["extended"] = true;
      Instance out_inst{inst.ring, inst.complex, std::get<ArStructure>(std::move(res))};
      std::string out = serialize_instance(out_inst);
      j["instance"] = instance_json(out_inst);
      j["ok"] = true;
      return {0, dump(j), std::move(out)};
    }
    const ObstructionReport& rep = std::get<ObstructionReport>(res);
    j["extended"] = false;
    j["blocked_at"] = rep.level;
    j["cocycle"] = multimap_json(rep.cocycle);
    j["induced"] = multimap_json(rep.induced);
    j["ok"] = false;
    return {1, dump(j), {}};
  });
}

CommandResult cmd_convert(const std::string& instance_text, const std::string& to) {
  return run_on_instance("convert", instance_text, [&](const Instance& inst) -> CommandResult {
    const ArStructure& s = require_structure(inst);
    auto target = convention_from_name(to);
    if (!target) throw ValidationError("unknown convention '" + to + "'");
    ArStructure conv = convert_convention(s, *target);
    Json j = frame("convert", inst);
    j["from"] = convention_name(s.convention());
    j["to"] = convention_name(*target);
    Instance out_inst{inst.ring, inst.complex, std::move(conv)};
    std::string out = serialize_instance(out_inst);
    j["instance"] = instance_json(out_inst);
    j["ok"] = true;
    return {0, dump(j), std::move(out)};
  });
}

}  // namespace ainfty
