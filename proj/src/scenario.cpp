#include "gwa/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gwa/checks.hpp"
#include "gwa/expr.hpp"

namespace gwa {

using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::uint64_t kDefaultSeed = 1;

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw ScenarioValidationError(field, what);
}

std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

void allow_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) invalid(where.empty() ? "scenario" : where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) invalid(join(where, it.key()), "unknown key");
}

int get_int(const json& obj, const std::string& where, const std::string& key, int def, int lo, int hi) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) invalid(join(where, key), "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi)
    invalid(join(where, key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

std::string get_string(const json& obj, const std::string& where, const std::string& key, const std::string& def) {
  if (!obj.contains(key)) return def;
  const json& v = obj.at(key);
  if (!v.is_string()) invalid(join(where, key), "expected a string");
  return v.get<std::string>();
}

/// Expressions may be written as strings or plain integers.
std::string expr_text(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(field, "expected an expression string");
}

template <class F>
auto parsed(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    invalid(field, e.what());
  } catch (const std::invalid_argument& e) {
    invalid(field, e.what());
  } catch (const std::domain_error& e) {
    invalid(field, e.what());
  }
}

// ---------------------------------------------------------------- model

struct GroupSpec {
  std::string type;
  int m = 1;
  int p = 1;
  std::size_t n = 0;
};

struct Algebra {
  std::string label;
  GWAPtr gwa;
  SkewContextPtr skew;
  RingPtr ring;
  std::size_t rank = 0;
};

struct CheckSpec {
  std::string name;
  json params = json::object();
};

struct TableauxSpec {
  std::optional<Point> seed;
  int radius = 3;
  int samples = 2;
  int pairs = 20;
  std::vector<CheckSpec> checks;
};

struct Scenario {
  std::string name;
  std::uint64_t seed = kDefaultSeed;
  Algebra algebra;
  std::optional<GroupSpec> group;
  std::vector<CheckSpec> checks;
  std::optional<TableauxSpec> tableaux;
};

struct CheckKind {
  std::vector<std::string_view> params;
  bool needs_gwa = false;
  bool needs_group = false;
  bool needs_rank_one = false;
  bool needs_rank_two = false;
};

const std::map<std::string, CheckKind, std::less<>>& check_kinds() {
  static const std::map<std::string, CheckKind, std::less<>> kinds{
      {"relations", {{"samples", "degree"}, true}},
      {"confluence", {{"words", "length"}, true}},
      {"embedding", {{"pairs"}, true}},
      {"cyclic_invariant", {{"m"}, true, false, true}},
      {"associativity", {{"triples"}}},
      {"evaluate_law", {{"triples"}}},
      {"membership", {{"lattices", "bound", "dim"}}},
      {"invariance", {{}, false, true}},
      {"embedding_images", {{}, true, true}},
      {"generates_monoid", {{"mode", "bound"}, true, true}},
      {"decomposition", {{"count"}, true, true}},
      {"principal", {{"extra"}, false, true}},
      {"rational_witness", {{}, false, false, false, true}},
  };
  return kinds;
}

const std::map<std::string, std::vector<std::string_view>, std::less<>>& tableaux_kinds() {
  static const std::map<std::string, std::vector<std::string_view>, std::less<>> kinds{
      {"relations", {"samples"}}, {"lift", {}}, {"submodules", {}}, {"dagger", {"pairs"}}};
  return kinds;
}

// ---------------------------------------------------------------- parsing

Automorphism build_auto(const json& s, const RingPtr& ring, std::size_t i, const std::string& where) {
  const FieldPtr& field = ring->field();
  const std::size_t nv = ring->nvars();
  if (s.is_object() && (s.contains("forward") || s.contains("inverse"))) {
    allow_keys(s, where, {"forward", "inverse", "name"});
    const auto images = [&](const char* key) {
      std::vector<Poly> out;
      for (std::size_t k = 0; k < nv; ++k) out.push_back(Poly::variable(ring, k));
      if (!s.contains(key)) invalid(join(where, key), "missing substitution map");
      const json& m = s.at(key);
      if (!m.is_object()) invalid(join(where, key), "expected an object mapping variables to expressions");
      for (auto it = m.begin(); it != m.end(); ++it) {
        const auto& vars = ring->variables();
        const auto pos = std::find(vars.begin(), vars.end(), it.key());
        if (pos == vars.end()) invalid(join(join(where, key), it.key()), "not a ring variable");
        const std::string field_name = join(join(where, key), it.key());
        const std::string text = expr_text(it.value(), field_name);
        out[static_cast<std::size_t>(pos - vars.begin())] = parsed(field_name, [&] { return parse_poly(text, ring); });
      }
      return out;
    };
    auto fwd = images("forward");
    auto inv = images("inverse");
    const std::string name = get_string(s, where, "name", "custom");
    return parsed(where, [&] { return Automorphism(ring, std::move(fwd), std::move(inv), name); });
  }

  std::string name;
  json opts = json::object();
  if (s.is_string()) {
    name = s.get<std::string>();
  } else if (s.is_object() && s.contains("name")) {
    allow_keys(s, where, {"name", "var", "step", "q", "first"});
    name = get_string(s, where, "name", "");
    opts = s;
  } else {
    invalid(where, "expected a named automorphism or a {forward, inverse} map");
  }
  const auto var = static_cast<std::size_t>(get_int(opts, where, "var", static_cast<int>(i) + 1, 1, static_cast<int>(nv)) - 1);
  const auto scalar_opt = [&](const char* key, const std::string& def) {
    const std::string text = opts.contains(key) ? expr_text(opts.at(key), join(where, key)) : def;
    return parsed(join(where, key), [&] { return parse_scalar(text, field); });
  };
  if (name == "identity") return Automorphism::identity(ring);
  if (name == "shift") return shift_auto(ring, var, scalar_opt("step", "1"));
  if (name == "q_scale" || name == "q_weyl") {
    if (!opts.contains("q") && field->parameter_index("q") < 0)
      invalid(join(where, "q"), "the field has no parameter q; declare it or pass q");
    const Scalar q = scalar_opt("q", "q");
    return name == "q_scale" ? q_scale_auto(ring, var, q) : q_weyl_auto(ring, var, q);
  }
  if (name == "nagata") {
    const int first = get_int(opts, where, "first", static_cast<int>(var) + 1, 1, static_cast<int>(nv));
    if (static_cast<std::size_t>(first) + 2 > nv) invalid(join(where, "first"), "nagata needs three variables");
    return nagata_auto(ring, static_cast<std::size_t>(first - 1));
  }
  invalid(s.is_string() ? where : join(where, "name"), "unknown automorphism '" + name + "'");
}

Algebra build_algebra(const json& a, std::optional<int> group_m) {
  const std::string where = "algebra";
  Algebra out;
  if (!a.is_object()) invalid(where, "expected an object");
  if (a.contains("catalog")) {
    allow_keys(a, where, {"catalog", "n", "params"});
    const std::string name = get_string(a, where, "catalog", "");
    const int n = get_int(a, where, "n", 1, 1, 16);
    CatalogParams params;
    params.cyclotomic_order = group_m.value_or(1);
    if (a.contains("params")) {
      const json& p = a.at("params");
      allow_keys(p, "algebra.params", {"cyclotomic_order", "q"});
      params.cyclotomic_order = get_int(p, "algebra.params", "cyclotomic_order", params.cyclotomic_order, 1, 1000);
      params.q = get_string(p, "algebra.params", "q", params.q);
    }
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      invalid("algebra.catalog", "unknown catalog algebra '" + name + "'");
    const auto entry = parsed(where, [&] { return catalog(name, static_cast<std::size_t>(n), params); });
    out.label = name + "/" + std::to_string(n);
    out.gwa = entry.gwa;
    out.skew = entry.skew;
    out.ring = entry.skew->ring();
    out.rank = entry.skew->rank();
    return out;
  }

  allow_keys(a, where, {"D", "n", "variables", "field", "a", "sigma", "assume_independent", "name"});
  const std::string kind = get_string(a, where, "D", "polynomial");
  if (kind != "polynomial" && kind != "laurent") invalid("algebra.D", "expected polynomial or laurent");
  int order = group_m.value_or(1);
  std::vector<std::string> params;
  if (a.contains("field")) {
    const json& f = a.at("field");
    allow_keys(f, "algebra.field", {"cyclotomic_order", "parameters"});
    order = get_int(f, "algebra.field", "cyclotomic_order", order, 1, 1000);
    if (f.contains("parameters")) {
      if (!f.at("parameters").is_array()) invalid("algebra.field.parameters", "expected a list of names");
      for (std::size_t k = 0; k < f.at("parameters").size(); ++k) {
        const json& v = f.at("parameters")[k];
        if (!v.is_string()) invalid(at("algebra.field.parameters", k), "expected a name");
        params.push_back(v.get<std::string>());
      }
    }
  }
  const FieldPtr field = parsed("algebra.field", [&] { return field_make(order, params); });
  RingPtr ring;
  if (a.contains("variables")) {
    std::vector<std::string> vars;
    const json& v = a.at("variables");
    if (!v.is_array() || v.empty()) invalid("algebra.variables", "expected a nonempty list of names");
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_string()) invalid(at("algebra.variables", k), "expected a name");
      vars.push_back(v[k].get<std::string>());
    }
    if (a.contains("n") && get_int(a, where, "n", 0, 1, 64) != static_cast<int>(vars.size()))
      invalid("algebra.n", "does not match the number of variables");
    ring = parsed("algebra.variables", [&] { return make_ring(field, vars, kind == "laurent"); });
  } else {
    const int n = get_int(a, where, "n", 0, 1, 64);
    if (n == 0) invalid("algebra.n", "missing");
    ring = make_ring(field, static_cast<std::size_t>(n), kind == "laurent");
  }
  if (!a.contains("sigma") || !a.at("sigma").is_array() || a.at("sigma").empty())
    invalid("algebra.sigma", "expected a nonempty list of automorphisms");
  std::vector<Automorphism> sigma;
  for (std::size_t i = 0; i < a.at("sigma").size(); ++i)
    sigma.push_back(build_auto(a.at("sigma")[i], ring, i, at("algebra.sigma", i)));
  const std::string name = get_string(a, where, "name", "custom");
  out.label = name;
  out.ring = ring;
  out.rank = sigma.size();
  if (!a.contains("a")) {
    out.skew = parsed("algebra.sigma", [&] { return make_skew_context(ring, sigma); });
    return out;
  }
  const json& aj = a.at("a");
  if (!aj.is_array() || aj.size() != sigma.size()) invalid("algebra.a", "expected one expression per automorphism");
  std::vector<Poly> as;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const std::string f = at("algebra.a", i);
    const std::string text = expr_text(aj[i], f);
    as.push_back(parsed(f, [&] { return parse_poly(text, ring); }));
  }
  bool assume = false;
  if (a.contains("assume_independent")) {
    if (!a.at("assume_independent").is_boolean()) invalid("algebra.assume_independent", "expected true or false");
    assume = a.at("assume_independent").get<bool>();
  }
  const auto v = gwa_validate(ring, as, sigma);
  if (v.kind != GWAValidation::Kind::ok) invalid("algebra", v.witness);
  out.gwa = parsed(where, [&] { return make_gwa(ring, as, sigma, name, assume); });
  out.skew = out.gwa->skew_context();
  return out;
}

GroupSpec build_group(const json& g) {
  allow_keys(g, "group", {"type", "m", "p", "n"});
  GroupSpec out;
  out.type = get_string(g, "group", "type", "");
  if (out.type == "gmpn") {
    out.m = get_int(g, "group", "m", 0, 1, 64);
    out.p = get_int(g, "group", "p", 0, 1, 64);
    out.n = static_cast<std::size_t>(get_int(g, "group", "n", 0, 1, 8));
    if (out.m == 0) invalid("group.m", "missing");
    if (out.p == 0) invalid("group.p", "missing");
    if (out.n == 0) invalid("group.n", "missing");
    if (out.m % out.p != 0)
      invalid("group.p", "p = " + std::to_string(out.p) + " does not divide m = " + std::to_string(out.m));
  } else if (out.type == "sn") {
    if (g.contains("m")) invalid("group.m", "not used by sn");
    if (g.contains("p")) invalid("group.p", "not used by sn");
    out.n = static_cast<std::size_t>(get_int(g, "group", "n", 0, 1, 8));
    if (out.n == 0) invalid("group.n", "missing");
  } else if (out.type == "cyclic_diag") {
    if (g.contains("p")) invalid("group.p", "not used by cyclic_diag");
    out.m = get_int(g, "group", "m", 0, 1, 64);
    if (out.m == 0) invalid("group.m", "missing");
    out.n = static_cast<std::size_t>(get_int(g, "group", "n", 1, 1, 1));
  } else {
    invalid("group.type", "expected gmpn, sn or cyclic_diag");
  }
  return out;
}

CheckSpec build_check(const json& c, const std::string& where,
                      const std::function<const std::vector<std::string_view>*(const std::string&)>& lookup) {
  CheckSpec out;
  if (c.is_string()) {
    out.name = c.get<std::string>();
  } else if (c.is_object() && c.contains("name")) {
    out.name = get_string(c, where, "name", "");
    for (auto it = c.begin(); it != c.end(); ++it)
      if (it.key() != "name") out.params[it.key()] = it.value();
  } else {
    invalid(where, "expected a check name or an object with a name");
  }
  const auto* params = lookup(out.name);
  if (!params) invalid(c.is_string() ? where : join(where, "name"), "unknown check '" + out.name + "'");
  for (auto it = out.params.begin(); it != out.params.end(); ++it)
    if (std::find(params->begin(), params->end(), it.key()) == params->end()) invalid(join(where, it.key()), "unknown key");
  return out;
}

Scenario build_scenario(const json& doc) {
  allow_keys(doc, "", {"name", "seed", "algebra", "group", "checks", "tableaux"});
  Scenario s;
  s.name = get_string(doc, "", "name", "scenario");
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) invalid("seed", "expected a nonnegative integer");
    s.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("group")) s.group = build_group(doc.at("group"));
  if (!doc.contains("algebra")) invalid("algebra", "missing");
  std::optional<int> group_m;
  if (s.group && s.group->type != "sn") group_m = s.group->m;
  s.algebra = build_algebra(doc.at("algebra"), group_m);
  const Algebra& a = s.algebra;

  if (s.group) {
    if (s.group->n != a.rank)
      invalid("group.n", "group acts on " + std::to_string(s.group->n) + " coordinates but the algebra has rank " +
                             std::to_string(a.rank));
    if (a.ring->nvars() != a.rank) invalid("group", "group actions need one variable per generator");
    const int order = a.ring->field()->cyclotomic_order();
    if (s.group->m > 2 && order % s.group->m != 0)
      invalid("group.m", "the field has no primitive " + std::to_string(s.group->m) +
                             "-th root of unity (cyclotomic order " + std::to_string(order) + ")");
  }

  if (doc.contains("checks")) {
    const json& cs = doc.at("checks");
    if (!cs.is_array()) invalid("checks", "expected a list");
    const auto& kinds = check_kinds();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = at("checks", i);
      CheckSpec c = build_check(cs[i], where, [&](const std::string& name) -> const std::vector<std::string_view>* {
        auto it = kinds.find(name);
        return it == kinds.end() ? nullptr : &it->second.params;
      });
      const CheckKind& k = kinds.find(c.name)->second;
      if (k.needs_gwa && !a.gwa) invalid(where, c.name + " needs a GWA presentation (the algebra declares no a)");
      if (k.needs_group && !s.group) invalid(where, c.name + " needs a group");
      if (k.needs_rank_one && a.rank != 1) invalid(where, c.name + " needs rank 1");
      if (k.needs_rank_two && a.rank < 2) invalid(where, c.name + " needs rank at least 2");
      if ((c.name == "decomposition") && s.group->type == "sn")
        invalid(where, "decomposition needs a gmpn or cyclic_diag group");
      if ((c.name == "invariance" || c.name == "principal") && !a.gwa && s.group->type != "sn")
        invalid(where, c.name + " on a skew ring supports only sn");
      s.checks.push_back(std::move(c));
    }
  }

  if (doc.contains("tableaux")) {
    const json& t = doc.at("tableaux");
    allow_keys(t, "tableaux", {"seed", "radius", "checks", "samples", "pairs"});
    if (!a.gwa) invalid("tableaux", "tableaux need a GWA presentation");
    TableauxSpec ts;
    ts.radius = get_int(t, "tableaux", "radius", 3, 0, 20);
    ts.samples = get_int(t, "tableaux", "samples", 2, 0, 100);
    ts.pairs = get_int(t, "tableaux", "pairs", 20, 0, 10000);
    if (t.contains("seed")) {
      const json& sd = t.at("seed");
      if (!sd.is_array() || sd.size() != a.ring->nvars())
        invalid("tableaux.seed", "expected " + std::to_string(a.ring->nvars()) + " coordinates");
      Point p;
      for (std::size_t k = 0; k < sd.size(); ++k) {
        const std::string f = at("tableaux.seed", k);
        const std::string text = expr_text(sd[k], f);
        p.push_back(parsed(f, [&] { return parse_scalar(text, a.ring->field()); }));
      }
      ts.seed = std::move(p);
    }
    if (t.contains("checks")) {
      const json& cs = t.at("checks");
      if (!cs.is_array()) invalid("tableaux.checks", "expected a list");
      const auto& kinds = tableaux_kinds();
      for (std::size_t i = 0; i < cs.size(); ++i)
        ts.checks.push_back(build_check(cs[i], at("tableaux.checks", i),
                                        [&](const std::string& name) -> const std::vector<std::string_view>* {
                                          auto it = kinds.find(name);
                                          return it == kinds.end() ? nullptr : &it->second;
                                        }));
    }
    s.tableaux = std::move(ts);
  }
  return s;
}

// ---------------------------------------------------------------- execution

int param(const CheckSpec& c, const std::string& key, int def, int lo, int hi) {
  return get_int(c.params, c.name, key, def, lo, hi);
}

std::vector<ReflectionGroupElement> elements_of(const GroupSpec& g) {
  if (g.type == "sn") return group_elements(1, 1, g.n);
  return group_elements(g.m, g.type == "gmpn" ? g.p : 1, g.n);
}

std::vector<ReflectionGroupElement> generators_of(const GroupSpec& g) {
  if (g.type == "sn") return group_generators(1, 1, g.n);
  return group_generators(g.m, g.type == "gmpn" ? g.p : 1, g.n);
}

int group_m(const GroupSpec& g) { return g.type == "sn" ? 1 : g.m; }
int group_p(const GroupSpec& g) { return g.type == "gmpn" ? g.p : 1; }

json suite_json(const SuiteResult& r) {
  json j;
  j["status"] = to_string(r.status);
  j["cases"] = r.cases;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json generator_table(const InvariantGeneratorSet& s) {
  json out = json::array();
  for (std::size_t k = 0; k < s.gwa_side.size(); ++k)
    out.push_back({{"label", s.labels[k]}, {"element", s.gwa_side[k].str()}, {"image", s.expected_images[k].str()}});
  return out;
}

json run_check(const Scenario& s, const CheckSpec& c, Rng& rng, const ScenarioOverrides& ov) {
  const Algebra& a = s.algebra;
  const std::string& n = c.name;
  if (n == "relations") return suite_json(gwa_relation_suite(a.gwa, rng, param(c, "samples", 50, 0, 100000), param(c, "degree", 3, 0, 8)));
  if (n == "confluence") return suite_json(confluence_suite(a.gwa, rng, param(c, "words", 30, 0, 100000), param(c, "length", 5, 1, 20)));
  if (n == "embedding") return suite_json(embedding_suite(a.gwa, rng, param(c, "pairs", 50, 0, 100000)));
  if (n == "cyclic_invariant") {
    std::vector<int> ms{1, 2, 3, 4};
    if (c.params.contains("m")) {
      const json& m = c.params.at("m");
      ms.clear();
      if (m.is_number_integer()) ms.push_back(m.get<int>());
      else if (m.is_array())
        for (const auto& x : m) ms.push_back(x.is_number_integer() ? x.get<int>() : 0);
      for (int x : ms)
        if (x < 1 || x > 32) invalid(join(n, "m"), "expected integers in [1, 32]");
    } else if (s.group && s.group->type == "cyclic_diag") {
      ms = {s.group->m};
    }
    return suite_json(cyclic_suite(a.gwa, ms));
  }
  if (n == "associativity") return suite_json(associativity_suite(a.skew, rng, param(c, "triples", 50, 0, 100000)));
  if (n == "evaluate_law") return suite_json(evaluate_law_suite(a.skew, rng, param(c, "triples", 50, 0, 100000)));
  if (n == "membership") {
    const int bound = ov.bound.value_or(param(c, "bound", 10, 1, 20));
    json j = suite_json(membership_suite(rng, param(c, "lattices", 20, 0, 10000), bound,
                                         static_cast<std::size_t>(param(c, "dim", 3, 1, 4))));
    j["bound"] = bound;
    return j;
  }
  if (n == "rational_witness") return suite_json(rational_witness_suite(a.skew));

  const GroupSpec& g = *s.group;
  if (!a.gwa) {
    const auto gens = skew_invariant_generators(a.skew);
    if (n == "invariance") {
      SuiteResult r;
      for (const auto& u : gens) {
        ++r.cases;
        if (!is_invariant(generators_of(g), u)) r.fail(u.str() + " is not fixed");
      }
      return suite_json(r);
    }
    json j = suite_json(principal_suite(gens, default_gamma_samples(a.ring, g.n, rng, param(c, "extra", 3, 0, 100)),
                                        elements_of(g)));
    return j;
  }

  auto mode = LatticeSubmonoidSpec::Mode::group;
  if (n == "generates_monoid") {
    const std::string m = get_string(c.params, n, "mode", "group");
    if (m == "monoid") mode = LatticeSubmonoidSpec::Mode::monoid;
    else if (m != "group") invalid(join(n, "mode"), "expected group or monoid");
  }
  auto set = invariant_generators(a.gwa, group_m(g), group_p(g), mode);
  if (n == "invariance") {
    json j = suite_json(invariance_suite(set, generators_of(g)));
    j["generators"] = generator_table(set);
    return j;
  }
  if (n == "embedding_images") {
    json j = suite_json(embedding_images_suite(set));
    j["generators"] = generator_table(set);
    return j;
  }
  if (n == "generates_monoid") {
    set.lattice.bound = ov.bound.value_or(param(c, "bound", 16, 1, 64));
    json j = suite_json(generation_suite(set));
    j["mode"] = mode == LatticeSubmonoidSpec::Mode::group ? "group" : "monoid";
    j["bound"] = set.lattice.bound;
    json lat = json::array();
    for (const auto& v : set.lattice.generators) lat.push_back(lattice_str(v));
    j["lattice"] = lat;
    return j;
  }
  if (n == "decomposition")
    return suite_json(decomposition_suite(a.gwa, group_m(g), group_p(g), rng, param(c, "count", 20, 0, 10000)));
  // principal
  return suite_json(principal_suite(set.expected_images,
                                    default_gamma_samples(a.ring, g.n, rng, param(c, "extra", 3, 0, 100)), elements_of(g)));
}

json run_tableaux_check(const CheckSpec& c, const TableauxSpec& ts, const OrbitTruncation& orbit, Rng& rng) {
  const GWAPtr& p = orbit.gwa;
  if (c.name == "relations") {
    RandomPolyOptions opt;
    opt.max_degree = 2;
    opt.max_terms = 3;
    std::vector<Poly> samples;
    const int count = get_int(c.params, c.name, "samples", ts.samples, 0, 100);
    for (int k = 0; k < count; ++k) samples.push_back(random_poly(p->ring(), rng, opt));
    const auto rep = verify_relations(orbit, samples);
    json j{{"status", rep.pass() ? "pass" : "fail"}, {"cases", rep.checks}, {"interior", rep.interior}};
    if (!rep.pass()) {
      const auto& v = rep.violations.front();
      j["witness"] = "T" + point_str(orbit.tableaux[v.tableau].point) + ": " + v.relation + ": " + v.detail;
      j["violations"] = rep.violations.size();
    }
    return j;
  }
  if (c.name == "lift") {
    const bool ok = weight_lift_check(orbit.seed, orbit);
    json j{{"status", ok ? "pass" : "fail"}, {"cases", 1}};
    if (!ok) j["witness"] = "T" + point_str(orbit.seed) + " is not a weight vector of weight " + point_str(orbit.seed);
    return j;
  }
  if (c.name == "dagger") return suite_json(dagger_suite(orbit, rng, get_int(c.params, c.name, "pairs", ts.pairs, 0, 100000)));
  // submodules: a probe, reported rather than judged
  const auto scan = submodule_scan(orbit);
  const auto name = [&](std::size_t t) { return point_str(orbit.tableaux[t].point); };
  const auto names = [&](const std::vector<std::size_t>& ts2) {
    json out = json::array();
    for (std::size_t t : ts2) out.push_back(name(t));
    return out;
  };
  json edges = json::array();
  for (const auto& [from, to] : scan.edges) edges.push_back(json::array({name(from), name(to)}));
  json comps = json::array(), closed = json::array();
  for (const auto& comp : scan.components) comps.push_back(names(comp));
  for (const auto& cl : scan.closed_sets) closed.push_back(names(cl));
  return json{{"status", "pass"},
              {"cases", orbit.size()},
              {"edges", edges},
              {"components", comps},
              {"closed_sets", closed},
              {"proper_closed_sets", scan.closed_sets.size() - 1}};
}

bool selected(const ScenarioOverrides& ov, const std::string& name) {
  return ov.only.empty() || std::find(ov.only.begin(), ov.only.end(), name) != ov.only.end();
}

template <class F>
json timed(const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  json j;
  try {
    j = f();
  } catch (const ScenarioValidationError&) {
    throw;
  } catch (const std::exception& e) {
    j = json{{"status", "fail"}, {"cases", 0}, {"witness", std::string("error: ") + e.what()}};
  }
  j["name"] = name;
  j["elapsed_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return j;
}

}  // namespace

json parse_scenario(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, true);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ScenarioParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_scenario(ss.str());
  } catch (const ScenarioParseError& e) {
    throw ScenarioParseError(path + ": " + e.what());
  }
}

json run_scenario(const json& doc, const ScenarioOverrides& ov, const std::string& source) {
  const Scenario s = build_scenario(doc);
  for (const auto& name : ov.only) {
    bool known = false;
    for (const auto& c : s.checks) known = known || c.name == name;
    if (s.tableaux)
      for (const auto& c : s.tableaux->checks) known = known || "tableaux." + c.name == name || c.name == name;
    if (!known) invalid("--check", "the scenario declares no check '" + name + "'");
  }
  if (ov.radius && *ov.radius < 0) invalid("--radius", "must be nonnegative");
  if (ov.bound && *ov.bound < 1) invalid("--bound", "must be positive");

  const std::uint64_t seed = ov.seed.value_or(s.seed);
  json report;
  report["scenario"] = s.name;
  if (!source.empty()) report["source"] = source;
  report["seed"] = seed;
  report["environment"] = {{"program", "gwa"}, {"version", kVersion}};
  if (ov.radius) report["environment"]["radius"] = *ov.radius;
  if (ov.bound) report["environment"]["bound"] = *ov.bound;
  report["algebra"] = {{"label", s.algebra.label},
                       {"rank", s.algebra.rank},
                       {"presentation", s.algebra.gwa ? s.algebra.gwa->str() : "skew ring"}};
  if (!s.algebra.gwa) {
    json sig = json::array();
    for (const auto& a : s.algebra.skew->sigma()) sig.push_back(a.str());
    report["algebra"]["sigma"] = sig;
  }
  if (s.group) {
    const auto& g = *s.group;
    report["group"] = {{"type", g.type}, {"m", group_m(g)}, {"p", group_p(g)}, {"n", g.n}, {"order", elements_of(g).size()}};
  }

  // Each check draws from its own stream so filtering does not change the others.
  const auto stream = [&](std::size_t index) { return Rng(seed * 0x9E3779B97F4A7C15ULL + index + 1); };
  json checks = json::array();
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    const CheckSpec& c = s.checks[i];
    if (!selected(ov, c.name)) continue;
    Rng rng = stream(i);
    checks.push_back(timed(c.name, [&] { return run_check(s, c, rng, ov); }));
  }

  if (s.tableaux) {
    const TableauxSpec& ts = *s.tableaux;
    bool any = false;
    for (const auto& c : ts.checks) any = any || selected(ov, "tableaux." + c.name) || selected(ov, c.name);
    if (any || ts.checks.empty()) {
      Rng seed_rng = stream(1000);
      const Point seed_point = ts.seed ? *ts.seed : generic_seed(s.algebra.ring, seed_rng);
      const int radius = ov.radius.value_or(ts.radius);
      const auto orbit = orbit_expand(s.algebra.gwa, seed_point, radius);
      json tj;
      tj["seed"] = point_str(seed_point);
      tj["radius"] = radius;
      tj["orbit_size"] = orbit.size();
      json table = json::array();
      for (const auto& t : orbit.tableaux)
        table.push_back({{"weight", point_str(t.point)}, {"theta", lattice_str(t.provenance)}, {"boundary", t.boundary}});
      tj["eigenvalues"] = table;
      report["tableaux"] = tj;
      for (std::size_t i = 0; i < ts.checks.size(); ++i) {
        const CheckSpec& c = ts.checks[i];
        if (!selected(ov, "tableaux." + c.name) && !selected(ov, c.name)) continue;
        Rng rng = stream(1001 + i);
        checks.push_back(timed("tableaux." + c.name, [&] { return run_tableaux_check(c, ts, orbit, rng); }));
      }
    }
  }

  std::string status = "pass";
  for (const auto& c : checks) {
    if (c["status"] == "fail") status = "fail";
    else if (c["status"] == "inconclusive" && status == "pass") status = "inconclusive";
  }
  report["checks"] = checks;
  report["status"] = status;
  return report;
}

std::string render_text(const json& r) {
  std::ostringstream os;
  os << "scenario " << r.value("scenario", "") << " (seed " << r.value("seed", 0ULL) << ")\n";
  os << "algebra  " << r["algebra"].value("presentation", "") << "\n";
  if (r["algebra"].contains("sigma"))
    for (const auto& s : r["algebra"]["sigma"]) os << "  sigma  " << s.get<std::string>() << "\n";
  if (r.contains("group")) {
    const auto& g = r["group"];
    os << "group    " << g.value("type", "") << " G(" << g.value("m", 1) << "," << g.value("p", 1) << ","
       << g.value("n", 0ULL) << "), order " << g.value("order", 0ULL) << "\n";
  }
  if (r.contains("tableaux")) {
    const auto& t = r["tableaux"];
    os << "tableaux seed " << t.value("seed", "") << ", radius " << t.value("radius", 0) << ", orbit size "
       << t.value("orbit_size", 0ULL) << "\n";
    for (const auto& e : t["eigenvalues"])
      os << "  weight " << e.value("weight", "") << "  theta " << e.value("theta", "")
         << (e.value("boundary", false) ? "  boundary" : "") << "\n";
  }
  for (const auto& c : r["checks"]) {
    os << "[" << c.value("status", "") << "] " << c.value("name", "") << " (" << c.value("cases", 0ULL) << " cases, "
       << c.value("elapsed_ms", 0LL) << " ms)\n";
    if (c.contains("witness")) os << "  witness: " << c["witness"].get<std::string>() << "\n";
    if (c.contains("generators"))
      for (const auto& g : c["generators"])
        os << "  " << g.value("label", "") << " = " << g.value("element", "") << "  ->  " << g.value("image", "") << "\n";
    if (c.contains("lattice")) {
      os << "  lattice (" << c.value("mode", "") << ", bound " << c.value("bound", 0) << "):";
      for (const auto& v : c["lattice"]) os << " " << v.get<std::string>();
      os << "\n";
    }
    if (c.contains("components")) {
      os << "  components:";
      for (const auto& comp : c["components"]) {
        os << " {";
        bool first = true;
        for (const auto& p : comp) {
          os << (first ? "" : " ") << "T" << p.get<std::string>();
          first = false;
        }
        os << "}";
      }
      os << "\n  closed sets:";
      for (const auto& cl : c["closed_sets"]) os << " " << cl.size();
      os << "\n  edges: " << c["edges"].size();
      if (c["edges"].size() <= 40) {
        os << ":";
        for (const auto& e : c["edges"]) os << " T" << e[0].get<std::string>() << "->T" << e[1].get<std::string>();
      }
      os << "\n";
    }
  }
  os << "status " << r.value("status", "") << "\n";
  return os.str();
}

int exit_code(const json& report, bool strict) {
  const std::string s = report.value("status", "fail");
  if (s == "fail") return 1;
  if (s == "inconclusive" && strict) return 3;
  return 0;
}

std::string catalog_listing() {
  std::ostringstream os;
  os << "algebras:\n";
  for (const auto& name : catalog_names()) {
    const auto e = catalog(name, 1);
    if (e.gwa) {
      os << "  " << name << "  " << e.gwa->str() << "\n";
    } else {
      os << "  " << name << "  skew ring over D[" << e.skew->ring()->variables()[0] << "]; sigma_1: "
         << e.skew->sigma()[0].str() << "\n";
    }
  }
  const auto r1 = make_ring(field_make(1, {"q"}), 1);
  const auto r3 = make_ring(field_make(1), 3);
  os << "automorphisms:\n";
  os << "  shift    " << shift_auto(r1, 0).str() << "\n";
  os << "  q_scale  " << q_scale_auto(r1, 0, Scalar::parameter(r1->field(), "q")).str() << "\n";
  os << "  q_weyl   " << q_weyl_auto(r1, 0, Scalar::parameter(r1->field(), "q")).str() << "\n";
  os << "  nagata   " << nagata_auto(r3, 0).str() << "\n";
  os << "  custom   {forward: {h1: ...}, inverse: {h1: ...}}\n";
  os << "groups:\n  gmpn {m, p, n}\n  sn {n}\n  cyclic_diag {m}\n";
  os << "checks:\n ";
  for (const auto& [name, kind] : check_kinds()) os << " " << name;
  os << "\ntableaux checks:\n ";
  for (const auto& [name, params] : tableaux_kinds()) os << " " << name;
  os << "\n";
  return os.str();
}

}  // namespace gwa
