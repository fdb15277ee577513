#include "gfrep/problem.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace gfrep {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw ValidationError(where + ": " + why);
}

int64_t get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int64_t>();
}

GF parse_field_element(const Field& F, const Json& j,
                       const std::string& where) {
  if (j.is_number_integer()) {
    if (F.k() != 1 && j.get<int64_t>() != 0 && j.get<int64_t>() != 1)
      fail(where, "extension-field entries must be coefficient arrays");
    return F.elem(j.get<int64_t>());
  }
  if (j.is_array()) {
    if (F.k() == 1) fail(where, "prime-field entries must be integers");
    std::vector<int64_t> coeffs;
    for (const auto& c : j) coeffs.push_back(get_int(c, where));
    if (coeffs.size() > F.k()) fail(where, "coefficient vector too long");
    return F.from_coeffs(coeffs);
  }
  fail(where, "expected an integer or coefficient array");
}

MatGF parse_matrix(const Field& F, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a nonempty matrix");
  size_t rows = j.size();
  size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(where, "matrix rows must be nonempty arrays");
  MatGF m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      fail(where, "ragged matrix");
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          parse_field_element(F, j[i][c], where);
  }
  return m;
}

}  // namespace

Json gf_to_json(const GF& v) {
  const Field& F = *v.field();
  if (F.k() == 1) return static_cast<int64_t>(v.code());
  Json arr = Json::array();
  for (uint32_t d : F.decode(v.code())) arr.push_back(d);
  return arr;
}

Json matrix_to_json(const MatGF& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(gf_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ProblemSpec parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail("problem file", std::string("invalid JSON: ") + e.what());
  }
  ProblemSpec spec;

  // field
  if (!j.contains("field")) fail("field", "missing");
  const Json& jf = j["field"];
  uint64_t p = static_cast<uint64_t>(get_int(jf.at("p"), "field.p"));
  uint32_t k = jf.contains("k")
                   ? static_cast<uint32_t>(get_int(jf["k"], "field.k"))
                   : 1;
  std::vector<int64_t> minpoly;
  if (jf.contains("min_poly"))
    for (const auto& c : jf["min_poly"])
      minpoly.push_back(get_int(c, "field.min_poly"));
  spec.field = Field::make(p, k, minpoly);

  // N
  if (!j.contains("N") || !j["N"].contains("moduli")) fail("N", "missing moduli");
  std::vector<int64_t> moduli;
  for (const auto& m : j["N"]["moduli"]) moduli.push_back(get_int(m, "N.moduli"));
  if (moduli.empty()) fail("N.moduli", "must not be empty");
  AbelianGroupSpec N(moduli);

  // H
  if (!j.contains("H") || !j["H"].contains("perm_gens"))
    fail("H", "missing perm_gens");
  std::vector<std::vector<int>> perm_gens;
  for (const auto& g : j["H"]["perm_gens"]) {
    std::vector<int> perm;
    for (const auto& v : g)
      perm.push_back(static_cast<int>(get_int(v, "H.perm_gens")));
    perm_gens.push_back(std::move(perm));
  }
  Group H = Group::from_permutations(perm_gens);

  // action
  std::vector<ActionMatrix> action;
  if (j.contains("action")) {
    for (size_t gi = 0; gi < j["action"].size(); ++gi) {
      ActionMatrix A;
      for (const auto& row : j["action"][gi]) {
        std::vector<int64_t> r;
        for (const auto& v : row) r.push_back(get_int(v, "action"));
        A.push_back(std::move(r));
      }
      action.push_back(std::move(A));
    }
  }
  if (action.size() != H.generators().size())
    fail("action", "need exactly one matrix per H generator");

  // the standing assumption: char does not divide |G|
  int64_t order = N.order() * H.order();
  if (order % static_cast<int64_t>(p) == 0)
    fail("field", "characteristic divides group order (the tool's standing "
                  "assumption char K does not divide |G| is violated)");

  spec.G = std::make_shared<SemidirectGroup>(std::move(N), std::move(H),
                                             std::move(action));

  // reps
  if (j.contains("reps")) {
    for (auto it = j["reps"].begin(); it != j["reps"].end(); ++it) {
      NamedRepSpec r;
      const Json& jr = it.value();
      if (jr.contains("subgroup"))
        for (const auto& w : jr["subgroup"])
          r.subgroup_words.push_back(w.get<std::string>());
      if (!jr.contains("images"))
        fail("reps." + it.key(), "missing images");
      for (const auto& m : jr["images"])
        r.images.push_back(
            parse_matrix(*spec.field, m, "reps." + it.key()));
      // count check against the named subgroup's generators
      size_t expected = r.subgroup_words.empty()
                            ? spec.G->group().generators().size()
                            : r.subgroup_words.size();
      if (r.images.size() != expected)
        fail("reps." + it.key(), "image count does not match generator count");
      spec.reps.emplace(it.key(), std::move(r));
    }
  }
  spec.echo = j;
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("problem file", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

int parse_element_word(const SemidirectGroup& G, const std::string& word) {
  const Group& Gg = G.group();
  if (word == "1" || word == "e" || word.empty()) return Gg.identity();
  const auto& names = Gg.generator_names();
  const auto& gens = Gg.generators();
  int result = Gg.identity();
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    std::string name = tok;
    int64_t exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      try {
        exp = std::stoll(tok.substr(caret + 1));
      } catch (...) {
        fail("element word", "bad exponent in '" + tok + "'");
      }
    }
    int gen = -1;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) gen = gens[i];
    if (gen < 0) fail("element word", "unknown generator '" + name + "'");
    int g = exp < 0 ? Gg.inverse(gen) : gen;
    for (int64_t i = 0; i < std::llabs(exp); ++i) result = Gg.mult(result, g);
  }
  return result;
}

Subgroup parse_subgroup(const SemidirectGroup& G,
                        const std::vector<std::string>& words) {
  std::vector<int> gens;
  gens.reserve(words.size());
  for (const auto& w : words) gens.push_back(parse_element_word(G, w));
  return Subgroup::generated(G.group(), gens);
}

Representation materialize_rep(const ProblemSpec& spec,
                               const std::string& name) {
  auto it = spec.reps.find(name);
  if (it == spec.reps.end())
    fail("reps", "unknown representation '" + name + "'");
  const NamedRepSpec& r = it->second;
  // with words the images align to them; otherwise to G's generators
  Subgroup domain = r.subgroup_words.empty()
                        ? Subgroup::whole(spec.G->group())
                        : parse_subgroup(*spec.G, r.subgroup_words);
  return rep_from_images(std::move(domain), spec.field, r.images);
}

namespace {

Json chi_to_json(const Character& chi) {
  Json arr = Json::array();
  for (const auto& v : chi.on_gens) arr.push_back(gf_to_json(v));
  return arr;
}

Json classification_to_json(const Classification& C,
                            const SemidirectGroup& G) {
  Json out;
  Json entries = Json::array();
  for (const auto& e : C.entries) {
    Json je;
    je["j"] = e.orbit_index;
    je["chi"] = chi_to_json(e.chi);
    je["rho_dim"] = e.rho.dim();
    je["theta_dim"] = e.dim_theta;
    je["endo_dim"] = e.endo_dim;
    je["irreducible"] = e.certified_irreducible;
    entries.push_back(std::move(je));
  }
  out["entries"] = std::move(entries);
  out["sum"] = C.sum;
  out["group_order"] = G.group().order();
  out["complete"] = C.complete;
  out["field_compat"] = C.field_compat;
  return out;
}

std::string classification_human(const Classification& C,
                                 const SemidirectGroup& G) {
  std::ostringstream os;
  os << "little-groups classification over |G| = " << G.group().order()
     << " (|N| = " << G.N().order() << ", |H| = " << G.H().order() << ")\n";
  os << "field_compat: " << (C.field_compat ? "yes" : "no") << "\n";
  os << "  j  chi              rho_dim  theta_dim  endo_dim  irreducible\n";
  for (const auto& e : C.entries) {
    std::ostringstream chi;
    chi << "[";
    for (size_t i = 0; i < e.chi.on_gens.size(); ++i)
      chi << (i ? "," : "") << e.chi.on_gens[i];
    chi << "]";
    os << "  " << e.orbit_index << "  " << chi.str();
    for (size_t pad = chi.str().size(); pad < 15; ++pad) os << ' ';
    os << "  " << e.rho.dim() << "        " << e.dim_theta << "          "
       << e.endo_dim << "         " << (e.certified_irreducible ? "yes" : "no")
       << "\n";
  }
  os << "Wedderburn sum = " << C.sum << (C.complete ? " = " : " != ")
     << G.group().order() << " -> " << (C.complete ? "complete" : "incomplete")
     << "\n";
  return os.str();
}

Json mackey_to_json(const MackeyReport& r) {
  Json out;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json jr;
    jr["rep_word"] = row.rep_word;
    jr["hx_order"] = row.hx_order;
    jr["i_value"] = row.i_value;
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  out["i_LL"] = r.i_LL;
  out["total"] = r.total;
  out["i_induced"] = r.i_induced;
  out["induced_dim"] = r.induced_dim;
  out["condition_holds"] = r.condition_holds;
  out["irreducible_by_criterion"] = r.irreducible_by_criterion;
  out["direct_irreducible"] = r.direct_irreducible;
  return out;
}

std::string mackey_human(const MackeyReport& r) {
  std::ostringstream os;
  os << "double cosets of (H, H):\n";
  os << "  rep        |H^(x)|  i(L,L,D)\n";
  for (const auto& row : r.rows) {
    os << "  " << row.rep_word;
    for (size_t pad = row.rep_word.size(); pad < 9; ++pad) os << ' ';
    os << "  " << row.hx_order << "        " << row.i_value << "\n";
  }
  os << "i(L,L) = " << r.i_LL << ", total = " << r.total
     << " = i(L^G,L^G) = " << r.i_induced << "\n";
  if (r.condition_holds)
    os << "sufficiency condition holds -> L^G irreducible\n";
  else
    os << "sufficiency condition fails -> criterion inconclusive; direct "
          "test: "
       << (r.direct_irreducible ? "irreducible" : "reducible") << "\n";
  return os.str();
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Check> run_verify(const ProblemSpec& spec, uint64_t seed,
                              bool oracle) {
  std::vector<Check> checks;
  const SemidirectGroup& G = *spec.G;
  const Field& F = *spec.field;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  // field axioms on random triples
  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int t = 0; t < 300 && ok; ++t) {
      GF a = GF(&F, static_cast<uint32_t>(rng() % F.q()));
      GF b = GF(&F, static_cast<uint32_t>(rng() % F.q()));
      GF c = GF(&F, static_cast<uint32_t>(rng() % F.q()));
      ok = (a + b) + c == a + (b + c) && a * (b + c) == a * b + a * c &&
           a * b == b * a;
      if (!a.is_zero()) ok = ok && a * inv(a) == F.one();
    }
    add("field_axioms", ok);
  }
  // Frobenius fixed points
  {
    bool ok = true;
    for (uint32_t c = 0; c < F.q() && c < 4096; ++c)
      ok = ok && F.pow(c, static_cast<int64_t>(F.q())) == c;
    add("frobenius_x_pow_q", ok);
  }
  // structure
  add("group_order", G.group().order() ==
                         G.N().order() * G.H().order());
  {
    bool normal = true;
    for (int g = 0; g < G.group().order() && normal; ++g)
      for (int e : G.N_subgroup().elements())
        if (!G.N_subgroup().contains(G.group().conj(g, e))) {
          normal = false;
          break;
        }
    add("N_normal", normal);
    add("N_H_trivial_intersection",
        intersect(G.N_subgroup(), G.H_subgroup()).order() == 1);
  }
  // character count
  {
    auto chars = characters(G.N(), spec.field);
    uint64_t expect = 1;
    for (int64_t m : G.N().moduli)
      expect *= std::gcd(static_cast<uint64_t>(m), F.q() - 1);
    add("character_count", chars.size() == expect);
  }

  Classification C;
  bool classified = false;
  try {
    C = classify(G, spec.field, seed, oracle);
    classified = true;
    add("classify_certified", true);
  } catch (const Error& e) {
    add("classify_certified", false, e.what());
  }
  if (classified) {
    // orbit-stabilizer and semidirect structure of stabilizers
    bool orb = true;
    for (const auto& od : C.orbit_data)
      orb = orb && static_cast<int64_t>(od.orbit.size()) *
                           od.stabilizer.order() ==
                       G.group().order();
    add("orbit_stabilizer", orb);
    // dims
    bool dims = true;
    for (const auto& e : C.entries)
      dims = dims && e.dim_theta > 0 && e.endo_dim >= 1;
    add("entry_dims", dims);
    add("completeness_iff_field_compat", C.complete == C.field_compat,
        C.complete ? "complete" : "incomplete");
    // every regular-representation irreducible either matches an entry
    // or is flagged as having no one-dimensional N-factor
    {
      bool ok = true;
      int flagged = 0;
      auto dec = decompose(regular_rep(Subgroup::whole(G.group()), spec.field),
                           seed);
      for (const auto& [irr, mult] : dec.summands) {
        auto m = match_irreducible(irr, C, G, seed);
        if (!m.matched) ++flagged;
        if (!m.matched && C.field_compat) ok = false;
      }
      add("match_dichotomy", ok,
          "unmatched irreducibles (no 1-dim N-factor): " +
              std::to_string(flagged));
    }
    // Frobenius reciprocity on the first entry
    if (!C.entries.empty()) {
      const auto& e = C.entries.front();
      const auto& od = C.orbit_data[e.orbit_index - 1];
      Representation chi_ext = extend_character(G, od.rep, od.stabilizer,
                                                spec.field);
      Representation w = tensor_char(G, chi_ext, e.rho);
      Subgroup whole = Subgroup::whole(G.group());
      Representation wG = induce(w, whole);
      bool frt = intertwining_number(wG, e.theta) ==
                 intertwining_number(w, restrict_rep(e.theta, od.stabilizer));
      add("frobenius_reciprocity", frt);
    }
  }
  return checks;
}

}  // namespace

Report run_command(const std::string& command, const ProblemSpec& spec,
                   const CommandArgs& args) {
  Report report;
  Json& m = report.machine;
  m["tool"] = "gfrep";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["seed"] = args.seed;
  const SemidirectGroup& G = *spec.G;
  Subgroup whole = Subgroup::whole(G.group());

  auto materialize = [&](const std::string& name) {
    Representation r = materialize_rep(spec, name);
    if (!args.subgroup_words.empty())
      return restrict_rep(r, parse_subgroup(G, args.subgroup_words));
    return r;
  };

  if (command == "classify") {
    Classification C = classify(G, spec.field, args.seed, args.oracle);
    m["payload"] = classification_to_json(C, G);
    report.human = classification_human(C, G);
  } else if (command == "verify") {
    auto checks = run_verify(spec, args.seed, args.oracle);
    Json payload;
    Json arr = Json::array();
    bool all = true;
    std::ostringstream os;
    for (const auto& c : checks) {
      Json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      arr.push_back(std::move(jc));
      all = all && c.pass;
      os << (c.pass ? "PASS  " : "FAIL  ") << c.name
         << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    }
    payload["checks"] = std::move(arr);
    payload["all_pass"] = all;
    m["payload"] = std::move(payload);
    report.human = os.str();
    if (!all) throw CertificationError("verify: at least one check failed");
  } else if (command == "irr") {
    if (args.rep.empty()) fail("irr", "--rep required");
    Representation r = materialize(args.rep);
    auto res = is_irreducible(r, args.seed, args.oracle);
    Json payload;
    payload["rep"] = args.rep;
    payload["dim"] = r.dim();
    payload["irreducible"] = res.irreducible;
    payload["witness_dim"] = static_cast<int64_t>(res.witness.size());
    m["payload"] = std::move(payload);
    std::ostringstream os;
    os << args.rep << " (dim " << r.dim() << "): "
       << (res.irreducible ? "irreducible" : "reducible") << "\n";
    if (!res.irreducible)
      os << "invariant subspace witness of dimension " << res.witness.size()
         << "\n";
    report.human = os.str();
  } else if (command == "intertwine") {
    if (args.rep.empty() || args.rep2.empty())
      fail("intertwine", "--rep and --rep2 required");
    Representation a = materialize(args.rep);
    Representation b = materialize(args.rep2);
    int i = intertwining_number(a, b);
    Json payload;
    payload["rep"] = args.rep;
    payload["rep2"] = args.rep2;
    payload["i"] = i;
    m["payload"] = std::move(payload);
    std::ostringstream os;
    os << "i(" << args.rep << ", " << args.rep2 << ") = " << i << "\n";
    report.human = os.str();
  } else if (command == "induce") {
    if (args.rep.empty()) fail("induce", "--rep required");
    Representation r = materialize(args.rep);
    Representation ind = induce(r, whole);
    Json payload;
    payload["rep"] = args.rep;
    payload["dim"] = ind.dim();
    Json images;
    const auto& names = G.group().generator_names();
    for (size_t i = 0; i < names.size(); ++i)
      images[names[i]] = matrix_to_json(ind.gen_images()[i]);
    payload["images"] = std::move(images);
    m["payload"] = std::move(payload);
    std::ostringstream os;
    os << "induced dimension " << ind.dim() << " = [G:H] * dim("
       << args.rep << ")\n";
    report.human = os.str();
  } else if (command == "mackey") {
    if (args.rep.empty()) fail("mackey", "--rep required");
    Representation r = materialize(args.rep);
    MackeyReport mk = mackey_sufficient(r, whole, args.seed);
    m["payload"] = mackey_to_json(mk);
    report.human = mackey_human(mk);
  } else if (command == "match") {
    if (args.rep.empty()) fail("match", "--rep required");
    Representation r = materialize(args.rep);
    Classification C = classify(G, spec.field, args.seed, args.oracle);
    auto res = match_irreducible(r, C, G, args.seed);
    Json payload;
    payload["rep"] = args.rep;
    payload["matched"] = res.matched;
    std::ostringstream os;
    if (res.matched) {
      payload["j"] = C.entries[res.entry_index].orbit_index;
      payload["rho_index"] = C.entries[res.entry_index].rho_index;
      os << args.rep << " matches entry j = "
         << C.entries[res.entry_index].orbit_index
         << ", rho_index = " << C.entries[res.entry_index].rho_index << "\n";
    } else {
      payload["verdict"] = MatchResult::kNoFactorVerdict;
      os << args.rep << ": " << MatchResult::kNoFactorVerdict << "\n";
    }
    m["payload"] = std::move(payload);
    report.human = os.str();
  } else {
    fail("command", "unknown command '" + command + "'");
  }
  return report;
}

}  // namespace gfrep
