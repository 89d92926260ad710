#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bvkit/bv.hpp"
#include "bvkit/cocom.hpp"
#include "bvkit/dgla.hpp"
#include "bvkit/hochschild.hpp"
#include "bvkit/identities.hpp"
#include "bvkit/koszul.hpp"
#include "json_io.hpp"

namespace bvkit::cli {

namespace {

// A report plus the verdicts that decide the exit code.
struct Report {
  Json body = Json::object();
  bool failed = false;

  void verdict(const std::string& name, bool value) {
    body["verdicts"][name] = value;
    if (!value) failed = true;
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> parse_vars(const std::string& s) {
  auto vars = split(s, ',');
  if (vars.empty()) throw InputError("--vars: no variables given");
  for (const auto& v : vars)
    if (v.empty()) throw InputError("--vars: empty variable name");
  return vars;
}

// Prefixes parse failures with the flag they came from.
template <class F>
auto flag(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError("--" + name + ": parse error", e.column());
  } catch (const InputError& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s = to_string(m, vars);
  return s.empty() ? "1" : s;
}

Json polys(const std::vector<Polynomial>& ps, const std::vector<std::string>& vars) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(to_string(p, vars));
  return a;
}

std::string artinian_text(const Artinian& a) { return to_string(a); }

// One-form flag: "df:<poly>" for an exact form, otherwise the d(x) grammar.
DifferentialForm parse_one_form(const std::string& text, const ContextPtr& ctx) {
  if (text.rfind("df:", 0) == 0) {
    Polynomial f = parse_polynomial(text.substr(3), ctx->variable_names());
    return exact_form(ctx, ctx->from(f));
  }
  DifferentialForm phi = parse_form(text, ctx);
  for (const auto& [b, a] : phi.terms())
    if (blade_degree(b) != 1) throw InputError("expected a one-form");
  return phi;
}

Json counterexample_json(const Counterexample& c) {
  Json j;
  j["relation"] = c.relation;
  for (const auto& [k, v] : c.inputs) j["inputs"][k] = v;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  return j;
}

// ---- subcommands ----

struct MilnorArgs {
  std::string vars, poly;
  int degree_cap = 12;
};

Report run_milnor(const MilnorArgs& a) {
  auto vars = flag("vars", [&] { return parse_vars(a.vars); });
  Polynomial f = flag("poly", [&] { return parse_polynomial(a.poly, vars); });
  if (a.degree_cap < 0) throw InputError("--degree-cap must be non-negative");
  auto rep = milnor_ring(vars, f, a.degree_cap);
  Report r;
  r.body["inputs"] = {{"vars", vars}, {"poly", to_string(f, vars)}, {"degree_cap", a.degree_cap}};
  Json& res = r.body["result"];
  res["isolated"] = rep.isolated;
  if (rep.milnor_number)
    res["milnor_number"] = *rep.milnor_number;
  else
    res["milnor_number"] = "infinite";
  Json basis = Json::array();
  for (const auto& m : rep.quotient.standard_monomials) basis.push_back(monomial_text(m, vars));
  res[rep.milnor_number ? "basis" : "basis_up_to_degree_cap"] = basis;
  res["groebner_basis"] = polys(rep.quotient.groebner.polynomials(), vars);
  if (rep.quotient.open_variable) res["open_variable"] = vars[*rep.quotient.open_variable];
  return r;
}

struct KoszulArgs {
  std::string vars, gens;
  int truncate = 6;
};

Report run_koszul(const KoszulArgs& a) {
  auto vars = flag("vars", [&] { return parse_vars(a.vars); });
  std::vector<Polynomial> gens = flag("gens", [&] {
    std::vector<Polynomial> out;
    for (const auto& g : split(a.gens, ';')) out.push_back(parse_polynomial(g, vars));
    return out;
  });
  if (a.truncate < 0) throw InputError("--truncate must be non-negative");
  auto K = build_koszul(vars, gens);
  auto rep = truncated_cohomology(K, a.truncate);
  Report r;
  r.body["inputs"] = {{"vars", vars}, {"gens", polys(gens, vars)}, {"truncate", a.truncate}};
  Json& res = r.body["result"];
  res["degree_cap"] = rep.degree_cap;
  res["reliable_bound"] = rep.reliable_bound;
  res["homogeneous"] = rep.homogeneous;
  std::map<int, std::size_t> totals;
  for (const auto& c : rep.cells) {
    Json cell = {{"dimension", c.dimension}, {"rank_out", c.rank_out},   {"rank_in", c.rank_in},
                 {"cohomology", c.cohomology}, {"reliable", c.reliable}};
    res["cells"][std::to_string(c.cohomological_degree)][std::to_string(c.weight)] = cell;
    totals.try_emplace(c.cohomological_degree, 0);
  }
  for (auto& [p, t] : totals) res["reliable_cohomology"][std::to_string(p)] = rep.total_cohomology(p);
  bool dd = true;
  for (Blade b = 0; b < (Blade{1} << K.rank()); ++b)
    if (!koszul_is_zero(K.differential(K.basis_differential(b)))) dd = false;
  r.verdict("d_squared_zero", dd);
  return r;
}

struct ContextArgs {
  std::string vars, c = "1", algebroid;
};

ContextPtr make_context(const ContextArgs& a) {
  auto vars = flag("vars", [&] { return parse_vars(a.vars); });
  Polynomial c = flag("c", [&] { return parse_polynomial(a.c, vars); });
  if (c.is_zero()) throw InputError("--c: the volume coefficient must be nonzero");
  std::optional<LieAlgebroidPresentation> alg;
  if (!a.algebroid.empty()) alg = flag("algebroid", [&] { return parse_algebroid(load_json(a.algebroid), vars); });
  return flag(a.algebroid.empty() ? "vars" : "algebroid", [&] { return Context::make(vars, c, alg); });
}

Json context_json(const ContextPtr& ctx) {
  Json j = {{"vars", ctx->variable_names()}, {"c", to_string(ctx->denominator(), ctx->variable_names())}};
  if (!ctx->is_tangent()) j["generators"] = ctx->generator_names();
  return j;
}

struct SchoutenArgs {
  ContextArgs ctx;
  std::string lhs, rhs;
};

Report run_schouten(const SchoutenArgs& a) {
  ContextPtr ctx = make_context(a.ctx);
  Polyvector u = flag("lhs", [&] { return parse_polyvector(a.lhs, ctx); });
  Polyvector v = flag("rhs", [&] { return parse_polyvector(a.rhs, ctx); });
  Report r;
  r.body["inputs"] = context_json(ctx);
  r.body["inputs"]["lhs"] = to_string(u);
  r.body["inputs"]["rhs"] = to_string(v);
  r.body["result"]["bracket"] = to_string(schouten_bracket(u, v));
  return r;
}

struct BvArgs {
  ContextArgs ctx;
  std::string phi = "0", input;
};

Report run_bv(const BvArgs& a) {
  ContextPtr ctx = make_context(a.ctx);
  if (!ctx->is_tangent()) throw InputError("--algebroid: the bv subcommand works with the tangent algebroid only");
  DifferentialForm phi = flag("phi", [&] { return parse_one_form(a.phi, ctx); });
  Polyvector u = flag("input", [&] { return parse_polyvector(a.input, ctx); });
  Connection conn = connection_from_volume(ctx, phi);
  Polyvector out = bv_from_connection(conn, u);
  Report r;
  r.body["inputs"] = context_json(ctx);
  r.body["inputs"]["phi"] = to_string(phi);
  r.body["inputs"]["input"] = to_string(u);
  r.body["result"]["output"] = to_string(out);
  r.body["result"]["phi_closed"] = de_rham_d(phi).is_zero();
  Json conn_j = Json::object();
  for (std::size_t i = 0; i < conn.values.size(); ++i)
    conn_j[ctx->generator_names()[i]] = to_string_in(conn.values[i], ctx);
  r.body["result"]["connection"] = conn_j;
  r.verdict("form_path_agrees", form_path_operator(phi, u) == out);
  return r;
}

struct CheckArgs {
  ContextArgs ctx;
  std::string kind, phi;
  Sampler sampler;
};

Report run_check(const CheckArgs& a, std::uint64_t seed) {
  IdentityKind kind = flag("kind", [&] { return parse_identity_kind(a.kind); });
  ContextPtr ctx = make_context(a.ctx);
  IdentitySetup setup{ctx, std::nullopt, std::nullopt};
  if (!a.phi.empty()) setup.phi = flag("phi", [&] { return parse_one_form(a.phi, ctx); });
  Sampler s = a.sampler;
  s.seed = seed;
  if (s.max_ext < 0 || s.max_deg < 0) throw InputError("--max-ext and --max-deg must be non-negative");
  auto rep = check_identities(kind, setup, s);
  Report r;
  r.body["inputs"] = context_json(ctx);
  r.body["inputs"]["kind"] = to_string(kind);
  if (setup.phi) r.body["inputs"]["phi"] = to_string(*setup.phi);
  r.body["inputs"]["sampler"] = {
      {"samples", s.samples}, {"seed", s.seed}, {"max_ext", s.max_ext}, {"max_deg", s.max_deg}};
  r.body["result"] = {{"identity", rep.identity}, {"samples", rep.samples}, {"failures", rep.failures}};
  if (rep.first) r.body["counterexample"] = counterexample_json(*rep.first);
  r.verdict("zero_failures", rep.failures == 0);
  return r;
}

struct McArgs {
  std::string action, dgla, element;
  int cutoff = 4;
  int order = 0;
};

Json mc_scheme_json(const MCScheme& s) {
  return {{"coordinates", s.coordinates}, {"equations", polys(s.equations(), s.coordinates)}};
}

Json comparison_json(const MatrixComparison& c) {
  Json j = {{"equal", c.equal}, {"entries_compared", c.entries_compared}};
  if (!c.equal) j["first_mismatch"] = c.first_mismatch;
  return j;
}

Json hilbert_json(const HilbertComparison& h) {
  return {{"cutoff", h.cutoff}, {"local_ring", h.local_ring}, {"coalgebra", h.coalgebra}, {"equal", h.equal}};
}

Report run_mc(const McArgs& a) {
  GradedLieAlgebra g = flag("dgla", [&] { return parse_dgla(load_json(a.dgla)); });
  DglaCheck check = check_dgla(g);
  if (!check.ok()) throw InputError("--dgla: not a dg Lie algebra: " + check.detail);
  if (a.cutoff < 0) throw InputError("--cutoff must be non-negative");
  Report r;
  Json& in = r.body["inputs"];
  in["action"] = a.action;
  in["cutoff"] = a.cutoff;
  for (int d : g.occupied_degrees()) {
    Json labels = Json::array();
    for (std::size_t i : g.indices_in_degree(d)) labels.push_back(g.label(i));
    in["degrees"][std::to_string(d)] = labels;
  }
  Json& res = r.body["result"];
  MCScheme scheme = mc_equations(g);
  if (a.action == "equations") {
    res = mc_scheme_json(scheme);
    if (a.order > 0) {
      auto fam = mc_solutions_over(g, a.order);
      res["solutions"] = {{"order", fam.order},
                          {"unknowns", fam.unknowns},
                          {"groebner_basis", polys(fam.groebner.polynomials(), fam.unknowns)},
                          {"free_unknowns", fam.independent_unknowns()},
                          {"only_zero", fam.only_zero()},
                          {"unconstrained", fam.unconstrained()}};
    }
  } else if (a.action == "compare") {
    DegreeWindow w = degree_window(g);
    res["window"] = to_string(w);
    auto cplx = build_cocom_complex(g, a.cutoff);
    r.verdict("d_squared_zero", cplx.squares_to_zero());
    res["h0_cumulative"] = cplx.h0_filtration();
    if (w == DegreeWindow::one_two) {
      if (a.cutoff < 1) throw InputError("--cutoff must be at least 1 for the local ring comparison");
      auto t = compare_with_koszul_transpose(g, a.cutoff);
      auto h = compare_h0_local_ring(g, a.cutoff);
      res["koszul_transpose"] = comparison_json(t);
      res["hilbert"] = hilbert_json(h);
      r.verdict("koszul_transpose", t.equal);
      r.verdict("h0_matches_local_ring", h.equal);
    } else {
      auto t = compare_with_chevalley_eilenberg(g, a.cutoff);
      auto h = compare_invariants(g, a.cutoff);
      res["chevalley_eilenberg"] = comparison_json(t);
      res["invariants"] = hilbert_json(h);
      r.verdict("chevalley_eilenberg", t.equal);
      r.verdict("h0_matches_invariants", h.equal);
    }
  } else {
    if (a.order < 1) throw InputError("--order is required for the cocycle action");
    if (a.cutoff < 1) throw InputError("--cutoff must be at least 1 for the cocycle action");
    std::vector<Artinian> elem = flag("element", [&] {
      std::vector<Artinian> out;
      for (const auto& s : split(a.element, ';')) out.push_back(parse_artinian(s, a.order).with_order(a.order));
      if (out.size() != g.dimension(1))
        throw InputError("expected " + std::to_string(g.dimension(1)) + " coordinates separated by ';'");
      return out;
    });
    for (const auto& x : elem)
      if (!x.is_nilpotent()) throw InputError("--element: coordinates must lie in the maximal ideal (e)");
    in["order"] = a.order;
    Json ej = Json::array();
    for (const auto& x : elem) ej.push_back(artinian_text(x));
    in["element"] = ej;
    auto rep = mc_cocycle(g, elem, a.cutoff);
    auto one = g.indices_in_degree(1), two = g.indices_in_degree(2);
    std::vector<std::string> names;
    for (std::size_t i : one) names.push_back(g.label(i));
    if (!rep.accepted) {
      Json resid = Json::object();
      for (std::size_t i = 0; i < two.size(); ++i)
        if (!rep.residual[i].is_zero()) resid[g.label(two[i])] = artinian_text(rep.residual[i]);
      r.body["counterexample"] = {{"relation", "da + 1/2 [a, a] = 0"}, {"residual", resid}};
    } else {
      Json el = Json::object();
      for (const auto& [m, c] : rep.element) el[monomial_text(m, names)] = artinian_text(c);
      res["exponential"] = el;
      res["safe_degree"] = rep.safe_degree;
      Json img = Json::object();
      for (const auto& [key, c] : rep.image)
        img[monomial_text(key.first, names) + " (x) " + g.label(two[key.second])] = artinian_text(c);
      res["image"] = img;
      r.verdict("cocycle", rep.cocycle);
    }
    r.verdict("maurer_cartan", rep.accepted);
  }
  return r;
}

struct DeformArgs {
  std::string algebra, perturb;
  int moduli = -1;
};

Json tensor_json(const StructureTensor<Rational>& t) {
  Json mu = Json::array();
  for (std::size_t a = 0; a < t.dim; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < t.dim; ++b) {
      Json cell = Json::array();
      for (std::size_t c = 0; c < t.dim; ++c) cell.push_back(to_string(t.at(a, b, c)));
      row.push_back(cell);
    }
    mu.push_back(row);
  }
  return {{"dim", t.dim}, {"basis", t.basis}, {"mu", mu}};
}

Report run_deform(const DeformArgs& a) {
  FiniteAlgebra f = flag("algebra", [&] { return parse_algebra(load_json(a.algebra)); });
  Report r;
  r.body["inputs"]["algebra"] = tensor_json(f);
  auto v = check_associativity_bracket(f);
  Json& res = r.body["result"];
  res["associative"] = v.direct;
  res["half_bracket_vanishes"] = v.bracket;
  if (v.failing_triple) {
    Json t = Json::array();
    for (std::size_t i : *v.failing_triple) t.push_back(f.basis[i]);
    res["failing_triple"] = t;
  }
  r.verdict("associativity_agreement", v.agree());
  if (!a.perturb.empty()) {
    auto h = flag("perturb", [&] { return parse_perturbation(load_json(a.perturb)); });
    if (h.dim != f.dim) throw InputError("--perturb: dimension differs from the algebra");
    auto dv = check_deformation(f, h);
    int order = h.mu.empty() ? 0 : h.mu.front().order();
    res["deformation"] = {{"order", order}, {"associative", dv.associative}, {"maurer_cartan", dv.maurer_cartan}};
    r.verdict("deformation_agreement", dv.agree());
  }
  if (a.moduli >= 0) {
    auto t = deformation_moduli_truncated(f, a.moduli);
    res["moduli"] = {{"cutoff", t.cutoff},
                     {"coordinates", t.coordinates},
                     {"coalgebra", t.coalgebra},
                     {"local_ring", t.local_ring}};
    r.verdict("moduli_tables_agree", t.equal);
  }
  return r;
}

// ---- output ----

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

// Arrays nested without objects print inline.
bool flat(const Json& j) {
  if (scalar(j)) return true;
  return j.is_array() && std::all_of(j.begin(), j.end(), flat);
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + "]";
}

void render_text(const Json& j, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.empty()) {
      out << pad << k << ": {}\n";
    } else if (flat(v)) {
      out << pad << k << ": " << scalar_text(v) << '\n';
    } else if (v.is_array()) {
      out << pad << k << ":\n";
      for (const auto& item : v) {
        out << pad << "  -\n";
        render_text(item, out, indent + 4);
      }
    } else {
      out << pad << k << ":\n";
      render_text(v, out, indent + 2);
    }
  }
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report.dump(2) << '\n';
  else
    render_text(report, out, 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bvkit: exact Koszul, Schouten/BV and Maurer-Cartan computations", "bvkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 1;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for sampled checks");
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  MilnorArgs milnor;
  auto* m = app.add_subcommand("milnor", "Milnor ring of an isolated singularity at the origin");
  m->add_option("--vars", milnor.vars, "Comma-separated variables")->required();
  m->add_option("--poly", milnor.poly, "Polynomial f")->required();
  m->add_option("--degree-cap", milnor.degree_cap, "Listed basis bound when the ring is infinite");

  KoszulArgs koszul;
  auto* k = app.add_subcommand("koszul", "Truncated cohomology of a Koszul complex");
  k->add_option("--vars", koszul.vars, "Comma-separated variables")->required();
  k->add_option("--gens", koszul.gens, "Generators separated by ';'")->required();
  k->add_option("--truncate", koszul.truncate, "Weight cutoff D");

  auto add_context = [](CLI::App* sub, ContextArgs& c, bool algebroid) {
    sub->add_option("--vars", c.vars, "Comma-separated variables")->required();
    sub->add_option("--c", c.c, "Volume coefficient c (omega = c dx_1 ^ ... ^ dx_n)");
    if (algebroid) sub->add_option("--algebroid", c.algebroid, "Lie algebroid presentation (JSON file)");
  };

  SchoutenArgs schouten;
  auto* s = app.add_subcommand("schouten", "Schouten bracket of two polyvectors");
  add_context(s, schouten.ctx, true);
  s->add_option("--lhs", schouten.lhs, "Left polyvector")->required();
  s->add_option("--rhs", schouten.rhs, "Right polyvector")->required();

  BvArgs bv;
  auto* b = app.add_subcommand("bv", "Apply the BV operator of c dx_1^...^dx_n twisted by phi once");
  add_context(b, bv.ctx, false);
  b->add_option("--phi", bv.phi, "One-form, or df:<poly>");
  b->add_option("--input", bv.input, "Polyvector")->required();

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Sampled identity suite");
  add_context(c, check.ctx, true);
  c->add_option("--kind", check.kind, "Identity kind")->required();
  c->add_option("--phi", check.phi, "One-form, or df:<poly>");
  c->add_option("--samples", check.sampler.samples, "Number of samples");
  c->add_option("--max-ext", check.sampler.max_ext, "Largest exterior degree");
  c->add_option("--max-deg", check.sampler.max_deg, "Largest polynomial degree");

  McArgs mc;
  auto* mcs = app.add_subcommand("mc", "Maurer-Cartan scheme and coalgebra complex of a finite dgla");
  mcs->add_option("action", mc.action, "equations | compare | cocycle")
      ->required()
      ->check(CLI::IsMember({"equations", "compare", "cocycle"}));
  mcs->add_option("--dgla", mc.dgla, "dg Lie algebra presentation (JSON file)")->required();
  mcs->add_option("--cutoff", mc.cutoff, "Symmetric degree cutoff D");
  mcs->add_option("--order", mc.order, "Artinian order s of Q[e]/(e^s)");
  mcs->add_option("--element", mc.element, "Coordinates of a in g^1, separated by ';'");

  DeformArgs deform;
  auto* d = app.add_subcommand("deform", "Associativity, deformations and truncated moduli of a finite algebra");
  d->add_option("--algebra", deform.algebra, "Algebra presentation (JSON file)")->required();
  d->add_option("--perturb", deform.perturb, "Perturbation over Q[e]/(e^s) (JSON file)");
  d->add_option("--moduli", deform.moduli, "Degree cutoff D for the moduli tables");

  std::vector<const char*> argv{"bvkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  std::string name = app.get_subcommands().front()->get_name();
  auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (name == "milnor") r = run_milnor(milnor);
    else if (name == "koszul") r = run_koszul(koszul);
    else if (name == "schouten") r = run_schouten(schouten);
    else if (name == "bv") r = run_bv(bv);
    else if (name == "check") r = run_check(check, seed);
    else if (name == "mc") r = run_mc(mc);
    else r = run_deform(deform);
    r.body["subcommand"] = name;
    if (r.body["result"].is_null()) r.body["result"] = Json::object();
    if (!r.body.contains("verdicts")) r.body["verdicts"] = Json::object();
    if (timing) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      r.body["timing_ms"] = ms;
    }
    emit(r.body, format, out);
    return r.failed ? kCheckFailed : kSuccess;
  } catch (const InputError& e) {
    if (format == "json")
      out << Json{{"subcommand", name}, {"error", e.what()}}.dump(2) << '\n';
    err << "bvkit " << name << ": " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bvkit::cli
