#include "bvkit/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bvkit {

namespace {

struct KindName {
  IdentityKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {IdentityKind::gerstenhaber, "gerstenhaber"},
    {IdentityKind::bv, "bv"},
    {IdentityKind::dg_leibniz, "dg_leibniz"},
    {IdentityKind::d_squared, "d_squared"},
    {IdentityKind::cartan, "cartan"},
    {IdentityKind::transfer_equality, "transfer_equality"},
    {IdentityKind::lemma_2_13, "lemma_2_13"},
    {IdentityKind::roundtrip_4_3, "roundtrip_4_3"},
    {IdentityKind::right_module, "right_module"},
    {IdentityKind::omega_roundtrip, "omega_roundtrip"},
    {IdentityKind::absorb_slot, "absorb_slot"},
};

}  // namespace

std::string to_string(IdentityKind kind) {
  for (const auto& k : kKindNames)
    if (k.kind == kind) return k.name;
  return "unknown";
}

IdentityKind parse_identity_kind(std::string_view name) {
  for (const auto& k : kKindNames)
    if (name == k.name) return k.kind;
  throw InputError("unknown identity kind '" + std::string(name) + "'");
}

const std::vector<IdentityKind>& all_identity_kinds() {
  static const std::vector<IdentityKind> kinds = [] {
    std::vector<IdentityKind> v;
    for (const auto& k : kKindNames) v.push_back(k.kind);
    return v;
  }();
  return kinds;
}

LocalizedElement random_scalar(Rng& rng, const ContextPtr& ctx, int max_deg, int max_terms) {
  Polynomial p = random_polynomial(rng, ctx->nvars(), max_deg, max_terms);
  if (!ctx->localization()->is_trivial() && rng.below(3) == 0)
    return LocalizedElement(ctx->localization(), std::move(p), static_cast<unsigned>(rng.range(1, 2)));
  return ctx->from(p);
}

namespace {

Blade random_blade(Rng& rng, std::size_t dim, int size) {
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  Blade b = 0;
  for (int k = 0; k < size; ++k) {
    std::size_t pick = k + rng.below(dim - k);
    std::swap(idx[k], idx[pick]);
    b |= blade_bit(idx[k]);
  }
  return b;
}

template <class E>
E random_element(Rng& rng, const ContextPtr& ctx, int degree, int max_deg, int max_terms) {
  E out(ctx);
  int dim = static_cast<int>(out.dimension());
  degree = std::clamp(degree, 0, dim);
  int terms = rng.range(1, std::max(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    Blade b = random_blade(rng, static_cast<std::size_t>(dim), degree);
    out.add_term(b, random_scalar(rng, ctx, max_deg, 3));
  }
  return out;
}

}  // namespace

Polyvector random_polyvector(Rng& rng, const ContextPtr& ctx, int ext_degree, int max_deg, int max_terms) {
  return random_element<Polyvector>(rng, ctx, ext_degree, max_deg, max_terms);
}

DifferentialForm random_form(Rng& rng, const ContextPtr& ctx, int degree, int max_deg, int max_terms) {
  return random_element<DifferentialForm>(rng, ctx, degree, max_deg, max_terms);
}

Connection random_connection(Rng& rng, const ContextPtr& ctx, int max_deg) {
  Connection conn = Connection::zero(ctx);
  for (auto& v : conn.values) v = random_scalar(rng, ctx, max_deg, 3);
  return conn;
}

DifferentialForm random_exact_form(Rng& rng, const ContextPtr& ctx, int max_deg) {
  return exact_form(ctx, ctx->from(random_polynomial(rng, ctx->nvars(), max_deg + 1, 4)));
}

DifferentialForm random_nonclosed_form(Rng& rng, const ContextPtr& ctx, int max_deg) {
  if (ctx->nvars() < 2) throw InputError("every one-form in one variable is closed");
  while (true) {
    DifferentialForm phi = random_form(rng, ctx, 1, std::max(1, max_deg), 3);
    if (!de_rham_d(phi).is_zero()) return phi;
  }
}

namespace {

Rational sign_of(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

std::string show(const Polyvector& u) { return to_string(u); }
std::string show(const DifferentialForm& u) { return to_string(u); }

std::string show(const Connection& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i) out += ", ";
    out += to_string_in(c.values[i], c.ctx);
  }
  return out + "]";
}

using Inputs = std::vector<std::pair<std::string, std::string>>;

// Runs the per-sample checks; the first failing relation of a sample is kept.
class Harness {
 public:
  Harness(std::string name, const Sampler& s) : rng_(s.seed) { report_.identity = std::move(name); }

  Rng& rng() { return rng_; }
  IdentityReport& report() { return report_; }

  void begin_sample() {
    ++report_.samples;
    failed_ = false;
  }

  template <class E>
  bool expect_equal(const std::string& relation, const Inputs& inputs, const E& lhs, const E& rhs) {
    if (lhs == rhs) return true;
    if (!failed_) {
      failed_ = true;
      ++report_.failures;
      if (!report_.first) report_.first = Counterexample{relation, inputs, show(lhs), show(rhs)};
    }
    return false;
  }

 private:
  Rng rng_;
  IdentityReport report_;
  bool failed_ = false;
};

struct Env {
  ContextPtr ctx;
  DifferentialForm phi;
  const Sampler& s;

  int ext(Rng& rng) const { return rng.range(0, std::min<int>(s.max_ext, static_cast<int>(ctx->rank()))); }
  Polyvector poly(Rng& rng, int p) const { return random_polyvector(rng, ctx, p, s.max_deg, s.max_terms); }
  Polyvector field(Rng& rng) const { return poly(rng, 1); }
};

Connection default_connection(const IdentitySetup& setup, const DifferentialForm& phi) {
  if (setup.connection) return *setup.connection;
  const auto& ctx = setup.ctx;
  if (ctx->is_tangent()) return connection_from_volume(ctx, phi);
  Connection conn = Connection::zero(ctx);
  for (std::size_t k = 0; k < ctx->rank(); ++k) conn.values[k] = pairing(Polyvector::generator(ctx, k), phi);
  return conn;
}

void run_gerstenhaber(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  int p = env.ext(rng), q = env.ext(rng), r = env.ext(rng);
  Polyvector a = env.poly(rng, p), b = env.poly(rng, q), c = env.poly(rng, r);
  long da = -p, db = -q, dc = -r;
  Inputs in = {{"a", show(a)}, {"b", show(b)}, {"c", show(c)}};
  auto br = [](const Polyvector& x, const Polyvector& y) { return schouten_bracket(x, y); };
  h.expect_equal("a^b = (-1)^{|a||b|} b^a", in, wedge(a, b), sign_of(da * db) * wedge(b, a)) &&
      h.expect_equal("[a,b] = -(-1)^{(|a|-1)(|b|-1)} [b,a]", in, br(a, b),
                     -(sign_of((da - 1) * (db - 1)) * br(b, a))) &&
      h.expect_equal("[a,b^c] = [a,b]^c + (-1)^{(|a|-1)|b|} b^[a,c]", in, br(a, wedge(b, c)),
                     wedge(br(a, b), c) + sign_of((da - 1) * db) * wedge(b, br(a, c))) &&
      h.expect_equal("[a^b,c] = a^[b,c] + (-1)^{(|c|-1)|b|} [a,c]^b", in, br(wedge(a, b), c),
                     wedge(a, br(b, c)) + sign_of((dc - 1) * db) * wedge(br(a, c), b)) &&
      h.expect_equal("[a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]", in, br(a, br(b, c)),
                     br(br(a, b), c) + sign_of((da - 1) * (db - 1)) * br(b, br(a, c)));
}

void run_bv(Harness& h, const Env& env, const PolyvectorOperator& d) {
  Rng& rng = h.rng();
  int p = env.ext(rng), q = env.ext(rng);
  Polyvector a = env.poly(rng, p), b = env.poly(rng, q);
  long da = -p;
  Inputs in = {{"a", show(a)}, {"b", show(b)}};
  h.expect_equal("(-1)^{|a|}[a,b] = d(ab) - d(a)b - (-1)^{|a|} a d(b)", in,
                 sign_of(da) * schouten_bracket(a, b),
                 d(wedge(a, b)) - wedge(d(a), b) - sign_of(da) * wedge(a, d(b)));
}

void run_dg_leibniz(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  int p = env.ext(rng), q = env.ext(rng);
  Polyvector a = env.poly(rng, p), b = env.poly(rng, q);
  long da = -p;
  auto d = [&](const Polyvector& u) { return koszul_differential(env.phi, u); };
  Inputs in = {{"a", show(a)}, {"b", show(b)}, {"phi", show(env.phi)}};
  h.expect_equal("d[a,b] = [da,b] + (-1)^{|a|-1}[a,db]", in, d(schouten_bracket(a, b)),
                 schouten_bracket(d(a), b) + sign_of(da - 1) * schouten_bracket(a, d(b)));
}

void run_d_squared(Harness& h, const Env& env, const PolyvectorOperator& d) {
  Rng& rng = h.rng();
  Polyvector u = env.poly(rng, env.ext(rng));
  Inputs in = {{"u", show(u)}, {"phi", show(env.phi)}};
  h.expect_equal("d(d(u)) = 0", in, d(d(u)), Polyvector(env.ctx));
}

void run_cartan(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  Polyvector tau = env.field(rng);
  DifferentialForm eta =
      random_form(rng, env.ctx, rng.range(0, static_cast<int>(env.ctx->nvars())), env.s.max_deg, env.s.max_terms);
  Inputs in = {{"tau", show(tau)}, {"eta", show(eta)}};
  h.expect_equal("Lie_tau = i_tau d + d i_tau", in, lie_derivative(tau, eta),
                 contract(tau, de_rham_d(eta)) + de_rham_d(contract(tau, eta)));
}

void run_transfer(Harness& h, const Env& env, const PolyvectorOperator& bv_path) {
  Rng& rng = h.rng();
  Polyvector u = env.poly(rng, env.ext(rng));
  Inputs in = {{"u", show(u)}, {"phi", show(env.phi)}};
  h.expect_equal("bv path = form path", in, bv_path(u), form_path_operator(env.phi, u));
}

void run_lemma_2_13(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  Polyvector t1 = env.field(rng), t2 = env.field(rng);
  const auto& ctx = env.ctx;
  Inputs in = {{"tau1", show(t1)}, {"tau2", show(t2)}, {"phi", show(env.phi)}};
  LocalizedElement lhs = pairing(schouten_bracket(t1, t2), env.phi);
  LocalizedElement rhs = apply_vector_field(t1, pairing(t2, env.phi)) - apply_vector_field(t2, pairing(t1, env.phi));
  h.expect_equal("<[t1,t2],phi> = t1<t2,phi> - t2<t1,phi>", in, Polyvector::scalar(ctx, lhs),
                 Polyvector::scalar(ctx, rhs));
}

void run_roundtrip(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  const auto& ctx = env.ctx;
  Connection conn = random_connection(rng, ctx, env.s.max_deg);
  Connection back = connection_from_bv(ctx, bv_operator(conn));
  if (!(back == conn)) {
    h.expect_equal("connection -> BV -> connection", {{"connection", show(conn)}},
                   Polyvector::scalar(ctx, ctx->zero()), Polyvector::scalar(ctx, ctx->from(Rational(1))));
    return;
  }
  PolyvectorOperator d;
  std::string source;
  if (ctx->is_tangent()) {
    DifferentialForm phi = env.phi;
    d = [phi](const Polyvector& u) { return form_path_operator(phi, u); };
    source = "form path with phi = " + show(phi);
  } else {
    Connection other = random_connection(rng, ctx, env.s.max_deg);
    d = bv_operator(other);
    source = "connection " + show(other);
  }
  Connection extracted = connection_from_bv(ctx, d);
  Polyvector u = env.poly(rng, env.ext(rng));
  h.expect_equal("BV -> connection -> BV", {{"operator", source}, {"u", show(u)}},
                 bv_from_connection(extracted, u), d(u));
}

void run_right_module(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  const auto& ctx = env.ctx;
  DifferentialForm omega =
      random_form(rng, ctx, static_cast<int>(ctx->nvars()), env.s.max_deg, 1);
  Polyvector t1 = env.field(rng), t2 = env.field(rng);
  LocalizedElement a = random_scalar(rng, ctx, env.s.max_deg, 3);
  auto act = [](const DifferentialForm& w, const Polyvector& t) { return right_action_top_form(w, t); };
  Inputs in = {{"omega", show(omega)}, {"tau1", show(t1)}, {"tau2", show(t2)},
               {"a", to_string_in(a, ctx)}};
  h.expect_equal("omega.(a tau) = (a omega).tau", in, act(omega, a * t1), act(a * omega, t1)) &&
      h.expect_equal("a(omega.tau) = omega.(a tau) + tau(a) omega", in, a * act(omega, t1),
                     act(omega, a * t1) + apply_vector_field(t1, a) * omega) &&
      h.expect_equal("(omega.t1).t2 - (omega.t2).t1 = omega.[t1,t2]", in,
                     act(act(omega, t1), t2) - act(act(omega, t2), t1), act(omega, schouten_bracket(t1, t2)));
}

void run_omega_roundtrip(Harness& h, const Env& env) {
  Rng& rng = h.rng();
  Polyvector u = env.poly(rng, env.ext(rng));
  Inputs in = {{"u", show(u)}, {"phi", show(env.phi)}};
  h.expect_equal("omega_*^-1 omega_* u = u", in, omega_to_polyvectors(omega_to_forms(u)), u) &&
      h.expect_equal("omega_*(koszul(phi, u)) = phi ^ omega_*(u)", in,
                     omega_to_forms(koszul_differential(env.phi, u)), wedge(env.phi, omega_to_forms(u)));
}

void run_absorb_slot(Harness& h, const Env& env, const std::optional<Connection>& fixed) {
  Rng& rng = h.rng();
  const auto& ctx = env.ctx;
  Connection conn = fixed ? *fixed : random_connection(rng, ctx, env.s.max_deg);
  int top = std::min<int>(std::max(env.s.max_ext, 2), static_cast<int>(ctx->rank()));
  Polyvector u = env.poly(rng, rng.range(std::min(2, top), top));
  Polyvector base = bv_from_connection(conn, u, 0);
  for (int s = 1; s < top; ++s) {
    Inputs in = {{"connection", show(conn)}, {"u", show(u)}, {"slot", std::to_string(s)}};
    if (!h.expect_equal("absorbing the coefficient into another slot", in, bv_from_connection(conn, u, s), base))
      break;
  }
}

}  // namespace

IdentityReport check_identities(IdentityKind kind, const IdentitySetup& setup, const Sampler& sampler) {
  const auto& ctx = setup.ctx;
  if (!ctx) throw InputError("identity check needs a context");
  DifferentialForm phi = setup.phi ? *setup.phi : DifferentialForm(ctx);
  if (phi.context() != ctx) throw InputError("context mismatch");
  for (const auto& [b, a] : phi.terms())
    if (blade_degree(b) != 1) throw InputError("phi must be a one-form");
  if (!ctx->is_tangent() &&
      (kind == IdentityKind::transfer_equality || kind == IdentityKind::omega_roundtrip))
    throw InputError(to_string(kind) + " needs the tangent algebroid");

  Env env{ctx, phi, sampler};
  Harness h(to_string(kind), sampler);
  PolyvectorOperator d;
  if (kind == IdentityKind::bv || kind == IdentityKind::d_squared || kind == IdentityKind::transfer_equality)
    d = bv_operator(default_connection(setup, phi));

  for (std::size_t i = 0; i < sampler.samples; ++i) {
    h.begin_sample();
    switch (kind) {
      case IdentityKind::gerstenhaber: run_gerstenhaber(h, env); break;
      case IdentityKind::bv: run_bv(h, env, d); break;
      case IdentityKind::dg_leibniz: run_dg_leibniz(h, env); break;
      case IdentityKind::d_squared: run_d_squared(h, env, d); break;
      case IdentityKind::cartan: run_cartan(h, env); break;
      case IdentityKind::transfer_equality: run_transfer(h, env, d); break;
      case IdentityKind::lemma_2_13: run_lemma_2_13(h, env); break;
      case IdentityKind::roundtrip_4_3: run_roundtrip(h, env); break;
      case IdentityKind::right_module: run_right_module(h, env); break;
      case IdentityKind::omega_roundtrip: run_omega_roundtrip(h, env); break;
      case IdentityKind::absorb_slot: run_absorb_slot(h, env, setup.connection); break;
    }
  }
  return h.report();
}

}  // namespace bvkit
