#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvkit/bv.hpp"
#include "bvkit/random.hpp"

namespace bvkit {

enum class IdentityKind {
  gerstenhaber,
  bv,
  dg_leibniz,
  d_squared,
  cartan,
  transfer_equality,
  lemma_2_13,
  roundtrip_4_3,
  right_module,
  omega_roundtrip,
  absorb_slot,
};

std::string to_string(IdentityKind kind);
// Throws InputError on an unknown name.
IdentityKind parse_identity_kind(std::string_view name);
const std::vector<IdentityKind>& all_identity_kinds();

struct Sampler {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int max_ext = 3;
  int max_deg = 3;
  int max_terms = 3;
};

struct IdentitySetup {
  ContextPtr ctx;
  // Twisting one-form; zero when absent.
  std::optional<DifferentialForm> phi;
  // Overrides the connection built from (c, phi) for the bv and d_squared kinds.
  std::optional<Connection> connection;
};

struct Counterexample {
  std::string relation;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string identity;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first;  // set exactly when failures > 0
};

IdentityReport check_identities(IdentityKind kind, const IdentitySetup& setup, const Sampler& sampler);

// Seeded generators shared by the harness, tests and benchmarks. Coefficients
// carry a power of the denominator when the context is localized.
LocalizedElement random_scalar(Rng& rng, const ContextPtr& ctx, int max_deg, int max_terms = 3);
Polyvector random_polyvector(Rng& rng, const ContextPtr& ctx, int ext_degree, int max_deg, int max_terms = 3);
DifferentialForm random_form(Rng& rng, const ContextPtr& ctx, int degree, int max_deg, int max_terms = 3);
Connection random_connection(Rng& rng, const ContextPtr& ctx, int max_deg);
// d f for a random polynomial f.
DifferentialForm random_exact_form(Rng& rng, const ContextPtr& ctx, int max_deg);
// A one-form with nonzero de Rham differential; needs at least 2 variables.
DifferentialForm random_nonclosed_form(Rng& rng, const ContextPtr& ctx, int max_deg);

}  // namespace bvkit
