#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bvkit/exterior.hpp"

namespace bvkit {

// A right connection, given by its values on the generators and extended by
// nabla(a tau) = a nabla(tau) - tau(a).
struct Connection {
  ContextPtr ctx;
  std::vector<LocalizedElement> values;

  static Connection zero(const ContextPtr& ctx);
  LocalizedElement apply(const Polyvector& tau) const;
  friend bool operator==(const Connection& a, const Connection& b) {
    return a.ctx == b.ctx && a.values == b.values;
  }
};

using PolyvectorOperator = std::function<Polyvector(const Polyvector&)>;

// nabla(d/dx_i) = -d_i(c)/c + phi_i, the connection of the volume form
// c dx_1^...^dx_n twisted by phi. Tangent contexts only.
Connection connection_from_volume(const ContextPtr& ctx, const DifferentialForm& phi);

// The degree +1 operator of a connection: on tau_1^...^tau_p,
//   sum_j (-1)^{j-1} nabla(tau_j) tau_1^..^tau_j-hat^..^tau_p
//   + sum_{i<j} (-1)^{i+j} [tau_i, tau_j] ^ tau_1^..-hat..-hat..^tau_p.
// A blade's coefficient is absorbed into the factor at absorb_slot (clamped
// to the last factor); the result does not depend on the slot.
Polyvector bv_from_connection(const Connection& conn, const Polyvector& u, std::size_t absorb_slot = 0);
PolyvectorOperator bv_operator(const Connection& conn);

// Reads nabla(e_i) off the function component of d(e_i).
Connection connection_from_bv(const ContextPtr& ctx, const PolyvectorOperator& d);

// Contraction with phi: sum_j (-1)^{j-1} <tau_j, phi> tau_1^..-hat..^tau_p.
Polyvector koszul_differential(const DifferentialForm& phi, const Polyvector& u);

// omega_*^{-1} o (-d_DR + phi ^) o omega_*. Tangent contexts only.
Polyvector form_path_operator(const DifferentialForm& phi, const Polyvector& u);

}  // namespace bvkit
