#pragma once

#include <string>
#include <vector>

#include "bvkit/random.hpp"

namespace bvkit::testing {

using bvkit::Rng;
using bvkit::random_polynomial;

inline std::vector<std::string> var_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 6 ? names[i] : "x" + std::to_string(i));
  return out;
}

}  // namespace bvkit::testing
