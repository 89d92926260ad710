#include "json_io.hpp"

#include <fstream>

#include "bvkit/error.hpp"

namespace bvkit::cli {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(where + ": expected a string");
}

Rational rational(const Json& j, const std::string& where) {
  try {
    return parse_rational(text(j, where));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

// Dense vector over g from {"label": "coeff", ...}.
DenseVector combination(const GradedLieAlgebra& g, const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object of label -> coefficient");
  DenseVector v = g.zero();
  for (const auto& [label, c] : j.items()) v[g.index(label)] += rational(c, where);
  return v;
}

template <class Scalar, class Parse>
StructureTensor<Scalar> tensor(const Json& j, Parse parse) {
  const Json& dim_j = field(j, "dim", "algebra");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) throw InputError("algebra: dim must be a positive integer");
  std::size_t n = dim_j.get<std::size_t>();
  std::vector<std::string> basis;
  if (j.contains("basis"))
    for (const auto& b : j.at("basis")) basis.push_back(text(b, "algebra basis"));
  StructureTensor<Scalar> t(n, basis);
  const Json& mu = field(j, "mu", "algebra");
  auto shape = [&](const Json& x) {
    if (!x.is_array() || x.size() != n) throw InputError("algebra: mu must be a dim x dim x dim array");
  };
  shape(mu);
  for (std::size_t a = 0; a < n; ++a) {
    shape(mu[a]);
    for (std::size_t b = 0; b < n; ++b) {
      shape(mu[a][b]);
      for (std::size_t c = 0; c < n; ++c)
        t.at(a, b, c) = parse(mu[a][b][c], "mu[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
                                               std::to_string(c) + "]");
    }
  }
  return t;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

GradedLieAlgebra parse_dgla(const Json& j) {
  const Json& deg = field(j, "degrees", "dgla");
  if (!deg.is_object()) throw InputError("dgla: degrees must be an object");
  std::map<int, std::vector<std::string>> degrees;
  for (const auto& [key, labels] : deg.items()) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("dgla: degree key \"" + key + "\" is not an integer");
    }
    for (const auto& l : labels) degrees[d].push_back(text(l, "dgla degrees"));
  }
  GradedLieAlgebra g(degrees);
  if (j.contains("d"))
    for (const auto& entry : j.at("d"))
      g.set_differential(g.index(text(field(entry, "from", "dgla d"), "dgla d")),
                         combination(g, field(entry, "to", "dgla d"), "dgla d"));
  if (j.contains("bracket"))
    for (const auto& entry : j.at("bracket")) {
      const Json& args = field(entry, "args", "dgla bracket");
      if (!args.is_array() || args.size() != 2) throw InputError("dgla bracket: args must list two labels");
      g.set_bracket(g.index(text(args[0], "dgla bracket")), g.index(text(args[1], "dgla bracket")),
                    combination(g, field(entry, "out", "dgla bracket"), "dgla bracket"));
    }
  return g;
}

FiniteAlgebra parse_algebra(const Json& j) {
  return tensor<Rational>(j, [](const Json& x, const std::string& where) { return rational(x, where); });
}

StructureTensor<Artinian> parse_perturbation(const Json& j) {
  constexpr int kProbe = 64;
  auto raw = tensor<Artinian>(j, [](const Json& x, const std::string& where) {
    try {
      return parse_artinian(text(x, where), kProbe);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  });
  int order = 2;
  if (j.contains("order")) {
    if (!j.at("order").is_number_integer() || j.at("order").get<int>() < 1)
      throw InputError("perturbation: order must be a positive integer");
    order = j.at("order").get<int>();
  } else {
    for (const auto& x : raw.mu) order = std::max(order, static_cast<int>(x.coefficients().size()));
  }
  for (auto& x : raw.mu) x = x.with_order(order);
  return raw;
}

LieAlgebroidPresentation parse_algebroid(const Json& j, const std::vector<std::string>& vars) {
  LieAlgebroidPresentation alg;
  for (const auto& g : field(j, "generators", "algebroid")) alg.names.push_back(text(g, "algebroid generators"));
  auto generator = [&](const std::string& name) {
    for (std::size_t k = 0; k < alg.names.size(); ++k)
      if (alg.names[k] == name) return k;
    throw InputError("algebroid: unknown generator \"" + name + "\"");
  };
  auto variable = [&](const std::string& name) {
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) return k;
    throw InputError("algebroid: unknown variable \"" + name + "\"");
  };
  auto poly = [&](const Json& x, const std::string& where) {
    try {
      return parse_polynomial(text(x, where), vars);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  };
  alg.anchor.assign(alg.names.size(), std::vector<Polynomial>(vars.size(), Polynomial(vars.size())));
  const Json& anchor = field(j, "anchor", "algebroid");
  for (const auto& [gen, comps] : anchor.items())
    for (const auto& [var, p] : comps.items()) alg.anchor[generator(gen)][variable(var)] = poly(p, "algebroid anchor");
  if (j.contains("bracket"))
    for (const auto& entry : j.at("bracket")) {
      const Json& args = field(entry, "args", "algebroid bracket");
      if (!args.is_array() || args.size() != 2) throw InputError("algebroid bracket: args must list two generators");
      std::vector<Polynomial> out(alg.names.size(), Polynomial(vars.size()));
      for (const auto& [gen, p] : field(entry, "out", "algebroid bracket").items())
        out[generator(gen)] = poly(p, "algebroid bracket");
      alg.structure[{generator(text(args[0], "algebroid bracket")), generator(text(args[1], "algebroid bracket"))}] =
          out;
    }
  return alg;
}

}  // namespace bvkit::cli
