#pragma once

#include <string>

#include <json.hpp>

#include "bvkit/artinian.hpp"
#include "bvkit/dgla.hpp"
#include "bvkit/exterior.hpp"
#include "bvkit/hochschild.hpp"

namespace bvkit::cli {

using Json = nlohmann::json;

// Reads and parses a JSON file; InputError when unreadable or malformed.
Json load_json(const std::string& path);

// {"degrees": {"1": ["x"], "2": ["w"]},
//  "d": [{"from": "x", "to": {"w": "1"}}],
//  "bracket": [{"args": ["x", "x"], "out": {"w": "2"}}]}
GradedLieAlgebra parse_dgla(const Json& j);

// {"dim": 2, "basis": ["1", "u"], "mu": [[["1","0"],["0","1"]], [["0","1"],["0","0"]]]}
// where mu[a][b][c] is the coefficient of e_c in e_a e_b.
FiniteAlgebra parse_algebra(const Json& j);

// Same tensor shape with entries "a + b*e". The order s of Q[e]/(e^s) is the
// optional "order" field, otherwise one more than the highest power of e used (at least 2).
StructureTensor<Artinian> parse_perturbation(const Json& j);

// {"generators": ["e1", "e2"],
//  "anchor": {"e1": {"x": "1"}, "e2": {"y": "x"}},
//  "bracket": [{"args": ["e1", "e2"], "out": {"e2": "1"}}]}
// with polynomial strings over the declared variables.
LieAlgebroidPresentation parse_algebroid(const Json& j, const std::vector<std::string>& vars);

}  // namespace bvkit::cli
