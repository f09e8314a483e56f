#pragma once

#include <string>

#include "json.hpp"

#include "hopfoid/diffmodule.hpp"
#include "hopfoid/dual.hpp"
#include "hopfoid/multipoly.hpp"
#include "hopfoid/pv.hpp"
#include "hopfoid/weyl.hpp"

namespace hopfoid {

using Json = nlohmann::json;

// { "rank": m, "matrix": [[poly-string]] }
Json module_to_json(const DiffModule& m);
DiffModule module_from_json(const Json& j);

// { "module": <module-json>, "functional": [poly-string],
//   "vector": [poly-string] }
Json dual_to_json(const DualClass& c);
DualClass dual_from_json(const Json& j);

// [[degree, poly-string], ...] in ascending degree.
Json weyl_to_json(const WeylElement& u);
WeylElement weyl_from_json(const Json& j, const WeylCtxPtr& ctx);

// { "order": n, "matrix": [[[poly-string per Z-power]]] }
Json fundamental_to_json(const FundamentalMatrix& f);
FundamentalMatrix fundamental_from_json(const Json& j);

// { "vars": [{"name": ..., "invertible": ...}],
//   "terms": [{"coeff": rational-string, "exps": [int]}] }
Json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string json_text(const Json& j);

}  // namespace hopfoid
