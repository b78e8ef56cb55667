#pragma once

#include <json.hpp>

#include "k3strat/polynomial.hpp"
#include "k3strat/qflag.hpp"
#include "k3strat/rational.hpp"
#include "k3strat/schubert.hpp"
#include "k3strat/strata.hpp"
#include "k3strat/weyl.hpp"

namespace k3strat {

// nlohmann objects keep keys sorted, so dumps are deterministic.
using Json = nlohmann::json;

Json json_of(const Rational& r);            // "num/den" string
Json json_of(const RationalPolynomial& q);  // rational strings by degree
Json json_of(const WeylElement& w);         // window, family, length, ...
Json json_of(const StratumDescriptor& d);
Json json_of(const ClassExpr& c);
Json json_of(const CoverDatum& c);          // {index, target_window}
Json json_of(const CensusMap& census);      // {cells: window -> count, total}

// Basis rows (a maximal isotropic chain) from a JSON array of integer arrays.
Matrix matrix_from_json(const Json& j);

// Comma-separated window such as "5,2"; rejects anything else.
std::vector<int> parse_window(const std::string& s);

}  // namespace k3strat
