#pragma once

#include <string>

#include <json.hpp>

#include "fock/energy.hpp"
#include "fock/psst.hpp"
#include "fock/rational.hpp"
#include "fock/tableau.hpp"

namespace fock {

using Json = nlohmann::json;

// Alphabet: {"family": "...", "window": [lo,hi]} or
//           {"custom": [{"id": "a", "parity": "odd"}, ...]}
Json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);

// Tableau: {"alphabet": ..., "outer": [...], "inner": [...],
//           "rows": [["0'","1'"], ...]}
Json tableau_to_json(const SuperTableau& t);
SuperTableau tableau_from_json(const Json& j);

// Rational: {"n": 3, "shape": [4,3,0], "pos_rows": [...], "neg_rows": [...]}
Json rational_to_json(const RationalTableau& t);
RationalTableau rational_from_json(const Json& j);

// Psst: {"n":..., "shape":[...], "d":..., "mu":[...], "plus":..., "minus":...}
Json psst_to_json(const Psst& t);
Psst psst_from_json(const Json& j);

// FockTuple: {"alphabet_a":..., "alphabet_b":...,
//             "entries": [{"k":..., "plus_row":[...], "minus_row":[...]}]}
Json tuple_to_json(const FockTuple& t);
FockTuple tuple_from_json(const Json& j);

// AbMatrix: {"n":..., "alphabet_a":..., "alphabet_b":...,
//            "rows": [{"letter":"-4'","entries":[1,1,0]}, ...]}
Json matrix_to_json(const AbMatrix& m);
AbMatrix matrix_from_json(const Json& j);

/// Plain-text rendering of tableaux (one bracketed row per line).
std::string tableau_to_text(const SuperTableau& t);
std::string rational_to_text(const RationalTableau& t);
std::string psst_to_text(const Psst& t);

}  // namespace fock
