#pragma once

#include "curvelattice/k3.hpp"

#include "json.hpp"

#include <string>

namespace curvelattice {

using Json = nlohmann::ordered_json;

// Integers in JSON payloads: emitted as JSON numbers when they fit in 64
// bits, as base-10 strings otherwise; accepted in both forms.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& what);

// Rationals: integer encoding when integral, "p/q" string otherwise.
Json rat_to_json(const Rational& q);

Json class_to_json(const DivClass2& c);
DivClass2 class_from_json(const Json& j, const std::string& what);

// Model document: {"name": string, "gram": [[int,int],[int,int]],
// "hyperplane": [int,int], "minus_two_curves": [[int,int],...],
// "elliptic_pencils": [[int,int],...]}. Structural problems throw
// Errc::invalid_input; violated model invariants propagate from the K3Model
// constructor as Errc::invalid_model, naming the invariant.
K3Model model_from_json(const Json& j);
Json model_to_json(const K3Model& m);

// "q1" / "q2" for the built-ins, anything else is a path to a JSON model
// document.
K3Model load_model(const std::string& name_or_path);

}  // namespace curvelattice
