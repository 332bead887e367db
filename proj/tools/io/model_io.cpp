#include "io/model_io.hpp"

#include "curvelattice/error.hpp"

#include <fstream>
#include <limits>

namespace curvelattice {

Json int_to_json(const Int& v) {
  static const Int kMin(std::numeric_limits<int64_t>::min());
  static const Int kMax(std::numeric_limits<int64_t>::max());
  if (v >= kMin && v <= kMax) {
    return Json(v.convert_to<int64_t>());
  }
  return Json(v.str());
}

Int int_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<uint64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(Errc::invalid_input,
       what + " must be an integer (number or base-10 string), got " +
           j.dump());
}

Json rat_to_json(const Rational& q) {
  if (is_integer(q)) return int_to_json(numer(q));
  return Json(numer(q).str() + "/" + denom(q).str());
}

Json class_to_json(const DivClass2& c) {
  return Json::array({int_to_json(c.a), int_to_json(c.b)});
}

DivClass2 class_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) {
    fail(Errc::invalid_input,
         what + " must be a two-element array [a,b], got " + j.dump());
  }
  return DivClass2{int_from_json(j[0], what + "[0]"),
                   int_from_json(j[1], what + "[1]")};
}

namespace {

std::vector<DivClass2> class_list_from_json(const Json& j,
                                            const std::string& what) {
  if (!j.is_array()) {
    fail(Errc::invalid_input, what + " must be an array of [a,b] pairs");
  }
  std::vector<DivClass2> out;
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(class_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

K3Model model_from_json(const Json& j) {
  if (!j.is_object()) {
    fail(Errc::invalid_input, "model document must be a JSON object");
  }
  for (const char* key : {"name", "gram", "hyperplane", "minus_two_curves",
                          "elliptic_pencils"}) {
    if (!j.contains(key)) {
      fail(Errc::invalid_input,
           std::string("model document is missing \"") + key + "\"");
    }
  }
  if (!j["name"].is_string()) {
    fail(Errc::invalid_input, "model \"name\" must be a string");
  }
  const Json& gj = j["gram"];
  if (!gj.is_array() || gj.size() != 2 || !gj[0].is_array() ||
      !gj[1].is_array() || gj[0].size() != 2 || gj[1].size() != 2) {
    fail(Errc::invalid_input, "model \"gram\" must be a 2x2 array");
  }
  Int g11 = int_from_json(gj[0][0], "gram[0][0]");
  Int g12 = int_from_json(gj[0][1], "gram[0][1]");
  Int g21 = int_from_json(gj[1][0], "gram[1][0]");
  Int g22 = int_from_json(gj[1][1], "gram[1][1]");
  if (g12 != g21) {
    fail(Errc::invalid_model,
         "gram matrix must be symmetric: entries [0][1] = " + g12.str() +
             " and [1][0] = " + g21.str() + " differ");
  }
  return K3Model(j["name"].get<std::string>(), Gram2(g11, g12, g22),
                 class_from_json(j["hyperplane"], "hyperplane"),
                 class_list_from_json(j["minus_two_curves"],
                                      "minus_two_curves"),
                 class_list_from_json(j["elliptic_pencils"],
                                      "elliptic_pencils"));
}

Json model_to_json(const K3Model& m) {
  Json j = Json::object();
  j["name"] = m.name();
  j["gram"] = Json::array(
      {Json::array({int_to_json(m.gram().g11()), int_to_json(m.gram().g12())}),
       Json::array(
           {int_to_json(m.gram().g12()), int_to_json(m.gram().g22())})});
  j["hyperplane"] = class_to_json(m.hyperplane());
  Json curves = Json::array();
  for (const DivClass2& c : m.minus_two_curves()) {
    curves.push_back(class_to_json(c));
  }
  j["minus_two_curves"] = curves;
  Json pencils = Json::array();
  for (const DivClass2& e : m.elliptic_pencils()) {
    pencils.push_back(class_to_json(e));
  }
  j["elliptic_pencils"] = pencils;
  return j;
}

K3Model load_model(const std::string& name_or_path) {
  if (name_or_path == "q1") return K3Model::q1();
  if (name_or_path == "q2") return K3Model::q2();
  std::ifstream in(name_or_path);
  if (!in) {
    fail(Errc::invalid_input,
         "cannot open model file \"" + name_or_path + "\"");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, "model file \"" + name_or_path +
                                  "\" is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

}  // namespace curvelattice
