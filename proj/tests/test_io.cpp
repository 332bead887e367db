#include "doctest.h"

#include "curvelattice/error.hpp"
#include "io/model_io.hpp"
#include "io/report.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <string>

using namespace curvelattice;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_input;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << contents;
  return p;
}
}  // namespace

TEST_CASE("integer JSON encoding") {
  CHECK(int_to_json(Int(42)).is_number_integer());
  CHECK(int_to_json(Int(42)).get<int64_t>() == 42);
  CHECK(int_to_json(Int(-7)).get<int64_t>() == -7);

  Int i64max(std::numeric_limits<int64_t>::max());
  CHECK(int_to_json(i64max).is_number_integer());
  CHECK(int_to_json(i64max + 1).is_string());
  CHECK(int_to_json(i64max + 1).get<std::string>() ==
        "9223372036854775808");

  Int big = parse_int("-123456789012345678901234567890");
  Json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j, "x") == big);
  CHECK(int_from_json(Json(17), "x") == 17);
  CHECK(int_from_json(Json(std::string("99")), "x") == 99);

  CHECK(code_of([] { int_from_json(Json(true), "x"); }) ==
        Errc::invalid_input);
  CHECK(code_of([] { int_from_json(Json("12x"), "x"); }) ==
        Errc::invalid_input);
  CHECK(code_of([] { int_from_json(Json::array(), "x"); }) ==
        Errc::invalid_input);
}

TEST_CASE("rational JSON encoding") {
  CHECK(rat_to_json(ratio(6, 2)) == Json(3));
  CHECK(rat_to_json(ratio(7, 2)) == Json("7/2"));
  CHECK(rat_to_json(ratio(-7, 2)) == Json("-7/2"));
  CHECK(rat_to_json(Rational(0)) == Json(0));
}

TEST_CASE("class JSON round trip") {
  DivClass2 c{Int(3), Int(-2)};
  Json j = class_to_json(c);
  CHECK(j == Json::array({3, -2}));
  CHECK(class_from_json(j, "class") == c);

  CHECK(code_of([] { class_from_json(Json::array({1}), "c"); }) ==
        Errc::invalid_input);
  CHECK(code_of([] { class_from_json(Json("ab"), "c"); }) ==
        Errc::invalid_input);
  CHECK(code_of([] {
          class_from_json(Json::array({1, Json("x")}), "c");
        }) == Errc::invalid_input);
}

TEST_CASE("model JSON round trip") {
  for (const K3Model& m : {K3Model::q1(), K3Model::q2()}) {
    Json j = model_to_json(m);
    // through text and back, losslessly
    K3Model back = model_from_json(Json::parse(j.dump()));
    CHECK(model_to_json(back) == j);
    CHECK(back.name() == m.name());
    CHECK(back.hyperplane() == m.hyperplane());
    CHECK(back.minus_two_curves() == m.minus_two_curves());
    CHECK(back.elliptic_pencils() == m.elliptic_pencils());
  }
}

TEST_CASE("model JSON validation") {
  Json good = model_to_json(K3Model::q1());

  // structural problems are input errors
  CHECK(code_of([] { model_from_json(Json::array()); }) ==
        Errc::invalid_input);
  for (const char* key : {"name", "gram", "hyperplane", "minus_two_curves",
                          "elliptic_pencils"}) {
    Json j = good;
    j.erase(key);
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_input);
  }
  {
    Json j = good;
    j["name"] = 5;
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_input);
  }
  {
    Json j = good;
    j["gram"] = Json::array({Json::array({-2, 3})});
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_input);
  }
  {
    Json j = good;
    j["minus_two_curves"] = Json::object();
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_input);
  }

  // violated lattice invariants are model errors
  {
    Json j = good;
    j["gram"][0][1] = 4;  // asymmetric: [0][1] != [1][0]
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_model);
  }
  {
    Json j = good;
    j["gram"][0][0] = -3;  // odd diagonal
    j["gram"][1][1] = 0;
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_model);
  }
  {
    Json j = good;
    j["hyperplane"] = Json::array({0, 2});  // H^2 != 4
    CHECK(code_of([&] { model_from_json(j); }) == Errc::invalid_model);
  }
}

TEST_CASE("load_model resolves built-ins and files") {
  CHECK(load_model("q1").name() == "q1");
  CHECK(load_model("q2").name() == "q2");

  Json doc = model_to_json(K3Model::q1());
  doc["name"] = "custom";
  auto path = temp_file("curvelattice_model_ok.json", doc.dump());
  K3Model m = load_model(path.string());
  CHECK(m.name() == "custom");
  CHECK(m.hyperplane() == K3Model::q1().hyperplane());

  CHECK(code_of([] { load_model("/nonexistent/model.json"); }) ==
        Errc::invalid_input);

  auto bad = temp_file("curvelattice_model_bad.json", "{not json");
  CHECK(code_of([&] { load_model(bad.string()); }) == Errc::invalid_input);
}

TEST_CASE("run report round trip") {
  RunReport r;
  r.command = "classify";
  r.model = "q1";
  r.inputs["class"] = Json::array({8, 6});
  r.result["kind"] = "NonReducedComponent";
  r.checks["verified"] = true;
  r.wall_ms = 1.25;

  Json j = report_to_json(r);
  CHECK(j.contains("model"));
  CHECK(j.contains("wall_time_ms"));
  CHECK(report_from_json(j) == r);

  // model and wall time are optional and omitted when absent
  RunReport bare;
  bare.command = "maxgenus";
  bare.result["G"] = 80;
  Json jb = report_to_json(bare);
  CHECK_FALSE(jb.contains("model"));
  CHECK_FALSE(jb.contains("wall_time_ms"));
  CHECK(report_from_json(jb) == bare);
  CHECK_FALSE(report_from_json(jb) == r);

  for (const char* key : {"command", "inputs", "result", "checks"}) {
    Json broken = j;
    broken.erase(key);
    CHECK(code_of([&] { report_from_json(broken); }) == Errc::invalid_input);
  }
  CHECK(code_of([] { report_from_json(Json("x")); }) == Errc::invalid_input);
  {
    Json broken = j;
    broken["command"] = 3;
    CHECK(code_of([&] { report_from_json(broken); }) == Errc::invalid_input);
  }
}

TEST_CASE("CSV rendering") {
  const std::string header =
      "a,b,d,g,h1_I4,kind,dim_w,tangent_dim,criteria\n";

  RunReport r;
  r.command = "enumerate";
  Json row1 = Json::object();
  row1["a"] = 8;
  row1["b"] = 6;
  row1["d"] = 26;
  row1["g"] = 81;
  row1["h1_I4"] = 1;
  row1["kind"] = "NonReducedComponent";
  row1["dim_w"] = 114;
  row1["tangent_dim"] = 115;
  row1["criteria"] = Json::array({"x", "y"});
  Json row2 = Json::object();  // sparse: nulls and missing keys give empty
  row2["a"] = 1;
  row2["b"] = 0;
  row2["kind"] = "NotApplicable";
  row2["dim_w"] = nullptr;
  r.result["rows"] = Json::array({row1, row2});

  CHECK(render_csv(r) ==
        header + "8,6,26,81,1,NonReducedComponent,114,115,x;y\n" +
            "1,0,,,,NotApplicable,,,\n");

  // single classify verdict, including one with no dim_w/tangent_dim
  RunReport s;
  s.command = "classify";
  s.result["kind"] = "NotApplicable";
  s.result["class"] = Json::array({3, 3});
  s.result["d"] = 12;
  s.result["g"] = 10;
  s.result["h1_ideal_4"] = 0;
  s.result["criteria"] = Json::array();
  CHECK(render_csv(s) == header + "3,3,12,10,0,NotApplicable,,,\n");

  // empty row set: header only
  RunReport e;
  e.command = "enumerate";
  e.result["rows"] = Json::array();
  CHECK(render_csv(e) == header);

  // non-row-shaped results refuse CSV
  RunReport m;
  m.command = "maxgenus";
  m.result["G"] = 80;
  CHECK(code_of([&] { return render_csv(m); }) == Errc::invalid_input);
}

TEST_CASE("table rendering") {
  RunReport r;
  r.command = "classify";
  r.model = "q1";
  r.inputs["class"] = Json::array({8, 6});
  r.result["kind"] = "NonReducedComponent";
  r.result["reason"] = nullptr;
  r.result["nested"] = Json::object({{"inner", 5}});
  r.wall_ms = 2.0;

  std::string t = render_table(r);
  CHECK(t.find("command: classify\n") != std::string::npos);
  CHECK(t.find("model: q1\n") != std::string::npos);
  CHECK(t.find("class: 8;6\n") != std::string::npos);
  CHECK(t.find("kind: NonReducedComponent\n") != std::string::npos);
  CHECK(t.find("reason: -\n") != std::string::npos);  // null renders as "-"
  CHECK(t.find("nested:\n") != std::string::npos);
  CHECK(t.find("inner: 5\n") != std::string::npos);
  CHECK(t.find("wall_time_ms: 2\n") != std::string::npos);

  // rows render as an aligned column table with a header line
  RunReport rows;
  rows.command = "enumerate";
  Json row = Json::object();
  row["a"] = 10;
  row["kind"] = "X";
  rows.result["rows"] = Json::array({row});
  std::string tt = render_table(rows);
  CHECK(tt.find("rows:\n") != std::string::npos);
  CHECK(tt.find("a   kind\n") != std::string::npos);
  CHECK(tt.find("10  X\n") != std::string::npos);

  RunReport none;
  none.command = "enumerate";
  none.result["rows"] = Json::array();
  CHECK(render_table(none).find("(no rows)") != std::string::npos);
}
