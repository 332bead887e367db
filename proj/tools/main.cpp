#include "curvelattice/cubic.hpp"
#include "curvelattice/error.hpp"
#include "curvelattice/k3.hpp"
#include "curvelattice/parallel.hpp"
#include "curvelattice/quartic.hpp"

#include "io/model_io.hpp"
#include "io/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace curvelattice {
namespace {

struct OutputOpts {
  std::string format = "json";
  bool stable = false;
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
  cmd->add_option("--format", o.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_flag("--stable", o.stable,
                "Omit wall time so identical runs are byte-identical");
  cmd->add_option("--out", o.out_path,
                  "Write the report to this file instead of stdout");
}

void emit(const RunReport& r, const OutputOpts& o) {
  std::string text;
  if (o.format == "json") {
    text = report_to_json(r).dump(2) + "\n";
  } else if (o.format == "csv") {
    text = render_csv(r);
  } else {
    text = render_table(r);
  }
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      fail(Errc::invalid_input,
           "cannot open output file \"" + o.out_path + "\"");
    }
    f << text;
  }
}

std::vector<Int> parse_int_list(const std::string& text, size_t expect,
                                const std::string& what) {
  std::vector<Int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      out.push_back(parse_int(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (out.size() != expect) {
    fail(Errc::invalid_input, what + " must be " + std::to_string(expect) +
                                  " comma-separated integers, got \"" + text +
                                  "\"");
  }
  return out;
}

DivClass2 parse_class(const std::string& text) {
  std::vector<Int> v = parse_int_list(text, 2, "--class");
  return DivClass2{v[0], v[1]};
}

Septuple parse_tuple(const std::string& text) {
  std::vector<Int> v = parse_int_list(text, 7, "--tuple");
  return Septuple(v[0], {v[1], v[2], v[3], v[4], v[5], v[6]});
}

Json quartic_verdict_json(const QuarticVerdict& v) {
  Json j = Json::object();
  j["kind"] = kind_name(v.kind);
  j["class"] = class_to_json(v.cls);
  j["d"] = int_to_json(v.d);
  j["g"] = int_to_json(v.g);
  j["h1_ideal_4"] = int_to_json(v.h1_ideal_4);
  if (v.dim_w) j["dim_w"] = int_to_json(*v.dim_w);
  if (v.tangent_dim) j["tangent_dim"] = int_to_json(*v.tangent_dim);
  j["criteria"] = v.criteria;
  if (v.reason) j["reason"] = *v.reason;
  if (v.clifford_line_bound) {
    j["clifford_line_bound"] = rat_to_json(*v.clifford_line_bound);
  }
  return j;
}

Json quartic_row(const QuarticVerdict& v) {
  Json j = Json::object();
  j["a"] = int_to_json(v.cls.a);
  j["b"] = int_to_json(v.cls.b);
  j["d"] = int_to_json(v.d);
  j["g"] = int_to_json(v.g);
  j["h1_I4"] = int_to_json(v.h1_ideal_4);
  j["kind"] = kind_name(v.kind);
  if (v.dim_w) j["dim_w"] = int_to_json(*v.dim_w);
  if (v.tangent_dim) j["tangent_dim"] = int_to_json(*v.tangent_dim);
  j["criteria"] = v.criteria;
  return j;
}

Json cubic_verdict_json(const CubicVerdict& v) {
  Json j = Json::object();
  j["kind"] = kind_name(v.kind);
  Json tuple = Json::array();
  tuple.push_back(int_to_json(v.tuple.delta()));
  for (int i = 1; i <= 6; ++i) tuple.push_back(int_to_json(v.tuple.m(i)));
  j["tuple"] = tuple;
  j["d"] = int_to_json(v.d);
  j["g"] = int_to_json(v.g);
  if (v.dim_w) j["dim_w"] = int_to_json(*v.dim_w);
  if (v.tangent_dim) j["tangent_dim"] = int_to_json(*v.tangent_dim);
  j["h1_I3"] = v.h1_ideal_3 ? int_to_json(*v.h1_ideal_3) : Json("unknown");
  j["h1_I1_zero"] = v.line_vanishes ? Json(*v.line_vanishes)
                                    : Json("unknown");
  j["conjecture_range"] = v.in_conjecture_range;
  j["criteria"] = v.criteria;
  j["failed_guards"] = v.failed_guards;
  if (v.note) j["note"] = *v.note;
  return j;
}

// ---------------------------------------------------------------------------
// verify suites

struct Check {
  std::string name;
  long scanned = 0;
  std::vector<std::string> counterexamples;
  Json details = Json::object();
};

Json check_to_json(const Check& c) {
  Json j = Json::object();
  j["name"] = c.name;
  j["scanned"] = c.scanned;
  j["failures"] = c.counterexamples.size();
  Json ex = Json::array();
  for (size_t i = 0; i < c.counterexamples.size() && i < 8; ++i) {
    ex.push_back(c.counterexamples[i]);
  }
  j["counterexamples"] = ex;
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

// Parallel scan over a in [a_lo, a_hi]; body(a, add) runs per value with a
// thread-local counterexample sink; merged in chunk order.
template <typename Body>
void scan_parallel(long a_lo, long a_hi, Check& check, Body body) {
  const int chunks = 16;
  std::vector<std::vector<std::string>> found(chunks);
  std::vector<long> counts(chunks, 0);
  parallel_chunks(a_lo, a_hi + 1, chunks, [&](int ci, long lo, long hi) {
    for (long a = lo; a < hi; ++a) {
      counts[static_cast<size_t>(ci)] += body(
          a, [&](const std::string& s) {
            found[static_cast<size_t>(ci)].push_back(s);
          });
    }
  });
  for (int ci = 0; ci < chunks; ++ci) {
    check.scanned += counts[static_cast<size_t>(ci)];
    for (auto& s : found[static_cast<size_t>(ci)]) {
      check.counterexamples.push_back(std::move(s));
    }
  }
}

void run_rr_suite(std::vector<Check>& out) {
  for (const K3Model* m : {&K3Model::q1(), &K3Model::q2()}) {
    Check rr{"riemann-roch-" + m->name()};
    scan_parallel(-40, 40, rr, [&](long a, auto add) {
      long done = 0;
      for (long b = -40; b <= 40; ++b) {
        DivClass2 d{a, b};
        CohDims c = cohomology(*m, d);
        Int chi = euler_char_k3(d, m->gram());
        if (c.h0 - c.h1 + c.h2 != chi || c.h0 < 0 || c.h1 < 0 || c.h2 < 0) {
          add(to_string(d) + ": (" + c.h0.str() + "," + c.h1.str() + "," +
              c.h2.str() + ") vs chi=" + chi.str());
        }
        ++done;
      }
      return done;
    });
    out.push_back(std::move(rr));

    Check serre{"serre-duality-" + m->name()};
    scan_parallel(-40, 40, serre, [&](long a, auto add) {
      long done = 0;
      for (long b = -40; b <= 40; ++b) {
        DivClass2 d{a, b};
        CohDims c = cohomology(*m, d);
        CohDims cd = cohomology(*m, -d);
        if (c.h0 != cd.h2 || c.h1 != cd.h1 || c.h2 != cd.h0) {
          add(to_string(d) + ": duality mismatch");
        }
        ++done;
      }
      return done;
    });
    out.push_back(std::move(serre));

    Check chi0{"chi-trivial-" + m->name()};
    chi0.scanned = 1;
    CohDims c0 = cohomology(*m, DivClass2{0, 0});
    if (c0.h0 != 1 || c0.h1 != 0 || c0.h2 != 1) {
      chi0.counterexamples.push_back("(0,0): expected (1,0,1)");
    }
    out.push_back(std::move(chi0));
  }
}

void run_oracles_suite(std::vector<Check>& out) {
  const K3Model& q1 = K3Model::q1();
  const K3Model& q2 = K3Model::q2();

  Check c1{"q1-closed-form-equivalence"};
  scan_parallel(1, 60, c1, [&](long a, auto add) {
    long done = 0;
    for (long b = 0; b <= 60; ++b) {
      if (a == 1 && b == 0) continue;  // documented exclusion
      DivClass2 d{a, b};
      bool engine = cohomology(q1, d).h1 > 0;
      bool oracle = h1_nonvanishing_closed_form(q1, d);
      if (engine != oracle) {
        add(to_string(d) + ": engine " + (engine ? ">0" : "=0") +
            ", closed form " + (oracle ? "!=0" : "=0"));
      }
      ++done;
    }
    return done;
  });
  out.push_back(std::move(c1));

  Check c2{"q1-rigid-curve-exclusion"};
  c2.scanned = 1;
  if (cohomology(q1, DivClass2{1, 0}).h1 != 0 ||
      !h1_nonvanishing_closed_form(q1, DivClass2{1, 0})) {
    c2.counterexamples.push_back(
        "(1,0): expected engine h1 = 0 while the literal closed form "
        "claims nonvanishing");
  }
  c2.details["note"] =
      "the closed form disagrees with the engine at exactly (1,0); the "
      "equivalence scan excludes it";
  out.push_back(std::move(c2));

  Check c3{"q2-closed-form-equivalence"};
  scan_parallel(1, 60, c3, [&](long a, auto add) {
    long done = 0;
    for (long b = 1; b <= 60; ++b) {
      DivClass2 d{a, b};
      bool vanishes = cohomology(q2, d).h1 == 0;
      bool nef = is_nef(q2, d);
      if (vanishes != nef) {
        add(to_string(d) + ": h1 " + (vanishes ? "=0" : "!=0") + " but nef=" +
            (nef ? "true" : "false"));
      }
      ++done;
    }
    return done;
  });
  out.push_back(std::move(c3));

  Check c4{"q1-pencil-multiples"};
  for (long b = 0; b <= 60; ++b) {
    Int expected = b >= 1 ? Int(b - 1) : Int(0);
    Int got = cohomology(q1, DivClass2{0, b}).h1;
    ++c4.scanned;
    if (got != expected) {
      c4.counterexamples.push_back("(0," + std::to_string(b) + "): h1=" +
                                   got.str() + ", expected " +
                                   expected.str());
    }
  }
  out.push_back(std::move(c4));

  Check c5{"rigid-multiples"};
  for (const K3Model* m : {&q1, &q2}) {
    for (const DivClass2& gamma : m->minus_two_curves()) {
      for (Int k = 1; k <= 20; ++k) {
        Int got = cohomology(*m, k * gamma).h1;
        ++c5.scanned;
        if (got != k * k - 1) {
          c5.counterexamples.push_back(m->name() + " " + k.str() + "*" +
                                       to_string(gamma) + ": h1=" +
                                       got.str());
        }
      }
    }
  }
  out.push_back(std::move(c5));

  Check c6{"q2-no-square-zero-nef"};
  for (long a = 0; a <= 60; ++a) {
    for (long b = 0; b <= 60; ++b) {
      if (a == 0 && b == 0) continue;
      DivClass2 d{a, b};
      ++c6.scanned;
      if (is_nef(q2, d) && self_int(d, q2.gram()) == 0) {
        c6.counterexamples.push_back(to_string(d));
      }
    }
  }
  out.push_back(std::move(c6));

  Check c7{"q1-ci-characterization"};
  for (long b = 0; 3 * b <= 200; ++b) {
    for (long a = 0; a + 3 * b <= 200; ++a) {
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(q1, c)) continue;
      Int d = degree(q1, c);
      Int g = genus(q1, c);
      ++c7.scanned;
      bool ci = is_ci(q1, c);
      bool rel = Rational(2 * g - 2) == ratio(d * d, 4);
      if (ci != rel) {
        c7.counterexamples.push_back(to_string(c));
      }
    }
  }
  out.push_back(std::move(c7));
}

void run_families_suite(std::vector<Check>& out) {
  const K3Model& q1 = K3Model::q1();
  const K3Model& q2 = K3Model::q2();

  Check c1{"q1-scan-equals-catalogue"};
  {
    auto scan = enumerate_families_q1(200);
    auto cat = q1_family_catalogue(200);
    c1.scanned = static_cast<long>(scan.size());
    c1.details["scan_size"] = scan.size();
    c1.details["catalogue_size"] = cat.size();
    for (const auto& c : scan) {
      if (std::find(cat.begin(), cat.end(), c) == cat.end()) {
        c1.counterexamples.push_back("scan-only " + to_string(c));
      }
    }
    for (const auto& c : cat) {
      if (std::find(scan.begin(), scan.end(), c) == scan.end()) {
        c1.counterexamples.push_back("catalogue-only " + to_string(c));
      }
    }
  }
  out.push_back(std::move(c1));

  Check c2{"q1-family-h1-values"};
  for (const DivClass2& c : q1_family_catalogue(200)) {
    // (8+3k,6+2k) -> 1, (10+3k,7+2k) -> 2, (15+3k,10+2k) -> 4.  With b even
    // the first family has 3b-2a = 2 and the third has 3b-2a = 0; odd b only
    // occurs in the middle family.
    Int expected;
    if (c.b % 2 == 0) {
      expected = (3 * c.b - 2 * c.a == 2) ? 1 : 4;
    } else {
      expected = 2;
    }
    Int got = h1_ideal_quartic(q1, c, 4);
    ++c2.scanned;
    if (got != expected) {
      c2.counterexamples.push_back(to_string(c) + ": h1=" + got.str() +
                                   ", expected " + expected.str());
    }
  }
  out.push_back(std::move(c2));

  Check c3{"q2-scan-equals-catalogue"};
  {
    auto scan = enumerate_q2_nonvanishing(100);
    auto cat = q2_nonvanishing_catalogue(100);
    c3.scanned = static_cast<long>(scan.size());
    c3.details["scan_size"] = scan.size();
    c3.details["catalogue_size"] = cat.size();
    for (const auto& c : scan) {
      if (std::find(cat.begin(), cat.end(), c) == cat.end()) {
        c3.counterexamples.push_back("scan-only " + to_string(c) + " h1=" +
                                     h1_ideal_quartic(q2, c, 4).str());
      }
    }
    for (const auto& c : cat) {
      if (std::find(scan.begin(), scan.end(), c) == scan.end()) {
        c3.counterexamples.push_back("catalogue-only " + to_string(c));
      }
    }
  }
  out.push_back(std::move(c3));

  Check c4{"q2-members-fail-genus-inequality"};
  for (const DivClass2& c : q2_nonvanishing_catalogue(100)) {
    ++c4.scanned;
    if (ineq1(degree(q2, c), genus(q2, c))) {
      c4.counterexamples.push_back(to_string(c));
    }
  }
  out.push_back(std::move(c4));

  Check c5{"q1-band-nonvanishing"};
  for (long b = 0; b <= 80; ++b) {
    for (long a = (3 * b - 2 + 1) / 2; 2 * a <= 3 * b; ++a) {
      if (2 * a < 3 * b - 2) continue;
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(q1, c) || is_ci(q1, c)) continue;
      if (degree(q1, c) <= 16) continue;
      if (a == 5 && b == 4) continue;  // C-4H = (1,0) is rigid: h1 = 0
      ++c5.scanned;
      if (h1_ideal_quartic(q1, c, 4) <= 0) {
        c5.counterexamples.push_back(to_string(c));
      }
    }
  }
  c5.details["excluded"] = "(5,4)";
  out.push_back(std::move(c5));

  Check c6{"q1-interior-vanishing"};
  for (long b = 0; b <= 80; ++b) {
    for (long a = 5; 2 * a < 3 * b - 2; ++a) {
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(q1, c) || is_ci(q1, c)) continue;
      if (degree(q1, c) <= 16) continue;
      ++c6.scanned;
      if (h1_ideal_quartic(q1, c, 4) != 0) {
        c6.counterexamples.push_back(to_string(c));
      }
    }
  }
  out.push_back(std::move(c6));

  // Vanishing window on q2: over smooth-curve classes with d > 16 and
  // a != b, h1(I_C(4)) = 0 exactly when b/2+2 <= a <= 2b-4 (the comparison
  // against b/2 is exact, so the integer test is 2a >= b+4).  (5,4) and
  // (4,5) are excluded: there the twisted class is a rigid curve itself,
  // so h1 = 0 even though they sit outside the window; they are asserted
  // separately.
  Check c7{"q2-window-vanishing"};
  for (long b = 0; b <= 80; ++b) {
    for (long a = 0; a <= 2 * b; ++a) {
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(q2, c) || is_ci(q2, c)) continue;
      if (degree(q2, c) <= 16) continue;
      if ((c.a == 5 && c.b == 4) || (c.a == 4 && c.b == 5)) continue;
      bool in_window = 2 * a >= b + 4 && a <= 2 * b - 4;
      bool vanishes = h1_ideal_quartic(q2, c, 4) == 0;
      ++c7.scanned;
      if (in_window != vanishes) {
        c7.counterexamples.push_back(to_string(c) + (vanishes
                                         ? ": h1=0 outside the window"
                                         : ": h1!=0 inside the window"));
      }
    }
  }
  out.push_back(std::move(c7));

  // The two excluded boundary classes: the twisted class is the rigid
  // curve (1,0) resp. (0,1), whose h1 vanishes.
  Check c8{"q2-rigid-twist-exclusions"};
  for (const DivClass2& c : {DivClass2{5, 4}, DivClass2{4, 5}}) {
    ++c8.scanned;
    if (h1_ideal_quartic(q2, c, 4) != 0) {
      c8.counterexamples.push_back(to_string(c) + ": h1 expected 0");
    }
  }
  c8.details["note"] =
      "outside the vanishing window yet h1 = 0: the twist peels to a rigid "
      "curve with no obstruction";
  out.push_back(std::move(c8));
}

void run_crossover_suite(std::vector<Check>& out) {
  Check c1{"genus-min-arm-switch"};
  {
    long first_quad = 0;  // first d where the quadratic arm is the minimum
    for (long d = 21; d <= 2000; ++d) {
      Int gd = max_genus(d, 5).g;
      Rational quad = ratio(Int(d) * d, 10) + 21;
      bool g_arm_min = Rational(gd - 1) <= quad;
      ++c1.scanned;
      if (g_arm_min && first_quad != 0) {
        c1.counterexamples.push_back(
            "d=" + std::to_string(d) +
            ": castelnuovo arm re-takes the minimum after the switch");
      }
      if (!g_arm_min && first_quad == 0) first_quad = d;
    }
    c1.details["switch_at_d"] = first_quad;
    if (first_quad != 45) {
      c1.counterexamples.push_back(
          "expected the quadratic arm to take over at d=45, got d=" +
          std::to_string(first_quad));
    }
  }
  out.push_back(std::move(c1));

  Check c2{"genus-bound-crossover-t6"};
  {
    long first_ge = 0, last_ge = 0;
    bool contiguous = true;
    for (long d = 31; d <= 2000; ++d) {
      Int gd = max_genus(d, 6).g;
      Rational quad = ratio(Int(d) * d, 10) - ratio(d, 2) + 18;
      bool ge = Rational(gd) >= quad;
      ++c2.scanned;
      if (ge) {
        if (first_ge == 0) first_ge = d;
        if (last_ge != 0 && last_ge != d - 1) contiguous = false;
        last_ge = d;
      }
    }
    c2.details["castelnuovo_dominates_from_d"] = first_ge;
    c2.details["castelnuovo_dominates_through_d"] = last_ge;
    if (!contiguous) {
      c2.counterexamples.push_back(
          "dominance region is not a contiguous interval");
    }
    if (first_ge != 31 || last_ge != 73) {
      c2.counterexamples.push_back(
          "expected G(d,6) >= d^2/10 - d/2 + 18 exactly for 31 <= d <= 73; "
          "got " + std::to_string(first_ge) + " <= d <= " +
          std::to_string(last_ge));
    }
  }
  out.push_back(std::move(c2));

  Check c3{"t8-bound-dominated"};
  for (long d = 58; d <= 2000; ++d) {
    Int gd = max_genus(d, 8).g;
    Rational quad = ratio(Int(d) * d, 10) - ratio(d, 2) + 18;
    ++c3.scanned;
    if (Rational(gd) > quad) {
      c3.counterexamples.push_back("d=" + std::to_string(d) + ": G(d,8)=" +
                                   gd.str() + " exceeds the quadratic arm");
    }
  }
  out.push_back(std::move(c3));

  Check c4{"castelnuovo-integrality"};
  for (long s = 5; s <= 6; ++s) {
    for (long d = s * (s - 1) + 1; d <= 5000; ++d) {
      ++c4.scanned;
      try {
        max_genus(d, s);
      } catch (const Error& e) {
        c4.counterexamples.push_back("d=" + std::to_string(d) + ", s=" +
                                     std::to_string(s) + ": " + e.what());
      }
    }
  }
  out.push_back(std::move(c4));
}

int cmd_verify(const std::string& suite, const OutputOpts& opts) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  if (suite == "rr" || suite == "all") run_rr_suite(checks);
  if (suite == "oracles" || suite == "all") run_oracles_suite(checks);
  if (suite == "families" || suite == "all") run_families_suite(checks);
  if (suite == "crossover" || suite == "all") run_crossover_suite(checks);

  bool pass = true;
  long failures = 0;
  Json rows = Json::array();
  for (const Check& c : checks) {
    rows.push_back(check_to_json(c));
    failures += static_cast<long>(c.counterexamples.size());
    if (!c.counterexamples.empty()) pass = false;
  }

  RunReport r;
  r.command = "verify";
  r.inputs["suite"] = suite;
  r.result["suite"] = suite;
  r.result["checks"] = rows;
  r.result["pass"] = pass;
  r.checks["checks_run"] = checks.size();
  r.checks["failures"] = failures;
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return pass ? 0 : 3;
}

int cmd_classify_quartic(const std::string& model_arg,
                         const std::string& class_arg,
                         const OutputOpts& opts) {
  K3Model m = load_model(model_arg);
  DivClass2 c = parse_class(class_arg);
  auto start = std::chrono::steady_clock::now();
  QuarticVerdict v = classify_quartic(m, c);
  RunReport r;
  r.command = "classify quartic";
  r.model = m.name();
  r.inputs["model"] = model_arg;
  r.inputs["class"] = class_to_json(c);
  r.result = quartic_verdict_json(v);
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return 0;
}

int cmd_classify_cubic(const std::string& tuple_arg, const OutputOpts& opts) {
  Septuple t = parse_tuple(tuple_arg);
  auto start = std::chrono::steady_clock::now();
  CubicVerdict v = classify_cubic(t);
  RunReport r;
  r.command = "classify cubic";
  Json tuple = Json::array();
  tuple.push_back(int_to_json(t.delta()));
  for (int i = 1; i <= 6; ++i) tuple.push_back(int_to_json(t.m(i)));
  r.inputs["tuple"] = tuple;
  r.result = cubic_verdict_json(v);
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return 0;
}

int cmd_enumerate(const std::string& model_arg, const Int& b_max,
                  std::string region, bool check, const OutputOpts& opts) {
  K3Model m = load_model(model_arg);
  if (region.empty()) {
    region = m.name() == "q2" ? "nonvanishing" : "families";
  }
  auto start = std::chrono::steady_clock::now();
  std::vector<DivClass2> classes;
  std::vector<DivClass2> catalogue;
  if (region == "families") {
    if (m.name() != "q1") {
      fail(Errc::invalid_input,
           "region \"families\" is the near-boundary band of the built-in "
           "model q1; got model \"" + m.name() + "\"");
    }
    classes = enumerate_families_q1(b_max);
    catalogue = q1_family_catalogue(b_max);
  } else if (region == "nonvanishing") {
    if (m.name() != "q2") {
      fail(Errc::invalid_input,
           "region \"nonvanishing\" is the non-nef twisted band of the "
           "built-in model q2; got model \"" + m.name() + "\"");
    }
    classes = enumerate_q2_nonvanishing(b_max);
    catalogue = q2_nonvanishing_catalogue(b_max);
  } else {
    fail(Errc::invalid_input,
         "unknown region \"" + region + "\" (families, nonvanishing)");
  }

  RunReport r;
  r.command = "enumerate";
  r.model = m.name();
  r.inputs["model"] = model_arg;
  r.inputs["b_max"] = int_to_json(b_max);
  r.inputs["region"] = region;
  r.inputs["check"] = check;
  Json rows = Json::array();
  for (const DivClass2& c : classes) {
    rows.push_back(quartic_row(classify_quartic(m, c)));
  }
  r.result["region"] = region;
  r.result["count"] = classes.size();
  r.result["rows"] = rows;

  int code = 0;
  if (check) {
    Json missing = Json::array();
    Json extra = Json::array();
    for (const auto& c : catalogue) {
      if (std::find(classes.begin(), classes.end(), c) == classes.end()) {
        missing.push_back(class_to_json(c));
      }
    }
    for (const auto& c : classes) {
      if (std::find(catalogue.begin(), catalogue.end(), c) ==
          catalogue.end()) {
        extra.push_back(class_to_json(c));
      }
    }
    bool match = missing.empty() && extra.empty();
    r.checks["catalogue_match"] = match;
    r.checks["missing"] = missing;
    r.checks["extra"] = extra;
    if (!match) code = 3;
  }
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return code;
}

int cmd_maxgenus(const std::string& d_arg, const std::string& s_arg,
                 const OutputOpts& opts) {
  Int d = parse_int(d_arg);
  Int s = parse_int(s_arg);
  auto start = std::chrono::steady_clock::now();
  MaxGenus g = max_genus(d, s);
  RunReport r;
  r.command = "maxgenus";
  r.inputs["d"] = int_to_json(d);
  r.inputs["s"] = int_to_json(s);
  r.result["G"] = int_to_json(g.g);
  r.result["r"] = int_to_json(g.r);
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return 0;
}

int cmd_cohomology(const std::string& model_arg, const std::string& class_arg,
                   const Int& twist, const OutputOpts& opts) {
  K3Model m = load_model(model_arg);
  DivClass2 c = parse_class(class_arg);
  auto start = std::chrono::steady_clock::now();
  DivClass2 d = c - twist * m.hyperplane();
  CohTrace trace;
  CohDims dims = cohomology(m, d, &trace);
  RunReport r;
  r.command = "cohomology";
  r.model = m.name();
  r.inputs["model"] = model_arg;
  r.inputs["class"] = class_to_json(c);
  r.inputs["twist"] = int_to_json(twist);
  r.result["divisor_class"] = class_to_json(d);
  r.result["h0"] = int_to_json(dims.h0);
  r.result["h1"] = int_to_json(dims.h1);
  r.result["h2"] = int_to_json(dims.h2);
  // h1(I_C(n)) = h1(O_S(C - nH)) by Serre duality.
  r.result["h1_ideal_twist"] = int_to_json(dims.h1);
  r.result["terminal"] = trace.terminal;
  r.result["terminal_class"] = class_to_json(trace.terminal_class);
  Json peels = Json::array();
  for (const PeelStep& p : trace.peels) {
    Json step = Json::object();
    step["curve"] = class_to_json(p.gamma);
    step["t"] = int_to_json(p.t);
    peels.push_back(step);
  }
  r.result["peels"] = peels;
  if (!opts.stable) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  emit(r, opts);
  return 0;
}

}  // namespace
}  // namespace curvelattice

int main(int argc, char** argv) {
  using namespace curvelattice;

  CLI::App app{
      "curvelattice: exact divisor-class invariants on rank-2 lattice "
      "models of quartic K3 surfaces, and Hilbert-scheme family "
      "classification for curves on quartic and cubic surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "curvelattice 1.0.0");
  app.footer(
      "Examples:\n"
      "  curvelattice classify quartic --model q1 --class 8,6\n"
      "  curvelattice classify cubic --tuple 15,5,4,4,4,4,2\n"
      "  curvelattice enumerate --model q1 --bmax 10 --check\n"
      "  curvelattice enumerate --model q2 --bmax 5 --format csv\n"
      "  curvelattice maxgenus 26 5\n"
      "  curvelattice cohomology --model q1 --class 15,10 --twist 4\n"
      "  curvelattice verify all\n"
      "\n"
      "Exit codes: 0 success, 1 usage error, 2 domain or model validation "
      "error, 3 verification mismatch.\n"
      "CURVELATTICE_THREADS caps scan parallelism (default 1).");

  int exit_code = 0;

  auto* classify = app.add_subcommand("classify",
                                      "Classify a Hilbert-scheme family");
  classify->require_subcommand(1);

  static std::string q_model, q_class;
  static OutputOpts q_opts;
  auto* cq = classify->add_subcommand(
      "quartic", "Classify the family of curves with a given class on a "
                 "quartic K3 model");
  cq->add_option("--model", q_model, "q1, q2, or path to a model JSON file")
      ->required();
  cq->add_option("--class", q_class, "Divisor class a,b")->required();
  add_output_flags(cq, q_opts);
  cq->callback(
      [&] { exit_code = cmd_classify_quartic(q_model, q_class, q_opts); });

  static std::string c_tuple;
  static OutputOpts c_opts;
  auto* cc = classify->add_subcommand(
      "cubic", "Classify the family of curves with a given class on smooth "
               "cubic surfaces");
  cc->add_option("--tuple", c_tuple,
                 "Class delta,m1,m2,m3,m4,m5,m6 in the blow-up basis")
      ->required();
  add_output_flags(cc, c_opts);
  cc->callback([&] { exit_code = cmd_classify_cubic(c_tuple, c_opts); });

  static std::string e_model, e_region;
  static long long e_bmax = 0;
  static bool e_check = false;
  static OutputOpts e_opts;
  auto* en = app.add_subcommand(
      "enumerate", "Enumerate the classes found by the model's band scan");
  en->add_option("--model", e_model, "q1 or q2")->required();
  en->add_option("--bmax", e_bmax, "Scan classes with b <= bmax")
      ->required()
      ->check(CLI::NonNegativeNumber);
  en->add_option("--region", e_region,
                 "families (q1 band) or nonvanishing (q2 band); default "
                 "chosen by model");
  en->add_flag("--check", e_check,
               "Also compare against the closed-form catalogue; exit 3 on "
               "mismatch");
  add_output_flags(en, e_opts);
  en->callback([&] {
    exit_code =
        cmd_enumerate(e_model, Int(e_bmax), e_region, e_check, e_opts);
  });

  static std::string m_d, m_s;
  static OutputOpts m_opts;
  auto* mg = app.add_subcommand(
      "maxgenus",
      "Maximal genus G(d,s) of degree-d space curves off degree-(s-1) "
      "surfaces");
  mg->add_option("d", m_d, "Degree (requires d > s(s-1))")->required();
  mg->add_option("s", m_s, "Surface degree bound (s >= 2)")->required();
  add_output_flags(mg, m_opts);
  mg->callback([&] { exit_code = cmd_maxgenus(m_d, m_s, m_opts); });

  static std::string h_model, h_class;
  static long long h_twist = 0;
  static OutputOpts h_opts;
  auto* ch = app.add_subcommand(
      "cohomology",
      "Cohomology of O_S(C - nH) with the peeling trace, and h1(I_C(n))");
  ch->add_option("--model", h_model, "q1, q2, or path to a model JSON file")
      ->required();
  ch->add_option("--class", h_class, "Divisor class a,b")->required();
  ch->add_option("--twist", h_twist, "Twist n (default 0)");
  add_output_flags(ch, h_opts);
  ch->callback([&] {
    exit_code = cmd_cohomology(h_model, h_class, Int(h_twist), h_opts);
  });

  static std::string v_suite;
  static OutputOpts v_opts;
  auto* vf = app.add_subcommand("verify",
                                "Run the built-in invariant scan suites");
  vf->add_option("suite", v_suite, "rr, oracles, families, crossover, all")
      ->required()
      ->check(CLI::IsMember({"rr", "oracles", "families", "crossover",
                             "all"}));
  add_output_flags(vf, v_opts);
  vf->callback([&] { exit_code = cmd_verify(v_suite, v_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const curvelattice::Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
