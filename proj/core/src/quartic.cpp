#include "curvelattice/quartic.hpp"

#include "curvelattice/error.hpp"

#include <algorithm>

namespace curvelattice {

MaxGenus max_genus(const Int& d, const Int& s) {
  if (s < 2) {
    fail(Errc::out_of_range, "max_genus requires s >= 2, got s = " + s.str());
  }
  if (d <= s * (s - 1)) {
    fail(Errc::out_of_range, "max_genus requires d > s(s-1) = " +
                                 Int(s * (s - 1)).str() + ", got d = " + d.str());
  }
  Int r = ((-d) % s + s) % s;  // d + r = 0 (mod s), 0 <= r < s
  Rational g = 1 + ratio(d, 2) * (ratio(d, s) + s - 4) -
               ratio(r * (s - r) * (s - 1), 2 * s);
  return MaxGenus{integer_value(g, "max_genus(" + d.str() + "," + s.str() +
                                       ")"),
                  r};
}

bool ineq1(const Int& d, const Int& g) {
  if (d < 21) return false;
  Rational lhs(g);
  Rational arm1 = Rational(max_genus(d, 5).g - 1);
  Rational arm2 = ratio(d * d, 10) + 21;
  return lhs > std::min(arm1, arm2);
}

bool main4_pred(const Int& d, const Int& g, const Int& h1_line) {
  if (h1_line < 0) {
    fail(Errc::negative_input,
         "h1 of the line-twisted ideal sheaf must be >= 0, got " +
             h1_line.str());
  }
  return d >= 31 && Rational(g) > ratio(d * d, 10) + 21 && h1_line <= d - 25;
}

Rational clifford_h1_bound(const Int& d, const Int& g) {
  if (d < 1) {
    fail(Errc::out_of_range,
         "clifford_h1_bound requires d >= 1, got d = " + d.str());
  }
  return std::max(Rational(d - g), ratio(d, 2)) - 3;
}

bool gencomp_pred(const Int& d, const Int& g, const Int& s) {
  if (s < 1) {
    fail(Errc::out_of_range, "gencomp_pred requires s >= 1, got s = " +
                                 s.str());
  }
  return g >= s * d - binom3(s + 3) + 2;
}

Int dim_component_formula(const Int& d, const Int& g, const Int& s) {
  if (s < 1) {
    fail(Errc::out_of_range,
         "dim_component_formula requires s >= 1, got s = " + s.str());
  }
  return (4 - s) * d + g + binom3(s + 3) - 2;
}

Int maxgendim_eval(const Int& d, const Int& g, const Int& s, const Int& u,
                   const Int& h0_ies4, const Int& t, const Int& e) {
  if (u < 0 || h0_ies4 < 0 || t < 0) {
    fail(Errc::negative_input,
         "maxgendim_eval requires u, h0_ies4, t >= 0");
  }
  Int base = dim_component_formula(d, g, s) - u;
  if (e != 0) return base + h0_ies4 + t;
  return base + binom3(s - 1);
}

Rational cliffo_bound(const Int& d, const Int& g, const Int& s) {
  if (s < 4) {
    fail(Errc::out_of_range, "cliffo_bound requires s >= 4, got s = " +
                                 s.str());
  }
  if (d < 1) {
    fail(Errc::out_of_range, "cliffo_bound requires d >= 1, got d = " +
                                 d.str());
  }
  return std::max(ratio(d * d, s) - g + 1, ratio(d * d, 2 * s) + 1);
}

Rational prop20_bound(const Int& d, const Int& g, const Int& s,
                      const Int& h0_oc_s4) {
  if (s < 4) {
    fail(Errc::out_of_range, "prop20_bound requires s >= 4, got s = " +
                                 s.str());
  }
  if (d <= s * s) {
    fail(Errc::out_of_range, "prop20_bound requires d > s^2 = " +
                                 Int(s * s).str() + ", got d = " + d.str());
  }
  if (h0_oc_s4 < 0) {
    fail(Errc::negative_input,
         "prop20_bound requires h0_oc_s4 >= 0, got " + h0_oc_s4.str());
  }
  Rational inner = std::max(
      {ratio(d * d, s) - g, ratio(d * d, 2 * s),
       Rational((4 - s) * d + g - 1 + h0_oc_s4)});
  return Rational(binom3(s + 3) - 1) + inner;
}

Int picard_bound(const Int& g, const Int& rho) {
  if (rho < 1) {
    fail(Errc::out_of_range, "picard_bound requires rho >= 1, got rho = " +
                                 rho.str());
  }
  return g + 35 - rho;
}

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::generically_smooth:
      return "GenericallySmoothComponent";
    case ComponentKind::non_reduced: return "NonReducedComponent";
    case ComponentKind::expected_non_reduced: return "ExpectedNonReduced";
    case ComponentKind::undetermined: return "Undetermined";
    case ComponentKind::not_applicable: return "NotApplicable";
  }
  return "unknown";
}

QuarticVerdict classify_quartic(const K3Model& m, const DivClass2& c) {
  QuarticVerdict v;
  v.cls = c;
  v.d = degree(m, c);
  v.g = genus(m, c);
  v.h1_ideal_4 = h1_ideal_quartic(m, c, 4);

  if (!is_smooth_curve_class(m, c)) {
    v.kind = ComponentKind::not_applicable;
    v.reason = "not-a-smooth-curve-class";
    return v;
  }
  if (is_ci(m, c)) {
    v.kind = ComponentKind::not_applicable;
    v.reason = "complete-intersection";
    return v;
  }
  if (v.d <= 16) {
    v.kind = ComponentKind::not_applicable;
    v.reason = "degree-le-16";
    return v;
  }

  // d > 16, smooth non-c.i. class: the curves on quartics with this class
  // form a unique 4-maximal family of dimension g + 33, and the tangent
  // space to the Hilbert scheme along it has dimension g + 33 + h1(I_C(4)).
  v.dim_w = v.g + 33;
  v.tangent_dim = *v.dim_w + v.h1_ideal_4;

  if (v.h1_ideal_4 == 0) {
    v.kind = ComponentKind::generically_smooth;
    v.criteria = {"h1-ideal-quartic-vanishes", "component-dim-g+33"};
  } else if (ineq1(v.d, v.g)) {
    v.kind = ComponentKind::non_reduced;
    v.criteria = {"h1-ideal-quartic-nonzero", "genus-above-crossover",
                  "component-dim-g+33"};
  } else {
    // h1 > 0 but the genus bound does not certify maximality of the family
    // among all components: expected non-reduced. The attached bound is the
    // budget an h1(I_C(1))-based certificate would have to meet.
    v.kind = ComponentKind::expected_non_reduced;
    v.criteria = {"h1-ideal-quartic-nonzero", "genus-below-crossover",
                  "clifford-line-bound"};
    v.clifford_line_bound = clifford_h1_bound(v.d, v.g);
  }
  return v;
}

namespace {

void sort_classes(std::vector<DivClass2>& v) {
  std::sort(v.begin(), v.end(), lex_less);
}

}  // namespace

std::vector<DivClass2> enumerate_families_q1(const Int& b_max) {
  const K3Model& m = K3Model::q1();
  std::vector<DivClass2> out;
  for (Int b = 0; b <= b_max; ++b) {
    // The band 3b/2 - 1 <= a <= 3b/2 in integers is 2a >= 3b - 2, 2a <= 3b.
    for (Int a = 0; 2 * a <= 3 * b; ++a) {
      if (2 * a < 3 * b - 2) continue;
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(m, c)) continue;
      if (is_ci(m, c)) continue;
      Int d = degree(m, c);
      if (d <= 16) continue;
      if (!ineq1(d, genus(m, c))) continue;
      out.push_back(c);
    }
  }
  sort_classes(out);
  return out;
}

std::vector<DivClass2> q1_family_catalogue(const Int& b_max) {
  std::vector<DivClass2> out;
  for (Int k = 0; 6 + 2 * k <= b_max; ++k) out.push_back({8 + 3 * k, 6 + 2 * k});
  for (Int k = 0; 7 + 2 * k <= b_max; ++k) out.push_back({10 + 3 * k, 7 + 2 * k});
  for (Int k = 0; 10 + 2 * k <= b_max; ++k) {
    out.push_back({15 + 3 * k, 10 + 2 * k});
  }
  sort_classes(out);
  return out;
}

std::vector<DivClass2> enumerate_q2_nonvanishing(const Int& b_max) {
  const K3Model& m = K3Model::q2();
  std::vector<DivClass2> out;
  for (Int b = 0; b <= b_max; ++b) {
    for (Int a = b + 1; a <= 2 * b; ++a) {
      if (a <= 2 * b - 4) continue;  // band 2b - 4 < a <= 2b
      DivClass2 c{a, b};
      if (!is_smooth_curve_class(m, c)) continue;
      if (degree(m, c) <= 16) continue;
      if (h1_ideal_quartic(m, c, 4) <= 0) continue;
      out.push_back(c);
    }
  }
  sort_classes(out);
  return out;
}

std::vector<DivClass2> q2_nonvanishing_catalogue(const Int& b_max) {
  // Four arithmetic families (5+2k,4+k), (6+2k,4+k), (7+2k,4+k), (8+2k,4+k)
  // tiling the band 2b-4 < a <= 2b.  The k floors differ because the scan
  // constraints (degree > 16 and a nonzero twisted h^1) trim each family at
  // its low end:
  //   (5+2k,4+k) starts at k=1: at k=0 the twisted class is the rigid curve
  //     itself, so h^1 = 0;
  //   (6+2k,4+k) and (7+2k,4+k) start at k=0 (k=-1 drops the degree to 14
  //     and 16);
  //   (8+2k,4+k) starts at k=-1: (6,3) still has degree 18, and its twisted
  //     class pairs negatively against both rigid-curve cones, giving
  //     h^1 = -chi = 11.
  std::vector<DivClass2> out;
  for (Int k = 1; 4 + k <= b_max; ++k) out.push_back({5 + 2 * k, 4 + k});
  for (Int k = 0; 4 + k <= b_max; ++k) {
    out.push_back({6 + 2 * k, 4 + k});
    out.push_back({7 + 2 * k, 4 + k});
  }
  for (Int k = -1; 4 + k <= b_max; ++k) out.push_back({8 + 2 * k, 4 + k});
  sort_classes(out);
  return out;
}

}  // namespace curvelattice
