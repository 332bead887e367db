#pragma once

#include "curvelattice/k3.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvelattice {

// Castelnuovo-type maximal genus G(d,s) of degree-d space curves not lying on
// a surface of degree < s, together with the residue r used in the formula:
//   G(d,s) = 1 + (d/2)(d/s + s - 4) - r(s-r)(s-1)/(2s),  d + r = 0 (mod s),
//   0 <= r < s, valid for d > s(s-1).
struct MaxGenus {
  Int g;
  Int r;
};

// Throws Errc::out_of_range if s < 2 or d <= s(s-1); Errc::non_integral if
// the formula fails to produce an integer (it never does in the valid range —
// the guard is part of the integrality regression tests).
MaxGenus max_genus(const Int& d, const Int& s);

// Genus threshold under which no degree-d, genus-g component of the Hilbert
// scheme can dominate curves off low-degree surfaces:
//   d >= 21 and g > min{ G(d,5) - 1, d^2/10 + 21 }.
bool ineq1(const Int& d, const Int& g);

// Criterion for a 4-maximal family to be a non-reduced component using only
// a bound on h1 of the line-twisted ideal sheaf:
//   d >= 31, g > 21 + d^2/10, h1_line <= d - 25.
// Throws Errc::negative_input if h1_line < 0.
bool main4_pred(const Int& d, const Int& g, const Int& h1_line);

// Upper bound for h1(I_C(1)) of an integral degree-d genus-g space curve:
//   max{d - g, d/2} - 3.  Exact rational. Requires d >= 1.
Rational clifford_h1_bound(const Int& d, const Int& g);

// Genus threshold forcing every irreducible degree-d genus-g family to lie
// in a component whose general curve sits on a degree-s surface:
//   g >= s*d - binom(s+3,3) + 2.  Requires s >= 1.
bool gencomp_pred(const Int& d, const Int& g, const Int& s);

// Expected dimension of an s-maximal family:
//   (4-s)d + g + binom(s+3,3) - 2.  Requires s >= 1.
Int dim_component_formula(const Int& d, const Int& g, const Int& s);

// Dimension bound for a maximal-genus family on degree-s surfaces:
//   dim_component_formula(d,g,s) - u + (h0_ies4 + t  if e != 0,
//                                       binom(s-1,3) if e == 0).
// Requires s >= 1 and u, h0_ies4, t >= 0 (Errc::negative_input otherwise).
Int maxgendim_eval(const Int& d, const Int& g, const Int& s, const Int& u,
                   const Int& h0_ies4, const Int& t, const Int& e);

// Clifford-type upper bound for the dimension of a family of curves on
// degree-s surfaces:  max{ d^2/s - g + 1, d^2/(2s) + 1 }.
// Requires s >= 4 and d >= 1 (Errc::out_of_range otherwise).
Rational cliffo_bound(const Int& d, const Int& g, const Int& s);

// Dimension bound binom(s+3,3) - 1
//   + max{ d^2/s - g, d^2/(2s), (4-s)d + g - 1 + h0_oc_s4 }.
// Requires d > s^2, s >= 4 (Errc::out_of_range), h0_oc_s4 >= 0
// (Errc::negative_input).
Rational prop20_bound(const Int& d, const Int& g, const Int& s,
                      const Int& h0_oc_s4);

// Dimension bound g + 35 - rho for families of curves on K3 surfaces with
// Picard number rho >= 1 (Errc::out_of_range otherwise).
Int picard_bound(const Int& g, const Int& rho);

// Verdict kinds shared by the quartic and cubic classifiers.
enum class ComponentKind {
  generically_smooth,
  non_reduced,
  expected_non_reduced,
  undetermined,
  not_applicable,
};

const char* kind_name(ComponentKind k);

// Classification of the Hilbert-scheme family traced by curves of class C on
// the model surface.
//   kind = not_applicable: `reason` set, dimensions absent.
//   otherwise d > 16, C a smooth-curve class, not a complete intersection:
//     dim_w      = g + 33 (dimension of the family of curves on quartics),
//     tangent_dim= dim_w + h1(I_C(4)),
//     kind       = generically_smooth     iff h1(I_C(4)) = 0,
//                  non_reduced            iff h1 > 0 and ineq1(d,g),
//                  expected_non_reduced   iff h1 > 0 and not ineq1(d,g)
//     (expected_non_reduced additionally reports clifford_h1_bound(d,g)
//      as `clifford_line_bound`, the budget a proof via the line-twisted
//      ideal sheaf would have to meet).
struct QuarticVerdict {
  ComponentKind kind{ComponentKind::undetermined};
  DivClass2 cls;
  Int d{0};
  Int g{0};
  Int h1_ideal_4{0};
  std::optional<Int> dim_w;
  std::optional<Int> tangent_dim;
  std::vector<std::string> criteria;
  std::optional<std::string> reason;
  std::optional<Rational> clifford_line_bound;
};

QuarticVerdict classify_quartic(const K3Model& m, const DivClass2& c);

// Brute-force scan of model q1 for smooth-curve classes (a,b), b <= b_max,
// with d > 16, not complete intersections, in the near-boundary band
// 3b/2 - 1 <= a <= 3b/2, and satisfying ineq1. Sorted by lex_less.
std::vector<DivClass2> enumerate_families_q1(const Int& b_max);

// Closed form the q1 scan must reproduce: the three families
//   (8+3k, 6+2k), (10+3k, 7+2k), (15+3k, 10+2k), k >= 0,
// truncated to b <= b_max and sorted by lex_less.
std::vector<DivClass2> q1_family_catalogue(const Int& b_max);

// Brute-force scan of model q2 for smooth-curve classes (a,b), b <= b_max,
// with a > b, 2b - 4 < a <= 2b, d > 16 and h1(I_C(4)) > 0. Sorted by
// lex_less.
std::vector<DivClass2> enumerate_q2_nonvanishing(const Int& b_max);

// Closed form the q2 scan reproduces:
//   (5+2k, 4+k) for k >= 1, (6+2k, 4+k) and (7+2k, 4+k) for k >= 0, and
//   (8+2k, 4+k) for k >= -1, truncated to b <= b_max and sorted by
//   lex_less. At b = 4 the families degenerate to (6,4), (7,4), (8,4),
//   whose twisted ideal classes are the rigid multiples 2*(1,0), 3*(1,0),
//   4*(1,0) with h1 = 3, 8, 15; at b = 3 only (6,3) survives the degree
//   cut, with a twisted class that is non-effective in both directions
//   (h1 = 11).
std::vector<DivClass2> q2_nonvanishing_catalogue(const Int& b_max);

}  // namespace curvelattice
