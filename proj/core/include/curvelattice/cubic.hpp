#pragma once

#include "curvelattice/numeric.hpp"
#include "curvelattice/quartic.hpp"  // ComponentKind

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvelattice {

// Divisor class on a smooth cubic surface, written in the blow-up basis as
// delta * L - sum m_i * E_i. Multiplicities are stored sorted non-increasing;
// construction validates the irreducibility inequalities
//   delta >= m1   and   delta >= m1 + m2 + m3
// (after sorting) and throws Errc::invalid_input naming the violated one.
class Septuple {
 public:
  Septuple(Int delta, std::array<Int, 6> m);

  const Int& delta() const { return delta_; }
  const std::array<Int, 6>& m() const { return m_; }
  // 1-based: m(1) is the largest multiplicity, m(6) the smallest.
  const Int& m(int i) const { return m_[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const Septuple&, const Septuple&) = default;

 private:
  Int delta_;
  std::array<Int, 6> m_;
};

// "(delta; m1,...,m6)" — used in diagnostics and table output.
std::string to_string(const Septuple& t);

// d = 3*delta - sum m_i,  g = binom(delta-1, 2) - sum binom(m_i, 2).
struct DegGenus {
  Int d;
  Int g;
};
DegGenus cubic_degree_genus(const Septuple& t);

// Vanishing test for h1(I_C(3)) by projection off the smallest-multiplicity
// point: proves h1 = 0 when m6 >= 3 and the tuple is not the exceptional
// pattern (lambda+9, lambda+3, 3,3,3,3,3) with lambda >= 2; inconclusive
// otherwise.
enum class VanishingA { zero, inconclusive };
VanishingA criterion_A(const Septuple& t);

// Linear-normality test and the in-range characterisation of cubic-twist
// nonvanishing.
//   line_vanishes: h1(I_C(1)) = 0 is proven (m6 >= 1 and the tuple is not
//     (lambda+3, lambda+1, 1,1,1,1,1) with lambda >= 2); false means the
//     projection argument is inconclusive, not that h1 != 0.
//   cubic_nonzero: whether "h1(I_C(3)) != 0 and h1(I_C(1)) = 0" holds.
//     Inside the range d >= 14, g >= 3d - 18 this is equivalent to
//     1 <= m6 <= 2, giving yes/no. Outside the range: no when criterion_A
//     already proves h1(I_C(3)) = 0, out_of_range otherwise.
enum class RangeBicond { yes, no, out_of_range };
struct CriterionB {
  bool line_vanishes{false};
  RangeBicond cubic_nonzero{RangeBicond::out_of_range};
};
CriterionB criterion_B(const Septuple& t);

// Hypotheses shared by lem1_bound and h1_ideal_cubic for twist v:
//   v >= 0, m3 >= v, and the tuple is not the excluded projection pattern
//   m2 = m3 = v with delta - 3v = m1 - v = lambda >= 2.
// Returns nothing; throws Errc::hypothesis_failed naming the failed
// condition.
void check_twist_hypotheses(const Septuple& t, const Int& v);

// Upper bound binom(v,3) - sum_{i in {4,5,6}, m_i < v} binom(v+1-m_i, 2)
// for -chi contributions of the v-twisted ideal sheaf; same hypotheses as
// h1_ideal_cubic.
Int lem1_bound(const Septuple& t, const Int& v);

// Exact h1(I_C(v)) under check_twist_hypotheses:
//   n_i = max{0, v - m_i} for i in {4,5,6},  S = sum binom(n_i + 1, 2);
//   0 if C = v*H as a class; S - 1 if the mobile part
//   (delta - 3v; max{0, m_i - v}) is zero; S otherwise.
Int h1_ideal_cubic(const Septuple& t, const Int& v);

// Degree/genus range of the classification conjecture for curves on smooth
// cubics: d >= 14 and 3d - 18 <= g <= (d^2 - 4)/8.
bool conjecture_range(const Int& d, const Int& g);

// Genus-bound arm with parameter t in {6,7,8}:
//   d > t(t-1)  and  g > max{ d^2/10 - d/2 + 18, G(d,t) }.
bool genus_bound_range(const Int& d, const Int& g, int t);

// Genus-bound arm for large degree: d >= 58 and g > d^2/10 - d/2 + 18.
bool genus_bound_large_d(const Int& d, const Int& g);

// Classification of the family W of curves with class t on smooth cubics.
//   dim_w = d + g + 18 when d > 9 (W is then 3-maximal of this dimension).
//   h1_ideal_3 is attached when the twist-3 hypotheses hold; tangent_dim =
//   dim_w + h1_ideal_3 when both are known (d > 9 makes the normal-bundle
//   comparison valid).
//   kind:
//     generically_smooth  - m6 >= 3 and not the exceptional pattern;
//     non_reduced         - one of the multiplicity branches
//                             m6 = 2, m5 >= 4, d >= 21 (minus its exception),
//                             m6 = 1, m5 >= 6, d >= 35 (minus its exception),
//                             m6 = 1, m5 = 5, m4 >= 7, d >= 35 (minus its
//                             exception),
//                           or the genus-bound arm: h1_ideal_3 known > 0,
//                           linear normality proven, and genus_bound_range
//                           for some t in {6,7,8} or genus_bound_large_d;
//     undetermined        - nothing above fired; failed_guards lists, per
//                           branch, the first guard that failed. The m6 >= 3
//                           exceptional pattern additionally sets `note`
//                           (those families lie inside a larger generically
//                           smooth component; the twist-3 hypotheses fail so
//                           h1_ideal_3 stays unknown).
struct CubicVerdict {
  ComponentKind kind{ComponentKind::undetermined};
  Septuple tuple;
  Int d{0};
  Int g{0};
  std::optional<Int> dim_w;
  std::optional<Int> tangent_dim;
  std::optional<Int> h1_ideal_3;
  std::optional<bool> line_vanishes;
  bool in_conjecture_range{false};
  std::vector<std::string> criteria;
  std::vector<std::string> failed_guards;
  std::optional<std::string> note;
};

CubicVerdict classify_cubic(const Septuple& t);

}  // namespace curvelattice
