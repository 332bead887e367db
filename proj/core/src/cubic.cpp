#include "curvelattice/cubic.hpp"

#include "curvelattice/error.hpp"

#include <algorithm>
#include <functional>

namespace curvelattice {

Septuple::Septuple(Int delta, std::array<Int, 6> m)
    : delta_(std::move(delta)), m_(std::move(m)) {
  std::sort(m_.begin(), m_.end(), std::greater<Int>());
  if (delta_ < m_[0]) {
    fail(Errc::invalid_input,
         "tuple " + to_string(*this) +
             " violates delta >= m1 (largest multiplicity)");
  }
  if (delta_ < m_[0] + m_[1] + m_[2]) {
    fail(Errc::invalid_input,
         "tuple " + to_string(*this) +
             " violates delta >= m1 + m2 + m3 (three largest "
             "multiplicities)");
  }
}

std::string to_string(const Septuple& t) {
  std::string s = "(" + t.delta().str() + ";";
  for (int i = 1; i <= 6; ++i) {
    s += (i == 1 ? " " : ",") + t.m(i).str();
  }
  return s + ")";
}

DegGenus cubic_degree_genus(const Septuple& t) {
  Int sum_m = 0, sum_b2 = 0;
  for (const Int& mi : t.m()) {
    sum_m += mi;
    sum_b2 += binom2(mi);
  }
  return DegGenus{3 * t.delta() - sum_m, binom2(t.delta() - 1) - sum_b2};
}

namespace {

// Tuples of the shape (lambda + dgap + base, lambda + base, tail...) with
// lambda >= 2, i.e. m2..m6 fixed, delta - m1 = dgap, m1 - base = lambda.
// These are the images of cones of curves under projection from a point and
// are excluded from the projection-based vanishing arguments.
bool matches_exceptional(const Septuple& t, const std::array<int, 5>& tail,
                         int dgap, int base) {
  for (int i = 0; i < 5; ++i) {
    if (t.m(i + 2) != tail[static_cast<size_t>(i)]) return false;
  }
  if (t.delta() - t.m(1) != dgap) return false;
  return t.m(1) - base >= 2;
}

bool exceptional_a(const Septuple& t) {
  return matches_exceptional(t, {3, 3, 3, 3, 3}, 6, 3);
}

bool exceptional_b(const Septuple& t) {
  return matches_exceptional(t, {1, 1, 1, 1, 1}, 2, 1);
}

}  // namespace

VanishingA criterion_A(const Septuple& t) {
  if (t.m(6) >= 3 && !exceptional_a(t)) return VanishingA::zero;
  return VanishingA::inconclusive;
}

CriterionB criterion_B(const Septuple& t) {
  CriterionB out;
  out.line_vanishes = t.m(6) >= 1 && !exceptional_b(t);
  DegGenus dg = cubic_degree_genus(t);
  bool in_range = dg.d >= 14 && dg.g >= 3 * dg.d - 18;
  if (in_range) {
    out.cubic_nonzero = (t.m(6) >= 1 && t.m(6) <= 2) ? RangeBicond::yes
                                                     : RangeBicond::no;
  } else if (criterion_A(t) == VanishingA::zero) {
    // h1(I_C(3)) = 0 is proven, so the conjunction fails outright.
    out.cubic_nonzero = RangeBicond::no;
  } else {
    out.cubic_nonzero = RangeBicond::out_of_range;
  }
  return out;
}

namespace {

// The twist-v analogue of the class: C - v*H = (delta - 3v; m_i - v).
bool is_v_multiple_of_h(const Septuple& t, const Int& v) {
  if (t.delta() != 3 * v) return false;
  for (const Int& mi : t.m()) {
    if (mi != v) return false;
  }
  return true;
}

bool twist_exceptional(const Septuple& t, const Int& v) {
  return t.m(2) == v && t.m(3) == v && t.delta() - 3 * v == t.m(1) - v &&
         t.m(1) - v >= 2;
}

}  // namespace

void check_twist_hypotheses(const Septuple& t, const Int& v) {
  if (v < 0) {
    fail(Errc::hypothesis_failed,
         "twist must satisfy v >= 0, got v = " + v.str());
  }
  if (t.m(3) < v) {
    fail(Errc::hypothesis_failed,
         "tuple " + to_string(t) + " fails m3 >= v for v = " + v.str());
  }
  if (twist_exceptional(t, v)) {
    fail(Errc::hypothesis_failed,
         "tuple " + to_string(t) +
             " is the excluded projection pattern for v = " + v.str() +
             " (m2 = m3 = v and delta - 3v = m1 - v >= 2)");
  }
}

Int lem1_bound(const Septuple& t, const Int& v) {
  check_twist_hypotheses(t, v);
  Int bound = binom3(v);
  for (int i = 4; i <= 6; ++i) {
    if (t.m(i) < v) bound -= binom2(v + 1 - t.m(i));
  }
  return bound;
}

Int h1_ideal_cubic(const Septuple& t, const Int& v) {
  check_twist_hypotheses(t, v);
  if (is_v_multiple_of_h(t, v)) return 0;  // C - v*H = 0
  Int s = 0;
  for (int i = 4; i <= 6; ++i) {
    Int ni = t.m(i) < v ? v - t.m(i) : Int(0);
    s += binom2(ni + 1);
  }
  // Mobile part of C - v*H after removing the negative fixed multiplicities.
  bool mobile_zero = t.delta() == 3 * v;
  for (int i = 1; mobile_zero && i <= 6; ++i) {
    if (t.m(i) > v) mobile_zero = false;
  }
  return mobile_zero ? s - 1 : s;
}

bool conjecture_range(const Int& d, const Int& g) {
  return d >= 14 && g >= 3 * d - 18 && Rational(g) <= ratio(d * d - 4, 8);
}

bool genus_bound_range(const Int& d, const Int& g, int t) {
  if (t < 6 || t > 8) {
    fail(Errc::out_of_range,
         "genus_bound_range is stated for t in {6,7,8}, got t = " +
             std::to_string(t));
  }
  if (d <= Int(t) * (t - 1)) return false;
  Rational quad = ratio(d * d, 10) - ratio(d, 2) + 18;
  Rational cast = Rational(max_genus(d, t).g);
  return Rational(g) > std::max(quad, cast);
}

bool genus_bound_large_d(const Int& d, const Int& g) {
  return d >= 58 && Rational(g) > ratio(d * d, 10) - ratio(d, 2) + 18;
}

namespace {

struct Branch {
  const char* tag;
  bool fired;
  std::string failed_guard;  // non-empty iff !fired
};

Branch branch_m6_2(const Septuple& t, const Int& d) {
  Branch b{"m6-2-m5-ge-4-d-ge-21", false, ""};
  if (t.m(5) < 4) {
    b.failed_guard = "m6=2 branch: requires m5 >= 4 (m5 = " + t.m(5).str() +
                     ")";
  } else if (d < 21) {
    b.failed_guard = "m6=2 branch: requires d >= 21 (d = " + d.str() + ")";
  } else if (matches_exceptional(t, {4, 4, 4, 4, 2}, 8, 4)) {
    b.failed_guard =
        "m6=2 branch: tuple is the exceptional pattern "
        "(lambda+12, lambda+4, 4,4,4,4,2) with lambda = " +
        Int(t.m(1) - 4).str();
  } else {
    b.fired = true;
  }
  return b;
}

Branch branch_m6_1_high(const Septuple& t, const Int& d) {
  Branch b{"m6-1-m5-ge-6-d-ge-35", false, ""};
  if (t.m(5) < 6) {
    b.failed_guard = "m6=1 branch (m5 >= 6): requires m5 >= 6 (m5 = " +
                     t.m(5).str() + ")";
  } else if (d < 35) {
    b.failed_guard = "m6=1 branch (m5 >= 6): requires d >= 35 (d = " +
                     d.str() + ")";
  } else if (matches_exceptional(t, {6, 6, 6, 6, 1}, 12, 6)) {
    b.failed_guard =
        "m6=1 branch (m5 >= 6): tuple is the exceptional pattern "
        "(lambda+18, lambda+6, 6,6,6,6,1) with lambda = " +
        Int(t.m(1) - 6).str();
  } else {
    b.fired = true;
  }
  return b;
}

Branch branch_m6_1_five(const Septuple& t, const Int& d) {
  Branch b{"m6-1-m5-5-m4-ge-7-d-ge-35", false, ""};
  if (t.m(5) != 5) {
    b.failed_guard = "m6=1 branch (m5 = 5): requires m5 = 5 (m5 = " +
                     t.m(5).str() + ")";
  } else if (t.m(4) < 7) {
    b.failed_guard = "m6=1 branch (m5 = 5): requires m4 >= 7 (m4 = " +
                     t.m(4).str() + ")";
  } else if (d < 35) {
    b.failed_guard = "m6=1 branch (m5 = 5): requires d >= 35 (d = " +
                     d.str() + ")";
  } else if (matches_exceptional(t, {7, 7, 7, 5, 1}, 14, 7)) {
    b.failed_guard =
        "m6=1 branch (m5 = 5): tuple is the exceptional pattern "
        "(lambda+21, lambda+7, 7,7,7,5,1) with lambda = " +
        Int(t.m(1) - 7).str();
  } else {
    b.fired = true;
  }
  return b;
}

}  // namespace

CubicVerdict classify_cubic(const Septuple& t) {
  CubicVerdict v{ComponentKind::undetermined, t};
  DegGenus dg = cubic_degree_genus(t);
  v.d = dg.d;
  v.g = dg.g;
  v.in_conjecture_range = conjecture_range(v.d, v.g);
  if (v.d > 9) v.dim_w = v.d + v.g + 18;

  // Exact h1(I_C(3)) when the twist-3 hypotheses hold.
  bool twist3_ok = true;
  try {
    check_twist_hypotheses(t, 3);
  } catch (const Error&) {
    twist3_ok = false;
  }
  if (twist3_ok) v.h1_ideal_3 = h1_ideal_cubic(t, 3);

  CriterionB cb = criterion_B(t);
  if (cb.line_vanishes) v.line_vanishes = true;

  if (v.dim_w && v.h1_ideal_3) v.tangent_dim = *v.dim_w + *v.h1_ideal_3;

  // Multiplicity branches.
  if (t.m(6) >= 3) {
    if (!exceptional_a(t)) {
      v.kind = ComponentKind::generically_smooth;
      v.criteria.push_back("m6-ge-3-unexceptional");
      return v;
    }
    v.kind = ComponentKind::undetermined;
    v.failed_guards.push_back(
        "m6>=3 branch: tuple is the exceptional pattern "
        "(lambda+9, lambda+3, 3,3,3,3,3) with lambda = " +
        Int(t.m(1) - 3).str());
    v.note =
        "exceptional projection tuple: the family lies inside a larger "
        "generically smooth component and is not itself a component; "
        "h1(I_C(3)) is not computable by the twist bound here";
    v.criteria.push_back("exceptional-projection-tuple");
    return v;
  }

  std::vector<Branch> branches;
  if (t.m(6) == 2) {
    branches.push_back(branch_m6_2(t, v.d));
  } else if (t.m(6) == 1) {
    branches.push_back(branch_m6_1_high(t, v.d));
    branches.push_back(branch_m6_1_five(t, v.d));
  } else {
    v.failed_guards.push_back("multiplicity branches: require m6 >= 1 (m6 = " +
                              t.m(6).str() + ")");
    v.note =
        "multiplicity m6 <= 0 is outside the classifier's scope; no "
        "criterion applies";
  }
  for (const Branch& b : branches) {
    if (b.fired) {
      v.kind = ComponentKind::non_reduced;
      v.criteria.push_back(b.tag);
      return v;
    }
    v.failed_guards.push_back(b.failed_guard);
  }

  // Genus-bound arm: needs h1(I_C(3)) > 0 known and linear normality proven.
  if (!v.h1_ideal_3) {
    v.failed_guards.push_back(
        "genus-bound arm: h1(I_C(3)) not computable (twist hypotheses "
        "fail)");
  } else if (*v.h1_ideal_3 == 0) {
    v.failed_guards.push_back("genus-bound arm: h1(I_C(3)) = 0");
  } else if (!cb.line_vanishes) {
    v.failed_guards.push_back(
        "genus-bound arm: linear normality (h1(I_C(1)) = 0) not proven");
  } else {
    std::vector<std::string> fired;
    for (int tt = 6; tt <= 8; ++tt) {
      if (genus_bound_range(v.d, v.g, tt)) {
        fired.push_back("genus-bound-t" + std::to_string(tt));
      }
    }
    if (genus_bound_large_d(v.d, v.g)) fired.push_back("genus-bound-d58");
    if (!fired.empty()) {
      v.kind = ComponentKind::non_reduced;
      v.criteria.push_back("h1-ideal-cubic-nonzero");
      v.criteria.push_back("linearly-normal");
      for (auto& f : fired) v.criteria.push_back(f);
      return v;
    }
    v.failed_guards.push_back(
        "genus-bound arm: g below every genus bound (t in {6,7,8} and the "
        "d >= 58 arm)");
  }

  v.kind = ComponentKind::undetermined;
  return v;
}

}  // namespace curvelattice
