#include "curvelattice/k3.hpp"

#include "curvelattice/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace curvelattice {

namespace {

Int gcd2(const Int& x, const Int& y) {
  return boost::multiprecision::gcd(x, y);
}

bool in_effective_cone(const DivClass2& d) { return d.a >= 0 && d.b >= 0; }

}  // namespace

K3Model::K3Model(std::string name, Gram2 gram, DivClass2 hyperplane,
                 std::vector<DivClass2> minus_two_curves,
                 std::vector<DivClass2> elliptic_pencils)
    : name_(std::move(name)),
      gram_(std::move(gram)),
      hyperplane_(std::move(hyperplane)),
      minus_two_curves_(std::move(minus_two_curves)),
      elliptic_pencils_(std::move(elliptic_pencils)) {
  if (name_.empty()) {
    fail(Errc::invalid_model, "model name must be non-empty");
  }
  if (self_int(hyperplane_, gram_) != 4) {
    fail(Errc::invalid_model,
         "hyperplane class " + to_string(hyperplane_) +
             " must have self-intersection 4, got " +
             self_int(hyperplane_, gram_).str());
  }
  if (!in_effective_cone(hyperplane_) || hyperplane_.is_zero()) {
    fail(Errc::invalid_model,
         "hyperplane class " + to_string(hyperplane_) +
             " must be a non-zero class in the effective cone");
  }
  for (size_t i = 0; i < minus_two_curves_.size(); ++i) {
    const DivClass2& c = minus_two_curves_[i];
    if (self_int(c, gram_) != -2) {
      fail(Errc::invalid_model,
           "(-2)-curve " + to_string(c) + " must have self-intersection -2, "
               "got " + self_int(c, gram_).str());
    }
    if (!in_effective_cone(c) || c.is_zero()) {
      fail(Errc::invalid_model,
           "(-2)-curve " + to_string(c) +
               " must be a non-zero class in the effective cone");
    }
    if (pair(hyperplane_, c, gram_) <= 0) {
      fail(Errc::invalid_model,
           "(-2)-curve " + to_string(c) +
               " must have positive degree against the hyperplane class");
    }
    for (size_t j = 0; j < i; ++j) {
      if (minus_two_curves_[j] == c) {
        fail(Errc::invalid_model,
             "(-2)-curve " + to_string(c) + " listed twice");
      }
    }
  }
  for (size_t i = 0; i < elliptic_pencils_.size(); ++i) {
    const DivClass2& e = elliptic_pencils_[i];
    if (self_int(e, gram_) != 0) {
      fail(Errc::invalid_model,
           "elliptic pencil " + to_string(e) +
               " must have self-intersection 0, got " +
               self_int(e, gram_).str());
    }
    if (!in_effective_cone(e) || e.is_zero()) {
      fail(Errc::invalid_model,
           "elliptic pencil " + to_string(e) +
               " must be a non-zero class in the effective cone");
    }
    if (gcd2(e.a, e.b) != 1) {
      fail(Errc::invalid_model,
           "elliptic pencil " + to_string(e) + " must be primitive");
    }
    if (pair(hyperplane_, e, gram_) <= 0) {
      fail(Errc::invalid_model,
           "elliptic pencil " + to_string(e) +
               " must have positive degree against the hyperplane class");
    }
    for (const DivClass2& c : minus_two_curves_) {
      if (pair(e, c, gram_) < 0) {
        fail(Errc::invalid_model,
             "elliptic pencil " + to_string(e) +
                 " must be nef: pairing with (-2)-curve " + to_string(c) +
                 " is negative");
      }
    }
    for (size_t j = 0; j < i; ++j) {
      if (elliptic_pencils_[j] == e) {
        fail(Errc::invalid_model,
             "elliptic pencil " + to_string(e) + " listed twice");
      }
    }
  }
}

const K3Model& K3Model::q1() {
  static const K3Model m("q1", Gram2(-2, 3, 0), DivClass2{1, 1},
                         {DivClass2{1, 0}}, {DivClass2{0, 1}});
  return m;
}

const K3Model& K3Model::q2() {
  static const K3Model m("q2", Gram2(-2, 4, -2), DivClass2{1, 1},
                         {DivClass2{1, 0}, DivClass2{0, 1}}, {});
  return m;
}

Int degree(const K3Model& m, const DivClass2& c) {
  return pair(m.hyperplane(), c, m.gram());
}

Int genus(const K3Model& m, const DivClass2& c) {
  return euler_char_k3(c, m.gram()) - 1;  // C^2/2 + 1
}

bool is_effective(const K3Model&, const DivClass2& d) {
  return in_effective_cone(d);
}

bool is_nef(const K3Model& m, const DivClass2& d) {
  if (!in_effective_cone(d)) return false;
  for (const DivClass2& c : m.minus_two_curves()) {
    if (pair(d, c, m.gram()) < 0) return false;
  }
  return true;
}

bool is_smooth_curve_class(const K3Model& m, const DivClass2& d) {
  for (const DivClass2& c : m.minus_two_curves()) {
    if (c == d) return true;
  }
  for (const DivClass2& e : m.elliptic_pencils()) {
    if (e == d) return true;
  }
  return is_nef(m, d) && self_int(d, m.gram()) > 0;
}

bool is_ci(const K3Model& m, const DivClass2& c) {
  const DivClass2& h = m.hyperplane();
  // c = k*h for an integer k >= 1.
  Int k;
  if (h.a != 0) {
    if (c.a % h.a != 0) return false;
    k = c.a / h.a;
  } else {
    if (h.b == 0 || c.b % h.b != 0) return false;
    k = c.b / h.b;
  }
  return k >= 1 && c == k * h;
}

namespace {

// Cohomology of an effective non-zero class: peel listed (-2)-curves meeting
// the class negatively until a terminal case, accumulating h1 drops.
CohDims cohomology_effective(const K3Model& m, const DivClass2& d,
                             CohTrace* trace) {
  const Gram2& g = m.gram();
  DivClass2 cur = d;
  Int h1 = 0;
  for (;;) {
    // First listed (-2)-curve meeting cur negatively, if any.
    const DivClass2* gamma = nullptr;
    Int t;
    for (const DivClass2& c : m.minus_two_curves()) {
      Int p = pair(cur, c, g);
      if (p < 0) {
        gamma = &c;
        t = -p;
        break;
      }
    }

    if (gamma != nullptr && cur == *gamma) {
      // The class of a listed (-2)-curve itself is rigid: h1 = 0 at the
      // terminal (the peeling step needs cur - gamma != 0).
      if (trace) {
        trace->terminal = "rigid-curve";
        trace->terminal_class = cur;
      }
      break;
    }

    if (gamma == nullptr) {
      // cur is nef.
      Int sq = self_int(cur, g);
      if (sq > 0) {
        // Vanishing for big-and-nef classes on a K3.
        if (trace) {
          trace->terminal = "nef-positive";
          trace->terminal_class = cur;
        }
        break;
      }
      // sq == 0: cur must be a multiple of a listed elliptic pencil.
      for (const DivClass2& e : m.elliptic_pencils()) {
        Int k;
        if (e.a != 0) {
          if (cur.a % e.a != 0) continue;
          k = cur.a / e.a;
        } else {
          if (e.b == 0 || cur.b % e.b != 0) continue;
          k = cur.b / e.b;
        }
        if (k >= 1 && cur == k * e) {
          h1 += k - 1;
          if (trace) {
            trace->terminal = "pencil-multiple";
            trace->terminal_class = cur;
          }
          goto done;
        }
      }
      fail(Errc::no_pencil,
           "nef class " + to_string(cur) + " of square zero is not a "
               "positive multiple of a listed elliptic pencil");
    }

    {
      DivClass2 next = cur - *gamma;
      if (!in_effective_cone(next)) {
        fail(Errc::peel_left_cone,
             "peeling (-2)-curve " + to_string(*gamma) + " from " +
                 to_string(cur) + " leaves the declared effective cone");
      }
      h1 += t - 1;
      if (trace) trace->peels.push_back({*gamma, t});
      cur = next;
    }
  }
done:
  CohDims out;
  out.model = m.name();
  out.cls = d;
  out.h1 = h1;
  out.h0 = euler_char_k3(d, m.gram()) + h1;
  out.h2 = 0;
  return out;
}

}  // namespace

CohDims cohomology(const K3Model& m, const DivClass2& d, CohTrace* trace) {
  if (trace) *trace = CohTrace{};
  if (d.is_zero()) {
    if (trace) {
      trace->terminal = "zero";
      trace->terminal_class = d;
    }
    return CohDims{m.name(), d, 1, 0, 1};
  }
  if (is_effective(m, d)) {
    return cohomology_effective(m, d, trace);
  }
  if (is_effective(m, -d)) {
    // Serre duality: h^i(D) = h^{2-i}(-D).
    CohTrace inner;
    CohDims dual = cohomology_effective(m, -d, trace ? &inner : nullptr);
    if (trace) {
      trace->peels = std::move(inner.peels);
      trace->terminal = "serre-dual:" + inner.terminal;
      trace->terminal_class = inner.terminal_class;
    }
    return CohDims{m.name(), d, dual.h2, dual.h1, dual.h0};
  }
  // Neither D nor -D effective: h0 = h2 = 0, so h1 = -chi(D).
  Int chi = euler_char_k3(d, m.gram());
  if (chi > 0) {
    fail(Errc::invalid_model,
         "class " + to_string(d) + " has chi = " + chi.str() +
             " > 0 but neither it nor its negative lies in the declared "
             "effective cone; the cone data is inconsistent with "
             "Riemann-Roch");
  }
  if (trace) {
    trace->terminal = "non-effective";
    trace->terminal_class = d;
  }
  return CohDims{m.name(), d, 0, -chi, 0};
}

Int h1_ideal_quartic(const K3Model& m, const DivClass2& c, const Int& n,
                     CohTrace* trace) {
  // h1(I_C(n)) = h1(O_X(nH - C)) = h1(O_X(C - nH)) by Serre duality; the
  // class C - nH is evaluated so traces peel the effective side directly.
  return cohomology(m, c - n * m.hyperplane(), trace).h1;
}

bool h1_nonvanishing_closed_form(const K3Model& m, const DivClass2& d) {
  if (m.name() == "q1") {
    if (!is_effective(m, d) || d.a <= 0) {
      fail(Errc::out_of_stated_range,
           "closed form for q1 is stated for effective classes with a > 0; "
           "got " + to_string(d));
    }
    // Literal closed form. It disagrees with the engine at exactly (1,0),
    // where the rigid curve has h1 = 0; the equivalence tests carry that
    // single documented exclusion.
    return 2 * d.a > 3 * d.b + 1;
  }
  if (m.name() == "q2") {
    if (d.a <= 0 || d.b <= 0) {
      fail(Errc::out_of_stated_range,
           "closed form for q2 is stated for classes with a > 0 and b > 0; "
           "got " + to_string(d));
    }
    return !is_nef(m, d);
  }
  fail(Errc::out_of_stated_range,
       "no closed-form nonvanishing criterion for model \"" + m.name() +
           "\"");
}

}  // namespace curvelattice
