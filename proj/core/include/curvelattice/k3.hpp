#pragma once

#include "curvelattice/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvelattice {

// A rank-2-polarized K3 surface model: the Picard lattice in a fixed basis,
// the hyperplane class of a quartic embedding, and the declared generators of
// the cone data the cohomology engine needs — the finitely many classes of
// irreducible (-2)-curves and the primitive elliptic pencil classes.
//
// The effective cone is the set of non-negative integer combinations of the
// basis vectors (all built-in and user models declare bases chosen this way),
// so effectivity is the componentwise test a >= 0 && b >= 0.
//
// Construction validates:
//   - gram: even, signature (1,1) (via Gram2);
//   - hyperplane H: H^2 = 4, H in the effective cone, H != 0;
//   - each (-2)-curve G: G^2 = -2, G in the effective cone, G != 0, H.G > 0,
//     no duplicates;
//   - each pencil E: E^2 = 0, E in the effective cone, E != 0, primitive
//     (gcd of coordinates 1), H.E > 0, E.G >= 0 for every listed curve G,
//     no duplicates.
// Violations throw Errc::invalid_model naming the invariant.
class K3Model {
 public:
  K3Model(std::string name, Gram2 gram, DivClass2 hyperplane,
          std::vector<DivClass2> minus_two_curves,
          std::vector<DivClass2> elliptic_pencils);

  const std::string& name() const { return name_; }
  const Gram2& gram() const { return gram_; }
  const DivClass2& hyperplane() const { return hyperplane_; }
  const std::vector<DivClass2>& minus_two_curves() const {
    return minus_two_curves_;
  }
  const std::vector<DivClass2>& elliptic_pencils() const {
    return elliptic_pencils_;
  }

  // Built-in model "q1": Gram [[-2,3],[3,0]], H = (1,1), one (-2)-curve
  // (1,0), one elliptic pencil (0,1). Basis: a rational curve and a pencil
  // of plane cubics on a quartic containing a line.
  static const K3Model& q1();

  // Built-in model "q2": Gram [[-2,4],[4,-2]], H = (1,1), (-2)-curves (1,0)
  // and (0,1), no elliptic pencils. Basis: two rational quartic curves.
  static const K3Model& q2();

 private:
  std::string name_;
  Gram2 gram_;
  DivClass2 hyperplane_;
  std::vector<DivClass2> minus_two_curves_;
  std::vector<DivClass2> elliptic_pencils_;
};

// Sheaf cohomology dimensions of O_X(D), tagged with the class and model
// they were computed for.
struct CohDims {
  std::string model;
  DivClass2 cls;
  Int h0{0};
  Int h1{0};
  Int h2{0};

  friend bool operator==(const CohDims&, const CohDims&) = default;
};

// One peeling step: subtracted the (-2)-curve `gamma` with t = -D.gamma > 0;
// the step contributes t - 1 to h1.
struct PeelStep {
  DivClass2 gamma;
  Int t;
};

// Trace of a cohomology evaluation: the peeling steps taken and how the
// computation terminated.
//   terminal: "zero"            chi of the trivial class (1,0,1)
//             "non-effective"   neither D nor -D effective
//             "serre-dual:*"    reduced to -D; inner terminal appended
//             "rigid-curve"     D is a listed (-2)-curve
//             "nef-positive"    nef with D^2 > 0 (vanishing theorem)
//             "pencil-multiple" D = k*E for a listed pencil E
struct CohTrace {
  std::vector<PeelStep> peels;
  std::string terminal;
  DivClass2 terminal_class;
};

// Exact cohomology of O_X(D) by case analysis and peeling:
//   D = 0:  (1,0,1).
//   -D effective, D != 0:  Serre duality, reverse of cohomology(-D).
//   D effective, D != 0:   h2 = 0; repeatedly subtract a listed (-2)-curve G
//     with t = -D.G > 0, each step adding t - 1 to h1, until D is nef or a
//     listed (-2)-curve. Terminals: a listed curve contributes h1 = 0 (plus
//     accumulated drops); nef with D^2 > 0 has h1 = 0; nef with D^2 = 0 must
//     be k*E for a listed pencil (else Errc::no_pencil) and has h1 = k - 1.
//     h0 = chi(D) + h1 throughout. If a peel leaves the effective cone the
//     model data is inconsistent: Errc::peel_left_cone.
//   neither effective: h0 = h2 = 0, h1 = -chi(D); a positive chi here means
//     the declared cone data contradicts Riemann-Roch: Errc::invalid_model.
CohDims cohomology(const K3Model& m, const DivClass2& d,
                   CohTrace* trace = nullptr);

// h1 of the twisted ideal sheaf of a curve C in the quartic model:
// h1(I_C(n)) = h1(O_X(nH - C)) = h1(O_X(C - nH)) (Serre duality). C should
// be a smooth-curve class; n is any integer (negative twists land in the
// non-effective cases).
Int h1_ideal_quartic(const K3Model& m, const DivClass2& c, const Int& n,
                     CohTrace* trace = nullptr);

// H.C — degree of the class in the quartic embedding.
Int degree(const K3Model& m, const DivClass2& c);

// C^2/2 + 1 — arithmetic genus (throws Errc::odd_square on odd square).
Int genus(const K3Model& m, const DivClass2& c);

// Componentwise test against the declared effective-cone basis.
bool is_effective(const K3Model& m, const DivClass2& d);

// Effective and non-negative against every listed (-2)-curve.
bool is_nef(const K3Model& m, const DivClass2& d);

// Classes represented by smooth irreducible curves: nef with D^2 > 0, or a
// listed (-2)-curve, or a listed elliptic pencil.
bool is_smooth_curve_class(const K3Model& m, const DivClass2& d);

// Complete-intersection test for the quartic embedding: the complete
// intersections of the quartic with another hypersurface are exactly the
// classes C = k*H, k >= 1.
bool is_ci(const K3Model& m, const DivClass2& c);

// Closed-form h1(O_X(D)) != 0 tests for the built-in models, kept literal so
// they serve as independent oracles against the peeling engine:
//   q1: for effective D = (a,b) with a > 0:  2a > 3b + 1.
//       (Disagrees with the engine at exactly (1,0), where the rigid curve
//       has h1 = 0; equivalence tests exclude that single class.)
//   q2: for a,b > 0: h1 != 0 iff D is not nef (nef is b/2 <= a <= 2b).
// Throws Errc::out_of_stated_range outside these ranges or for other models.
bool h1_nonvanishing_closed_form(const K3Model& m, const DivClass2& d);

}  // namespace curvelattice
