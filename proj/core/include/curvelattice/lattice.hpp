#pragma once

#include "curvelattice/numeric.hpp"

#include <array>
#include <string>

namespace curvelattice {

// Divisor class in a fixed ordered basis of a rank-2 lattice.
struct DivClass2 {
  Int a{0};
  Int b{0};

  friend bool operator==(const DivClass2&, const DivClass2&) = default;

  friend DivClass2 operator+(const DivClass2& x, const DivClass2& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend DivClass2 operator-(const DivClass2& x, const DivClass2& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend DivClass2 operator-(const DivClass2& x) { return {-x.a, -x.b}; }
  friend DivClass2 operator*(const Int& k, const DivClass2& x) {
    return {k * x.a, k * x.b};
  }

  bool is_zero() const { return a == 0 && b == 0; }
};

// "(a,b)" — used in diagnostics and table output.
std::string to_string(const DivClass2& v);

// Total order for canonical listings: by a, then b.
bool lex_less(const DivClass2& x, const DivClass2& y);

// Gram matrix of an even rank-2 lattice of signature (1,1): symmetric, both
// diagonal entries even, determinant negative. Construction validates these
// invariants and throws Errc::invalid_model naming the violated one.
class Gram2 {
 public:
  Gram2(const Int& g11, const Int& g12, const Int& g22);

  const Int& g11() const { return g11_; }
  const Int& g12() const { return g12_; }
  const Int& g22() const { return g22_; }
  Int det() const { return g11_ * g22_ - g12_ * g12_; }

  friend bool operator==(const Gram2&, const Gram2&) = default;

 private:
  Int g11_, g12_, g22_;
};

// Symmetric bilinear form: D.E = aD*aE*g11 + (aD*bE + bD*aE)*g12 + bD*bE*g22.
Int pair(const DivClass2& d, const DivClass2& e, const Gram2& g);

// D.D (always even on an even lattice).
Int self_int(const DivClass2& d, const Gram2& g);

// Euler characteristic chi(O_X(D)) = D^2/2 + 2 on a K3 surface.
// Throws Errc::odd_square if D^2 is odd (the lattice would not be even;
// guarded for defensive use with raw Gram data).
Int euler_char_k3(const DivClass2& d, const Gram2& g);

}  // namespace curvelattice
