#include "curvelattice/lattice.hpp"

#include "curvelattice/error.hpp"

namespace curvelattice {

std::string to_string(const DivClass2& v) {
  return "(" + v.a.str() + "," + v.b.str() + ")";
}

bool lex_less(const DivClass2& x, const DivClass2& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

Gram2::Gram2(const Int& g11, const Int& g12, const Int& g22)
    : g11_(g11), g12_(g12), g22_(g22) {
  if (g11 % 2 != 0 || g22 % 2 != 0) {
    fail(Errc::invalid_model,
         "gram matrix must be even: diagonal entries " + g11.str() + ", " +
             g22.str() + " must both be even");
  }
  if (det() >= 0) {
    fail(Errc::invalid_model,
         "gram matrix must have signature (1,1): determinant " +
             det().str() + " is not negative");
  }
}

Int pair(const DivClass2& d, const DivClass2& e, const Gram2& g) {
  return d.a * e.a * g.g11() + (d.a * e.b + d.b * e.a) * g.g12() +
         d.b * e.b * g.g22();
}

Int self_int(const DivClass2& d, const Gram2& g) { return pair(d, d, g); }

Int euler_char_k3(const DivClass2& d, const Gram2& g) {
  Int sq = self_int(d, g);
  if (sq % 2 != 0) {
    fail(Errc::odd_square, "self-intersection " + sq.str() + " of class " +
                               to_string(d) +
                               " is odd; the lattice is not even");
  }
  return sq / 2 + 2;
}

}  // namespace curvelattice
