#include "curvelattice/numeric.hpp"

#include "curvelattice/error.hpp"

#include <cctype>

namespace curvelattice {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::odd_square: return "odd_square";
    case Errc::no_pencil: return "no_pencil";
    case Errc::peel_left_cone: return "peel_left_cone";
    case Errc::out_of_stated_range: return "out_of_stated_range";
    case Errc::out_of_range: return "out_of_range";
    case Errc::non_integral: return "non_integral";
    case Errc::negative_input: return "negative_input";
    case Errc::hypothesis_failed: return "hypothesis_failed";
    case Errc::invalid_model: return "invalid_model";
    case Errc::invalid_input: return "invalid_input";
  }
  return "unknown";
}

Rational ratio(const Int& n, const Int& d) {
  if (d == 0) fail(Errc::out_of_range, "zero denominator");
  return Rational(n) / Rational(d);
}

bool is_integer(const Rational& q) { return denom(q) == 1; }

Int integer_value(const Rational& q, const std::string& what) {
  if (!is_integer(q)) {
    fail(Errc::non_integral, what + " must be an integer, got " +
                                 numer(q).str() + "/" + denom(q).str());
  }
  return numer(q);
}

Int binom2(const Int& n) { return n * (n - 1) / 2; }

Int binom3(const Int& n) { return n * (n - 1) * (n - 2) / 6; }

Int parse_int(const std::string& text) {
  size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i >= text.size()) {
    fail(Errc::invalid_input, "expected an integer, got \"" + text + "\"");
  }
  for (size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      fail(Errc::invalid_input, "expected an integer, got \"" + text + "\"");
    }
  }
  return text[0] == '+' ? Int(text.substr(1)) : Int(text);
}

}  // namespace curvelattice
