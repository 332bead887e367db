#pragma once

#include <stdexcept>
#include <string>

namespace curvelattice {

// Machine-checkable failure categories. The CLI maps these to exit code 2
// (domain/model validation); verification mismatches are not exceptions and
// exit with code 3.
enum class Errc {
  odd_square,           // Euler characteristic of a class with odd self-intersection
  no_pencil,            // nef class of square zero is not a multiple of a listed pencil
  peel_left_cone,       // peeling stepped outside the declared effective cone
  out_of_stated_range,  // closed-form oracle queried outside its stated range
  out_of_range,         // numeric argument outside a formula's domain
  non_integral,         // a provably integral quantity evaluated to a fraction
  negative_input,       // argument that must be non-negative was negative
  hypothesis_failed,    // a precondition of the bound being evaluated fails
  invalid_model,        // surface model violates a declared invariant
  invalid_input,        // malformed user input (parse errors, bad tuples)
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace curvelattice
