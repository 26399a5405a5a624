#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace aode {

enum class Errc {
  syntax,               // malformed input text (span attached when known)
  usage,                // structurally unusable request
  mixed_field,          // operands carry different coefficient-field tags
  division_by_zero,
  incompatible_tables,  // polynomials over unrelated variable tables
  zero_polynomial,      // integer roots of the zero polynomial
  y_free,               // equation mentions no derivative of y
  hypothesis,           // operation called outside its validity range (e.g. k <= 2m)
  insufficient_jet,     // jet tuple too short for the requested evaluation
  length_mismatch,
  precondition,
  unsupported,          // exact answer would leave the supported fields
  internal,             // invariant violation; CLI maps this to exit 3
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, std::string msg, std::optional<std::size_t> where = {})
      : std::runtime_error(std::move(msg)), code(c), pos(where) {}
  Errc code;
  std::optional<std::size_t> pos;  // byte offset into source text, syntax errors only
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool ok, Errc c, const char* msg) {
  if (!ok) throw Error(c, msg);
}

// Internal invariants: these firing means a bug, not bad input.
inline void icheck(bool ok, const char* msg) {
  if (!ok) throw Error(Errc::internal, std::string("internal invariant violated: ") + msg);
}

}  // namespace aode
