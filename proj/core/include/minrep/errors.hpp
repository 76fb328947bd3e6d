#pragma once

#include <stdexcept>
#include <string>

namespace minrep {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or out-of-domain argument (composite characteristic, even q, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// A closure, enumeration or lattice walk grew past its element cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A coset enumeration produced more cosets than the configured cap.
struct DegreeCapExceeded : CapExceeded {
  using CapExceeded::CapExceeded;
};

// A membership predicate failed a closure consistency check.
struct NotASubgroup : Error {
  using Error::Error;
};

// Structural core arguments need q >= 5; q = 3 must go through brute force.
struct SmallFieldUnsupported : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

}  // namespace minrep
