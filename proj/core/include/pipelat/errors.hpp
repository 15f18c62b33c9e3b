#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pipelat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input or arguments outside a domain.
struct InvalidInput : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " exceeds cap " + std::to_string(cap)), cap(cap) {}
  std::size_t cap;
};

struct NotALattice : Error {
  using Error::Error;
};

struct NotACongruence : Error {
  using Error::Error;
};

// Default cap on enumerations; PIPELAT_CAP overrides it.
std::size_t default_cap();

}  // namespace pipelat
