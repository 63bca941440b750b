#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric_deform {

// Base class for every error raised by the library. Domain errors map to
// exit code 1 in the command-line tool.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials live in different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidPolygon : public Error {
 public:
  using Error::Error;
};

class NotUnitEdge : public Error {
 public:
  NotUnitEdge()
      : Error("polygon has an edge of lattice length > 1 (the singularity is not isolated)") {}
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::size_t copies, std::size_t cap)
      : Error("decomposition enumeration needs " + std::to_string(copies) +
              " primitive edge copies, above the cap of " + std::to_string(cap)),
        copies_(copies),
        cap_(cap) {}

  std::size_t copies() const { return copies_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t copies_;
  std::size_t cap_;
};

}  // namespace toric_deform
