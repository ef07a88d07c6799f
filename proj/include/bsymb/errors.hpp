#pragma once

#include <stdexcept>
#include <string>

namespace bsymb {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- tower construction ----
struct NonPrime : Error {
  using Error::Error;
};
struct EvenCharacteristic : Error {
  using Error::Error;
};
struct OddExtension : Error {
  using Error::Error;
};
struct ReducibleModulus : Error {
  using Error::Error;
};
// Tables for this field order would exceed the supported size.
struct ResourceLimit : Error {
  using Error::Error;
};

// ---- field arithmetic ----
struct DivisionByZero : Error {
  using Error::Error;
};
struct NotInSubfield : Error {
  using Error::Error;
};
struct ZeroInput : Error {
  using Error::Error;
};

// ---- code parameter validation ----
struct NotDivisor : Error {
  using Error::Error;
};
struct GcdNotTwo : Error {
  unsigned long long gcd_value;
  GcdNotTwo(const std::string& msg, unsigned long long g) : Error(msg), gcd_value(g) {}
};
struct LengthTooShort : Error {
  using Error::Error;
};

// ---- weights / enumeration ----
struct BOutOfRange : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};

// A closed form evaluated to a non-integer (or out-of-range) weight;
// signals inconsistent inputs such as a wrong mu value.
struct NonIntegralResult : Error {
  using Error::Error;
};

// ---- CLI ----
struct UsageError : Error {
  using Error::Error;
};

}  // namespace bsymb
