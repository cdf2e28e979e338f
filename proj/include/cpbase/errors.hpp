#pragma once

#include <stdexcept>
#include <string>

namespace cpb {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeCharacteristic : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct FieldTooLarge : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct OrderMismatch : Error {
  using Error::Error;
};
struct NotEnumerated : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct TupleSpaceTooLarge : Error {
  using Error::Error;
};
struct CoprimalityViolated : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cpb
