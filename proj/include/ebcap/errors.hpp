#ifndef EBCAP_ERRORS_HPP
#define EBCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ebcap {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitian : Error {
  using Error::Error;
};
struct InvalidState : Error {
  using Error::Error;
};
struct InvalidPmf : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct UnsupportedDimension : Error {
  using Error::Error;
};
struct InvalidPOVM : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Malformed files, configs, or flag values.
struct InvalidInput : Error {
  using Error::Error;
};

/// Filesystem read/write failures.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ebcap

#endif
