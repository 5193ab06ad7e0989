#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permspec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NotUnitaryError : Error {
  NotUnitaryError(double defect_, double tol_)
      : Error("matrix is not unitary: defect " + std::to_string(defect_) +
              " exceeds tolerance " + std::to_string(tol_)),
        defect(defect_), tol(tol_) {}
  double defect;
  double tol;
};

struct InsufficientMomentsError : Error {
  InsufficientMomentsError(std::int64_t index_, std::int64_t needed_,
                           std::int64_t available_)
      : Error("cannot invert index " + std::to_string(index_) + ": moment at k=" +
              std::to_string(needed_) + " required but only " +
              std::to_string(available_) + " moments available"),
        index(index_), needed(needed_), available(available_) {}
  std::int64_t index;
  std::int64_t needed;
  std::int64_t available;
};

struct NonRealMomentError : Error {
  NonRealMomentError(std::int64_t k_, double imag_)
      : Error("moment at k=" + std::to_string(k_) +
              " has non-real value (Im = " + std::to_string(imag_) + ")"),
        k(k_), imag(imag_) {}
  std::int64_t k;
  double imag;
};

struct InvalidDensitiesError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

// 64-bit rational arithmetic ran out of range.
struct ArithmeticOverflowError : Error {
  using Error::Error;
};

}  // namespace permspec
