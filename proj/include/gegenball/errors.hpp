#pragma once

#include <stdexcept>

namespace gegenball {

/// A computation could not reach its accuracy contract (ill-conditioned Gram
/// matrix, rank mismatch, normalization drift).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gegenball
