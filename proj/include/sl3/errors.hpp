#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl3 {

// Precondition violations on caller input (bad weight, non-prime p, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Corrupt or incomplete shipped data.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The decomposition algorithm hit a state it is not supposed to reach.
struct IntegrityError : std::runtime_error {
  IntegrityError(std::string block_id, const std::string& what)
      : std::runtime_error("integrity failure in block " + block_id + ": " + what),
        block(std::move(block_id)) {}
  std::string block;
};

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coeff checked_sub(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coeff checked_mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

}  // namespace sl3
