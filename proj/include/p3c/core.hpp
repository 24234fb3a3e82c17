#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace p3c {

// Counting results routinely exceed 64 bits (2^n sets on n vertices), so all
// counts are arbitrary-precision integers.
using Count = mpz_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Count pow2(unsigned long k) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

inline std::string to_decimal(const Count& c) { return c.get_str(); }

}  // namespace p3c
