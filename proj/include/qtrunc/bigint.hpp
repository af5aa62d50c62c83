#pragma once

#include <gmpxx.h>

#include <string>

namespace qtrunc {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace qtrunc
