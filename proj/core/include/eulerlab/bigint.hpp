#pragma once

#include <gmpxx.h>

namespace eulerlab {

// Exact integer type shared by the counting tables and the series engine.
using BigInt = mpz_class;

}  // namespace eulerlab
