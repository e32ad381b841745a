#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pellfrac {

using Int = mpz_class;
using Rat = mpq_class;

// Floor square root. n must be >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63;
}

inline std::uint64_t to_u64(const Int& n) {
    return mpz_get_ui(n.get_mpz_t());
}

inline std::string to_string(const Int& n) {
    return n.get_str();
}

} // namespace pellfrac
