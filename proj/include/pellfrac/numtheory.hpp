#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pellfrac/integer.hpp"

namespace pellfrac {

// Deterministic for n < 3.317e24 (fixed 13-witness Miller-Rabin set proven
// for that range); larger n fall back to base-2 + strong Lucas plus seeded
// extra rounds. All acceptance-path inputs are ~1e17, well inside the
// deterministic range.
bool is_prime(const Int& n);

// Full factorization, prime -> exponent. Trial division by small primes, then
// Pollard rho (Brent variant) on the remaining cofactors, recursing until all
// parts pass is_prime. The product of the returned powers is re-checked
// against n. seed makes the rho walks reproducible.
std::map<Int, unsigned> factorize(const Int& n, std::uint64_t seed = 1);

// Square roots of a mod odd prime p: empty if a is a non-residue, {0} if
// a == 0, else the two roots. Tonelli-Shanks; roots are verified by squaring.
std::vector<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

// Primes <= limit by sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace pellfrac
