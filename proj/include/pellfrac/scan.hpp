#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellfrac/integer.hpp"
#include "pellfrac/polynomial.hpp"

namespace pellfrac {

enum class TFilter { All, Even, Odd, Mod4 };  // Mod4: t == 0 (mod 4)

TFilter filter_from_string(const std::string& s);
std::string filter_name(TFilter f);

struct ScanSpec {
    IntPolynomial poly;       // integer coefficients, degree <= 4
    std::uint64_t t_lo = 0;   // inclusive
    std::uint64_t t_hi = 0;   // inclusive
    TFilter filter = TFilter::All;
    std::uint64_t sieve_bound = 10000;
    std::uint64_t seed = 1;
    std::optional<std::string> csv_path;  // per-t rows written when set
    unsigned threads = 0;                 // 0 = hardware concurrency
};

struct ScanReport {
    std::uint64_t total = 0;             // number of t examined
    std::uint64_t squarefree_count = 0;
    // first few non-squarefree hits, as (t, witness prime)
    std::vector<std::pair<std::uint64_t, Int>> first_failures;
    std::optional<std::uint64_t> largest_squarefree_t;
};

// Solutions of poly(t) == 0 mod p^e for odd prime p, e in {1, 2}. Mod p by
// Tonelli-Shanks for quadratics (exhaustive for higher degree), lifted to p^2
// by Hensel where the derivative is a unit and by enumerating the p lifts
// where it degenerates. DomainError for p = 2: even-prime behaviour is
// captured exactly by an exhaustive pass mod 8 (see below).
std::vector<std::uint64_t> quadratic_congruence_roots(const IntPolynomial& poly,
                                                      std::uint64_t p, unsigned e);

// Residues r mod 4 with 4 | poly(t) for every t == r; found by exhaustive
// enumeration mod 8 (classes mod 4 are homogeneous since poly(t) mod 4 only
// depends on t mod 4, so the mod-8 pass is collapsed).
std::vector<std::uint64_t> even_prime_square_roots(const IntPolynomial& poly);

// Bit per t in [t_lo, t_hi]: set iff some prime p <= sieve_bound has
// p^2 | poly(t). p = 2 handled by exhaustive residue enumeration mod 8.
std::vector<bool> sieve_squarefree_range(const ScanSpec& spec);

// Exact squarefree count over the range: sieve first, then fully factor every
// surviving value. Deterministic for a fixed seed, independent of sieve_bound
// and of the thread count (chunk reports merge associatively).
ScanReport density_scan(const ScanSpec& spec);

} // namespace pellfrac
