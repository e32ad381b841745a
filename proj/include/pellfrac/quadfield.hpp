#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "pellfrac/families.hpp"
#include "pellfrac/integer.hpp"

namespace pellfrac {

struct SquarefreeStatus {
    Int n;
    bool squarefree = false;
    std::optional<Int> witness;  // some prime p with p^2 | n, iff not squarefree
};

// Exact squarefree test by complete factorization.
SquarefreeStatus is_squarefree(const Int& n, std::uint64_t seed = 1);

// Fundamental unit (a + b sqrt(D)) / denom of Q(sqrt(D)), D squarefree.
struct FundamentalUnit {
    Int D;
    Int a;
    Int b;
    int denom = 1;  // 2 only for D == 5 mod 8 with a, b both odd
    int norm = +1;  // (a^2 - D b^2) / denom^2
};

// From the (s-1)-th convergent (P, Q) of sqrt(D): the unit is P + Q sqrt(D),
// except that for D == 5 mod 8 it may be the exact cube root (a + b sqrt(D))/2
// of that quantity. Norm is +1 iff the period s is even. D is checked
// squarefree (NotSquarefreeError) and >= 2 (DomainError).
FundamentalUnit fundamental_unit(const Int& D);

// The unique odd pair (a, b) with ((a + b sqrt(D)) / 2)^3 = P + Q sqrt(D), if
// one exists. Requires P^2 - D Q^2 = +-1 and D == 5 mod 8. Works entirely in
// integers: a and b are isolated as the integer roots of one monotone cubic
// each (a^3 - 3 nu a = 2P, D b^3 + 3 nu b = 2Q with nu = P^2 - D Q^2), found
// by bisection, then confirmed by exact expansion; no floating point.
std::optional<std::pair<Int, Int>> cube_root_in_field(const Int& P, const Int& Q,
                                                      const Int& D);

struct UnitFromFamily {
    FamilyId family;
    Int f;        // base
    Int t;
    Int D;        // f_poly(t), squarefree
    FundamentalUnit unit;      // the family's prediction X(t) + Y(t) sqrt(D)
    FundamentalUnit cf_unit;   // independent recomputation from the CF of sqrt(D)
    bool covered;              // family expansion law covers base f
    bool agrees;               // unit == cf_unit exactly
    // unit equals cf_unit raised to the power that makes its norm +1 (families
    // whose covered pattern has odd length produce odd-period values, where
    // the fundamental unit has norm -1 and the family unit is its square)
    bool consistent;
};

// Reads the fundamental unit of Q(sqrt(f_poly(t))) directly off the family
// polynomials, when the residue conditions that keep f_poly(t) in the right
// congruence class hold at t (CongruenceError otherwise; the gate depends on
// f mod 4, the residue class of c, and the family). The value must be
// squarefree (NotSquarefreeError). The result is cross-checked against the
// continued fraction; disagreement raises MismatchError for covered bases and
// is reported in `agrees` for uncovered ones.
UnitFromFamily unit_from_family(FamilyId family, const Int& f, const Int& t);

} // namespace pellfrac
