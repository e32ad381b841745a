#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pellfrac/contfrac.hpp"
#include "pellfrac/integer.hpp"

namespace pellfrac {

struct PellSolution {
    Int f;
    Int X;
    Int Y;
    int sign = +1;  // X^2 - f Y^2 = sign
    unsigned rank = 1;
};

// Smallest positive (c, h) with c^2 - f h^2 = 1. Even period 2m reads the
// solution off (A_{2m-1}, B_{2m-1}); odd period uses (2 A_n^2 + 1, 2 A_n B_n)
// instead of expanding a second period.
PellSolution fundamental_solution(const Int& f);

// Smallest (X, Y) with X^2 - f Y^2 = -1; exists iff the period is odd, in
// which case it is (A_n, B_n).
std::optional<PellSolution> negative_fundamental(const Int& f);

// k-th positive solution: (X_1 + Y_1 sqrt(f))^k expanded over Z[sqrt(f)].
PellSolution nth_solution(const Int& f, unsigned k);

struct CongruenceRow {
    std::string c_constraint;
    std::string h_constraint;
    bool matches(const Int& c, const Int& h) const;
};

struct CongruenceProfile {
    Int f;
    int f_mod4;
    Int c;
    Int h;
    std::vector<CongruenceRow> admitted;  // rows allowed for this f mod 4
    int matched_row = -1;                 // -1 <=> f == 0 mod 4 (outside table)
    bool outside_table = false;
};

// Residue classification of the fundamental (c, h) by f mod 4. Every
// non-square f with f != 0 mod 4 matches exactly one admitted row;
// f == 0 mod 4 is reported as outside the table (such f is never squarefree).
CongruenceProfile congruence_check(const Int& f);

} // namespace pellfrac
