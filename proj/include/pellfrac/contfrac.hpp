#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pellfrac/integer.hpp"

namespace pellfrac {

// One full period of the continued fraction of sqrt(f), with the integer side
// sequences r_k, s_k that drive the expansion:
//   r_0 = 0, s_0 = 1, a_0 = floor(sqrt(f)),
//   r_{k+1} = a_k s_k - r_k,  s_{k+1} = (f - r_{k+1}^2) / s_k,
//   a_{k+1} = floor((a_0 + r_{k+1}) / s_{k+1}).
// The period ends at the first k >= 1 with s_k = 1; its last quotient is 2*a_0
// and the interior a_1..a_n is a palindrome.
struct SurdExpansion {
    Int f;
    Int a0;
    std::vector<Int> period;  // a_1 .. a_{n+1}, size n+1, last entry 2*a0
    std::vector<Int> r_seq;   // r_0 .. r_{n+1}
    std::vector<Int> s_seq;   // s_0 .. s_{n+1} (s_{n+1} = 1 closes the period)
    std::size_t period_length = 0;  // n + 1
    std::size_t half_index = 0;     // m, where period_length = 2m or 2m + 1

    std::size_t n() const { return period_length - 1; }
    // quotient a_k for 1 <= k <= n+1
    const Int& a(std::size_t k) const { return period[k - 1]; }
};

SurdExpansion expand_sqrt(const Int& f);

struct ConvergentPair {
    long index;  // >= -2; seeds A_{-1} = B_{-2} = 1, A_{-2} = B_{-1} = 0
    Int A;
    Int B;
};

// Dense table of convergents A_i/B_i of [a0; quotients...], including the two
// seed columns, so lemma indices like B_{m-2} need no special cases.
class ConvergentTable {
  public:
    ConvergentTable(const Int& a0, const std::vector<Int>& quotients);

    const Int& A(long i) const { return A_[static_cast<std::size_t>(i + 2)]; }
    const Int& B(long i) const { return B_[static_cast<std::size_t>(i + 2)]; }
    long max_index() const { return static_cast<long>(A_.size()) - 3; }

  private:
    std::vector<Int> A_;
    std::vector<Int> B_;
};

// Pairs (A_0,B_0) .. (A_k,B_k) of [a0; quotients...]. k counts a0 as index 0.
std::vector<ConvergentPair> convergents(const Int& a0,
                                        const std::vector<Int>& quotients,
                                        std::size_t k);

// Value of the reversed finite continued fraction [b_m; b_{m-1}, ..., b_0],
// as an exact rational. Equals P_m / P_{m-1} where P_i are the numerators of
// the forward fraction [b_0; b_1, ..., b_m].
Rat reversed_value(const std::vector<Int>& quotients);

struct IdentityLine {
    std::string id;      // stable machine-readable name of the identity
    bool applicable;     // false when the identity's hypothesis fails for f
    bool pass;           // meaningful only when applicable
    std::string detail;  // short human-readable account of what was checked
};

struct IdentityReport {
    Int f;
    std::vector<IdentityLine> lines;
    bool all_pass;  // no applicable line failed
};

// Checks the full catalogue of convergent/period identities for sqrt(f):
// cross products and square norms against r/s, the r_k bound, the closed
// forms for the fundamental solution from the half-period, the middle-s
// property, and the middle-convergent relations. Hypotheses gate lines as
// "not applicable" rather than failing them.
IdentityReport identity_report(const Int& f);

} // namespace pellfrac
