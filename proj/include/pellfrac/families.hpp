#pragma once

#include <string>
#include <vector>

#include "pellfrac/contfrac.hpp"
#include "pellfrac/integer.hpp"
#include "pellfrac/pell.hpp"
#include "pellfrac/polynomial.hpp"

namespace pellfrac {

// The five one-parameter Pell polynomial families built from a base f and its
// fundamental solution (c, h). Each family ships f(t), X(t), Y(t) with
// X(t)^2 - f(t) Y(t)^2 = 1 identically, and (f(0), X(0), Y(0)) = (f, c, h).
enum class FamilyId { F1 = 1, F2, F3, F4, F5 };

FamilyId family_from_string(const std::string& s);
std::string family_name(FamilyId id);

struct FamilyInstance {
    FamilyId family;
    Int f;  // base
    Int c;
    Int h;
    IntPolynomial f_poly;
    IntPolynomial X_poly;
    IntPolynomial Y_poly;
};

// Predicted continued fraction of sqrt(f_poly(t)): a leading quotient plus one
// period, every quotient a polynomial in t (most are constants).
struct PredictedPattern {
    IntPolynomial lead;
    std::vector<IntPolynomial> periodic;
};

struct Applicability {
    bool covered = false;
    std::string case_label;  // which case applies, or the failed hypothesis
};

// Builds f(t), X(t), Y(t) for the family over base f. F4 divides by (c - 1);
// its coefficients are guaranteed integral when the period of sqrt(f) is odd
// and are asserted in all cases (NonIntegralError on failure).
FamilyInstance instantiate(FamilyId family, const Int& f);

// Exact symbolic check that X^2 - f_poly Y^2 == 1.
bool pell_identity_check(const FamilyInstance& inst);

// Decides which case (if any) of the family's expansion law covers base f.
// The middle-quotient cases additionally require s_m = 2, the property the
// expansion law actually rests on; a_m in {a0, a0-1} alone does not force it
// when a0 <= 3 (f = 8 and f = 12 are genuine exceptions).
Applicability applicability(FamilyId family, const Int& f);

// Symbolic CF pattern for a covered (family, f). NotCoveredError otherwise.
PredictedPattern predicted_pattern(FamilyId family, const Int& f);

struct VerifyReport {
    FamilyId family;
    Int f;       // base
    Int t;
    Int f_t;     // f_poly(t)
    Int X_t;
    Int Y_t;
    bool covered;
    bool pattern_ok;      // only meaningful when covered
    bool fundamental_ok;  // (X_t, Y_t) == fundamental_solution(f_t)
    bool identity_ok;     // X_t^2 - f_t Y_t^2 == 1
    bool all_ok() const {
        return identity_ok && fundamental_ok && (!covered || pattern_ok);
    }
};

// Pointwise verification at one t: the instantiated pattern against the real
// expansion (a pattern equal to two copies of the actual period also counts:
// the doubled shapes degenerate that way at t = 0), fundamentality against
// the independent Pell solver, and the numeric identity. Fundamentality is
// reported for non-covered instances too, as data.
VerifyReport verify_at(FamilyId family, const Int& f, const Int& t);

} // namespace pellfrac
