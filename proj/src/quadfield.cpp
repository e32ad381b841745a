#include "pellfrac/quadfield.hpp"

#include <cassert>
#include <functional>

#include "pellfrac/contfrac.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/numtheory.hpp"
#include "pellfrac/pell.hpp"

namespace pellfrac {

SquarefreeStatus is_squarefree(const Int& n, std::uint64_t seed) {
    if (n < 1) throw DomainError("is_squarefree: n must be >= 1");
    SquarefreeStatus st;
    st.n = n;
    st.squarefree = true;
    if (n == 1) return st;
    auto factors = factorize(n, seed);
    for (const auto& [p, e] : factors) {
        if (e >= 2) {
            st.squarefree = false;
            st.witness = p;
            break;
        }
    }
    return st;
}

namespace {

// value of ((a + b sqrt(D)) / 2)^3, as (num_rat, num_irr) over denominator 8
std::pair<Int, Int> half_unit_cubed(const Int& a, const Int& b, const Int& D) {
    Int rat = a * a * a + 3 * a * b * b * D;
    Int irr = 3 * a * a * b + b * b * b * D;
    return {rat, irr};
}

// unique integer x >= 1 with g(x) == target, where g is strictly increasing
// on the integers >= 1; empty if there is none
std::optional<Int> monotone_cubic_root(const std::function<Int(const Int&)>& g,
                                       const Int& target) {
    Int lo = 1, hi = 2;
    while (g(hi) < target) hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (g(mid) < target) lo = mid + 1;
        else hi = mid;
    }
    if (g(lo) == target) return lo;
    return std::nullopt;
}

} // namespace

std::optional<std::pair<Int, Int>> cube_root_in_field(const Int& P, const Int& Q,
                                                      const Int& D) {
    if (D % 8 != 5) throw DomainError("cube_root_in_field: D must be 5 mod 8");
    Int nu = P * P - D * Q * Q;
    if (nu != 1 && nu != -1)
        throw DomainError("cube_root_in_field: P^2 - D Q^2 must be +-1");
    if (P < 1 || Q < 1) throw DomainError("cube_root_in_field: need P, Q >= 1");

    // a cube root (a + b sqrt(D))/2 has norm nu as well, so a and b satisfy
    // one monotone cubic each: a^3 - 3 nu a = 2P and D b^3 + 3 nu b = 2Q
    // (substitute D b^2 = a^2 - 4 nu into the exact expansion and vice versa)
    auto a_opt = monotone_cubic_root(
        [&](const Int& a) -> Int { return a * a * a - 3 * nu * a; }, 2 * P);
    if (!a_opt) return std::nullopt;
    auto b_opt = monotone_cubic_root(
        [&](const Int& b) -> Int { return D * b * b * b + 3 * nu * b; }, 2 * Q);
    if (!b_opt) return std::nullopt;
    const Int& a = *a_opt;
    const Int& b = *b_opt;
    if (a % 2 == 0 || b % 2 == 0) return std::nullopt;
    auto [rat, irr] = half_unit_cubed(a, b, D);
    if (rat != 8 * P || irr != 8 * Q) return std::nullopt;
    return std::make_pair(a, b);
}

FundamentalUnit fundamental_unit(const Int& D) {
    if (D < 2) throw DomainError("fundamental_unit: D must be >= 2");
    SquarefreeStatus st = is_squarefree(D);
    if (!st.squarefree)
        throw NotSquarefreeError("fundamental_unit: " + to_string(D) +
                                 " is divisible by " + to_string(*st.witness) + "^2");

    SurdExpansion e = expand_sqrt(D);
    const std::size_t s = e.period_length;
    // (s-1)-th convergent: quotients a_1 .. a_{s-1}
    std::vector<Int> inner(e.period.begin(), e.period.end() - 1);
    ConvergentTable tab(e.a0, inner);
    Int P = tab.A(static_cast<long>(s) - 1);
    Int Q = tab.B(static_cast<long>(s) - 1);

    FundamentalUnit u;
    u.D = D;
    u.a = P;
    u.b = Q;
    u.denom = 1;
    u.norm = s % 2 == 0 ? +1 : -1;
    assert(P * P - D * Q * Q == u.norm);

    if (D % 8 == 5) {
        if (auto ab = cube_root_in_field(P, Q, D)) {
            u.a = ab->first;
            u.b = ab->second;
            u.denom = 2;
            assert(u.a * u.a - D * u.b * u.b == 4 * u.norm);
        }
    }
    return u;
}

namespace {

// The residue conditions under which a family value stays in a congruence
// class where the continued-fraction unit is integral (never the half-integer
// D == 5 mod 8 shape). They depend on f mod 4, and for some classes on the
// residue of c.
void check_congruence_gate(FamilyId family, const Int& f, const Int& c, const Int& t) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok)
            throw CongruenceError(family_name(family) + " over f = " + to_string(f) +
                                  ": value class only controlled for " + what);
    };
    long fm = mpz_fdiv_ui(f.get_mpz_t(), 4);
    switch (fm) {
        case 2:
            // c odd, h even: value stays 2 mod 4 for all t except F1 at odd t
            if (family == FamilyId::F1) need(t % 2 == 0, "even t");
            return;
        case 3: {
            long c2 = mpz_fdiv_ui(c.get_mpz_t(), 2);
            if (c2 == 0) {
                // (c even, h odd) row: all families need even t
                need(t % 2 == 0, "even t");
            } else {
                // (c == +-1 mod 8, h == 0 mod 4) row
                if (family == FamilyId::F1) need(t % 2 == 0, "even t");
            }
            return;
        }
        case 1: {
            // only f == 1 mod 8 keeps the value out of the 5 mod 8 class
            need(mpz_fdiv_ui(f.get_mpz_t(), 8) == 1, "f = 1 mod 8");
            long c8 = mpz_fdiv_ui(c.get_mpz_t(), 8);
            if (family == FamilyId::F1) {
                need(t % 4 == 0, "t = 0 mod 4");
            } else if (c8 == 7 && family == FamilyId::F5) {
                need(t % 2 == 0, "even t");
            }
            // c8 == 1: F2..F5 unrestricted; c8 == 7: F2..F4 unrestricted
            return;
        }
        default:
            throw CongruenceError("f = " + to_string(f) +
                                  " is 0 mod 4: no congruence row controls the value class");
    }
}

} // namespace

UnitFromFamily unit_from_family(FamilyId family, const Int& f, const Int& t) {
    if (t < 0) throw DomainError("unit_from_family: t must be >= 0");
    FamilyInstance inst = instantiate(family, f);
    check_congruence_gate(family, f, inst.c, t);

    UnitFromFamily r;
    r.family = family;
    r.f = f;
    r.t = t;
    r.D = inst.f_poly.eval(t);
    SquarefreeStatus st = is_squarefree(r.D);
    if (!st.squarefree)
        throw NotSquarefreeError("value " + to_string(r.D) + " at t = " + to_string(t) +
                                 " is divisible by " + to_string(*st.witness) + "^2");

    r.unit.D = r.D;
    r.unit.a = inst.X_poly.eval(t);
    r.unit.b = inst.Y_poly.eval(t);
    r.unit.denom = 1;
    r.unit.norm = +1;
    assert(r.unit.a * r.unit.a - r.D * r.unit.b * r.unit.b == 1);

    r.cf_unit = fundamental_unit(r.D);
    r.covered = applicability(family, f).covered;
    r.agrees = r.cf_unit.denom == 1 && r.cf_unit.norm == +1 &&
               r.cf_unit.a == r.unit.a && r.cf_unit.b == r.unit.b;

    // the gate guarantees an integral cf unit; its norm-positive power is
    // itself for even period and its square for odd period
    assert(r.cf_unit.denom == 1);
    if (r.cf_unit.norm == +1) {
        r.consistent = r.agrees;
    } else {
        Int sq_a = r.cf_unit.a * r.cf_unit.a + r.D * r.cf_unit.b * r.cf_unit.b;
        Int sq_b = 2 * r.cf_unit.a * r.cf_unit.b;
        r.consistent = sq_a == r.unit.a && sq_b == r.unit.b;
    }
    if (r.covered && !r.consistent)
        throw MismatchError(family_name(family) + " over f = " + to_string(f) +
                            " at t = " + to_string(t) +
                            ": family unit disagrees with the CF unit");
    return r;
}

} // namespace pellfrac
