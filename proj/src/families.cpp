#include "pellfrac/families.hpp"

#include <algorithm>
#include <cassert>

#include "pellfrac/errors.hpp"

namespace pellfrac {

FamilyId family_from_string(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), ::toupper);
    if (u == "F1" || u == "1") return FamilyId::F1;
    if (u == "F2" || u == "2") return FamilyId::F2;
    if (u == "F3" || u == "3") return FamilyId::F3;
    if (u == "F4" || u == "4") return FamilyId::F4;
    if (u == "F5" || u == "5") return FamilyId::F5;
    throw DomainError("unknown family '" + s + "' (expected F1..F5)");
}

std::string family_name(FamilyId id) {
    return "F" + std::to_string(static_cast<int>(id));
}

FamilyInstance instantiate(FamilyId family, const Int& f) {
    PellSolution sol = fundamental_solution(f);  // throws on perfect squares
    const Int& c = sol.X;
    const Int& h = sol.Y;
    FamilyInstance inst;
    inst.family = family;
    inst.f = f;
    inst.c = c;
    inst.h = h;

    const Int h2 = h * h, h3 = h2 * h, h4 = h2 * h2, h6 = h3 * h3;
    switch (family) {
        case FamilyId::F1:
            inst.f_poly = IntPolynomial::from_ints({f, 2 * c, h2});
            inst.X_poly = IntPolynomial::from_ints({c, h2});
            inst.Y_poly = IntPolynomial::from_ints({h});
            break;
        case FamilyId::F2: {
            Int d = c - 1;
            inst.f_poly = IntPolynomial::from_ints({f, 2 * d * d, d * d * h2});
            inst.X_poly = IntPolynomial::from_ints({c, 2 * d * h2, d * h4});
            inst.Y_poly = IntPolynomial::from_ints({h, h3});
            break;
        }
        case FamilyId::F3: {
            Int d = c + 1;
            inst.f_poly = IntPolynomial::from_ints({f, 2 * d * d, d * d * h2});
            inst.X_poly = IntPolynomial::from_ints({c, 2 * d * h2, d * h4});
            inst.Y_poly = IntPolynomial::from_ints({h, h3});
            break;
        }
        case FamilyId::F4: {
            // divides by c - 1; integral whenever the period of sqrt(f) is odd
            // (then h^2 = 2(c-1) B_n^2), occasionally integral otherwise
            Int d = c + 1;
            inst.f_poly = IntPolynomial::from_ints({f, 2 * (c * c - 1), d * d * h2});
            inst.X_poly = IntPolynomial(
                {Rat(c), Rat(2 * d * h2), Rat(d * d * h4) / Rat(c - 1)});
            inst.Y_poly = IntPolynomial({Rat(h), Rat(d * h3) / Rat(c - 1)});
            inst.X_poly.assert_integral("F4 X(t) for f = " + to_string(f));
            inst.Y_poly.assert_integral("F4 Y(t) for f = " + to_string(f));
            break;
        }
        case FamilyId::F5: {
            Int d = c - 1;
            inst.f_poly = IntPolynomial::from_ints(
                {f, 2 * d * (2 * c - 1), 6 * d * d * h2, 4 * d * d * h4, d * d * h6});
            inst.X_poly = IntPolynomial::from_ints({c, 3 * d * h2, 3 * d * h4, d * h6});
            inst.Y_poly = IntPolynomial::from_ints({h, h3});
            break;
        }
    }
    return inst;
}

bool pell_identity_check(const FamilyInstance& inst) {
    IntPolynomial lhs =
        inst.X_poly * inst.X_poly - inst.f_poly * (inst.Y_poly * inst.Y_poly);
    return lhs.is_constant_one();
}

namespace {

struct CaseInfo {
    SurdExpansion e;
    bool n_even;       // n = period_length - 1
    bool middle_ok;    // n odd, a_m in {a0, a0-1}, s_m = 2
    bool m_odd;
    std::string middle_reason;  // why middle_ok failed (when it did)
};

CaseInfo case_info(const Int& f) {
    CaseInfo ci{expand_sqrt(f), false, false, false, {}};
    const std::size_t n = ci.e.n();
    ci.n_even = n % 2 == 0;
    if (ci.n_even) {
        ci.middle_reason = "period is odd (n even)";
        return ci;
    }
    const std::size_t m = ci.e.half_index;  // period_length = 2m
    ci.m_odd = m % 2 == 1;
    const Int& am = ci.e.a(m);
    if (am != ci.e.a0 && am != ci.e.a0 - 1) {
        ci.middle_reason = "a_m not in {a0, a0-1}";
    } else if (ci.e.s_seq[m] != 2) {
        // a_m membership alone does not force s_m = 2 when a0 <= 3
        // (f = 8 and f = 12 are real exceptions); the expansion laws need it
        ci.middle_reason = "s_m != 2";
    } else {
        ci.middle_ok = true;
    }
    return ci;
}

} // namespace

Applicability applicability(FamilyId family, const Int& f) {
    CaseInfo ci = case_info(f);
    Applicability ap;
    switch (family) {
        case FamilyId::F1:
            ap.covered = true;
            ap.case_label = ci.n_even ? "F1 doubled case: n even" : "F1 plain case: n odd";
            break;
        case FamilyId::F2:
            if (ci.n_even) {
                ap.covered = true;
                ap.case_label = "F2 plain case: n even";
            } else if (ci.middle_ok && ci.m_odd) {
                ap.covered = true;
                ap.case_label = "F2 middle case: n odd, m odd, a_m in {a0, a0-1}, s_m = 2";
            } else {
                ap.case_label = "not covered: " +
                                (ci.middle_ok ? std::string("m even") : ci.middle_reason);
            }
            break;
        case FamilyId::F3:
            if (!ci.n_even && ci.middle_ok && !ci.m_odd) {
                ap.covered = true;
                ap.case_label = "F3 middle case: n odd, m even, a_m in {a0, a0-1}, s_m = 2";
            } else {
                ap.case_label = "not covered: " +
                                (ci.n_even ? std::string("period is odd (n even)")
                                 : ci.middle_ok ? std::string("m odd")
                                                : ci.middle_reason);
            }
            break;
        case FamilyId::F4:
            if (ci.n_even) {
                ap.covered = true;
                ap.case_label = "F4: n even";
            } else {
                ap.case_label = "not covered: period is even (n odd)";
            }
            break;
        case FamilyId::F5:
            if (ci.n_even) {
                ap.covered = true;
                ap.case_label = "F5 doubled case: n even";
            } else if (ci.middle_ok && ci.m_odd) {
                ap.covered = true;
                ap.case_label = "F5 middle case: n odd, m odd, a_m in {a0, a0-1}, s_m = 2";
            } else {
                ap.case_label = "not covered: " +
                                (ci.middle_ok ? std::string("m even") : ci.middle_reason);
            }
            break;
    }
    return ap;
}

PredictedPattern predicted_pattern(FamilyId family, const Int& f) {
    Applicability ap = applicability(family, f);
    if (!ap.covered)
        throw NotCoveredError(family_name(family) + " over f = " + to_string(f) +
                              ": " + ap.case_label);

    SurdExpansion e = expand_sqrt(f);
    PellSolution sol = fundamental_solution(f);
    const Int& c = sol.X;
    const Int& h = sol.Y;
    const std::size_t n = e.n();
    const std::size_t m = e.half_index;
    const Int two_a0 = 2 * e.a0;

    auto konst = [](const Int& v) { return IntPolynomial::constant(v); };
    std::vector<IntPolynomial> inner;  // a_1 .. a_n as constant quotients
    for (std::size_t k = 1; k <= n; ++k) inner.push_back(konst(e.a(k)));

    PredictedPattern pat;
    switch (family) {
        case FamilyId::F1: {
            pat.lead = IntPolynomial::from_ints({e.a0, h});
            pat.periodic = inner;
            if (n % 2 == 0) {
                pat.periodic.push_back(konst(two_a0));
                pat.periodic.insert(pat.periodic.end(), inner.begin(), inner.end());
            }
            pat.periodic.push_back(IntPolynomial::from_ints({two_a0, 2 * h}));
            break;
        }
        case FamilyId::F2:
        case FamilyId::F3: {
            Int g = family == FamilyId::F2 ? Int(c - 1) : Int(c + 1);
            pat.lead = IntPolynomial::from_ints({e.a0, g * h});
            if (family == FamilyId::F2 && n % 2 == 0) {
                pat.periodic = inner;
            } else {
                // palindrome split around the middle quotient a_m
                for (std::size_t k = 1; k < m; ++k) pat.periodic.push_back(konst(e.a(k)));
                pat.periodic.push_back(IntPolynomial::from_ints({e.a(m), g * h}));
                for (std::size_t k = m; k-- > 1;) pat.periodic.push_back(konst(e.a(k)));
            }
            pat.periodic.push_back(IntPolynomial::from_ints({two_a0, 2 * g * h}));
            break;
        }
        case FamilyId::F4: {
            Int g = c + 1;
            pat.lead = IntPolynomial::from_ints({e.a0, g * h});
            pat.periodic = inner;
            pat.periodic.push_back(IntPolynomial::from_ints({two_a0, 2 * g * h}));
            break;
        }
        case FamilyId::F5: {
            Int g = c - 1;
            Int h3 = h * h * h;
            pat.lead = IntPolynomial::from_ints({e.a0, 2 * g * h, g * h3});
            if (n % 2 == 1) {
                for (std::size_t k = 1; k < m; ++k) pat.periodic.push_back(konst(e.a(k)));
                pat.periodic.push_back(IntPolynomial::from_ints({e.a(m), g * h}));
                for (std::size_t k = m; k-- > 1;) pat.periodic.push_back(konst(e.a(k)));
            } else {
                pat.periodic = inner;
                pat.periodic.push_back(IntPolynomial::from_ints({two_a0, 2 * g * h}));
                pat.periodic.insert(pat.periodic.end(), inner.begin(), inner.end());
            }
            pat.periodic.push_back(IntPolynomial::from_ints({two_a0, 4 * g * h, 2 * g * h3}));
            break;
        }
    }
    return pat;
}

VerifyReport verify_at(FamilyId family, const Int& f, const Int& t) {
    if (t < 0) throw DomainError("verify_at: t must be >= 0");
    FamilyInstance inst = instantiate(family, f);

    VerifyReport rep;
    rep.family = family;
    rep.f = f;
    rep.t = t;
    rep.f_t = inst.f_poly.eval(t);
    rep.X_t = inst.X_poly.eval(t);
    rep.Y_t = inst.Y_poly.eval(t);
    rep.identity_ok = rep.X_t * rep.X_t - rep.f_t * rep.Y_t * rep.Y_t == 1;
    assert(!is_perfect_square(rep.f_t));  // identity with Y_t >= 1 forbids squares

    PellSolution fund = fundamental_solution(rep.f_t);
    rep.fundamental_ok = fund.X == rep.X_t && fund.Y == rep.Y_t;

    Applicability ap = applicability(family, f);
    rep.covered = ap.covered;
    rep.pattern_ok = true;
    if (ap.covered) {
        PredictedPattern pat = predicted_pattern(family, f);
        SurdExpansion actual = expand_sqrt(rep.f_t);
        std::vector<Int> pred;
        pred.reserve(pat.periodic.size());
        for (const auto& q : pat.periodic) pred.push_back(q.eval(t));
        const std::vector<Int>& act = actual.period;
        bool match = pat.lead.eval(t) == actual.a0;
        if (match) {
            if (pred == act) {
                match = true;
            } else if (pred.size() == 2 * act.size()) {
                // doubled shapes collapse to two copies of the base period at t = 0
                match = std::equal(act.begin(), act.end(), pred.begin()) &&
                        std::equal(act.begin(), act.end(), pred.begin() + act.size());
            } else {
                match = false;
            }
        }
        rep.pattern_ok = match;
    }
    return rep;
}

} // namespace pellfrac
