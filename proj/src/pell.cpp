#include "pellfrac/pell.hpp"

#include <cassert>

#include "pellfrac/errors.hpp"

namespace pellfrac {

PellSolution fundamental_solution(const Int& f) {
    SurdExpansion e = expand_sqrt(f);
    const long n = static_cast<long>(e.n());
    // convergents only up to A_n/B_n; the closing quotient is never needed
    std::vector<Int> inner(e.period.begin(), e.period.end() - 1);
    ConvergentTable tab(e.a0, inner);

    PellSolution sol;
    sol.f = f;
    sol.sign = +1;
    sol.rank = 1;
    if (e.period_length % 2 == 0) {
        sol.X = tab.A(n);
        sol.Y = tab.B(n);
    } else {
        // odd period: A_n^2 - f B_n^2 = -1, square the unit instead of
        // walking a second period
        sol.X = 2 * tab.A(n) * tab.A(n) + 1;
        sol.Y = 2 * tab.A(n) * tab.B(n);
    }
    assert(sol.X * sol.X - f * sol.Y * sol.Y == 1);
    return sol;
}

std::optional<PellSolution> negative_fundamental(const Int& f) {
    SurdExpansion e = expand_sqrt(f);
    if (e.period_length % 2 == 0) return std::nullopt;
    const long n = static_cast<long>(e.n());
    std::vector<Int> inner(e.period.begin(), e.period.end() - 1);
    ConvergentTable tab(e.a0, inner);
    PellSolution sol;
    sol.f = f;
    sol.X = tab.A(n);
    sol.Y = tab.B(n);
    sol.sign = -1;
    sol.rank = 1;
    assert(sol.X * sol.X - f * sol.Y * sol.Y == -1);
    return sol;
}

PellSolution nth_solution(const Int& f, unsigned k) {
    if (k == 0) throw DomainError("nth_solution: rank must be >= 1");
    PellSolution base = fundamental_solution(f);
    // (X + Y sqrt(f))^k by binary exponentiation over Z[sqrt(f)]
    Int rx = 1, ry = 0;
    Int px = base.X, py = base.Y;
    unsigned e = k;
    while (e > 0) {
        if (e & 1u) {
            Int nx = rx * px + ry * py * f;
            Int ny = rx * py + ry * px;
            rx = nx;
            ry = ny;
        }
        e >>= 1u;
        if (e > 0) {
            Int nx = px * px + py * py * f;
            Int ny = 2 * px * py;
            px = nx;
            py = ny;
        }
    }
    PellSolution sol;
    sol.f = f;
    sol.X = rx;
    sol.Y = ry;
    sol.sign = +1;
    sol.rank = k;
    assert(sol.X * sol.X - f * sol.Y * sol.Y == 1);
    return sol;
}

namespace {

long smod(const Int& v, long m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r.get_si();
}

} // namespace

bool CongruenceRow::matches(const Int& c, const Int& h) const {
    auto check = [](const std::string& cons, const Int& v) {
        // constraint grammar: "+-R mod M" or "R mod M"
        if (cons.substr(0, 2) == "+-") {
            std::size_t sp = cons.find(" mod ");
            long r = std::stol(cons.substr(2, sp - 2));
            long mm = std::stol(cons.substr(sp + 5));
            long got = smod(v, mm);
            return got == r % mm || got == (mm - r) % mm;
        }
        std::size_t sp = cons.find(" mod ");
        long r = std::stol(cons.substr(0, sp));
        long mm = std::stol(cons.substr(sp + 5));
        return smod(v, mm) == r % mm;
    };
    return check(c_constraint, c) && check(h_constraint, h);
}

CongruenceProfile congruence_check(const Int& f) {
    PellSolution sol = fundamental_solution(f);
    CongruenceProfile p;
    p.f = f;
    p.f_mod4 = static_cast<int>(smod(f, 4));
    p.c = sol.X;
    p.h = sol.Y;
    switch (p.f_mod4) {
        case 1:
            p.admitted = {{"+-1 mod 8", "0 mod 4"}};
            break;
        case 2:
            p.admitted = {{"+-1 mod 16", "0 mod 4"}, {"+-3 mod 8", "2 mod 4"}};
            break;
        case 3:
            p.admitted = {{"+-1 mod 8", "0 mod 4"}, {"0 mod 2", "1 mod 2"}};
            break;
        default:
            p.outside_table = true;  // f == 0 mod 4: never squarefree, no rows
            return p;
    }
    for (std::size_t i = 0; i < p.admitted.size(); ++i) {
        if (p.admitted[i].matches(p.c, p.h)) {
            if (p.matched_row >= 0)
                throw UnclassifiedError("congruence_check: rows overlap for f = " +
                                        to_string(f));
            p.matched_row = static_cast<int>(i);
        }
    }
    if (p.matched_row < 0)
        throw UnclassifiedError("congruence_check: no row matches (c, h) = (" +
                                to_string(p.c) + ", " + to_string(p.h) + ")");
    return p;
}

} // namespace pellfrac
