#include "pellfrac/scan.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <fstream>
#include <thread>
#include <tuple>

#include "pellfrac/errors.hpp"
#include "pellfrac/numtheory.hpp"
#include "pellfrac/quadfield.hpp"

namespace pellfrac {

TFilter filter_from_string(const std::string& s) {
    if (s == "all") return TFilter::All;
    if (s == "even") return TFilter::Even;
    if (s == "odd") return TFilter::Odd;
    if (s == "mod4") return TFilter::Mod4;
    throw DomainError("unknown filter '" + s + "' (expected all|even|odd|mod4)");
}

std::string filter_name(TFilter f) {
    switch (f) {
        case TFilter::All: return "all";
        case TFilter::Even: return "even";
        case TFilter::Odd: return "odd";
        case TFilter::Mod4: return "mod4";
    }
    return "?";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool filter_accepts(TFilter f, u64 t) {
    switch (f) {
        case TFilter::All: return true;
        case TFilter::Even: return t % 2 == 0;
        case TFilter::Odd: return t % 2 == 1;
        case TFilter::Mod4: return t % 4 == 0;
    }
    return false;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// coefficients reduced into [0, m)
std::vector<u64> reduce_coeffs(const IntPolynomial& poly, u64 m) {
    std::vector<u64> cs;
    cs.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs()) {
        assert(c.get_den() == 1);
        cs.push_back(mpz_fdiv_ui(c.get_num().get_mpz_t(), static_cast<unsigned long>(m)));
    }
    while (cs.size() > 1 && cs.back() == 0) cs.pop_back();
    return cs;
}

u64 eval_mod(const std::vector<u64>& cs, u64 t, u64 m) {
    u64 v = 0;
    for (std::size_t i = cs.size(); i-- > 0;) v = (mulmod(v, t, m) + cs[i]) % m;
    return v;
}

} // namespace

std::vector<std::uint64_t> quadratic_congruence_roots(const IntPolynomial& poly,
                                                      std::uint64_t p, unsigned e) {
    if (p == 2) throw DomainError("quadratic_congruence_roots: p = 2 has its own routine");
    if (e != 1 && e != 2) throw DomainError("quadratic_congruence_roots: e must be 1 or 2");
    poly.assert_integral("congruence poly");

    std::vector<u64> cp = reduce_coeffs(poly, p);
    std::vector<u64> roots_p;
    if (cp.size() == 1) {
        if (cp[0] == 0)
            for (u64 r = 0; r < p; ++r) roots_p.push_back(r);
    } else if (cp.size() == 2) {
        // b t + c == 0  ->  t = -c / b
        u64 binv = powmod(cp[1], p - 2, p);
        roots_p.push_back(mulmod(p - cp[0] % p, binv, p) % p);
    } else if (cp.size() == 3) {
        // quadratic formula mod p (p odd, leading coefficient a unit)
        u64 a = cp[2], b = cp[1], c = cp[0];
        u64 disc = (mulmod(b, b, p) + p - mulmod(4 % p, mulmod(a, c, p), p)) % p;
        std::vector<u64> sq = sqrt_mod_prime(disc, p);
        u64 inv2a = powmod(mulmod(2 % p, a, p), p - 2, p);
        for (u64 s : sq) {
            u64 num = (s + p - b % p) % p;
            roots_p.push_back(mulmod(num, inv2a, p));
        }
    } else {
        // cubic/quartic reductions: exhaustive, p stays sieve-sized
        for (u64 t = 0; t < p; ++t)
            if (eval_mod(cp, t, p) == 0) roots_p.push_back(t);
    }
    std::sort(roots_p.begin(), roots_p.end());
    roots_p.erase(std::unique(roots_p.begin(), roots_p.end()), roots_p.end());
    for (u64 r : roots_p) assert(eval_mod(cp, r, p) == 0);
    if (e == 1) return roots_p;

    // Hensel step to p^2
    u64 p2 = p * p;
    std::vector<u64> cp2 = reduce_coeffs(poly, p2);
    // derivative coefficients mod p
    std::vector<u64> dp;
    for (std::size_t i = 1; i < cp.size(); ++i) dp.push_back(mulmod(cp[i], i % p, p));
    if (dp.empty()) dp.push_back(0);

    std::vector<u64> out;
    for (u64 r : roots_p) {
        u64 d = eval_mod(dp, r, p);
        if (d != 0) {
            // unique lift: r - f(r)/f'(r) computed mod p^2
            u64 fr = eval_mod(cp2, r, p2);
            assert(fr % p == 0);
            u64 k = mulmod(fr / p, powmod(d, p - 2, p), p);  // f(r)/p * d^-1 mod p
            u64 lift = (r + p2 - mulmod(k, p, p2)) % p2;
            assert(eval_mod(cp2, lift, p2) == 0);
            out.push_back(lift);
        } else {
            // degenerate: either every lift works or none does
            if (eval_mod(cp2, r, p2) == 0)
                for (u64 k = 0; k < p; ++k) out.push_back(r + k * p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> even_prime_square_roots(const IntPolynomial& poly) {
    poly.assert_integral("congruence poly");
    std::vector<u64> c4 = reduce_coeffs(poly, 4);
    std::vector<u64> out;
    for (u64 r = 0; r < 4; ++r) {
        // enumerate both mod-8 representatives of the class; they must agree
        u64 v1 = eval_mod(c4, r, 4), v2 = eval_mod(c4, r + 4, 4);
        assert(v1 == v2);
        if (v1 == 0) out.push_back(r);
    }
    return out;
}

namespace {

// per-t smallest squared prime p <= sieve_bound dividing poly(t); 0 = none found
std::vector<std::uint32_t> sieve_witnesses(const ScanSpec& spec) {
    if (spec.t_lo > spec.t_hi) throw DomainError("sieve: t_lo > t_hi");
    if (spec.sieve_bound < 2) throw DomainError("sieve: bound must be >= 2");
    spec.poly.assert_integral("scan poly");
    const u64 lo = spec.t_lo, hi = spec.t_hi;
    std::vector<std::uint32_t> witness(hi - lo + 1, 0);

    auto mark_class = [&](u64 r, u64 mod, std::uint32_t p) {
        u64 first = lo <= r ? r : r + ((lo - r + mod - 1) / mod) * mod;
        for (u64 t = first; t <= hi; t += mod) {
            auto& w = witness[t - lo];
            if (w == 0 || p < w) w = p;
        }
    };

    for (u64 r : even_prime_square_roots(spec.poly)) mark_class(r, 4, 2);
    for (u64 p : primes_up_to(spec.sieve_bound)) {
        if (p == 2) continue;
        for (u64 r : quadratic_congruence_roots(spec.poly, p, 2))
            mark_class(r, p * p, static_cast<std::uint32_t>(p));
    }
    return witness;
}

} // namespace

std::vector<bool> sieve_squarefree_range(const ScanSpec& spec) {
    std::vector<std::uint32_t> witness = sieve_witnesses(spec);
    std::vector<bool> marked(witness.size());
    for (std::size_t i = 0; i < witness.size(); ++i) marked[i] = witness[i] != 0;
    return marked;
}

namespace {

constexpr std::size_t kFailureSample = 8;

struct ChunkResult {
    std::uint64_t total = 0;
    std::uint64_t squarefree_count = 0;
    std::vector<std::pair<u64, Int>> first_failures;
    std::optional<u64> largest_squarefree_t;
    // per-t rows for CSV, kept only when a CSV is requested
    std::vector<std::tuple<u64, Int, bool, Int>> rows;
};

void merge_into(ScanReport& rep, const ChunkResult& c) {
    rep.total += c.total;
    rep.squarefree_count += c.squarefree_count;
    for (const auto& fp : c.first_failures) {
        if (rep.first_failures.size() < kFailureSample) rep.first_failures.push_back(fp);
    }
    if (c.largest_squarefree_t &&
        (!rep.largest_squarefree_t || *c.largest_squarefree_t > *rep.largest_squarefree_t))
        rep.largest_squarefree_t = c.largest_squarefree_t;
}

} // namespace

ScanReport density_scan(const ScanSpec& spec) {
    const u64 lo = spec.t_lo, hi = spec.t_hi;
    std::vector<std::uint32_t> sieve_witness = sieve_witnesses(spec);

    const bool want_rows = spec.csv_path.has_value();
    unsigned nthreads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    const u64 span = hi - lo + 1;
    nthreads = static_cast<unsigned>(std::min<u64>(nthreads, span));

    auto run_chunk = [&](u64 clo, u64 chi) {
        ChunkResult res;
        for (u64 t = clo; t <= chi; ++t) {
            if (!filter_accepts(spec.filter, t)) continue;
            res.total += 1;
            Int value = spec.poly.eval(Int(static_cast<unsigned long>(t)));
            if (value < 1) throw DomainError("scan: poly value not positive at t = " +
                                             std::to_string(t));
            bool sf;
            Int witness = 0;
            if (sieve_witness[t - lo] != 0) {
                sf = false;
                witness = static_cast<unsigned long>(sieve_witness[t - lo]);
            } else {
                SquarefreeStatus st = is_squarefree(value, spec.seed);
                sf = st.squarefree;
                if (!sf) witness = *st.witness;
            }
            if (sf) {
                res.squarefree_count += 1;
                res.largest_squarefree_t = t;
            } else if (res.first_failures.size() < kFailureSample) {
                res.first_failures.emplace_back(t, witness);
            }
            if (want_rows) res.rows.emplace_back(t, value, sf, witness);
        }
        return res;
    };

    std::vector<ChunkResult> results(nthreads);
    if (nthreads == 1) {
        results[0] = run_chunk(lo, hi);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        u64 chunk = span / nthreads;
        for (unsigned i = 0; i < nthreads; ++i) {
            u64 clo = lo + chunk * i;
            u64 chi = i + 1 == nthreads ? hi : clo + chunk - 1;
            pool.emplace_back([&, i, clo, chi] {
                try {
                    results[i] = run_chunk(clo, chi);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& ep : errors)
            if (ep) std::rethrow_exception(ep);
    }

    ScanReport rep;
    for (const auto& r : results) merge_into(rep, r);

    if (want_rows) {
        std::ofstream csv(*spec.csv_path);
        if (!csv) throw DomainError("scan: cannot open CSV path " + *spec.csv_path);
        csv << "t,value,squarefree,witness\n";
        for (const auto& r : results)
            for (const auto& [t, value, sf, witness] : r.rows)
                csv << t << "," << value.get_str() << "," << (sf ? 1 : 0) << ","
                    << (sf ? std::string{} : witness.get_str()) << "\n";
    }
    return rep;
}

} // namespace pellfrac
