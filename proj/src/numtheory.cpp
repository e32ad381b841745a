#include "pellfrac/numtheory.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "pellfrac/errors.hpp"

namespace pellfrac {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

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

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull, 41ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 w : kWitnesses) {
        u64 x = powmod(w % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho on 64-bit n; n must be odd composite, not a
// prime power of a small prime. Returns a nontrivial factor.
u64 pollard_brent_u64(u64 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u64 c = seed % (n - 1) + 1;
    while (true) {
        u64 y = seed % (n - 2) + 2, g = 1, q = 1, x = 0, ys = 0;
        const u64 m = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
        c = c % (n - 1) + 1;  // rare: retry with another polynomial
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
    }
}

// Same algorithm over mpz for inputs beyond 64 bits.
Int pollard_brent_mpz(const Int& n, u64 seed) {
    if (n % 2 == 0) return 2;
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, static_cast<unsigned long>(seed));
    Int nm1 = n - 1;
    while (true) {
        Int c, y;
        mpz_urandomm(c.get_mpz_t(), st, nm1.get_mpz_t());
        c += 1;
        mpz_urandomm(y.get_mpz_t(), st, nm1.get_mpz_t());
        y += 1;
        Int g = 1, q = 1, x, ys;
        const unsigned m = 128;
        for (unsigned long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long lim = std::min<unsigned long>(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(Int(abs(x - ys)), n);
            }
        }
        if (g != n) {
            gmp_randclear(st);
            return g;
        }
    }
}

void factor_rec(const Int& n, u64 seed, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    // perfect powers split instantly and protect rho from p^2 worst cases
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned> sub;
                factor_rec(root, seed, sub);
                for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
                return;
            }
        }
    }
    Int d;
    if (fits_u64(n)) {
        d = Int(static_cast<unsigned long>(pollard_brent_u64(to_u64(n), seed)));
    } else {
        d = pollard_brent_mpz(n, seed);
    }
    assert(d > 1 && d < n && n % d == 0);
    factor_rec(d, seed + 1, out);
    factor_rec(n / d, seed + 2, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    for (u64 p : kWitnesses)
        if (n % static_cast<unsigned long>(p) == 0) return n == p;
    // Miller-Rabin over the fixed witness set
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int nm1 = n - 1;
    for (u64 w : kWitnesses) {
        Int x, base(static_cast<unsigned long>(w));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    // the 13-witness set is deterministic below this bound
    static const Int kDetBound("3317044064679887385961981");
    if (n < kDetBound) return true;
    // beyond it: library BPSW + extra rounds (no known counterexample)
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

std::map<Int, unsigned> factorize(const Int& n, std::uint64_t seed) {
    if (n < 1) throw DomainError("factorize: n must be >= 1");
    std::map<Int, unsigned> out;
    Int rest = n;
    // small primes first; this also guarantees rho sees odd inputs
    static const std::vector<u64> small = primes_up_to(4096);
    for (u64 p : small) {
        if (rest == 1) break;
        if (Int(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            out[Int(static_cast<unsigned long>(p))] += 1;
            rest /= static_cast<unsigned long>(p);
        }
    }
    factor_rec(rest, seed, out);

    Int check = 1;
    for (const auto& [p, e] : out) {
        assert(is_prime(p));
        for (unsigned i = 0; i < e; ++i) check *= p;
    }
    if (check != n) throw MismatchError("factorize: factor product check failed");
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

std::vector<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
    assert(p > 2 && is_prime_u64(p));
    a %= p;
    if (a == 0) return {0};
    if (powmod(a, (p - 1) / 2, p) != 1) return {};  // non-residue
    u64 r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks; the non-residue search is deterministic and fast
        // for the small p used by the sieve
        u64 q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) q >>= 1, ++s;
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), rr = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 t2 = t;
            unsigned i = 0;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            u64 b = powmod(c, 1ull << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            rr = mulmod(rr, b, p);
        }
        r = rr;
    }
    assert(mulmod(r, r, p) == a);
    u64 r2 = p - r;
    if (r == r2) return {r};
    return r < r2 ? std::vector<u64>{r, r2} : std::vector<u64>{r2, r};
}

} // namespace pellfrac
