#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "pellfrac/integer.hpp"
#include "pellfrac/numtheory.hpp"

using namespace pellfrac;

TEST_CASE("primality on small integers") {
    CHECK_FALSE(is_prime(Int(0)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK_FALSE(is_prime(Int(4)));
    CHECK(is_prime(Int(97)));
    CHECK_FALSE(is_prime(Int(91)));  // 7 * 13
    CHECK_FALSE(is_prime(Int(-7)));

    // against a sieve
    std::vector<std::uint64_t> ps = primes_up_to(2000);
    std::size_t idx = 0;
    for (long n = 0; n <= 2000; ++n) {
        bool in_sieve = idx < ps.size() && ps[idx] == static_cast<std::uint64_t>(n);
        if (in_sieve) ++idx;
        CAPTURE(n);
        REQUIRE(is_prime(Int(n)) == in_sieve);
    }
}

TEST_CASE("primality on large integers") {
    CHECK(is_prime((Int(1) << 61) - 1));             // Mersenne
    CHECK(is_prime((Int(1) << 89) - 1));             // Mersenne, above 64 bits
    CHECK_FALSE(is_prime((Int(1) << 67) - 1));       // 193707721 * 761838257287
    CHECK(is_prime(Int("1000000000000000009")));
    CHECK(is_prime(Int("18446744073709551557")));    // largest prime below 2^64
    // smallest composite that fools the first 13 prime bases; must land in
    // the probabilistic range, which rejects it
    CHECK_FALSE(is_prime(Int("3317044064679887385961981")));
}

TEST_CASE("factorization") {
    CHECK(factorize(Int(1)).empty());
    CHECK(factorize(Int(2)) == std::map<Int, unsigned>{{Int(2), 1}});
    CHECK(factorize(Int(7866)) ==
          std::map<Int, unsigned>{{Int(2), 1}, {Int(3), 2}, {Int(19), 1}, {Int(23), 1}});
    CHECK(factorize(Int(1024)) == std::map<Int, unsigned>{{Int(2), 10}});

    // perfect power of a large prime
    Int p = 1000003;
    CHECK(factorize(p * p * p) == std::map<Int, unsigned>{{p, 3}});

    // semiprime beyond the trial-division bound
    CHECK(factorize(Int(1000003) * Int(1000033)) ==
          std::map<Int, unsigned>{{Int(1000003), 1}, {Int(1000033), 1}});

    // published squarefree value: factors are prime and multiply back
    Int big("282234512826670");
    Int prod = 1;
    for (const auto& [q, e] : factorize(big)) {
        CHECK(is_prime(q));
        for (unsigned i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == big);
}

TEST_CASE("factorization is seed independent") {
    for (std::uint64_t seed : {1ull, 7ull, 424242ull}) {
        CHECK(factorize(Int("45113311649113959"), seed) ==
              factorize(Int("45113311649113959"), 1));
        CHECK(factorize(Int(7866), seed) == factorize(Int(7866)));
    }
}

TEST_CASE("products reassemble") {
    for (long n : {2, 360, 9991, 123456789, 999999937}) {
        Int prod = 1;
        for (const auto& [p, e] : factorize(Int(n)))
            for (unsigned i = 0; i < e; ++i) prod *= p;
        CHECK(prod == n);
    }
}

TEST_CASE("prime sieve") {
    CHECK(primes_up_to(1) == std::vector<std::uint64_t>{});
    CHECK(primes_up_to(30) ==
          std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(10000).size() == 1229);
}

TEST_CASE("modular square roots") {
    CHECK(sqrt_mod_prime(2, 7) == std::vector<std::uint64_t>{3, 4});
    CHECK(sqrt_mod_prime(4, 5) == std::vector<std::uint64_t>{2, 3});
    CHECK(sqrt_mod_prime(0, 13) == std::vector<std::uint64_t>{0});
    CHECK(sqrt_mod_prime(3, 7).empty());  // non-residue
    CHECK(sqrt_mod_prime(5, 41) == std::vector<std::uint64_t>{13, 28});  // 1 mod 4
    CHECK(sqrt_mod_prime(10, 13) == std::vector<std::uint64_t>{6, 7});

    // exhaustive against brute force for several primes incl. 2-adic rich p-1
    for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 97ull, 257ull}) {
        std::vector<std::vector<std::uint64_t>> expect(p);
        for (std::uint64_t r = 0; r < p; ++r) expect[r * r % p].push_back(r);
        for (auto& v : expect) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        for (std::uint64_t a = 0; a < p; ++a) {
            CAPTURE(p);
            CAPTURE(a);
            REQUIRE(sqrt_mod_prime(a, p) == expect[a]);
        }
    }
}
