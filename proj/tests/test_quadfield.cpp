#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pellfrac/contfrac.hpp"
#include "pellfrac/errors.hpp"
#include "pellfrac/integer.hpp"
#include "pellfrac/quadfield.hpp"

using namespace pellfrac;

TEST_CASE("squarefree testing") {
    CHECK(is_squarefree(Int(1)).squarefree);
    CHECK(is_squarefree(Int(22)).squarefree);
    CHECK(is_squarefree(Int("282234512826670")).squarefree);

    SquarefreeStatus s4 = is_squarefree(Int(4));
    CHECK_FALSE(s4.squarefree);
    CHECK(*s4.witness == 2);

    SquarefreeStatus s7866 = is_squarefree(Int(7866));  // 2 * 3^2 * 19 * 23
    CHECK_FALSE(s7866.squarefree);
    CHECK(*s7866.witness == 3);

    CHECK_FALSE(is_squarefree(Int(12)).squarefree);
    CHECK_FALSE(is_squarefree(Int(49)).squarefree);
    CHECK_THROWS_AS(is_squarefree(Int(0)), DomainError);

    // against trial division
    for (long n = 1; n <= 2000; ++n) {
        bool naive = true;
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) {
                naive = false;
                break;
            }
        CAPTURE(n);
        REQUIRE(is_squarefree(Int(n)).squarefree == naive);
    }
}

TEST_CASE("fundamental units with denominator 1") {
    struct Case {
        const char* D;
        const char* a;
        const char* b;
        int norm;
    };
    const Case cases[] = {
        {"2", "1", "1", -1},
        {"3", "2", "1", +1},
        {"7", "8", "3", +1},
        {"22", "197", "42", +1},
        {"82", "9", "1", -1},
        {"282234512826670", "705593141", "42", +1},
        {"45113311649113959", "112783839560", "531", +1},
        {"152100005850000057", "405600015600000151", "1040000020", +1},
    };
    for (const Case& c : cases) {
        CAPTURE(c.D);
        FundamentalUnit u = fundamental_unit(Int(c.D));
        CHECK(u.a == Int(c.a));
        CHECK(u.b == Int(c.b));
        CHECK(u.denom == 1);
        CHECK(u.norm == c.norm);
        CHECK(u.a * u.a - Int(c.D) * u.b * u.b == c.norm);
    }
}

TEST_CASE("fundamental units with denominator 2") {
    struct Case {
        long D, a, b;
        int norm;
    };
    const Case cases[] = {{5, 1, 1, -1},  {13, 3, 1, -1}, {21, 5, 1, +1},
                          {29, 5, 1, -1}, {53, 7, 1, -1}, {61, 39, 5, -1},
                          {77, 9, 1, +1}, {85, 9, 1, -1}};
    for (const Case& c : cases) {
        CAPTURE(c.D);
        FundamentalUnit u = fundamental_unit(Int(c.D));
        CHECK(u.a == c.a);
        CHECK(u.b == c.b);
        CHECK(u.denom == 2);
        CHECK(u.norm == c.norm);
        CHECK(u.a * u.a - Int(c.D) * u.b * u.b == 4 * c.norm);
    }

    // not every 5 mod 8 discriminant halves: Q(sqrt(37)) has unit 6 + sqrt(37)
    FundamentalUnit u37 = fundamental_unit(Int(37));
    CHECK(u37.a == 6);
    CHECK(u37.b == 1);
    CHECK(u37.denom == 1);
    CHECK(u37.norm == -1);
}

TEST_CASE("fundamental unit input validation") {
    CHECK_THROWS_AS(fundamental_unit(Int(1)), DomainError);
    CHECK_THROWS_AS(fundamental_unit(Int(0)), DomainError);
    CHECK_THROWS_AS(fundamental_unit(Int(12)), NotSquarefreeError);
    CHECK_THROWS_AS(fundamental_unit(Int(9)), NotSquarefreeError);
    CHECK_THROWS_AS(fundamental_unit(Int(7866)), NotSquarefreeError);
}

TEST_CASE("norm sign follows period parity") {
    for (long D = 2; D <= 500; ++D) {
        if (is_perfect_square(Int(D)) || !is_squarefree(Int(D)).squarefree) continue;
        CAPTURE(D);
        bool even_period = expand_sqrt(Int(D)).period_length % 2 == 0;
        REQUIRE(fundamental_unit(Int(D)).norm == (even_period ? +1 : -1));
    }
}

TEST_CASE("integer cube roots in the field") {
    auto r5 = cube_root_in_field(Int(2), Int(1), Int(5));
    REQUIRE(r5.has_value());
    CHECK(r5->first == 1);
    CHECK(r5->second == 1);

    auto r13 = cube_root_in_field(Int(18), Int(5), Int(13));
    REQUIRE(r13.has_value());
    CHECK(r13->first == 3);
    CHECK(r13->second == 1);

    auto r21 = cube_root_in_field(Int(55), Int(12), Int(21));
    REQUIRE(r21.has_value());
    CHECK(r21->first == 5);
    CHECK(r21->second == 1);

    auto r5b = cube_root_in_field(Int(9), Int(4), Int(5));  // 9 + 4 sqrt(5)
    REQUIRE(r5b.has_value());
    CHECK(r5b->first == 3);
    CHECK(r5b->second == 1);

    // 161 + 72 sqrt(5) = ((7 + 3 sqrt(5))/2)^3, a genuinely half-integral root
    auto r5c = cube_root_in_field(Int(161), Int(72), Int(5));
    REQUIRE(r5c.has_value());
    CHECK(r5c->first == 7);
    CHECK(r5c->second == 3);

    // 38 + 17 sqrt(5) = (2 + sqrt(5))^3: the cube root is integral, so no
    // half-integral root with odd coordinates exists
    CHECK_FALSE(cube_root_in_field(Int(38), Int(17), Int(5)).has_value());

    // 6 + sqrt(37) is the fundamental unit itself, not a cube of anything
    CHECK_FALSE(cube_root_in_field(Int(6), Int(1), Int(37)).has_value());

    CHECK_THROWS_AS(cube_root_in_field(Int(3), Int(2), Int(2)), DomainError);
    CHECK_THROWS_AS(cube_root_in_field(Int(5), Int(1), Int(5)), DomainError);
}

TEST_CASE("family units, published examples") {
    UnitFromFamily r22 = unit_from_family(FamilyId::F1, Int(22), Int(399996));
    CHECK(r22.D == Int("282234512826670"));
    CHECK(r22.unit.a == Int("705593141"));
    CHECK(r22.unit.b == 42);
    CHECK(r22.unit.denom == 1);
    CHECK(r22.unit.norm == +1);
    CHECK(r22.covered);
    CHECK(r22.agrees);
    CHECK(r22.consistent);

    UnitFromFamily r43 = unit_from_family(FamilyId::F1, Int(43), Int(399998));
    CHECK(r43.D == Int("45113311649113959"));
    CHECK(r43.unit.a == Int("112783839560"));
    CHECK(r43.unit.b == 531);
    CHECK(r43.agrees);

    UnitFromFamily r57 = unit_from_family(FamilyId::F2, Int(57), Int(130000));
    CHECK(r57.D == Int("152100005850000057"));
    CHECK(r57.unit.a == Int("405600015600000151"));
    CHECK(r57.unit.b == 1040000020);
    CHECK_FALSE(r57.covered);  // the base pattern does not cover f = 57
    CHECK(r57.agrees);         // ... but the unit is still fundamental
    CHECK(r57.consistent);
}

TEST_CASE("odd-period values give the square of the fundamental unit") {
    // the fourth family produces values with odd period: X + Y sqrt(D) is
    // then the square of the norm -1 fundamental unit, not the unit itself
    UnitFromFamily r = unit_from_family(FamilyId::F4, Int(2), Int(1));
    CHECK(r.D == 82);
    CHECK(r.unit.a == 163);
    CHECK(r.unit.b == 18);
    CHECK(r.cf_unit.a == 9);
    CHECK(r.cf_unit.b == 1);
    CHECK(r.cf_unit.norm == -1);
    CHECK(r.covered);
    CHECK_FALSE(r.agrees);
    CHECK(r.consistent);  // (9 + sqrt(82))^2 = 163 + 18 sqrt(82)
}

TEST_CASE("family unit congruence gates") {
    // f = 22 = 2 mod 4: odd t pushes the first family's value out of the
    // controlled class
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(22), Int(1)), CongruenceError);
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(22), Int(399995)),
                    CongruenceError);
    // f = 2180 = 0 mod 4 is never squarefree: rejected before any work
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(2180), Int(2)), CongruenceError);
    // f = 57 = 1 mod 8: the first family needs t = 0 mod 4
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(57), Int(2)), CongruenceError);
    CHECK_NOTHROW(unit_from_family(FamilyId::F1, Int(57), Int(4)));
    // non-squarefree value inside an allowed class
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(22), Int(2)),
                    NotSquarefreeError);  // f(2) = 7866 = 2 * 3^2 * 19 * 23
    CHECK_THROWS_AS(unit_from_family(FamilyId::F1, Int(22), Int(-1)), DomainError);
}

TEST_CASE("covered bases never disagree with the continued fraction") {
    // MismatchError must never surface: on covered bases the family unit is
    // the positive-norm normalization of the recomputed fundamental unit
    const Int cap("10000000000000000000000");  // factoring stays fast below this
    for (long f = 2; f <= 120; ++f) {
        if (is_perfect_square(Int(f))) continue;
        for (FamilyId fam : {FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4,
                             FamilyId::F5}) {
            try {
                if (!applicability(fam, Int(f)).covered) continue;
            } catch (const NonIntegralError&) {
                continue;
            }
            for (long t = 0; t <= 6; ++t) {
                CAPTURE(f);
                CAPTURE(family_name(fam));
                CAPTURE(t);
                FamilyInstance inst;
                try {
                    inst = instantiate(fam, Int(f));
                } catch (const NonIntegralError&) {
                    break;
                }
                if (inst.f_poly.eval(Int(t)) > cap) continue;  // keep factoring fast
                try {
                    UnitFromFamily r = unit_from_family(fam, Int(f), Int(t));
                    REQUIRE(r.covered);
                    REQUIRE(r.consistent);
                    REQUIRE(r.unit.denom == 1);
                } catch (const CongruenceError&) {
                } catch (const NotSquarefreeError&) {
                }
            }
        }
    }
}
