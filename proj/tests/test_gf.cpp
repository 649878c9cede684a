#include "ffrunner/gf.hpp"
#include "ffrunner/verify.hpp"

#include "doctest.h"

using namespace ffr;

namespace {

// Independent modulus oracle: a monic quadratic over F_p is irreducible iff
// it has no root.
bool quadratic_has_root(unsigned p, unsigned c0, unsigned c1) {
    for (unsigned x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("prime fields have no modulus") {
    Field f2(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus().empty());
    Field f3(3, 1);
    CHECK(f3.q() == 3);
}

TEST_CASE("F_4 uses the unique monic irreducible quadratic") {
    // enumerate all four monic quadratics over F_2 and root-test them
    unsigned found_c0 = 99, found_c1 = 99;
    int count = 0;
    for (unsigned c1 = 0; c1 < 2; ++c1)
        for (unsigned c0 = 0; c0 < 2; ++c0)
            if (!quadratic_has_root(2, c0, c1)) {
                found_c0 = c0;
                found_c1 = c1;
                ++count;
            }
    REQUIRE(count == 1);
    CHECK(found_c0 == 1);
    CHECK(found_c1 == 1);

    Field f4(2, 2);
    CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});
}

TEST_CASE("F_8 and F_9 moduli are the least-encoding irreducibles") {
    Field f8(2, 3);
    CHECK(f8.modulus() == std::vector<Elem>{1, 1, 0, 1});  // T^3+T+1
    Field f9(3, 2);
    CHECK(f9.modulus() == std::vector<Elem>{1, 0, 1});  // T^2+1, since -1 is a non-residue mod 3
}

TEST_CASE("F_4 arithmetic under the digit encoding") {
    Field f4(2, 2);
    CHECK(f4.add(2, 3) == 1);

    // independent reduction of T*T by T^2+T+1 over F_2: T^2 = T+1, encoded 3
    CHECK(f4.mul(2, 2) == 3);

    for (Elem a = 0; a < 4; ++a) CHECK(f4.from_digits(f4.digits(a)) == a);
}

TEST_CASE("F_3 inversion") {
    Field f3(3, 1);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.mul(2, 2) == 1);
    CHECK_THROWS_AS(f3.inv(0), std::invalid_argument);
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 11), CapExceeded);  // 2^11 over the default cap
    CHECK_NOTHROW(Field(2, 11, 4096));           // cap is overridable
    CHECK_THROWS_AS(Field::from_q(6), std::invalid_argument);
}

TEST_CASE("from_q factors prime powers") {
    Field f9 = Field::from_q(9);
    CHECK(f9.p() == 3);
    CHECK(f9.e() == 2);
    Field f8 = Field::from_q(8);
    CHECK(f8.p() == 2);
    CHECK(f8.e() == 3);
}

TEST_CASE("exhaustive field axioms for every supported q <= 9") {
    SuiteReport rep = run_suite("field-axioms");
    CHECK(rep.pass);
    CHECK(rep.checks.size() == 7);  // q in {2,3,4,5,7,8,9}
}

TEST_CASE("Frobenius additivity in extension fields") {
    for (std::uint64_t q : {4, 8, 9}) {
        Field f = Field::from_q(q);
        for (Elem a = 0; a < f.q(); ++a)
            for (Elem b = 0; b < f.q(); ++b)
                CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
    }
}
