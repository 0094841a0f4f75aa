#include "salem/roots.hpp"

#include <algorithm>

#include "doctest.h"
#include "salem/rng.hpp"
#include "salem/transform.hpp"

using namespace salem;

TEST_SUITE_BEGIN("roots");

TEST_CASE("sturm chain basics") {
    IntPolynomial p{-1, 0, 1};  // x^2 - 1
    SturmChain sc = sturm_chain(p);
    REQUIRE(sc.chain.size() == 3);
    CHECK(sc.squarefree_input());
    CHECK(sc.variations_at(Rat(-2)) - sc.variations_at(Rat(2)) == 2);

    IntPolynomial q{1, 0, 1};  // x^2 + 1
    SturmChain sq = sturm_chain(q);
    CHECK(sq.variations_at(Rat(-2)) - sq.variations_at(Rat(2)) == 0);

    IntPolynomial r{1, -5, 1};
    SturmChain sr = sturm_chain(r);
    CHECK(sr.variations_at(Rat(0)) - sr.variations_at(Rat(4)) == 1);
    CHECK(sr.variations_at(Rat(4)) - sr.variations_at(Rat(8)) == 1);
}

TEST_CASE("open interval root counting") {
    IntPolynomial cubic{-2, 8, -6, 1};
    CHECK(count_roots_open(cubic, Rat(0), Rat(4)) == 2);
    CHECK(count_roots_open(cubic, Rat(4), Rat(8)) == 1);

    IntPolynomial no_real{1, 0, 1};
    CHECK(count_roots_open(no_real, Rat(-10), Rat(10)) == 0);

    IntPolynomial at_two{-2, 1};
    CHECK_THROWS_AS(count_roots_open(at_two, Rat(2), Rat(5)), EndpointIsRootError);
    CHECK_THROWS_AS(count_roots_open(at_two, Rat(0), Rat(2)), EndpointIsRootError);
}

TEST_CASE("root counting against constructed factorizations") {
    // products of distinct linear factors with known rational roots
    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        std::vector<long> roots;
        while (roots.size() < static_cast<size_t>(n)) {
            long r = static_cast<long>(rng.below(41)) - 20;
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        IntPolynomial p{1};
        for (long r : roots) p = p * IntPolynomial{-r, 1};
        // interval endpoints offset by 1/2 so no root can sit on them
        long a_raw = static_cast<long>(rng.below(50)) - 25;
        long b_raw = a_raw + 1 + static_cast<long>(rng.below(30));
        Rat a(2 * a_raw + 1, 2), b(2 * b_raw + 1, 2);
        int expected = 0;
        for (long r : roots) {
            if (Rat(r) > a && Rat(r) < b) ++expected;
        }
        CHECK(count_roots_open(p, a, b) == expected);
    }
}

TEST_CASE("count all real roots") {
    CHECK(count_real_roots(IntPolynomial{-1, 0, 1}) == 2);
    CHECK(count_real_roots(IntPolynomial{1, 0, 1}) == 0);
    CHECK(count_real_roots(IntPolynomial{0, -1, 0, 1}) == 3);  // x^3 - x
    // non-squarefree: distinct roots only
    IntPolynomial sq = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{-5, 1};
    CHECK(count_real_roots(sq) == 2);
}

TEST_CASE("profile certification accepts the model quadratic") {
    IntPolynomial q{1, -5, 1};
    ProfileCheck check = certify_profile(q, Rat(8));
    REQUIRE(check.ok);
    CHECK(check.profile.count_in_0_4 == 1);
    CHECK(check.profile.count_above_4 == 1);
    CHECK(check.profile.isolator_lo > 4);
    CHECK(check.profile.isolator_hi <= 8);
    // (5+sqrt(21))/2 = 4.7912878...
    CHECK(q.sign_at(check.profile.isolator_lo) != 0);
    CHECK(count_roots_open(q, check.profile.isolator_lo, check.profile.isolator_hi) == 1);
}

TEST_CASE("profile certification rejections") {
    // repeated root
    IntPolynomial sq = IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * IntPolynomial{-5, 1};
    ProfileCheck c1 = certify_profile(sq, Rat(8));
    CHECK_FALSE(c1.ok);
    CHECK(c1.violation == "not squarefree");

    // wrong root layout: all roots below 4
    IntPolynomial low = IntPolynomial{-1, 1} * IntPolynomial{-2, 1};
    ProfileCheck c2 = certify_profile(low, Rat(8));
    CHECK_FALSE(c2.ok);

    // root exactly at 4
    IntPolynomial at4 = IntPolynomial{-4, 1} * IntPolynomial{-1, 1};
    ProfileCheck c3 = certify_profile(at4, Rat(8));
    CHECK_FALSE(c3.ok);
    CHECK(c3.violation == "root at 4");

    // complex pair: z^2 + 1 has no real roots
    ProfileCheck c4 = certify_profile(IntPolynomial{1, 0, 1}, Rat(8));
    CHECK_FALSE(c4.ok);
}

TEST_CASE("profile endpoint signs follow parity") {
    IntPolynomial q{1, -5, 1};  // d = 2
    ProfileCheck check = certify_profile(q, Rat(8));
    REQUIRE(check.ok);
    CHECK(q.sign_at(Rat(0)) == 1);   // (-1)^d
    CHECK(q.sign_at(Rat(4)) == -1);  // (-1)^(d-1)
    CHECK(q.sign_at(Rat(8)) == 1);

    IntPolynomial cubic{-2, 8, -6, 1};  // d = 3
    ProfileCheck c3 = certify_profile(cubic, Rat(8));
    REQUIRE(c3.ok);
    CHECK(cubic.sign_at(Rat(0)) == -1);
    CHECK(cubic.sign_at(Rat(4)) == 1);
    CHECK(cubic.sign_at(Rat(8)) == 1);
}

TEST_CASE("largest root refinement") {
    IntPolynomial sqrt2{-2, 0, 1};
    CHECK(refine_largest_root(sqrt2, Rat(1), Rat(2), 5) == "1.41421");
    CHECK(refine_largest_root(sqrt2, Rat(1), Rat(2), 10) == "1.4142135624");

    // exact rational root found mid-bisection
    IntPolynomial half{-1, 2};  // 2x - 1
    CHECK(refine_largest_root(half, Rat(0), Rat(1), 4) == "0.5000");

    // golden ratio root of x^2 - x - 1
    IntPolynomial golden{-1, -1, 1};
    CHECK(refine_largest_root(golden, Rat(1), Rat(2), 8) == "1.61803399");
}

TEST_CASE("salem value from z isolator") {
    IntPolynomial q{1, -5, 1};
    ProfileCheck check = certify_profile(q, Rat(8));
    REQUIRE(check.ok);
    const std::string via_z =
        salem_from_z(check.profile.isolator_lo, check.profile.isolator_hi, q, 10);
    IntPolynomial p = expand_to_salem(q);
    const std::string direct = refine_largest_root(p, Rat(1), Rat(5), 10);
    CHECK(via_z == direct);
}

TEST_SUITE_END();
