#include <doctest.h>

#include <random>

#include "collatz/errors.hpp"
#include "collatz/nat.hpp"
#include "collatz/rational.hpp"
#include "oracle/schoolbook.hpp"

using collatz::ExactRational;
using collatz::Integer;
using collatz::Nat;

TEST_CASE("parse accepts plain decimal only") {
    CHECK(Nat::parse("0").is_zero());
    CHECK(Nat::parse("340282366920938463463374607431768211457").to_string() ==
          "340282366920938463463374607431768211457");
    CHECK_FALSE(Nat::try_parse(""));
    CHECK_FALSE(Nat::try_parse("-3"));
    CHECK_FALSE(Nat::try_parse("+3"));
    CHECK_FALSE(Nat::try_parse("2^64+1"));
    CHECK_FALSE(Nat::try_parse(" 7"));
    CHECK_FALSE(Nat::try_parse("0x10"));
    CHECK_THROWS_AS((void)Nat::parse("1e9"), collatz::DomainError);
}

TEST_CASE("trailing zeros is the exact 2-adic valuation") {
    CHECK(Nat{1}.trailing_zeros() == 0);
    CHECK(Nat{12}.trailing_zeros() == 2);
    CHECK(Nat::pow2(300).trailing_zeros() == 300);
    CHECK((Nat::pow2(300) * Nat{5}).trailing_zeros() == 300);
    CHECK_THROWS_AS((void)Nat{}.trailing_zeros(), collatz::DomainError);
}

TEST_CASE("values past 2^128 round-trip through arithmetic") {
    const Nat big = Nat::pow2(201) - Nat{1};
    CHECK(big.bit_length() == 201);
    CHECK_FALSE(big.fits_u64());
    CHECK(((big + Nat{1}) >> 201) == Nat{1});
    CHECK((big * Nat{3} + Nat{1}) / Nat{2} == (Nat::pow2(201) * Nat{3} - Nat{2}) / Nat{2});
    CHECK(big % Nat{4} == Nat{3});
    CHECK(big.mod4() == 3);
    CHECK(Nat::pow3(81).to_string() == oracle::str(boost::multiprecision::pow(oracle::Big{3}, 81)));
}

TEST_CASE("subtraction never goes negative") {
    CHECK_THROWS_AS(Nat{3} - Nat{4}, collatz::DomainError);
    CHECK_THROWS_AS(Nat{Integer{-1}}, collatz::DomainError);
    CHECK_THROWS_AS(Nat{1} / Nat{0}, collatz::DomainError);
}

TEST_CASE("Nat arithmetic agrees with cpp_int on random wide operands") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        oracle::Big a = 0, b = 0;
        const int limbs_a = 1 + static_cast<int>(rng() % 5);
        const int limbs_b = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < limbs_a; ++i) a = (a << 64) | oracle::Big(rng());
        for (int i = 0; i < limbs_b; ++i) b = (b << 64) | oracle::Big(rng());
        if (b == 0) b = 1;
        const Nat na = Nat::parse(a.str()), nb = Nat::parse(b.str());
        CHECK((na + nb).to_string() == oracle::Big(a + b).str());
        CHECK((na * nb).to_string() == oracle::Big(a * b).str());
        CHECK((na / nb).to_string() == oracle::Big(a / b).str());
        CHECK((na % nb).to_string() == oracle::Big(a % b).str());
        const unsigned shift = rng() % 130;
        CHECK((na << shift).to_string() == oracle::Big(a << shift).str());
        CHECK((na >> shift).to_string() == oracle::Big(a >> shift).str());
        CHECK((na < nb) == (a < b));
    }
}

TEST_CASE("rationals stay in lowest terms with a positive denominator") {
    const ExactRational r{Integer{6}, Integer{-4}};
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK_FALSE(r.is_integer());
    CHECK((r * ExactRational{Integer{2}}).is_integer());
    CHECK((ExactRational{Integer{1}, Integer{3}} + ExactRational{Integer{2}, Integer{3}}) == ExactRational{Integer{1}});
    CHECK_THROWS_AS((ExactRational{Integer{1}, Integer{0}}), collatz::DomainError);
    CHECK_THROWS_AS(ExactRational{Integer{1}} / ExactRational{}, collatz::DomainError);
}
