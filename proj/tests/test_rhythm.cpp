#include <doctest.h>

#include <iostream>

#include "collatz/errors.hpp"
#include "collatz/orbit.hpp"
#include "collatz/rhythm.hpp"

using namespace collatz;

namespace {

// x_n, the element reached after n-1 steps.
Nat element(const Nat& x1, std::uint64_t n) {
    Nat x = x1;
    for (std::uint64_t i = 1; i < n; ++i) x = col_step(x).value;
    return x;
}

}  // namespace

TEST_CASE("rhythm_of examples") {
    CHECK(rhythm_of(Nat{9}, 3) == Rhythm{2, 1, 1});
    CHECK(rhythm_of(Nat{255}, 7) == Rhythm{1, 1, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS((void)rhythm_of(Nat{1}, 1), OrbitTooShort);
    CHECK(rhythm_of(Nat{5}, 1) == Rhythm{4});  // lands on 1 with the n-th step
    CHECK_THROWS_AS((void)rhythm_of(Nat{5}, 2), OrbitTooShort);
    CHECK_THROWS_AS((void)rhythm_of(Nat{9}, 0), DomainError);
    CHECK_THROWS_AS(Rhythm(std::vector<std::uint64_t>{}), DomainError);
}

TEST_CASE("class_of examples") {
    const auto c9 = class_of(Nat{9}, 3);
    CHECK(c9.modulus == Nat{32});
    CHECK(c9.rhythm == Rhythm{2, 1, 1});

    CHECK(class_of(Nat{27}, 1).modulus == Nat{4});
    CHECK(class_of(Nat{255}, 7).modulus == Nat{256});
    CHECK_THROWS_AS((void)class_of(Nat{1}, 2), OrbitTooShort);
}

TEST_CASE("enumerate_class examples") {
    const auto e = enumerate_class(class_of(Nat{9}, 3), 4);
    CHECK(e.starts() == std::vector<Nat>{Nat{9}, Nat{41}, Nat{73}, Nat{105}});
    CHECK(e.all_verified());
    for (const auto& m : e.members) CHECK(m.observed == std::vector<std::uint64_t>{2, 1, 1});

    const auto single = enumerate_class(class_of(Nat{27}, 5), 1);
    REQUIRE(single.members.size() == 1);
    CHECK(single.members[0].start == Nat{27});
    CHECK(single.members[0].verified);

    const auto c7 = class_of(Nat{7}, 2);
    const auto e7 = enumerate_class(c7, 5);
    for (std::size_t r = 0; r < e7.members.size(); ++r) {
        CHECK(e7.members[r].start == Nat{7} + Nat{r} * c7.modulus);
        CHECK(e7.members[r].verified);
        CHECK(rhythm_of(e7.members[r].start, 2) == c7.rhythm);
    }

    CHECK_THROWS_AS((void)enumerate_class(c7, 0), DomainError);
}

TEST_CASE("enumerate_class reports failures instead of dropping them") {
    // 5 has rhythm <4>; D = 4 and 9 starts with step size 2.
    const auto e = enumerate_class(class_of(Nat{5}, 1), 3);
    REQUIRE(e.members.size() == 3);
    CHECK(e.members[0].verified);
    CHECK_FALSE(e.members[1].verified);
    CHECK(e.members[1].start == Nat{9});
    CHECK_FALSE(e.members[1].diagnostic.empty());
    CHECK_FALSE(e.all_verified());
}

TEST_CASE("same_rhythm examples") {
    CHECK(same_rhythm(Nat{9}, Nat{41}, 3));
    CHECK(same_rhythm(Nat{27}, Nat{27}, 10));
    CHECK_FALSE(same_rhythm(Nat{9}, Nat{11}, 3));
    CHECK_THROWS_AS((void)same_rhythm(Nat{9}, Nat{1}, 1), OrbitTooShort);
}

TEST_CASE("rhythm classes: progression property, odd x1 in [3, 2e4], n in [1, 8]") {
    std::uint64_t classes = 0, members = 0, failed_members = 0, failed_with_last_one = 0;
    for (std::uint64_t x1 = 3; x1 <= 20000; x1 += 2) {
        for (std::uint64_t n = 1; n <= 8; ++n) {
            RhythmClass cls = [&] {
                try {
                    return class_of(Nat{x1}, n);
                } catch (const OrbitTooShort&) {
                    return RhythmClass{Nat{}, 0, Rhythm{1}, Nat{}};
                }
            }();
            if (cls.n == 0) break;  // longer n will be too short as well
            ++classes;
            const auto e = enumerate_class(cls, 10);
            const Nat base_xn = element(cls.base, n);
            for (const auto& m : e.members) {
                ++members;
                if (!m.verified) {
                    ++failed_members;
                    if (cls.rhythm.last() == 1) ++failed_with_last_one;
                    continue;
                }
                REQUIRE(same_rhythm(m.start, cls.base, n));
                // x_n^(b) - x_n^(a) = 3^{n-1} * R * 4
                const Nat xn = element(m.start, n);
                REQUIRE(xn - base_xn == Nat::pow3(n - 1) * Nat{m.offset} * Nat{4});
                REQUIRE(xn.mod4() == base_xn.mod4());
            }
        }
    }
    MESSAGE("classes=" << classes << " members=" << members << " failed=" << failed_members);
    CHECK(failed_with_last_one == 0);
    CHECK(members > 0);
}
