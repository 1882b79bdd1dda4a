#include "doctest.h"

#include <set>

#include "secvar/field.hpp"

using namespace secvar;

TEST_CASE("primality testing is exact on known values") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(kDefaultPrime));
    CHECK(is_prime_u64(4294967291ULL)); // largest prime below 2^32
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4294967296ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime_u64(kDefaultPrime - 1));
}

TEST_CASE("make_field validates the modulus") {
    CHECK(make_field(kDefaultPrime).modulus() == kDefaultPrime);
    CHECK(make_field(4294967291ULL).modulus() == 4294967291ULL);
    CHECK_THROWS_AS(make_field(1ULL << 32), CompositeModulus);
    CHECK_THROWS_AS(make_field(7), ModulusTooSmall);
    CHECK_THROWS_AS(make_field(0), CompositeModulus);
}

TEST_CASE("field axioms hold on random samples") {
    // the default prime takes the fast reduction path, the other one the
    // generic path; both must satisfy identical axioms
    for (u64 p : {kDefaultPrime, u64(4294967291)}) {
        const FieldCtx f = make_field(p);
        Rng rng(42);
        for (int i = 0; i < 10000; ++i) {
            const u64 a = sample_elem(f, rng);
            const u64 b = sample_elem(f, rng);
            const u64 c = sample_elem(f, rng);
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("fast reduction agrees with the wide remainder") {
    const FieldCtx f = make_field(kDefaultPrime);
    Rng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const u64 a = sample_elem(f, rng);
        const u64 b = sample_elem(f, rng);
        const u64 direct = static_cast<u64>(static_cast<u128>(a) * b % kDefaultPrime);
        CHECK(f.mul(a, b) == direct);
    }
    // boundary residues
    const u64 top = kDefaultPrime - 1;
    CHECK(f.mul(top, top) == static_cast<u64>(static_cast<u128>(top) * top % kDefaultPrime));
    CHECK(f.add(top, top) == kDefaultPrime - 2);
}

TEST_CASE("signed and big-integer conversion reduce canonically") {
    const FieldCtx f = make_field(kDefaultPrime);
    CHECK(f.from_int(0) == 0);
    CHECK(f.from_int(-1) == kDefaultPrime - 1);
    CHECK(f.from_int(INT64_MIN) == f.sub(0, f.from_int(INT64_MAX) + 1));
    CHECK(f.from_mpz(mpz_class("-1")) == kDefaultPrime - 1);
    const mpz_class big = mpz_class(1) << 200;
    CHECK(f.from_mpz(big) == f.pow(2, 200));
    CHECK(f.from_mpz(-big) == f.neg(f.pow(2, 200)));
}

TEST_CASE("generator is deterministic and substreams diverge") {
    Rng a(123);
    Rng b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng root(5);
    Rng s0 = root.substream(0);
    Rng s1 = root.substream(1);
    int differing = 0;
    for (int i = 0; i < 100; ++i)
        if (s0.next_u64() != s1.next_u64()) ++differing;
    CHECK(differing > 90);

    // derivation is pure: asking again yields the same stream
    Rng again = root.substream(0);
    Rng fresh = root.substream(0);
    for (int i = 0; i < 10; ++i) CHECK(again.next_u64() == fresh.next_u64());
}

TEST_CASE("bounded draws are in range and deterministic") {
    Rng rng(9);
    std::set<u64> seen;
    for (int i = 0; i < 2000; ++i) {
        const u64 x = rng.next_below(17);
        CHECK(x < 17);
        seen.insert(x);
    }
    CHECK(seen.size() == 17); // every residue shows up over 2000 draws

    Rng r1(11), r2(11);
    for (int i = 0; i < 50; ++i) CHECK(r1.next_int(-99, 99) == r2.next_int(-99, 99));
    Rng r3(11);
    for (int i = 0; i < 500; ++i) {
        const i64 v = r3.next_int(-99, 99);
        CHECK(v >= -99);
        CHECK(v <= 99);
    }
    CHECK_THROWS_AS(rng.next_below(0), UsageError);
}

TEST_CASE("sampled vectors depend only on the stream state") {
    const FieldCtx f = make_field(kDefaultPrime);
    Rng a(3), b(3);
    const auto va = sample_vector(f, a, 32);
    const auto vb = sample_vector(f, b, 32);
    CHECK(va == vb);
    for (u64 x : va) CHECK(x < kDefaultPrime);
}

TEST_CASE("jet lift places unit partials on active directions") {
    const FieldCtx f = make_field(kDefaultPrime);
    const std::vector<u64> point = {10, 20, 30};
    const std::vector<std::size_t> active = {0, 2};
    const auto jets = lift_to_jets(f, point, active);
    REQUIRE(jets.size() == 3);
    for (const auto& j : jets) REQUIRE(j.partials.size() == 2);
    CHECK(jets[0].partials == std::vector<u64>{1, 0});
    CHECK(jets[1].partials == std::vector<u64>{0, 0});
    CHECK(jets[2].partials == std::vector<u64>{0, 1});

    const std::vector<std::size_t> dup = {1, 1};
    CHECK_THROWS_AS(lift_to_jets(f, point, dup), DuplicateDirection);

    const std::vector<std::size_t> none;
    const auto constant = lift_to_jets(f, point, none);
    CHECK(constant[0].partials.empty());
}

TEST_CASE("jet arithmetic follows the product and inverse rules") {
    const FieldCtx f = make_field(kDefaultPrime);
    const JetCtx<FieldCtx> jets(f, 2);
    const std::vector<u64> point = {6, 35};
    const std::vector<std::size_t> active = {0, 1};
    const auto lifted = lift_to_jets(f, point, active);

    // d(xy) = y dx + x dy
    const auto prod = jets.mul(lifted[0], lifted[1]);
    CHECK(prod.val == 210);
    CHECK(prod.partials == std::vector<u64>{35, 6});

    // d(x^-1) = -x^-2 dx
    const auto inv = jets.inv(lifted[0]);
    CHECK(f.mul(inv.val, 6) == 1);
    CHECK(inv.partials[0] == f.neg(f.mul(inv.val, inv.val)));
    CHECK(inv.partials[1] == 0);

    // a * a^-1 is exactly the ring unit
    const auto unit = jets.mul(lifted[0], inv);
    CHECK(unit == jets.one());

    CHECK_THROWS_AS(jets.inv(jets.zero()), SingularPivotBlock);

    // sum rule sanity
    const auto sum = jets.add(lifted[0], lifted[1]);
    CHECK(sum.val == 41);
    CHECK(sum.partials == std::vector<u64>{1, 1});
}

TEST_CASE("jet arithmetic works over the rationals") {
    const RatCtx q;
    const JetCtx<RatCtx> jets(q, 1);
    std::vector<mpq_class> point = {mpq_class(3, 2)};
    const std::vector<std::size_t> active = {0};
    const auto lifted = lift_to_jets(q, point, active);
    const auto sq = jets.mul(lifted[0], lifted[0]);
    CHECK(sq.val == mpq_class(9, 4));
    CHECK(sq.partials[0] == mpq_class(3)); // 2x at x = 3/2
}
