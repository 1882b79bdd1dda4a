#include "doctest.h"

#include "secvar/field.hpp"
#include "secvar/polymap.hpp"

using namespace secvar;

namespace {

Term term(long c, std::vector<std::uint32_t> e) { return Term{mpz_class(c), std::move(e)}; }

} // namespace

TEST_CASE("construction canonicalizes terms") {
    // x^2 appears twice and a pair cancels; order is grlex descending
    PolyMap m(2,
              {{term(1, {0, 1}), term(2, {2, 0}), term(3, {2, 0}), term(4, {0, 0}),
                term(-1, {1, 1}), term(1, {1, 1})}});
    REQUIRE(m.coord_count() == 1);
    const Poly& p = m.coords()[0];
    REQUIRE(p.size() == 3);
    CHECK(p[0] == term(5, {2, 0}));
    CHECK(p[1] == term(1, {0, 1}));
    CHECK(p[2] == term(4, {0, 0}));

    CHECK(m.total_degree() == 2);
    CHECK(m.arity() == 2);
}

TEST_CASE("grlex comparison orders by degree then lexicographically") {
    CHECK(grlex_less({0, 0}, {1, 0}));
    CHECK(grlex_less({0, 2}, {2, 0}));
    CHECK(grlex_less({1, 1}, {2, 0}));
    CHECK_FALSE(grlex_less({2, 0}, {1, 1}));
    CHECK_FALSE(grlex_less({1, 0}, {1, 0}));
}

TEST_CASE("terms must match the declared arity") {
    CHECK_THROWS_AS(PolyMap(2, {{term(1, {1, 0, 0})}}), ArityMismatch);
    CHECK_THROWS_AS(PolyMap(3, {{term(1, {1})}}), ArityMismatch);
}

TEST_CASE("evaluation agrees between the prime field and the rationals") {
    // f(x, y) = 3x^2 y - 7y + 5
    const PolyMap m(2, {{term(3, {2, 1}), term(-7, {0, 1}), term(5, {0, 0})}});
    const FieldCtx f = make_field(kDefaultPrime);
    const RatCtx q;

    const std::vector<u64> pf = {4, 9};
    const std::vector<mpq_class> pq = {mpq_class(4), mpq_class(9)};
    const auto rf = m.eval(f, pf);
    const auto rq = m.eval(q, pq);
    REQUIRE(rf.size() == 1);
    const long expected = 3 * 16 * 9 - 7 * 9 + 5;
    CHECK(rf[0] == static_cast<u64>(expected));
    CHECK(rq[0] == mpq_class(expected));

    const std::vector<u64> wrong = {1, 2, 3};
    CHECK_THROWS_AS(m.eval(f, wrong), ArityMismatch);
}

TEST_CASE("formal partials match jet derivatives") {
    // coordinates of the quadratic Veronese surface chart
    const PolyMap m(2, {{term(1, {0, 0})},
                        {term(1, {1, 0})},
                        {term(1, {0, 1})},
                        {term(1, {2, 0})},
                        {term(1, {1, 1})},
                        {term(1, {0, 2})}});
    const FieldCtx f = make_field(kDefaultPrime);
    const JetCtx<FieldCtx> jets(f, 2);
    Rng rng(17);

    const PolyMap ds = m.partial(0);
    const PolyMap dt = m.partial(1);
    for (int i = 0; i < 25; ++i) {
        const auto pt = sample_vector(f, rng, 2);
        const std::vector<std::size_t> active = {0, 1};
        const auto img = m.eval(jets, lift_to_jets(f, pt, active));
        const auto vs = ds.eval(f, pt);
        const auto vt = dt.eval(f, pt);
        for (std::size_t c = 0; c < m.coord_count(); ++c) {
            CHECK(img[c].partials[0] == vs[c]);
            CHECK(img[c].partials[1] == vt[c]);
        }
    }

    CHECK_THROWS_AS(m.partial(2), IndexOutOfRange);
}

TEST_CASE("partial differentiates exponents down to zero") {
    // d/dx (x^3 y + x) = 3x^2 y + 1
    const PolyMap m(2, {{term(1, {3, 1}), term(1, {1, 0})}});
    const PolyMap d = m.partial(0);
    const Poly& p = d.coords()[0];
    REQUIRE(p.size() == 2);
    CHECK(p[0] == term(3, {2, 1}));
    CHECK(p[1] == term(1, {0, 0}));

    // constants vanish
    const PolyMap c(1, {{term(9, {0})}});
    CHECK(c.partial(0).coords()[0].empty());
}

TEST_CASE("linear composition mixes coordinates exactly") {
    // coords (1, t, t^2), rows (coord0 + 2*coord2, -coord1)
    const PolyMap m(1, {{term(1, {0})}, {term(1, {1})}, {term(1, {2})}});
    const PolyMap c = m.compose_linear({{1, 0, 2}, {0, -1, 0}});
    REQUIRE(c.coord_count() == 2);
    CHECK(c.coords()[0][0] == term(2, {2}));
    CHECK(c.coords()[0][1] == term(1, {0}));
    CHECK(c.coords()[1][0] == term(-1, {1}));

    CHECK_THROWS_AS(m.compose_linear({{1, 2}}), ShapeMismatch);

    // evaluation commutes with composition
    const FieldCtx f = make_field(kDefaultPrime);
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        const auto pt = sample_vector(f, rng, 1);
        const auto base = m.eval(f, pt);
        const auto composed = c.eval(f, pt);
        CHECK(composed[0] == f.add(base[0], f.mul(2, base[2])));
        CHECK(composed[1] == f.neg(base[1]));
    }
}

TEST_CASE("equality ignores the label but not the polynomials") {
    const PolyMap a(1, {{term(1, {1})}}, "left");
    const PolyMap b(1, {{term(1, {1})}}, "right");
    const PolyMap c(1, {{term(2, {1})}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}
