#include "doctest.h"

#include "secvar/varieties.hpp"

using namespace secvar;

namespace {

Term term(long c, std::vector<std::uint32_t> e) { return Term{mpz_class(c), std::move(e)}; }

} // namespace

TEST_CASE("veronese coordinates are ordered by degree then lexicographically") {
    const Variety v = veronese(2, 2);
    CHECK(v.name == "veronese:2,2");
    CHECK(v.n == 2);
    CHECK(v.r == 5);
    CHECK(v.degree == 4);
    CHECK_FALSE(v.is_cone);
    REQUIRE(v.map.coord_count() == 6);
    // 1, s, t, s^2, st, t^2
    const std::vector<std::vector<std::uint32_t>> expected = {
        {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (std::size_t c = 0; c < 6; ++c) {
        REQUIRE(v.map.coords()[c].size() == 1);
        CHECK(v.map.coords()[c][0] == term(1, std::vector<std::uint32_t>(expected[c])));
    }

    const Variety cubic = veronese(2, 3);
    CHECK(cubic.r == 9);
    CHECK(cubic.degree == 9);
    const Variety quartic_curve = veronese(1, 4);
    CHECK(quartic_curve.n == 1);
    CHECK(quartic_curve.r == 4);
    CHECK(quartic_curve.degree == 4);

    CHECK_THROWS_AS(veronese(0, 2), UsageError);
    CHECK_THROWS_AS(veronese(2, 0), UsageError);
}

TEST_CASE("scroll normalizes its block degrees") {
    const Variety v = scroll(2, 2);
    CHECK(v.name == "scroll:2,2");
    CHECK(v.n == 2);
    CHECK(v.r == 5);
    CHECK(v.degree == 4);
    CHECK_FALSE(v.is_cone);
    // 1, s, s^2, u, us, us^2
    const std::vector<std::vector<std::uint32_t>> expected = {
        {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}};
    REQUIRE(v.map.coord_count() == 6);
    for (std::size_t c = 0; c < 6; ++c)
        CHECK(v.map.coords()[c][0] == term(1, std::vector<std::uint32_t>(expected[c])));

    CHECK(scroll(1, 3).map == scroll(3, 1).map);
    CHECK(scroll(1, 3).name == "scroll:3,1");

    const Variety cone = scroll(4, 0);
    CHECK(cone.is_cone);
    CHECK(cone.r == 5);
    CHECK(cone.degree == 4);

    CHECK_THROWS_AS(scroll(0, 0), UsageError);
}

TEST_CASE("segre coordinates are row-major products") {
    const Variety v = segre(1, 2);
    CHECK(v.name == "segre:1,2");
    CHECK(v.n == 3);
    CHECK(v.r == 5);
    CHECK(v.degree == 3);
    // (1, t1, t2, s, s t1, s t2) with parameters (s, t1, t2)
    const std::vector<std::vector<std::uint32_t>> expected = {
        {0, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}};
    REQUIRE(v.map.coord_count() == 6);
    for (std::size_t c = 0; c < 6; ++c)
        CHECK(v.map.coords()[c][0] == term(1, std::vector<std::uint32_t>(expected[c])));

    CHECK(segre(1, 1).r == 3);
    CHECK(segre(1, 1).degree == 2);
}

TEST_CASE("cone construction appends vertex coordinates") {
    const Variety base = veronese(1, 4);
    const Variety cone = cone_over(base, 1);
    CHECK(cone.n == 2);
    CHECK(cone.r == 5);
    CHECK(cone.is_cone);
    CHECK(cone.degree == base.degree);
    REQUIRE(cone.map.coord_count() == 6);
    // base coordinates gain a padded exponent slot
    for (std::size_t c = 0; c < 5; ++c) {
        const Term& t = cone.map.coords()[c][0];
        CHECK(t.exps == std::vector<std::uint32_t>{static_cast<std::uint32_t>(c), 0});
    }
    CHECK(cone.map.coords()[5][0] == term(1, {0, 1}));

    // zero vertex directions only sets the flag
    const Variety flagged = cone_over(base, 0);
    CHECK(flagged.is_cone);
    CHECK(flagged.n == base.n);
    CHECK(flagged.map == base.map);
}

TEST_CASE("projection composes a random integer matrix") {
    const Variety base = veronese(2, 3);
    Rng rng(99);
    const Variety proj = project(base, 5, rng);
    CHECK(proj.n == 2);
    CHECK(proj.r == 5);
    CHECK(proj.map.coord_count() == 6);
    CHECK(proj.map.arity() == 2);
    CHECK_FALSE(proj.degree.has_value());

    Rng rng2(99);
    CHECK_THROWS_AS(project(base, 2, rng2), TargetTooSmall);
    CHECK_THROWS_AS(project(base, 12, rng2), UsageError);

    // cones stay cones under linear projection
    Rng rng3(7);
    const Variety pc = project(cone_over(veronese(1, 4), 1), 4, rng3);
    CHECK(pc.is_cone);
}

TEST_CASE("documents round-trip exactly") {
    for (const Variety& v : builtin_catalog()) {
        const std::string text = save_variety(v);
        const Variety back = load_variety(text);
        CHECK(back.name == v.name);
        CHECK(back.n == v.n);
        CHECK(back.r == v.r);
        CHECK(back.is_cone == v.is_cone);
        CHECK(back.degree == v.degree);
        CHECK(back.map == v.map);
        CHECK(save_variety(back) == text);
    }
}

TEST_CASE("a hand-written document matches the constructor") {
    const std::string text = R"({
      "name": "scroll:2,2",
      "n": 2,
      "r": 5,
      "is_cone": false,
      "degree": 4,
      "coords": [
        [{"c": "1", "e": [0, 0]}],
        [{"c": "1", "e": [1, 0]}],
        [{"c": "1", "e": [2, 0]}],
        [{"c": "1", "e": [0, 1]}],
        [{"c": "1", "e": [1, 1]}],
        [{"c": "1", "e": [2, 1]}]
      ]
    })";
    const Variety v = load_variety(text);
    CHECK(v.map == scroll(2, 2).map);
    CHECK(v.degree == 4);
}

TEST_CASE("malformed documents are rejected with precise errors") {
    CHECK_THROWS_AS(load_variety("not json"), ParseError);
    CHECK_THROWS_AS(load_variety("[1, 2]"), ParseError);
    CHECK_THROWS_AS(load_variety(R"({"name": "x", "n": 1, "coords": []})"), ParseError);
    CHECK_THROWS_AS(load_variety(R"({"name": "x", "n": 1, "r": 2, "coords": []})"),
                    InvariantViolation);
    // exponent vector length disagrees with n
    CHECK_THROWS_AS(
        load_variety(
            R"({"name": "x", "n": 2, "r": 0, "coords": [[{"c": "1", "e": [1]}]]})"),
        InvariantViolation);
    // coefficient is not a decimal integer
    CHECK_THROWS_AS(
        load_variety(
            R"({"name": "x", "n": 1, "r": 0, "coords": [[{"c": "1.5", "e": [0]}]]})"),
        ParseError);
    CHECK_THROWS_AS(
        load_variety(
            R"({"name": "x", "n": 1, "r": 0, "coords": [[{"c": true, "e": [0]}]]})"),
        ParseError);
    CHECK_THROWS_AS(load_variety_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("validation passes on every catalog entry") {
    const ComputeCfg cfg;
    for (const Variety& v : builtin_catalog()) {
        const ValidationReport rep = validate(v, cfg);
        CHECK(rep.immersive);
        CHECK(rep.jet_rank == v.n + 1);
        CHECK(rep.span_dim == v.r);
        CHECK(rep.nondegenerate);
        CHECK(rep.ok());
    }
}

TEST_CASE("validation flags a degenerate parametrization") {
    // image of (1, t, t) lies inside a hyperplane of P^2
    const PolyMap m(1, {{term(1, {0})}, {term(1, {1})}, {term(1, {1})}});
    Variety v;
    v.name = "degenerate";
    v.n = 1;
    v.r = 2;
    v.map = m;
    const ValidationReport rep = validate(v, ComputeCfg{});
    CHECK(rep.immersive);
    CHECK(rep.span_dim == 1);
    CHECK_FALSE(rep.nondegenerate);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("catalog lookup understands the selector grammar") {
    CHECK(catalog_lookup("veronese:2,2").name == "veronese:2,2");
    CHECK(catalog_lookup("scroll:3,1").r == 5);
    CHECK(catalog_lookup("segre:1,2").n == 3);
    CHECK(catalog_lookup("cone-rnc4").is_cone);
    CHECK(catalog_lookup("cone-rnc4").map == cone_over(veronese(1, 4), 1).map);
    CHECK_THROWS_AS(catalog_lookup("veronese"), UsageError);
    CHECK_THROWS_AS(catalog_lookup("veronese:2"), UsageError);
    CHECK_THROWS_AS(catalog_lookup("unknown:1,2"), UsageError);
    CHECK_THROWS_AS(catalog_lookup("veronese:a,b"), UsageError);
}

TEST_CASE("catalog has the fixed roster") {
    const auto cat = builtin_catalog();
    REQUIRE(cat.size() == 10);
    const std::vector<std::string> names = {
        "veronese:2,2", "veronese:2,3", "veronese:1,3", "veronese:1,4", "scroll:2,2",
        "scroll:3,1",   "scroll:4,0",   "cone-rnc4",    "segre:1,1",    "segre:1,2"};
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(cat[i].name == names[i]);

    // the quartic cone appears under two constructions with one map
    CHECK(cat[6].map == cat[7].map);
}
