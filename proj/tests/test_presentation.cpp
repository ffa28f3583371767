#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multibetti/errors.hpp"
#include "multibetti/presentation.hpp"
#include "multibetti/random_instances.hpp"

#include <nlohmann/json.hpp>

#include <set>

using namespace multibetti;
using nlohmann::json;

namespace {

// brute-force fiber: all subsets of S with degree exactly alpha
std::vector<std::uint64_t> brute_fiber(const Presentation& p, const Multidegree& alpha) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.source_count()); ++mask)
        if (mask != 0 && p.degree_of_mask(mask) == alpha) out.push_back(mask);
    return out;
}

bool brute_is_interval(const std::vector<std::uint64_t>& fiber) {
    if (fiber.empty()) return false;
    std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
    for (std::uint64_t f : fiber) {
        lo &= f;
        hi |= f;
    }
    // interval [lo, hi] iff every set between the bounds is in the fiber
    std::size_t count = 0;
    for (std::uint64_t f : fiber)
        if ((f & lo) == lo && (f & ~hi) == 0) ++count;
    std::size_t expect = std::uint64_t{1} << std::popcount(hi & ~lo);
    return count == fiber.size() && fiber.size() == expect;
}

} // namespace

TEST_CASE("monomial shorthand expands to a unit row") {
    const Presentation p = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    CHECK(p.variables() == 3);
    CHECK(p.targets().size() == 1);
    CHECK(p.targets()[0].degree == Multidegree({0, 0, 0}));
    REQUIRE(p.source_count() == 3);
    CHECK(p.sources()[0].degree == Multidegree({2, 0, 0}));
    for (std::size_t s = 0; s < 3; ++s) CHECK(p.coeffs().at(0, s) == 1);
    CHECK(p.is_monomial());
}

TEST_CASE("parsing the full schema") {
    const json doc = {
        {"variables", 3},
        {"field", "rational"},
        {"targets", {{{"label", "g1"}, {"degree", {0, 0, 0}}}, {{"label", "g2"}, {"degree", {0, 0, 0}}}}},
        {"sources",
         {{{"label", "a"}, {"degree", {3, 1, 1}}},
          {{"label", "b"}, {"degree", {1, 3, 1}}},
          {{"label", "c"}, {"degree", {1, 1, 3}}},
          {{"label", "d"}, {"degree", {1, 2, 2}}}}},
        {"matrix", {{1, 1, 1, 1}, {1, 1, 2, 3}}}};
    const Presentation p = Presentation::parse(doc);
    CHECK(p.source_count() == 4);
    CHECK(p.coeffs().at(1, 3) == 3);
    CHECK(p.field().is_rational());
}

TEST_CASE("scalar entries parse as fractions and reduce mod p") {
    json doc = {{"variables", 1},
                {"field", {{"prime", 5}}},
                {"targets", {{{"label", "g"}, {"degree", {0}}}}},
                {"sources", {{{"label", "s"}, {"degree", {1}}}}},
                {"matrix", {{"1/2"}}}};
    const Presentation p = Presentation::parse(doc);
    CHECK(p.coeffs().at(0, 0) == 3); // 2*3 = 1 mod 5
}

TEST_CASE("validation errors name the offending entry") {
    // unit entry at equal degrees
    json doc = {{"variables", 1},
                {"targets", {{{"label", "g"}, {"degree", {1}}}}},
                {"sources", {{{"label", "s"}, {"degree", {1}}}}},
                {"matrix", {{1}}}};
    CHECK_THROWS_AS(Presentation::parse(doc), ValidationError);
    CHECK_THROWS_WITH_AS(Presentation::parse(doc),
                         doctest::Contains("minimality violated at (g, s)"), ValidationError);

    doc["sources"][0]["degree"] = {0};
    doc["targets"][0]["degree"] = {1};
    CHECK_THROWS_AS(Presentation::parse(doc), ValidationError); // multihomogeneity

    doc["targets"][0]["degree"] = {0};
    doc["sources"][0]["degree"] = {1};
    doc["matrix"] = {{0}};
    CHECK_THROWS_AS(Presentation::parse(doc), ValidationError); // zero column

    CHECK_THROWS_AS(Presentation::parse(json::array()), SchemaError);
    CHECK_THROWS_AS(Presentation::parse(json{{"variables", 1}}), SchemaError);
}

TEST_CASE("degree map on the worked module") {
    const Presentation p = sample_two_target_module();
    CHECK(p.degree_of_set({0, 1, 2, 3}) == Multidegree({3, 3, 3}));
    CHECK(p.degree_of_set({0}) == Multidegree({3, 1, 1}));
    CHECK(p.degree_of_set({0, 2, 3}) == Multidegree({3, 2, 3}));
    CHECK(p.degree_of_set({}) == Multidegree({0, 0, 0}));
}

TEST_CASE("lcm lattice of x^2, xy, xz has the seven hand-computed joins") {
    const Presentation p = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    const LcmLattice lat = p.lcm_lattice();
    const std::set<std::vector<int>> expect{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {2, 1, 0},
                                            {2, 0, 1}, {1, 1, 1}, {2, 1, 1}};
    std::set<std::vector<int>> got;
    for (const auto& a : lat.elements) got.insert(a.exponents());
    CHECK(got == expect);
    CHECK(lat.elements.size() == 7);
}

TEST_CASE("single generator gives a one-element lattice") {
    const Presentation p = make_monomial({{2, 1}});
    CHECK(p.lcm_lattice().elements.size() == 1);
    CHECK(p.in_lattice(Multidegree({2, 1})));
    CHECK(!p.in_lattice(Multidegree({0, 0})));
    CHECK(!p.in_lattice(Multidegree({2, 2})));
}

TEST_CASE("worked module lattice contains both example degrees") {
    const Presentation p = sample_two_target_module();
    CHECK(p.in_lattice(Multidegree({3, 3, 3})));
    CHECK(p.in_lattice(Multidegree({3, 2, 3})));
}

TEST_CASE("fiber structure at the worked degrees") {
    const Presentation p = sample_two_target_module();
    SUBCASE("alpha=(3,3,3): interval [abc, abcd]") {
        const FiberStructure fs = p.fiber_structure(Multidegree({3, 3, 3}));
        CHECK(fs.i_upper == std::vector<std::size_t>{0, 1, 2, 3});
        REQUIRE(fs.is_generic);
        CHECK(*fs.i_lower == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("alpha=(3,2,3): a point") {
        const FiberStructure fs = p.fiber_structure(Multidegree({3, 2, 3}));
        REQUIRE(fs.is_generic);
        CHECK(fs.i_upper == *fs.i_lower);
        CHECK(fs.i_upper == std::vector<std::size_t>{0, 2, 3});
    }
    SUBCASE("off-lattice degree throws") {
        CHECK_THROWS_AS(p.fiber_structure(Multidegree({1, 1, 1})), DomainError);
    }
}

TEST_CASE("non-generic fiber lists both minimal sets") {
    const Presentation p = make_monomial({{3, 0, 2}, {2, 3, 0}, {1, 2, 1}, {0, 3, 2}});
    const FiberStructure fs = p.fiber_structure(Multidegree({3, 3, 2}));
    CHECK(!fs.is_generic);
    CHECK(fs.minimal_sets == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 3}});
}

TEST_CASE("generic type fixtures") {
    CHECK(make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}).is_generic_type());
    CHECK(make_monomial({{1, 1, 0}, {1, 0, 1}}).is_generic_type());
    Multidegree witness;
    CHECK(!make_monomial({{1, 1, 0}, {1, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}})
               .is_generic_type(&witness));
    CHECK(witness == Multidegree({1, 2, 2}));
    // degrees strictly below every generator are generic relative to L
    const Presentation p = make_monomial({{2, 0, 0}, {1, 1, 0}});
    CHECK(p.is_generic_relative(Multidegree({1, 0, 0})));
}

TEST_CASE("uniform rank check") {
    CHECK(!sample_two_target_module().uniform_rank()); // columns a,b have rank 1 < 2
    CHECK(make_monomial({{1, 0}, {0, 1}, {1, 1}}).uniform_rank()); // 1xn of units
    const Presentation idp = Presentation(
        Field::rationals(), 2,
        {{"g1", Multidegree({0, 0})}, {"g2", Multidegree({0, 0})}},
        {{"s1", Multidegree({1, 0})}, {"s2", Multidegree({0, 1})}},
        Matrix::identity(Field::rationals(), 2));
    CHECK(idp.uniform_rank());
}

TEST_CASE("BPS genericity") {
    CHECK(!make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}).bps_generic()); // x appears twice as x^1
    CHECK(make_monomial({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}).bps_generic());
    CHECK(make_monomial({{3, 1}}).bps_generic());
    CHECK_THROWS_AS(sample_two_target_module().bps_generic(), DomainError);
}

TEST_CASE("degree map is monotone") {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        const Presentation p = random_presentation(rng);
        const std::size_t n = p.source_count();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const std::uint64_t a = b & rng.next();
            CHECK(p.degree_of_mask(a).leq(p.degree_of_mask(b)));
        }
    }
}

TEST_CASE("generic iff the brute-force fiber is an interval") {
    Rng rng(22);
    for (int t = 0; t < 30; ++t) {
        const Presentation p = random_presentation(rng);
        for (const Multidegree& alpha : p.lcm_lattice().elements) {
            const FiberStructure fs = p.fiber_structure(alpha);
            const auto fiber = brute_fiber(p, alpha);
            CHECK(fs.is_generic == brute_is_interval(fiber));
            // every member of the fiber sits under I^alpha, and over I_alpha
            // when generic
            const std::uint64_t upper = indices_to_mask(fs.i_upper);
            for (std::uint64_t f : fiber) {
                CHECK((f & ~upper) == 0);
                if (fs.is_generic) CHECK((f & indices_to_mask(*fs.i_lower)) == indices_to_mask(*fs.i_lower));
            }
        }
    }
}

TEST_CASE("BPS-generic monomial ideals are generic type") {
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        const Presentation p = random_bps_monomial_ideal(rng);
        REQUIRE(p.bps_generic());
        CHECK(p.is_generic_type());
    }
}

TEST_CASE("generic type forces distinct source degrees") {
    Rng rng(24);
    int seen = 0;
    for (int t = 0; t < 60; ++t) {
        const Presentation p = random_presentation(rng);
        if (!p.is_generic_type()) continue;
        ++seen;
        std::set<std::vector<int>> degs;
        for (const Generator& s : p.sources()) CHECK(degs.insert(s.degree.exponents()).second);
    }
    CHECK(seen > 0);
}
