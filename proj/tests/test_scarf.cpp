#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multibetti/errors.hpp"
#include "multibetti/random_instances.hpp"
#include "multibetti/scarf.hpp"

using namespace multibetti;

TEST_CASE("scarf complex of x^2, xy, xz is the full simplex") {
    const Presentation p = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    const ScarfComplex sc = scarf_complex(p);
    CHECK(sc.faces.size() == 8);
    CHECK(!sc.closure_violation.has_value());
}

TEST_CASE("scarf complex drops faces with shared fibers") {
    // deg{2} = x^2y = deg{1,2}: only ∅ and {1} survive
    const Presentation p = make_monomial({{2, 0}, {2, 1}});
    const ScarfComplex sc = scarf_complex(p);
    CHECK(sc.faces == std::vector<std::uint64_t>{0b00, 0b01});
}

TEST_CASE("scarf face degrees are generic with singleton fibers") {
    Rng rng(61);
    for (int t = 0; t < 25; ++t) {
        const Presentation p = random_monomial_ideal(rng);
        for (std::uint64_t face : scarf_complex(p).faces) {
            if (face == 0) continue;
            const Multidegree alpha = p.degree_of_mask(face);
            const FiberStructure fs = p.fiber_structure(alpha);
            CHECK(fs.is_generic);
            CHECK(indices_to_mask(fs.i_upper) == face);
            CHECK(indices_to_mask(*fs.i_lower) == face);
        }
    }
}

TEST_CASE("taylor complex has binomial ranks and squares to zero") {
    const Presentation p = make_monomial({{2, 0}, {1, 1}, {0, 2}});
    const MonomialResolution taylor = taylor_complex(p); // ctor asserts d∘d=0
    CHECK(taylor.total_ranks() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(is_resolution(taylor, p, {.parallel = false}));
}

TEST_CASE("taylor differential entry with equal degrees breaks minimality") {
    // deg{x^2, y^2} = x^2y^2 = deg{x^2, xy, y^2}
    const Presentation p = make_monomial({{2, 0}, {1, 1}, {0, 2}});
    CHECK(!is_minimal(taylor_complex(p)));
    // its scarf complex drops {1,3} and {1,2,3}
    const ScarfComplex sc = scarf_complex(p);
    CHECK(sc.faces ==
          std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b011, 0b100, 0b110});
    const MonomialResolution scarf = algebraic_scarf(p);
    CHECK(scarf.total_ranks() == std::vector<std::size_t>{1, 3, 2});
    CHECK(is_minimal(scarf));
    CHECK(is_resolution(scarf, p, {.parallel = false}));
}

TEST_CASE("algebraic scarf of x^2, xy, xz has ranks 1,3,3,1") {
    const Presentation p = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    const MonomialResolution scarf = algebraic_scarf(p);
    CHECK(scarf.total_ranks() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(is_resolution(scarf, p, {.parallel = false}));
    CHECK(is_minimal(scarf));
}

TEST_CASE("single generator resolves as 0 -> R -> R") {
    const Presentation p = make_monomial({{3, 1}});
    const MonomialResolution scarf = algebraic_scarf(p);
    CHECK(scarf.total_ranks() == std::vector<std::size_t>{1, 1});
    CHECK(is_resolution(scarf, p, {.parallel = false}));
    CHECK(is_minimal(scarf));
}

TEST_CASE("strand checks agree between serial and parallel") {
    Rng rng(62);
    for (int t = 0; t < 10; ++t) {
        const Presentation p = random_monomial_ideal(rng);
        const MonomialResolution taylor = taylor_complex(p);
        CHECK(is_resolution(taylor, p, {.parallel = false}) ==
              is_resolution(taylor, p, {.parallel = true}));
    }
}

TEST_CASE("verify_scarf_theorem on the worked fixtures") {
    SUBCASE("x^2, xy, xz passes") {
        const ScarfReport r = verify_scarf_theorem(make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}),
                                                   {.parallel = false});
        CHECK(r.generic_type);
        CHECK(r.pass());
        CHECK(r.total_ranks == std::vector<std::size_t>{1, 3, 3, 1});
    }
    SUBCASE("xy, xz passes") {
        const ScarfReport r =
            verify_scarf_theorem(make_monomial({{1, 1, 0}, {1, 0, 1}}), {.parallel = false});
        CHECK(r.generic_type);
        CHECK(r.pass());
    }
    SUBCASE("the frontier ideal is not generic type and its scarf complex fails a strand") {
        const ScarfReport r = verify_scarf_theorem(
            make_monomial({{1, 1, 0}, {1, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
            {.parallel = false});
        CHECK(!r.generic_type);
        CHECK(r.witness == Multidegree({1, 2, 2}));
        CHECK(!r.failing.empty()); // non-acyclic somewhere
    }
    SUBCASE("multiple targets are rejected") {
        CHECK_THROWS_AS(verify_scarf_theorem(sample_two_target_module()), DomainError);
    }
}

TEST_CASE("taylor strands are exact for random monomial ideals") {
    Rng rng(63);
    for (int t = 0; t < 20; ++t) {
        const Presentation p = random_monomial_ideal(rng, 6, 4);
        CHECK(is_resolution(taylor_complex(p), p, {.parallel = false}));
    }
}

TEST_CASE("scarf ranks match the oracle for generic type ideals") {
    Rng rng(64);
    int generic_seen = 0;
    for (int t = 0; t < 20 || generic_seen == 0; ++t) {
        const Presentation p =
            t % 2 == 0 ? random_monomial_ideal(rng) : random_bps_monomial_ideal(rng);
        if (!p.is_generic_type()) continue;
        ++generic_seen;
        const ScarfReport r = verify_scarf_theorem(p, {.parallel = false});
        CHECK(r.pass());
        if (t > 200) break;
    }
    CHECK(generic_seen > 0);
}

TEST_CASE("monomial corollary restated through scarf faces") {
    Rng rng(65);
    for (int t = 0; t < 15; ++t) {
        const Presentation p = random_monomial_ideal(rng);
        const ScarfComplex sc = scarf_complex(p);
        ModuleFibers fibers(p);
        for (const Multidegree& alpha : p.lcm_lattice().elements) {
            const FiberStructure fs = p.fiber_structure(alpha);
            if (!fs.is_generic) continue;
            const auto oracle = koszul_betti(fibers, alpha);
            const int i = static_cast<int>(fs.i_lower->size());
            const bool oracle_one = oracle.count(i) && oracle.at(i) == 1;
            const bool scarf_face = *fs.i_lower == fs.i_upper &&
                                    sc.complex.has_face(indices_to_mask(fs.i_upper));
            CHECK(oracle_one == scarf_face);
        }
    }
}
