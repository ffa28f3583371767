#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multibetti/errors.hpp"
#include "multibetti/matroid.hpp"
#include "multibetti/random_instances.hpp"

#include <bit>
#include <set>

using namespace multibetti;

namespace {

const Field QQ = Field::rationals();

RepresentedMatroid worked_matroid() {
    return matroid_of(sample_two_target_module());
}

RepresentedMatroid rank_one_three_parallel() {
    return RepresentedMatroid({"1", "2", "3"}, Matrix::from_rows(QQ, {{1, 1, 1}}));
}

// independent sets straight from the definition
std::set<std::uint64_t> independents(const RepresentedMatroid& m) {
    std::set<std::uint64_t> out;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << m.size()); ++j)
        if (m.is_independent(j)) out.insert(j);
    return out;
}

} // namespace

TEST_CASE("worked matroid: ranks, loops, parallels") {
    const RepresentedMatroid m = worked_matroid();
    CHECK(m.rank() == 2);
    CHECK(m.rank(0b0011) == 1); // a,b parallel
    CHECK(m.rank(0) == 0);
    CHECK(m.are_parallel(0, 1));
    CHECK(!m.are_parallel(0, 2));
    CHECK(m.loops() == 0);
    CHECK(m.closure(0b0001) == 0b0011);
    CHECK(m.closure(m.full_mask()) == m.full_mask());
}

TEST_CASE("monomial ideals give the rank-one matroid with everything parallel") {
    const RepresentedMatroid m = matroid_of(make_monomial({{2, 0}, {1, 1}, {0, 2}}));
    CHECK(m.rank() == 1);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = x + 1; y < 3; ++y) CHECK(m.are_parallel(x, y));
}

TEST_CASE("free matroid from identity coefficients") {
    const RepresentedMatroid m({"x", "y", "z"}, Matrix::identity(QQ, 3));
    CHECK(m.rank() == 3);
    CHECK(m.circuits().empty());
    CHECK(independents(m).size() == 8);
}

TEST_CASE("closure of the empty set is the set of loops") {
    const RepresentedMatroid m({"u", "v"}, Matrix::from_rows(QQ, {{0, 1}}));
    CHECK(m.is_loop(0));
    CHECK(!m.is_loop(1));
    CHECK(m.closure(0) == 0b01);
}

TEST_CASE("hyperplanes and circuits of the rank-one matroid") {
    const RepresentedMatroid m = rank_one_three_parallel();
    CHECK(m.hyperplanes() == std::vector<std::uint64_t>{0});
    CHECK(m.circuits() == std::vector<std::uint64_t>{0b011, 0b101, 0b110});
}

TEST_CASE("worked matroid has circuit {a,b}") {
    const auto circuits = worked_matroid().circuits();
    CHECK(std::find(circuits.begin(), circuits.end(), 0b0011) != circuits.end());
}

TEST_CASE("restriction and contraction at the worked degrees") {
    const RepresentedMatroid m = worked_matroid();
    SUBCASE("restrict to the full ground set is the identity") {
        const RepresentedMatroid r = m.restrict_to(m.full_mask());
        CHECK(independents(r) == independents(m));
    }
    SUBCASE("contract mod d: three parallel non-loops") {
        const RepresentedMatroid c = m.contract_to(0b0111);
        CHECK(c.size() == 3);
        CHECK(c.rank() == 1);
        CHECK(c.loops() == 0);
    }
    SUBCASE("contracting by a loop changes no ranks") {
        const RepresentedMatroid ml({"l", "x", "y"},
                                    Matrix::from_rows(QQ, {{0, 1, 0}, {0, 0, 1}}));
        const RepresentedMatroid c = ml.contract_to(0b110);
        CHECK(c.rank() == 2);
        CHECK(c.rank(0b01) == 1);
        CHECK(c.rank(0b10) == 1);
    }
}

TEST_CASE("contraction agrees with the set-theoretic definition") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 5, 3);
        const std::uint64_t j = rng.next() & m.full_mask();
        const RepresentedMatroid c = m.contract_to(j);
        const std::uint64_t complement = m.full_mask() & ~j;
        // I ⊆ J independent in M.J iff I ∪ I' independent for all
        // independent I' of M | (S \ J)
        const auto idx = mask_to_indices(j);
        for (std::uint64_t im = 0; im < (std::uint64_t{1} << idx.size()); ++im) {
            std::uint64_t i_orig = 0;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (im >> k & 1) i_orig |= std::uint64_t{1} << idx[k];
            bool expect = true;
            for (std::uint64_t ip = complement; ; ip = (ip - 1) & complement) {
                if (m.is_independent(ip) && !m.is_independent(i_orig | ip)) {
                    expect = false;
                    break;
                }
                if (ip == 0) break;
            }
            CHECK(c.is_independent(im) == expect);
        }
    }
}

TEST_CASE("restriction keeps exactly the independents inside J") {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 6, 4);
        const std::uint64_t j = rng.next() & m.full_mask();
        const RepresentedMatroid r = m.restrict_to(j);
        const auto idx = mask_to_indices(j);
        for (std::uint64_t im = 0; im < (std::uint64_t{1} << idx.size()); ++im) {
            std::uint64_t i_orig = 0;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (im >> k & 1) i_orig |= std::uint64_t{1} << idx[k];
            CHECK(r.is_independent(im) == m.is_independent(i_orig));
        }
    }
}

TEST_CASE("rank axioms hold on random represented matroids") {
    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 5, 4);
        const std::uint64_t full = m.full_mask();
        CHECK(m.rank(0) == 0);
        for (std::uint64_t a = 0; a <= full; ++a) {
            CHECK(m.rank(a) <= static_cast<std::size_t>(std::popcount(a)));
            for (std::size_t x = 0; x < m.size(); ++x) {
                const std::uint64_t bit = std::uint64_t{1} << x;
                if (a & bit) continue;
                CHECK(m.rank(a | bit) <= m.rank(a) + 1);
                CHECK(m.rank(a) <= m.rank(a | bit));
            }
            if (a == full) break;
        }
    }
}

TEST_CASE("beta invariant of the worked minors") {
    const Presentation p = sample_two_target_module();
    SUBCASE("alpha=(3,3,3)") {
        const MinorPair mp = minors_at(p, Multidegree({3, 3, 3}));
        CHECK(mp.i_of_alpha == std::vector<std::size_t>{3});
        CHECK(mp.m_lower.rank() == 1);
        CHECK(beta_invariant(mp.m_lower) == 1);
        CHECK(beta_invariant_serial(mp.m_lower) == 1);
    }
    SUBCASE("alpha=(3,2,3)") {
        const MinorPair mp = minors_at(p, Multidegree({3, 2, 3}));
        CHECK(mp.i_of_alpha.empty());
        CHECK(mp.m_lower.rank() == 2);
        CHECK(beta_invariant(mp.m_lower) == 1);
        CHECK(independents(mp.m_lower) == independents(mp.m_upper));
    }
    SUBCASE("non-generic degree is refused") {
        const Presentation bad = make_monomial({{3, 0, 2}, {2, 3, 0}, {1, 2, 1}, {0, 3, 2}});
        CHECK_THROWS_AS(minors_at(bad, Multidegree({3, 3, 2})), DomainError);
        CHECK_THROWS_AS(minors_at(p, Multidegree({9, 9, 9})), DomainError);
    }
}

TEST_CASE("matroids with a loop have beta zero") {
    const RepresentedMatroid m({"l", "x"}, Matrix::from_rows(QQ, {{0, 1}}));
    CHECK(beta_invariant(m) == 0);
    const RepresentedMatroid empty({}, Matrix(QQ, 0, 0));
    CHECK(beta_invariant(empty) == 0);
}

TEST_CASE("beta is invariant under relabeling and column scaling") {
    Rng rng(34);
    for (int t = 0; t < 25; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 5, 3);
        const long long beta = beta_invariant_serial(m);

        const auto perm = rng.permutation(m.size());
        Matrix shuffled(QQ, m.columns().rows(), m.size());
        std::vector<std::string> labels(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) {
            labels[j] = m.ground()[perm[j]];
            const Rational scale = QQ.from_int(rng.uniform(0, 1) ? 2 : -3);
            for (std::size_t i = 0; i < m.columns().rows(); ++i)
                shuffled.set(i, j, QQ.mul(scale, m.columns().at(i, perm[j])));
        }
        CHECK(beta_invariant_serial(RepresentedMatroid(labels, shuffled)) == beta);
    }
}

TEST_CASE("rank memo is safe under concurrent queries") {
    Rng rng(36);
    const RepresentedMatroid shared = random_represented_matroid(rng, 8, 4);
    const RepresentedMatroid fresh(shared); // computes ranks without contention
    const std::uint64_t full = shared.full_mask();
    std::vector<std::size_t> expect(full + 1);
    for (std::uint64_t mask = 0; mask <= full; ++mask) expect[mask] = fresh.rank(mask);

    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (long long mask = 0; mask <= static_cast<long long>(full); ++mask)
        ok = ok && shared.rank(static_cast<std::uint64_t>(mask)) == expect[mask] &&
             shared.closure(static_cast<std::uint64_t>(mask)) ==
                 fresh.closure(static_cast<std::uint64_t>(mask));
    CHECK(ok);
}

TEST_CASE("parallel beta kernel matches the serial reference") {
    Rng rng(35);
    for (int t = 0; t < 30; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 8, 4);
        CHECK(beta_invariant(m) == beta_invariant_serial(m));
    }
    const RepresentedMatroid big({"a","b","c","d","e","f","g","h","i","j","k"},
                                 random_matrix(rng, QQ, 3, 11));
    CHECK(beta_invariant(big) == beta_invariant_serial(big));
    CHECK_THROWS_AS(beta_invariant(big, 10), DomainError);
}
