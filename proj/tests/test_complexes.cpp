#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multibetti/errors.hpp"
#include "multibetti/random_instances.hpp"
#include "multibetti/simplicial.hpp"
#include "multibetti/v_complexes.hpp"

using namespace multibetti;

namespace {

const Field QQ = Field::rationals();

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
    std::map<int, std::size_t> out;
    for (const auto& [k, v] : m)
        if (v != 0) out[k] = v;
    return out;
}

} // namespace

TEST_CASE("homology of tiny complexes") {
    // 0 -> k -> k -> 0 with identity boundary
    const ChainComplex exact(QQ, 0, {1, 1}, {Matrix(QQ, 0, 1), Matrix::identity(QQ, 1)});
    CHECK(nonzero(exact.homology_dims()).empty());

    // zero boundaries: homology = dims
    const ChainComplex zero(QQ, 0, {2, 3}, {Matrix(QQ, 0, 2), Matrix(QQ, 2, 3)});
    CHECK(zero.homology_dims() == std::map<int, std::size_t>{{0, 2}, {1, 3}});

    CHECK_THROWS_AS(ChainComplex(QQ, 0, {1, 1},
                                 {Matrix(QQ, 0, 1), Matrix::from_rows(QQ, {{1}})})
                        .boundary_at(2),
                    DomainError);
    // d∘d != 0 is rejected
    const Matrix id2 = Matrix::identity(QQ, 2);
    CHECK_THROWS_AS(ChainComplex(QQ, 0, {2, 2, 2}, {Matrix(QQ, 0, 2), id2, id2}), DomainError);
}

TEST_CASE("boundary of a triangle has reduced homology only in degree 1") {
    const SimplicialComplex triangle({"1", "2", "3"}, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});
    const auto h = nonzero(triangle.reduced_homology(QQ));
    CHECK(h == std::map<int, std::size_t>{{1, 1}});
}

TEST_CASE("full simplex is contractible, empty complex has H_{-1}, void has nothing") {
    CHECK(nonzero(SimplicialComplex::full_simplex({"a", "b", "c"}).reduced_homology(QQ)).empty());
    CHECK(SimplicialComplex::empty_complex({"a"}).reduced_homology(QQ) ==
          std::map<int, std::size_t>{{-1, 1}});
    CHECK(SimplicialComplex::void_complex({"a"}).reduced_homology(QQ).empty());
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {0b11}), DomainError); // not closed
}

TEST_CASE("dual, shifts and truncation") {
    const SimplicialComplex triangle({"1", "2", "3"},
                                     {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110});
    const ChainComplex c = triangle.reduced_chain_complex(QQ);

    SUBCASE("dual of dual reindexes homology back") {
        const auto h = c.homology_dims();
        const auto hd = c.dual().homology_dims();
        const auto hdd = c.dual().dual().homology_dims();
        CHECK(hdd == h);
        for (const auto& [i, v] : h) CHECK(hd.at(-i) == v);
    }
    SUBCASE("hshift moves homology, shift keeps the square zero") {
        const auto h = c.homology_dims();
        const auto hs = c.hshift(2).homology_dims();
        for (const auto& [i, v] : h) CHECK(hs.at(i - 2) == v);
        const auto neg = c.shift(1); // odd shift flips boundary signs
        for (const auto& [i, v] : h) CHECK(neg.homology_dims().at(i - 1) == v);
    }
    SUBCASE("truncation kills low degrees") {
        const ChainComplex t = c.truncate_at(1);
        CHECK(t.lowest_degree() == 1);
        CHECK(t.dim_at(0) == 0);
        CHECK(t.dim_at(1) == c.dim_at(1));
        CHECK(c.truncate_at(5).empty());
        CHECK(c.truncate_at(-10).dims() == c.dims());
    }
    SUBCASE("tensor with k^d scales dims and homology") {
        const ChainComplex t = c.tensor_with_space(3);
        for (int d = c.lowest_degree(); d <= c.highest_degree(); ++d)
            CHECK(t.dim_at(d) == 3 * c.dim_at(d));
        for (const auto& [i, v] : c.homology_dims()) CHECK(t.homology_dims().at(i) == 3 * v);
    }
}

TEST_CASE("delta_b on the worked matroid") {
    const RepresentedMatroid m = matroid_of(sample_two_target_module());
    const SimplicialComplex d = delta_b(m, 3); // away from d
    CHECK(d.has_face(0b0011));  // closure{a,b} = {a,b}, misses d
    CHECK(!d.has_face(0b0111)); // {a,b,c} has full rank, closure hits d
    // facets are hyperplanes not containing d
    for (std::uint64_t h : m.hyperplanes())
        if (!(h & 0b1000)) CHECK(d.has_face(h));
}

TEST_CASE("delta_b degenerate cases") {
    SUBCASE("b a loop gives the void complex") {
        const RepresentedMatroid m({"l", "x"}, Matrix::from_rows(QQ, {{0, 1}}));
        CHECK(delta_b(m, 0).is_void());
    }
    SUBCASE("three parallels leave only the empty face") {
        const RepresentedMatroid m({"1", "2", "3"}, Matrix::from_rows(QQ, {{1, 1, 1}}));
        const SimplicialComplex d = delta_b(m, 0);
        CHECK(d.faces() == std::vector<std::uint64_t>{0});
        // H~_{-1} = 1 = beta at i = r - 2 = -1
        CHECK(d.reduced_homology(QQ) == std::map<int, std::size_t>{{-1, 1}});
    }
    SUBCASE("loop elsewhere makes delta_b a cone") {
        const RepresentedMatroid m({"l", "x", "y"}, Matrix::from_rows(QQ, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(nonzero(delta_b(m, 1).reduced_homology(QQ)).empty());
    }
}

TEST_CASE("build_v on single column and all-loop matrices") {
    const Matrix single = Matrix::from_rows(QQ, {{5}});
    const GradedSubspaceComplex v = build_v(single);
    CHECK(v.dims() == std::vector<std::size_t>{1, 0});
    CHECK(nonzero(v.complex.homology_dims()) == std::map<int, std::size_t>{{0, 1}});

    const GradedSubspaceComplex z = build_v(Matrix(QQ, 2, 3));
    CHECK(nonzero(z.complex.homology_dims()).empty());
    for (std::size_t d : z.dims()) CHECK(d == 0);
}

TEST_CASE("build_v of the worked matrix concentrates at |S| - r = 2") {
    const Matrix m = Matrix::from_rows(QQ, {{1, 1, 1, 1}, {1, 1, 2, 3}});
    const GradedSubspaceComplex v = build_v(m);
    // beta of that matroid by the rank-sum formula is 1
    const auto h = nonzero(v.complex.homology_dims());
    CHECK(h == std::map<int, std::size_t>{{2, 1}});
}

TEST_CASE("build_v_alpha reproduces the worked dims and homology") {
    const Presentation p = sample_two_target_module();
    SUBCASE("(3,3,3): 0 -> Q -> Q^6 -> Q^6 -> Q^2 -> 0") {
        const GradedSubspaceComplex v = build_v_alpha(p, Multidegree({3, 3, 3}));
        CHECK(v.dims() == std::vector<std::size_t>{2, 6, 6, 1});
        CHECK(nonzero(v.complex.homology_dims()) == std::map<int, std::size_t>{{2, 1}});
    }
    SUBCASE("(3,2,3): 0 -> Q^3 -> Q^6 -> Q^2 -> 0") {
        const GradedSubspaceComplex v = build_v_alpha(p, Multidegree({3, 2, 3}));
        REQUIRE(v.dims().size() == 4);
        CHECK(v.dims()[0] == 2);
        CHECK(v.dims()[1] == 6);
        CHECK(v.dims()[2] == 3);
        CHECK(v.dims()[3] == 0);
        CHECK(nonzero(v.complex.homology_dims()) == std::map<int, std::size_t>{{1, 1}});
    }
    SUBCASE("monomial ideal with I_a = I^a: binomial dims, homology at n-1") {
        const Presentation mono = make_monomial({{2, 0, 0}, {1, 1, 0}, {1, 0, 1}});
        const GradedSubspaceComplex v = build_v_alpha(mono, Multidegree({2, 1, 1}));
        CHECK(v.dims() == std::vector<std::size_t>{1, 3, 3, 0}); // rank-1 spans; V_∅ = 0
        CHECK(nonzero(v.complex.homology_dims()) == std::map<int, std::size_t>{{2, 1}});
    }
}

TEST_CASE("build_v_bar matches build_v_alpha in homology") {
    const Presentation p = sample_two_target_module();
    for (const auto& exps : {std::vector<int>{3, 3, 3}, std::vector<int>{3, 2, 3}}) {
        const Multidegree alpha(exps);
        const auto va = build_v_alpha(p, alpha);
        const auto vb = build_v_bar(p, alpha);
        CHECK(nonzero(va.complex.homology_dims()) == nonzero(vb.complex.homology_dims()));
    }
    // I(alpha) empty: identical dims as well
    const auto va = build_v_alpha(p, Multidegree({3, 2, 3}));
    const auto vb = build_v_bar(p, Multidegree({3, 2, 3}));
    CHECK(va.dims() == vb.dims());
}

TEST_CASE("v_bar collapses to the zero complex when I_alpha lands in V_I(alpha)") {
    // two sources with equal columns; contracting the extra one kills the rest
    const Presentation p(Field::rationals(), 2, {{"g", Multidegree({0, 0})}},
                         {{"a", Multidegree({1, 0})}, {"b", Multidegree({1, 1})}},
                         Matrix::from_rows(QQ, {{1, 1}}));
    const Multidegree alpha({1, 1});
    const FiberStructure fs = p.fiber_structure(alpha);
    REQUIRE(fs.is_generic);
    REQUIRE(*fs.i_lower == std::vector<std::size_t>{1});
    const GradedSubspaceComplex vb = build_v_bar(p, alpha);
    for (std::size_t d : vb.dims()) CHECK(d == 0);
    CHECK(nonzero(vb.complex.homology_dims()).empty());
}

TEST_CASE("ordering invariance of V homology") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        const RepresentedMatroid m = random_represented_matroid(rng, 5, 3);
        const auto base = build_v(m.columns()).complex.homology_dims();
        for (int j = 0; j < 3; ++j)
            CHECK(build_v(m.columns(), rng.permutation(m.size())).complex.homology_dims() == base);
    }
}

TEST_CASE("simplex_dual_shifted is exact with binomial dims") {
    SUBCASE("one vertex: 0 -> k -> k -> 0") {
        const ChainComplex c = simplex_dual_shifted(QQ, 1);
        CHECK(c.lowest_degree() == 0);
        CHECK(c.dims() == std::vector<std::size_t>{1, 1});
        CHECK(c.is_exact());
    }
    SUBCASE("three vertices: dims 1,3,3,1 over degrees 0..3") {
        const ChainComplex c = simplex_dual_shifted(QQ, 3);
        CHECK(c.lowest_degree() == 0);
        CHECK(c.dims() == std::vector<std::size_t>{1, 3, 3, 1});
        CHECK(c.is_exact());
    }
    SUBCASE("tensoring scales dims by the fiber dimension") {
        const ChainComplex c = simplex_dual_shifted(QQ, 2).tensor_with_space(3);
        CHECK(c.dims() == std::vector<std::size_t>{3, 6, 3});
        CHECK(c.is_exact());
    }
}

TEST_CASE("short exact sequence of the alpha complex") {
    const Presentation p = sample_two_target_module();
    const Multidegree alpha({3, 3, 3});
    const GradedSubspaceComplex va = build_v_alpha(p, alpha);
    const GradedSubspaceComplex vb = build_v_bar(p, alpha);
    const SubcomplexEmbedding sub = v_alpha_subcomplex(p, alpha, va);

    // dim V_{I(alpha)} = 1 here, so the subcomplex is C' itself
    const ChainComplex cprime = simplex_dual_shifted(QQ, 3);
    CHECK(sub.sub.dims() == cprime.dims());
    CHECK(sub.sub.is_exact());

    for (int i = 0; i <= 3; ++i) {
        CHECK(va.complex.dim_at(i) == sub.sub.dim_at(i) + vb.complex.dim_at(i));
        CHECK(sub.embeddings[i].rank() == sub.sub.dim_at(i));
        if (i >= 1) {
            const Matrix lhs = va.complex.boundary_at(i) * sub.embeddings[i];
            const Matrix rhs = sub.embeddings[i - 1] * sub.sub.boundary_at(i);
            CHECK(lhs == rhs);
        }
    }
}
