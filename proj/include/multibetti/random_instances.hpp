#pragma once

#include "multibetti/matroid.hpp"
#include "multibetti/presentation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace multibetti {

// Deterministic generator for the randomized suites: mt19937_64 with modulo
// draws, so a fixed seed reproduces the same instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int uniform(int lo, int hi); // inclusive bounds
    std::vector<std::size_t> permutation(std::size_t n);
    std::vector<std::size_t> permutation_of(const std::vector<std::size_t>& items);

private:
    std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols,
                     int lo = -2, int hi = 2);

// Column matroid of a random small integer matrix over Q, entries in {-2..2}.
RepresentedMatroid random_represented_matroid(Rng& rng, std::size_t max_elements = 6,
                                              std::size_t max_rows = 4);

// Valid multihomogeneous minimal presentation over Q with at most the given
// variables / sources / targets.
Presentation random_presentation(Rng& rng, std::size_t max_vars = 4, std::size_t max_sources = 5,
                                 std::size_t max_targets = 2);

// Monomial ideal with minimal generators (antichain of exponent vectors).
Presentation random_monomial_ideal(Rng& rng, std::size_t max_generators = 5,
                                   std::size_t max_vars = 4, int max_exponent = 4);

// Monomial ideal where no variable repeats a nonzero exponent across
// generators; such ideals are generic-type by the theory under test.
Presentation random_bps_monomial_ideal(Rng& rng, std::size_t max_generators = 5,
                                       std::size_t max_vars = 4);

Presentation make_monomial(const std::vector<std::vector<int>>& exponents,
                           Field field = Field::rationals());

// Four sources a,b,c,d of degrees (3,1,1),(1,3,1),(1,1,3),(1,2,2) over two
// degree-zero targets with coefficient matrix [[1,1,1,1],[1,1,2,3]]: the
// worked module whose minors at (3,3,3) and (3,2,3) anchor the test suites.
Presentation sample_two_target_module(Field field = Field::rationals());

} // namespace multibetti
