#pragma once

#include "multibetti/matrix.hpp"
#include "multibetti/multidegree.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace multibetti {

class Presentation;

// Column matroid of a scalar matrix on a labeled ground set. Subsets are
// bitmasks over ground positions (ground size <= 64). The rank memo fills
// idempotently behind a mutex, so concurrent queries are safe.
class RepresentedMatroid {
public:
    RepresentedMatroid(std::vector<std::string> ground, Matrix columns);
    RepresentedMatroid(const RepresentedMatroid& other);
    RepresentedMatroid& operator=(const RepresentedMatroid&) = delete;

    std::size_t size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    const Matrix& columns() const { return columns_; }
    std::uint64_t full_mask() const;

    std::size_t rank(std::uint64_t subset) const; // memoized
    std::size_t rank() const { return rank(full_mask()); }
    bool is_independent(std::uint64_t subset) const;
    bool is_loop(std::size_t x) const;
    std::uint64_t loops() const;
    bool are_parallel(std::size_t x, std::size_t y) const;
    std::uint64_t closure(std::uint64_t subset) const;
    bool is_flat(std::uint64_t subset) const;

    // Exhaustive enumerations; fine at the <= 16 element scale this artifact
    // works at. Output in increasing mask order.
    std::vector<std::uint64_t> hyperplanes() const; // flats of rank r(S)-1
    std::vector<std::uint64_t> circuits() const;    // minimal dependent sets

    RepresentedMatroid restrict_to(std::uint64_t subset) const;   // M | J
    // M.J = M / (S \ J): columns of J in W / V_{S \ J}, so the minor stays a
    // represented matroid usable by the complex builders.
    RepresentedMatroid contract_to(std::uint64_t subset) const;

    std::string subset_labels(std::uint64_t subset) const; // "{a,b}"

private:
    std::vector<std::string> ground_;
    Matrix columns_;
    mutable std::unordered_map<std::uint64_t, std::size_t> rank_memo_;
    mutable std::mutex memo_mutex_;
};

RepresentedMatroid matroid_of(const Presentation& p);

// beta(M) = (-1)^r(S) * sum_{J subset S} (-1)^|J| r(J), evaluated exactly.
// The 2^n subset sum is the data-parallel kernel; the serial twin is the
// reference the tests compare against. Throws DomainError above max_ground.
long long beta_invariant(const RepresentedMatroid& m, std::size_t max_ground = 20);
long long beta_invariant_serial(const RepresentedMatroid& m, std::size_t max_ground = 20);

// The minors of M(Phi,S) at a generic lattice degree: M^alpha = M | I^alpha
// and M_alpha = M^alpha . I_alpha (contraction through the quotient by
// V_{I(alpha)}).
struct MinorPair {
    Multidegree alpha;
    std::vector<std::size_t> i_upper;     // I^alpha (source indices)
    std::vector<std::size_t> i_lower;     // I_alpha
    std::vector<std::size_t> i_of_alpha;  // I(alpha) = I^alpha \ I_alpha
    RepresentedMatroid m_upper;           // ground = I^alpha
    RepresentedMatroid m_lower;           // ground = I_alpha, columns in W / V_{I(alpha)}
};

MinorPair minors_at(const Presentation& p, const Multidegree& alpha); // throws if not generic

} // namespace multibetti
