#pragma once

#include "multibetti/matrix.hpp"
#include "multibetti/multidegree.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multibetti {

struct Generator {
    std::string label;
    Multidegree degree;
};

// The multidegrees join-generated by the source degrees, i.e. the only
// degrees where Betti numbers beyond homological degree 0 can live.
struct LcmLattice {
    std::vector<Multidegree> elements; // degree-lex sorted, deduplicated
    std::vector<Multidegree> generator_degrees;
    bool contains(const Multidegree& alpha) const;
};

// Fiber data of the degree map at alpha: the unique maximal set I^alpha, the
// antichain of minimal sets, and the interval endpoints when the fiber is one.
struct FiberStructure {
    Multidegree alpha;
    std::vector<std::size_t> i_upper;                 // I^alpha, increasing source indices
    std::vector<std::vector<std::size_t>> minimal_sets;
    bool is_generic = false;                          // exactly one minimal set
    std::optional<std::vector<std::size_t>> i_lower;  // I_alpha, present iff generic
};

// Minimal multihomogeneous presentation Phi: E -> G. `coeffs` is the scalar
// matrix of phi(Phi) = Phi (x) k (every variable sent to 1): rows indexed by
// targets, columns by the source basis S. The implied monomial on entry
// (g, s) is x^(deg s - deg g).
class Presentation {
public:
    Presentation(Field field, std::size_t variables, std::vector<Generator> targets,
                 std::vector<Generator> sources, Matrix coeffs);

    static Presentation monomial_ideal(Field field, const std::vector<Multidegree>& exponents);
    // Schema: {"variables", "field", "targets", "sources", "matrix"} or the
    // shorthand {"monomial_ideal": [[..], ...]}. Throws SchemaError /
    // ValidationError with the offending entry named.
    static Presentation parse(const nlohmann::json& doc,
                              std::optional<Field> field_override = std::nullopt);
    static Presentation parse_file(const std::string& path,
                                   std::optional<Field> field_override = std::nullopt);

    std::size_t variables() const { return m_; }
    const Field& field() const { return coeffs_.field(); }
    const std::vector<Generator>& targets() const { return targets_; }
    const std::vector<Generator>& sources() const { return sources_; }
    std::size_t source_count() const { return sources_.size(); }
    const Matrix& coeffs() const { return coeffs_; }
    bool is_monomial() const; // single target of degree zero

    Multidegree degree_of_set(const std::vector<std::size_t>& subset) const;
    Multidegree degree_of_mask(std::uint64_t mask) const;

    LcmLattice lcm_lattice() const;
    std::vector<std::size_t> upper_set(const Multidegree& alpha) const; // I^alpha
    bool in_lattice(const Multidegree& alpha) const;

    FiberStructure fiber_structure(const Multidegree& alpha) const; // throws DomainError off-lattice
    bool is_generic_relative(const Multidegree& alpha) const;
    // True iff every lattice element is generic; on failure `witness` (if
    // given) receives the degree-lex-first non-generic degree.
    bool is_generic_type(Multidegree* witness = nullptr) const;

    // Every rank(coeffs)-column submatrix has full rank.
    bool uniform_rank() const;
    // No variable occurs with the same nonzero exponent in two distinct
    // generators (the [BPS] notion; monomial presentations only).
    bool bps_generic() const;

private:
    void validate() const;
    std::size_t m_;
    std::vector<Generator> targets_, sources_;
    Matrix coeffs_;
};

std::vector<std::size_t> mask_to_indices(std::uint64_t mask);
std::uint64_t indices_to_mask(const std::vector<std::size_t>& indices);

} // namespace multibetti
