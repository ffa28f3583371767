#pragma once

#include "multibetti/chain_complex.hpp"
#include "multibetti/matroid.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace multibetti {

// Finite simplicial complex on a labeled vertex set, faces as bitmasks. The
// void complex (no faces at all) and the empty complex {∅} are distinct:
// the former has zero homology everywhere, the latter has H~_{-1} = k.
class SimplicialComplex {
public:
    SimplicialComplex(std::vector<std::string> vertices, std::vector<std::uint64_t> faces,
                      bool check_closure = true);
    static SimplicialComplex void_complex(std::vector<std::string> vertices);
    static SimplicialComplex empty_complex(std::vector<std::string> vertices);
    static SimplicialComplex full_simplex(std::vector<std::string> vertices);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::uint64_t>& faces() const { return faces_; } // sorted masks
    bool is_void() const { return faces_.empty(); }
    bool has_face(std::uint64_t mask) const;
    int dim() const; // -1 for {∅}; meaningless (-2) for the void complex

    // Reduced chain complex over the field, one degree per face cardinality
    // starting at -1; faces oriented by the position order `vertex_order`
    // (a permutation of 0..n-1; natural order if empty).
    ChainComplex reduced_chain_complex(const Field& field,
                                       const std::vector<std::size_t>& vertex_order = {}) const;
    std::map<int, std::size_t> reduced_homology(const Field& field,
                                                const std::vector<std::size_t>& vertex_order = {}) const;

private:
    std::vector<std::string> vertices_;
    std::vector<std::uint64_t> faces_;
};

// The affine simplicial complex of M away from b: faces are the J with
// b outside the matroid closure of J (equivalently V_J != V_{J∪b}).
// Void when b is a loop, since every closure contains the loops.
SimplicialComplex delta_b(const RepresentedMatroid& m, std::size_t b);

} // namespace multibetti
