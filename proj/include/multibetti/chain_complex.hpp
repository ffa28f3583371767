#pragma once

#include "multibetti/matrix.hpp"

#include <map>
#include <vector>

namespace multibetti {

// Bounded complex of finite-dimensional vector spaces. Degree lowest+k has
// dimension dims[k]; boundaries[k] maps degree lowest+k to lowest+k-1 and has
// shape dims[k-1] x dims[k] (boundaries[0] maps into the zero space below the
// complex). The constructor checks shapes and boundary(k-1) * boundary(k) = 0.
class ChainComplex {
public:
    ChainComplex(Field field, int lowest, std::vector<std::size_t> dims,
                 std::vector<Matrix> boundaries);
    static ChainComplex zero(Field field) { return ChainComplex(field, 0, {}, {}); }

    const Field& field() const { return field_; }
    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(dims_.size()) - 1; }
    bool empty() const { return dims_.empty(); }
    std::size_t length() const { return dims_.size(); }
    std::size_t dim_at(int degree) const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    // Boundary out of `degree` (toward degree-1); identity shape rules apply.
    const Matrix& boundary_at(int degree) const;

    // dim H_i = dim ker boundary_i - rank boundary_{i+1}, every i in range.
    std::map<int, std::size_t> homology_dims() const;
    bool is_exact() const;

    ChainComplex dual() const;              // C*_i = Hom(C_{-i})
    ChainComplex shift(int k) const;        // C[k]_i = C_{i+k}, boundary *(-1)^k
    ChainComplex hshift(int k) const;       // C<k>_i = C_{i+k}
    ChainComplex truncate_at(int k) const;  // degrees < k become zero
    // Tensor with k^d: dims scale by d, boundaries become Kronecker(B, I_d);
    // basis at each degree is ordered (summand, copy).
    ChainComplex tensor_with_space(std::size_t d) const;

private:
    Field field_;
    int lowest_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> boundaries_;
};

} // namespace multibetti
