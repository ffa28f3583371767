#include "multibetti/chain_complex.hpp"

#include "multibetti/errors.hpp"

namespace multibetti {

ChainComplex::ChainComplex(Field field, int lowest, std::vector<std::size_t> dims,
                           std::vector<Matrix> boundaries)
    : field_(field), lowest_(lowest), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() != dims_.size())
        throw DomainError("chain complex needs one boundary per degree");
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const std::size_t target = k == 0 ? 0 : dims_[k - 1];
        if (boundaries_[k].rows() != target || boundaries_[k].cols() != dims_[k])
            throw DomainError("boundary shape mismatch at degree " +
                              std::to_string(lowest_ + static_cast<int>(k)));
        if (k > 0 && !(boundaries_[k - 1] * boundaries_[k]).is_zero())
            throw DomainError("boundary composite nonzero at degree " +
                              std::to_string(lowest_ + static_cast<int>(k)));
    }
}

std::size_t ChainComplex::dim_at(int degree) const {
    const int k = degree - lowest_;
    if (k < 0 || k >= static_cast<int>(dims_.size())) return 0;
    return dims_[k];
}

const Matrix& ChainComplex::boundary_at(int degree) const {
    const int k = degree - lowest_;
    if (k < 0 || k >= static_cast<int>(dims_.size()))
        throw DomainError("boundary_at: degree out of range");
    return boundaries_[k];
}

std::map<int, std::size_t> ChainComplex::homology_dims() const {
    std::map<int, std::size_t> out;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const std::size_t rank_out = boundaries_[k].rank();
        const std::size_t rank_in = (k + 1 < dims_.size()) ? boundaries_[k + 1].rank() : 0;
        out[lowest_ + static_cast<int>(k)] = dims_[k] - rank_out - rank_in;
    }
    return out;
}

bool ChainComplex::is_exact() const {
    for (const auto& [deg, h] : homology_dims())
        if (h != 0) return false;
    return true;
}

ChainComplex ChainComplex::dual() const {
    if (empty()) return ChainComplex::zero(field_);
    const std::size_t n = dims_.size();
    // new degree d holds Hom(C_{-d}); new boundary at d is the transpose of
    // the old boundary out of degree -d+1.
    const int new_lowest = -highest_degree();
    std::vector<std::size_t> dims(n);
    std::vector<Matrix> bnds;
    bnds.reserve(n);
    for (std::size_t k = 0; k < n; ++k) dims[k] = dims_[n - 1 - k];
    for (std::size_t k = 0; k < n; ++k) {
        if (k == 0)
            bnds.emplace_back(field_, 0, dims[0]);
        else
            bnds.push_back(boundaries_[n - k].transpose());
    }
    return ChainComplex(field_, new_lowest, std::move(dims), std::move(bnds));
}

ChainComplex ChainComplex::shift(int k) const {
    std::vector<Matrix> bnds;
    bnds.reserve(boundaries_.size());
    const Rational sign = field_.from_int(k % 2 == 0 ? 1 : -1);
    for (const Matrix& b : boundaries_) bnds.push_back(b.scaled(sign));
    return ChainComplex(field_, lowest_ - k, dims_, std::move(bnds));
}

ChainComplex ChainComplex::hshift(int k) const {
    return ChainComplex(field_, lowest_ - k, dims_, boundaries_);
}

ChainComplex ChainComplex::truncate_at(int k) const {
    if (empty() || k <= lowest_) return *this;
    if (k > highest_degree()) return ChainComplex::zero(field_);
    const std::size_t drop = static_cast<std::size_t>(k - lowest_);
    std::vector<std::size_t> dims(dims_.begin() + drop, dims_.end());
    std::vector<Matrix> bnds;
    bnds.emplace_back(field_, 0, dims[0]); // map out of degree k is killed
    for (std::size_t i = drop + 1; i < boundaries_.size(); ++i) bnds.push_back(boundaries_[i]);
    return ChainComplex(field_, k, std::move(dims), std::move(bnds));
}

ChainComplex ChainComplex::tensor_with_space(std::size_t d) const {
    std::vector<std::size_t> dims(dims_.size());
    std::vector<Matrix> bnds;
    for (std::size_t k = 0; k < dims_.size(); ++k) dims[k] = dims_[k] * d;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const Matrix& b = boundaries_[k];
        Matrix kb(field_, b.rows() * d, b.cols() * d);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(i, j) == 0) continue;
                for (std::size_t c = 0; c < d; ++c) kb.set(i * d + c, j * d + c, b.at(i, j));
            }
        bnds.push_back(std::move(kb));
    }
    return ChainComplex(field_, lowest_, std::move(dims), std::move(bnds));
}

} // namespace multibetti
