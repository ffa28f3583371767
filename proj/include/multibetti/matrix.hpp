#pragma once

#include "multibetti/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace multibetti {

// Dense matrix over an exact field. Every instance this library sees is
// tiny, so all operations are plain Gaussian elimination on a copy.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Rational& v) { e_[r * cols_ + c] = field_.reduce(v); }

    std::vector<Rational> column(std::size_t c) const;
    std::vector<Rational> row(std::size_t r) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    Matrix submatrix(const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx) const;
    Matrix columns_at(const std::vector<std::size_t>& col_idx) const;
    Matrix scaled(const Rational& c) const;
    bool is_zero() const;
    bool operator==(const Matrix& other) const;

    // Reduced row echelon form in place; returns the pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    std::size_t column_space_dim(const std::vector<std::size_t>& selected) const;

    // Columns span ker(M) and are independent (one per free column of the rref).
    Matrix kernel_basis() const;
    // Any preimage of b, or nullopt when b is outside the image.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    // Matrix of the composite  span(through) -> W -> W / span(mod)  in the
    // canonical quotient basis (ambient coordinates without pivots, see
    // ColumnSpace). Column space dimension is r(mod ∪ through) - r(mod).
    Matrix quotient_map(const std::vector<std::size_t>& mod_cols,
                        const std::vector<std::size_t>& through_cols) const;

    // Pivot columns of the selected set under elimination in the given order:
    // the greedy independent subset, a canonical basis of its span.
    std::vector<std::size_t> greedy_basis(const std::vector<std::size_t>& selected) const;

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Rational> e_; // row-major
};

// Reduced column echelon form of span(selected columns): pivot coordinates,
// their complement, and the canonical projection onto the complement. The
// form depends only on the subspace, so the quotient basis is stable under
// permutation and rescaling of the generating columns.
class ColumnSpace {
public:
    ColumnSpace(const Matrix& m, const std::vector<std::size_t>& selected);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    const std::vector<std::size_t>& pivot_coords() const { return pivots_; }
    const std::vector<std::size_t>& quotient_coords() const { return quotient_; }

    // v minus its span(selected) component; zero at every pivot coordinate.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    // reduce(v) read off at the quotient coordinates.
    std::vector<Rational> project(const std::vector<Rational>& v) const;
    bool contains(const std::vector<Rational>& v) const;

private:
    Field field_;
    std::size_t ambient_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> quotient_;
    std::vector<std::vector<Rational>> echelon_; // echelon_[k] has 1 at pivots_[k], 0 at other pivots
};

} // namespace multibetti
