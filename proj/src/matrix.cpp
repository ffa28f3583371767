#include "multibetti/matrix.hpp"

#include "multibetti/errors.hpp"

#include <sstream>

namespace multibetti {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    return std::vector<Rational>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.e_[j * rows_ + i] = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product shape mismatch");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.e_[i * other.cols_ + j] = field_.add(out.e_[i * other.cols_ + j],
                                                         field_.mul(at(i, k), other.at(k, j)));
        }
    return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
    Matrix out(field_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.e_[i * col_idx.size() + j] = at(row_idx[i], col_idx[j]);
    return out;
}

Matrix Matrix::columns_at(const std::vector<std::size_t>& col_idx) const {
    std::vector<std::size_t> all_rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all_rows[i] = i;
    return submatrix(all_rows, col_idx);
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out = *this;
    for (auto& v : out.e_) v = field_.mul(v, c);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t piv = lead;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(e_[piv * cols_ + j], e_[lead * cols_ + j]);
        const Rational inv = field_.inv(at(lead, col));
        for (std::size_t j = col; j < cols_; ++j)
            e_[lead * cols_ + j] = field_.mul(e_[lead * cols_ + j], inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || at(i, col) == 0) continue;
            const Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                e_[i * cols_ + j] = field_.sub(e_[i * cols_ + j], field_.mul(f, e_[lead * cols_ + j]));
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
}

std::size_t Matrix::column_space_dim(const std::vector<std::size_t>& selected) const {
    return columns_at(selected).rank();
}

Matrix Matrix::kernel_basis() const {
    Matrix r = *this;
    const std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix out(field_, cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        out.set(f, k, Rational(1));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.set(pivots[i], k, field_.neg(r.at(i, f)));
    }
    return out;
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw DomainError("solve: rhs length mismatch");
    Matrix aug(field_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_, b[i]);
    }
    const std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // pivot in rhs column
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
    return x;
}

Matrix Matrix::quotient_map(const std::vector<std::size_t>& mod_cols,
                            const std::vector<std::size_t>& through_cols) const {
    const ColumnSpace space(*this, mod_cols);
    Matrix out(field_, space.quotient_coords().size(), through_cols.size());
    for (std::size_t j = 0; j < through_cols.size(); ++j) {
        const std::vector<Rational> img = space.project(column(through_cols[j]));
        for (std::size_t i = 0; i < img.size(); ++i) out.set(i, j, img[i]);
    }
    return out;
}

std::vector<std::size_t> Matrix::greedy_basis(const std::vector<std::size_t>& selected) const {
    std::vector<std::size_t> basis;
    // forward elimination rows: (leading coordinate, reduced vector)
    std::vector<std::pair<std::size_t, std::vector<Rational>>> reduced;
    for (std::size_t c : selected) {
        std::vector<Rational> v = column(c);
        for (const auto& [lead, w] : reduced) {
            if (v[lead] == 0) continue;
            const Rational f = v[lead];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = field_.sub(v[i], field_.mul(f, w[i]));
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead == v.size()) continue;
        const Rational inv = field_.inv(v[lead]);
        for (auto& x : v) x = field_.mul(x, inv);
        reduced.emplace_back(lead, std::move(v));
        basis.push_back(c);
    }
    return basis;
}

std::string Matrix::to_string() const {
    std::ostringstream ss;
    for (std::size_t i = 0; i < rows_; ++i) {
        ss << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) ss << ' ';
            ss << at(i, j);
        }
        ss << "]\n";
    }
    return ss.str();
}

ColumnSpace::ColumnSpace(const Matrix& m, const std::vector<std::size_t>& selected)
    : field_(m.field()), ambient_(m.rows()) {
    // rref of the transpose: rows become the reduced spanning vectors, pivot
    // columns of the rref are the pivot coordinates of the span.
    Matrix t = m.columns_at(selected).transpose();
    pivots_ = t.rref();
    echelon_.reserve(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) echelon_.push_back(t.row(k));
    std::vector<bool> is_pivot(ambient_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!is_pivot[i]) quotient_.push_back(i);
}

std::vector<Rational> ColumnSpace::reduce(std::vector<Rational> v) const {
    if (v.size() != ambient_) throw DomainError("ColumnSpace::reduce: length mismatch");
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const Rational f = v[pivots_[k]];
        if (f == 0) continue;
        for (std::size_t i = 0; i < ambient_; ++i)
            v[i] = field_.sub(v[i], field_.mul(f, echelon_[k][i]));
    }
    return v;
}

std::vector<Rational> ColumnSpace::project(const std::vector<Rational>& v) const {
    const std::vector<Rational> r = reduce(v);
    std::vector<Rational> out(quotient_.size());
    for (std::size_t i = 0; i < quotient_.size(); ++i) out[i] = r[quotient_[i]];
    return out;
}

bool ColumnSpace::contains(const std::vector<Rational>& v) const {
    for (const Rational& x : reduce(v))
        if (x != 0) return false;
    return true;
}

} // namespace multibetti
