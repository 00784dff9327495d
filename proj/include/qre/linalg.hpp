#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qre/field.hpp"

namespace qre {

// Dense matrix over an exact field. Row-major. Used for R-matrices,
// symmetrizers, exact rank computations and linear solves.
template <typename K> class Matrix {
  public:
    using Ctx = typename FieldOps<K>::Context;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const Ctx& ctx)
        : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols, ctx.zero()) {}

    static Matrix identity(size_t n, const Ctx& ctx) {
        Matrix m(n, n, ctx);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Ctx& ctx() const { return ctx_; }

    K& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        check_shape(o, true);
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_shape(o, true);
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, ctx_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const K& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }
    Matrix operator*(const K& c) const {
        Matrix r = *this;
        for (auto& x : r.data_) x = x * c;
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    // first nonzero entry, if any (row-major scan); used for witnesses
    std::optional<std::pair<size_t, size_t>> first_nonzero() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) return std::make_pair(i, j);
        return std::nullopt;
    }

    // tensor (Kronecker) product
    Matrix kron(const Matrix& o) const {
        Matrix r(rows_ * o.rows_, cols_ * o.cols_, ctx_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const K& a = at(i, j);
                if (a.is_zero()) continue;
                for (size_t k = 0; k < o.rows_; ++k)
                    for (size_t l = 0; l < o.cols_; ++l)
                        r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, ctx_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // In-place reduction to row echelon form; returns pivot column indices.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < cols_ && row < rows_; ++col) {
            size_t sel = rows_;
            for (size_t r = row; r < rows_; ++r)
                if (!at(r, col).is_zero()) { sel = r; break; }
            if (sel == rows_) continue;
            if (sel != row)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
            K piv = FieldOps<K>::inv(at(row, col));
            for (size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * piv;
            for (size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                const K f = at(r, col);
                if (f.is_zero()) continue;
                for (size_t j = col; j < cols_; ++j) at(r, j) = at(r, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix tmp = *this;
        return tmp.rref().size();
    }

    // basis of the right nullspace (vectors of length cols)
    std::vector<std::vector<K>> nullspace() const {
        Matrix tmp = *this;
        auto pivots = tmp.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::vector<K>> basis;
        for (size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<K> v(cols_, ctx_.zero());
            v[free_col] = ctx_.one();
            for (size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -tmp.at(r, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solve A x = b; nullopt when inconsistent, error when underdetermined
    // solutions are not wanted by the caller. Returns one solution plus the
    // nullspace dimension.
    struct SolveResult {
        std::vector<K> solution;
        size_t kernel_dim;
    };
    std::optional<SolveResult> solve(const std::vector<K>& b) const {
        if (b.size() != rows_) throw ShapeMismatch("solve: rhs length mismatch");
        Matrix aug(rows_, cols_ + 1, ctx_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // inconsistent
        std::vector<K> x(cols_, ctx_.zero());
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
        return SolveResult{std::move(x), cols_ - pivots.size()};
    }

    // q -> 1 limit entrywise (QScalar specialization only)
    template <typename F> auto map(F&& f) const {
        using K2 = decltype(f(std::declval<const K&>()));
        std::vector<K2> out;
        out.reserve(data_.size());
        for (auto& x : data_) out.push_back(f(x));
        return out;
    }

  private:
    void check_shape(const Matrix& o, bool same) const {
        if (same && (rows_ != o.rows_ || cols_ != o.cols_))
            throw ShapeMismatch("matrix shape mismatch");
    }
    size_t rows_, cols_;
    Ctx ctx_;
    std::vector<K> data_;
};

using ScalarMatrix = Matrix<QScalar>;

// Row-space utility: maintains an echelonized basis of row vectors and
// supports membership tests and incremental insertion.
template <typename K> class RowSpace {
  public:
    using Ctx = typename FieldOps<K>::Context;
    explicit RowSpace(size_t width, const Ctx& ctx) : width_(width), ctx_(ctx) {}

    size_t dim() const { return rows_.size(); }
    size_t width() const { return width_; }

    // Reduce v against the basis; returns the residue.
    std::vector<K> residue(std::vector<K> v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K c = v[pivots_[r]]; // copy: the loop below overwrites v[pivot]
            if (c.is_zero()) continue;
            for (size_t j = 0; j < width_; ++j) v[j] = v[j] - c * rows_[r][j];
        }
        return v;
    }

    bool contains(const std::vector<K>& v) const {
        auto res = residue(v);
        for (auto& x : res)
            if (!x.is_zero()) return false;
        return true;
    }

    // Insert a vector; returns true if it enlarged the space.
    bool insert(std::vector<K> v) {
        v = residue(std::move(v));
        size_t piv = width_;
        for (size_t j = 0; j < width_; ++j)
            if (!v[j].is_zero()) { piv = j; break; }
        if (piv == width_) return false;
        K inv = FieldOps<K>::inv(v[piv]);
        for (size_t j = 0; j < width_; ++j) v[j] = v[j] * inv;
        // back-substitute into existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            const K c = rows_[r][piv];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < width_; ++j) rows_[r][j] = rows_[r][j] - c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    const std::vector<std::vector<K>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

  private:
    size_t width_;
    Ctx ctx_;
    std::vector<std::vector<K>> rows_;
    std::vector<size_t> pivots_;
};

} // namespace qre
