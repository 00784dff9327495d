#pragma once

#include <memory>

#include "qre/linalg.hpp"
#include "qre/rewrite.hpp"

namespace qre {

// Matrix with entries in a quotient algebra. Every operation reduces the
// entries to normal form against the ambient rewrite system, so equality of
// matrices is equality in the algebra.
template <typename K> class AlgMatrix {
  public:
    using Sys = RewriteSystem<K>;
    using Poly = NCPoly<K>;

    AlgMatrix() : rows_(0), cols_(0), ambient_(nullptr) {}
    AlgMatrix(size_t rows, size_t cols, const Sys* ambient)
        : rows_(rows), cols_(cols), ambient_(ambient),
          data_(rows * cols, Poly(ambient->ctx())) {}

    static AlgMatrix identity(size_t n, const Sys* ambient) {
        AlgMatrix m(n, n, ambient);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(ambient->ctx());
        return m;
    }

    // scalar matrix embedded with central (coefficient) entries
    static AlgMatrix from_scalar_matrix(const Matrix<K>& s, const Sys* ambient) {
        AlgMatrix m(s.rows(), s.cols(), ambient);
        for (size_t i = 0; i < s.rows(); ++i)
            for (size_t j = 0; j < s.cols(); ++j)
                m.at(i, j) = Poly::scalar(ambient->ctx(), s.at(i, j));
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Sys* ambient() const { return ambient_; }

    Poly& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    AlgMatrix normalized() const {
        AlgMatrix r = *this;
        for (auto& p : r.data_) p = ambient_->normal_form(p);
        return r;
    }

    AlgMatrix operator+(const AlgMatrix& o) const {
        check(o, true);
        AlgMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = ambient_->normal_form(r.data_[i] + o.data_[i]);
        return r;
    }
    AlgMatrix operator-(const AlgMatrix& o) const {
        check(o, true);
        AlgMatrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = ambient_->normal_form(r.data_[i] - o.data_[i]);
        return r;
    }
    AlgMatrix operator*(const AlgMatrix& o) const {
        check(o, false);
        if (cols_ != o.rows_) throw ShapeMismatch("AlgMatrix product shape mismatch");
        AlgMatrix r(rows_, o.cols_, ambient_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < o.cols_; ++j) {
                Poly acc(ambient_->ctx());
                for (size_t k = 0; k < cols_; ++k) {
                    if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
                    acc = acc + at(i, k) * o.at(k, j);
                }
                r.at(i, j) = ambient_->normal_form(acc);
            }
        return r;
    }
    AlgMatrix scale(const K& c) const {
        AlgMatrix r = *this;
        for (auto& p : r.data_) p = ambient_->normal_form(p * c);
        return r;
    }
    // left multiplication by a central element
    AlgMatrix scale_central(const Poly& z) const {
        AlgMatrix r = *this;
        for (auto& p : r.data_) p = ambient_->normal_form(z * p);
        return r;
    }
    AlgMatrix operator-() const {
        AlgMatrix r = *this;
        for (auto& p : r.data_) p = -p;
        return r;
    }

    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.ambient_->normal_form(a.data_[i]) == b.ambient_->normal_form(b.data_[i])))
                return false;
        return true;
    }

    bool is_zero() const {
        for (auto& p : data_)
            if (!ambient_->normal_form(p).is_zero()) return false;
        return true;
    }

    std::optional<std::pair<size_t, size_t>> first_nonzero() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!ambient_->normal_form(at(i, j)).is_zero()) return std::make_pair(i, j);
        return std::nullopt;
    }

    AlgMatrix pow(int e) const {
        if (rows_ != cols_) throw ShapeMismatch("pow of a non-square matrix");
        AlgMatrix acc = identity(rows_, ambient_);
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

  private:
    void check(const AlgMatrix& o, bool same_shape) const {
        if (ambient_ != o.ambient_) throw AmbientMismatch("matrices over different systems");
        if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_))
            throw ShapeMismatch("AlgMatrix shape mismatch");
    }

    size_t rows_, cols_;
    const Sys* ambient_;
    std::vector<Poly> data_;
};

// sum_i coeffs[i] * M^i with central coefficients multiplied on the left
template <typename K>
AlgMatrix<K> mat_poly(const AlgMatrix<K>& m, const std::vector<NCPoly<K>>& coeffs) {
    if (m.rows() != m.cols()) throw ShapeMismatch("mat_poly of a non-square matrix");
    AlgMatrix<K> acc(m.rows(), m.cols(), m.ambient());
    AlgMatrix<K> p = AlgMatrix<K>::identity(m.rows(), m.ambient());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) p = p * m;
        acc = acc + p.scale_central(coeffs[i]);
    }
    return acc;
}

} // namespace qre
