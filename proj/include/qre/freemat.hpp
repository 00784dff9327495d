#pragma once

#include "qre/ncpoly.hpp"

namespace qre {

// Minimal matrix-of-polynomials helper for building relation entries in the
// free algebra, before any rewrite system exists. Entries multiply in the
// order the matrices appear in the product.
template <typename K> struct FreeMat {
    using P = NCPoly<K>;
    size_t rows = 0, cols = 0;
    std::vector<P> data;

    FreeMat() = default;
    FreeMat(size_t r, size_t c, const typename FieldOps<K>::Context& ctx)
        : rows(r), cols(c), data(r * c, P(ctx)) {}

    P& at(size_t i, size_t j) { return data[i * cols + j]; }
    const P& at(size_t i, size_t j) const { return data[i * cols + j]; }

    FreeMat operator*(const FreeMat& o) const {
        FreeMat r(rows, o.cols, data.empty() ? o.data[0].ctx() : data[0].ctx());
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < o.cols; ++j) {
                P acc = r.at(i, j);
                for (size_t k = 0; k < cols; ++k) acc = acc + at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }
    FreeMat operator-(const FreeMat& o) const {
        FreeMat r = *this;
        for (size_t i = 0; i < data.size(); ++i) r.data[i] = r.data[i] - o.data[i];
        return r;
    }
    FreeMat operator+(const FreeMat& o) const {
        FreeMat r = *this;
        for (size_t i = 0; i < data.size(); ++i) r.data[i] = r.data[i] + o.data[i];
        return r;
    }
    FreeMat scale(const K& c) const {
        FreeMat r = *this;
        for (auto& p : r.data) p = p * c;
        return r;
    }
};

// Substitute generator images into a polynomial (algebra-map extension).
template <typename K>
NCPoly<K> substitute_generators(const NCPoly<K>& p, const std::vector<NCPoly<K>>& images) {
    NCPoly<K> out(p.ctx());
    for (auto& [w, c] : p.terms()) {
        NCPoly<K> prod = NCPoly<K>::scalar(p.ctx(), c);
        for (char ch : w) prod = prod * images.at(size_t(static_cast<unsigned char>(ch)));
        out = out + prod;
    }
    return out;
}

} // namespace qre
