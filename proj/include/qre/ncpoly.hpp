#pragma once

#include <map>
#include <string>
#include <vector>

#include "qre/field.hpp"

namespace qre {

// A word in the free monoid over the declared generators: one byte per
// letter, each byte a generator index. Every generator has degree 1, so the
// degree of a word is its length.
using Word = std::string;

// degree-first, then lexicographic by generator position
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(char(l));
    return w;
}

// Noncommutative polynomial: finite map word -> nonzero coefficient,
// iterated in ascending term order (leading term last).
template <typename K> class NCPoly {
  public:
    using Ctx = typename FieldOps<K>::Context;
    using TermMap = std::map<Word, K, WordOrder>;

    NCPoly() = default;
    explicit NCPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static NCPoly zero(const Ctx& ctx) { return NCPoly(ctx); }
    static NCPoly scalar(const Ctx& ctx, const K& c) {
        NCPoly p(ctx);
        p.add_term(Word(), c);
        return p;
    }
    static NCPoly one(const Ctx& ctx) { return scalar(ctx, ctx.one()); }
    static NCPoly generator(const Ctx& ctx, int idx, const K& coeff) {
        NCPoly p(ctx);
        p.add_term(Word(1, char(idx)), coeff);
        return p;
    }
    static NCPoly monomial(const Ctx& ctx, const Word& w, const K& coeff) {
        NCPoly p(ctx);
        p.add_term(w, coeff);
        return p;
    }

    const Ctx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }
    const Word& lead_word() const { return terms_.rbegin()->first; }
    const K& lead_coeff() const { return terms_.rbegin()->second; }

    void add_term(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly operator+(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    NCPoly operator-(const NCPoly& o) const {
        NCPoly r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    NCPoly operator-() const {
        NCPoly r(ctx_);
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    NCPoly operator*(const NCPoly& o) const {
        NCPoly r(ctx_.ps ? ctx_ : o.ctx_);
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
        return r;
    }
    NCPoly operator*(const K& c) const {
        NCPoly r(ctx_);
        if (c.is_zero()) return r;
        for (auto& [w, k] : terms_) r.add_term(w, k * c);
        return r;
    }
    friend NCPoly operator*(const K& c, const NCPoly& p) { return p * c; }

    // c * left * p * right
    NCPoly sandwich(const K& c, const Word& left, const Word& right) const {
        NCPoly r(ctx_);
        for (auto& [w, k] : terms_) r.add_term(left + w + right, k * c);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  private:
    Ctx ctx_;
    TermMap terms_;
};

} // namespace qre
