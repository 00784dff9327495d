#pragma once

#include <unordered_map>

#include "qre/linalg.hpp"
#include "qre/rewrite.hpp"

namespace qre {

// Indexed basis of words, with conversion between NCPoly and coordinate
// vectors. Works for any fixed word list (normal-form bases, free bases).
template <typename K> class WordBasis {
  public:
    using Ctx = typename FieldOps<K>::Context;

    WordBasis(std::vector<Word> words, Ctx ctx) : words_(std::move(words)), ctx_(std::move(ctx)) {
        for (size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
    }

    size_t size() const { return words_.size(); }
    const Word& word(size_t i) const { return words_[i]; }
    const std::vector<Word>& words() const { return words_; }

    std::vector<K> coords(const NCPoly<K>& p) const {
        std::vector<K> v(words_.size(), ctx_.zero());
        for (auto& [w, c] : p.terms()) {
            auto it = index_.find(w);
            if (it == index_.end())
                throw Error("WordBasis: polynomial contains a word outside the basis");
            v[it->second] = c;
        }
        return v;
    }

    NCPoly<K> from_coords(const std::vector<K>& v) const {
        NCPoly<K> p(ctx_);
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) p.add_term(words_[i], v[i]);
        return p;
    }

  private:
    struct Hash {
        size_t operator()(const Word& w) const { return std::hash<std::string>{}(w); }
    };
    std::vector<Word> words_;
    Ctx ctx_;
    std::unordered_map<Word, size_t, Hash> index_;
};

// all words of exact degree d in the free algebra, in term order
inline std::vector<Word> free_words(size_t ngens, int d) {
    std::vector<Word> cur{Word()};
    for (int k = 0; k < d; ++k) {
        std::vector<Word> next;
        next.reserve(cur.size() * ngens);
        for (auto& w : cur)
            for (size_t g = 0; g < ngens; ++g) next.push_back(w + char(g));
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<Word> free_words_upto(size_t ngens, int d) {
    std::vector<Word> out;
    for (int k = 0; k <= d; ++k) {
        auto v = free_words(ngens, k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// Dimension of degree-d component of the quotient, computed by dense linear
// algebra in the free algebra with no rewriting: the span of a*r*b over all
// relations r and words a, b with deg(a r b) = d. Independent oracle for
// graded_dimension. Only meaningful for homogeneous presentations.
template <typename K> long ideal_dimension_oracle(const Presentation<K>& p, int d) {
    size_t ng = p.generators.size();
    WordBasis<K> basis(free_words(ng, d), p.ctx);
    RowSpace<K> span(basis.size(), p.ctx);
    for (auto& r : p.relations) {
        int dr = r.degree();
        if (dr < 0 || dr > d) continue;
        for (auto& [w, c] : r.terms())
            if (int(w.size()) != dr)
                throw Error("ideal_dimension_oracle requires homogeneous relations");
        for (int da = 0; da + dr <= d; ++da) {
            int db = d - dr - da;
            for (auto& a : free_words(ng, da))
                for (auto& b : free_words(ng, db)) {
                    NCPoly<K> arb = r.sandwich(p.ctx.one(), a, b);
                    span.insert(basis.coords(arb));
                }
        }
    }
    return long(basis.size()) - long(span.dim());
}

} // namespace qre
