#pragma once

#include <string>
#include <vector>

#include "qre/ncpoly.hpp"

namespace qre {

// A finite presentation of an associative algebra: named degree-1 generators
// and a list of relations read as "= 0". The term order is fixed: degree
// first, then lexicographic by generator position in the declared order.
template <typename K> struct Presentation {
    using Ctx = typename FieldOps<K>::Context;

    Ctx ctx;
    std::vector<std::string> generators;
    std::vector<NCPoly<K>> relations;

    int generator_index(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return int(i);
        return -1;
    }

    const std::string& gen_name(int idx) const { return generators.at(size_t(idx)); }

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::string s;
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += generators.at(size_t(static_cast<unsigned char>(w[i])));
        }
        return s;
    }

    std::string poly_str(const NCPoly<K>& p) const {
        if (p.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            if (!first) s += " + ";
            first = false;
            s += "(" + FieldOps<K>::str(it->second) + ")";
            if (!it->first.empty()) s += "*" + word_str(it->first);
        }
        return s;
    }
};

// Presentation with the generator order permuted; relations are rewritten in
// the new letter numbering. Used to check order-independence of dimensions.
template <typename K>
Presentation<K> permute_generators(const Presentation<K>& p, const std::vector<int>& perm) {
    Presentation<K> r;
    r.ctx = p.ctx;
    r.generators.resize(p.generators.size());
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        r.generators[size_t(perm[i])] = p.generators[i];
        inv[i] = perm[i];
    }
    for (auto& rel : p.relations) {
        NCPoly<K> q(p.ctx);
        for (auto& [w, c] : rel.terms()) {
            Word nw;
            for (char ch : w) nw.push_back(char(inv[size_t(static_cast<unsigned char>(ch))]));
            q.add_term(nw, c);
        }
        r.relations.push_back(std::move(q));
    }
    return r;
}

} // namespace qre
