#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qre/presentation.hpp"

namespace qre {

struct CompletionOptions {
    size_t max_rules = 4000;      // hard guard against runaway completion
    size_t max_rule_terms = 20000; // hard guard against coefficient blow-up
};

// Oriented, interreduced rewriting system presenting a quotient algebra.
// Rules map a leading word to a strictly smaller polynomial. After
// completion every overlap ambiguity of total degree <= certified_degree
// reduces to zero, so normal forms up to that degree are unique. When no
// overlap among the final leading words exceeds the bound, the certificate
// extends to every degree (fully_confluent).
template <typename K> class RewriteSystem {
  public:
    using Ctx = typename FieldOps<K>::Context;
    using Poly = NCPoly<K>;

    RewriteSystem() = default;

    const Presentation<K>& source() const { return pres_; }
    const Ctx& ctx() const { return pres_.ctx; }
    size_t generator_count() const { return pres_.generators.size(); }
    int certified_degree() const { return certified_degree_; }
    bool fully_confluent() const { return fully_confluent_; }
    size_t rule_count() const { return rules_.size(); }
    const std::map<Word, Poly, WordOrder>& rules() const { return rules_; }

    // Unique irreducible representative modulo the ideal.
    Poly normal_form(const Poly& f) const {
        if (!fully_confluent_ && f.degree() > certified_degree_)
            throw DegreeExceeded("normal_form: degree " + std::to_string(f.degree()) +
                                 " exceeds certified bound " +
                                 std::to_string(certified_degree_));
        return reduce(f);
    }

    bool is_irreducible_word(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos)
            if (match_at(w, pos)) return false;
        return true;
    }

    // number of irreducible words of exact degree d
    long graded_dimension(int d) const {
        if (!fully_confluent_ && d > certified_degree_)
            throw DegreeExceeded("graded_dimension beyond certified degree");
        long count = 0;
        Word w;
        count_words(w, d, count, nullptr);
        return count;
    }

    // dimension of the filtration level <= d (irreducible words of degree <= d)
    long filtered_dimension(int d) const {
        long total = 0;
        for (int k = 0; k <= d; ++k) total += graded_dimension(k);
        return total;
    }

    std::vector<Word> irreducible_words(int d) const {
        if (!fully_confluent_ && d > certified_degree_)
            throw DegreeExceeded("irreducible_words beyond certified degree");
        std::vector<Word> out;
        long count = 0;
        Word w;
        count_words(w, d, count, &out);
        return out;
    }

    // all irreducible words of degree <= d, sorted in the term order
    std::vector<Word> word_basis(int d) const {
        std::vector<Word> out;
        for (int k = 0; k <= d; ++k) {
            auto v = irreducible_words(k);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }

    static RewriteSystem complete(const Presentation<K>& p, int degree,
                                  const CompletionOptions& opts = {});

    // Reassemble a system from converted parts (used to change the scalar field).
    static RewriteSystem assemble(Presentation<K> pres, std::map<Word, Poly, WordOrder> rules,
                                  int certified, bool fully) {
        RewriteSystem rs;
        rs.pres_ = std::move(pres);
        rs.rules_ = std::move(rules);
        rs.certified_degree_ = certified;
        rs.fully_confluent_ = fully;
        rs.rebuild_index();
        return rs;
    }

  private:
    struct IndexedRule {
        Word lead;
        const Poly* rhs;
    };

    // leftmost match: returns (rule lead) matching at the given position
    const Poly* match_at(const Word& w, size_t pos) const {
        if (pos >= w.size()) return nullptr;
        unsigned char first = static_cast<unsigned char>(w[pos]);
        if (first >= index_.size()) return nullptr;
        for (auto& ir : index_[first]) {
            if (ir.lead.size() <= w.size() - pos &&
                w.compare(pos, ir.lead.size(), ir.lead) == 0)
                return ir.rhs;
        }
        return nullptr;
    }

    struct Match {
        size_t pos;
        const Word* lead;
        const Poly* rhs;
    };
    std::optional<Match> find_match(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            unsigned char first = static_cast<unsigned char>(w[pos]);
            if (first >= index_.size()) continue;
            for (auto& ir : index_[first]) {
                if (ir.lead.size() <= w.size() - pos &&
                    w.compare(pos, ir.lead.size(), ir.lead) == 0)
                    return Match{pos, &ir.lead, ir.rhs};
            }
        }
        return std::nullopt;
    }

    Poly reduce(const Poly& f) const {
        Poly result(f.ctx());
        Poly work = f;
        while (!work.is_zero()) {
            Word w = work.lead_word();
            K c = work.lead_coeff();
            auto m = find_match(w);
            work.add_term(w, -c);
            if (!m) {
                result.add_term(w, c);
            } else {
                Word prefix = w.substr(0, m->pos);
                Word suffix = w.substr(m->pos + m->lead->size());
                work = work + m->rhs->sandwich(c, prefix, suffix);
            }
        }
        return result;
    }

    void rebuild_index() {
        index_.clear();
        for (auto& [lead, rhs] : rules_) {
            unsigned char first = static_cast<unsigned char>(lead[0]);
            if (first >= index_.size()) index_.resize(size_t(first) + 1);
            index_[first].push_back({lead, &rhs});
        }
    }

    void count_words(Word& w, int remaining, long& count, std::vector<Word>* out) const {
        if (remaining == 0) {
            ++count;
            if (out) out->push_back(w);
            return;
        }
        for (size_t g = 0; g < pres_.generators.size(); ++g) {
            w.push_back(char(g));
            // w was irreducible, so a new redex must be a suffix of w
            bool ok = true;
            for (auto& [lead, rhs] : rules_) {
                if (lead.size() > w.size()) continue;
                if (w.compare(w.size() - lead.size(), lead.size(), lead) == 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) count_words(w, remaining - 1, count, out);
            w.pop_back();
        }
    }

    Presentation<K> pres_;
    std::map<Word, Poly, WordOrder> rules_;
    std::vector<std::vector<IndexedRule>> index_;
    int certified_degree_ = 0;
    bool fully_confluent_ = false;

    template <typename K2> friend class RewriteSystem;
    template <typename K2>
    friend RewriteSystem<K2> complete_to_degree(const Presentation<K2>&, int,
                                                const CompletionOptions&);
};

// Knuth-Bendix style completion bounded by total degree.
template <typename K>
RewriteSystem<K> complete_to_degree(const Presentation<K>& p, int degree,
                                    const CompletionOptions& opts = {}) {
    for (auto& r : p.relations)
        if (r.degree() > degree)
            throw DegreeExceeded("completion degree below a relation degree");

    RewriteSystem<K> rs;
    rs.pres_ = p;
    rs.certified_degree_ = degree;

    struct Overlap {
        Word w;  // ambiguous word
        Word u;  // rule lead matching at position 0
        Word v;  // rule lead matching at position v_pos
        size_t v_pos;
        bool operator<(const Overlap& o) const {
            if (w.size() != o.w.size()) return w.size() < o.w.size();
            if (w != o.w) return w < o.w;
            if (u != o.u) return u < o.u;
            if (v != o.v) return v < o.v;
            return v_pos < o.v_pos;
        }
    };

    std::set<Overlap> overlaps;
    bool skipped_overlap = false;

    auto add_overlaps_for = [&](const Word& u) {
        for (auto& [v, rhs] : rs.rules_) {
            // u at 0, v overlapping u's tail: v starts inside u
            for (size_t k = 1; k < u.size(); ++k) {
                size_t olap = u.size() - k; // letters shared
                if (olap >= v.size() && !(u == v && k == 0)) {
                    // v fully inside u cannot happen: leads are subword-free
                    continue;
                }
                if (olap >= v.size()) continue;
                if (u.compare(k, olap, v, 0, olap) == 0) {
                    Word w = u + v.substr(olap);
                    if (int(w.size()) <= degree)
                        overlaps.insert({w, u, v, k});
                    else
                        skipped_overlap = true;
                }
            }
            // v at 0, u overlapping v's tail
            for (size_t k = 1; k < v.size(); ++k) {
                size_t olap = v.size() - k;
                if (olap >= u.size()) continue;
                if (v.compare(k, olap, u, 0, olap) == 0) {
                    Word w = v + u.substr(olap);
                    if (int(w.size()) <= degree)
                        overlaps.insert({w, v, u, k});
                    else
                        skipped_overlap = true;
                }
            }
        }
        // self-overlap is covered by the first loop since rules_ contains u
    };

    // queue of pending relation polynomials, processed smallest lead first
    std::multiset<NCPoly<K>, bool (*)(const NCPoly<K>&, const NCPoly<K>&)> todo(
        +[](const NCPoly<K>& a, const NCPoly<K>& b) {
            return WordOrder{}(a.lead_word(), b.lead_word());
        });
    for (auto& r : p.relations)
        if (!r.is_zero()) todo.insert(r);

    auto add_rule_from = [&](const NCPoly<K>& f0) {
        NCPoly<K> f = rs.reduce(f0);
        if (f.is_zero()) return;
        if (f.term_count() > opts.max_rule_terms)
            throw CompletionDiverged("rule term count exceeds limit");
        K lc = f.lead_coeff();
        Word lead = f.lead_word();
        NCPoly<K> rhs = NCPoly<K>::monomial(f.ctx(), lead, f.ctx().one()) - f * FieldOps<K>::inv(lc);
        rs.rules_.emplace(lead, std::move(rhs));
        if (rs.rules_.size() > opts.max_rules)
            throw CompletionDiverged("rule count exceeds limit");
        rs.rebuild_index();

        // interreduce: drop rules whose lead became reducible, requeue them
        std::vector<Word> stale;
        for (auto& [lw, lrhs] : rs.rules_) {
            if (lw == lead) continue;
            for (size_t pos = 0; pos < lw.size(); ++pos) {
                if (lw.size() - pos >= lead.size() &&
                    lw.compare(pos, lead.size(), lead) == 0) {
                    stale.push_back(lw);
                    break;
                }
            }
        }
        for (auto& lw : stale) {
            auto it = rs.rules_.find(lw);
            NCPoly<K> poly =
                NCPoly<K>::monomial(f.ctx(), lw, f.ctx().one()) - it->second;
            rs.rules_.erase(it);
            todo.insert(std::move(poly));
        }
        if (!stale.empty()) rs.rebuild_index();

        // re-normalize the right-hand sides against the updated system
        for (auto& [lw, lrhs] : rs.rules_) lrhs = rs.reduce(lrhs);

        add_overlaps_for(lead);
    };

    while (!todo.empty() || !overlaps.empty()) {
        if (!todo.empty()) {
            NCPoly<K> f = *todo.begin();
            todo.erase(todo.begin());
            add_rule_from(f);
            continue;
        }
        Overlap o = *overlaps.begin();
        overlaps.erase(overlaps.begin());
        // both rules must still be present
        auto iu = rs.rules_.find(o.u);
        auto iv = rs.rules_.find(o.v);
        if (iu == rs.rules_.end() || iv == rs.rules_.end()) continue;
        // w = u + b = a + v
        Word b = o.w.substr(o.u.size());
        Word a = o.w.substr(0, o.v_pos);
        NCPoly<K> r1 = iu->second.sandwich(rs.pres_.ctx.one(), Word(), b);
        NCPoly<K> r2 = iv->second.sandwich(rs.pres_.ctx.one(), a, Word());
        NCPoly<K> s = r1 - r2;
        if (!s.is_zero()) add_rule_from(s);
    }

    // final check: does any overlap among surviving leads exceed the bound?
    for (auto& [u, ru] : rs.rules_)
        for (auto& [v, rv] : rs.rules_)
            for (size_t k = 1; k < u.size(); ++k) {
                size_t olap = u.size() - k;
                if (olap >= v.size()) continue;
                if (u.compare(k, olap, v, 0, olap) == 0 &&
                    int(u.size() + v.size() - olap) > degree)
                    skipped_overlap = true;
            }

    rs.fully_confluent_ = !skipped_overlap;
    return rs;
}

template <typename K>
RewriteSystem<K> RewriteSystem<K>::complete(const Presentation<K>& p, int degree,
                                            const CompletionOptions& opts) {
    return complete_to_degree(p, degree, opts);
}

// Apply a coefficient conversion to every term of a polynomial.
template <typename K2, typename K1, typename F>
NCPoly<K2> map_ncpoly(const NCPoly<K1>& p, const typename FieldOps<K2>::Context& ctx, F&& f) {
    NCPoly<K2> out(ctx);
    for (auto& [w, c] : p.terms()) out.add_term(w, f(c));
    return out;
}

// The same rewrite system viewed over the quadratic extension nu^2 = disc.
inline RewriteSystem<ExtScalar> extend_scalars(const RewriteSystem<QScalar>& rs,
                                               const QScalar& disc) {
    typename FieldOps<ExtScalar>::Context ctx{disc.params(), disc};
    auto embed = [&](const QScalar& c) { return ExtScalar::embed(c, disc); };
    Presentation<ExtScalar> pres;
    pres.ctx = ctx;
    pres.generators = rs.source().generators;
    for (auto& r : rs.source().relations)
        pres.relations.push_back(map_ncpoly<ExtScalar>(r, ctx, embed));
    std::map<Word, NCPoly<ExtScalar>, WordOrder> rules;
    for (auto& [lead, rhs] : rs.rules())
        rules.emplace(lead, map_ncpoly<ExtScalar>(rhs, ctx, embed));
    return RewriteSystem<ExtScalar>::assemble(std::move(pres), std::move(rules),
                                              rs.certified_degree(), rs.fully_confluent());
}

} // namespace qre
