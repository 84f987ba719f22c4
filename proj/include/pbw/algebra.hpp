#pragma once

#include <unordered_map>
#include <vector>

#include "pbw/linalg.hpp"
#include "pbw/rewrite.hpp"

namespace pbw {

/// Indices of relations that reduce to zero modulo the others at their own
/// degree (greedy left-to-right scan). Empty result = minimal set.
template <class K>
std::vector<size_t> redundant_relations(const std::vector<NCPoly<K>>& relations) {
    std::vector<size_t> redundant;
    for (size_t i = 0; i < relations.size(); ++i) {
        std::vector<NCPoly<K>> others;
        for (size_t j = 0; j < relations.size(); ++j)
            if (j != i && std::find(redundant.begin(), redundant.end(), j) == redundant.end())
                others.push_back(relations[j]);
        if (others.empty())
            continue;
        int deg = relations[i].degree();
        int bound = deg;
        for (const auto& g : others)
            bound = std::max(bound, g.degree());
        RewriteSystem<K> rs(others, bound);
        if (rs.normal_form(relations[i]).is_zero())
            redundant.push_back(i);
    }
    return redundant;
}

/// Finitely presented graded algebra A = T/<R> with homogeneous relations of
/// degree >= 2, a rewrite system completed to a degree bound, and cached
/// normal-word bases of the graded components.
template <class F>
class GradedAlgebra {
  public:
    using Field = F;
    using K = typename F::Scalar;

    struct Options {
        bool track_cofactors = true;
        bool validate_minimal = true;
    };

    GradedAlgebra(F field, Alphabet alpha, std::vector<NCPoly<K>> relations, int bound,
                  Options opts = {})
        : field_(field), alpha_(std::move(alpha)), relations_(std::move(relations)),
          bound_(bound), rs_(make_rewrite(relations_, bound, opts, alpha_)) {
        basis_.push_back({Word{}});
        index_.emplace_back();
        index_.back().emplace(Word{}, 0);
    }

    const F& field() const { return field_; }
    K one() const { return field_(1); }
    const Alphabet& alphabet() const { return alpha_; }
    size_t ngens() const { return alpha_.size(); }
    const std::vector<NCPoly<K>>& relations() const { return relations_; }
    int bound() const { return bound_; }
    const RewriteSystem<K>& rewrite() const { return rs_; }

    /// Normal words of degree d in ascending monomial order.
    const std::vector<Word>& graded_basis(int d) const {
        if (d > bound_)
            throw Error("graded basis requested beyond completion bound");
        extend_basis(d);
        return basis_[static_cast<size_t>(d)];
    }
    long dim(int d) const {
        return d < 0 ? 0 : static_cast<long>(graded_basis(d).size());
    }
    std::vector<long> hilbert(int N) const {
        std::vector<long> out;
        for (int d = 0; d <= N; ++d)
            out.push_back(dim(d));
        return out;
    }
    int word_index(int d, const Word& w) const {
        graded_basis(d);
        auto it = index_[static_cast<size_t>(d)].find(w);
        internal_check(it != index_[static_cast<size_t>(d)].end(), "word is not a normal word");
        return it->second;
    }

    /// Normal form with a per-word cache.
    const NCPoly<K>& nf_word(const Word& w) const {
        auto it = nf_cache_.find(w);
        if (it != nf_cache_.end())
            return it->second;
        NCPoly<K> nf = rs_.normal_form(NCPoly<K>::word(w, one()));
        return nf_cache_.emplace(w, std::move(nf)).first->second;
    }
    NCPoly<K> normal_form(const NCPoly<K>& f) const {
        NCPoly<K> out;
        for (const auto& [w, c] : f.terms()) {
            NCPoly<K> nf = nf_word(w);
            nf *= c;
            out += nf;
        }
        return out;
    }

    /// Coordinates of a homogeneous element in the degree-d normal basis
    /// (normal form applied first).
    SparseVec<K> coords(const NCPoly<K>& f, int d) const {
        NCPoly<K> nf = normal_form(f);
        SparseVec<K> v;
        for (const auto& [w, c] : nf.terms()) {
            internal_check(w.degree() == d, "inhomogeneous element in graded coordinates");
            v.push(word_index(d, w), c);
        }
        v.normalize();
        return v;
    }

  private:
    static RewriteSystem<K> make_rewrite(std::vector<NCPoly<K>>& relations, int bound,
                                         const Options& opts, const Alphabet& alpha) {
        for (const auto& r : relations) {
            if (r.is_zero())
                throw Error("zero relation");
            if (!r.is_homogeneous())
                throw Error("relation is not homogeneous: " + poly_str(r, alpha));
            if (r.degree() < 2)
                throw Error("relation of degree < 2 (linear or constant relations "
                            "are not admitted): " + poly_str(r, alpha));
        }
        if (opts.validate_minimal) {
            auto red = redundant_relations(relations);
            if (!red.empty()) {
                std::string msg = "relation set is not minimal; redundant:";
                for (size_t i : red)
                    msg += " " + poly_str(relations[i], alpha) + ";";
                msg += " suggested pruning: drop the listed relations";
                throw Error(msg);
            }
        }
        typename RewriteSystem<K>::Options ro;
        ro.track_cofactors = opts.track_cofactors;
        return RewriteSystem<K>(relations, bound, ro);
    }

    void extend_basis(int d) const {
        while (static_cast<int>(basis_.size()) <= d) {
            int k = static_cast<int>(basis_.size());
            std::vector<Word> next;
            for (const Word& base : basis_[static_cast<size_t>(k - 1)]) {
                for (size_t li = 0; li < alpha_.size(); ++li) {
                    Word w = base;
                    w.letters.push_back(static_cast<Letter>(li));
                    bool reducible = false;
                    for (const auto& g : rs_.basis()) {
                        const Word& lead = g.leading_word();
                        if (lead.degree() <= w.degree() &&
                            occurs_at(lead, w, w.letters.size() - lead.letters.size())) {
                            reducible = true;
                            break;
                        }
                    }
                    if (!reducible)
                        next.push_back(std::move(w));
                }
            }
            std::sort(next.begin(), next.end(), WordOrder{});
            index_.emplace_back();
            for (size_t i = 0; i < next.size(); ++i)
                index_.back().emplace(next[i], static_cast<int>(i));
            basis_.push_back(std::move(next));
        }
    }

    F field_;
    Alphabet alpha_;
    std::vector<NCPoly<K>> relations_;
    int bound_;
    RewriteSystem<K> rs_;
    mutable std::vector<std::vector<Word>> basis_;
    mutable std::vector<std::unordered_map<Word, int, WordHash>> index_;
    mutable std::unordered_map<Word, NCPoly<K>, WordHash> nf_cache_;
};

} // namespace pbw
