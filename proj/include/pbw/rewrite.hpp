#pragma once

#include <deque>
#include <map>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "pbw/poly.hpp"

namespace pbw {

/// One summand of a cofactor representation: coeff * left * g_gen * right,
/// with g_gen the gen-th original ideal generator.
template <class K>
struct CofactorTerm {
    int gen;
    Word left;
    Word right;
    K coeff;
};

namespace detail {

struct TraceKey {
    int gen;
    Word left;
    Word right;
    friend bool operator<(const TraceKey& a, const TraceKey& b) {
        if (a.gen != b.gen)
            return a.gen < b.gen;
        if (int c = compare_words(a.left, b.left); c != 0)
            return c < 0;
        return compare_words(a.right, b.right) < 0;
    }
};

template <class K>
using Trace = std::map<TraceKey, K>;

template <class K>
void trace_axpy(Trace<K>& dst, const Trace<K>& src, const K& c, const Word& left,
                const Word& right) {
    for (const auto& [key, cf] : src) {
        TraceKey k{key.gen, left * key.left, key.right * right};
        auto it = dst.find(k);
        if (it == dst.end()) {
            K v = c * cf;
            if (!v.is_zero())
                dst.emplace(std::move(k), std::move(v));
        } else {
            it->second += c * cf;
            if (it->second.is_zero())
                dst.erase(it);
        }
    }
}

template <class K>
void trace_scale(Trace<K>& tr, const K& c) {
    for (auto& [key, cf] : tr)
        cf *= c;
}

} // namespace detail

/// Degree-truncated two-sided Groebner engine (critical-pair completion).
/// All overlap and inclusion ambiguities whose ambiguity word has degree
/// <= bound are resolved, so normal forms are well defined and unique for
/// inputs of degree <= complete_to().
template <class K>
class RewriteSystem {
  public:
    struct Options {
        bool track_cofactors = false;
    };

    RewriteSystem(std::vector<NCPoly<K>> generators, int bound, Options opts = {})
        : bound_(bound), opts_(opts), generators_(std::move(generators)) {
        for (const auto& g : generators_) {
            if (g.is_zero())
                throw Error("zero ideal generator");
            if (g.degree() > bound_)
                throw Error("completion bound below a generator degree");
        }
        for (size_t gi = 0; gi < generators_.size(); ++gi) {
            detail::Trace<K> tr;
            if (opts_.track_cofactors)
                tr.emplace(detail::TraceKey{static_cast<int>(gi), Word{}, Word{}},
                           generators_[gi].leading_coeff() * generators_[gi].leading_coeff().inverse());
            NCPoly<K> r = generators_[gi];
            reduce_full(r, entries_, &tr);
            if (!r.is_zero())
                push_entry(std::move(r), std::move(tr));
        }
        process_queue();
        finalize();
    }

    int complete_to() const { return bound_; }
    size_t generator_count() const { return generators_.size(); }
    const std::vector<NCPoly<K>>& generators() const { return generators_; }
    bool tracks_cofactors() const { return opts_.track_cofactors; }

    /// Canonical reduced basis: monic, leading words mutually irreducible,
    /// tails in normal form, sorted by leading word.
    const std::vector<NCPoly<K>>& basis() const { return basis_; }

    NCPoly<K> normal_form(NCPoly<K> f) const {
        check_degree(f);
        reduce_full(f, reduced_, static_cast<detail::Trace<K>*>(nullptr));
        return f;
    }

    bool contains(const NCPoly<K>& f) const { return normal_form(f).is_zero(); }

    /// Remainder plus an exact representation f = rem + sum c*u*g_i*w over the
    /// original generators.
    std::pair<NCPoly<K>, std::vector<CofactorTerm<K>>> reduce_with_cofactors(NCPoly<K> f) const {
        if (!opts_.track_cofactors)
            throw Error("cofactor traces are not enabled on this rewrite system");
        check_degree(f);
        detail::Trace<K> acc;
        reduce_full(f, reduced_, &acc, /*accumulate=*/true);
        std::vector<CofactorTerm<K>> cof;
        cof.reserve(acc.size());
        for (const auto& [key, c] : acc)
            cof.push_back(CofactorTerm<K>{key.gen, key.left, key.right, c});
        return {std::move(f), std::move(cof)};
    }

    bool is_normal_word(const Word& w) const {
        for (const auto& e : reduced_)
            if (is_subword(e.poly.leading_word(), w))
                return false;
        return true;
    }

    /// Test support: reduce with randomized strategy choices. Agreement with
    /// normal_form over many draws witnesses confluence at the bound.
    NCPoly<K> normal_form_randomized(NCPoly<K> f, std::mt19937& rng) const {
        check_degree(f);
        while (true) {
            struct Site {
                Word w;
                size_t pos, entry;
            };
            std::vector<Site> sites;
            for (const auto& [w, c] : f.terms())
                for (size_t e = 0; e < reduced_.size(); ++e) {
                    const Word& lead = reduced_[e].poly.leading_word();
                    for (size_t p = 0; p + lead.letters.size() <= w.letters.size(); ++p)
                        if (occurs_at(lead, w, p))
                            sites.push_back({w, p, e});
                }
            if (sites.empty())
                return f;
            const Site& s = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
            const NCPoly<K>& g = reduced_[s.entry].poly;
            K c = *f.coeff(s.w);
            f -= g.sandwich(c, s.w.prefix(s.pos),
                            s.w.suffix_from(s.pos + g.leading_word().letters.size()));
        }
    }

  private:
    struct Entry {
        NCPoly<K> poly; // monic
        detail::Trace<K> trace;
    };
    struct Pair {
        enum Kind { Overlap, Inclusion } kind;
        size_t i, j; // Overlap: suffix of lead_i = prefix of lead_j; Inclusion: lead_j inside lead_i
        size_t param; // overlap length / inclusion position
    };

    void check_degree(const NCPoly<K>& f) const {
        if (f.degree() > bound_)
            throw Error("polynomial degree " + std::to_string(f.degree()) +
                        " exceeds completion bound " + std::to_string(bound_));
    }

    // Deterministic full reduction: largest reducible word first, leftmost
    // position, lowest entry index. When `acc` is given, applied steps are
    // recorded: accumulate=false keeps `acc` a representation of the running
    // polynomial (completion use), accumulate=true collects f - remainder.
    void reduce_full(NCPoly<K>& f, const std::vector<Entry>& table, detail::Trace<K>* acc,
                     bool accumulate = false) const {
        while (true) {
            const Word* rw = nullptr;
            size_t rpos = 0, rentry = 0;
            for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
                const Word& w = it->first;
                bool found = false;
                for (size_t p = 0; p < w.letters.size() && !found; ++p)
                    for (size_t e = 0; e < table.size() && !found; ++e)
                        if (occurs_at(table[e].poly.leading_word(), w, p)) {
                            rw = &w;
                            rpos = p;
                            rentry = e;
                            found = true;
                        }
                if (found)
                    break;
            }
            if (!rw)
                return;
            const Entry& ent = table[rentry];
            const Word lead = ent.poly.leading_word();
            K c = *f.coeff(*rw);
            Word left = rw->prefix(rpos);
            Word right = rw->suffix_from(rpos + lead.letters.size());
            f -= ent.poly.sandwich(c, left, right);
            if (acc && opts_.track_cofactors)
                detail::trace_axpy(*acc, ent.trace, accumulate ? c : -c, left, right);
        }
    }

    void push_entry(NCPoly<K> r, detail::Trace<K> tr) {
        K inv = r.leading_coeff().inverse();
        r *= inv;
        detail::trace_scale(tr, inv);
        size_t idx = entries_.size();
        const Word lead = r.leading_word();
        entries_.push_back(Entry{std::move(r), std::move(tr)});

        for (size_t j = 0; j <= idx; ++j) {
            const Word& other = entries_[j].poly.leading_word();
            for (size_t l : proper_overlaps(lead, other))
                enqueue(Pair{Pair::Overlap, idx, j, l},
                        lead.degree() + other.degree() - static_cast<int>(l));
            if (j < idx) {
                for (size_t l : proper_overlaps(other, lead))
                    enqueue(Pair{Pair::Overlap, j, idx, l},
                            other.degree() + lead.degree() - static_cast<int>(l));
                // the new lead is fully reduced, so it cannot contain an older
                // lead; only the new-inside-old inclusions can occur
                for (int p = find_occurrence(lead, other); p >= 0;
                     p = find_occurrence(lead, other, static_cast<size_t>(p) + 1))
                    enqueue(Pair{Pair::Inclusion, j, idx, static_cast<size_t>(p)}, other.degree());
            }
        }
    }

    void enqueue(Pair p, int degree) {
        if (degree <= bound_)
            queue_[degree].push_back(p);
    }

    void process_queue() {
        while (!queue_.empty()) {
            auto bucket = queue_.begin();
            Pair p = bucket->second.front();
            bucket->second.pop_front();
            if (bucket->second.empty())
                queue_.erase(bucket);

            const Entry& ei = entries_[p.i];
            const Entry& ej = entries_[p.j];
            const Word& u = ei.poly.leading_word();
            const Word& v = ej.poly.leading_word();
            NCPoly<K> s;
            detail::Trace<K> tr;
            if (p.kind == Pair::Overlap) {
                // u = a c, v = c b with |c| = l: S = e_i * b - a * e_j
                Word a = u.prefix(u.letters.size() - p.param);
                Word b = v.suffix_from(p.param);
                s = ei.poly.sandwich(unit(), Word{}, b) - ej.poly.sandwich(unit(), a, Word{});
                if (opts_.track_cofactors) {
                    detail::trace_axpy(tr, ei.trace, unit(), Word{}, b);
                    detail::trace_axpy(tr, ej.trace, -unit(), a, Word{});
                }
            } else {
                // v inside u at position param: S = e_i - a * e_j * b
                Word a = u.prefix(p.param);
                Word b = u.suffix_from(p.param + v.letters.size());
                s = ei.poly - ej.poly.sandwich(unit(), a, b);
                if (opts_.track_cofactors) {
                    detail::trace_axpy(tr, ei.trace, unit(), Word{}, Word{});
                    detail::trace_axpy(tr, ej.trace, -unit(), a, b);
                }
            }
            reduce_full(s, entries_, &tr);
            if (!s.is_zero())
                push_entry(std::move(s), std::move(tr));
        }
    }

    // Multiplicative unit of K, recovered from a generator coefficient.
    K unit() const {
        const K& lc = generators_.front().leading_coeff();
        return lc * lc.inverse();
    }

    void finalize() {
        std::vector<size_t> order(entries_.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return compare_words(entries_[a].poly.leading_word(),
                                 entries_[b].poly.leading_word()) < 0;
        });
        for (size_t idx : order) {
            const Word& lead = entries_[idx].poly.leading_word();
            bool redundant = false;
            for (const auto& kept : reduced_)
                if (is_subword(kept.poly.leading_word(), lead)) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                reduced_.push_back(entries_[idx]);
        }
        // tail reduction: leading words are untouched, tails go to normal form
        for (size_t k = 0; k < reduced_.size(); ++k) {
            NCPoly<K> lt = NCPoly<K>::term(reduced_[k].poly.leading_coeff(),
                                           reduced_[k].poly.leading_word());
            NCPoly<K> tail = reduced_[k].poly - lt;
            detail::Trace<K> tr = reduced_[k].trace;
            reduce_full(tail, reduced_, &tr);
            reduced_[k].poly = lt + tail;
            reduced_[k].trace = std::move(tr);
        }
        basis_.clear();
        for (const auto& e : reduced_)
            basis_.push_back(e.poly);
    }

    int bound_;
    Options opts_;
    std::vector<NCPoly<K>> generators_;
    std::vector<Entry> entries_; // completion working set, never pruned
    std::vector<Entry> reduced_; // canonical reduced basis
    std::vector<NCPoly<K>> basis_;
    std::map<int, std::deque<Pair>> queue_;
};

/// Words of each degree 0..maxdeg that are irreducible under the basis leads
/// (normal words), in ascending monomial order per degree.
template <class K>
std::vector<std::vector<Word>> normal_words_up_to(const RewriteSystem<K>& rs, size_t nletters,
                                                  int maxdeg) {
    if (maxdeg > rs.complete_to())
        throw Error("normal words requested beyond completion bound");
    std::vector<const Word*> leads;
    for (const auto& g : rs.basis())
        leads.push_back(&g.leading_word());

    std::vector<std::vector<Word>> out(static_cast<size_t>(maxdeg) + 1);
    out[0].push_back(Word{});
    if (!leads.empty() && std::any_of(leads.begin(), leads.end(),
                                      [](const Word* w) { return w->empty(); }))
        throw Error("ideal contains a unit");
    for (int d = 1; d <= maxdeg; ++d) {
        for (const Word& base : out[static_cast<size_t>(d - 1)]) {
            // letters appended in descending monomial order keep each degree
            // slice ascending after the final reverse
            for (size_t li = 0; li < nletters; ++li) {
                Word w = base;
                w.letters.push_back(static_cast<Letter>(li));
                bool reducible = false;
                for (const Word* lead : leads)
                    if (lead->degree() <= w.degree() &&
                        occurs_at(*lead, w, w.letters.size() - lead->letters.size())) {
                        reducible = true;
                        break;
                    }
                if (!reducible)
                    out[static_cast<size_t>(d)].push_back(std::move(w));
            }
        }
        std::sort(out[static_cast<size_t>(d)].begin(), out[static_cast<size_t>(d)].end(),
                  WordOrder{});
    }
    return out;
}

} // namespace pbw
