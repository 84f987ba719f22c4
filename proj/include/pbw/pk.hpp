#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/central.hpp"

namespace pbw {

/// The nested subspaces P_1 <= P_2 <= ... of the free algebra built from the
/// deformation relations: P_k = V P_{k-1} + P_{k-1} V + span(P cap F^k T).
/// Coordinates are global over the filtration F^kT (words ordered by degree
/// then monomial order), so F^{k}T coordinates prefix F^{k+1}T coordinates.
template <class F>
class PkFiltration {
  public:
    using K = typename F::Scalar;

    PkFiltration(const Deformation<F>& U, int kmax) : U_(&U), kmax_(kmax) {
        const Alphabet& alpha = U.base().alphabet();
        words_.push_back(Word{});
        offsets_ = {0, 1};
        for (int d = 1; d <= kmax; ++d) {
            size_t begin = words_.size();
            size_t prev = static_cast<size_t>(offsets_[static_cast<size_t>(d - 1)]);
            size_t prev_end = static_cast<size_t>(offsets_[static_cast<size_t>(d)]);
            for (size_t i = prev; i < prev_end; ++i)
                for (size_t li = 0; li < alpha.size(); ++li) {
                    Word w = words_[i];
                    w.letters.push_back(static_cast<Letter>(li));
                    words_.push_back(std::move(w));
                }
            std::sort(words_.begin() + static_cast<long>(begin), words_.end(), WordOrder{});
            offsets_.push_back(static_cast<int>(words_.size()));
        }
        for (size_t i = 0; i < words_.size(); ++i)
            index_.emplace(words_[i], static_cast<int>(i));
        build();
    }

    int kmax() const { return kmax_; }
    long fk_dim(int k) const { return offsets_.at(static_cast<size_t>(k + 1)); }
    long dim(int k) const { return mk_.at(static_cast<size_t>(k)); }
    const Deformation<F>& deformation() const { return *U_; }

    SparseVec<K> coords(const NCPoly<K>& f) const {
        if (f.degree() > kmax_)
            throw Error("polynomial degree exceeds the filtration window");
        SparseVec<K> v;
        for (const auto& [w, c] : f.terms())
            v.push(index_.at(w), c);
        v.normalize();
        return v;
    }
    NCPoly<K> from_coords(const SparseVec<K>& v) const {
        NCPoly<K> f;
        for (const auto& [idx, c] : v.ent)
            f.add_term(c, words_[static_cast<size_t>(idx)]);
        return f;
    }

    bool member(const NCPoly<K>& f, int k) const {
        if (f.is_zero())
            return true;
        if (f.degree() > k)
            return false;
        return reduce_mod(coords(f), k).is_zero();
    }

    /// Reduce a coordinate vector modulo P_k.
    SparseVec<K> reduce_mod(SparseVec<K> v, int k) const {
        long m = dim(k);
        std::vector<size_t> order;
        for (size_t i = 0; i < static_cast<size_t>(m); ++i)
            order.push_back(i);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return pivots_[a].leading_col() < pivots_[b].leading_col();
        });
        for (size_t i : order) {
            const K* c = v.at(pivots_[i].leading_col());
            if (c)
                v.axpy(-*c, pivots_[i]);
        }
        return v;
    }

    /// P_k as a canonical subspace of the F^kT coordinate space.
    Subspace<K> subspace(int k) const {
        SparseMatrix<K> rows(static_cast<int>(fk_dim(k)));
        for (long i = 0; i < dim(k); ++i)
            rows.add_row(pivots_[static_cast<size_t>(i)]);
        return Subspace<K>::span(rows);
    }

  private:
    void build() {
        mk_.assign(static_cast<size_t>(kmax_) + 1, 0);
        std::vector<NCPoly<K>> fresh; // vectors added in the previous round
        const Alphabet& alpha = U_->base().alphabet();
        for (int k = 1; k <= kmax_; ++k) {
            std::vector<NCPoly<K>> candidates;
            for (const auto& g : fresh)
                for (size_t li = 0; li < alpha.size(); ++li) {
                    NCPoly<K> x = NCPoly<K>::word(Word{static_cast<Letter>(li)},
                                                  U_->base().one());
                    candidates.push_back(x * g);
                    candidates.push_back(g * x);
                }
            for (const auto& p : U_->relations())
                if (p.degree() == k)
                    candidates.push_back(p);
            std::vector<NCPoly<K>> added;
            for (const auto& cand : candidates) {
                SparseVec<K> v = reduce_all(coords(cand));
                if (v.is_zero())
                    continue;
                v.scale(v.ent.front().second.inverse());
                added.push_back(from_coords(v));
                pivots_.push_back(std::move(v));
            }
            mk_[static_cast<size_t>(k)] = static_cast<long>(pivots_.size());
            fresh = std::move(added);
        }
    }

    SparseVec<K> reduce_all(SparseVec<K> v) const {
        std::vector<size_t> order;
        for (size_t i = 0; i < pivots_.size(); ++i)
            order.push_back(i);
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return pivots_[a].leading_col() < pivots_[b].leading_col();
        });
        for (size_t i : order) {
            const K* c = v.at(pivots_[i].leading_col());
            if (c)
                v.axpy(-*c, pivots_[i]);
        }
        return v;
    }

    const Deformation<F>* U_;
    int kmax_;
    std::vector<Word> words_;
    std::vector<int> offsets_; // offsets_[d] = first index of degree d
    std::unordered_map<Word, int, WordHash> index_;
    std::vector<SparseVec<K>> pivots_; // echelon rows, arrival order
    std::vector<long> mk_;             // dim P_k
};

/// Jacobi condition of the finite criterion: P_1 = 0 and
/// P_{k+1} cap F^kT <= P_k for 1 <= k <= c.
template <class F>
struct JacobiResult {
    using K = typename F::Scalar;
    bool pass = false;
    bool conditional = false; // complexity known only as a lower bound
    int checked_to = 0;
    std::optional<int> fail_k;
    std::optional<NCPoly<K>> witness; // echelon-normalized
};

template <class F>
JacobiResult<F> jacobi_check(const Deformation<F>& U, const Complexity& cx) {
    using K = typename F::Scalar;
    JacobiResult<F> out;
    out.conditional = !cx.exact;
    out.checked_to = cx.value;
    PkFiltration<F> pk(U, cx.value + 1);
    if (pk.dim(1) != 0) {
        out.fail_k = 0;
        out.witness = pk.from_coords(pk.subspace(1).basis().row(0));
        return out;
    }
    for (int k = 1; k <= cx.value; ++k) {
        auto pk1 = pk.subspace(k + 1);
        // F^kT inside F^{k+1}T is the span of the leading coordinate block
        SparseMatrix<K> idrows(static_cast<int>(pk.fk_dim(k + 1)));
        for (long i = 0; i < pk.fk_dim(k); ++i) {
            SparseVec<K> e;
            e.push(static_cast<int>(i), U.base().one());
            idrows.add_row(std::move(e));
        }
        auto inter = intersect(pk1, Subspace<K>::span(idrows));
        for (int r = 0; r < inter.dim(); ++r) {
            NCPoly<K> cand = pk.from_coords(inter.basis().row(r));
            if (!pk.member(cand, k)) {
                out.fail_k = k;
                out.witness = cand;
                return out;
            }
        }
    }
    out.pass = true;
    return out;
}

/// Truncated Hilbert-dimension oracle on gr(U): complete <P> to degree N and
/// count normal words. Phi: A -> gr(U) is onto, so injectivity to degree p is
/// exactly dimension agreement up to p.
template <class F>
struct OracleResult {
    std::vector<long> dims_A, dims_gr;
    int injectivity_degree = 0; // largest p <= N with agreement through p
    int first_mismatch = -1;
};

template <class F>
OracleResult<F> gr_hilbert_oracle(const Deformation<F>& U, int N) {
    using K = typename F::Scalar;
    if (U.base().bound() < N)
        throw Error("oracle window exceeds the completion bound of the base");
    OracleResult<F> out;
    out.dims_A = U.base().hilbert(N);
    RewriteSystem<K> rs(U.relations(), N);
    auto words = normal_words_up_to(rs, U.base().alphabet().size(), N);
    for (int d = 0; d <= N; ++d)
        out.dims_gr.push_back(static_cast<long>(words[static_cast<size_t>(d)].size()));
    out.injectivity_degree = N;
    for (int d = 0; d <= N; ++d) {
        internal_check(out.dims_gr[static_cast<size_t>(d)] <= out.dims_A[static_cast<size_t>(d)],
                       "gr(U) dimension exceeded the base dimension");
        if (out.dims_gr[static_cast<size_t>(d)] != out.dims_A[static_cast<size_t>(d)]) {
            out.first_mismatch = d;
            out.injectivity_degree = d - 1;
            break;
        }
    }
    return out;
}

namespace detail_pk {

/// z-normalized monomial basis of T[z]_k, ascending monomial order.
inline std::vector<Word> tz_words(size_t nbase, Letter z, int k) {
    std::vector<Word> out;
    std::vector<Word> base{Word{}};
    for (int d = 0; d <= k; ++d) {
        if (d > 0) {
            std::vector<Word> next;
            for (const Word& w : base)
                for (size_t li = 0; li < nbase; ++li) {
                    Word v = w;
                    v.letters.push_back(static_cast<Letter>(li));
                    next.push_back(std::move(v));
                }
            base = std::move(next);
        }
        for (const Word& w : base)
            out.push_back(Word::power(z, k - d) * w);
    }
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
}

template <class K>
SparseVec<K> tz_coords(const ZPoly<K>& g, const std::vector<Word>& basis) {
    SparseVec<K> v;
    for (const auto& [w, c] : g.raw().terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), w, WordOrder{});
        internal_check(it != basis.end() && *it == w, "word outside the T[z] degree slice");
        v.push(static_cast<int>(it - basis.begin()), c);
    }
    v.normalize();
    return v;
}

} // namespace detail_pk

enum class SliceMethod {
    Kernel, // kernel of T[z]_k -> D_k on normal forms
    Span,   // span of monomial sandwiches u h(p) v
};

/// Degree-k slice of the two-sided ideal <h(P)> inside T[z]_k, as echelon
/// rows over the z-normalized monomial basis.
template <class F>
SparseMatrix<typename F::Scalar> ideal_slice(const CentralExtension<F>& D, int k,
                                             SliceMethod method) {
    using K = typename F::Scalar;
    size_t nbase = D.deformation().base().alphabet().size();
    auto words = detail_pk::tz_words(nbase, D.zvar(), k);
    if (method == SliceMethod::Kernel) {
        SparseMatrix<K> m(static_cast<int>(D.dim(k)));
        for (const Word& w : words) {
            auto nf = D.normal_form(ZPoly<K>(D.zvar(), NCPoly<K>::word(w, D.one())));
            m.add_row(D.coords(nf, k));
        }
        return left_kernel(m, D.one());
    }
    SparseMatrix<K> rows(static_cast<int>(words.size()));
    for (const auto& hp : D.relations()) {
        int rem = k - hp.degree();
        if (rem < 0)
            continue;
        for (int dl = 0; dl <= rem; ++dl) {
            auto lefts = detail_pk::tz_words(nbase, D.zvar(), dl);
            auto rights = detail_pk::tz_words(nbase, D.zvar(), rem - dl);
            for (const Word& u : lefts)
                for (const Word& v : rights) {
                    ZPoly<K> prod = ZPoly<K>(D.zvar(), NCPoly<K>::word(u, D.one())) * hp *
                                    ZPoly<K>(D.zvar(), NCPoly<K>::word(v, D.one()));
                    rows.add_row(detail_pk::tz_coords(prod, words));
                }
        }
    }
    return rref(rows).mat;
}

/// phi_1(<h(P)>_k) = P_k for 1 <= k <= kmax.
template <class F>
struct Lemma41Result {
    bool ok = true;
    int first_fail = -1;
};

template <class F>
Lemma41Result<F> verify_lemma41(const Deformation<F>& U, const CentralExtension<F>& D, int kmax,
                                SliceMethod method = SliceMethod::Kernel) {
    using K = typename F::Scalar;
    if (kmax > D.bound())
        throw Error("Lemma 4.1 window exceeds the completion bound of D");
    PkFiltration<F> pk(U, kmax);
    size_t nbase = U.base().alphabet().size();
    for (int k = 1; k <= kmax; ++k) {
        auto slice = ideal_slice(D, k, method);
        auto words = detail_pk::tz_words(nbase, D.zvar(), k);
        SparseMatrix<K> image(static_cast<int>(pk.fk_dim(k)));
        bool inside = true;
        for (const auto& row : slice.row_list()) {
            ZPoly<K> g(D.zvar());
            {
                NCPoly<K> raw;
                for (const auto& [idx, c] : row.ent)
                    raw.add_term(c, words[static_cast<size_t>(idx)]);
                g = ZPoly<K>(D.zvar(), std::move(raw));
            }
            NCPoly<K> f = evaluate_central(g, 1);
            if (!pk.member(f, k))
                inside = false;
            image.add_row(pk.coords(f));
        }
        long image_dim = rref(image).rank();
        if (!inside || image_dim != pk.dim(k)) {
            Lemma41Result<F> out;
            out.ok = false;
            out.first_fail = k;
            return out;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Combined verdict pipeline.

struct MethodOutcome {
    std::string name;
    bool ran = false;
    bool pass = false;
    bool conditional = false; // pass not definitive (complexity only bounded)
    std::string window;
    std::optional<std::string> witness;
    std::optional<int> detail_k;
    std::optional<int> detail_n;
    int first_mismatch = -1;
};

struct PBWMethods {
    bool jacobi = true;
    bool regularity = true;
    bool condition4 = true;
    bool oracle = true;
};

struct PBWReport {
    int max_deg = 0;
    int complexity_value = 0;
    bool complexity_exact = false;
    bool complexity_growth = false;
    std::vector<MethodOutcome> methods;
    std::string verdict; // "yes" | "no" | "unknown"
    std::vector<long> dims_A, dims_gr;
};

/// Run the selected methods at window N and join them. The theorems make all
/// definitive verdicts equivalent; any disagreement is an internal error.
template <class F>
PBWReport pbw_verdict(const Deformation<F>& U, int N, PBWMethods methods = {},
                      const std::string& zname = "z") {
    using K = typename F::Scalar;
    PBWReport report;
    report.max_deg = N;

    const bool need_complexity = methods.jacobi || methods.regularity || methods.condition4;
    const bool need_extension = methods.regularity || methods.condition4;

    std::optional<ResolutionData<F>> res;
    Complexity cx;
    if (need_complexity) {
        res = minimal_resolution(U.base(), N);
        cx = complexity(*res);
        report.complexity_value = cx.value;
        report.complexity_exact = cx.exact;
        report.complexity_growth = cx.growth_flag;
    }
    std::optional<CentralExtension<F>> D;
    if (need_extension)
        D.emplace(U, zname, N);

    const Alphabet& alpha = U.base().alphabet();

    if (methods.jacobi) {
        auto j = jacobi_check(U, cx);
        MethodOutcome m;
        m.name = "jacobi";
        m.ran = true;
        m.pass = j.pass;
        m.conditional = j.conditional;
        m.window = "k <= " + std::to_string(j.checked_to);
        if (j.fail_k) {
            m.detail_k = *j.fail_k;
            m.witness = poly_str(*j.witness, alpha);
        }
        report.methods.push_back(std::move(m));
    }
    if (methods.regularity) {
        int p = std::min(cx.value, N - 1);
        auto r = regular_to_degree(*D, p);
        MethodOutcome m;
        m.name = "regularity";
        m.ran = true;
        m.pass = r.regular;
        m.conditional = !cx.exact;
        m.window = "k <= " + std::to_string(p) + ", k + n <= " + std::to_string(N);
        if (r.witness) {
            m.detail_k = r.witness->k;
            m.detail_n = r.witness->n;
            m.witness = poly_str(r.witness->cls.raw(), D->alphabet());
        }
        report.methods.push_back(std::move(m));
    }
    if (methods.condition4) {
        auto f2 = compute_f(2, *res, U, *D);
        auto f3 = compute_f(3, *res, U, *D);
        auto c4 = check_condition4(*res, f2, f3, *D);
        MethodOutcome m;
        m.name = "condition4";
        m.ran = true;
        m.pass = c4.holds;
        m.conditional = !cx.exact;
        m.window = "resolution to degree " + std::to_string(N);
        if (!c4.holds) {
            for (const auto& row : c4.residual.entry)
                for (const auto& e : row)
                    if (!e.is_zero() && !m.witness) {
                        m.witness = poly_str(e.raw(), D->alphabet());
                    }
        }
        report.methods.push_back(std::move(m));
    }
    if (methods.oracle) {
        auto o = gr_hilbert_oracle(U, N);
        MethodOutcome m;
        m.name = "oracle";
        m.ran = true;
        m.pass = o.injectivity_degree >= N - 1;
        m.conditional = false;
        m.window = "degrees <= " + std::to_string(N);
        m.first_mismatch = o.first_mismatch;
        report.dims_A = o.dims_A;
        report.dims_gr = o.dims_gr;
        report.methods.push_back(std::move(m));
    }

    // failures certify non-PBW at any window; passes are definitive only
    // when the complexity bound is exact
    bool definitive_no = false, definitive_yes = false;
    for (const auto& m : report.methods) {
        if (!m.pass)
            definitive_no = true;
        else if (!m.conditional)
            definitive_yes = true;
    }
    if (definitive_no && definitive_yes)
        throw std::logic_error(
            "internal error: the equivalence theorems are violated by disagreeing verdicts");
    report.verdict = definitive_no ? "no" : definitive_yes ? "yes" : "unknown";
    return report;
}

} // namespace pbw
