#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "pbw/error.hpp"

namespace pbw {

/// Sparse row vector: (column, nonzero coefficient) sorted by column.
template <class K>
struct SparseVec {
    std::vector<std::pair<int, K>> ent;

    bool is_zero() const { return ent.empty(); }
    int leading_col() const { return ent.empty() ? -1 : ent.front().first; }

    void push(int col, K c) {
        if (!c.is_zero())
            ent.emplace_back(col, std::move(c));
    }
    void normalize() {
        std::sort(ent.begin(), ent.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<int, K>> out;
        for (auto& [c, v] : ent) {
            if (!out.empty() && out.back().first == c) {
                out.back().second += v;
                if (out.back().second.is_zero())
                    out.pop_back();
            } else if (!v.is_zero()) {
                out.emplace_back(c, std::move(v));
            }
        }
        ent = std::move(out);
    }

    const K* at(int col) const {
        auto it = std::lower_bound(ent.begin(), ent.end(), col,
                                   [](const auto& a, int c) { return a.first < c; });
        return (it != ent.end() && it->first == col) ? &it->second : nullptr;
    }

    /// this += c * other (both sorted).
    void axpy(const K& c, const SparseVec& other) {
        if (c.is_zero() || other.ent.empty())
            return;
        std::vector<std::pair<int, K>> out;
        out.reserve(ent.size() + other.ent.size());
        size_t i = 0, j = 0;
        while (i < ent.size() || j < other.ent.size()) {
            if (j >= other.ent.size() || (i < ent.size() && ent[i].first < other.ent[j].first)) {
                out.push_back(std::move(ent[i++]));
            } else if (i >= ent.size() || other.ent[j].first < ent[i].first) {
                K v = c * other.ent[j].second;
                if (!v.is_zero())
                    out.emplace_back(other.ent[j].first, std::move(v));
                ++j;
            } else {
                K v = ent[i].second + c * other.ent[j].second;
                if (!v.is_zero())
                    out.emplace_back(ent[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        ent = std::move(out);
    }

    void scale(const K& c) {
        for (auto& [col, v] : ent)
            v *= c;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.ent == b.ent; }
};

/// Sparse matrix as a list of rows of fixed width.
template <class K>
class SparseMatrix {
  public:
    SparseMatrix() = default;
    explicit SparseMatrix(int cols) : cols_(cols) {}

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    void add_row(SparseVec<K> r) {
        for (const auto& [c, v] : r.ent)
            internal_check(0 <= c && c < cols_, "column index out of range");
        rows_.push_back(std::move(r));
    }
    const SparseVec<K>& row(int i) const { return rows_.at(static_cast<size_t>(i)); }
    const std::vector<SparseVec<K>>& row_list() const { return rows_; }
    std::vector<SparseVec<K>>& row_list() { return rows_; }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    int cols_ = 0;
    std::vector<SparseVec<K>> rows_;
};

/// Reduced row-echelon form. Canonical for the row space, so identical row
/// spaces produce identical results.
template <class K>
struct RrefResult {
    SparseMatrix<K> mat; // rank rows, RREF, sorted by pivot column
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <class K>
RrefResult<K> rref(const SparseMatrix<K>& m) {
    std::vector<SparseVec<K>> pivots; // pivot rows in insertion order
    std::vector<int> pivot_cols;
    for (const SparseVec<K>& input : m.row_list()) {
        SparseVec<K> r = input;
        // eliminate against existing pivots
        for (size_t k = 0; k < pivots.size(); ++k) {
            const K* c = r.at(pivot_cols[k]);
            if (c)
                r.axpy(-*c, pivots[k]);
        }
        if (r.is_zero())
            continue;
        r.scale(r.ent.front().second.inverse());
        int pc = r.leading_col();
        // back-substitute into existing pivot rows
        for (size_t k = 0; k < pivots.size(); ++k) {
            const K* c = pivots[k].at(pc);
            if (c)
                pivots[k].axpy(-*c, r);
        }
        pivots.push_back(std::move(r));
        pivot_cols.push_back(pc);
    }
    std::vector<size_t> order(pivots.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_cols[a] < pivot_cols[b]; });
    RrefResult<K> out;
    out.mat = SparseMatrix<K>(m.cols());
    for (size_t i : order) {
        out.mat.add_row(std::move(pivots[i]));
        out.pivot_cols.push_back(pivot_cols[i]);
    }
    return out;
}

/// Basis of { v : v * M = 0 } (row-vector convention), echelonized. The field
/// unit is passed in because zero rows still need a marker in the
/// transformation part.
template <class K>
SparseMatrix<K> left_kernel(const SparseMatrix<K>& m, const K& one) {
    // eliminate [M | I] tracking row operations; rows whose M-part vanished
    // carry kernel vectors in the identity part
    const int n = m.rows();
    struct AugRow {
        SparseVec<K> a; // image part
        SparseVec<K> t; // transformation part
    };
    std::vector<AugRow> pivots;
    std::vector<int> pivot_cols;
    SparseMatrix<K> kernel(n);
    for (int i = 0; i < n; ++i) {
        AugRow r;
        r.a = m.row(i);
        r.t.push(i, one);
        for (size_t k = 0; k < pivots.size(); ++k) {
            const K* c = r.a.at(pivot_cols[k]);
            if (c) {
                K f = -*c;
                r.a.axpy(f, pivots[k].a);
                r.t.axpy(f, pivots[k].t);
            }
        }
        if (r.a.is_zero()) {
            kernel.add_row(std::move(r.t));
        } else {
            K inv = r.a.ent.front().second.inverse();
            r.a.scale(inv);
            r.t.scale(inv);
            pivot_cols.push_back(r.a.leading_col());
            pivots.push_back(std::move(r));
        }
    }
    return rref(kernel).mat;
}

/// Subspace of a coordinatized ambient space, stored as an RREF basis.
template <class K>
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(int ambient) : basis_(ambient) {}
    static Subspace span(const SparseMatrix<K>& rows) {
        Subspace s(rows.cols());
        s.basis_ = rref(rows).mat;
        return s;
    }

    int ambient() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const SparseMatrix<K>& basis() const { return basis_; }

    bool member(const SparseVec<K>& v) const {
        SparseVec<K> r = v;
        for (int k = 0; k < basis_.rows(); ++k) {
            const K* c = r.at(basis_.row(k).leading_col());
            if (c)
                r.axpy(-*c, basis_.row(k));
        }
        return r.is_zero();
    }
    /// Reduce v modulo the subspace (normal-form representative).
    SparseVec<K> reduce(const SparseVec<K>& v) const {
        SparseVec<K> r = v;
        for (int k = 0; k < basis_.rows(); ++k) {
            const K* c = r.at(basis_.row(k).leading_col());
            if (c)
                r.axpy(-*c, basis_.row(k));
        }
        return r;
    }
    bool contains(const Subspace& o) const {
        check_ambient(o);
        for (const auto& r : o.basis_.row_list())
            if (!member(r))
                return false;
        return true;
    }

    friend Subspace sum(const Subspace& u, const Subspace& w) {
        u.check_ambient(w);
        SparseMatrix<K> stacked(u.ambient());
        for (const auto& r : u.basis_.row_list())
            stacked.add_row(r);
        for (const auto& r : w.basis_.row_list())
            stacked.add_row(r);
        return span(stacked);
    }

    /// Kernel-of-stacked-bases intersection.
    friend Subspace intersect(const Subspace& u, const Subspace& w) {
        u.check_ambient(w);
        if (u.is_zero() || w.is_zero())
            return Subspace(u.ambient());
        SparseMatrix<K> stacked(u.ambient());
        for (const auto& r : u.basis_.row_list())
            stacked.add_row(r);
        for (const auto& r : w.basis_.row_list())
            stacked.add_row(r);
        const K& lead = u.basis_.row(0).ent.front().second; // pivot, equals 1
        SparseMatrix<K> ker = left_kernel(stacked, lead * lead.inverse());
        SparseMatrix<K> inter(u.ambient());
        for (const auto& kv : ker.row_list()) {
            // first u.dim() coordinates combine rows of u's basis
            SparseVec<K> v;
            for (const auto& [idx, c] : kv.ent) {
                if (idx >= u.dim())
                    break;
                v.axpy(c, u.basis_.row(idx));
            }
            if (!v.is_zero())
                inter.add_row(std::move(v));
        }
        return span(inter);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.basis_ == b.basis_; // RREF is canonical
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    void check_ambient(const Subspace& o) const {
        if (ambient() != o.ambient())
            throw Error("subspace ambient mismatch");
    }
    SparseMatrix<K> basis_;
};

} // namespace pbw
