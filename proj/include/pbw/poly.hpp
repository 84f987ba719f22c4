#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pbw/scalar.hpp"
#include "pbw/word.hpp"

namespace pbw {

/// Noncommutative polynomial over the free algebra: a sorted term map
/// Word -> nonzero coefficient. Leading term = largest word.
template <class K>
class NCPoly {
  public:
    using TermMap = std::map<Word, K, WordOrder>;

    NCPoly() = default;

    static NCPoly term(K c, Word w) {
        NCPoly f;
        if (!c.is_zero())
            f.terms_.emplace(std::move(w), std::move(c));
        return f;
    }
    static NCPoly word(Word w, const K& one) { return term(one, std::move(w)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Top degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    const Word& leading_word() const {
        if (is_zero())
            throw Error("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }
    const K& leading_coeff() const {
        if (is_zero())
            throw Error("leading term of zero polynomial");
        return terms_.rbegin()->second;
    }

    const K* coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const K& c, const Word& w) {
        if (c.is_zero())
            return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(c, w);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.terms_)
            add_term(-c, w);
        return *this;
    }
    NCPoly operator-() const {
        NCPoly r;
        for (const auto& [w, c] : terms_)
            r.terms_.emplace(w, -c);
        return r;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    NCPoly& operator*=(const K& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_)
            v *= c;
        return *this;
    }
    friend NCPoly operator*(const K& c, NCPoly f) { return f *= c; }
    friend NCPoly operator*(NCPoly f, const K& c) { return f *= c; }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                r.add_term(ca * cb, wa * wb);
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    /// c * left * f * right
    NCPoly sandwich(const K& c, const Word& left, const Word& right) const {
        NCPoly r;
        for (const auto& [w, v] : terms_)
            r.add_term(c * v, left * w * right);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Homogeneous component of degree d.
    NCPoly component(int d) const {
        NCPoly r;
        for (const auto& [w, c] : terms_)
            if (w.degree() == d)
                r.terms_.emplace(w, c);
        return r;
    }
    /// Sum of the components of degree <= k.
    NCPoly truncate(int k) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) {
            if (w.degree() > k)
                break; // terms sorted degree-first
            r.terms_.emplace(w, c);
        }
        return r;
    }
    NCPoly top_component() const {
        if (is_zero())
            throw Error("top component of zero polynomial");
        return component(degree());
    }
    bool is_homogeneous() const {
        if (is_zero())
            return true;
        return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    NCPoly monic() const {
        if (is_zero())
            throw Error("monic of zero polynomial");
        return *this * leading_coeff().inverse();
    }

  private:
    TermMap terms_;
};

/// Render a polynomial in the presentation grammar. Terms print in
/// descending monomial order, so output is canonical.
template <class K>
std::string poly_str(const NCPoly<K>& f, const Alphabet& alpha) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const Word& w = it->first;
        K c = it->second;
        std::string sep;
        if (first) {
            if (c.is_negative()) {
                sep = "-";
                c = -c;
            }
        } else if (c.is_negative()) {
            sep = " - ";
            c = -c;
        } else {
            sep = " + ";
        }
        std::string body;
        if (w.empty())
            body = c.str();
        else if (c.is_one())
            body = word_str(w, alpha);
        else
            body = c.str() + "*" + word_str(w, alpha);
        out += sep + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// T[z]: the base free algebra extended by one commuting variable. Values are
// stored z-normalized: every word is z^a * (z-free word), z being the final
// (smallest) letter of the extended alphabet. z*w and w*z are therefore the
// same stored value.

inline int leading_zpow(const Word& w, Letter z) {
    int a = 0;
    while (a < w.degree() && w.letters[static_cast<size_t>(a)] == z)
        ++a;
    return a;
}

inline bool is_z_normalized(const Word& w, Letter z) {
    int a = leading_zpow(w, z);
    for (size_t i = static_cast<size_t>(a); i < w.letters.size(); ++i)
        if (w.letters[i] == z)
            return false;
    return true;
}

/// Homogeneous-friendly polynomial in T[z] with the central variable
/// collected at the front of every word.
template <class K>
class ZPoly {
  public:
    explicit ZPoly(Letter z) : z_(z) {}
    ZPoly(Letter z, NCPoly<K> raw) : z_(z), p_(std::move(raw)) {
        for (const auto& [w, c] : p_.terms())
            internal_check(is_z_normalized(w, z_), "ZPoly word not z-normalized");
    }

    Letter zvar() const { return z_; }
    const NCPoly<K>& raw() const { return p_; }

    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }
    bool is_homogeneous() const { return p_.is_homogeneous(); }

    ZPoly operator-() const { return ZPoly(z_, -p_); }
    ZPoly& operator+=(const ZPoly& o) {
        internal_check(z_ == o.z_, "mixed central variables");
        p_ += o.p_;
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        internal_check(z_ == o.z_, "mixed central variables");
        p_ -= o.p_;
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const K& c, ZPoly f) {
        f.p_ *= c;
        return f;
    }

    /// z-aware product: (z^a u)(z^b v) = z^{a+b} uv.
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        internal_check(a.z_ == b.z_, "mixed central variables");
        ZPoly r(a.z_);
        for (const auto& [wa, ca] : a.p_.terms())
            for (const auto& [wb, cb] : b.p_.terms())
                r.p_.add_term(ca * cb, mul_words(wa, wb, a.z_));
        return r;
    }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) {
        return a.z_ == b.z_ && a.p_ == b.p_;
    }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Exact division by z; errors if some term has no z factor.
    ZPoly div_z() const {
        ZPoly r(z_);
        for (const auto& [w, c] : p_.terms()) {
            if (leading_zpow(w, z_) == 0)
                throw Error("exact division by central variable failed");
            r.p_.add_term(c, w.suffix_from(1));
        }
        return r;
    }

    static Word mul_words(const Word& a, const Word& b, Letter z) {
        int za = leading_zpow(a, z), zb = leading_zpow(b, z);
        Word r = Word::power(z, za + zb);
        r.letters.insert(r.letters.end(), a.letters.begin() + za, a.letters.end());
        r.letters.insert(r.letters.end(), b.letters.begin() + zb, b.letters.end());
        return r;
    }

  private:
    Letter z_;
    NCPoly<K> p_;
};

/// Lift a z-free polynomial into T[z] unchanged.
template <class K>
ZPoly<K> lift_to_extended(const NCPoly<K>& f, Letter z) {
    return ZPoly<K>(z, f);
}

/// Homogenization h(f) = sum_i z^{p-i} f_i where p = deg f.
template <class K>
ZPoly<K> homogenize(const NCPoly<K>& f, Letter z) {
    if (f.is_zero())
        throw Error("homogenization of zero polynomial");
    int p = f.degree();
    NCPoly<K> out;
    for (const auto& [w, c] : f.terms()) {
        Word lifted = Word::power(z, p - w.degree()) * w;
        out.add_term(c, lifted);
    }
    return ZPoly<K>(z, std::move(out));
}

/// Evaluation at z=0 (kills every term containing z) or z=1 (erases z).
/// Both are algebra homomorphisms T[z] -> T.
template <class K>
NCPoly<K> evaluate_central(const ZPoly<K>& g, int at) {
    internal_check(at == 0 || at == 1, "evaluate_central expects 0 or 1");
    NCPoly<K> out;
    for (const auto& [w, c] : g.raw().terms()) {
        int a = leading_zpow(w, g.zvar());
        if (a > 0 && at == 0)
            continue;
        out.add_term(c, w.suffix_from(static_cast<size_t>(a)));
    }
    return out;
}

} // namespace pbw
