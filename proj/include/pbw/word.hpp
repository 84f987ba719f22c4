#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbw/error.hpp"

namespace pbw {

using Letter = uint8_t;

/// Ordered list of generator names. All generators have degree 1 and the
/// declaration order induces the monomial order (earlier = larger).
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw Error("alphabet must have at least one generator");
        if (names_.size() > 250)
            throw Error("too many generators");
        for (size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("empty generator name");
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw Error("duplicate generator name: " + names_[i]);
        }
    }

    size_t size() const { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Letter> index_of(std::string_view s) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == s)
                return static_cast<Letter>(i);
        return std::nullopt;
    }

    /// Alphabet with one extra (smallest) letter appended. Errors on collision.
    Alphabet extended(const std::string& extra) const {
        if (index_of(extra))
            throw Error("generator name collision: '" + extra +
                        "' already names a generator; rename the central variable");
        auto names = names_;
        names.push_back(extra);
        return Alphabet(names);
    }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

/// Monomial of the free algebra: a sequence of letter indices. Degree equals
/// length; the empty word is the unit.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}
    Word(std::initializer_list<Letter> ls) : letters(ls) {}

    int degree() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    Word operator*(const Word& o) const {
        Word r;
        r.letters.reserve(letters.size() + o.letters.size());
        r.letters.insert(r.letters.end(), letters.begin(), letters.end());
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    Word sub(size_t pos, size_t len) const {
        return Word(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + len));
    }
    Word prefix(size_t len) const { return sub(0, len); }
    Word suffix_from(size_t pos) const { return sub(pos, letters.size() - pos); }

    static Word power(Letter l, int k) {
        Word w;
        w.letters.assign(static_cast<size_t>(k), l);
        return w;
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

/// Degree-lexicographic comparison: longer words are larger; at equal degree
/// the first differing position decides, with the earlier alphabet letter
/// larger. Total, multiplicative and degree-compatible.
inline int compare_words(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size())
        return a.letters.size() < b.letters.size() ? -1 : 1;
    for (size_t i = 0; i < a.letters.size(); ++i) {
        if (a.letters[i] != b.letters[i])
            return a.letters[i] < b.letters[i] ? 1 : -1; // smaller index = larger letter
    }
    return 0;
}

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) < 0; }
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Letter l : w.letters) {
            h ^= l;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Does `u` occur in `w` starting at position `pos`?
inline bool occurs_at(const Word& u, const Word& w, size_t pos) {
    if (pos + u.letters.size() > w.letters.size())
        return false;
    return std::equal(u.letters.begin(), u.letters.end(), w.letters.begin() + pos);
}

/// First occurrence of `u` in `w` at position >= from, or -1.
inline int find_occurrence(const Word& u, const Word& w, size_t from = 0) {
    if (u.letters.size() > w.letters.size())
        return -1;
    for (size_t p = from; p + u.letters.size() <= w.letters.size(); ++p)
        if (occurs_at(u, w, p))
            return static_cast<int>(p);
    return -1;
}

inline bool is_subword(const Word& u, const Word& w) { return find_occurrence(u, w) >= 0; }

/// Lengths l with 1 <= l < min(|u|,|v|) such that the length-l suffix of u
/// equals the length-l prefix of v (proper overlap ambiguities).
inline std::vector<size_t> proper_overlaps(const Word& u, const Word& v) {
    std::vector<size_t> out;
    size_t maxl = std::min(u.letters.size(), v.letters.size());
    for (size_t l = 1; l < maxl; ++l) {
        if (std::equal(v.letters.begin(), v.letters.begin() + l,
                       u.letters.end() - static_cast<long>(l)))
            out.push_back(l);
    }
    return out;
}

/// Render a word with `*` products and `^` powers; the empty word is "1".
inline std::string word_str(const Word& w, const Alphabet& alpha) {
    if (w.empty())
        return "1";
    std::string out;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += alpha.name(w.letters[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace pbw
