#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pbw/central.hpp"

namespace pbw {

/// Parsed polynomial expression, field-independent.
struct PolyExpr {
    enum class Kind { Num, Gen, Add, Sub, Neg, Mul, Pow };
    Kind kind;
    std::string text; // literal or generator name
    int exponent = 0;
    int line = 0, col = 0;
    std::vector<PolyExpr> args;
};

/// A parsed presentation file: either an algebra file (rel lines) or a
/// deformation file (def lines).
struct PresentationFile {
    enum class FieldKind { Q, GF };
    FieldKind field_kind = FieldKind::Q;
    uint64_t modulus = 0;
    std::vector<std::string> gens;
    std::vector<PolyExpr> rels, defs;
    std::optional<std::string> base_path;
    std::optional<std::string> central;
    std::optional<int> maxdeg;
    std::string filename;

    bool is_deformation() const { return !defs.empty(); }
    std::string field_name() const {
        return field_kind == FieldKind::Q ? "Q" : "GF(" + std::to_string(modulus) + ")";
    }
};

namespace detail_parse {

struct Token {
    enum class Kind { Num, Ident, Op, End };
    Kind kind;
    std::string text;
    int line, col;
};

class ExprLexer {
  public:
    ExprLexer(const std::string& s, const std::string& file, int line, int col0)
        : s_(s), file_(file), line_(line), col0_(col0) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        int col = col0_ + static_cast<int>(pos_);
        if (pos_ >= s_.size())
            return {Token::Kind::End, "", line_, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return {Token::Kind::Num, s_.substr(start, pos_ - start), line_, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::Ident, s_.substr(start, pos_ - start), line_, col};
        }
        if (std::string("+-*^()/").find(c) != std::string::npos) {
            ++pos_;
            return {Token::Kind::Op, std::string(1, c), line_, col};
        }
        throw ParseError(file_, line_, col, std::string("unexpected character '") + c + "'");
    }

  private:
    const std::string& s_;
    std::string file_;
    int line_, col0_;
    size_t pos_ = 0;
};

/// expr  := ['-'] term (('+'|'-') term)*
/// term  := factor ('*' factor)*
/// factor:= ['-'] primary ('^' int)*
/// primary := number ['/' number] | ident | '(' expr ')'
class ExprParser {
  public:
    ExprParser(const std::string& s, const std::string& file, int line, int col0)
        : lex_(s, file, line, col0), file_(file) {
        advance();
    }

    PolyExpr parse() {
        PolyExpr e = expr();
        if (cur_.kind != Token::Kind::End)
            throw ParseError(file_, cur_.line, cur_.col, "trailing input '" + cur_.text + "'");
        return e;
    }

  private:
    void advance() { cur_ = lex_.next(); }
    bool is_op(const char* t) const { return cur_.kind == Token::Kind::Op && cur_.text == t; }

    PolyExpr expr() {
        PolyExpr lhs;
        if (is_op("-")) {
            Token t = cur_;
            advance();
            lhs = PolyExpr{PolyExpr::Kind::Neg, "", 0, t.line, t.col, {term()}};
        } else {
            lhs = term();
        }
        while (is_op("+") || is_op("-")) {
            bool add = cur_.text == "+";
            Token t = cur_;
            advance();
            PolyExpr rhs = term();
            lhs = PolyExpr{add ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub, "", 0, t.line, t.col,
                           {std::move(lhs), std::move(rhs)}};
        }
        return lhs;
    }

    PolyExpr term() {
        PolyExpr lhs = factor();
        while (is_op("*")) {
            Token t = cur_;
            advance();
            PolyExpr rhs = factor();
            lhs = PolyExpr{PolyExpr::Kind::Mul, "", 0, t.line, t.col,
                           {std::move(lhs), std::move(rhs)}};
        }
        return lhs;
    }

    PolyExpr factor() {
        if (is_op("-")) {
            Token t = cur_;
            advance();
            return PolyExpr{PolyExpr::Kind::Neg, "", 0, t.line, t.col, {factor()}};
        }
        PolyExpr base = primary();
        while (is_op("^")) {
            Token t = cur_;
            advance();
            if (cur_.kind != Token::Kind::Num)
                throw ParseError(file_, cur_.line, cur_.col, "expected integer exponent");
            int e = std::stoi(cur_.text);
            if (e < 0)
                throw ParseError(file_, cur_.line, cur_.col, "negative exponent");
            advance();
            base = PolyExpr{PolyExpr::Kind::Pow, "", e, t.line, t.col, {std::move(base)}};
        }
        return base;
    }

    PolyExpr primary() {
        if (cur_.kind == Token::Kind::Num) {
            Token t = cur_;
            advance();
            std::string text = t.text;
            if (is_op("/")) {
                advance();
                if (cur_.kind != Token::Kind::Num)
                    throw ParseError(file_, cur_.line, cur_.col, "expected denominator");
                text += "/" + cur_.text;
                advance();
            }
            return PolyExpr{PolyExpr::Kind::Num, text, 0, t.line, t.col, {}};
        }
        if (cur_.kind == Token::Kind::Ident) {
            Token t = cur_;
            advance();
            return PolyExpr{PolyExpr::Kind::Gen, t.text, 0, t.line, t.col, {}};
        }
        if (is_op("(")) {
            advance();
            PolyExpr e = expr();
            if (!is_op(")"))
                throw ParseError(file_, cur_.line, cur_.col, "expected ')'");
            advance();
            return e;
        }
        throw ParseError(file_, cur_.line, cur_.col,
                         cur_.kind == Token::Kind::End ? "unexpected end of expression"
                                                       : "unexpected token '" + cur_.text + "'");
    }

    ExprLexer lex_;
    Token cur_;
    std::string file_;
};

inline std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

} // namespace detail_parse

inline PresentationFile parse_presentation(const std::string& text, const std::string& filename) {
    PresentationFile out;
    out.filename = filename;
    bool field_seen = false, gens_seen = false;
    std::istringstream stream(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(stream, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto words = detail_parse::split_words(line);
        if (words.empty())
            continue;
        const std::string& head = words[0];
        int head_col = static_cast<int>(line.find(head)) + 1;
        auto rest_after = [&](const std::string& kw) {
            size_t p = line.find(kw);
            return std::string(line.substr(p + kw.size()));
        };

        if (head == "field") {
            if (field_seen)
                throw ParseError(filename, lineno, head_col, "duplicate field line");
            field_seen = true;
            if (words.size() == 2 && words[1] == "Q") {
                out.field_kind = PresentationFile::FieldKind::Q;
            } else if (words.size() == 3 && words[1] == "GF") {
                out.field_kind = PresentationFile::FieldKind::GF;
                try {
                    out.modulus = std::stoull(words[2]);
                } catch (const std::exception&) {
                    throw ParseError(filename, lineno, head_col, "bad modulus '" + words[2] + "'");
                }
            } else {
                throw ParseError(filename, lineno, head_col,
                                 "expected 'field Q' or 'field GF <p>'");
            }
        } else if (head == "gens") {
            if (gens_seen)
                throw ParseError(filename, lineno, head_col, "duplicate gens line");
            gens_seen = true;
            out.gens.assign(words.begin() + 1, words.end());
            if (out.gens.empty())
                throw ParseError(filename, lineno, head_col, "gens line lists no generators");
        } else if (head == "rel" || head == "def") {
            if (!gens_seen)
                throw ParseError(filename, lineno, head_col, "gens must precede " + head);
            std::string body = rest_after(head);
            int col0 = static_cast<int>(line.find(head)) + static_cast<int>(head.size()) + 1;
            size_t start = 0;
            while (start <= body.size()) {
                size_t semi = body.find(';', start);
                std::string piece =
                    body.substr(start, semi == std::string::npos ? std::string::npos
                                                                 : semi - start);
                bool blank = piece.find_first_not_of(" \t\r") == std::string::npos;
                if (!blank) {
                    detail_parse::ExprParser p(piece, filename, lineno,
                                               col0 + static_cast<int>(start));
                    (head == "rel" ? out.rels : out.defs).push_back(p.parse());
                }
                if (semi == std::string::npos)
                    break;
                start = semi + 1;
            }
        } else if (head == "base") {
            if (words.size() != 2)
                throw ParseError(filename, lineno, head_col, "expected 'base <path>'");
            out.base_path = words[1];
        } else if (head == "option") {
            if (words.size() == 3 && words[1] == "central") {
                out.central = words[2];
            } else if (words.size() == 3 && words[1] == "maxdeg") {
                try {
                    out.maxdeg = std::stoi(words[2]);
                } catch (const std::exception&) {
                    throw ParseError(filename, lineno, head_col, "bad maxdeg value");
                }
            } else {
                throw ParseError(filename, lineno, head_col,
                                 "expected 'option central <id>' or 'option maxdeg <n>'");
            }
        } else {
            throw ParseError(filename, lineno, head_col, "unknown directive '" + head + "'");
        }
    }
    if (!gens_seen)
        throw ParseError(filename, lineno, 1, "missing gens line");
    if (!out.rels.empty() && !out.defs.empty())
        throw ParseError(filename, lineno, 1, "a file may use rel lines or def lines, not both");
    return out;
}

inline PresentationFile parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), path);
}

template <class F>
NCPoly<typename F::Scalar> lower_poly(const PolyExpr& e, const Alphabet& alpha, const F& field,
                                      const std::string& filename) {
    using K = typename F::Scalar;
    switch (e.kind) {
    case PolyExpr::Kind::Num:
        return NCPoly<K>::term(field.from_literal(e.text), Word{});
    case PolyExpr::Kind::Gen: {
        auto idx = alpha.index_of(e.text);
        if (!idx)
            throw ParseError(filename, e.line, e.col, "unknown generator '" + e.text + "'");
        return NCPoly<K>::word(Word{*idx}, field(1));
    }
    case PolyExpr::Kind::Add:
        return lower_poly(e.args[0], alpha, field, filename) +
               lower_poly(e.args[1], alpha, field, filename);
    case PolyExpr::Kind::Sub:
        return lower_poly(e.args[0], alpha, field, filename) -
               lower_poly(e.args[1], alpha, field, filename);
    case PolyExpr::Kind::Neg:
        return -lower_poly(e.args[0], alpha, field, filename);
    case PolyExpr::Kind::Mul:
        return lower_poly(e.args[0], alpha, field, filename) *
               lower_poly(e.args[1], alpha, field, filename);
    case PolyExpr::Kind::Pow: {
        NCPoly<K> base = lower_poly(e.args[0], alpha, field, filename);
        NCPoly<K> acc = NCPoly<K>::term(field(1), Word{});
        for (int i = 0; i < e.exponent; ++i)
            acc = acc * base;
        return acc;
    }
    }
    throw std::logic_error("internal error: unhandled expression kind");
}

template <class F>
std::vector<NCPoly<typename F::Scalar>> lower_polys(const std::vector<PolyExpr>& es,
                                                    const Alphabet& alpha, const F& field,
                                                    const std::string& filename) {
    std::vector<NCPoly<typename F::Scalar>> out;
    for (const auto& e : es)
        out.push_back(lower_poly(e, alpha, field, filename));
    return out;
}

/// Render an algebra presentation in the input grammar (print-then-parse
/// identity). Used both for reports and the central-extension export.
template <class K>
std::string render_presentation(const std::string& field_name, const Alphabet& alpha,
                                const std::vector<NCPoly<K>>& rels, bool deformation) {
    std::string out = "field " + field_name + "\ngens";
    for (const auto& n : alpha.names())
        out += " " + n;
    out += "\n";
    for (const auto& r : rels)
        out += std::string(deformation ? "def " : "rel ") + poly_str(r, alpha) + "\n";
    return out;
}

} // namespace pbw
