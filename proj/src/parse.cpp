#include "jmod/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace jmod {

bool operator==(const Expression& x, const Expression& y) {
    if (x.product != y.product) return false;
    if (x.declarations.size() != y.declarations.size()) return false;
    for (std::size_t i = 0; i < x.declarations.size(); ++i)
        if (x.declarations[i].id != y.declarations[i].id ||
            x.declarations[i].dim != y.declarations[i].dim)
            return false;
    return true;
}

namespace {

struct Token {
    enum Kind { Ident, Int, Colon, Star, LBracket, RBracket, At, DotDot, End } kind;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    // Either a Token or a Diagnostic.
    std::variant<Token, Diagnostic> next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return Token{Token::End, "", 0, line, col};
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                id += advance();
            return Token{Token::Ident, id, 0, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::string text;
            if (c == '-') text += advance();
            if (pos_ >= src_.size() ||
                !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                return Diagnostic{"MALFORMED_INT", "expected digits after '-'", line, col};
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                text += advance();
            try {
                long long v = std::stoll(text);
                return Token{Token::Int, text, v, line, col};
            } catch (const std::out_of_range&) {
                return Diagnostic{"MALFORMED_INT", "integer out of range: " + text,
                                  line, col};
            }
        }
        switch (c) {
            case ':': advance(); return Token{Token::Colon, ":", 0, line, col};
            case '*': advance(); return Token{Token::Star, "*", 0, line, col};
            case '[': advance(); return Token{Token::LBracket, "[", 0, line, col};
            case ']': advance(); return Token{Token::RBracket, "]", 0, line, col};
            case '@': advance(); return Token{Token::At, "@", 0, line, col};
            case '.':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
                    advance();
                    advance();
                    return Token{Token::DotDot, "..", 0, line, col};
                }
                return Diagnostic{"SYNTAX", "stray '.'", line, col};
            default:
                return Diagnostic{"SYNTAX", std::string("unexpected character '") + c + "'",
                                  line, col};
        }
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    ParseResult run() {
        if (auto d = bump()) return *d;
        Expression e;
        while (cur_.kind == Token::Ident && cur_.text == "let") {
            if (auto d = declaration(e)) return *d;
        }
        if (auto d = segment(e)) return *d;
        while (cur_.kind == Token::Star) {
            if (auto d = bump()) return *d;
            if (auto d = segment(e)) return *d;
        }
        if (cur_.kind != Token::End)
            return err("SYNTAX", "unexpected trailing input");
        std::sort(e.declarations.begin(), e.declarations.end(),
                  [](const CuspidalLine& x, const CuspidalLine& y) {
                      return x.id < y.id;
                  });
        return e;
    }

private:
    Diagnostic err(std::string code, std::string msg) const {
        return Diagnostic{std::move(code), std::move(msg), cur_.line, cur_.column};
    }

    // Returns a diagnostic on lexer failure.
    std::optional<Diagnostic> bump() {
        auto r = lex_.next();
        if (auto* d = std::get_if<Diagnostic>(&r)) return *d;
        cur_ = std::get<Token>(r);
        return std::nullopt;
    }

    std::optional<Diagnostic> expect(Token::Kind kind, const char* what) {
        if (cur_.kind != kind) return err("SYNTAX", std::string("expected ") + what);
        return bump();
    }

    std::optional<Diagnostic> declaration(Expression& e) {
        if (auto d = bump()) return d;  // consume 'let'
        if (cur_.kind != Token::Ident) return err("SYNTAX", "expected line id");
        std::string id = cur_.text;
        int dline = cur_.line, dcol = cur_.column;
        if (auto d = bump()) return d;
        if (auto d = expect(Token::Colon, "':'")) return d;
        if (cur_.kind != Token::Int) return err("SYNTAX", "expected dimension");
        long long dim = cur_.value;
        if (dim < 1)
            return Diagnostic{"BAD_DIM", "dimension must be >= 1", cur_.line,
                              cur_.column};
        if (auto d = bump()) return d;
        for (const auto& decl : e.declarations)
            if (decl.id == id)
                return Diagnostic{"DUPLICATE_LINE", "line '" + id + "' already declared",
                                  dline, dcol};
        e.declarations.push_back(CuspidalLine{id, static_cast<int>(dim)});
        return std::nullopt;
    }

    std::optional<Diagnostic> segment(Expression& e) {
        if (cur_.kind != Token::Ident || cur_.text != "Z")
            return err("SYNTAX", "expected segment literal 'Z[a..b]@line'");
        if (auto d = bump()) return d;
        if (auto d = expect(Token::LBracket, "'['")) return d;
        if (cur_.kind != Token::Int) return err("SYNTAX", "expected integer exponent");
        long long a = cur_.value;
        if (auto d = bump()) return d;
        if (auto d = expect(Token::DotDot, "'..'")) return d;
        if (cur_.kind != Token::Int) return err("SYNTAX", "expected integer exponent");
        long long b = cur_.value;
        int bline = cur_.line, bcol = cur_.column;
        if (auto d = bump()) return d;
        if (a > b)
            return Diagnostic{"A_GT_B",
                              "segment bounds reversed: " + std::to_string(a) + " > " +
                                  std::to_string(b),
                              bline, bcol};
        if (auto d = expect(Token::RBracket, "']'")) return d;
        if (auto d = expect(Token::At, "'@'")) return d;
        if (cur_.kind != Token::Ident) return err("SYNTAX", "expected line id");
        std::string id = cur_.text;
        int iline = cur_.line, icol = cur_.column;
        if (auto d = bump()) return d;
        const CuspidalLine* decl = nullptr;
        for (const auto& c : e.declarations)
            if (c.id == id) decl = &c;
        if (!decl)
            return Diagnostic{"UNKNOWN_LINE", "line '" + id + "' was not declared",
                              iline, icol};
        e.product.push_back(Segment{decl->id, decl->dim, static_cast<int>(a),
                                    static_cast<int>(b)});
        return std::nullopt;
    }

    Lexer lex_;
    Token cur_{Token::End, "", 0, 1, 1};
};

}  // namespace

ParseResult parse(std::string_view input) { return Parser(input).run(); }

std::string print(const Expression& e) {
    std::ostringstream os;
    for (const auto& decl : e.declarations)
        os << "let " << decl.id << ":" << decl.dim << " ";
    for (std::size_t i = 0; i < e.product.size(); ++i) {
        if (i) os << " * ";
        const Segment& s = e.product[i];
        os << "Z[" << s.a << ".." << s.b << "]@" << s.line;
    }
    return os.str();
}

}  // namespace jmod
