#include "segre/parser.hpp"

#include <cctype>
#include <map>

namespace segre {

namespace {

struct Token {
    enum Kind { Ident, Int, Sym, End } kind = End;
    std::string text;
    long long value = 0;  // Int
    int line = 1, col = 1;
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }
    const std::string& source() const { return text_; }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
        tok_ = {};
        tok_.line = line_;
        tok_.col = col_;
        tok_.pos = pos_;
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok_.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                tok_.text += text_[pos_];
                bump();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Int;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                tok_.text += text_[pos_];
                bump();
            }
            tok_.value = std::stoll(tok_.text);
        } else if (std::string("{}=;+-*/^().,:").find(c) != std::string::npos) {
            tok_.kind = Token::Sym;
            tok_.text = std::string(1, c);
            bump();
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'",
                             line_, col_);
        }
    }
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg + (t.kind == Token::End
                                ? " at end of input"
                                : " at '" + t.text + "'"),
                     t.line, t.col);
}

bool isSym(const Token& t, char c) {
    return t.kind == Token::Sym && t.text[0] == c;
}

Token expectSym(Lexer& lx, char c) {
    if (!isSym(lx.peek(), c))
        fail(lx.peek(), std::string("expected '") + c + "'");
    return lx.next();
}

Token expectIdent(Lexer& lx) {
    if (lx.peek().kind != Token::Ident) fail(lx.peek(), "expected identifier");
    return lx.next();
}

long long expectInt(Lexer& lx) {
    if (lx.peek().kind != Token::Int) fail(lx.peek(), "expected integer");
    return lx.next().value;
}

std::optional<Elementary> elementaryByName(const std::string& name) {
    if (name == "exp") return Elementary::Exp;
    if (name == "sin") return Elementary::Sin;
    if (name == "cos") return Elementary::Cos;
    if (name == "log1p") return Elementary::Log1p;
    return std::nullopt;
}

class ExprParser {
public:
    ExprParser(Lexer& lx, const VarSpace& sp, int order, bool imwMode)
        : lx_(lx), sp_(sp), order_(order), imw_(imwMode) {}

    Series parse() { return sum(); }

private:
    Series sum() {
        Series acc = product();
        while (isSym(lx_.peek(), '+') || isSym(lx_.peek(), '-')) {
            bool plus = lx_.next().text[0] == '+';
            Series rhs = product();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Series product() {
        Series acc = unary();
        while (isSym(lx_.peek(), '*') || isSym(lx_.peek(), '/')) {
            Token op = lx_.next();
            Series rhs = unary();
            if (op.text[0] == '*') {
                acc = acc * rhs;
            } else {
                if (rhs.constantTerm().isZero())
                    fail(op, "division requires a unit denominator");
                acc = acc * rhs.invertUnit();
            }
        }
        return acc;
    }

    Series unary() {
        if (isSym(lx_.peek(), '-')) {
            lx_.next();
            return -unary();
        }
        if (isSym(lx_.peek(), '+')) {
            lx_.next();
            return unary();
        }
        return power();
    }

    Series power() {
        Series base = primary();
        while (isSym(lx_.peek(), '^')) {
            Token caret = lx_.next();
            if (lx_.peek().kind != Token::Int)
                fail(caret, "expected an integer exponent after '^'");
            base = base.pow(static_cast<int>(expectInt(lx_)));
        }
        return base;
    }

    Series primary() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Int) {
            long long v = lx_.next().value;
            return Series::constant(sp_, order_, GaussianRational(v));
        }
        if (isSym(t, '(')) {
            lx_.next();
            Series inner = sum();
            expectSym(lx_, ')');
            return inner;
        }
        if (t.kind == Token::Ident) {
            Token name = lx_.next();
            if (name.text == "i")
                return Series::constant(sp_, order_, GaussianRational::i());
            if (auto fn = elementaryByName(name.text)) {
                expectSym(lx_, '(');
                Series arg = sum();
                Token close = expectSym(lx_, ')');
                try {
                    return elementary(*fn, arg);
                } catch (const std::domain_error& e) {
                    fail(close, e.what());
                }
            }
            int idx = variableIndex(name);
            return Series::variable(sp_, order_, idx);
        }
        fail(t, "expected an expression");
    }

    int variableIndex(const Token& name) {
        if (imw_) {
            if (name.text == "s") return sp_.w();
            if (name.text == "w" || name.text == "tau")
                fail(name, "imw expressions use z, chi and s only");
        }
        int idx = sp_.indexOf(name.text);
        if (idx < 0)
            fail(name, "unknown variable '" + name.text +
                           "' for CR dimension " + std::to_string(sp_.n));
        return idx;
    }

    Lexer& lx_;
    const VarSpace& sp_;
    int order_;
    bool imw_;
};

int parseDimension(Lexer& lx) {
    Token t = expectIdent(lx);
    if (t.text != "n") fail(t, "expected 'n = <int>;' first");
    expectSym(lx, '=');
    long long n = expectInt(lx);
    expectSym(lx, ';');
    if (n < 1) fail(t, "CR dimension must be >= 1");
    return static_cast<int>(n);
}

HypersurfaceDecl parseHypersurface(Lexer& lx, int order) {
    Token nameTok = expectIdent(lx);
    expectSym(lx, '{');
    VarSpace sp{parseDimension(lx)};
    Token kind = expectIdent(lx);
    if (kind.text != "Q" && kind.text != "imw")
        fail(kind, "expected 'Q = <expr>;' or 'imw = <expr>;'");
    expectSym(lx, '=');
    ExprParser ep(lx, sp, order, /*imwMode=*/kind.text == "imw");
    Series expr = ep.parse();
    expectSym(lx, ';');
    expectSym(lx, '}');
    try {
        if (kind.text == "Q")
            return {nameTok.text, NormalHypersurface(sp.n, expr), std::nullopt};
        RealDefiningFunction phi(sp.n, expr);
        return {nameTok.text, complexify(phi), phi};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("hypersurface ") + nameTok.text + ": " +
                             e.what(),
                         nameTok.line, nameTok.col);
    }
}

MapDecl parseMap(Lexer& lx, int order) {
    Token nameTok = expectIdent(lx);
    expectSym(lx, '{');
    VarSpace sp{parseDimension(lx)};
    std::map<std::string, Series> comps;
    while (!isSym(lx.peek(), '}')) {
        Token key = expectIdent(lx);
        expectSym(lx, '=');
        ExprParser ep(lx, sp, order, /*imwMode=*/false);
        Series expr = ep.parse();
        expectSym(lx, ';');
        if (!comps.emplace(key.text, std::move(expr)).second)
            fail(key, "duplicate component '" + key.text + "'");
    }
    Token close = lx.next();  // '}'
    auto take = [&](const std::string& key,
                    const std::string& alias) -> Series {
        auto it = comps.find(key);
        if (it == comps.end() && !alias.empty()) it = comps.find(alias);
        if (it == comps.end())
            fail(close, "map " + nameTok.text + " is missing component '" +
                            key + "'");
        return it->second;
    };
    std::vector<Series> f, ft;
    for (int j = 1; j <= sp.n; ++j) {
        f.push_back(take("f" + std::to_string(j), sp.n == 1 ? "f" : ""));
        ft.push_back(take("ft" + std::to_string(j), sp.n == 1 ? "ft" : ""));
    }
    Series g = take("g", "");
    Series gt = take("gt", "");
    try {
        return {nameTok.text, SegreMap(sp.n, std::move(f), std::move(g),
                                       std::move(ft), std::move(gt))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("map ") + nameTok.text + ": " + e.what(),
                         nameTok.line, nameTok.col);
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Expectation parseExpect(Lexer& lx) {
    Expectation ex;
    Token first = expectIdent(lx);
    ex.key = first.text;
    ex.line = first.line;
    while (isSym(lx.peek(), '.') || isSym(lx.peek(), '-')) {
        std::string sep = lx.next().text;
        ex.key += sep + expectIdent(lx).text;
    }
    expectSym(lx, '=');
    size_t start = lx.peek().pos;
    size_t end = start;
    while (!isSym(lx.peek(), ';')) {
        if (lx.peek().kind == Token::End)
            fail(lx.peek(), "unterminated expect value");
        Token t = lx.next();
        end = t.pos + t.text.size();
    }
    lx.next();  // ';'
    ex.value = trim(lx.source().substr(start, end - start));
    if (ex.value.empty()) fail(lx.peek(), "empty expect value");
    return ex;
}

}  // namespace

ParsedFile parseFile(const std::string& text, std::optional<int> overrideOrder) {
    Lexer lx(text);
    // First pass requirement: the order directive may appear before any
    // declaration; default 10.
    ParsedFile out;
    bool sawDecl = false;
    while (lx.peek().kind != Token::End) {
        Token head = expectIdent(lx);
        if (head.text == "order") {
            if (sawDecl)
                fail(head, "'order' must precede all declarations");
            long long k = expectInt(lx);
            expectSym(lx, ';');
            if (k < 1) fail(head, "order must be >= 1");
            out.order = static_cast<int>(k);
        } else if (head.text == "hypersurface") {
            sawDecl = true;
            out.hypersurfaces.push_back(
                parseHypersurface(lx, overrideOrder.value_or(out.order)));
        } else if (head.text == "map") {
            sawDecl = true;
            out.maps.push_back(parseMap(lx, overrideOrder.value_or(out.order)));
        } else if (head.text == "expect") {
            sawDecl = true;
            out.expectations.push_back(parseExpect(lx));
        } else {
            fail(head, "expected 'order', 'hypersurface', 'map' or 'expect'");
        }
    }
    if (overrideOrder) out.order = *overrideOrder;
    return out;
}

Series parseExpression(const std::string& text, const VarSpace& space,
                       int order) {
    Lexer lx(text);
    ExprParser ep(lx, space, order, /*imwMode=*/false);
    Series s = ep.parse();
    if (lx.peek().kind != Token::End) fail(lx.peek(), "trailing input");
    return s;
}

Series parseImwExpression(const std::string& text, const VarSpace& space,
                          int order) {
    Lexer lx(text);
    ExprParser ep(lx, space, order, /*imwMode=*/true);
    Series s = ep.parse();
    if (lx.peek().kind != Token::End) fail(lx.peek(), "trailing input");
    return s;
}

}  // namespace segre
