#include "crossprod/expr.hpp"

#include <cctype>

namespace crossprod {

namespace {

constexpr std::string_view kCompose = "\xE2\x88\x98";  // ∘
constexpr std::string_view kTensor = "\xE2\x8A\x97";   // ⊗

struct Token {
    enum class Kind { ident, compose, tensor, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t begin;
    std::size_t end;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Kind::end: return "end of input";
        case Token::Kind::ident: return "identifier '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

bool starts_operator(std::string_view rest) { return rest.starts_with(kCompose) || rest.starts_with(kTensor); }

bool ident_start(std::string_view rest) {
    const auto c = static_cast<unsigned char>(rest.front());
    return std::isalpha(c) || c == '_' || (c >= 0x80 && !starts_operator(rest));
}

bool ident_continue(std::string_view rest) {
    const auto c = static_cast<unsigned char>(rest.front());
    return std::isalnum(c) || c == '_' || c == '.' || c == '\'' || c == '-' || c == '^' || c == '[' || c == ']' ||
           (c >= 0x80 && !starts_operator(rest));
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < src.size()) {
        const std::string_view rest = src.substr(i);
        const char c = rest.front();
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (rest.starts_with(kCompose)) {
            tokens.push_back({Token::Kind::compose, std::string(kCompose), i, i + kCompose.size()});
            i += kCompose.size();
        } else if (rest.starts_with(kTensor)) {
            tokens.push_back({Token::Kind::tensor, std::string(kTensor), i, i + kTensor.size()});
            i += kTensor.size();
        } else if (rest.starts_with("(x)")) {
            tokens.push_back({Token::Kind::tensor, "(x)", i, i + 3});
            i += 3;
        } else if (c == '(') {
            tokens.push_back({Token::Kind::lparen, "(", i, i + 1});
            ++i;
        } else if (c == ')') {
            tokens.push_back({Token::Kind::rparen, ")", i, i + 1});
            ++i;
        } else if (ident_start(rest)) {
            std::size_t j = i + 1;
            while (j < src.size() && ident_continue(src.substr(j))) ++j;
            std::string text(src.substr(i, j - i));
            const auto kind = text == "o" ? Token::Kind::compose : Token::Kind::ident;
            tokens.push_back({kind, std::move(text), i, j});
            i = j;
        } else {
            throw ParseError(i, {"identifier", "(", ")", "∘", "⊗"},
                             "parse error at byte " + std::to_string(i) + ": unexpected character '" +
                                 std::string(1, c) + "'");
        }
    }
    tokens.push_back({Token::Kind::end, "", src.size(), src.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    MapExpr parse_all() {
        MapExpr e = expr();
        if (peek().kind != Token::Kind::end) fail({"∘", "⊗", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& t = peek();
        std::string msg = "parse error at byte " + std::to_string(t.begin) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? " or " : "") + expected[i];
        msg += ", found " + describe(t);
        throw ParseError(t.begin, std::move(expected), msg);
    }

    // Right-associated fold of operands joined by `op`.
    template <class Operand>
    MapExpr chain(Token::Kind op, Operand operand, MapExpr (*make)(MapExpr, MapExpr, SourceSpan)) {
        std::vector<MapExpr> items{operand()};
        while (peek().kind == op) {
            next();
            items.push_back(operand());
        }
        MapExpr out = std::move(items.back());
        for (std::size_t i = items.size() - 1; i-- > 0;) {
            SourceSpan span{items[i].span.begin, out.span.end};
            out = make(std::move(items[i]), std::move(out), span);
        }
        return out;
    }

    MapExpr expr() {
        return chain(Token::Kind::compose, [this] { return term(); }, &MapExpr::make_compose);
    }

    MapExpr term() {
        return chain(Token::Kind::tensor, [this] { return factor(); }, &MapExpr::make_tensor);
    }

    MapExpr factor() {
        const Token& t = peek();
        if (t.kind == Token::Kind::ident) {
            next();
            SourceSpan span{t.begin, t.end};
            if (t.text.starts_with("id_") && t.text.size() > 3) return MapExpr::make_id(t.text.substr(3), span);
            return MapExpr::make_name(t.text, span);
        }
        if (t.kind == Token::Kind::lparen) {
            const std::size_t open = t.begin;
            next();
            MapExpr inner = expr();
            if (peek().kind != Token::Kind::rparen) fail({")", "∘", "⊗"});
            inner.span = SourceSpan{open, next().end};
            return inner;
        }
        fail({"identifier", "("});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void print(const MapExpr& e, std::string& out) {
    auto wrapped = [&out](const MapExpr& child, bool parens) {
        if (parens) out += "(";
        print(child, out);
        if (parens) out += ")";
    };
    using K = MapExpr::Kind;
    switch (e.kind) {
        case K::name: out += e.ident; break;
        case K::id: out += "id_" + e.ident; break;
        case K::tensor:
            wrapped(e.children[0], e.children[0].kind == K::tensor || e.children[0].kind == K::compose);
            out += kTensor;
            wrapped(e.children[1], e.children[1].kind == K::compose);
            break;
        case K::compose:
            wrapped(e.children[0], e.children[0].kind == K::tensor || e.children[0].kind == K::compose);
            out += " ∘ ";
            wrapped(e.children[1], e.children[1].kind == K::tensor);
            break;
    }
}

}  // namespace

MapExpr MapExpr::make_name(std::string ident, SourceSpan span) { return MapExpr{Kind::name, std::move(ident), {}, span}; }

MapExpr MapExpr::make_id(std::string space, SourceSpan span) { return MapExpr{Kind::id, std::move(space), {}, span}; }

MapExpr MapExpr::make_tensor(MapExpr left, MapExpr right, SourceSpan span) {
    MapExpr e{Kind::tensor, {}, {}, span};
    e.children.push_back(std::move(left));
    e.children.push_back(std::move(right));
    return e;
}

MapExpr MapExpr::make_compose(MapExpr left, MapExpr right, SourceSpan span) {
    MapExpr e{Kind::compose, {}, {}, span};
    e.children.push_back(std::move(left));
    e.children.push_back(std::move(right));
    return e;
}

bool operator==(const MapExpr& a, const MapExpr& b) {
    return a.kind == b.kind && a.ident == b.ident && a.children == b.children;
}

MapExpr parse(std::string_view src) { return Parser(src).parse_all(); }

std::string pretty(const MapExpr& e) {
    std::string out;
    print(e, out);
    return out;
}

void Env::bind(const std::string& name, MultiLinMap map) { bindings_.insert_or_assign(name, std::move(map)); }

void Env::add_space(const std::string& name, Space space) { spaces_.insert_or_assign(name, std::move(space)); }

const MultiLinMap* Env::lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
}

const Space* Env::space(const std::string& name) const {
    auto it = spaces_.find(name);
    return it == spaces_.end() ? nullptr : &it->second;
}

MultiLinMap eval(const MapExpr& e, const Env& env) {
    switch (e.kind) {
        case MapExpr::Kind::name:
            if (const auto* f = env.lookup(e.ident)) return *f;
            throw UnboundName(e.ident, e.span);
        case MapExpr::Kind::id:
            if (const auto* s = env.space(e.ident)) return MultiLinMap::identity(*s);
            throw UnboundName("id_" + e.ident, e.span);
        case MapExpr::Kind::tensor:
            return kron(eval(e.children[0], env), eval(e.children[1], env));
        case MapExpr::Kind::compose: {
            const auto f = eval(e.children[0], env);
            const auto g = eval(e.children[1], env);
            if (f.cols() != g.rows()) {
                throw ExprDimensionMismatch(e.span, "cannot compose at bytes " + std::to_string(e.span.begin) + ".." +
                                                        std::to_string(e.span.end) + ": left side takes dimension " +
                                                        std::to_string(f.cols()) + ", right side yields " +
                                                        std::to_string(g.rows()));
            }
            return compose(f, g);
        }
    }
    throw Error("malformed expression");
}

MultiLinMap eval(std::string_view src, const Env& env) { return eval(parse(src), env); }

}  // namespace crossprod
