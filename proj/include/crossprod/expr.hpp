#pragma once

// A small language for composites of maps, e.g.
//
//     (μ⊗id_V)∘(id_A⊗σ)∘(R⊗id_V)
//     (mu (x) id_V) o (id_A (x) sigma) o (R (x) id_V)
//
// Grammar:
//     expr   := term (('∘' | 'o') term)*
//     term   := factor (('⊗' | '(x)') factor)*
//     factor := IDENT | '(' expr ')'
//
// '⊗' binds tighter than '∘'. Chains of either operator are stored
// right-associated. "id_X" denotes the identity of the space bound as X.
// Identifiers may contain letters, digits, non-ASCII characters and _ . ' - ^ [ ]
// after the first character, so names such as id_k[C2] are accepted.
// The three-byte sequence "(x)" is always the tensor operator, so a
// parenthesized identifier named x must be written with spaces: "( x )".

#include "crossprod/errors.hpp"
#include "crossprod/linalg.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace crossprod {

struct MapExpr {
    enum class Kind { name, id, tensor, compose };

    Kind kind = Kind::name;
    // Identifier for name, space name for id; empty otherwise.
    std::string ident;
    // Two children for tensor and compose.
    std::vector<MapExpr> children;
    SourceSpan span;

    static MapExpr make_name(std::string ident, SourceSpan span = {});
    static MapExpr make_id(std::string space, SourceSpan span = {});
    static MapExpr make_tensor(MapExpr left, MapExpr right, SourceSpan span = {});
    static MapExpr make_compose(MapExpr left, MapExpr right, SourceSpan span = {});

    // Structural equality; spans are ignored.
    friend bool operator==(const MapExpr& a, const MapExpr& b);
};

// Throws ParseError with the byte offset of the offending token.
MapExpr parse(std::string_view src);

// Unicode operators, parentheses around tensor operands of '∘' and around
// any left-nested chain.
std::string pretty(const MapExpr& e);

class Env {
public:
    void bind(const std::string& name, MultiLinMap map);
    void add_space(const std::string& name, Space space);

    const MultiLinMap* lookup(const std::string& name) const;
    const Space* space(const std::string& name) const;

private:
    std::map<std::string, MultiLinMap> bindings_;
    std::map<std::string, Space> spaces_;
};

// Tensor → kron, compose → compose, id_X → identity. Throws UnboundName or
// ExprDimensionMismatch carrying the span of the offending subexpression.
MultiLinMap eval(const MapExpr& e, const Env& env);
MultiLinMap eval(std::string_view src, const Env& env);

}  // namespace crossprod
