#include "polycert/poly_expr.hpp"

#include "polycert/error.hpp"

#include <optional>

namespace polycert {

struct BasePoly::Node {
    Kind kind;
    Natural value;
    std::optional<BasePoly> left;
    std::optional<BasePoly> right;
    std::optional<PolyExpr> poly;
};

BasePoly BasePoly::constant(Natural value) {
    return BasePoly(std::make_shared<const Node>(Node{Kind::Const, std::move(value), {}, {}, {}}));
}
BasePoly BasePoly::plus(BasePoly a, BasePoly b) {
    return BasePoly(std::make_shared<const Node>(Node{Kind::Plus, 0, std::move(a), std::move(b), {}}));
}
BasePoly BasePoly::mult(BasePoly a, BasePoly b) {
    return BasePoly(std::make_shared<const Node>(Node{Kind::Mult, 0, std::move(a), std::move(b), {}}));
}
BasePoly BasePoly::from_poly(PolyExpr p) {
    return BasePoly(std::make_shared<const Node>(Node{Kind::FromPoly, 0, {}, {}, std::move(p)}));
}

BasePoly::Kind BasePoly::kind() const { return node_->kind; }
const Natural& BasePoly::value() const { return node_->value; }
const BasePoly& BasePoly::left() const { return *node_->left; }
const BasePoly& BasePoly::right() const { return *node_->right; }
const PolyExpr& BasePoly::poly() const { return *node_->poly; }

std::string BasePoly::to_string() const {
    switch (kind()) {
    case Kind::Const: return value().str();
    case Kind::Plus: return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::Mult: return "(" + left().to_string() + " * " + right().to_string() + ")";
    case Kind::FromPoly: return poly().to_string();
    }
    return {};
}

struct PolyExpr::Node {
    Kind kind;
    std::optional<BasePoly> base;
    std::optional<SimpleType> type;
    std::size_t index = 0;
    std::optional<PolyExpr> left;
    std::optional<PolyExpr> right;
};

PolyExpr PolyExpr::from_base(BasePoly body, SimpleType base_type) {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::FromBase, std::move(body), std::move(base_type), 0, {}, {}}));
}
PolyExpr PolyExpr::var(std::size_t index) {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::Var, {}, {}, index, {}, {}}));
}
PolyExpr PolyExpr::app(PolyExpr function, PolyExpr argument) {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::App, {}, {}, 0, std::move(function), std::move(argument)}));
}
PolyExpr PolyExpr::lam(SimpleType binder, PolyExpr body) {
    return PolyExpr(std::make_shared<const Node>(Node{Kind::Lam, {}, std::move(binder), 0, std::move(body), {}}));
}

PolyExpr::Kind PolyExpr::kind() const { return node_->kind; }
const BasePoly& PolyExpr::base() const { return *node_->base; }
const SimpleType& PolyExpr::type() const { return *node_->type; }
std::size_t PolyExpr::index() const { return node_->index; }
const PolyExpr& PolyExpr::function() const { return *node_->left; }
const PolyExpr& PolyExpr::argument() const { return *node_->right; }
const PolyExpr& PolyExpr::body() const { return *node_->left; }

std::string PolyExpr::to_string() const {
    switch (kind()) {
    case Kind::FromBase: return base().to_string();
    case Kind::Var: return "#" + std::to_string(index());
    case Kind::App: return function().to_string() + "(" + argument().to_string() + ")";
    case Kind::Lam: return "(Lam:" + type().to_string() + ". " + body().to_string() + ")";
    }
    return {};
}

namespace {

void check_base(const Context& ctx, const BasePoly& b) {
    switch (b.kind()) {
    case BasePoly::Kind::Const: return;
    case BasePoly::Kind::Plus:
    case BasePoly::Kind::Mult:
        check_base(ctx, b.left());
        check_base(ctx, b.right());
        return;
    case BasePoly::Kind::FromPoly:
        if (!infer_poly_type(ctx, b.poly()).is_base())
            throw SemanticError(SemanticError::Kind::IllTyped, "embedded polynomial is not of base type");
        return;
    }
}

}  // namespace

SimpleType infer_poly_type(const Context& ctx, const PolyExpr& p) {
    switch (p.kind()) {
    case PolyExpr::Kind::FromBase:
        if (!p.type().is_base())
            throw SemanticError(SemanticError::Kind::IllTyped, "base polynomial annotated with arrow type");
        check_base(ctx, p.base());
        return p.type();
    case PolyExpr::Kind::Var:
        if (p.index() >= ctx.size())
            throw SemanticError(SemanticError::Kind::IllTyped, "unbound polynomial variable #" + std::to_string(p.index()));
        return ctx.at_index(p.index());
    case PolyExpr::Kind::App: {
        SimpleType fun = infer_poly_type(ctx, p.function());
        SimpleType arg = infer_poly_type(ctx, p.argument());
        if (fun.is_base() || fun.domain() != arg)
            throw SemanticError(SemanticError::Kind::IllTyped,
                                "polynomial application of " + fun.to_string() + " to " + arg.to_string());
        return fun.codomain();
    }
    case PolyExpr::Kind::Lam:
        return SimpleType::arrow(p.type(), infer_poly_type(ctx.extended(p.type()), p.body()));
    }
    throw SemanticError(SemanticError::Kind::IllTyped, "unreachable");
}

}  // namespace polycert
