#pragma once

#include "polycert/natural.hpp"
#include "polycert/types.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace polycert {

class PolyExpr;

/// Arithmetic over the naturals, independent of any particular base type.
class BasePoly {
public:
    enum class Kind { Const, Plus, Mult, FromPoly };

    static BasePoly constant(Natural value);
    static BasePoly plus(BasePoly a, BasePoly b);
    static BasePoly mult(BasePoly a, BasePoly b);
    /// Embeds a polynomial of some base type.
    static BasePoly from_poly(PolyExpr p);

    Kind kind() const;
    const Natural& value() const;  // Const
    const BasePoly& left() const;  // Plus, Mult
    const BasePoly& right() const; // Plus, Mult
    const PolyExpr& poly() const;  // FromPoly

    std::string to_string() const;

private:
    struct Node;
    explicit BasePoly(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Typed higher-order polynomial: variables (de Bruijn), application,
/// abstraction, and base polynomials injected at a named base type.
class PolyExpr {
public:
    enum class Kind { FromBase, Var, App, Lam };

    static PolyExpr from_base(BasePoly body, SimpleType base_type);
    static PolyExpr var(std::size_t index);
    static PolyExpr app(PolyExpr function, PolyExpr argument);
    static PolyExpr lam(SimpleType binder, PolyExpr body);

    Kind kind() const;
    const BasePoly& base() const;        // FromBase
    const SimpleType& type() const;      // FromBase: the base type; Lam: the binder
    std::size_t index() const;           // Var
    const PolyExpr& function() const;    // App
    const PolyExpr& argument() const;    // App
    const PolyExpr& body() const;        // Lam

    std::string to_string() const;

private:
    struct Node;
    explicit PolyExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Type of `p` over `ctx`; throws SemanticError(IllTyped) on failure.
SimpleType infer_poly_type(const Context& ctx, const PolyExpr& p);

}  // namespace polycert
