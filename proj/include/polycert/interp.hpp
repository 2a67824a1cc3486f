#pragma once

#include "polycert/normal_poly.hpp"
#include "polycert/poly_expr.hpp"
#include "polycert/term.hpp"
#include "polycert/types.hpp"
#include "polycert/value.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

/// Closed polynomial for every function symbol, typed by the symbol's type.
class Interpretation {
public:
    void set(std::string symbol, PolyExpr p);
    const PolyExpr* find(const std::string& symbol) const;
    const std::map<std::string, PolyExpr>& entries() const { return entries_; }

    /// Checks totality over `sig` and that each entry is closed and has the
    /// symbol's type. Throws SemanticError(MissingBinding / IllTyped).
    void validate(const Signature& sig) const;

private:
    std::map<std::string, PolyExpr> entries_;
};

/// Evaluates `p` with `env` supplying the context, outermost first.
Value evaluate(const PolyExpr& p, const std::vector<Value>& env);

/// Canonical normal form of a base-typed polynomial over `ctx`. Throws
/// SemanticError(NonBaseResult) or SemanticError(UnsupportedShape).
NormalPoly normalize(const Context& ctx, const PolyExpr& p);

/// Context variables as neutral values, outermost first.
std::vector<Value> neutral_env(const Context& ctx);

/// Interprets terms over a signature with a fixed interpretation; symbol
/// values are computed once per instance.
class TermInterpreter {
public:
    TermInterpreter(const Signature& sig, const Interpretation& J);

    /// Value of `t` over `ctx`, with `ctx` variables read from `env`.
    Value interpret(const Context& ctx, const std::vector<Value>& env, const Term& t) const;
    Value interpret(const Context& ctx, const Term& t) const { return interpret(ctx, neutral_env(ctx), t); }

    struct State;

private:
    std::shared_ptr<const State> state_;
};

Value interpret_term(const Signature& sig, const Interpretation& J, const Context& ctx, const Term& t);

/// Rebuilds a base-typed PolyExpr over `ctx` whose normal form is `p`.
PolyExpr poly_expr_from_normal(const NormalPoly& p, const Context& ctx, const SimpleType& base_type);

/// Normal form of the body of a closed interpretation entry of type `type`,
/// over the context of its `type.arity()` parameters.
NormalPoly entry_body(const PolyExpr& entry, const SimpleType& type);

/// Same symbols with semantically identical (normal-form equal) entries.
bool equivalent(const Interpretation& a, const Interpretation& b, const Signature& sig);

}  // namespace polycert
