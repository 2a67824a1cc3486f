#pragma once

#include "polycert/normal_poly.hpp"
#include "polycert/types.hpp"

#include <functional>
#include <memory>
#include <variant>

namespace polycert {

/// Symbolic element of the interpretation of a type: a canonical polynomial
/// at base types, a suspended (weakly monotone) function otherwise.
class Value {
public:
    using Function = std::function<Value(const Value&)>;

    static Value base(NormalPoly p);
    static Value function(Function f);

    bool is_base() const { return std::holds_alternative<NormalPoly>(rep_); }
    /// Throws SemanticError(NonBaseResult) on a function value.
    const NormalPoly& poly() const;
    /// Plain function application; throws SemanticError on a base value.
    Value operator()(const Value& x) const;

private:
    std::variant<NormalPoly, std::shared_ptr<const Function>> rep_;
};

/// 0 at base types, the constant function on the codomain's minimum otherwise.
Value minimal_element(const SimpleType& type);

/// Applies `v` to minimal elements until base type.
NormalPoly lower_value(const SimpleType& type, const Value& v);

/// Adds `n` at the base result, pointwise through function types.
Value add_nat_at_type(const SimpleType& type, const Value& v, const NormalPoly& n);

/// Interpretation of application: `f(x) + lower_value(x)`, lifted pointwise.
Value papp(const SimpleType& domain, const SimpleType& codomain, const Value& f, const Value& x);

/// The variable at `level` viewed as a value: itself at base type, otherwise
/// a curried function yielding the atom `G(args)` once fully applied.
/// Applying it to a function value throws SemanticError(UnsupportedShape).
Value neutral(std::size_t level, const SimpleType& type);

}  // namespace polycert
