#include "polycert/value.hpp"

#include "polycert/error.hpp"

#include <utility>
#include <vector>

namespace polycert {

Value Value::base(NormalPoly p) {
    Value v;
    v.rep_ = std::move(p);
    return v;
}

Value Value::function(Function f) {
    Value v;
    v.rep_ = std::make_shared<const Function>(std::move(f));
    return v;
}

const NormalPoly& Value::poly() const {
    if (!is_base()) throw SemanticError(SemanticError::Kind::NonBaseResult, "expected a base value, got a function");
    return std::get<NormalPoly>(rep_);
}

Value Value::operator()(const Value& x) const {
    if (is_base()) throw SemanticError(SemanticError::Kind::IllTyped, "cannot apply a base value");
    return (*std::get<std::shared_ptr<const Function>>(rep_))(x);
}

Value minimal_element(const SimpleType& type) {
    if (type.is_base()) return Value::base(NormalPoly{});
    Value inner = minimal_element(type.codomain());
    return Value::function([inner](const Value&) { return inner; });
}

NormalPoly lower_value(const SimpleType& type, const Value& v) {
    if (type.is_base()) return v.poly();
    return lower_value(type.codomain(), v(minimal_element(type.domain())));
}

Value add_nat_at_type(const SimpleType& type, const Value& v, const NormalPoly& n) {
    if (type.is_base()) return Value::base(v.poly() + n);
    SimpleType codomain = type.codomain();
    return Value::function([codomain, v, n](const Value& x) { return add_nat_at_type(codomain, v(x), n); });
}

Value papp(const SimpleType& domain, const SimpleType& codomain, const Value& f, const Value& x) {
    return add_nat_at_type(codomain, f(x), lower_value(domain, x));
}

namespace {

Value collect(std::size_t level, SimpleType remaining, std::vector<NormalPoly> args) {
    if (remaining.is_base()) return Value::base(NormalPoly::atom(level, std::move(args)));
    return Value::function([level, remaining, args](const Value& x) {
        if (!x.is_base())
            throw SemanticError(SemanticError::Kind::UnsupportedShape,
                                "higher-order variable applied to a functional argument");
        auto next = args;
        next.push_back(x.poly());
        return collect(level, remaining.codomain(), std::move(next));
    });
}

}  // namespace

Value neutral(std::size_t level, const SimpleType& type) {
    if (type.is_base()) return Value::base(NormalPoly::variable(level));
    return collect(level, type, {});
}

}  // namespace polycert
