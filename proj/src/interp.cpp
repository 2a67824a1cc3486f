#include "polycert/interp.hpp"

#include "polycert/error.hpp"

namespace polycert {

void Interpretation::set(std::string symbol, PolyExpr p) { entries_.insert_or_assign(std::move(symbol), std::move(p)); }

const PolyExpr* Interpretation::find(const std::string& symbol) const {
    auto it = entries_.find(symbol);
    return it == entries_.end() ? nullptr : &it->second;
}

void Interpretation::validate(const Signature& sig) const {
    for (const auto& decl : sig.symbols()) {
        const PolyExpr* p = find(decl.name);
        if (!p) throw SemanticError(SemanticError::Kind::MissingBinding, "no interpretation for symbol '" + decl.name + "'");
        SimpleType got = infer_poly_type(Context{}, *p);
        if (got != decl.type)
            throw SemanticError(SemanticError::Kind::IllTyped, "interpretation of '" + decl.name + "' has type " +
                                                                   got.to_string() + ", expected " + decl.type.to_string());
    }
    for (const auto& [name, p] : entries_)
        if (!sig.contains(name))
            throw SemanticError(SemanticError::Kind::IllTyped, "interpretation given for unknown symbol '" + name + "'");
}

namespace {

NormalPoly evaluate_base(const BasePoly& b, const std::vector<Value>& env) {
    switch (b.kind()) {
    case BasePoly::Kind::Const: return NormalPoly::constant(b.value());
    case BasePoly::Kind::Plus: return evaluate_base(b.left(), env) + evaluate_base(b.right(), env);
    case BasePoly::Kind::Mult: return evaluate_base(b.left(), env) * evaluate_base(b.right(), env);
    case BasePoly::Kind::FromPoly: return evaluate(b.poly(), env).poly();
    }
    return {};
}

}  // namespace

Value evaluate(const PolyExpr& p, const std::vector<Value>& env) {
    switch (p.kind()) {
    case PolyExpr::Kind::FromBase: return Value::base(evaluate_base(p.base(), env));
    case PolyExpr::Kind::Var:
        if (p.index() >= env.size())
            throw SemanticError(SemanticError::Kind::MissingBinding, "unbound polynomial variable #" + std::to_string(p.index()));
        return env[env.size() - 1 - p.index()];
    case PolyExpr::Kind::App: return evaluate(p.function(), env)(evaluate(p.argument(), env));
    case PolyExpr::Kind::Lam: {
        PolyExpr body = p.body();
        return Value::function([body, env](const Value& x) {
            auto inner = env;
            inner.push_back(x);
            return evaluate(body, inner);
        });
    }
    }
    return Value::base({});
}

std::vector<Value> neutral_env(const Context& ctx) {
    std::vector<Value> env;
    env.reserve(ctx.size());
    for (std::size_t level = 0; level < ctx.size(); ++level) env.push_back(neutral(level, ctx.at_level(level)));
    return env;
}

NormalPoly normalize(const Context& ctx, const PolyExpr& p) {
    Value v = evaluate(p, neutral_env(ctx));
    if (!v.is_base()) throw SemanticError(SemanticError::Kind::NonBaseResult, "polynomial is not of base type");
    return v.poly();
}

struct TermInterpreter::State {
    Signature sig;
    std::map<std::string, Value> symbols;
};

namespace {

using InterpreterState = std::shared_ptr<const TermInterpreter::State>;

std::pair<Value, SimpleType> walk(const InterpreterState& state, const Context& ctx, const std::vector<Value>& env,
                                  const Term& t) {
    switch (t.kind()) {
    case Term::Kind::Symbol: {
        auto type = state->sig.find(t.name());
        if (!type) throw TypeError(TypeError::Kind::UnknownSymbol, {}, "unknown symbol '" + t.name() + "'");
        return {state->symbols.at(t.name()), *type};
    }
    case Term::Kind::Var:
        if (t.index() >= ctx.size() || t.index() >= env.size())
            throw TypeError(TypeError::Kind::UnboundVariable, {}, "unbound variable #" + std::to_string(t.index()));
        return {env[env.size() - 1 - t.index()], ctx.at_index(t.index())};
    case Term::Kind::Lam: {
        Context inner = ctx.extended(t.binder());
        SimpleType body_type = infer_type(state->sig, inner, t.body());
        Term body = t.body();
        Value f = Value::function([state, inner, env, body](const Value& x) {
            auto extended = env;
            extended.push_back(x);
            return walk(state, inner, extended, body).first;
        });
        return {std::move(f), SimpleType::arrow(t.binder(), std::move(body_type))};
    }
    case Term::Kind::App: {
        auto [f, fun_type] = walk(state, ctx, env, t.function());
        auto [x, arg_type] = walk(state, ctx, env, t.argument());
        if (fun_type.is_base() || fun_type.domain() != arg_type)
            throw TypeError(TypeError::Kind::ApplicationMismatch, {}, "ill-typed application in " + t.to_string());
        return {papp(fun_type.domain(), fun_type.codomain(), f, x), fun_type.codomain()};
    }
    }
    throw SemanticError(SemanticError::Kind::IllTyped, "unreachable");
}

}  // namespace

TermInterpreter::TermInterpreter(const Signature& sig, const Interpretation& J) {
    auto state = std::make_shared<State>();
    state->sig = sig;
    for (const auto& decl : sig.symbols()) {
        const PolyExpr* p = J.find(decl.name);
        if (!p) throw SemanticError(SemanticError::Kind::MissingBinding, "no interpretation for symbol '" + decl.name + "'");
        state->symbols.emplace(decl.name, evaluate(*p, {}));
    }
    state_ = std::move(state);
}

Value TermInterpreter::interpret(const Context& ctx, const std::vector<Value>& env, const Term& t) const {
    return walk(state_, ctx, env, t).first;
}

Value interpret_term(const Signature& sig, const Interpretation& J, const Context& ctx, const Term& t) {
    return TermInterpreter(sig, J).interpret(ctx, t);
}

namespace {

PolyExpr atom_expr(const Atom& a, const Context& ctx) {
    const SimpleType& head_type = ctx.at_level(a.head);
    PolyExpr out = PolyExpr::var(ctx.index_of(a.head));
    const SimpleType* t = &head_type;
    for (const auto& arg : a.args) {
        if (t->is_base() || !t->domain().is_base())
            throw SemanticError(SemanticError::Kind::UnsupportedShape, "atom does not match its head type");
        out = PolyExpr::app(std::move(out), poly_expr_from_normal(arg, ctx, t->domain()));
        t = &t->codomain();
    }
    return out;
}

BasePoly monomial_expr(const Monomial& m, const Context& ctx) {
    std::optional<BasePoly> out;
    auto times = [&out](BasePoly factor) {
        out = out ? BasePoly::mult(std::move(*out), std::move(factor)) : std::move(factor);
    };
    if (m.coefficient != 1 || m.is_constant()) times(BasePoly::constant(m.coefficient));
    for (const auto& [level, exponent] : m.powers)
        for (unsigned e = 0; e < exponent; ++e) times(BasePoly::from_poly(PolyExpr::var(ctx.index_of(level))));
    for (const auto& a : m.atoms) times(BasePoly::from_poly(atom_expr(a, ctx)));
    return *out;
}

}  // namespace

PolyExpr poly_expr_from_normal(const NormalPoly& p, const Context& ctx, const SimpleType& base_type) {
    std::optional<BasePoly> sum;
    for (const auto& m : p.monomials()) {
        BasePoly term = monomial_expr(m, ctx);
        sum = sum ? BasePoly::plus(std::move(*sum), std::move(term)) : std::move(term);
    }
    return PolyExpr::from_base(sum ? *sum : BasePoly::constant(0), base_type);
}

NormalPoly entry_body(const PolyExpr& entry, const SimpleType& type) {
    Context params(type.domains());
    Value v = evaluate(entry, {});
    for (std::size_t level = 0; level < params.size(); ++level) v = v(neutral(level, params.at_level(level)));
    return v.poly();
}

bool equivalent(const Interpretation& a, const Interpretation& b, const Signature& sig) {
    if (a.entries().size() != b.entries().size()) return false;
    for (const auto& decl : sig.symbols()) {
        const PolyExpr* pa = a.find(decl.name);
        const PolyExpr* pb = b.find(decl.name);
        if (!pa || !pb) return false;
        if (entry_body(*pa, decl.type) != entry_body(*pb, decl.type)) return false;
    }
    return true;
}

}  // namespace polycert
