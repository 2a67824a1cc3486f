#include "oracle.hpp"

#include <stdexcept>

namespace polycert::testing {

Natural linear(const MonotoneFunction& g, const std::vector<Natural>& args) {
    Natural out = g.constant;
    for (std::size_t i = 0; i < args.size(); ++i) out += g.coefficients.at(i) * args[i];
    return out;
}

namespace {

Machine number(Natural n) { return Machine{std::move(n), nullptr}; }

Machine curried(const MonotoneFunction& g, std::size_t arity, std::vector<Natural> taken) {
    if (taken.size() == arity) return number(linear(g, taken));
    return Machine{0, [g, arity, taken](const Machine& x) {
                       if (x.f) throw std::logic_error("oracle: functional argument");
                       auto next = taken;
                       next.push_back(x.n);
                       return curried(g, arity, std::move(next));
                   }};
}

Natural base_eval(const BasePoly& b, const std::vector<Machine>& env) {
    switch (b.kind()) {
    case BasePoly::Kind::Const: return b.value();
    case BasePoly::Kind::Plus: return base_eval(b.left(), env) + base_eval(b.right(), env);
    case BasePoly::Kind::Mult: return base_eval(b.left(), env) * base_eval(b.right(), env);
    case BasePoly::Kind::FromPoly: return direct_eval(b.poly(), env).n;
    }
    throw std::logic_error("oracle: bad base polynomial");
}

}  // namespace

std::vector<Machine> machine_env(const Context& ctx, const Assignment& a) {
    std::vector<Machine> env;
    for (std::size_t level = 0; level < ctx.size(); ++level) {
        const SimpleType& t = ctx.at_level(level);
        if (t.is_base())
            env.push_back(number(a.naturals.at(level)));
        else
            env.push_back(curried(a.functions.at(level), t.arity(), {}));
    }
    return env;
}

Machine direct_eval(const PolyExpr& p, const std::vector<Machine>& env) {
    switch (p.kind()) {
    case PolyExpr::Kind::FromBase: return number(base_eval(p.base(), env));
    case PolyExpr::Kind::Var: return env.at(env.size() - 1 - p.index());
    case PolyExpr::Kind::App: {
        Machine f = direct_eval(p.function(), env);
        return f.f(direct_eval(p.argument(), env));
    }
    case PolyExpr::Kind::Lam: {
        PolyExpr body = p.body();
        return Machine{0, [body, env](const Machine& x) {
                           auto inner = env;
                           inner.push_back(x);
                           return direct_eval(body, inner);
                       }};
    }
    }
    throw std::logic_error("oracle: bad polynomial");
}

Natural direct_eval(const PolyExpr& p, const Context& ctx, const Assignment& a) {
    return direct_eval(p, machine_env(ctx, a)).n;
}

Natural oracle_eval(const NormalPoly& p, const Assignment& a) {
    Natural total = 0;
    for (const auto& m : p.monomials()) {
        Natural v = m.coefficient;
        for (const auto& [level, exponent] : m.powers)
            for (unsigned e = 0; e < exponent; ++e) v *= a.naturals.at(level);
        for (const auto& atom : m.atoms) {
            std::vector<Natural> args;
            for (const auto& arg : atom.args) args.push_back(oracle_eval(arg, a));
            v *= linear(a.functions.at(atom.head), args);
        }
        total += v;
    }
    return total;
}

void for_each_small_assignment(const Context& ctx, unsigned max_natural, unsigned max_coefficient,
                               const std::function<bool(const Assignment&)>& visit) {
    // One odometer digit per natural, per function constant and per coefficient.
    std::vector<std::pair<std::size_t, int>> digits;  // (level, -1 | -2 - k)
    for (std::size_t level = 0; level < ctx.size(); ++level) {
        const SimpleType& t = ctx.at_level(level);
        if (t.is_base()) {
            digits.emplace_back(level, -1);
        } else {
            digits.emplace_back(level, -2);
            for (std::size_t k = 0; k < t.arity(); ++k) digits.emplace_back(level, -3 - static_cast<int>(k));
        }
    }
    std::vector<unsigned> value(digits.size(), 0);
    for (;;) {
        Assignment a;
        for (std::size_t level = 0; level < ctx.size(); ++level)
            if (!ctx.at_level(level).is_base())
                a.functions[level] = MonotoneFunction{0, std::vector<Natural>(ctx.at_level(level).arity(), 0)};
        for (std::size_t i = 0; i < digits.size(); ++i) {
            auto [level, slot] = digits[i];
            if (slot == -1)
                a.naturals[level] = value[i];
            else if (slot == -2)
                a.functions[level].constant = value[i];
            else
                a.functions[level].coefficients[static_cast<std::size_t>(-3 - slot)] = value[i];
        }
        if (!visit(a)) return;
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            unsigned limit = digits[i].second == -1 ? max_natural : max_coefficient;
            if (value[i] < limit) {
                ++value[i];
                break;
            }
            value[i] = 0;
        }
        if (i == digits.size()) return;
    }
}

Machine machine_min(const SimpleType& t) {
    if (t.is_base()) return number(0);
    Machine inner = machine_min(t.codomain());
    return Machine{0, [inner](const Machine&) { return inner; }};
}

Natural machine_lower(const SimpleType& t, const Machine& v) {
    if (t.is_base()) return v.n;
    return machine_lower(t.codomain(), v.f(machine_min(t.domain())));
}

Machine machine_add(const SimpleType& t, const Machine& v, const Natural& n) {
    if (t.is_base()) return number(v.n + n);
    SimpleType codomain = t.codomain();
    return Machine{0, [codomain, v, n](const Machine& x) { return machine_add(codomain, v.f(x), n); }};
}

Machine machine_papp(const SimpleType& domain, const SimpleType& codomain, const Machine& f, const Machine& x) {
    return machine_add(codomain, f.f(x), machine_lower(domain, x));
}

}  // namespace polycert::testing
