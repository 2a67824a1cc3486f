#include "polycert/assignment.hpp"

#include "polycert/error.hpp"

#include <cstdlib>
#include <string>

namespace polycert {

Natural MonotoneFunction::operator()(const std::vector<Natural>& args) const {
    Natural out = constant;
    for (std::size_t i = 0; i < coefficients.size() && i < args.size(); ++i) out += coefficients[i] * args[i];
    return out;
}

namespace {

Value curried(const MonotoneFunction& f, SimpleType remaining, std::vector<NormalPoly> args) {
    if (remaining.is_base()) {
        NormalPoly out = NormalPoly::constant(f.constant);
        for (std::size_t i = 0; i < args.size() && i < f.coefficients.size(); ++i)
            out += NormalPoly::constant(f.coefficients[i]) * args[i];
        return Value::base(std::move(out));
    }
    return Value::function([f, remaining, args](const Value& x) {
        auto next = args;
        next.push_back(x.poly());
        return curried(f, remaining.codomain(), std::move(next));
    });
}

}  // namespace

Value MonotoneFunction::as_value(const SimpleType& type) const { return curried(*this, type, {}); }

std::string MonotoneFunction::to_string() const {
    std::string params;
    std::string body = constant.str();
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        std::string x = "x" + std::to_string(i + 1);
        params += (i ? ", " : "") + x;
        if (coefficients[i] == 0) continue;
        body += " + " + (coefficients[i] == 1 ? x : coefficients[i].str() + "*" + x);
    }
    return "(" + params + ") -> " + body;
}

std::string Assignment::to_string(const VarNamer& names) const {
    std::map<std::size_t, std::string> parts;
    for (const auto& [level, n] : naturals) parts[level] = names(level) + " = " + n.str();
    for (const auto& [level, f] : functions) parts[level] = names(level) + " = " + f.to_string();
    std::string out;
    for (const auto& [level, text] : parts) out += (out.empty() ? "" : ", ") + text;
    return out;
}

Natural eval_normal(const NormalPoly& p, const Assignment& a) {
    Natural total = 0;
    for (const auto& m : p.monomials()) {
        Natural term = m.coefficient;
        for (const auto& [level, exponent] : m.powers) {
            auto it = a.naturals.find(level);
            if (it == a.naturals.end())
                throw SemanticError(SemanticError::Kind::MissingBinding, "no value for variable at level " + std::to_string(level));
            term *= boost::multiprecision::pow(it->second, exponent);
        }
        for (const auto& atom : m.atoms) {
            auto it = a.functions.find(atom.head);
            if (it == a.functions.end())
                throw SemanticError(SemanticError::Kind::MissingBinding,
                                    "no function for variable at level " + std::to_string(atom.head));
            std::vector<Natural> args;
            args.reserve(atom.args.size());
            for (const auto& arg : atom.args) args.push_back(eval_normal(arg, a));
            term *= it->second(args);
        }
        total += term;
    }
    return total;
}

AssignmentSampler::AssignmentSampler(std::uint64_t seed, SamplingRanges ranges) : rng_(seed), ranges_(ranges) {}

bool AssignmentSampler::can_sample(const Context& ctx) {
    for (const auto& t : ctx.levels())
        if (!t.is_first_order()) return false;
    return true;
}

Natural AssignmentSampler::sample_natural() {
    std::uniform_int_distribution<unsigned> coin(0, 3);
    if (coin(rng_) == 0) return 0;
    return std::uniform_int_distribution<unsigned>(0, ranges_.max_natural)(rng_);
}

MonotoneFunction AssignmentSampler::sample_function(std::size_t arity) {
    MonotoneFunction f;
    switch (std::uniform_int_distribution<unsigned>(0, 5)(rng_)) {
    case 0:  // constant zero
        f.constant = 0;
        f.coefficients.assign(arity, 0);
        return f;
    case 1:  // identity-like
        f.constant = 0;
        f.coefficients.assign(arity, 1);
        return f;
    default: {
        std::uniform_int_distribution<unsigned> c0(0, ranges_.max_constant);
        std::uniform_int_distribution<unsigned> ci(0, ranges_.max_coefficient);
        f.constant = c0(rng_);
        for (std::size_t i = 0; i < arity; ++i) f.coefficients.emplace_back(ci(rng_));
        return f;
    }
    }
}

std::optional<Assignment> AssignmentSampler::sample(const Context& ctx) {
    if (!can_sample(ctx)) return std::nullopt;
    Assignment a;
    for (std::size_t level = 0; level < ctx.size(); ++level) {
        const SimpleType& t = ctx.at_level(level);
        if (t.is_base())
            a.naturals.emplace(level, sample_natural());
        else
            a.functions.emplace(level, sample_function(t.arity()));
    }
    return a;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("POLYCERT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 0x5eed2023ULL;
}

}  // namespace polycert
