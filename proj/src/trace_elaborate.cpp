#include "polycert/trace.hpp"

#include "polycert/checker.hpp"
#include "trace_internal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polycert {

namespace {

// Simple types with unification variables, stored in an arena.
class TypeGraph {
public:
    int fresh() { return add({Kind::Meta, {}, -1, -1, -1}); }
    int base(const std::string& name) { return add({Kind::Base, name, -1, -1, -1}); }
    int arrow(int domain, int codomain) { return add({Kind::Arrow, {}, domain, codomain, -1}); }

    int from(const SimpleType& t) {
        if (t.is_base()) return base(t.name());
        int d = from(t.domain());
        return arrow(d, from(t.codomain()));
    }

    int find(int t) const {
        while (nodes_[t].kind == Kind::Meta && nodes_[t].link >= 0) t = nodes_[t].link;
        return t;
    }

    bool unify(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        const Node& na = nodes_[a];
        const Node& nb = nodes_[b];
        if (na.kind == Kind::Meta) return bind(a, b);
        if (nb.kind == Kind::Meta) return bind(b, a);
        if (na.kind != nb.kind) return false;
        if (na.kind == Kind::Base) return na.name == nb.name;
        int da = na.domain, ca = na.codomain, db = nb.domain, cb = nb.codomain;
        return unify(da, db) && unify(ca, cb);
    }

    SimpleType resolve(int t, const std::string& fallback) const {
        t = find(t);
        const Node& n = nodes_[t];
        switch (n.kind) {
        case Kind::Meta: return SimpleType::base(fallback);
        case Kind::Base: return SimpleType::base(n.name);
        case Kind::Arrow: return SimpleType::arrow(resolve(n.domain, fallback), resolve(n.codomain, fallback));
        }
        return SimpleType::base(fallback);
    }

    std::string show(int t) const {
        t = find(t);
        const Node& n = nodes_[t];
        switch (n.kind) {
        case Kind::Meta: return "?" + std::to_string(t);
        case Kind::Base: return n.name;
        case Kind::Arrow: {
            std::string lhs = show(n.domain);
            if (nodes_[find(n.domain)].kind == Kind::Arrow) lhs = "(" + lhs + ")";
            return lhs + " -> " + show(n.codomain);
        }
        }
        return {};
    }

private:
    enum class Kind { Meta, Base, Arrow };
    struct Node {
        Kind kind;
        std::string name;
        int domain;
        int codomain;
        int link;
    };

    int add(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    bool occurs(int meta, int t) const {
        t = find(t);
        if (t == meta) return true;
        const Node& n = nodes_[t];
        return n.kind == Kind::Arrow && (occurs(meta, n.domain) || occurs(meta, n.codomain));
    }

    bool bind(int meta, int t) {
        if (occurs(meta, t)) return false;
        nodes_[meta].link = t;
        return true;
    }

    std::vector<Node> nodes_;
};

std::string default_base(const Signature& sig) { return sig.base_types().empty() ? "o" : sig.base_types().front(); }

class RuleElaborator {
public:
    RuleElaborator(const Signature& sig, std::size_t rule_number) : sig_(sig), rule_number_(rule_number) {}

    RewriteRule run(const RawRule& raw) {
        int lhs = infer(raw.lhs);
        int rhs = infer(raw.rhs);
        if (!graph_.unify(lhs, rhs))
            fail(raw.where, "left-hand side has type " + graph_.show(lhs) + " but right-hand side has type " +
                                graph_.show(rhs));
        std::string fallback = default_base(sig_);
        std::vector<SimpleType> types;
        for (int t : var_types_) types.push_back(graph_.resolve(t, fallback));
        RewriteRule rule{Context(std::move(types)), graph_.resolve(lhs, fallback), Term::symbol(""), Term::symbol(""),
                         var_names_};
        std::vector<std::string> scope;
        rule.lhs = build(raw.lhs, scope);
        rule.rhs = build(raw.rhs, scope);
        return rule;
    }

private:
    [[noreturn]] void fail(SourceLocation where, const std::string& what) const {
        throw ElaborationError(ElaborationError::Kind::UnificationFailure, where,
                               "rule " + std::to_string(rule_number_) + ": " + what);
    }

    int infer(const RawTerm& t) {
        switch (t.kind) {
        case RawTerm::Kind::Ident: {
            for (auto it = binders_.rbegin(); it != binders_.rend(); ++it)
                if (it->first == t.name) return it->second;
            if (auto type = sig_.find(t.name)) return graph_.from(*type);
            auto found = std::find(var_names_.begin(), var_names_.end(), t.name);
            if (found != var_names_.end()) return var_types_[found - var_names_.begin()];
            var_names_.push_back(t.name);
            var_types_.push_back(graph_.fresh());
            return var_types_.back();
        }
        case RawTerm::Kind::App: {
            int f = infer(t.children[0]);
            int a = infer(t.children[1]);
            int r = graph_.fresh();
            int expected = graph_.arrow(a, r);
            if (!graph_.unify(f, expected)) {
                const RawTerm& arg = t.children[1];
                std::string subject = arg.kind == RawTerm::Kind::Ident ? arg.name : "argument";
                if (arg.kind == RawTerm::Kind::Ident && !sig_.contains(arg.name)) subject = "variable " + arg.name;
                fail(arg.where, "cannot apply a term of type " + graph_.show(f) + " to " + subject + " of type " +
                                    graph_.show(a));
            }
            return r;
        }
        case RawTerm::Kind::Lam: {
            int m = graph_.fresh();
            lambda_types_[&t] = m;
            binders_.emplace_back(t.name, m);
            int body = infer(t.children[0]);
            binders_.pop_back();
            return graph_.arrow(m, body);
        }
        }
        return graph_.fresh();
    }

    Term build(const RawTerm& t, std::vector<std::string>& scope) {
        switch (t.kind) {
        case RawTerm::Kind::Ident: {
            for (std::size_t k = 0; k < scope.size(); ++k)
                if (scope[scope.size() - 1 - k] == t.name) return Term::var(k);
            if (sig_.contains(t.name)) return Term::symbol(t.name);
            std::size_t level = std::find(var_names_.begin(), var_names_.end(), t.name) - var_names_.begin();
            return Term::var(scope.size() + (var_names_.size() - 1 - level));
        }
        case RawTerm::Kind::App: {
            Term f = build(t.children[0], scope);
            return Term::app(std::move(f), build(t.children[1], scope));
        }
        case RawTerm::Kind::Lam: {
            SimpleType binder = graph_.resolve(lambda_types_.at(&t), default_base(sig_));
            scope.push_back(t.name);
            Term body = build(t.children[0], scope);
            scope.pop_back();
            return Term::lam(std::move(binder), std::move(body));
        }
        }
        return Term::symbol(t.name);
    }

    const Signature& sig_;
    std::size_t rule_number_;
    TypeGraph graph_;
    std::vector<std::string> var_names_;
    std::vector<int> var_types_;
    std::vector<std::pair<std::string, int>> binders_;
    std::map<const RawTerm*, int> lambda_types_;
};

// Polynomial expressions over named parameters; `params[level]`.
class ExprElaborator {
public:
    ExprElaborator(std::vector<std::string> names, Context ctx) : names_(std::move(names)), ctx_(std::move(ctx)) {}

    BasePoly base(const RawExpr& e) const {
        switch (e.kind) {
        case RawExpr::Kind::Number: return BasePoly::constant(e.value);
        case RawExpr::Kind::Plus: return BasePoly::plus(base(e.children[0]), base(e.children[1]));
        case RawExpr::Kind::Mult: return BasePoly::mult(base(e.children[0]), base(e.children[1]));
        case RawExpr::Kind::Ident: {
            std::size_t level = lookup(e);
            if (!ctx_.at_level(level).is_base())
                throw ElaborationError(ElaborationError::Kind::MalformedPolynomial, e.where,
                                       "parameter '" + e.name + "' of type " + ctx_.at_level(level).to_string() +
                                           " must be fully applied");
            return BasePoly::from_poly(PolyExpr::var(ctx_.index_of(level)));
        }
        case RawExpr::Kind::Call: {
            std::size_t level = lookup(e);
            const SimpleType& head_type = ctx_.at_level(level);
            if (head_type.arity() != e.children.size())
                throw ElaborationError(ElaborationError::Kind::MalformedPolynomial, e.where,
                                       "parameter '" + e.name + "' expects " + std::to_string(head_type.arity()) +
                                           " argument(s), got " + std::to_string(e.children.size()));
            PolyExpr out = PolyExpr::var(ctx_.index_of(level));
            const SimpleType* t = &head_type;
            for (const auto& arg : e.children) {
                out = PolyExpr::app(std::move(out), argument(arg, t->domain()));
                t = &t->codomain();
            }
            return BasePoly::from_poly(std::move(out));
        }
        }
        return BasePoly::constant(0);
    }

private:
    std::size_t lookup(const RawExpr& e) const {
        for (std::size_t level = names_.size(); level-- > 0;)
            if (names_[level] == e.name) return level;
        throw ElaborationError(ElaborationError::Kind::UnknownParameter, e.where, "unknown parameter '" + e.name + "'");
    }

    PolyExpr argument(const RawExpr& e, const SimpleType& expected) const {
        if (expected.is_base()) return PolyExpr::from_base(base(e), expected);
        if (e.kind == RawExpr::Kind::Ident) {
            std::size_t level = lookup(e);
            if (ctx_.at_level(level) == expected) return PolyExpr::var(ctx_.index_of(level));
        }
        throw ElaborationError(ElaborationError::Kind::MalformedPolynomial, e.where,
                               "argument of type " + expected.to_string() + " must be a parameter of that type");
    }

    std::vector<std::string> names_;
    Context ctx_;
};

PolyExpr elaborate_entry(const RawInterpEntry& entry, const SimpleType& type) {
    const auto& binders = entry.poly.binders;
    if (binders.size() != type.arity())
        throw ElaborationError(ElaborationError::Kind::ArityMismatch, entry.where,
                               "J(" + entry.symbol + ") binds " + std::to_string(binders.size()) +
                                   " parameter(s) but the symbol has arity " + std::to_string(type.arity()));
    std::vector<std::string> names;
    for (const auto& [name, where] : binders) {
        if (std::find(names.begin(), names.end(), name) != names.end())
            throw ElaborationError(ElaborationError::Kind::MalformedPolynomial, where,
                                   "duplicate parameter '" + name + "' in J(" + entry.symbol + ")");
        names.push_back(name);
    }
    auto domains = type.domains();
    ExprElaborator elab(names, Context(domains));
    PolyExpr out = PolyExpr::from_base(elab.base(entry.poly.body), type.result());
    for (auto it = domains.rbegin(); it != domains.rend(); ++it) out = PolyExpr::lam(*it, std::move(out));
    return out;
}

}  // namespace

Afs elaborate_system(const RawTrace& raw) {
    Afs afs;
    for (const auto& d : raw.decls) {
        if (afs.signature.contains(d.name))
            throw ElaborationError(ElaborationError::Kind::DuplicateDeclaration, d.where,
                                   "symbol '" + d.name + "' declared twice");
        afs.signature.declare(d.name, d.type);
    }
    for (std::size_t i = 0; i < raw.rules.size(); ++i)
        afs.rules.push_back(RuleElaborator(afs.signature, i + 1).run(raw.rules[i]));
    // Unconstrained variables defaulted to a fresh base type.
    for (const auto& rule : afs.rules)
        for (const auto& t : rule.vars.levels())
            if (t.is_base()) afs.signature.declare_base(t.name());
    return afs;
}

std::pair<Afs, Interpretation> elaborate(const RawTrace& raw) {
    Afs afs = elaborate_system(raw);
    Interpretation J;
    if (raw.interpretation) {
        for (const auto& entry : *raw.interpretation) {
            auto type = afs.signature.find(entry.symbol);
            if (!type)
                throw ElaborationError(ElaborationError::Kind::UnknownSymbolInInterpretation, entry.where,
                                       "J(" + entry.symbol + ") interprets an undeclared symbol");
            if (J.find(entry.symbol))
                throw ElaborationError(ElaborationError::Kind::DuplicateInterpretation, entry.where,
                                       "J(" + entry.symbol + ") given twice");
            J.set(entry.symbol, elaborate_entry(entry, *type));
        }
    }
    for (const auto& decl : afs.signature.symbols())
        if (!J.find(decl.name))
            throw ElaborationError(ElaborationError::Kind::MissingInterpretation, {},
                                   "no interpretation for symbol '" + decl.name + "'");
    return {std::move(afs), std::move(J)};
}

std::vector<std::string> constraint_name_list(const Context& ctx) {
    auto namer = constraint_names(ctx);
    std::vector<std::string> out;
    for (std::size_t level = 0; level < ctx.size(); ++level) out.push_back(namer(level));
    return out;
}

NormalPoly parse_normal_poly(std::string_view text, const Context& ctx, const std::vector<std::string>& names) {
    RawExpr raw = parse_raw_expr(text);
    ExprElaborator elab(names, ctx);
    return normalize(ctx, PolyExpr::from_base(elab.base(raw), SimpleType::base("o")));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string fresh_name(const std::string& stem, std::size_t i, const std::set<std::string>& taken) {
    std::string name = stem + std::to_string(i);
    while (taken.count(name)) name += "_";
    return name;
}

class TermRenderer {
public:
    TermRenderer(const Signature& sig, std::vector<std::string> var_names)
        : sig_(sig), vars_(std::move(var_names)) {
        for (const auto& d : sig.symbols()) taken_.insert(d.name);
        for (const auto& v : vars_) taken_.insert(v);
    }

    std::string render(const Term& t) {
        std::vector<std::string> scope;
        return go(t, scope);
    }

private:
    std::string go(const Term& t, std::vector<std::string>& scope) {
        switch (t.kind()) {
        case Term::Kind::Symbol: return t.name();
        case Term::Kind::Var:
            if (t.index() < scope.size()) return scope[scope.size() - 1 - t.index()];
            return vars_[vars_.size() - 1 - (t.index() - scope.size())];
        case Term::Kind::Lam: {
            std::string name = fresh_name("x", scope.size(), taken_);
            scope.push_back(name);
            std::string body = go(t.body(), scope);
            scope.pop_back();
            return "\\" + name + ". " + body;
        }
        case Term::Kind::App: {
            std::vector<const Term*> args;
            const Term* head = &t;
            while (head->kind() == Term::Kind::App) {
                args.push_back(&head->argument());
                head = &head->function();
            }
            std::string out = head->kind() == Term::Kind::Lam ? "(" + go(*head, scope) + ")" : go(*head, scope);
            for (auto it = args.rbegin(); it != args.rend(); ++it) {
                std::string a = go(**it, scope);
                bool wrap = (*it)->kind() == Term::Kind::App || (*it)->kind() == Term::Kind::Lam;
                out += " " + (wrap ? "(" + a + ")" : a);
            }
            return out;
        }
        }
        return {};
    }

    const Signature& sig_;
    std::vector<std::string> vars_;
    std::set<std::string> taken_;
};

std::vector<std::string> rule_var_names(const Signature& sig, const RewriteRule& rule) {
    bool usable = rule.var_names.size() == rule.vars.size();
    std::set<std::string> seen;
    for (const auto& n : rule.var_names) {
        bool ok = !n.empty() && std::isalpha(static_cast<unsigned char>(n.front())) && !sig.contains(n) &&
                  seen.insert(n).second;
        usable = usable && ok;
    }
    if (usable) return rule.var_names;
    std::set<std::string> taken;
    for (const auto& d : sig.symbols()) taken.insert(d.name);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < rule.vars.size(); ++i) {
        out.push_back(fresh_name("X", i, taken));
        taken.insert(out.back());
    }
    return out;
}

std::string render_entry(const PolyExpr& entry, const SimpleType& type) {
    NormalPoly body = entry_body(entry, type);
    auto domains = type.domains();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < domains.size(); ++i)
        names.push_back((domains[i].is_base() ? "y" : "G") + std::to_string(i));
    std::string text = render(body, [&names](std::size_t level) { return names[level]; });
    if (names.empty()) return text;
    std::string binders;
    for (const auto& n : names) binders += (binders.empty() ? "" : ";") + n;
    return "Lam[" + binders + "]." + text;
}

template <class T, class F>
std::string section(const std::string& title, const std::vector<T>& items, F show) {
    if (items.empty()) return title + ": [ ]\n";
    std::string out = title + ": [\n";
    for (std::size_t i = 0; i < items.size(); ++i) out += "  " + show(items[i]) + (i + 1 < items.size() ? " ;\n" : "\n");
    return out + "]\n";
}

}  // namespace

std::string render_rule(const Afs& afs, const RewriteRule& rule) {
    TermRenderer r(afs.signature, rule_var_names(afs.signature, rule));
    return r.render(rule.lhs) + " => " + r.render(rule.rhs);
}

std::string render_trace(const Afs& afs, const std::optional<Interpretation>& J) {
    std::string out = "YES\n";
    out += section("Signature", afs.signature.symbols(),
                   [](const SymbolDecl& d) { return d.name + " : " + d.type.to_string(); });
    out += section("Rules", afs.rules, [&afs](const RewriteRule& r) { return render_rule(afs, r); });
    if (J) {
        out += section("Interpretation", afs.signature.symbols(), [&J](const SymbolDecl& d) {
            const PolyExpr* p = J->find(d.name);
            if (!p) throw SemanticError(SemanticError::Kind::MissingBinding, "no interpretation for symbol '" + d.name + "'");
            return "J(" + d.name + ") = " + render_entry(*p, d.type);
        });
    }
    return out;
}

}  // namespace polycert
