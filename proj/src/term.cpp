#include "polycert/term.hpp"

#include <sstream>
#include <stdexcept>

namespace polycert {

std::string to_string(const Position& position) {
    if (position.empty()) return "root";
    std::string out;
    for (Direction d : position) {
        switch (d) {
        case Direction::Left: out += 'L'; break;
        case Direction::Right: out += 'R'; break;
        case Direction::Body: out += 'B'; break;
        }
    }
    return out;
}

struct Term::Node {
    Kind kind;
    std::string name;
    std::size_t index = 0;
    std::optional<SimpleType> binder;
    std::optional<Term> left;   // Lam body or App function
    std::optional<Term> right;  // App argument
    std::size_t size = 1;
};

Term Term::symbol(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::Symbol, std::move(name), 0, {}, {}, {}, 1}));
}

Term Term::var(std::size_t index) {
    return Term(std::make_shared<const Node>(Node{Kind::Var, {}, index, {}, {}, {}, 1}));
}

Term Term::lam(SimpleType binder, Term body) {
    std::size_t n = body.size() + 1;
    return Term(std::make_shared<const Node>(Node{Kind::Lam, {}, 0, std::move(binder), std::move(body), {}, n}));
}

Term Term::app(Term function, Term argument) {
    std::size_t n = function.size() + argument.size() + 1;
    return Term(
        std::make_shared<const Node>(Node{Kind::App, {}, 0, {}, std::move(function), std::move(argument), n}));
}

Term Term::apply(Term head, const std::vector<Term>& arguments) {
    for (const auto& a : arguments) head = app(std::move(head), a);
    return head;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::size_t Term::index() const { return node_->index; }
const SimpleType& Term::binder() const { return *node_->binder; }
const Term& Term::body() const { return *node_->left; }
const Term& Term::function() const { return *node_->left; }
const Term& Term::argument() const { return *node_->right; }
std::size_t Term::size() const { return node_->size; }

const Term& Term::at(const Position& position) const {
    const Term* t = this;
    for (Direction d : position) {
        switch (d) {
        case Direction::Left: t = &t->function(); break;
        case Direction::Right: t = &t->argument(); break;
        case Direction::Body: t = &t->body(); break;
        }
    }
    return *t;
}

namespace {

Term replace_from(const Term& t, const Position& position, std::size_t depth, const Term& replacement) {
    if (depth == position.size()) return replacement;
    switch (position[depth]) {
    case Direction::Left:
        return Term::app(replace_from(t.function(), position, depth + 1, replacement), t.argument());
    case Direction::Right:
        return Term::app(t.function(), replace_from(t.argument(), position, depth + 1, replacement));
    case Direction::Body:
        return Term::lam(t.binder(), replace_from(t.body(), position, depth + 1, replacement));
    }
    return t;
}

}  // namespace

Term Term::replaced(const Position& position, const Term& replacement) const {
    return replace_from(*this, position, 0, replacement);
}

namespace {

bool mentions_outer_below(const Term& t, std::size_t bound, std::size_t depth) {
    switch (t.kind()) {
    case Term::Kind::Symbol: return false;
    case Term::Kind::Var: return t.index() >= depth && t.index() - depth < bound;
    case Term::Kind::Lam: return mentions_outer_below(t.body(), bound, depth + 1);
    case Term::Kind::App:
        return mentions_outer_below(t.function(), bound, depth) || mentions_outer_below(t.argument(), bound, depth);
    }
    return false;
}

}  // namespace

bool Term::has_free_var_below(std::size_t bound) const { return mentions_outer_below(*this, bound, 0); }

std::string Term::to_string() const {
    switch (kind()) {
    case Kind::Symbol: return name();
    case Kind::Var: return "#" + std::to_string(index());
    case Kind::Lam: return "(\\:" + binder().to_string() + ". " + body().to_string() + ")";
    case Kind::App: return "(" + function().to_string() + " " + argument().to_string() + ")";
    }
    return {};
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
    case Term::Kind::Symbol: return a.name() == b.name();
    case Term::Kind::Var: return a.index() == b.index();
    case Term::Kind::Lam: return a.binder() == b.binder() && a.body() == b.body();
    case Term::Kind::App: return a.function() == b.function() && a.argument() == b.argument();
    }
    return false;
}

namespace {

SimpleType infer_at(const Signature& sig, const Context& ctx, const Term& t, Position& where) {
    switch (t.kind()) {
    case Term::Kind::Symbol: {
        auto type = sig.find(t.name());
        if (!type) throw TypeError(TypeError::Kind::UnknownSymbol, where, "unknown symbol '" + t.name() + "'");
        return *type;
    }
    case Term::Kind::Var:
        if (t.index() >= ctx.size())
            throw TypeError(TypeError::Kind::UnboundVariable, where,
                            "unbound variable #" + std::to_string(t.index()) + " at " + to_string(where));
        return ctx.at_index(t.index());
    case Term::Kind::Lam: {
        where.push_back(Direction::Body);
        SimpleType body = infer_at(sig, ctx.extended(t.binder()), t.body(), where);
        where.pop_back();
        return SimpleType::arrow(t.binder(), std::move(body));
    }
    case Term::Kind::App: {
        where.push_back(Direction::Left);
        SimpleType fun = infer_at(sig, ctx, t.function(), where);
        where.back() = Direction::Right;
        SimpleType arg = infer_at(sig, ctx, t.argument(), where);
        where.pop_back();
        if (fun.is_base())
            throw TypeError(TypeError::Kind::ApplicationMismatch, where,
                            "application mismatch at " + to_string(where) + ": expected a function, got " +
                                fun.to_string());
        if (fun.domain() != arg)
            throw TypeError(TypeError::Kind::ApplicationMismatch, where,
                            "application mismatch at " + to_string(where) + ": expected " +
                                fun.domain().to_string() + ", got " + arg.to_string());
        return fun.codomain();
    }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

SimpleType infer_type(const Signature& sig, const Context& ctx, const Term& t) {
    Position where;
    return infer_at(sig, ctx, t, where);
}

Term shift(const Term& t, std::ptrdiff_t amount, std::size_t cutoff) {
    switch (t.kind()) {
    case Term::Kind::Symbol: return t;
    case Term::Kind::Var:
        if (t.index() < cutoff) return t;
        return Term::var(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(t.index()) + amount));
    case Term::Kind::Lam: return Term::lam(t.binder(), shift(t.body(), amount, cutoff + 1));
    case Term::Kind::App: return Term::app(shift(t.function(), amount, cutoff), shift(t.argument(), amount, cutoff));
    }
    return t;
}

Substitution Substitution::identity(std::size_t size) {
    std::vector<std::optional<Term>> images;
    images.reserve(size);
    for (std::size_t i = 0; i < size; ++i) images.emplace_back(Term::var(i));
    return Substitution(std::move(images));
}

bool Substitution::total() const {
    for (const auto& image : images_)
        if (!image) return false;
    return true;
}

namespace {

Term substitute_under(const Term& t, const Substitution& s, std::size_t depth) {
    switch (t.kind()) {
    case Term::Kind::Symbol: return t;
    case Term::Kind::Var: {
        if (t.index() < depth) return t;
        std::size_t i = t.index() - depth;
        if (i >= s.size() || !s[i]) throw std::logic_error("substitution has no image for #" + std::to_string(i));
        return depth == 0 ? *s[i] : shift(*s[i], static_cast<std::ptrdiff_t>(depth));
    }
    case Term::Kind::Lam: return Term::lam(t.binder(), substitute_under(t.body(), s, depth + 1));
    case Term::Kind::App:
        return Term::app(substitute_under(t.function(), s, depth), substitute_under(t.argument(), s, depth));
    }
    return t;
}

Term instantiate_under(const Term& t, const Term& value, std::size_t depth) {
    switch (t.kind()) {
    case Term::Kind::Symbol: return t;
    case Term::Kind::Var:
        if (t.index() < depth) return t;
        if (t.index() == depth) return shift(value, static_cast<std::ptrdiff_t>(depth));
        return Term::var(t.index() - 1);
    case Term::Kind::Lam: return Term::lam(t.binder(), instantiate_under(t.body(), value, depth + 1));
    case Term::Kind::App:
        return Term::app(instantiate_under(t.function(), value, depth), instantiate_under(t.argument(), value, depth));
    }
    return t;
}

}  // namespace

Term substitute(const Term& t, const Substitution& s) { return substitute_under(t, s, 0); }

Term instantiate(const Term& body, const Term& value) { return instantiate_under(body, value, 0); }

namespace {

struct Matcher {
    const Signature& sig;
    const Context& pattern_ctx;
    std::vector<std::optional<Term>> bindings;

    // `local` is the subject context extended by the binders crossed so far;
    // `depth` counts those binders.
    bool match(const Term& pattern, const Term& subject, const Context& local, std::size_t depth) {
        switch (pattern.kind()) {
        case Term::Kind::Var: {
            if (pattern.index() < depth)
                return subject.kind() == Term::Kind::Var && subject.index() == pattern.index();
            std::size_t rule_var = pattern.index() - depth;
            if (rule_var >= pattern_ctx.size()) return false;
            if (subject.has_free_var_below(depth)) return false;
            Term image = shift(subject, -static_cast<std::ptrdiff_t>(depth), 0);
            auto& slot = bindings[rule_var];
            if (slot) return *slot == image;
            try {
                if (infer_type(sig, local, subject) != pattern_ctx.at_index(rule_var)) return false;
            } catch (const TypeError&) {
                return false;
            }
            slot = std::move(image);
            return true;
        }
        case Term::Kind::Symbol:
            return subject.kind() == Term::Kind::Symbol && subject.name() == pattern.name();
        case Term::Kind::Lam:
            return subject.kind() == Term::Kind::Lam && subject.binder() == pattern.binder() &&
                   match(pattern.body(), subject.body(), local.extended(subject.binder()), depth + 1);
        case Term::Kind::App:
            return subject.kind() == Term::Kind::App && match(pattern.function(), subject.function(), local, depth) &&
                   match(pattern.argument(), subject.argument(), local, depth);
        }
        return false;
    }
};

}  // namespace

std::optional<Substitution> match_term(const Signature& sig, const Context& pattern_ctx, const Term& pattern,
                                       const Context& subject_ctx, const Term& subject) {
    Matcher m{sig, pattern_ctx, std::vector<std::optional<Term>>(pattern_ctx.size())};
    if (!m.match(pattern, subject, subject_ctx, 0)) return std::nullopt;
    return Substitution(std::move(m.bindings));
}

void Afs::validate() const {
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        for (const Term* side : {&r.lhs, &r.rhs}) {
            SimpleType got = infer_type(signature, r.vars, *side);
            if (got != r.target)
                throw TypeError(TypeError::Kind::ApplicationMismatch, {},
                                "rule " + std::to_string(i + 1) + ": side has type " + got.to_string() +
                                    ", expected " + r.target.to_string());
        }
    }
}

namespace {

bool uses_only_bound(const Term& t, const Substitution& s, std::size_t depth) {
    switch (t.kind()) {
    case Term::Kind::Symbol: return true;
    case Term::Kind::Var: return t.index() < depth || (t.index() - depth < s.size() && s[t.index() - depth]);
    case Term::Kind::Lam: return uses_only_bound(t.body(), s, depth + 1);
    case Term::Kind::App: return uses_only_bound(t.function(), s, depth) && uses_only_bound(t.argument(), s, depth);
    }
    return false;
}

void scan(const Afs& afs, const Context& ctx, const Term& root, const Term& t, Position& where,
          std::vector<Reduct>& out) {
    for (std::size_t r = 0; r < afs.rules.size(); ++r) {
        const auto& rule = afs.rules[r];
        auto s = match_term(afs.signature, rule.vars, rule.lhs, ctx, t);
        if (!s || !uses_only_bound(rule.rhs, *s, 0)) continue;
        out.push_back({root.replaced(where, substitute(rule.rhs, *s)), {StepKind::Kind::Rule, r, where}});
    }
    if (t.kind() == Term::Kind::App && t.function().kind() == Term::Kind::Lam)
        out.push_back({root.replaced(where, instantiate(t.function().body(), t.argument())),
                       {StepKind::Kind::Beta, 0, where}});

    switch (t.kind()) {
    case Term::Kind::App:
        where.push_back(Direction::Left);
        scan(afs, ctx, root, t.function(), where, out);
        where.back() = Direction::Right;
        scan(afs, ctx, root, t.argument(), where, out);
        where.pop_back();
        break;
    case Term::Kind::Lam:
        where.push_back(Direction::Body);
        scan(afs, ctx.extended(t.binder()), root, t.body(), where, out);
        where.pop_back();
        break;
    default: break;
    }
}

}  // namespace

std::vector<Reduct> enumerate_steps(const Afs& afs, const Context& ctx, const Term& t) {
    std::vector<Reduct> out;
    Position where;
    scan(afs, ctx, t, t, where, out);
    return out;
}

}  // namespace polycert
