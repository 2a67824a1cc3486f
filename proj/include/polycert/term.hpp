#pragma once

#include "polycert/error.hpp"
#include "polycert/types.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polycert {

/// Simply-typed lambda term with de Bruijn variables and constants drawn
/// from a Signature. Lambdas carry their binder type so typing is synthesis.
class Term {
public:
    enum class Kind { Symbol, Var, Lam, App };

    static Term symbol(std::string name);
    static Term var(std::size_t index);
    static Term lam(SimpleType binder, Term body);
    static Term app(Term function, Term argument);
    /// `head a0 a1 ...` (left-nested applications).
    static Term apply(Term head, const std::vector<Term>& arguments);

    Kind kind() const;
    const std::string& name() const;   // Symbol
    std::size_t index() const;         // Var
    const SimpleType& binder() const;  // Lam
    const Term& body() const;          // Lam
    const Term& function() const;      // App
    const Term& argument() const;      // App

    /// Number of nodes.
    std::size_t size() const;
    /// Subterm at `position`; the position must be valid.
    const Term& at(const Position& position) const;
    /// Copy with the subterm at `position` replaced.
    Term replaced(const Position& position, const Term& replacement) const;
    /// True if a free variable with de Bruijn index < `bound` occurs.
    bool has_free_var_below(std::size_t bound) const;

    std::string to_string() const;

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Throws TypeError pinpointing the offending subterm.
SimpleType infer_type(const Signature& sig, const Context& ctx, const Term& t);

/// Adds `amount` to every variable with index >= `cutoff`.
Term shift(const Term& t, std::ptrdiff_t amount, std::size_t cutoff = 0);

/// Simultaneous substitution for the variables of a source context. Entry i
/// is the image of de Bruijn index i, a term over the target context.
/// Entries can be missing for partial matches; applying an incomplete
/// substitution to a term that uses a missing entry throws std::logic_error.
class Substitution {
public:
    Substitution() = default;
    explicit Substitution(std::vector<std::optional<Term>> images) : images_(std::move(images)) {}

    static Substitution identity(std::size_t size);

    std::size_t size() const { return images_.size(); }
    const std::optional<Term>& operator[](std::size_t index) const { return images_[index]; }
    bool total() const;

private:
    std::vector<std::optional<Term>> images_;
};

Term substitute(const Term& t, const Substitution& s);

/// Replaces Var 0 by `value` and lowers the remaining free variables (beta).
Term instantiate(const Term& body, const Term& value);

/// Syntactic first-order matching. `pattern` lives over `pattern_ctx`, the
/// subject over `subject_ctx`. A pattern variable matches any subterm of its
/// type that does not capture binders local to the pattern.
std::optional<Substitution> match_term(const Signature& sig, const Context& pattern_ctx, const Term& pattern,
                                       const Context& subject_ctx, const Term& subject);

struct RewriteRule {
    Context vars;
    SimpleType target;
    Term lhs;
    Term rhs;
    /// Display names for `vars`, outermost first. May be empty.
    std::vector<std::string> var_names;

    /// Structural equality ignoring variable names.
    friend bool operator==(const RewriteRule& a, const RewriteRule& b) {
        return a.vars == b.vars && a.target == b.target && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

struct Afs {
    Signature signature;
    std::vector<RewriteRule> rules;

    /// Throws TypeError if a side does not type to the rule's target.
    void validate() const;

    friend bool operator==(const Afs& a, const Afs& b) {
        return a.signature == b.signature && a.rules == b.rules;
    }
};

struct StepKind {
    enum class Kind { Rule, Beta };
    Kind kind = Kind::Beta;
    std::size_t rule = 0;  // only for Kind::Rule
    Position position;

    friend bool operator==(const StepKind& a, const StepKind& b) {
        return a.kind == b.kind && a.rule == b.rule && a.position == b.position;
    }
};

struct Reduct {
    Term term;
    StepKind step;
};

/// Every one-step reduct of `t`, scanning positions in pre-order. Rules
/// whose right-hand side uses a variable the match leaves unbound never fire.
std::vector<Reduct> enumerate_steps(const Afs& afs, const Context& ctx, const Term& t);

}  // namespace polycert
