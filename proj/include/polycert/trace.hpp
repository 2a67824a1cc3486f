#pragma once

#include "polycert/error.hpp"
#include "polycert/interp.hpp"
#include "polycert/natural.hpp"
#include "polycert/term.hpp"
#include "polycert/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycert {

// ---------------------------------------------------------------------------
// Raw syntax of .onijn proof traces
//
//   trace  := "YES" sig rules [interp]
//   sig    := "Signature:" "[" decl {";" decl} "]"
//   decl   := ident ":" type
//   type   := atom ["->" type]              atom := ident | "(" type ")"
//   rules  := "Rules:" "[" rule {";" rule} "]"
//   rule   := term "=>" term
//   term   := "\" ident "." term | aterm {aterm}
//   aterm  := ident | "(" term ")" | "\" ident "." term
//   interp := "Interpretation:" "[" "J(" ident ")" "=" poly {";" ...} "]"
//   poly   := ["Lam" "[" ident {";" ident} "]" "."] expr
//   expr   := prod {"+" prod}     prod := factor {"*" factor}
//   factor := number | ident ["(" expr {"," expr} ")"] | "(" expr ")"
//
// Lists may be empty and may end with a stray ";".
// ---------------------------------------------------------------------------

struct RawDecl {
    std::string name;
    SimpleType type;
    SourceLocation where;
};

struct RawTerm {
    enum class Kind { Ident, App, Lam };
    Kind kind = Kind::Ident;
    std::string name;               // Ident, or the Lam binder
    std::vector<RawTerm> children;  // App: {function, argument}; Lam: {body}
    SourceLocation where;
};

struct RawRule {
    RawTerm lhs;
    RawTerm rhs;
    SourceLocation where;
};

struct RawExpr {
    enum class Kind { Number, Ident, Call, Plus, Mult };
    Kind kind = Kind::Number;
    Natural value;                  // Number
    std::string name;               // Ident, Call
    std::vector<RawExpr> children;  // Call arguments; Plus/Mult operands
    SourceLocation where;
};

struct RawPoly {
    std::vector<std::pair<std::string, SourceLocation>> binders;
    RawExpr body;
};

struct RawInterpEntry {
    std::string symbol;
    RawPoly poly;
    SourceLocation where;
};

struct RawTrace {
    std::string verdict;
    std::vector<RawDecl> decls;
    std::vector<RawRule> rules;
    /// Absent when the trace carries no Interpretation section.
    std::optional<std::vector<RawInterpEntry>> interpretation;
};

/// Throws ParseError with the position of the first offending token.
RawTrace parse_trace(std::string_view text);

/// Resolves names, infers rule variable types and converts to de Bruijn.
/// Unconstrained variable types default to the first declared base type.
Afs elaborate_system(const RawTrace& raw);

/// Also elaborates the interpretation; throws ElaborationError.
std::pair<Afs, Interpretation> elaborate(const RawTrace& raw);

/// Emits the trace grammar; interpretation entries are rendered from their
/// normal forms with parameters named y<i> (base) and G<i> (function).
std::string render_trace(const Afs& afs, const std::optional<Interpretation>& J);

/// Rule side rendered with the rule's variable names.
std::string render_rule(const Afs& afs, const RewriteRule& rule);

/// Parses a polynomial expression over `ctx`, with `names[level]` naming the
/// variables, and returns its normal form.
NormalPoly parse_normal_poly(std::string_view text, const Context& ctx, const std::vector<std::string>& names);

/// Names of `ctx` variables in constraint style (y0, y1, G0, ...).
std::vector<std::string> constraint_name_list(const Context& ctx);

}  // namespace polycert
