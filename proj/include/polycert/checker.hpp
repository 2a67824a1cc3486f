#pragma once

#include "polycert/assignment.hpp"
#include "polycert/interp.hpp"
#include "polycert/normal_poly.hpp"
#include "polycert/term.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace polycert {

/// `lhs > rhs` for every assignment of the variables of `ctx`.
struct Constraint {
    Context ctx;
    NormalPoly lhs;
    NormalPoly rhs;
    std::size_t rule = 0;

    /// Rendered with `constraint_names`, monomials grouped by atoms.
    std::string to_string() const;
};

/// Display names for constraint variables: base-typed variables are
/// y0, y1, ... and function-typed ones G0, G1, ..., each counted separately.
VarNamer constraint_names(const Context& ctx);

/// One constraint per rule: both sides interpreted over the rule context and,
/// at function types, applied to fresh variables until base type.
std::vector<Constraint> derive_constraints(const Afs& afs, const Interpretation& J);

/// Sufficient test for `p >= q` over the naturals: every monomial of `q` has
/// an identically shaped monomial in `p` with a coefficient at least as large.
/// `false` means "not established".
bool poly_ge(const NormalPoly& p, const NormalPoly& q);

/// `poly_ge` on the non-constant parts plus a strictly larger constant.
bool poly_gt(const NormalPoly& p, const NormalPoly& q);

/// Subtracts the common part of monomials with the same shape on both sides.
Constraint cancel_common(const Constraint& c);

/// The right-hand atom `demand` is bounded by `host` (from the left-hand
/// side) by weak monotonicity: each host argument dominates the demand's.
struct Hosting {
    Atom demand;
    Atom host;
};

enum class UnknownReason { MergeFailed, DominanceFailed, StrictnessFailed };

std::string to_string(UnknownReason reason);

struct MergeOutcome {
    Constraint constraint;
    std::vector<Hosting> hostings;
    std::size_t explored = 0;
};

struct MergeFailure {
    std::string detail;
    std::size_t explored = 0;
};

/// Rewrites every right-hand atom to the arguments of a dominating left-hand
/// atom with the same head, so the dominance test can compare shapes.
/// Hosts are tried largest first; at most `backtrack_limit` complete host
/// assignments are examined.
std::variant<MergeOutcome, MergeFailure> monotonicity_merge(const Constraint& c, std::size_t backtrack_limit);

/// Per group of identical atoms, the left coefficient polynomial dominates
/// the right one.
struct DominanceWitness {
    std::vector<Atom> atoms;
    NormalPoly lhs_coefficient;
    NormalPoly rhs_coefficient;
};

struct ProofTrace {
    Constraint original;
    std::optional<Constraint> cancelled;
    std::vector<Hosting> hostings;
    std::optional<Constraint> merged;
    std::vector<DominanceWitness> dominance;

    /// Human-readable steps in trace expression syntax.
    std::vector<std::string> render() const;
};

struct Proven {
    ProofTrace trace;
};

struct Unknown {
    UnknownReason reason;
    std::string detail;
    std::optional<Assignment> counterexample;
    ProofTrace trace;
};

using Verdict = std::variant<Proven, Unknown>;

inline bool is_proven(const Verdict& v) { return std::holds_alternative<Proven>(v); }

struct CheckLimits {
    std::size_t backtrack = 64;
    std::size_t samples = 1000;
    std::uint64_t seed = default_seed();
};

/// cancel_common, then monotonicity_merge, then poly_gt. On failure the
/// falsifier looks for a counterexample with `limits.samples` draws.
Verdict check_constraint(const Constraint& c, const CheckLimits& limits = {});

/// First sampled assignment with `lhs <= rhs`, if any.
std::optional<Assignment> falsify_sample(const Constraint& c, std::size_t samples, std::uint64_t seed = default_seed());

struct RuleResult {
    std::size_t rule = 0;
    Constraint constraint;
    Verdict verdict;
};

/// A side condition of the termination model and how it is met.
struct Obligation {
    std::string name;
    std::string status;
};

struct CertResult {
    bool certified = false;
    std::vector<RuleResult> rules;
    std::vector<Obligation> obligations;
    /// Type or shape error that prevented checking; rules is then empty.
    std::optional<std::string> error;
};

CertResult certify(const Afs& afs, const Interpretation& J, const CheckLimits& limits = {});

}  // namespace polycert
