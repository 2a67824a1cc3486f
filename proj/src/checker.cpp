#include "polycert/checker.hpp"

#include "polycert/error.hpp"

#include <algorithm>

namespace polycert {

VarNamer constraint_names(const Context& ctx) {
    std::vector<std::string> names;
    std::size_t bases = 0, functions = 0;
    for (const auto& t : ctx.levels())
        names.push_back(t.is_base() ? "y" + std::to_string(bases++) : "G" + std::to_string(functions++));
    return [names](std::size_t level) { return level < names.size() ? names[level] : "v" + std::to_string(level); };
}

std::string Constraint::to_string() const {
    auto names = constraint_names(ctx);
    return render_grouped(lhs, names) + " > " + render_grouped(rhs, names);
}

std::string to_string(UnknownReason reason) {
    switch (reason) {
    case UnknownReason::MergeFailed: return "MergeFailed";
    case UnknownReason::DominanceFailed: return "DominanceFailed";
    case UnknownReason::StrictnessFailed: return "StrictnessFailed";
    }
    return "Unknown";
}

std::vector<Constraint> derive_constraints(const Afs& afs, const Interpretation& J) {
    J.validate(afs.signature);
    TermInterpreter interpreter(afs.signature, J);
    std::vector<Constraint> out;
    out.reserve(afs.rules.size());
    for (std::size_t i = 0; i < afs.rules.size(); ++i) {
        const auto& rule = afs.rules[i];
        Context ctx = rule.vars;
        auto env = neutral_env(ctx);
        Value lhs = interpreter.interpret(ctx, env, rule.lhs);
        Value rhs = interpreter.interpret(ctx, env, rule.rhs);
        // Functions are compared pointwise: apply both sides to fresh variables.
        for (SimpleType t = rule.target; t.is_arrow(); t = t.codomain()) {
            Value fresh = neutral(ctx.size(), t.domain());
            ctx = ctx.extended(t.domain());
            lhs = lhs(fresh);
            rhs = rhs(fresh);
        }
        out.push_back(Constraint{std::move(ctx), lhs.poly(), rhs.poly(), i});
    }
    return out;
}

namespace {

// Monomial-wise dominance restricted to the monomials of q accepted by `keep`.
template <class Pred>
bool dominated(const NormalPoly& p, const NormalPoly& q, Pred keep) {
    const auto& pm = p.monomials();
    auto it = pm.begin();
    for (const auto& m : q.monomials()) {
        if (!keep(m)) continue;
        it = std::lower_bound(it, pm.end(), m, [](const Monomial& a, const Monomial& b) { return compare_shape(a, b) < 0; });
        if (it == pm.end() || compare_shape(*it, m) != 0 || it->coefficient < m.coefficient) return false;
    }
    return true;
}

}  // namespace

bool poly_ge(const NormalPoly& p, const NormalPoly& q) {
    return dominated(p, q, [](const Monomial&) { return true; });
}

bool poly_gt(const NormalPoly& p, const NormalPoly& q) {
    return dominated(p, q, [](const Monomial& m) { return !m.is_constant(); }) && p.constant_term() > q.constant_term();
}

Constraint cancel_common(const Constraint& c) {
    std::vector<Monomial> lhs, rhs;
    const auto& lm = c.lhs.monomials();
    const auto& rm = c.rhs.monomials();
    auto il = lm.begin(), ir = rm.begin();
    while (il != lm.end() || ir != rm.end()) {
        int cmp = il == lm.end() ? 1 : ir == rm.end() ? -1 : compare_shape(*il, *ir);
        if (cmp < 0) {
            lhs.push_back(*il++);
        } else if (cmp > 0) {
            rhs.push_back(*ir++);
        } else {
            Natural common = std::min(il->coefficient, ir->coefficient);
            Monomial l = *il++, r = *ir++;
            l.coefficient -= common;
            r.coefficient -= common;
            lhs.push_back(std::move(l));
            rhs.push_back(std::move(r));
        }
    }
    return Constraint{c.ctx, NormalPoly::from_monomials(std::move(lhs)), NormalPoly::from_monomials(std::move(rhs)),
                      c.rule};
}

namespace {

struct Occurrence {
    std::size_t monomial;
    std::size_t atom;
    std::vector<const Atom*> candidates;
};

bool hosts(const Atom& host, const Atom& demand) {
    if (host.head != demand.head || host.args.size() != demand.args.size()) return false;
    for (std::size_t i = 0; i < host.args.size(); ++i)
        if (!poly_ge(host.args[i], demand.args[i])) return false;
    return true;
}

class MergeSearch {
public:
    MergeSearch(const Constraint& c, std::size_t limit) : c_(c), limit_(limit) {}

    std::variant<MergeOutcome, MergeFailure> run() {
        std::vector<Atom> lhs_atoms;
        for (const auto& m : c_.lhs.monomials())
            for (const auto& a : m.atoms)
                if (std::find(lhs_atoms.begin(), lhs_atoms.end(), a) == lhs_atoms.end()) lhs_atoms.push_back(a);
        // Largest hosts first.
        std::stable_sort(lhs_atoms.begin(), lhs_atoms.end(), [](const Atom& a, const Atom& b) {
            Natural wa = 0, wb = 0;
            for (const auto& x : a.args) wa += weight(x);
            for (const auto& x : b.args) wb += weight(x);
            return wa > wb;
        });
        lhs_atoms_ = std::move(lhs_atoms);

        const auto& rm = c_.rhs.monomials();
        for (std::size_t i = 0; i < rm.size(); ++i) {
            for (std::size_t j = 0; j < rm[i].atoms.size(); ++j) {
                Occurrence occ{i, j, {}};
                for (const auto& host : lhs_atoms_)
                    if (hosts(host, rm[i].atoms[j])) occ.candidates.push_back(&host);
                if (occ.candidates.empty()) {
                    auto names = constraint_names(c_.ctx);
                    return MergeFailure{"no left-hand atom dominates " + render(rm[i].atoms[j], names), 0};
                }
                occurrences_.push_back(std::move(occ));
            }
        }
        if (occurrences_.empty()) return MergeOutcome{c_, {}, 0};

        choice_.assign(occurrences_.size(), 0);
        if (search(0)) return std::move(*found_);
        return MergeFailure{explored_ >= limit_ ? "backtracking limit reached" : "no host assignment is dominated",
                            explored_};
    }

private:
    bool search(std::size_t i) {
        if (i == occurrences_.size()) {
            ++explored_;
            return accept();
        }
        for (std::size_t k = 0; k < occurrences_[i].candidates.size(); ++k) {
            choice_[i] = k;
            if (search(i + 1)) return true;
            if (explored_ >= limit_) return false;
        }
        return false;
    }

    bool accept() {
        std::vector<Monomial> monomials = c_.rhs.monomials();
        std::vector<Hosting> hostings;
        for (std::size_t i = 0; i < occurrences_.size(); ++i) {
            const auto& occ = occurrences_[i];
            Atom& slot = monomials[occ.monomial].atoms[occ.atom];
            const Atom& host = *occ.candidates[choice_[i]];
            hostings.push_back({slot, host});
            slot = host;
        }
        NormalPoly rhs = NormalPoly::from_monomials(std::move(monomials));
        if (!dominated(c_.lhs, rhs, [](const Monomial& m) { return !m.atoms.empty(); })) return false;
        found_ = MergeOutcome{Constraint{c_.ctx, c_.lhs, std::move(rhs), c_.rule}, std::move(hostings), explored_};
        return true;
    }

    const Constraint& c_;
    std::size_t limit_;
    std::vector<Atom> lhs_atoms_;
    std::vector<Occurrence> occurrences_;
    std::vector<std::size_t> choice_;
    std::size_t explored_ = 0;
    std::optional<MergeOutcome> found_;
};

}  // namespace

std::variant<MergeOutcome, MergeFailure> monotonicity_merge(const Constraint& c, std::size_t backtrack_limit) {
    return MergeSearch(c, std::max<std::size_t>(backtrack_limit, 1)).run();
}

std::vector<std::string> ProofTrace::render() const {
    std::vector<std::string> out;
    out.push_back("constraint: " + original.to_string());
    if (cancelled) out.push_back("cancel: " + cancelled->to_string());
    auto names = constraint_names(original.ctx);
    for (const auto& h : hostings) {
        if (h.demand == h.host) continue;
        out.push_back("merge: " + polycert::render(h.demand, names) + " <= " + polycert::render(h.host, names));
    }
    if (merged) out.push_back("merged: " + merged->to_string());
    for (const auto& w : dominance) {
        std::string atoms;
        for (const auto& a : w.atoms) atoms += (atoms.empty() ? "" : "*") + polycert::render(a, names);
        if (atoms.empty()) {
            out.push_back("strict: " + polycert::render(w.lhs_coefficient, names) + " > " +
                          polycert::render(w.rhs_coefficient, names));
        } else {
            out.push_back("dominance: " + polycert::render(w.lhs_coefficient, names) +
                          " >= " + polycert::render(w.rhs_coefficient, names) + " for " + atoms);
        }
    }
    return out;
}

std::optional<Assignment> falsify_sample(const Constraint& c, std::size_t samples, std::uint64_t seed) {
    AssignmentSampler sampler(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        auto a = sampler.sample(c.ctx);
        if (!a) return std::nullopt;
        if (eval_normal(c.lhs, *a) <= eval_normal(c.rhs, *a)) return a;
    }
    return std::nullopt;
}

namespace {

std::vector<DominanceWitness> witnesses(const Constraint& c) {
    auto lhs_groups = group_by_atoms(c.lhs);
    std::vector<DominanceWitness> out;
    for (auto& [atoms, rhs_coefficient] : group_by_atoms(c.rhs)) {
        NormalPoly lhs_coefficient;
        for (const auto& [lhs_atoms, coefficient] : lhs_groups)
            if (lhs_atoms.size() == atoms.size() && std::equal(atoms.begin(), atoms.end(), lhs_atoms.begin()))
                lhs_coefficient = coefficient;
        out.push_back({atoms, std::move(lhs_coefficient), rhs_coefficient});
    }
    // The atom-free part always closes the proof through its constant.
    if (out.empty() || !out.front().atoms.empty()) {
        NormalPoly lhs_free;
        for (const auto& [atoms, coefficient] : lhs_groups)
            if (atoms.empty()) lhs_free = coefficient;
        out.insert(out.begin(), DominanceWitness{{}, std::move(lhs_free), NormalPoly{}});
    }
    return out;
}

Unknown unknown(UnknownReason reason, std::string detail, ProofTrace trace, const Constraint& original,
                const CheckLimits& limits) {
    Unknown u{reason, std::move(detail), std::nullopt, std::move(trace)};
    if (limits.samples > 0) u.counterexample = falsify_sample(original, limits.samples, limits.seed);
    return u;
}

}  // namespace

Verdict check_constraint(const Constraint& c, const CheckLimits& limits) {
    ProofTrace trace;
    trace.original = c;
    Constraint cancelled = cancel_common(c);
    trace.cancelled = cancelled;

    auto merged = monotonicity_merge(cancelled, limits.backtrack);
    if (auto* failure = std::get_if<MergeFailure>(&merged))
        return unknown(UnknownReason::MergeFailed, failure->detail, std::move(trace), c, limits);
    auto& outcome = std::get<MergeOutcome>(merged);
    trace.hostings = outcome.hostings;
    trace.merged = outcome.constraint;
    const Constraint& reduced = outcome.constraint;

    if (!poly_ge(reduced.lhs.without_constant(), reduced.rhs.without_constant()))
        return unknown(UnknownReason::DominanceFailed, "a right-hand monomial is not dominated", std::move(trace), c,
                       limits);
    if (!poly_gt(reduced.lhs, reduced.rhs))
        return unknown(UnknownReason::StrictnessFailed,
                       "constant " + reduced.lhs.constant_term().str() + " does not exceed " +
                           reduced.rhs.constant_term().str(),
                       std::move(trace), c, limits);
    trace.dominance = witnesses(reduced);
    return Proven{std::move(trace)};
}

CertResult certify(const Afs& afs, const Interpretation& J, const CheckLimits& limits) {
    CertResult result;
    result.obligations = {
        {"carrier well-founded and inhabited (naturals)", "discharged-by-construction"},
        {"application dominates plain application: papp(f, x) >= f(x)", "discharged-by-construction"},
        {"application strictly monotone in the function", "discharged-by-construction"},
        {"application strictly monotone in the argument", "discharged-by-construction"},
        {"every rule strictly decreasing for all assignments", "checked"},
    };
    std::vector<Constraint> constraints;
    try {
        afs.validate();
        constraints = derive_constraints(afs, J);
    } catch (const Error& e) {
        result.error = e.what();
        return result;
    }
    result.certified = true;
    for (auto& c : constraints) {
        Verdict v = check_constraint(c, limits);
        result.certified = result.certified && is_proven(v);
        std::size_t rule = c.rule;
        result.rules.push_back(RuleResult{rule, std::move(c), std::move(v)});
    }
    return result;
}

}  // namespace polycert
