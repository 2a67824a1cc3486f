#include "polycert/synth.hpp"

#include "polycert/checker.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polycert {

namespace {

std::vector<NormalPoly> features(const Context& params, const SearchBounds& bounds) {
    NormalPoly sum = NormalPoly::constant(0);
    std::vector<NormalPoly> out;
    for (std::size_t level = 0; level < params.size(); ++level) {
        if (!params.at_level(level).is_base()) continue;
        sum = sum + NormalPoly::variable(level);
        if (bounds.linear) out.push_back(NormalPoly::variable(level));
    }
    std::vector<NormalPoly> arguments{sum};
    if (bounds.atom_arguments == AtomArguments::SumAndConstants)
        for (int c : {0, 1})
            if (NormalPoly::constant(c) != sum) arguments.push_back(NormalPoly::constant(c));
    for (std::size_t level = 0; level < params.size(); ++level) {
        const SimpleType& t = params.at_level(level);
        if (t.is_base() || !t.is_first_order()) continue;
        for (const auto& arg : arguments)
            out.push_back(NormalPoly::atom(level, std::vector<NormalPoly>(t.arity(), arg)));
    }
    return out;
}

void collect_symbols(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
    case Term::Kind::Symbol: out.insert(t.name()); break;
    case Term::Kind::Var: break;
    case Term::Kind::Lam: collect_symbols(t.body(), out); break;
    case Term::Kind::App:
        collect_symbols(t.function(), out);
        collect_symbols(t.argument(), out);
        break;
    }
}

}  // namespace

std::vector<Template> template_space(const SimpleType& type, const SearchBounds& bounds) {
    Context params(type.domains());
    std::vector<NormalPoly> monomials{NormalPoly::constant(1)};
    std::vector<NormalPoly> fs = features(params, bounds);
    monomials.insert(monomials.end(), fs.begin(), fs.end());
    if (bounds.products)
        for (std::size_t i = 0; i < fs.size(); ++i)
            for (std::size_t j = i + 1; j < fs.size(); ++j) monomials.push_back(fs[i] * fs[j]);

    const unsigned base = bounds.max_coefficient + 1;
    std::vector<std::vector<unsigned>> vectors{std::vector<unsigned>(monomials.size(), 0)};
    for (;;) {
        std::vector<unsigned> v = vectors.back();
        std::size_t i = v.size();
        while (i > 0 && v[i - 1] + 1 == base) v[--i] = 0;
        if (i == 0) break;
        ++v[i - 1];
        vectors.push_back(std::move(v));
    }
    auto weight_of = [](const std::vector<unsigned>& v) {
        unsigned w = 0;
        for (unsigned c : v) w += c;
        return w;
    };
    std::stable_sort(vectors.begin(), vectors.end(), [&](const auto& a, const auto& b) {
        unsigned wa = weight_of(a), wb = weight_of(b);
        return wa != wb ? wa < wb : a < b;
    });

    std::vector<Template> out;
    auto less = [](const NormalPoly& a, const NormalPoly& b) { return compare(a, b) < 0; };
    std::set<NormalPoly, decltype(less)> seen(less);
    for (auto& v : vectors) {
        NormalPoly body = NormalPoly::constant(0);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) body = body + NormalPoly::constant(v[i]) * monomials[i];
        if (!seen.insert(body).second) continue;
        PolyExpr entry = poly_expr_from_normal(body, params, type.result());
        auto domains = type.domains();
        for (auto it = domains.rbegin(); it != domains.rend(); ++it) entry = PolyExpr::lam(*it, std::move(entry));
        unsigned w = weight_of(v);
        out.push_back(Template{std::move(v), w, std::move(body), std::move(entry)});
    }
    return out;
}

namespace {

class Search {
public:
    Search(const Afs& afs, const SearchBounds& bounds)
        : afs_(afs), deadline_(std::chrono::steady_clock::now() + bounds.timeout) {
        limits_.samples = 0;
        const auto& symbols = afs.signature.symbols();
        for (const auto& d : symbols) {
            spaces_.push_back(template_space(d.type, bounds));
            auto& groups = by_weight_.emplace_back();
            for (std::size_t i = 0; i < spaces_.back().size(); ++i) {
                unsigned w = spaces_.back()[i].weight;
                if (groups.size() <= w) groups.resize(w + 1);
                groups[w].push_back(i);
            }
        }
        suffix_max_.assign(symbols.size() + 1, 0);
        for (std::size_t k = symbols.size(); k-- > 0;)
            suffix_max_[k] = suffix_max_[k + 1] + static_cast<unsigned>(by_weight_[k].size() - 1);

        rules_at_.resize(symbols.size() + 1);
        for (std::size_t r = 0; r < afs.rules.size(); ++r) {
            std::set<std::string> names;
            collect_symbols(afs.rules[r].lhs, names);
            collect_symbols(afs.rules[r].rhs, names);
            std::vector<std::size_t> ids;
            for (std::size_t k = 0; k < symbols.size(); ++k)
                if (names.count(symbols[k].name)) ids.push_back(k);
            // Rules without symbols are checked before anything is chosen.
            rules_at_[ids.empty() ? 0 : ids.back() + 1].push_back(r);
            rule_symbols_.push_back(std::move(ids));
        }
        chosen_.assign(symbols.size(), 0);
    }

    SearchResult run() {
        SearchResult result;
        for (unsigned total = 0; total <= suffix_max_[0]; ++total) {
            if (descend(0, total)) {
                result.interpretation = current();
                break;
            }
            if (timed_out_ || dead_) break;
        }
        result.timed_out = timed_out_;
        result.candidates = checks_;
        return result;
    }

private:
    // Symbols [0, k) are chosen; the rest must weigh exactly `remaining`.
    bool descend(std::size_t k, unsigned remaining) {
        if (!rules_hold(k)) {
            if (k == 0) dead_ = true;
            return false;
        }
        if (k == chosen_.size()) return remaining == 0 && certify(afs_, current(), limits_).certified;
        if (remaining > suffix_max_[k]) return false;
        unsigned rest = suffix_max_[k + 1];
        unsigned lo = remaining > rest ? remaining - rest : 0;
        unsigned hi = std::min<unsigned>(remaining, static_cast<unsigned>(by_weight_[k].size() - 1));
        for (unsigned w = lo; w <= hi; ++w) {
            for (std::size_t idx : by_weight_[k][w]) {
                if (std::chrono::steady_clock::now() > deadline_) {
                    timed_out_ = true;
                    return false;
                }
                chosen_[k] = idx;
                if (descend(k + 1, remaining - w)) return true;
                if (timed_out_) return false;
            }
        }
        return false;
    }

    bool rules_hold(std::size_t k) {
        for (std::size_t r : rules_at_[k])
            if (!rule_holds(r)) return false;
        return true;
    }

    bool rule_holds(std::size_t r) {
        std::vector<std::size_t> key{r};
        for (std::size_t k : rule_symbols_[r]) key.push_back(chosen_[k]);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        ++checks_;
        Afs single{afs_.signature, {afs_.rules[r]}};
        bool ok = false;
        try {
            auto cs = derive_constraints(single, current());
            ok = is_proven(check_constraint(cs.front(), limits_));
        } catch (const Error&) {
            ok = false;
        }
        memo_.emplace(std::move(key), ok);
        return ok;
    }

    Interpretation current() const {
        Interpretation J;
        const auto& symbols = afs_.signature.symbols();
        for (std::size_t k = 0; k < symbols.size(); ++k) J.set(symbols[k].name, spaces_[k][chosen_[k]].entry);
        return J;
    }

    const Afs& afs_;
    std::chrono::steady_clock::time_point deadline_;
    CheckLimits limits_;
    std::vector<std::vector<Template>> spaces_;
    std::vector<std::vector<std::vector<std::size_t>>> by_weight_;
    std::vector<unsigned> suffix_max_;
    std::vector<std::vector<std::size_t>> rules_at_;
    std::vector<std::vector<std::size_t>> rule_symbols_;
    std::vector<std::size_t> chosen_;
    std::map<std::vector<std::size_t>, bool> memo_;
    std::size_t checks_ = 0;
    bool timed_out_ = false;
    bool dead_ = false;
};

}  // namespace

SearchResult search(const Afs& afs, const SearchBounds& bounds) {
    afs.validate();
    return Search(afs, bounds).run();
}

}  // namespace polycert
