#include "polycert/normal_poly.hpp"

#include <algorithm>

namespace polycert {

namespace {

template <class T>
int three_way(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_powers(const std::vector<std::pair<std::size_t, unsigned>>& a,
                   const std::vector<std::pair<std::size_t, unsigned>>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = three_way(a[i].first, b[i].first)) return c;
        // Higher exponent first: y0*y0 before y0*y1.
        if (int c = three_way(b[i].second, a[i].second)) return c;
    }
    return three_way(a.size(), b.size());
}

int compare_atom_lists(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a[i], b[i])) return c;
    return three_way(a.size(), b.size());
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.coefficient = a.coefficient * b.coefficient;
    auto ia = a.powers.begin(), ib = b.powers.begin();
    while (ia != a.powers.end() || ib != b.powers.end()) {
        if (ib == b.powers.end() || (ia != a.powers.end() && ia->first < ib->first)) {
            out.powers.push_back(*ia++);
        } else if (ia == a.powers.end() || ib->first < ia->first) {
            out.powers.push_back(*ib++);
        } else {
            out.powers.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.atoms.reserve(a.atoms.size() + b.atoms.size());
    std::merge(a.atoms.begin(), a.atoms.end(), b.atoms.begin(), b.atoms.end(), std::back_inserter(out.atoms));
    return out;
}

}  // namespace

unsigned Monomial::degree() const {
    unsigned d = static_cast<unsigned>(atoms.size());
    for (const auto& [level, exponent] : powers) d += exponent;
    return d;
}

int compare_shape(const Monomial& a, const Monomial& b) {
    if (int c = three_way(a.degree(), b.degree())) return c;
    if (int c = three_way(a.atoms.size(), b.atoms.size())) return c;
    if (int c = compare_powers(a.powers, b.powers)) return c;
    return compare_atom_lists(a.atoms, b.atoms);
}

int compare(const Atom& a, const Atom& b) {
    if (int c = three_way(a.head, b.head)) return c;
    std::size_t n = std::min(a.args.size(), b.args.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
    return three_way(a.args.size(), b.args.size());
}

int compare(const NormalPoly& a, const NormalPoly& b) {
    const auto& ma = a.monomials();
    const auto& mb = b.monomials();
    std::size_t n = std::min(ma.size(), mb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare_shape(ma[i], mb[i])) return c;
        if (int c = three_way(ma[i].coefficient, mb[i].coefficient)) return c;
    }
    return three_way(ma.size(), mb.size());
}

bool operator==(const NormalPoly& a, const NormalPoly& b) { return compare(a, b) == 0; }

NormalPoly NormalPoly::constant(Natural value) {
    NormalPoly p;
    if (value != 0) p.monomials_.push_back(Monomial{std::move(value), {}, {}});
    return p;
}

NormalPoly NormalPoly::variable(std::size_t level) {
    NormalPoly p;
    p.monomials_.push_back(Monomial{1, {{level, 1u}}, {}});
    return p;
}

NormalPoly NormalPoly::atom(std::size_t head, std::vector<NormalPoly> args) {
    NormalPoly p;
    p.monomials_.push_back(Monomial{1, {}, {Atom{head, std::move(args)}}});
    return p;
}

NormalPoly NormalPoly::from_monomials(std::vector<Monomial> monomials) {
    for (auto& m : monomials) std::sort(m.atoms.begin(), m.atoms.end());
    std::stable_sort(monomials.begin(), monomials.end(),
                     [](const Monomial& a, const Monomial& b) { return compare_shape(a, b) < 0; });
    NormalPoly p;
    for (auto& m : monomials) {
        if (m.coefficient == 0) continue;
        if (!p.monomials_.empty() && compare_shape(p.monomials_.back(), m) == 0)
            p.monomials_.back().coefficient += m.coefficient;
        else
            p.monomials_.push_back(std::move(m));
    }
    return p;
}

Natural NormalPoly::constant_term() const {
    if (!monomials_.empty() && monomials_.front().is_constant()) return monomials_.front().coefficient;
    return 0;
}

NormalPoly NormalPoly::without_constant() const {
    NormalPoly p = *this;
    if (!p.monomials_.empty() && p.monomials_.front().is_constant()) p.monomials_.erase(p.monomials_.begin());
    return p;
}

bool NormalPoly::has_atoms() const {
    return std::any_of(monomials_.begin(), monomials_.end(), [](const Monomial& m) { return !m.atoms.empty(); });
}

NormalPoly operator+(const NormalPoly& a, const NormalPoly& b) {
    NormalPoly out;
    auto ia = a.monomials_.begin(), ib = b.monomials_.begin();
    while (ia != a.monomials_.end() || ib != b.monomials_.end()) {
        int c = ia == a.monomials_.end() ? 1 : ib == b.monomials_.end() ? -1 : compare_shape(*ia, *ib);
        if (c < 0) {
            out.monomials_.push_back(*ia++);
        } else if (c > 0) {
            out.monomials_.push_back(*ib++);
        } else {
            Monomial m = *ia++;
            m.coefficient += (ib++)->coefficient;
            out.monomials_.push_back(std::move(m));
        }
    }
    return out;
}

NormalPoly operator*(const NormalPoly& a, const NormalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Monomial> products;
    products.reserve(a.monomials_.size() * b.monomials_.size());
    for (const auto& ma : a.monomials_)
        for (const auto& mb : b.monomials_) products.push_back(multiply(ma, mb));
    return NormalPoly::from_monomials(std::move(products));
}

Monomial shape_of(const Monomial& m) { return Monomial{1, m.powers, m.atoms}; }

std::vector<std::pair<std::vector<Atom>, NormalPoly>> group_by_atoms(const NormalPoly& p) {
    std::vector<std::pair<std::vector<Atom>, std::vector<Monomial>>> groups;
    for (const auto& m : p.monomials()) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
            return compare_atom_lists(g.first, m.atoms) == 0;
        });
        if (it == groups.end()) {
            groups.emplace_back(m.atoms, std::vector<Monomial>{});
            it = std::prev(groups.end());
        }
        it->second.push_back(Monomial{m.coefficient, m.powers, {}});
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return compare_atom_lists(a.first, b.first) < 0; });
    std::vector<std::pair<std::vector<Atom>, NormalPoly>> out;
    out.reserve(groups.size());
    for (auto& [atoms, monomials] : groups) out.emplace_back(std::move(atoms), NormalPoly::from_monomials(std::move(monomials)));
    return out;
}

Natural weight(const NormalPoly& p) {
    Natural w = 0;
    for (const auto& m : p.monomials()) {
        w += m.coefficient * (m.degree() + 1);
        for (const auto& a : m.atoms)
            for (const auto& arg : a.args) w += weight(arg);
    }
    return w;
}

namespace {

std::string render_factors(const Monomial& m, const VarNamer& names) {
    std::string out;
    auto append = [&out](const std::string& factor) {
        if (!out.empty()) out += '*';
        out += factor;
    };
    for (const auto& [level, exponent] : m.powers)
        for (unsigned e = 0; e < exponent; ++e) append(names(level));
    for (const auto& a : m.atoms) append(render(a, names));
    return out;
}

}  // namespace

std::string render(const Atom& a, const VarNamer& names) {
    std::string out = names(a.head) + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ", ";
        out += render(a.args[i], names);
    }
    return out + ")";
}

std::string render(const NormalPoly& p, const VarNamer& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& m : p.monomials()) {
        if (!out.empty()) out += " + ";
        if (m.is_constant()) {
            out += m.coefficient.str();
            continue;
        }
        if (m.coefficient != 1) out += m.coefficient.str() + "*";
        out += render_factors(m, names);
    }
    return out;
}

std::string render_grouped(const NormalPoly& p, const VarNamer& names) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [atoms, coefficient] : group_by_atoms(p)) {
        if (!out.empty()) out += " + ";
        if (atoms.empty()) {
            out += render(coefficient, names);
            continue;
        }
        std::string atom_text;
        for (const auto& a : atoms) atom_text += (atom_text.empty() ? "" : "*") + render(a, names);
        if (coefficient == NormalPoly::constant(1))
            out += atom_text;
        else if (coefficient.monomials().size() == 1)
            out += render(coefficient, names) + "*" + atom_text;
        else
            out += "(" + render(coefficient, names) + ")*" + atom_text;
    }
    return out;
}

}  // namespace polycert
