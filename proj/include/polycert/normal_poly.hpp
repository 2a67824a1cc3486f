#pragma once

#include "polycert/natural.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

class NormalPoly;

/// A fully applied higher-order variable `G(a1, ..., an)` of base type.
/// Variables are identified by context level (0 = outermost).
struct Atom {
    std::size_t head = 0;
    std::vector<NormalPoly> args;
};

/// `coefficient * x_i^e_i * ... * G(..) * H(..) ...`; `powers` is sorted by
/// level with positive exponents, `atoms` is a sorted multiset.
struct Monomial {
    Natural coefficient;
    std::vector<std::pair<std::size_t, unsigned>> powers;
    std::vector<Atom> atoms;

    unsigned degree() const;
    bool is_constant() const { return powers.empty() && atoms.empty(); }
};

/// Canonical sum of monomials over the naturals. Monomials with the same
/// shape are merged, zero coefficients are dropped, and the monomials are
/// kept sorted by (degree, atom count, powers, atoms).
class NormalPoly {
public:
    NormalPoly() = default;

    static NormalPoly constant(Natural value);
    static NormalPoly variable(std::size_t level);
    static NormalPoly atom(std::size_t head, std::vector<NormalPoly> args);
    /// Canonicalizes an arbitrary list of monomials.
    static NormalPoly from_monomials(std::vector<Monomial> monomials);

    bool is_zero() const { return monomials_.empty(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Coefficient of the constant monomial (0 if absent).
    Natural constant_term() const;
    /// Copy without the constant monomial.
    NormalPoly without_constant() const;
    bool has_atoms() const;

    friend NormalPoly operator+(const NormalPoly& a, const NormalPoly& b);
    friend NormalPoly operator*(const NormalPoly& a, const NormalPoly& b);
    NormalPoly& operator+=(const NormalPoly& other) { return *this = *this + other; }

    friend bool operator==(const NormalPoly& a, const NormalPoly& b);
    friend bool operator!=(const NormalPoly& a, const NormalPoly& b) { return !(a == b); }

private:
    std::vector<Monomial> monomials_;
};

/// Three-way structural comparisons backing the canonical order.
int compare(const NormalPoly& a, const NormalPoly& b);
int compare(const Atom& a, const Atom& b);
/// Compares monomial shapes, ignoring coefficients.
int compare_shape(const Monomial& a, const Monomial& b);

inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }
inline bool operator<(const NormalPoly& a, const NormalPoly& b) { return compare(a, b) < 0; }

/// A monomial with coefficient 1 and the same shape.
Monomial shape_of(const Monomial& m);

/// Splits `p` into `sum_k coefficient_k * atoms_k`, grouping monomials by
/// their atom multiset; the coefficient polynomials are atom-free.
std::vector<std::pair<std::vector<Atom>, NormalPoly>> group_by_atoms(const NormalPoly& p);

/// Sum of coefficient * (degree + 1) over every monomial, recursing into
/// atom arguments. Used to order candidate hosts.
Natural weight(const NormalPoly& p);

using VarNamer = std::function<std::string(std::size_t level)>;

/// Renders in the proof-trace expression syntax: `3 + 2*y1 + 3*y0*G1(y0)`.
std::string render(const NormalPoly& p, const VarNamer& names);
std::string render(const Atom& a, const VarNamer& names);
/// `(3 + y0)*G0(y1)` style rendering of a grouped polynomial.
std::string render_grouped(const NormalPoly& p, const VarNamer& names);

}  // namespace polycert
