#pragma once

#include "polycert/interp.hpp"
#include "polycert/normal_poly.hpp"
#include "polycert/term.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

namespace polycert {

enum class AtomArguments {
    Sum,            // G(y0 + ... + yk), or G(0) without base parameters
    SumAndConstants // additionally G(0) and G(1)
};

struct SearchBounds {
    unsigned max_coefficient = 3;
    bool linear = true;
    bool products = true;
    AtomArguments atom_arguments = AtomArguments::Sum;
    std::chrono::milliseconds timeout{120000};
};

struct Template {
    /// Coefficient of the constant, then of each feature, then of each
    /// product of two distinct features.
    std::vector<unsigned> coefficients;
    unsigned weight = 0;
    NormalPoly body;   // over the parameter context
    PolyExpr entry;    // closed, Lam-prefixed
};

/// Every template for a symbol of type `type`, by weight then coefficient
/// vector. Templates with equal normal forms appear once.
std::vector<Template> template_space(const SimpleType& type, const SearchBounds& bounds);

struct SearchResult {
    std::optional<Interpretation> interpretation;
    bool timed_out = false;
    std::size_t candidates = 0;  // rule checks performed
};

/// First interpretation in increasing total weight that certifies `afs`.
SearchResult search(const Afs& afs, const SearchBounds& bounds = {});

}  // namespace polycert
