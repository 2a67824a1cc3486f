#pragma once

#include "polycert/natural.hpp"
#include "polycert/normal_poly.hpp"
#include "polycert/types.hpp"
#include "polycert/value.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace polycert {

/// `(x1, ..., xk) -> constant + sum_i coefficients[i] * xi`. Weakly monotone
/// in every argument since all coefficients are natural.
struct MonotoneFunction {
    Natural constant;
    std::vector<Natural> coefficients;

    Natural operator()(const std::vector<Natural>& args) const;
    /// The same function as a symbolic curried value of `type`.
    Value as_value(const SimpleType& type) const;
    std::string to_string() const;

    friend bool operator==(const MonotoneFunction& a, const MonotoneFunction& b) {
        return a.constant == b.constant && a.coefficients == b.coefficients;
    }
};

/// Values for the variables of a context, keyed by level.
struct Assignment {
    std::map<std::size_t, Natural> naturals;
    std::map<std::size_t, MonotoneFunction> functions;

    /// `y0 = 2, G0 = (x1) -> 3 + x1` using `names` for the variables.
    std::string to_string(const VarNamer& names) const;
};

/// Throws SemanticError(MissingBinding) for an unassigned variable.
Natural eval_normal(const NormalPoly& p, const Assignment& a);

/// Ranges for the random sampling family.
struct SamplingRanges {
    unsigned max_natural = 12;
    unsigned max_constant = 16;
    unsigned max_coefficient = 3;
};

/// Draws assignments from the sampling family: naturals (biased towards 0)
/// for base variables; for first-order function variables the constant-0
/// function, identity-like sums, or random linear combinations.
class AssignmentSampler {
public:
    explicit AssignmentSampler(std::uint64_t seed, SamplingRanges ranges = {});

    /// nullopt when `ctx` has a variable whose arguments are functions.
    std::optional<Assignment> sample(const Context& ctx);
    MonotoneFunction sample_function(std::size_t arity);
    Natural sample_natural();

    static bool can_sample(const Context& ctx);

private:
    std::mt19937_64 rng_;
    SamplingRanges ranges_;
};

/// Seed from POLYCERT_SEED when set, otherwise a fixed default.
std::uint64_t default_seed();

}  // namespace polycert
