#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace polycert {

// Polynomial coefficients and evaluated values. Nested interpretations grow
// quickly (every `map` layer roughly squares the degree), so fixed-width
// integers are not an option.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& n) { return n.str(); }

}  // namespace polycert
