#pragma once

#include "polycert/checker.hpp"
#include "polycert/trace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace polycert::testing {

inline std::string data_path(const std::string& name) { return std::string(POLYCERT_TEST_DATA) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct System {
    Afs afs;
    Interpretation J;
};

inline System load_system(const std::string& text) {
    auto [afs, J] = elaborate(parse_trace(text));
    return {std::move(afs), std::move(J)};
}

inline std::string map_trace() { return read_text(data_path("map.onijn")); }
inline System load_map() { return load_system(map_trace()); }

inline SimpleType base(const char* name) { return SimpleType::base(name); }
inline SimpleType arrow(SimpleType a, SimpleType b) { return SimpleType::arrow(std::move(a), std::move(b)); }

/// Context of the map_cons constraint: X : a, Y : list, G : a -> a.
inline Context map_cons_context() { return Context({base("a"), base("list"), arrow(base("a"), base("a"))}); }

/// Parses `text` over `ctx` with constraint-style names (y0, y1, G0, ...).
inline NormalPoly poly(const std::string& text, const Context& ctx) {
    return parse_normal_poly(text, ctx, constraint_name_list(ctx));
}

inline std::string show(const NormalPoly& p, const Context& ctx) { return render(p, constraint_names(ctx)); }

}  // namespace polycert::testing
