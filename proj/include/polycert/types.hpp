#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

/// Simple types over named base types: `b` or `A -> B`.
class SimpleType {
public:
    static SimpleType base(std::string name);
    static SimpleType arrow(SimpleType domain, SimpleType codomain);
    /// Builds `domains[0] -> ... -> domains[n-1] -> result`.
    static SimpleType arrows(const std::vector<SimpleType>& domains, SimpleType result);

    bool is_base() const;
    bool is_arrow() const { return !is_base(); }

    const std::string& name() const;
    const SimpleType& domain() const;
    const SimpleType& codomain() const;

    /// Number of leading arrows.
    std::size_t arity() const;
    /// Domains of the leading arrows, outermost first.
    std::vector<SimpleType> domains() const;
    /// The base type left after stripping `arity()` domains.
    const SimpleType& result() const;

    /// True for base types and for arrows whose domains are all base types.
    bool is_first_order() const;

    std::string to_string() const;

    friend bool operator==(const SimpleType& a, const SimpleType& b);
    friend bool operator!=(const SimpleType& a, const SimpleType& b) { return !(a == b); }
    friend bool operator<(const SimpleType& a, const SimpleType& b);

private:
    struct Node;
    explicit SimpleType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Typing context. Terms address it by de Bruijn index (0 = innermost
/// binder); polynomials address it by level (0 = outermost binder), which
/// stays stable when the context is extended.
class Context {
public:
    Context() = default;
    /// `outermost_first[0]` is the outermost variable.
    explicit Context(std::vector<SimpleType> outermost_first) : types_(std::move(outermost_first)) {}

    std::size_t size() const { return types_.size(); }
    bool empty() const { return types_.empty(); }

    const SimpleType& at_index(std::size_t de_bruijn) const { return types_[level_of(de_bruijn)]; }
    const SimpleType& at_level(std::size_t level) const { return types_[level]; }

    std::size_t level_of(std::size_t de_bruijn) const { return types_.size() - 1 - de_bruijn; }
    std::size_t index_of(std::size_t level) const { return types_.size() - 1 - level; }

    /// Adds a new innermost variable.
    Context extended(SimpleType type) const;

    const std::vector<SimpleType>& levels() const { return types_; }

    friend bool operator==(const Context& a, const Context& b) { return a.types_ == b.types_; }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }

private:
    std::vector<SimpleType> types_;
};

struct SymbolDecl {
    std::string name;
    SimpleType type;

    friend bool operator==(const SymbolDecl& a, const SymbolDecl& b) {
        return a.name == b.name && a.type == b.type;
    }
};

/// Function symbols with their types. Declaration order is kept; the set of
/// base types is every base type mentioned plus any declared explicitly.
class Signature {
public:
    Signature() = default;

    /// Throws Error on a duplicate symbol name.
    void declare(std::string name, SimpleType type);
    void declare_base(std::string name);

    std::optional<SimpleType> find(const std::string& name) const;
    bool contains(const std::string& name) const { return find(name).has_value(); }

    const std::vector<SymbolDecl>& symbols() const { return symbols_; }
    const std::vector<std::string>& base_types() const { return bases_; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.symbols_ == b.symbols_ && a.bases_ == b.bases_;
    }

private:
    void collect_bases(const SimpleType& type);

    std::vector<SymbolDecl> symbols_;
    std::vector<std::string> bases_;
};

}  // namespace polycert
