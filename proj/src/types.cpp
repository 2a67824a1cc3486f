#include "polycert/types.hpp"

#include "polycert/error.hpp"

#include <algorithm>

namespace polycert {

struct SimpleType::Node {
    std::string name;  // empty for arrows
    std::optional<SimpleType> domain;
    std::optional<SimpleType> codomain;
};

SimpleType SimpleType::base(std::string name) {
    return SimpleType(std::make_shared<const Node>(Node{std::move(name), std::nullopt, std::nullopt}));
}

SimpleType SimpleType::arrow(SimpleType domain, SimpleType codomain) {
    return SimpleType(std::make_shared<const Node>(Node{{}, std::move(domain), std::move(codomain)}));
}

SimpleType SimpleType::arrows(const std::vector<SimpleType>& domains, SimpleType result) {
    for (auto it = domains.rbegin(); it != domains.rend(); ++it) result = arrow(*it, std::move(result));
    return result;
}

bool SimpleType::is_base() const { return !node_->domain.has_value(); }

const std::string& SimpleType::name() const { return node_->name; }
const SimpleType& SimpleType::domain() const { return *node_->domain; }
const SimpleType& SimpleType::codomain() const { return *node_->codomain; }

std::size_t SimpleType::arity() const {
    std::size_t n = 0;
    for (const SimpleType* t = this; t->is_arrow(); t = &t->codomain()) ++n;
    return n;
}

std::vector<SimpleType> SimpleType::domains() const {
    std::vector<SimpleType> out;
    for (const SimpleType* t = this; t->is_arrow(); t = &t->codomain()) out.push_back(t->domain());
    return out;
}

const SimpleType& SimpleType::result() const {
    const SimpleType* t = this;
    while (t->is_arrow()) t = &t->codomain();
    return *t;
}

bool SimpleType::is_first_order() const {
    for (const SimpleType* t = this; t->is_arrow(); t = &t->codomain())
        if (!t->domain().is_base()) return false;
    return true;
}

std::string SimpleType::to_string() const {
    if (is_base()) return name();
    std::string lhs = domain().to_string();
    if (domain().is_arrow()) lhs = "(" + lhs + ")";
    return lhs + " -> " + codomain().to_string();
}

bool operator==(const SimpleType& a, const SimpleType& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_base() != b.is_base()) return false;
    if (a.is_base()) return a.name() == b.name();
    return a.domain() == b.domain() && a.codomain() == b.codomain();
}

bool operator<(const SimpleType& a, const SimpleType& b) {
    if (a.is_base() != b.is_base()) return a.is_base();
    if (a.is_base()) return a.name() < b.name();
    if (a.domain() != b.domain()) return a.domain() < b.domain();
    return a.codomain() < b.codomain();
}

Context Context::extended(SimpleType type) const {
    Context out = *this;
    out.types_.push_back(std::move(type));
    return out;
}

void Signature::declare(std::string name, SimpleType type) {
    if (contains(name)) throw Error("duplicate symbol '" + name + "'");
    collect_bases(type);
    symbols_.push_back({std::move(name), std::move(type)});
}

void Signature::declare_base(std::string name) {
    if (std::find(bases_.begin(), bases_.end(), name) == bases_.end()) bases_.push_back(std::move(name));
}

void Signature::collect_bases(const SimpleType& type) {
    if (type.is_base()) {
        declare_base(type.name());
        return;
    }
    collect_bases(type.domain());
    collect_bases(type.codomain());
}

std::optional<SimpleType> Signature::find(const std::string& name) const {
    for (const auto& decl : symbols_)
        if (decl.name == name) return decl.type;
    return std::nullopt;
}

}  // namespace polycert
