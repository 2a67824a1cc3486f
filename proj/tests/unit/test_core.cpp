#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace polycert;
using namespace polycert::testing;

namespace {

const SimpleType A = base("a");
const SimpleType L = base("list");
const SimpleType AA = arrow(A, A);

Term sym(const char* n) { return Term::symbol(n); }
Term var(std::size_t i) { return Term::var(i); }

Signature map_signature() { return load_map().afs.signature; }

}  // namespace

TEST_CASE("simple types") {
    SimpleType t = SimpleType::arrows({L, AA}, L);
    CHECK(t.arity() == 2);
    CHECK(t.result() == L);
    CHECK(t.domains() == std::vector<SimpleType>{L, AA});
    CHECK(t.to_string() == "list -> (a -> a) -> list");
    CHECK_FALSE(t.is_first_order());
    CHECK(arrow(A, arrow(A, A)).is_first_order());
    CHECK(A.arity() == 0);
    CHECK(A != L);
    CHECK(arrow(A, L) == arrow(A, L));
}

TEST_CASE("contexts address by index and level") {
    Context c({A, L, AA});
    CHECK(c.at_index(0) == AA);
    CHECK(c.at_level(0) == A);
    CHECK(c.level_of(0) == 2);
    Context d = c.extended(L);
    CHECK(d.size() == 4);
    CHECK(d.at_index(0) == L);
    CHECK(d.at_level(2) == AA);
}

TEST_CASE("signature rejects duplicates and collects base types") {
    Signature s;
    s.declare("nil", L);
    s.declare("cons", SimpleType::arrows({A, L}, L));
    CHECK_THROWS_AS(s.declare("nil", L), Error);
    CHECK(s.base_types() == std::vector<std::string>{"list", "a"});
    CHECK(s.find("cons")->arity() == 2);
    CHECK_FALSE(s.find("map"));
}

TEST_CASE("infer_type") {
    Signature sig = map_signature();
    CHECK(infer_type(sig, {}, sym("map")) == SimpleType::arrows({L, AA}, L));
    CHECK(infer_type(sig, Context({A}), var(0)) == A);
    CHECK(infer_type(sig, {}, Term::lam(A, var(0))) == AA);

    SUBCASE("application mismatch at the argument") {
        try {
            infer_type(sig, {}, Term::app(sym("nil"), sym("nil")));
            FAIL("expected a type error");
        } catch (const TypeError& e) {
            CHECK(e.kind() == TypeError::Kind::ApplicationMismatch);
        }
    }
    SUBCASE("unbound variable is located") {
        try {
            infer_type(sig, Context({A}), Term::apply(sym("cons"), {var(0), var(3)}));
            FAIL("expected a type error");
        } catch (const TypeError& e) {
            CHECK(e.kind() == TypeError::Kind::UnboundVariable);
            CHECK(e.position() == Position{Direction::Right});
            CHECK(to_string(e.position()) == "R");
        }
    }
    SUBCASE("unknown symbol") {
        CHECK_THROWS_AS(infer_type(sig, {}, sym("zip")), TypeError);
    }
}

TEST_CASE("substitute") {
    Signature sig = map_signature();
    Term t = Term::apply(sym("cons"), {var(0), var(1)});
    CHECK(substitute(t, Substitution::identity(2)) == t);
    CHECK(substitute(var(0), Substitution({sym("nil")})) == sym("nil"));

    // \x. F x with F := \y. H y; H stays free and is shifted under both binders.
    Term body = Term::lam(A, Term::app(var(1), var(0)));
    Term image = Term::lam(A, Term::app(var(1), var(0)));
    Term got = substitute(body, Substitution({image}));
    CHECK(got == Term::lam(A, Term::app(Term::lam(A, Term::app(var(2), var(0))), var(0))));
    CHECK(infer_type(sig, Context({AA}), got) == AA);

    CHECK_THROWS_AS(substitute(var(0), Substitution({std::nullopt})), std::logic_error);
}

TEST_CASE("instantiate is beta") {
    // (\x. cons x Y) X  over [X : a, Y : list]
    Term body = Term::apply(sym("cons"), {var(0), var(1)});
    CHECK(instantiate(body, var(1)) == Term::apply(sym("cons"), {var(1), var(0)}));
}

TEST_CASE("match_term") {
    System sys = load_map();
    const auto& nil_rule = sys.afs.rules[0];
    const auto& cons_rule = sys.afs.rules[1];
    Term id = Term::lam(A, var(0));
    Term subject = Term::apply(sym("map"), {sym("nil"), id});

    auto s = match_term(sys.afs.signature, nil_rule.vars, nil_rule.lhs, {}, subject);
    REQUIRE(s);
    CHECK((*s)[0] == id);
    CHECK(substitute(nil_rule.lhs, *s) == subject);

    CHECK_FALSE(match_term(sys.afs.signature, cons_rule.vars, cons_rule.lhs, {}, subject));

    Signature sig;
    sig.declare("f", SimpleType::arrows({A, A}, A));
    sig.declare("c", A);
    sig.declare("d", A);
    Term pattern = Term::apply(sym("f"), {var(0), var(0)});
    CHECK_FALSE(match_term(sig, Context({A}), pattern, {}, Term::apply(sym("f"), {sym("c"), sym("d")})));
    auto same = match_term(sig, Context({A}), pattern, {}, Term::apply(sym("f"), {sym("c"), sym("c")}));
    REQUIRE(same);
    CHECK((*same)[0] == sym("c"));
}

TEST_CASE("match_term does not let variables capture local binders") {
    Signature sig;
    sig.declare("g", arrow(AA, A));
    // g (\x. X) against g (\x. x): X would have to be the bound x.
    Term pattern = Term::app(sym("g"), Term::lam(A, var(1)));
    CHECK_FALSE(match_term(sig, Context({A}), pattern, {}, Term::app(sym("g"), Term::lam(A, var(0)))));
}

TEST_CASE("enumerate_steps") {
    System sys = load_map();
    Term id = Term::lam(A, var(0));
    auto steps = enumerate_steps(sys.afs, {}, Term::apply(sym("map"), {sym("nil"), id}));
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].term == sym("nil"));
    CHECK(steps[0].step == StepKind{StepKind::Kind::Rule, 0, {}});

    CHECK(enumerate_steps(sys.afs, {}, sym("nil")).empty());

    auto beta = enumerate_steps(sys.afs, {}, Term::app(Term::lam(L, var(0)), sym("nil")));
    REQUIRE(beta.size() == 1);
    CHECK(beta[0].term == sym("nil"));
    CHECK(beta[0].step.kind == StepKind::Kind::Beta);
    CHECK(beta[0].step.position.empty());
}

TEST_CASE("enumerate_steps finds redexes under binders and arguments") {
    System sys = load_map();
    // cons ((\x. x) X) (map nil G) over [X, Y, G]
    Context ctx = map_cons_context();
    Term t = Term::apply(sym("cons"), {Term::app(Term::lam(A, var(0)), var(2)),
                                      Term::apply(sym("map"), {sym("nil"), var(0)})});
    auto steps = enumerate_steps(sys.afs, ctx, t);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].step.kind == StepKind::Kind::Beta);
    CHECK(steps[0].step.position == Position{Direction::Left, Direction::Right});
    CHECK(steps[1].step.kind == StepKind::Kind::Rule);
    CHECK(steps[1].step.position == Position{Direction::Right});
    CHECK(t.at(steps[1].step.position) == Term::apply(sym("map"), {sym("nil"), var(0)}));
}

TEST_CASE("rules with right-hand variables absent on the left never fire") {
    Signature sig;
    sig.declare("c", A);
    Afs afs{sig, {RewriteRule{Context({A}), A, sym("c"), var(0), {"Z"}}}};
    CHECK(enumerate_steps(afs, {}, sym("c")).empty());
}

TEST_CASE("Afs::validate rejects ill-typed rules") {
    System sys = load_map();
    Afs bad = sys.afs;
    bad.rules[0].rhs = var(0);
    CHECK_THROWS_AS(bad.validate(), TypeError);
    CHECK_NOTHROW(sys.afs.validate());
}

TEST_CASE("type preservation and matching soundness over random terms") {
    System sys = load_map();
    Rng rng(11);
    Context ctx = map_cons_context();
    std::size_t steps = 0, matches = 0;
    for (int i = 0; i < 400; ++i) {
        SimpleType type = chance(rng, 0.5) ? L : A;
        Term t = random_map_term(rng, ctx, type, 5);
        REQUIRE(infer_type(sys.afs.signature, ctx, t) == type);
        for (const auto& r : enumerate_steps(sys.afs, ctx, t)) {
            ++steps;
            CHECK(infer_type(sys.afs.signature, ctx, r.term) == type);
        }
        for (const auto& rule : sys.afs.rules) {
            auto s = match_term(sys.afs.signature, rule.vars, rule.lhs, ctx, t);
            if (!s) continue;
            ++matches;
            CHECK(substitute(rule.lhs, *s) == t);
            CHECK(infer_type(sys.afs.signature, ctx, substitute(rule.rhs, *s)) == type);
        }
    }
    CHECK(steps > 0);
    CHECK(matches > 0);
}

TEST_CASE("bounded descent for the certified map system") {
    System sys = load_map();
    Rng rng(5);
    Context ctx = map_cons_context();
    for (int i = 0; i < 200; ++i) {
        Term t = random_map_term(rng, ctx, L, 6);
        std::size_t n = 0;
        for (; n < 1000; ++n) {
            auto steps = enumerate_steps(sys.afs, ctx, t);
            auto it = std::find_if(steps.begin(), steps.end(),
                                   [](const Reduct& r) { return r.step.kind == StepKind::Kind::Rule; });
            if (it == steps.end()) break;
            t = it->term;
        }
        CHECK(n < 1000);
    }
}
