#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace polycert;
using namespace polycert::testing;

namespace {

const SimpleType A = base("a");
const SimpleType B = base("b");
const SimpleType L = base("list");
const SimpleType AA = arrow(A, A);
const SimpleType BB = arrow(B, B);

BasePoly c(unsigned n) { return BasePoly::constant(n); }
PolyExpr var(std::size_t i) { return PolyExpr::var(i); }
PolyExpr from(BasePoly b, const SimpleType& t = B) { return PolyExpr::from_base(std::move(b), t); }

MonotoneFunction fn(unsigned constant, std::vector<unsigned> coefficients) {
    MonotoneFunction f{constant, {}};
    for (unsigned k : coefficients) f.coefficients.push_back(k);
    return f;
}

}  // namespace

TEST_CASE("normalize") {
    CHECK(normalize({}, from(BasePoly::plus(c(3), c(4)))) == NormalPoly::constant(7));

    System sys = load_map();
    SimpleType map_type = *sys.afs.signature.find("map");
    Context params(map_type.domains());
    CHECK(entry_body(*sys.J.find("map"), map_type) == poly("3*y0 + 3*y0*G0(y0)", params));

    // (\x. x + 1) 2
    PolyExpr lam = PolyExpr::lam(B, from(BasePoly::plus(BasePoly::from_poly(var(0)), c(1))));
    CHECK(normalize({}, PolyExpr::app(lam, from(c(2)))) == NormalPoly::constant(3));

    CHECK_THROWS_AS(normalize({}, lam), SemanticError);

    // H (\x. x) with H : (b -> b) -> b has no normal form with first-order atoms.
    Context ctx({arrow(BB, B)});
    try {
        normalize(ctx, PolyExpr::app(var(0), PolyExpr::lam(B, from(BasePoly::from_poly(var(0))))));
        FAIL("expected UnsupportedShape");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticError::Kind::UnsupportedShape);
    }
}

TEST_CASE("normal form is canonical") {
    Context ctx({B, B});
    NormalPoly p = NormalPoly::variable(0) * NormalPoly::variable(1) + NormalPoly::variable(1);
    NormalPoly q = NormalPoly::variable(1) + NormalPoly::variable(1) * NormalPoly::variable(0);
    CHECK(p == q);
    CHECK((NormalPoly::constant(0) + NormalPoly::constant(0)).is_zero());
    CHECK((NormalPoly::variable(0) * NormalPoly::constant(0)).is_zero());
    CHECK(render(poly("2*y1 + y0*y0 + 3 + y1", ctx), constraint_names(ctx)) == "3 + 3*y1 + y0*y0");
    CHECK(poly("(y0 + 1)*(y0 + 1)", ctx) == poly("1 + 2*y0 + y0*y0", ctx));
}

TEST_CASE("eval_normal") {
    Context g({BB});
    Assignment succ;
    succ.functions[0] = fn(1, {1});
    CHECK(eval_normal(poly("12 + 9*G0(3) + G0(0)", g), succ) == 49);
    CHECK(eval_normal(NormalPoly::constant(3), {}) == 3);

    Context yg({B, BB});
    Assignment a;
    a.naturals[0] = 2;
    a.functions[1] = fn(0, {2});
    CHECK(eval_normal(poly("3*y0 + 3*y0*G0(y0)", yg), a) == 30);

    try {
        eval_normal(NormalPoly::variable(0), {});
        FAIL("expected MissingBinding");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticError::Kind::MissingBinding);
    }
}

TEST_CASE("minimal_element") {
    CHECK(minimal_element(B).poly() == NormalPoly::constant(0));
    CHECK(minimal_element(BB)(neutral(0, B)).poly().is_zero());
    Value higher = minimal_element(arrow(BB, B));
    CHECK(higher(neutral(0, BB)).poly().is_zero());
}

TEST_CASE("lower_value") {
    CHECK(lower_value(B, Value::base(NormalPoly::constant(3))) == NormalPoly::constant(3));
    Context g({BB});
    CHECK(lower_value(BB, neutral(0, BB)) == poly("G0(0)", g));
    SimpleType bbb = arrow(B, BB);
    Context h({bbb});
    CHECK(lower_value(bbb, neutral(0, bbb)) == poly("G0(0, 0)", h));
}

TEST_CASE("add_nat_at_type") {
    CHECK(add_nat_at_type(B, Value::base(NormalPoly::constant(3)), NormalPoly::constant(4)).poly() ==
          NormalPoly::constant(7));

    System sys = load_map();
    Value map = evaluate(*sys.J.find("map"), {});
    Value partial = map(Value::base(NormalPoly::constant(3)));  // G -> 9 + 9*G(3)
    Value shifted = add_nat_at_type(arrow(AA, L), partial, NormalPoly::constant(3));
    Context g({AA});
    CHECK(shifted(neutral(0, AA)).poly() == poly("12 + 9*G0(3)", g));

    SimpleType bbb = arrow(B, BB);
    Context ctx({bbb, B, B});
    NormalPoly n = NormalPoly::constant(5);
    Value twice = add_nat_at_type(bbb, add_nat_at_type(bbb, neutral(0, bbb), n), n);
    CHECK(twice(neutral(1, B))(neutral(2, B)).poly() == poly("10 + G0(y0, y1)", ctx));
}

TEST_CASE("papp") {
    Value doubled = fn(0, {2}).as_value(BB);
    CHECK(papp(B, B, doubled, Value::base(NormalPoly::constant(5))).poly() == NormalPoly::constant(15));

    System sys = load_map();
    Value map = evaluate(*sys.J.find("map"), {});
    Value applied = papp(L, arrow(AA, L), map, Value::base(NormalPoly::constant(3)));
    Context g({AA});
    CHECK(applied(neutral(0, AA)).poly() == poly("12 + 9*G0(3)", g));

    CHECK(papp(B, B, minimal_element(BB), Value::base(NormalPoly::constant(5))).poly() == NormalPoly::constant(5));
}

TEST_CASE("semantic operators agree with the machine oracle") {
    AssignmentSampler sampler(3);
    const SimpleType bbb = arrow(B, BB);
    for (int i = 0; i < 100; ++i) {
        MonotoneFunction f = sampler.sample_function(2);
        Assignment a;
        a.functions[0] = f;
        Machine mf = machine_env(Context({bbb}), a)[0];
        CHECK(lower_value(bbb, f.as_value(bbb)) == NormalPoly::constant(machine_lower(bbb, mf)));
        Natural x = sampler.sample_natural(), y = sampler.sample_natural();
        Value sym = papp(B, BB, f.as_value(bbb), Value::base(NormalPoly::constant(x)));
        Machine mach = machine_papp(B, BB, mf, Machine{x, nullptr});
        CHECK(sym(Value::base(NormalPoly::constant(y))).poly() == NormalPoly::constant(mach.f(Machine{y, nullptr}).n));
    }
}

TEST_CASE("papp strictness hooks on the sampling family") {
    AssignmentSampler sampler(17);
    auto apply = [](const MonotoneFunction& f, const Natural& x) {
        return papp(B, B, f.as_value(BB), Value::base(NormalPoly::constant(x))).poly().constant_term();
    };
    for (int i = 0; i < 200; ++i) {
        MonotoneFunction f = sampler.sample_function(1);
        MonotoneFunction bigger = f;
        bigger.constant += 1;
        Natural x = sampler.sample_natural();
        CHECK(apply(f, x) >= linear(f, {x}));
        CHECK(apply(bigger, x) > apply(f, x));
        CHECK(apply(f, x + 1) > apply(f, x));
    }
}

TEST_CASE("interpret_term") {
    System sys = load_map();
    const Signature& sig = sys.afs.signature;
    Context g({AA});
    Term open = Term::apply(Term::symbol("map"), {Term::symbol("nil"), Term::var(0)});
    CHECK(interpret_term(sig, sys.J, g, open).poly() == poly("12 + G0(0) + 9*G0(3)", g));
    CHECK(interpret_term(sig, sys.J, {}, Term::symbol("nil")).poly() == NormalPoly::constant(3));
    Term closed = Term::apply(Term::symbol("map"), {Term::symbol("nil"), Term::lam(A, Term::var(0))});
    CHECK(interpret_term(sig, sys.J, {}, closed).poly() == NormalPoly::constant(39));

    Assignment id;
    id.functions[0] = fn(0, {1});
    CHECK(eval_normal(interpret_term(sig, sys.J, g, open).poly(), id) == 39);
}

TEST_CASE("interpretation validation") {
    System sys = load_map();
    Interpretation partial;
    partial.set("nil", *sys.J.find("nil"));
    CHECK_THROWS_AS(partial.validate(sys.afs.signature), SemanticError);

    Interpretation wrong = sys.J;
    wrong.set("cons", *sys.J.find("nil"));
    try {
        wrong.validate(sys.afs.signature);
        FAIL("expected IllTyped");
    } catch (const SemanticError& e) {
        CHECK(e.kind() == SemanticError::Kind::IllTyped);
    }
    CHECK_NOTHROW(sys.J.validate(sys.afs.signature));
}

TEST_CASE("normalization soundness on random expressions") {
    Rng rng(23);
    AssignmentSampler sampler(29);
    for (int i = 0; i < 300; ++i) {
        Context ctx = random_first_order_context(rng);
        PolyExpr p = random_poly_expr(rng, ctx, 4);
        NormalPoly n = normalize(ctx, p);
        for (int k = 0; k < 5; ++k) {
            Assignment a = *sampler.sample(ctx);
            CHECK(eval_normal(n, a) == direct_eval(p, ctx, a));
            CHECK(oracle_eval(n, a) == eval_normal(n, a));
        }
        CHECK(normalize(ctx, poly_expr_from_normal(n, ctx, base("o"))) == n);
    }
}

TEST_CASE("weak monotonicity of normal forms") {
    Rng rng(31);
    AssignmentSampler sampler(37);
    for (int i = 0; i < 300; ++i) {
        Context ctx = random_first_order_context(rng);
        NormalPoly n = normalize(ctx, random_poly_expr(rng, ctx, 4));
        Assignment low = *sampler.sample(ctx);
        Assignment high = dominate(rng, low);
        CHECK(eval_normal(n, high) >= eval_normal(n, low));
    }
}

TEST_CASE("compositionality of interpretation under substitution") {
    System sys = load_map();
    TermInterpreter interp(sys.afs.signature, sys.J);
    Rng rng(41);
    AssignmentSampler sampler(43);
    Context ctx = map_cons_context();
    for (int i = 0; i < 200; ++i) {
        Term t = random_map_term(rng, ctx, chance(rng, 0.5) ? L : A, 3);
        std::vector<std::optional<Term>> images(ctx.size());
        std::vector<Value> env;
        for (std::size_t level = 0; level < ctx.size(); ++level) {
            Term image = random_map_term(rng, ctx, ctx.at_level(level), 2);
            images[ctx.index_of(level)] = image;
            env.push_back(interp.interpret(ctx, image));
        }
        NormalPoly direct = interp.interpret(ctx, substitute(t, Substitution(images))).poly();
        NormalPoly composed = interp.interpret(ctx, env, t).poly();
        CHECK(direct == composed);
        for (int k = 0; k < 5; ++k) {
            Assignment a = *sampler.sample(ctx);
            CHECK(oracle_eval(direct, a) == oracle_eval(composed, a));
        }
    }
}

TEST_CASE("canonical rendering is idempotent") {
    Rng rng(47);
    for (int i = 0; i < 300; ++i) {
        Context ctx = random_first_order_context(rng);
        NormalPoly p = random_normal_poly(rng, ctx, 4);
        CHECK(poly(show(p, ctx), ctx) == p);
    }
}

TEST_CASE("sampler draws weakly monotone functions deterministically") {
    AssignmentSampler a(99), b(99);
    Context ctx({B, BB, arrow(B, BB)});
    for (int i = 0; i < 50; ++i) {
        auto x = a.sample(ctx);
        auto y = b.sample(ctx);
        REQUIRE(x);
        CHECK(x->to_string(constraint_names(ctx)) == y->to_string(constraint_names(ctx)));
    }
    CHECK_FALSE(AssignmentSampler::can_sample(Context({arrow(BB, B)})));
}
