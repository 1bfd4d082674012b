#include <doctest.h>

#include "oracles.hh"

#include <mucheck/formula.hh>
#include <mucheck/io.hh>
#include <mucheck/normalize.hh>
#include <mucheck/sweeps.hh>
#include <mucheck/transform.hh>

using namespace mucheck;

namespace
{
    auto all_assignments(const Structure & s, const std::vector<std::string> & vars) -> std::vector<std::map<std::string, Element>>
    {
        std::vector<std::map<std::string, Element>> out;
        for_each_tuple(s.universe_size(), static_cast<int>(vars.size()), [&](const Tuple & t) {
            std::map<std::string, Element> env;
            for (std::size_t i = 0; i < vars.size(); ++i)
                env[vars[i]] = t[i];
            out.push_back(env);
        });
        return out;
    }
}

TEST_CASE("parser precedence and scoping")
{
    auto f = parse_formula("forall x. exists y. R(x, y) | S(y) & ~T(x)");
    REQUIRE(f.kind() == NodeKind::Forall);
    auto body = f.child().child();
    REQUIRE(body.kind() == NodeKind::Or);
    CHECK(body.children()[1].kind() == NodeKind::And);
    CHECK(body.children()[1].children()[1].kind() == NodeKind::Not);

    CHECK(parse_formula("x = y").kind() == NodeKind::Eq);
    CHECK(parse_formula("x != y").kind() == NodeKind::Neq);
    CHECK(free_variables(parse_formula("exists x. R(x, y)")) == std::set<std::string>{"y"});
    CHECK(is_sentence(parse_formula("exists x. forall y. R(x, y)")));
}

TEST_CASE("printing reparses to the same formula")
{
    for (auto text : {"forall x. exists y. forall z. (Q(z, x) | Q(z, y))", "~(R(a, b) & (x = y | x != z))",
             "exists u. (R(u, u) & exists v. R(u, v)) | forall w. P(w)"}) {
        auto f = parse_formula(text);
        CHECK(parse_formula(to_string(f)) == f);
    }
}

TEST_CASE("parser errors")
{
    CHECK_THROWS_AS((void) parse_formula("forall x R(x)"), ParseError);
    CHECK_THROWS_AS((void) parse_formula("R(x,"), ParseError);
    CHECK_THROWS_AS((void) parse_formula("(R(x)"), ParseError);

    Signature sig({{"R", 2}});
    CHECK_THROWS_AS((void) parse_formula("exists x. R(x)", &sig), FormulaError);
    CHECK_THROWS_AS((void) parse_formula("exists x. S(x, x)", &sig), FormulaError);
    CHECK_NOTHROW((void) parse_formula("exists x. R(x, x)", &sig));
}

TEST_CASE("fragments")
{
    CHECK(fragment_of(parse_formula("forall x. exists y. R(x, y) & R(y, x)")) == fragments::eaforall);
    CHECK(fragment_of(parse_formula("exists x. ~(x = x)"))
        == Fragment{Connective::Exists, Connective::Not, Connective::Eq});
    CHECK(parse_fragment("eao-forall-eq") == fragments::eao_forall.with(Connective::Eq));
    CHECK(parse_fragment("exists,or,neq") == Fragment{Connective::Exists, Connective::Or, Connective::Neq});
    CHECK(fragments::eaforall.dual() == Fragment{Connective::Forall, Connective::Exists, Connective::Or});
    CHECK(is_canonical(fragments::eao));
    CHECK(! is_canonical(fragments::eao.dual()));
    CHECK_THROWS((void) parse_fragment("exists,xor"));
}

TEST_CASE("trivial fragments")
{
    CHECK(is_trivial_fragment(Fragment{Connective::Exists}));
    CHECK(is_trivial_fragment(Fragment{Connective::And, Connective::Or}));
    CHECK(is_trivial_fragment(Fragment{Connective::Exists, Connective::Or, Connective::Eq}));
    CHECK(is_trivial_fragment(Fragment{Connective::Forall, Connective::And}));
    CHECK(! is_trivial_fragment(fragments::ea));
    CHECK(! is_trivial_fragment(Fragment{Connective::Exists, Connective::Or, Connective::Not}));
}

TEST_CASE("prenex and special forms are equivalent on small digraphs")
{
    std::vector<Formula> inputs{
        parse_formula("exists x. R(x, x) & forall y. exists z. R(y, z)"),
        parse_formula("(forall x. exists y. R(x, y)) | (exists x. forall y. R(y, x))"),
        parse_formula("forall x. forall y. R(x, y) | exists z. R(z, x) & R(z, y)"),
        parse_formula("exists x. exists y. R(x, y)"),
    };
    for (auto & f : inputs) {
        auto p = to_prenex(f);
        auto sf = to_special_form(f);
        auto g = sf.to_formula();
        CHECK(is_sentence(g));
        for (auto & s : sweeps::digraphs(2)) {
            auto expected = oracle::satisfies(s, f, {});
            CHECK(oracle::satisfies(s, p, {}) == expected);
            CHECK(oracle::satisfies(s, g, {}) == expected);
        }
    }
}

TEST_CASE("special form of the equality example")
{
    auto sf = to_special_form(parse_formula("forall x. exists y. forall z. (Q(z, x) | Q(z, y))"));
    CHECK(sf.size() == 2);
    CHECK(sf.universals() == std::vector<std::string>{"y1", "y2"});
    CHECK(sf.existentials() == std::vector<std::string>{"z1", "z2"});
    CHECK_THROWS_AS((void) make_special_form(1, parse_formula("exists x. R(x, x)")), FormulaError);
}

TEST_CASE("dualization flips truth under complementation")
{
    auto f = parse_formula("forall x. exists y. (R(x, y) & x != y) | exists z. R(z, z)");
    auto d = dualize_formula(f);
    CHECK(dualize_formula(d) == f);
    CHECK(fragment_of(d) == fragment_of(f).dual().without(Connective::Neq).with(Connective::Eq));
    for (auto & s : sweeps::digraphs(3))
        CHECK(oracle::satisfies(s, f, {}) != oracle::satisfies(complement_structure(s), d, {}));
}

TEST_CASE("pushing negations keeps the meaning")
{
    auto f = parse_formula("~(forall x. exists y. ~R(x, y) | ~(x = y))");
    auto g = push_negations(f, {{"R", "Rc"}});
    CHECK(! fragment_of(g).contains(Connective::Not));
    for (auto & s : sweeps::digraphs(2)) {
        auto closed = s.with_relation({"Rc", 2}, s.relation("R").complement());
        CHECK(oracle::satisfies(closed, f, {}) == oracle::satisfies(closed, g, {}));
    }
    CHECK_THROWS_AS((void) push_negations(parse_formula("~S(x)"), {}), FormulaError);
}

TEST_CASE("renaming apart avoids capture")
{
    auto f = parse_formula("exists x. R(x, y) & exists x. R(y, x)");
    FreshNames names({"y"});
    auto g = rename_apart(f, names);
    CHECK(free_variables(g) == std::set<std::string>{"y"});
    CHECK(all_variables(g).size() == 3);
    auto h = rename_free(g, {{"y", "w"}});
    CHECK(free_variables(h) == std::set<std::string>{"w"});
    for (auto & s : sweeps::digraphs(2))
        for (auto & env : all_assignments(s, {"y"}))
            CHECK(oracle::satisfies(s, f, env) == oracle::satisfies(s, h, {{"w", env.at("y")}}));
}

TEST_CASE("normalization rewrites equality, negation and dual fragments")
{
    auto a = oracle::digraph(3, {{1, 2}, {2, 3}});
    auto b = oracle::digraph(3, {{1, 2}, {2, 3}, {3, 1}, {1, 1}});
    TemplatePair t(a, b);

    auto n = normalize_fragment(t, fragments::eao.with(Connective::Eq));
    CHECK(n.added_equality);
    CHECK(n.fragment == fragments::eao);
    CHECK(n.pair.a().relation(n.equality_symbol) == equality_relation(3));

    auto m = normalize_fragment(t, fragments::eaforall.dual());
    CHECK(m.dualized);
    CHECK(m.fragment == fragments::eaforall);
    CHECK(m.translate(Answer::Yes) == Answer::No);

    auto c = normalize_fragment(t, fragments::eao.with(Connective::Not));
    CHECK(c.complemented);
    CHECK(is_closed_under_complementation(c.pair));

    CHECK_THROWS_AS((void) normalize_fragment(t, Fragment{Connective::Exists, Connective::Or}), TrivialFragment);

    // A rewritten sentence has the same truth value (up to the dual swap) on both sides.
    auto f = parse_formula("forall x. exists y. ~R(x, y) & x != y");
    auto l = fragment_of(f);
    auto nl = normalize_fragment(t, l);
    auto g = nl.rewrite(f);
    CHECK(is_canonical(fragment_of(g)));
    for (int side = 0; side < 2; ++side) {
        auto & orig = side == 0 ? t.a() : t.b();
        auto & norm = side == 0 ? nl.pair.a() : nl.pair.b();
        auto truth = oracle::satisfies(orig, f, {});
        auto normalized = oracle::satisfies(norm, g, {});
        // dual template swaps sides: the normalized A side stands for the original B side
        if (nl.dualized) {
            auto & other = side == 0 ? nl.pair.b() : nl.pair.a();
            normalized = ! oracle::satisfies(other, g, {});
        }
        CHECK(truth == normalized);
    }
}
