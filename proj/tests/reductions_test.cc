#include <doctest.h>

#include "oracles.hh"

#include <mucheck/guardrail.hh>
#include <mucheck/homomorphism.hh>
#include <mucheck/io.hh>
#include <mucheck/reductions.hh>
#include <mucheck/sweeps.hh>
#include <mucheck/transform.hh>

#include <cstdlib>

using namespace mucheck;

TEST_CASE("rainbow and not-all-equal relations")
{
    CHECK(rainbow_relation(2, 4).size() == 14);
    CHECK(nae_relation(2, 4).size() == 14);
    CHECK(rainbow_relation(3, 3).size() == 6);
    CHECK(nae_relation(3, 2).size() == 6);
    CHECK_THROWS_AS((void) rainbow_structure(3, 2), StructureError);
    auto t = rbnae_template(2, 3);
    CHECK(t.a().relation("R").arity() == 4);
    CHECK(t.b().universe_size() == 3);
}

TEST_CASE("endomorphism formula")
{
    auto a = oracle::digraph(3, {{1, 2}, {2, 3}});
    auto g = endo_formula(a);
    CHECK(g.free_vars == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(g.size.atoms == 2);
    for (auto & e : sweeps::digraphs(2)) {
        for_each_tuple(2, 3, [&](const Tuple & t) {
            std::map<std::string, Element> env{{"x1", t[0]}, {"x2", t[1]}, {"x3", t[2]}};
            CHECK(oracle::satisfies(e, g.formula, env) == is_homomorphism(t, a, e));
        });
    }
}

TEST_CASE("multi-homomorphism formula")
{
    auto a = oracle::digraph(2, {{1, 2}});
    auto g = muhom_formula(a, 2);
    CHECK(g.size.atoms == 4);
    CHECK(g.free_vars.size() == 4);
    for (auto & e : sweeps::small_digraphs()) {
        int k = e.universe_size();
        for_each_tuple(k, 4, [&](const Tuple & t) {
            std::map<std::string, Element> env;
            for (std::size_t i = 0; i < 4; ++i)
                env[g.free_vars[i]] = t[i];
            std::vector<std::set<Element>> f{{t[0], t[1]}, {t[2], t[3]}};
            CHECK(oracle::satisfies(e, g.formula, env) == oracle::is_muhom(f, a, e));
        });
    }
}

TEST_CASE("surjective multi-homomorphism formula")
{
    auto a = oracle::digraph(2, {{1, 2}});
    auto g = smuhom_formula(a, 1, 3);
    CHECK(g.formula.kind() == NodeKind::Forall);
    auto body = g.formula.child().child().child();
    REQUIRE(body.kind() == NodeKind::Or);
    CHECK(body.children().size() == 8);

    for (auto & e : sweeps::small_digraphs()) {
        int k = e.universe_size();
        // brute force: which singleton-valued maps extend to a surjective multi-homomorphism
        for_each_tuple(k, 2, [&](const Tuple & t) {
            bool extends = false;
            for (auto & f : oracle::all_mvfs(2, k))
                if (f[0].contains(t[0]) && f[1].contains(t[1]) && oracle::is_surjective(f, k) && oracle::is_muhom(f, a, e))
                    extends = true;
            CHECK(oracle::satisfies(e, g.formula, {{g.free_vars[0], t[0]}, {g.free_vars[1], t[1]}}) == extends);
        });
    }
}

TEST_CASE("generator size guardrail")
{
    auto a = equality_structure(3);
    ::setenv("MUCHECK_MAX_NODES", "50", 1);
    CHECK(node_limit() == 50);
    CHECK_THROWS_AS((void) smuhom_formula(a, 2, 4), GuardrailExceeded);
    ::unsetenv("MUCHECK_MAX_NODES");
    CHECK(node_limit() == default_node_limit);
    try {
        check_candidate_budget("search", 2e7);
        FAIL("expected the candidate guardrail");
    }
    catch (const GuardrailExceeded & e) {
        CHECK(e.size() == 2e7);
        CHECK(std::string(e.what()).find("exceeds") != std::string::npos);
    }
}

TEST_CASE("closure formulas define unions of images")
{
    auto a = oracle::digraph(3, {{1, 2}, {2, 3}});
    Tuple t{1, 2};
    auto g = closure_formula(a, t, fragments::eao);
    CHECK(g.free_vars == std::vector<std::string>{"x1", "x2"});
    for (auto & e : sweeps::digraphs(2)) {
        std::set<Tuple> images;
        for (auto & f : oracle::all_mvfs(3, 2))
            if (oracle::is_muhom(f, a, e))
                for (auto u : f[0])
                    for (auto v : f[1])
                        images.insert({u, v});
        for_each_tuple(2, 2, [&](const Tuple & p) {
            CHECK(oracle::satisfies(e, g.formula, {{"x1", p[0]}, {"x2", p[1]}}) == images.contains(p));
        });
    }
}

TEST_CASE("p-definition rewrite substitutes definitions")
{
    TemplatePair src(oracle::digraph(2, {{1, 2}}), oracle::digraph(2, {{1, 2}, {2, 1}}));
    auto dst = rbnae_template(2, 2);
    auto defs = rbnae_definitions(src);
    REQUIRE(defs.contains("R"));
    auto sentence = parse_formula("exists y. exists z. R(y, z, z, y)");
    auto rewritten = p_def_rewrite(sentence, defs);
    CHECK(is_sentence(rewritten));
    CHECK(verify_rewrite(src, dst, sentence, [&](const Formula & f) { return p_def_rewrite(f, defs); }).ok());

    auto keep = p_def_rewrite(parse_formula("exists y. S(y, y)"), defs);
    CHECK(keep == parse_formula("exists y. S(y, y)"));
}

TEST_CASE("equality gadget on a one-block sentence")
{
    auto phi = make_special_form(1, parse_formula("Q(y1, z1)"));
    auto g = equality_pspace_gadget(phi, 3);
    CHECK(is_sentence(g.formula));
    auto v = verify_equality_gadget(phi, 3);
    CHECK(v.ok());
    // for all y exists z, y = z holds everywhere, so psi holds in [3]
    CHECK(oracle::satisfies(equality_structure(3), g.formula, {}));
}

TEST_CASE("quotient of the equality templates")
{
    auto t = complementation_closure(TemplatePair(equality_structure(3), equality_structure(2)));
    auto q = quotient_reduction(t);
    CHECK(q.partition_a.class_count() == 3);
    CHECK(q.partition_b.class_count() == 2);
    CHECK(q.equality.a() == equality_structure(3, q.symbol));
    CHECK(q.equality.b() == equality_structure(2, q.symbol));
    CHECK(verify_quotient(t).ok());

    auto f = parse_formula("forall x. exists y. forall z. (" + q.symbol + "(z, x) | " + q.symbol + "(z, y))");
    auto v = verify_rewrite(t, q.equality, f, [&](const Formula & s) { return q.rewrite(s); });
    CHECK(v.ok());

    CHECK_THROWS_AS((void) quotient_reduction(TemplatePair(equality_structure(3), equality_structure(2))), StructureError);
}

TEST_CASE("dual swap")
{
    TemplatePair t(oracle::digraph(3, {{1, 2}, {2, 3}}), oracle::digraph(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK(verify_dual_swap(t, parse_formula("forall x. exists y. R(x, y) & (exists z. R(y, z))")).ok());
}
