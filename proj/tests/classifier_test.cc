#include <doctest.h>

#include "oracles.hh"

#include <mucheck/classifier.hh>
#include <mucheck/io.hh>
#include <mucheck/pmc.hh>
#include <mucheck/sweeps.hh>
#include <mucheck/transform.hh>

using namespace mucheck;

namespace
{
    auto load_pair(const std::string & name) -> TemplatePair
    {
        auto dir = std::string(MUCHECK_TEST_DATA) + "/";
        return {parse_structure(read_file(dir + name + "_a.txt")), parse_structure(read_file(dir + name + "_b.txt"))};
    }
}

TEST_CASE("template tests per fragment")
{
    TemplatePair eq(equality_structure(3), equality_structure(2));
    CHECK(is_template(eq, fragments::eao_forall).status == TemplateStatus::Valid);
    CHECK(is_template(eq, fragments::eao).status == TemplateStatus::Valid);
    TemplatePair reversed(equality_structure(2), equality_structure(3));
    CHECK(is_template(reversed, fragments::eao_forall).status == TemplateStatus::Invalid);
    CHECK(is_template(reversed, fragments::ea).status == TemplateStatus::Valid);
    CHECK_THROWS_AS((void) is_template(eq, fragments::eao.dual()), FormulaError);
}

TEST_CASE("verdicts for the worked examples")
{
    CHECK(classify(load_pair("ternae"), fragments::eao_forall).label == Verdict::InNPcapCoNP_HardnessOpen);
    CHECK(classify(load_pair("twobin"), fragments::eao_forall).label == Verdict::InNPcapCoNP_HardnessOpen);
    CHECK(classify(load_pair("u3"), fragments::eao_forall).label == Verdict::NPHardAndCoNPHard_MembershipOpen);
    CHECK(classify(load_pair("t1"), fragments::eao_forall).label == Verdict::NPHardAndCoNPHard_MembershipOpen);
    CHECK(to_string(Verdict::InNPcapCoNP_HardnessOpen) == "NP∩coNP (hardness open)");
    CHECK(verdict_name(Verdict::NPComplete) == "NPComplete");
}

TEST_CASE("equality templates with equality are PSPACE-complete")
{
    TemplatePair eq(equality_structure(3), equality_structure(2));
    auto v = classify(eq, fragments::eao_forall.with(Connective::Eq));
    CHECK(v.label == Verdict::PSPACEComplete);
    CHECK(! v.rule.empty());
    CHECK(format_report(v).find("label:") != std::string::npos);

    auto not_template = classify(TemplatePair(equality_structure(2), equality_structure(3)), fragments::eao_forall);
    CHECK(not_template.label == Verdict::NotATemplate);
    CHECK(classify(eq, Fragment{Connective::Exists, Connective::Or}).trivial_fragment);
}

TEST_CASE("existential positive dichotomy on small digraphs")
{
    auto graphs = sweeps::digraphs(2);
    for (auto & a : graphs)
        for (auto & b : graphs) {
            TemplatePair t(a, b);
            if (! find_homomorphism(a, b))
                continue;
            auto v = classify(t, fragments::eao);
            auto easy = exists_constant_homomorphism(a, b).has_value();
            CHECK(v.label == (easy ? Verdict::InL : Verdict::NPComplete));
        }
}

TEST_CASE("dual fragments get dual verdicts")
{
    auto a = oracle::digraph(2, {{1, 2}});
    auto b = oracle::digraph(2, {{1, 2}, {2, 1}});
    TemplatePair t(a, b);
    auto v = classify(t, fragments::eao);
    CHECK(v.label == Verdict::NPComplete);
    auto d = classify(dual_template(t), fragments::eao.dual());
    CHECK(d.dualized);
    CHECK(d.label == Verdict::coNPComplete);
    CHECK(dual_verdict(Verdict::coNPComplete) == Verdict::NPComplete);
    CHECK(dual_verdict(Verdict::PSPACEComplete) == Verdict::PSPACEComplete);
}

TEST_CASE("relaxations and p-definability")
{
    TemplatePair eq32(equality_structure(3), equality_structure(2));
    CHECK(is_relaxation(eq32, eq32));
    CHECK(p_definable(eq32, eq32, fragments::eao_forall));
}

TEST_CASE("the promise algorithms on the ternary example")
{
    auto t = load_pair("ternae");
    int agreed = 0;
    // sentences over the ternary symbol: every atom pattern over y1, z1
    std::vector<std::string> vars{"y1", "z1"};
    for_each_tuple(2, 3, [&](const Tuple & idx) {
        auto matrix = Formula::atom("R", {vars[idx[0] - 1], vars[idx[1] - 1], vars[idx[2] - 1]});
        auto sf = make_special_form(1, matrix);
        auto ref = pmc_reference_decide(t, sf.to_formula());
        if (! ref.in_promise)
            return;
        CHECK(np_algorithm(t, sf) == ref.answer);
        CHECK(conp_algorithm(t, sf) == ref.answer);
        ++agreed;
    });
    CHECK(agreed > 0);
    CHECK_THROWS_AS((void) ae_fast_path(t, make_special_form(1, parse_formula("R(y1, z1, z1)"))), StructureError);
}

TEST_CASE("the naive evaluator decides the promise reference")
{
    auto t = TemplatePair(equality_structure(3), equality_structure(2));
    auto f = parse_formula("forall x. exists y. forall z. (Q(z, x) | Q(z, y))");
    auto r = pmc_reference_decide(t, f);
    CHECK(r.answer == (oracle::satisfies(t.a(), f, {}) ? Answer::Yes : Answer::No));
    CHECK(r.answer == Answer::No);
    CHECK(! r.in_promise);
}
