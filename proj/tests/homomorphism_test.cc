#include <doctest.h>

#include "oracles.hh"

#include <mucheck/homomorphism.hh>
#include <mucheck/io.hh>
#include <mucheck/sweeps.hh>

#include <algorithm>

using namespace mucheck;

namespace
{
    auto brute_muhoms(const Structure & a, const Structure & b, bool surjective) -> std::vector<MultiValuedFunction>
    {
        std::vector<MultiValuedFunction> out;
        for (auto & f : oracle::all_mvfs(a.universe_size(), b.universe_size()))
            if (oracle::is_muhom(f, a, b) && (! surjective || oracle::is_surjective(f, b.universe_size())))
                out.push_back(oracle::to_mvf(f, b.universe_size()));
        std::sort(out.begin(), out.end());
        return out;
    }

    auto sorted(std::vector<MultiValuedFunction> v) -> std::vector<MultiValuedFunction>
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    auto load(const std::string & name) -> Structure
    {
        return parse_structure(read_file(std::string(MUCHECK_TEST_DATA) + "/" + name));
    }
}

TEST_CASE("multi-homomorphism enumeration matches brute force")
{
    auto graphs = sweeps::digraphs(2);
    auto three = sweeps::digraph_classes(3);
    graphs.insert(graphs.end(), three.begin(), three.end());
    for (auto & a : graphs)
        for (auto & b : graphs) {
            CHECK(sorted(enumerate_multi_homomorphisms(a, b)) == brute_muhoms(a, b, false));
            CHECK(sorted(enumerate_smuhoms(a, b)) == brute_muhoms(a, b, true));
        }
}

TEST_CASE("homomorphisms are singleton multi-homomorphisms")
{
    auto a = oracle::digraph(3, {{1, 2}, {2, 3}});
    auto b = oracle::digraph(2, {{1, 2}, {2, 1}});
    auto homs = enumerate_homomorphisms(a, b);
    CHECK(homs == std::vector<std::vector<Element>>{{1, 2, 1}, {2, 1, 2}});
    for (auto & h : homs)
        CHECK(is_multi_homomorphism(MultiValuedFunction::from_function(2, h), a, b));
    CHECK(find_homomorphism(a, b) == std::vector<Element>{1, 2, 1});
    CHECK(! exists_constant_homomorphism(a, b));
    CHECK(exists_constant_homomorphism(a, oracle::digraph(2, {{2, 2}})) == 2);
}

TEST_CASE("smuhoms of the equality templates")
{
    auto k3 = equality_structure(3);
    auto k2 = equality_structure(2);
    CHECK(exists_smuhom(k3, k2));
    CHECK(! exists_smuhom(k2, k3));
    // each smuhom from ([3]; =) to ([2]; =) is a surjective function
    for (auto & f : enumerate_smuhoms(k3, k2))
        CHECK(f.multiplicity() == 1);
    CHECK(enumerate_smuhoms(k3, k2).size() == 6);
}

TEST_CASE("profiles of the worked examples")
{
    struct Case
    {
        std::string name;
        bool forall, exists, ae;
    };
    for (auto & c : {Case{"ternae", true, true, false}, Case{"twobin", true, true, false}, Case{"u3", false, false, false},
             Case{"t1", false, false, false}}) {
        auto a = load(c.name + "_a.txt");
        auto b = load(c.name + "_b.txt");
        auto p = smuhom_profile(a, b);
        CAPTURE(c.name);
        CHECK(p.is_template());
        CHECK(sorted(p.smuhoms) == brute_muhoms(a, b, true));
        bool forall = false, exists = false, ae = false;
        for (auto & f : brute_muhoms(a, b, true)) {
            bool fa = f.full_image_point().has_value();
            bool ex = f.common_point().has_value();
            forall = forall || fa;
            exists = exists || ex;
            ae = ae || (fa && ex);
        }
        CHECK(forall == c.forall);
        CHECK(exists == c.exists);
        CHECK(ae == c.ae);
        CHECK(p.forall.has_value() == c.forall);
        CHECK(p.exists.has_value() == c.exists);
        CHECK(p.ae.has_value() == c.ae);
    }
}

TEST_CASE("combining the two kinds on digraphs")
{
    auto a = oracle::digraph(3, {{1, 2}});
    auto b = oracle::digraph(3, {{1, 2}, {2, 3}, {1, 3}, {2, 2}});
    auto p = smuhom_profile(a, b);
    REQUIRE(p.forall);
    REQUIRE(p.exists);
    auto & f = p.smuhoms[p.forall->smuhom];
    auto & g = p.smuhoms[p.exists->smuhom];
    auto h = digraph_combine(f, p.forall->a_star, g, p.exists->b_star, a, b);
    CHECK(oracle::is_muhom([&] {
        std::vector<std::set<Element>> v;
        for (Element i = 1; i <= h.source_size(); ++i) {
            auto e = set_elements(h(i));
            v.emplace_back(e.begin(), e.end());
        }
        return v;
    }(), a, b));
    CHECK(h.is_surjective());
    CHECK(h.full_image_point());
    CHECK(h.common_point());
}

TEST_CASE("indistinguishability")
{
    auto s = oracle::digraph(3, {{1, 3}, {2, 3}});
    CHECK(indistinguishable(s, 1, 2));
    CHECK(! indistinguishable(s, 1, 3));
    auto p = indistinguishability_partition(s);
    CHECK(p.blocks == std::vector<std::vector<Element>>{{1, 2}, {3}});
    CHECK(p.class_of == std::vector<int>{0, 0, 1});
    CHECK(indistinguishability_partition(equality_structure(3)).class_count() == 3);
}
