#include <doctest.h>

#include "oracles.hh"

#include <mucheck/io.hh>
#include <mucheck/mvf.hh>
#include <mucheck/structure.hh>
#include <mucheck/template_pair.hh>

using namespace mucheck;

TEST_CASE("strict structures reject degenerate relations")
{
    Signature sig({{"R", 2}});
    CHECK_THROWS_AS(Structure(sig, 1, std::vector<std::vector<Tuple>>{{{1, 1}}}), StructureError);
    CHECK_THROWS_AS(Structure(sig, 2, std::vector<std::vector<Tuple>>{{}}), StructureError);
    CHECK_THROWS_AS(Structure(sig, 2, std::vector<std::vector<Tuple>>{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}}), StructureError);
    CHECK_THROWS_AS(Structure(sig, 2, std::vector<std::vector<Tuple>>{{{1, 3}}}), StructureError);
    CHECK_NOTHROW(Structure(sig, 2, std::vector<std::vector<Tuple>>{{}}, false));

    auto loose = Structure(sig, 2, std::vector<std::vector<Tuple>>{{}}, false);
    auto v = validate_structure(loose);
    REQUIRE(v.size() == 1);
    CHECK(v[0].symbol == "R");
}

TEST_CASE("relations are sorted and deduplicated")
{
    Relation r(3, 2, {{2, 1}, {1, 2}, {2, 1}});
    CHECK(r.size() == 2);
    CHECK(r.tuples().front() == Tuple{1, 2});
    CHECK(r.contains(Tuple{2, 1}));
    CHECK(! r.contains(Tuple{1, 1}));
    CHECK(r.full_size() == 9);
    CHECK(r.complement().size() == 7);
    CHECK(r.complement().complement() == r);
}

TEST_CASE("equality structures")
{
    auto e = equality_structure(3);
    CHECK(e.relation("Q").size() == 3);
    CHECK(disequality_relation(3).size() == 6);
    CHECK(complement_structure(e).relation("Q") == disequality_relation(3));
}

TEST_CASE("structure text round trip")
{
    auto text = "universe a b c\n# comment\nrel R 2\na b\nb c\nend\nrel P 1\na\nend\n";
    auto s = parse_structure(text);
    CHECK(s.universe_size() == 3);
    CHECK(s.relation("R").tuples() == std::vector<Tuple>{{1, 2}, {2, 3}});
    CHECK(s.relation("P").tuples() == std::vector<Tuple>{{1}});
    CHECK(parse_structure(format_structure(s)) == s);
}

TEST_CASE("malformed structure text reports a position")
{
    try {
        (void) parse_structure("universe 2\nrel R 2\n1 2 1\nend\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS((void) parse_structure("universe 2\nrel R 2\n1 1\n1 2\n2 1\n2 2\nend\n"), StructureError);
    CHECK_NOTHROW((void) parse_structure("universe 2\nrel R 2\n1 1\n1 2\n2 1\n2 2\nend\n", false));
}

TEST_CASE("multi-valued functions")
{
    auto f = MultiValuedFunction(3, {0b011, 0b100});
    CHECK(f.source_size() == 2);
    CHECK(f.multiplicity() == 2);
    CHECK(f.is_surjective());
    CHECK(f.inverse().values() == std::vector<ElementSet>{0b01, 0b01, 0b10});
    CHECK(! f.full_image_point());
    CHECK(! f.common_point());
    CHECK(to_inline_string(f) == "1->{1,2} 2->{3}");
    CHECK(parse_mvf(to_string(f), 3) == f);
    CHECK_THROWS(MultiValuedFunction(3, {0b011, 0}));

    auto g = MultiValuedFunction(2, {0b11, 0b10});
    CHECK(g.full_image_point() == 1);
    CHECK(g.common_point() == 2);
}

TEST_CASE("complementation closure of a template pair")
{
    auto a = oracle::digraph(2, {{1, 2}});
    auto b = oracle::digraph(2, {{1, 2}, {2, 1}});
    TemplatePair t(a, b);
    CHECK(! is_closed_under_complementation(t));
    auto c = complementation_closure(t);
    CHECK(is_closed_under_complementation(c));
    CHECK(c.signature().size() == 2);
    CHECK(complementation_closure(c) == c);

    auto d = dual_template(t);
    CHECK(d.a() == complement_structure(b));
    CHECK(dual_template(d) == t);
}
