#ifndef MUCHECK_TESTS_ORACLES_HH
#define MUCHECK_TESTS_ORACLES_HH

// Naive reference implementations, independent of the library's search and evaluation code.

#include <mucheck/formula.hh>
#include <mucheck/mvf.hh>
#include <mucheck/structure.hh>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle
{
    using namespace mucheck;

    inline auto tuple_set(const Relation & r) -> std::set<Tuple>
    {
        return {r.tuples().begin(), r.tuples().end()};
    }

    /// Every tuple of the product f(t) lies in the target relation, for every source tuple t.
    inline auto is_muhom(const std::vector<std::set<Element>> & f, const Structure & a, const Structure & b) -> bool
    {
        for (std::size_t s = 0; s < a.relations().size(); ++s) {
            auto target = tuple_set(b.relation(s));
            for (auto & t : a.relation(s).tuples()) {
                std::vector<Tuple> partial{{}};
                for (auto e : t) {
                    std::vector<Tuple> next;
                    for (auto & p : partial)
                        for (auto v : f[static_cast<std::size_t>(e - 1)]) {
                            auto q = p;
                            q.push_back(v);
                            next.push_back(q);
                        }
                    partial = next;
                }
                for (auto & p : partial)
                    if (! target.contains(p))
                        return false;
            }
        }
        return true;
    }

    inline auto is_surjective(const std::vector<std::set<Element>> & f, int kb) -> bool
    {
        std::set<Element> seen;
        for (auto & v : f)
            seen.insert(v.begin(), v.end());
        return static_cast<int>(seen.size()) == kb;
    }

    /// All maps from [ka] to nonempty subsets of [kb].
    inline auto all_mvfs(int ka, int kb) -> std::vector<std::vector<std::set<Element>>>
    {
        std::vector<std::set<Element>> subsets;
        for (int mask = 1; mask < (1 << kb); ++mask) {
            std::set<Element> s;
            for (int e = 0; e < kb; ++e)
                if (mask >> e & 1)
                    s.insert(e + 1);
            subsets.push_back(s);
        }
        std::vector<std::vector<std::set<Element>>> out{{}};
        for (int i = 0; i < ka; ++i) {
            std::vector<std::vector<std::set<Element>>> next;
            for (auto & p : out)
                for (auto & s : subsets) {
                    auto q = p;
                    q.push_back(s);
                    next.push_back(q);
                }
            out = next;
        }
        return out;
    }

    inline auto to_mvf(const std::vector<std::set<Element>> & f, int kb) -> MultiValuedFunction
    {
        std::vector<ElementSet> values;
        for (auto & v : f) {
            ElementSet s = 0;
            for (auto e : v)
                s |= ElementSet{1} << (e - 1);
            values.push_back(s);
        }
        return MultiValuedFunction(kb, values);
    }

    /// Textbook recursive satisfaction.
    inline auto satisfies(const Structure & s, const Formula & f, std::map<std::string, Element> env) -> bool
    {
        switch (f.kind()) {
        case NodeKind::Atom: {
            Tuple t;
            for (auto & v : f.variables())
                t.push_back(env.at(v));
            return tuple_set(s.relation(f.symbol())).contains(t);
        }
        case NodeKind::Eq: return env.at(f.variables()[0]) == env.at(f.variables()[1]);
        case NodeKind::Neq: return env.at(f.variables()[0]) != env.at(f.variables()[1]);
        case NodeKind::Not: return ! satisfies(s, f.child(), env);
        case NodeKind::And:
            for (auto & c : f.children())
                if (! satisfies(s, c, env))
                    return false;
            return true;
        case NodeKind::Or:
            for (auto & c : f.children())
                if (satisfies(s, c, env))
                    return true;
            return false;
        case NodeKind::Exists:
        case NodeKind::Forall: {
            bool exists = f.kind() == NodeKind::Exists;
            for (Element e = 1; e <= s.universe_size(); ++e) {
                env[f.bound_variable()] = e;
                if (satisfies(s, f.child(), env) == exists)
                    return exists;
            }
            return ! exists;
        }
        }
        return false;
    }

    /// Strict structure over [k] with one binary relation.
    inline auto digraph(int k, const std::vector<Tuple> & tuples, const std::string & symbol = "R") -> Structure
    {
        return Structure(Signature({{symbol, 2}}), k, std::vector<std::vector<Tuple>>{tuples});
    }
}

#endif
