#include <mucheck/homomorphism.hh>

#include <algorithm>
#include <cmath>

using std::optional;
using std::size_t;
using std::vector;

namespace mucheck
{
    namespace
    {
        // Nonempty subsets of [k] by increasing cardinality, then lexicographically by element list.
        auto ordered_value_sets(int k) -> vector<ElementSet>
        {
            vector<ElementSet> out;
            for (ElementSet s = 1; s <= full_set(k); ++s)
                out.push_back(s);
            std::stable_sort(out.begin(), out.end(), [](ElementSet x, ElementSet y) {
                if (set_size(x) != set_size(y))
                    return set_size(x) < set_size(y);
                return set_elements(x) < set_elements(y);
            });
            return out;
        }

        auto singletons(int k) -> vector<ElementSet>
        {
            vector<ElementSet> out;
            for (Element e = 1; e <= k; ++e)
                out.push_back(singleton(e));
            return out;
        }

        class Backtracker
        {
        public:
            Backtracker(const Structure & a, const Structure & b, vector<ElementSet> candidates, bool surjective) :
                _a(a),
                _b(b),
                _candidates(std::move(candidates)),
                _surjective(surjective),
                _at_level(static_cast<size_t>(a.universe_size()) + 1),
                _values(static_cast<size_t>(a.universe_size()), 0)
            {
                require_similar(a, b);
                if (b.universe_size() > max_mvf_universe)
                    throw StructureError("target universe too large for multi-valued functions");
                for (size_t r = 0; r < a.relations().size(); ++r)
                    for (auto & t : a.relation(r).tuples())
                        _at_level[static_cast<size_t>(*std::max_element(t.begin(), t.end()))].push_back({r, &t});
            }

            auto run(const MvfVisitor & visit) -> void
            {
                _stopped = false;
                recurse(1, 0, visit);
            }

        private:
            struct Pending
            {
                size_t relation;
                const Tuple * tuple;
            };

            const Structure & _a;
            const Structure & _b;
            vector<ElementSet> _candidates;
            bool _surjective;
            vector<vector<Pending>> _at_level;
            vector<ElementSet> _values;
            vector<ElementSet> _scratch;
            bool _stopped = false;

            auto consistent(Element level) -> bool
            {
                for (auto & p : _at_level[static_cast<size_t>(level)]) {
                    _scratch.resize(p.tuple->size());
                    for (size_t i = 0; i < p.tuple->size(); ++i)
                        _scratch[i] = _values[static_cast<size_t>((*p.tuple)[i] - 1)];
                    if (! product_within(_scratch, _b.relation(p.relation)))
                        return false;
                }
                return true;
            }

            auto recurse(Element level, ElementSet covered, const MvfVisitor & visit) -> void
            {
                int ka = _a.universe_size();
                if (level > ka) {
                    if (! _surjective || covered == full_set(_b.universe_size()))
                        if (! visit(MultiValuedFunction(_b.universe_size(), _values)))
                            _stopped = true;
                    return;
                }
                for (auto s : _candidates) {
                    if (_stopped)
                        return;
                    _values[static_cast<size_t>(level - 1)] = s;
                    if (! consistent(level))
                        continue;
                    auto now = covered | s;
                    if (_surjective && level == ka && now != full_set(_b.universe_size()))
                        continue;
                    recurse(level + 1, now, visit);
                }
            }
        };
    }

    auto require_similar(const Structure & a, const Structure & b) -> void
    {
        if (! similar(a, b))
            throw StructureError("structures do not interpret the same signature");
    }

    auto is_multi_homomorphism(const MultiValuedFunction & f, const Structure & a, const Structure & b) -> bool
    {
        require_similar(a, b);
        if (f.source_size() != a.universe_size() || f.target_size() != b.universe_size())
            throw StructureError("multi-valued function does not match the structure universes");
        for (size_t r = 0; r < a.relations().size(); ++r)
            if (! maps_into(f, a.relation(r), b.relation(r)))
                return false;
        return true;
    }

    auto is_homomorphism(const vector<Element> & h, const Structure & a, const Structure & b) -> bool
    {
        return is_multi_homomorphism(MultiValuedFunction::from_function(b.universe_size(), h), a, b);
    }

    auto mvf_candidate_count(int ka, int kb) -> double
    {
        return std::pow(std::pow(2.0, kb) - 1.0, ka);
    }

    auto enumerate_homomorphisms(const Structure & a, const Structure & b) -> vector<vector<Element>>
    {
        vector<vector<Element>> out;
        Backtracker(a, b, singletons(b.universe_size()), false).run([&](const MultiValuedFunction & f) {
            vector<Element> h;
            for (auto v : f.values())
                h.push_back(std::countr_zero(v) + 1);
            out.push_back(std::move(h));
            return true;
        });
        return out;
    }

    auto find_homomorphism(const Structure & a, const Structure & b) -> optional<vector<Element>>
    {
        optional<vector<Element>> out;
        Backtracker(a, b, singletons(b.universe_size()), false).run([&](const MultiValuedFunction & f) {
            out.emplace();
            for (auto v : f.values())
                out->push_back(std::countr_zero(v) + 1);
            return false;
        });
        return out;
    }

    auto for_each_multi_homomorphism(const Structure & a, const Structure & b, const MvfVisitor & visit) -> void
    {
        Backtracker(a, b, ordered_value_sets(b.universe_size()), false).run(visit);
    }

    auto enumerate_multi_homomorphisms(const Structure & a, const Structure & b) -> vector<MultiValuedFunction>
    {
        vector<MultiValuedFunction> out;
        for_each_multi_homomorphism(a, b, [&](const MultiValuedFunction & f) {
            out.push_back(f);
            return true;
        });
        return out;
    }

    auto for_each_smuhom(const Structure & a, const Structure & b, const MvfVisitor & visit) -> void
    {
        Backtracker(a, b, ordered_value_sets(b.universe_size()), true).run(visit);
    }

    auto enumerate_smuhoms(const Structure & a, const Structure & b) -> vector<MultiValuedFunction>
    {
        vector<MultiValuedFunction> out;
        for_each_smuhom(a, b, [&](const MultiValuedFunction & f) {
            out.push_back(f);
            return true;
        });
        return out;
    }

    auto find_smuhom(const Structure & a, const Structure & b) -> optional<MultiValuedFunction>
    {
        optional<MultiValuedFunction> out;
        for_each_smuhom(a, b, [&](const MultiValuedFunction & f) {
            out = f;
            return false;
        });
        return out;
    }

    auto exists_smuhom(const Structure & a, const Structure & b) -> bool
    {
        return find_smuhom(a, b).has_value();
    }

    auto exists_constant_homomorphism(const Structure & a, const Structure & b) -> optional<Element>
    {
        require_similar(a, b);
        for (Element e = 1; e <= b.universe_size(); ++e) {
            bool ok = true;
            for (size_t r = 0; r < a.relations().size() && ok; ++r)
                if (! a.relation(r).empty())
                    ok = b.relation(r).contains(Tuple(static_cast<size_t>(a.relation(r).arity()), e));
            if (ok)
                return e;
        }
        return std::nullopt;
    }

    auto is_forall_smuhom(const MultiValuedFunction & f, Element a_star) -> bool
    {
        return a_star >= 1 && a_star <= f.source_size() && f(a_star) == full_set(f.target_size());
    }

    auto is_exists_smuhom(const MultiValuedFunction & f, Element b_star) -> bool
    {
        if (b_star < 1 || b_star > f.target_size())
            return false;
        return std::all_of(f.values().begin(), f.values().end(), [&](ElementSet v) { return set_contains(v, b_star); });
    }

    auto smuhom_profile(const Structure & a, const Structure & b) -> SmuhomProfile
    {
        SmuhomProfile p;
        int kb = b.universe_size();
        p.smuhoms = enumerate_smuhoms(a, b);
        p.ae_pairs.assign(static_cast<size_t>(a.universe_size() * kb), false);
        for (size_t i = 0; i < p.smuhoms.size(); ++i) {
            auto & f = p.smuhoms[i];
            ElementSet full_points = 0;
            for (Element x = 1; x <= f.source_size(); ++x)
                if (f(x) == full_set(kb))
                    full_points |= singleton(x);
            ElementSet common = full_set(kb);
            for (auto v : f.values())
                common &= v;

            p.forall_points |= full_points;
            p.exists_points |= common;
            if (full_points) {
                Element x = std::countr_zero(full_points) + 1;
                if (! p.forall || x < p.forall->a_star)
                    p.forall = ForallWitness{i, x};
            }
            if (common) {
                Element y = std::countr_zero(common) + 1;
                if (! p.exists || y < p.exists->b_star)
                    p.exists = ExistsWitness{i, y};
            }
            for (auto x : set_elements(full_points))
                for (auto y : set_elements(common)) {
                    p.ae_pairs[static_cast<size_t>((x - 1) * kb + (y - 1))] = true;
                    if (! p.ae || std::pair(x, y) < std::pair(p.ae->a_star, p.ae->b_star))
                        p.ae = AeWitness{i, x, y};
                }
        }
        return p;
    }

    auto digraph_combine(const MultiValuedFunction & f, Element a_star, const MultiValuedFunction & g, Element b_star,
        const Structure & a, const Structure & b) -> MultiValuedFunction
    {
        require_similar(a, b);
        if (a.signature().size() != 1 || a.signature()[0].arity != 2)
            throw StructureError("digraph_combine needs structures with a single binary relation");
        if (f.source_size() != a.universe_size() || f.target_size() != b.universe_size()
            || g.source_size() != a.universe_size() || g.target_size() != b.universe_size())
            throw StructureError("multi-valued functions do not match the structure universes");
        if (! is_forall_smuhom(f, a_star))
            throw StructureError("first function does not map the given point onto the whole target");
        if (! is_exists_smuhom(g, b_star))
            throw StructureError("given target point is not in every value of the second function");

        auto & edges = a.relation(0);
        int ka = a.universe_size(), kb = b.universe_size();
        auto has_edge = [&](Element x, Element y) { return edges.contains(Tuple{x, y}); };
        auto first_in = [&](Element y) -> optional<Element> {
            for (Element x = 1; x <= ka; ++x)
                if (has_edge(x, y))
                    return x;
            return std::nullopt;
        };
        auto first_out = [&](Element x) -> optional<Element> {
            for (Element y = 1; y <= ka; ++y)
                if (has_edge(x, y))
                    return y;
            return std::nullopt;
        };
        auto build = [&](Element full_point, Element other) {
            vector<ElementSet> values(static_cast<size_t>(ka), singleton(other));
            values[static_cast<size_t>(full_point - 1)] = full_set(kb);
            return MultiValuedFunction(kb, std::move(values));
        };
        auto least = [&](Element x) { return std::countr_zero(f(x)) + 1; };

        auto in = first_in(a_star), out = first_out(a_star);
        if (! in && ! out)
            return build(a_star, b_star);
        if (in && ! out)
            return build(a_star, least(*in));
        if (out && ! in)
            return build(a_star, least(*out));

        for (Element x = 1; x <= ka; ++x)
            if (! first_out(x))
                return build(x, least(*in));
        for (Element x = 1; x <= ka; ++x)
            if (! first_in(x))
                return build(x, least(*out));
        return build(a_star, b_star);
    }

    auto indistinguishable(const Structure & s, Element a, Element a2) -> bool
    {
        for (auto & r : s.relations())
            for (auto & t : r.tuples())
                for (size_t i = 0; i < t.size(); ++i) {
                    if (t[i] != a && t[i] != a2)
                        continue;
                    auto u = t;
                    u[i] = t[i] == a ? a2 : a;
                    if (! r.contains(u))
                        return false;
                }
        return true;
    }

    auto indistinguishability_partition(const Structure & s) -> IndistinguishabilityPartition
    {
        IndistinguishabilityPartition p;
        p.class_of.assign(static_cast<size_t>(s.universe_size()), -1);
        for (Element e = 1; e <= s.universe_size(); ++e) {
            if (p.class_of[static_cast<size_t>(e - 1)] >= 0)
                continue;
            int id = p.class_count();
            p.blocks.push_back({e});
            p.class_of[static_cast<size_t>(e - 1)] = id;
            for (Element other = e + 1; other <= s.universe_size(); ++other)
                if (p.class_of[static_cast<size_t>(other - 1)] < 0 && indistinguishable(s, e, other)) {
                    p.blocks.back().push_back(other);
                    p.class_of[static_cast<size_t>(other - 1)] = id;
                }
        }
        return p;
    }
}
