#include <mucheck/mvf.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        // Calls fn on every tuple in the product of the given sets; fn returns false to stop.
        template <typename Fn>
        auto for_each_in_product(std::span<const ElementSet> sets, Fn && fn) -> bool
        {
            Tuple t(sets.size());
            auto recurse = [&](auto & self, size_t pos) -> bool {
                if (pos == sets.size())
                    return fn(std::as_const(t));
                for (auto rest = sets[pos]; rest; rest &= rest - 1) {
                    t[pos] = std::countr_zero(rest) + 1;
                    if (! self(self, pos + 1))
                        return false;
                }
                return true;
            };
            return recurse(recurse, 0);
        }
    }

    auto set_elements(ElementSet s) -> vector<Element>
    {
        vector<Element> out;
        for (; s; s &= s - 1)
            out.push_back(std::countr_zero(s) + 1);
        return out;
    }

    auto set_to_string(ElementSet s) -> string
    {
        string out = "{";
        bool first = true;
        for (auto e : set_elements(s)) {
            if (! first)
                out += ",";
            first = false;
            out += std::to_string(e);
        }
        return out + "}";
    }

    MultiValuedFunction::MultiValuedFunction(int target_size, vector<ElementSet> values) :
        _target_size(target_size),
        _values(std::move(values))
    {
        if (target_size < 1 || target_size > max_mvf_universe)
            throw StructureError("multi-valued function target must have between 1 and 64 elements");
        for (size_t i = 0; i < _values.size(); ++i) {
            if (_values[i] == 0)
                throw StructureError("multi-valued function has an empty value at " + std::to_string(i + 1));
            if (_values[i] & ~full_set(target_size))
                throw StructureError("multi-valued function value at " + std::to_string(i + 1) + " leaves the target");
        }
    }

    auto MultiValuedFunction::from_function(int target_size, const vector<Element> & values) -> MultiValuedFunction
    {
        vector<ElementSet> sets;
        for (auto v : values) {
            if (v < 1 || v > target_size)
                throw StructureError("function value outside target");
            sets.push_back(singleton(v));
        }
        return MultiValuedFunction(target_size, std::move(sets));
    }

    auto MultiValuedFunction::identity(int k) -> MultiValuedFunction
    {
        vector<Element> values;
        for (Element e = 1; e <= k; ++e)
            values.push_back(e);
        return from_function(k, values);
    }

    auto MultiValuedFunction::multiplicity() const -> int
    {
        int m = 0;
        for (auto v : _values)
            m = std::max(m, set_size(v));
        return m;
    }

    auto MultiValuedFunction::is_surjective() const -> bool
    {
        ElementSet covered = 0;
        for (auto v : _values)
            covered |= v;
        return covered == full_set(_target_size);
    }

    auto MultiValuedFunction::contained_in(const MultiValuedFunction & other) const -> bool
    {
        if (_values.size() != other._values.size() || _target_size != other._target_size)
            return false;
        for (size_t i = 0; i < _values.size(); ++i)
            if (_values[i] & ~other._values[i])
                return false;
        return true;
    }

    auto MultiValuedFunction::inverse() const -> MultiValuedFunction
    {
        if (! is_surjective())
            throw StructureError("only surjective multi-valued functions have an inverse");
        vector<ElementSet> inv(static_cast<size_t>(_target_size), 0);
        for (size_t a = 0; a < _values.size(); ++a)
            for (auto b : set_elements(_values[a]))
                inv[b - 1] |= singleton(static_cast<Element>(a + 1));
        return MultiValuedFunction(source_size(), std::move(inv));
    }

    auto MultiValuedFunction::full_image_point() const -> optional<Element>
    {
        for (size_t a = 0; a < _values.size(); ++a)
            if (_values[a] == full_set(_target_size))
                return static_cast<Element>(a + 1);
        return std::nullopt;
    }

    auto MultiValuedFunction::common_point() const -> optional<Element>
    {
        auto common = full_set(_target_size);
        for (auto v : _values)
            common &= v;
        if (! common)
            return std::nullopt;
        return std::countr_zero(common) + 1;
    }

    auto product_within(std::span<const ElementSet> sets, const Relation & r) -> bool
    {
        return for_each_in_product(sets, [&](const Tuple & u) { return r.contains(u); });
    }

    auto to_string(const MultiValuedFunction & f) -> string
    {
        string out;
        for (Element a = 1; a <= f.source_size(); ++a) {
            out += std::to_string(a) + " :";
            for (auto b : set_elements(f(a)))
                out += " " + std::to_string(b);
            out += "\n";
        }
        return out;
    }

    auto to_inline_string(const MultiValuedFunction & f) -> string
    {
        string out;
        for (Element a = 1; a <= f.source_size(); ++a)
            out += (a > 1 ? " " : "") + std::to_string(a) + "->" + set_to_string(f(a));
        return out;
    }

    auto maps_into(const MultiValuedFunction & f, const Relation & from, const Relation & to) -> bool
    {
        // Each source tuple is checked either by walking its image product or, when the product is
        // larger, by scanning the target's complement for a tuple inside the product.
        size_t missing = to.full_size() - to.size();
        if (missing == 0)
            return true;
        optional<vector<Tuple>> complement_tuples;
        vector<ElementSet> sets(static_cast<size_t>(from.arity()));
        for (auto & t : from.tuples()) {
            size_t product = 1;
            for (size_t i = 0; i < t.size(); ++i) {
                sets[i] = f(t[i]);
                product *= static_cast<size_t>(set_size(sets[i]));
            }
            if (product <= missing) {
                if (! product_within(sets, to))
                    return false;
            }
            else {
                if (! complement_tuples)
                    complement_tuples = to.complement().tuples();
                for (auto & c : *complement_tuples) {
                    bool inside = true;
                    for (size_t i = 0; i < c.size() && inside; ++i)
                        inside = set_contains(sets[i], c[i]);
                    if (inside)
                        return false;
                }
            }
        }
        return true;
    }

    auto image_structure(const Structure & s, const MultiValuedFunction & f) -> Structure
    {
        if (f.source_size() != s.universe_size())
            throw StructureError("multi-valued function source does not match the structure universe");
        vector<Relation> rels;
        for (auto & r : s.relations()) {
            vector<Tuple> out;
            vector<ElementSet> sets(static_cast<size_t>(r.arity()));
            for (auto & t : r.tuples()) {
                for (size_t i = 0; i < t.size(); ++i)
                    sets[i] = f(t[i]);
                for_each_in_product(sets, [&](const Tuple & u) {
                    out.push_back(u);
                    return true;
                });
            }
            rels.emplace_back(f.target_size(), r.arity(), std::move(out));
        }
        return Structure(s.signature(), f.target_size(), std::move(rels), false);
    }
}
