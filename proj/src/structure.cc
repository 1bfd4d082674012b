#include <mucheck/structure.hh>

#include <algorithm>
#include <limits>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        constexpr size_t max_dense_index = size_t{1} << 22;

        auto checked_power(size_t base, int exponent) -> size_t
        {
            size_t result = 1;
            for (int i = 0; i < exponent; ++i) {
                if (base != 0 && result > std::numeric_limits<size_t>::max() / base)
                    return std::numeric_limits<size_t>::max();
                result *= base;
            }
            return result;
        }

        auto build_relations(const Signature & sig, int k, const vector<vector<Tuple>> & relations) -> vector<Relation>
        {
            if (relations.size() != sig.size())
                throw StructureError("one relation per symbol required");
            vector<Relation> rels;
            for (size_t i = 0; i < relations.size(); ++i)
                rels.emplace_back(k, sig[i].arity, relations[i]);
            return rels;
        }

        auto dense_position(std::span<const Element> t, int k) -> size_t
        {
            size_t pos = 0;
            for (auto e : t)
                pos = pos * static_cast<size_t>(k) + static_cast<size_t>(e - 1);
            return pos;
        }
    }

    Signature::Signature(vector<Symbol> symbols) :
        _symbols(std::move(symbols))
    {
        if (_symbols.empty())
            throw StructureError("signature must contain at least one symbol");
        std::set<string> seen;
        for (auto & s : _symbols) {
            if (s.arity < 1)
                throw StructureError("symbol " + s.name + " must have arity at least 1");
            if (! seen.insert(s.name).second)
                throw StructureError("duplicate symbol " + s.name);
        }
    }

    auto Signature::find(const string & name) const -> optional<size_t>
    {
        for (size_t i = 0; i < _symbols.size(); ++i)
            if (_symbols[i].name == name)
                return i;
        return std::nullopt;
    }

    auto Signature::fresh_name(const string & base) const -> string
    {
        if (! contains(base))
            return base;
        for (int i = 1;; ++i) {
            auto candidate = base + std::to_string(i);
            if (! contains(candidate))
                return candidate;
        }
    }

    Relation::Relation(int universe_size, int arity, vector<Tuple> tuples) :
        _universe_size(universe_size),
        _arity(arity),
        _tuples(std::move(tuples))
    {
        if (arity < 1)
            throw StructureError("relations must be at least unary");
        for (auto & t : _tuples) {
            if (t.size() != static_cast<size_t>(arity))
                throw StructureError("tuple " + to_string(t) + " does not have arity " + std::to_string(arity));
            for (auto e : t)
                if (e < 1 || e > universe_size)
                    throw StructureError("tuple " + to_string(t) + " has an entry outside [" + std::to_string(universe_size) + "]");
        }
        std::sort(_tuples.begin(), _tuples.end());
        _tuples.erase(std::unique(_tuples.begin(), _tuples.end()), _tuples.end());

        auto full = full_size();
        if (full <= max_dense_index) {
            _index.assign(full, false);
            for (auto & t : _tuples)
                _index[dense_position(t, universe_size)] = true;
        }
    }

    auto Relation::full_size() const -> size_t
    {
        return checked_power(static_cast<size_t>(_universe_size), _arity);
    }

    auto Relation::contains(std::span<const Element> t) const -> bool
    {
        if (! _index.empty())
            return _index[dense_position(t, _universe_size)];
        return std::binary_search(_tuples.begin(), _tuples.end(), t,
            [](const auto & x, const auto & y) { return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end()); });
    }

    auto Relation::complement() const -> Relation
    {
        if (full_size() > max_dense_index)
            throw StructureError("relation too large to complement");
        vector<Tuple> out;
        for_each_tuple(_universe_size, _arity, [&](const Tuple & t) {
            if (! contains(t))
                out.push_back(t);
        });
        return Relation(_universe_size, _arity, std::move(out));
    }

    Structure::Structure(Signature signature, int universe_size, vector<Relation> relations, bool strict) :
        _signature(std::move(signature)),
        _universe_size(universe_size),
        _relations(std::move(relations)),
        _strict(strict)
    {
        if (universe_size < 1)
            throw StructureError("universe must be nonempty");
        if (_relations.size() != _signature.size())
            throw StructureError("one relation per symbol required");
        for (size_t i = 0; i < _relations.size(); ++i) {
            if (_relations[i].arity() != _signature[i].arity)
                throw StructureError("relation " + _signature[i].name + " has the wrong arity");
            if (_relations[i].universe_size() != universe_size)
                throw StructureError("relation " + _signature[i].name + " is over the wrong universe");
        }
        if (strict) {
            auto violations = validate_structure(*this);
            if (! violations.empty()) {
                string message = "structure violates strict conventions:";
                for (auto & v : violations)
                    message += " [" + (v.symbol.empty() ? string{} : v.symbol + " ") + v.rule + "]";
                throw StructureError(message);
            }
        }
    }

    Structure::Structure(Signature signature, int universe_size, const vector<vector<Tuple>> & relations, bool strict) :
        Structure(signature, universe_size, build_relations(signature, universe_size, relations), strict)
    {
    }

    auto Structure::relation(const string & name) const -> const Relation &
    {
        auto i = _signature.find(name);
        if (! i)
            throw StructureError("unknown symbol " + name);
        return _relations[*i];
    }

    auto Structure::with_strict(bool strict) const -> Structure
    {
        return Structure(_signature, _universe_size, _relations, strict);
    }

    auto Structure::with_relation(const Symbol & symbol, Relation relation) const -> Structure
    {
        auto symbols = _signature.symbols();
        symbols.push_back(symbol);
        auto rels = _relations;
        rels.push_back(std::move(relation));
        return Structure(Signature(std::move(symbols)), _universe_size, std::move(rels), _strict);
    }

    auto similar(const Structure & a, const Structure & b) -> bool
    {
        return a.signature() == b.signature();
    }

    auto validate_structure(const Structure & s) -> vector<Violation>
    {
        vector<Violation> out;
        if (s.universe_size() < 2)
            out.push_back({"", "universe too small"});
        for (size_t i = 0; i < s.relations().size(); ++i) {
            auto & r = s.relation(i);
            auto & name = s.signature()[i].name;
            if (r.empty())
                out.push_back({name, "empty"});
            else if (r.is_full())
                out.push_back({name, "not proper"});
        }
        return out;
    }

    auto complement_structure(const Structure & s) -> Structure
    {
        vector<Relation> rels;
        for (auto & r : s.relations())
            rels.push_back(r.complement());
        return Structure(s.signature(), s.universe_size(), std::move(rels), s.strict());
    }

    auto complement_symbol_name(const Signature & sig, const string & name) -> string
    {
        return sig.fresh_name(name + "_bar");
    }

    auto complementation_closure(const Structure & s) -> Structure
    {
        auto result = s;
        auto original = s.signature().size();
        for (size_t i = 0; i < original; ++i) {
            auto comp = s.relation(i).complement();
            bool present = std::any_of(result.relations().begin(), result.relations().end(),
                [&](const Relation & r) { return r == comp; });
            if (! present)
                result = result.with_relation(
                    Symbol{complement_symbol_name(result.signature(), s.signature()[i].name), s.signature()[i].arity},
                    std::move(comp));
        }
        return result;
    }

    auto equality_relation(int k) -> Relation
    {
        vector<Tuple> tuples;
        for (Element e = 1; e <= k; ++e)
            tuples.push_back({e, e});
        return Relation(k, 2, std::move(tuples));
    }

    auto disequality_relation(int k) -> Relation
    {
        vector<Tuple> tuples;
        for (Element e = 1; e <= k; ++e)
            for (Element f = 1; f <= k; ++f)
                if (e != f)
                    tuples.push_back({e, f});
        return Relation(k, 2, std::move(tuples));
    }

    auto equality_structure(int k, const string & symbol) -> Structure
    {
        return Structure(Signature({{symbol, 2}}), k, vector<Relation>{equality_relation(k)});
    }

    auto to_string(const Tuple & t) -> string
    {
        string out = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(t[i]);
        }
        return out + ")";
    }
}
