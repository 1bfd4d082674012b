#include <mucheck/evaluator.hh>

#include <algorithm>
#include <array>
#include <bit>

using std::map;
using std::optional;
using std::set;
using std::size_t;
using std::span;
using std::string;
using std::uint64_t;
using std::vector;

namespace mucheck
{
    CompiledFormula::CompiledFormula(const Signature & sig, const Formula & f, vector<string> free_order) :
        _free_order(std::move(free_order))
    {
        map<string, vector<int>> scope;
        for (auto & v : _free_order)
            scope[v].push_back(_slot_count++);

        auto slot_of = [&](const string & v) {
            auto it = scope.find(v);
            if (it == scope.end() || it->second.empty())
                throw FormulaError("unbound variable '" + v + "'");
            return it->second.back();
        };

        auto compile = [&](auto & self, const Formula & g) -> int {
            Node node{g.kind(), -1, {}, {}};
            switch (g.kind()) {
            case NodeKind::Atom: {
                auto idx = sig.find(g.symbol());
                if (! idx)
                    throw FormulaError("unknown relation symbol '" + g.symbol() + "'");
                if (static_cast<size_t>(sig[*idx].arity) != g.variables().size())
                    throw FormulaError("symbol '" + g.symbol() + "' has arity " + std::to_string(sig[*idx].arity)
                        + " but is applied to " + std::to_string(g.variables().size()) + " arguments");
                node.symbol = static_cast<int>(*idx);
                for (auto & v : g.variables())
                    node.args.push_back(slot_of(v));
                break;
            }
            case NodeKind::Eq:
            case NodeKind::Neq:
                for (auto & v : g.variables())
                    node.args.push_back(slot_of(v));
                break;
            case NodeKind::Exists:
            case NodeKind::Forall: {
                int slot = _slot_count++;
                auto & stack = scope[g.bound_variable()];
                stack.push_back(slot);
                node.args.push_back(slot);
                node.children.push_back(self(self, g.child()));
                scope[g.bound_variable()].pop_back();
                break;
            }
            default:
                for (auto & c : g.children())
                    node.children.push_back(self(self, c));
            }
            _nodes.push_back(std::move(node));
            return static_cast<int>(_nodes.size()) - 1;
        };
        _root = compile(compile, f);
    }

    auto CompiledFormula::evaluate(const Structure & s, span<const Element> free_values) const -> bool
    {
        if (free_values.size() != _free_order.size())
            throw FormulaError("wrong number of values for free variables");
        vector<Element> slots(static_cast<size_t>(_slot_count), 0);
        std::copy(free_values.begin(), free_values.end(), slots.begin());
        return run(_root, s, slots);
    }

    auto CompiledFormula::run(int index, const Structure & s, vector<Element> & slots) const -> bool
    {
        auto & node = _nodes[static_cast<size_t>(index)];
        switch (node.kind) {
        case NodeKind::Atom: {
            std::array<Element, 16> small;
            vector<Element> large;
            span<Element> t;
            if (node.args.size() <= small.size())
                t = span<Element>(small.data(), node.args.size());
            else {
                large.resize(node.args.size());
                t = large;
            }
            for (size_t i = 0; i < node.args.size(); ++i)
                t[i] = slots[static_cast<size_t>(node.args[i])];
            return s.relation(static_cast<size_t>(node.symbol)).contains(t);
        }
        case NodeKind::Eq: return slots[node.args[0]] == slots[node.args[1]];
        case NodeKind::Neq: return slots[node.args[0]] != slots[node.args[1]];
        case NodeKind::Not: return ! run(node.children[0], s, slots);
        case NodeKind::And:
            for (auto c : node.children)
                if (! run(c, s, slots))
                    return false;
            return true;
        case NodeKind::Or:
            for (auto c : node.children)
                if (run(c, s, slots))
                    return true;
            return false;
        case NodeKind::Exists:
        case NodeKind::Forall: {
            bool want = node.kind == NodeKind::Exists;
            auto & slot = slots[static_cast<size_t>(node.args[0])];
            for (Element v = 1; v <= s.universe_size(); ++v) {
                slot = v;
                if (run(node.children[0], s, slots) == want)
                    return want;
            }
            return ! want;
        }
        }
        return false;
    }

    auto eval(const Structure & s, const Formula & f, const Assignment & a) -> bool
    {
        check_signature(f, s.signature());
        vector<string> order;
        vector<Element> values;
        for (auto & [v, e] : a) {
            if (e < 1 || e > s.universe_size())
                throw FormulaError("variable '" + v + "' assigned outside the universe");
            order.push_back(v);
            values.push_back(e);
        }
        return CompiledFormula(s.signature(), f, std::move(order)).evaluate(s, values);
    }

    TruthTable::TruthTable(int universe_size, vector<string> variables, vector<uint64_t> bits) :
        _universe_size(universe_size),
        _variables(std::move(variables)),
        _size(1),
        _bits(std::move(bits))
    {
        for (size_t i = 0; i < _variables.size(); ++i)
            _size *= static_cast<size_t>(universe_size);
        if (_bits.size() != (_size + 63) / 64)
            throw FormulaError("truth table has the wrong number of words");
    }

    auto TruthTable::index_of(span<const Element> values) const -> size_t
    {
        size_t index = 0, stride = 1;
        for (auto v : values) {
            index += static_cast<size_t>(v - 1) * stride;
            stride *= static_cast<size_t>(_universe_size);
        }
        return index;
    }

    auto TruthTable::at(span<const Element> values) const -> bool
    {
        if (values.size() != _variables.size())
            throw FormulaError("wrong number of values for truth table lookup");
        return test(index_of(values));
    }

    auto TruthTable::count() const -> size_t
    {
        size_t n = 0;
        for (auto w : _bits)
            n += static_cast<size_t>(std::popcount(w));
        return n;
    }

    namespace
    {
        constexpr size_t max_table_entries = size_t{1} << 26;

        class TableBuilder
        {
        public:
            TableBuilder(const Structure & s, vector<string> dims) :
                _s(s),
                _k(static_cast<size_t>(s.universe_size())),
                _dims(std::move(dims))
            {
                _size = 1;
                for (size_t i = 0; i < _dims.size(); ++i) {
                    _strides.push_back(_size);
                    _position[_dims[i]] = i;
                    _size *= _k;
                    if (_size > max_table_entries)
                        throw FormulaError("truth table over " + std::to_string(_dims.size()) + " variables is too large");
                }
                _words = (_size + 63) / 64;
            }

            auto size() const -> size_t { return _size; }

            auto build(const Formula & f) -> vector<uint64_t>
            {
                switch (f.kind()) {
                case NodeKind::Atom:
                case NodeKind::Eq:
                case NodeKind::Neq: return literal(f);
                case NodeKind::Not: {
                    auto t = build(f.child());
                    for (auto & w : t)
                        w = ~w;
                    mask(t);
                    return t;
                }
                case NodeKind::And:
                case NodeKind::Or: {
                    auto t = build(f.children()[0]);
                    for (size_t c = 1; c < f.children().size(); ++c) {
                        auto u = build(f.children()[c]);
                        for (size_t i = 0; i < _words; ++i)
                            t[i] = f.kind() == NodeKind::And ? (t[i] & u[i]) : (t[i] | u[i]);
                    }
                    return t;
                }
                case NodeKind::Exists:
                case NodeKind::Forall: return quantify(build(f.child()), _position.at(f.bound_variable()),
                    f.kind() == NodeKind::Exists);
                }
                throw FormulaError("unreachable formula kind");
            }

        private:
            const Structure & _s;
            size_t _k;
            vector<string> _dims;
            vector<size_t> _strides;
            map<string, size_t> _position;
            size_t _size = 1, _words = 0;
            map<string, vector<uint64_t>> _literal_cache;

            auto mask(vector<uint64_t> & t) const -> void
            {
                if (_size % 64)
                    t.back() &= (uint64_t{1} << (_size % 64)) - 1;
            }

            auto literal(const Formula & f) -> vector<uint64_t>
            {
                auto key = to_string(f);
                if (auto it = _literal_cache.find(key); it != _literal_cache.end())
                    return it->second;

                vector<size_t> arg_dims;
                for (auto & v : f.variables())
                    arg_dims.push_back(_position.at(v));
                const Relation * rel = f.kind() == NodeKind::Atom ? &_s.relation(f.symbol()) : nullptr;

                vector<uint64_t> t(_words, 0);
                vector<Element> digits(_dims.size(), 1);
                Tuple tuple(arg_dims.size());
                for (size_t idx = 0; idx < _size; ++idx) {
                    for (size_t i = 0; i < arg_dims.size(); ++i)
                        tuple[i] = digits[arg_dims[i]];
                    bool value;
                    if (rel)
                        value = rel->contains(tuple);
                    else
                        value = (tuple[0] == tuple[1]) == (f.kind() == NodeKind::Eq);
                    if (value)
                        t[idx / 64] |= uint64_t{1} << (idx % 64);
                    for (size_t d = 0; d < digits.size(); ++d) {
                        if (static_cast<size_t>(digits[d]) < _k) {
                            ++digits[d];
                            break;
                        }
                        digits[d] = 1;
                    }
                }
                _literal_cache.emplace(key, t);
                return t;
            }

            auto quantify(const vector<uint64_t> & t, size_t dim, bool exists) const -> vector<uint64_t>
            {
                auto get = [&](size_t i) { return (t[i / 64] >> (i % 64)) & 1; };
                vector<uint64_t> out(_words, 0);
                size_t stride = _strides[dim], block = stride * _k;
                for (size_t hi = 0; hi < _size; hi += block)
                    for (size_t lo = 0; lo < stride; ++lo) {
                        size_t base = hi + lo;
                        bool acc = ! exists;
                        for (size_t v = 0; v < _k; ++v) {
                            bool bit = get(base + v * stride);
                            if (bit == exists) {
                                acc = exists;
                                break;
                            }
                        }
                        if (acc)
                            for (size_t v = 0; v < _k; ++v) {
                                size_t i = base + v * stride;
                                out[i / 64] |= uint64_t{1} << (i % 64);
                            }
                    }
                return out;
            }
        };

        auto collect_binders(const Formula & f, vector<string> & out) -> void
        {
            if (f.is_quantifier())
                out.push_back(f.bound_variable());
            if (! f.is_literal())
                for (auto & c : f.children())
                    collect_binders(c, out);
        }
    }

    auto truth_table(const Structure & s, const Formula & f, const vector<string> & variables) -> TruthTable
    {
        check_signature(f, s.signature());
        set<string> listed(variables.begin(), variables.end());
        if (listed.size() != variables.size())
            throw FormulaError("truth table variables must be distinct");
        for (auto & v : free_variables(f))
            if (! listed.contains(v))
                throw FormulaError("free variable '" + v + "' missing from the truth table variables");

        FreshNames names(listed);
        auto g = rename_apart(f, names);
        auto dims = variables;
        collect_binders(g, dims);

        TableBuilder builder(s, dims);
        auto full = builder.build(g);

        // Bound dimensions are the most significant and the result does not depend on them.
        size_t size = 1;
        for (size_t i = 0; i < variables.size(); ++i)
            size *= static_cast<size_t>(s.universe_size());
        full.resize((size + 63) / 64);
        if (size % 64)
            full.back() &= (uint64_t{1} << (size % 64)) - 1;
        return TruthTable(s.universe_size(), variables, std::move(full));
    }

    WitnessTable::WitnessTable(int universe_size, int blocks) :
        _universe_size(universe_size)
    {
        size_t size = 1;
        for (int i = 0; i < blocks; ++i) {
            size *= static_cast<size_t>(universe_size);
            _alpha.emplace_back(size, 0);
        }
    }

    auto WitnessTable::index(span<const Element> prefix) const -> size_t
    {
        if (prefix.empty() || prefix.size() > _alpha.size())
            throw FormulaError("witness prefix length out of range");
        size_t index = 0, stride = 1;
        for (auto c : prefix) {
            if (c < 1 || c > _universe_size)
                throw FormulaError("witness prefix outside the universe");
            index += static_cast<size_t>(c - 1) * stride;
            stride *= static_cast<size_t>(_universe_size);
        }
        return index;
    }

    auto WitnessTable::operator()(span<const Element> prefix) const -> Element
    {
        return _alpha[prefix.size() - 1][index(prefix)];
    }

    auto WitnessTable::set(span<const Element> prefix, Element value) -> void
    {
        auto i = index(prefix);
        _alpha[prefix.size() - 1][i] = value;
    }

    auto WitnessTable::respond(span<const Element> universals) const -> vector<Element>
    {
        vector<Element> out;
        for (size_t i = 1; i <= universals.size(); ++i)
            out.push_back((*this)(universals.subspan(0, i)));
        return out;
    }

    auto to_string(const WitnessTable & w) -> string
    {
        string out;
        for (int i = 1; i <= w.blocks(); ++i)
            for_each_tuple(w.universe_size(), i, [&](const Tuple & c) {
                out += "alpha_" + std::to_string(i) + "(";
                for (size_t j = 0; j < c.size(); ++j)
                    out += (j ? "," : "") + std::to_string(c[j]);
                out += ") = " + std::to_string(w(c)) + "\n";
            });
        return out;
    }

    namespace
    {
        // Evaluates the matrix of a special form with slots laid out as [assignment..., y1, z1, ..., ym, zm].
        class Game
        {
        public:
            Game(const Structure & s, const SpecialForm & sf, const Assignment & a) :
                _s(s),
                _m(sf.size()),
                _compiled(s.signature(), sf.matrix, order(sf, a, _fixed)),
                _values(_fixed)
            {
                check_signature(sf.matrix, s.signature());
                _values.resize(_fixed.size() + 2 * _m, 1);
            }

            auto universal(size_t i) -> Element & { return _values[_fixed.size() + 2 * i]; }
            auto existential(size_t i) -> Element & { return _values[_fixed.size() + 2 * i + 1]; }

            auto matrix() -> bool { return _compiled.evaluate(_s, _values); }

            auto win(size_t level) -> bool
            {
                if (level == _m)
                    return matrix();
                for (Element c = 1; c <= _s.universe_size(); ++c) {
                    universal(level) = c;
                    if (! respond(level))
                        return false;
                }
                return true;
            }

            // Sets z_level to the least value that keeps the game won, if there is one.
            auto respond(size_t level) -> bool
            {
                for (Element z = 1; z <= _s.universe_size(); ++z) {
                    existential(level) = z;
                    if (win(level + 1))
                        return true;
                }
                return false;
            }

        private:
            static auto order(const SpecialForm & sf, const Assignment & a, vector<Element> & fixed) -> vector<string>
            {
                std::set<string> block_vars;
                for (auto & b : sf.blocks) {
                    block_vars.insert(b.universal);
                    block_vars.insert(b.existential);
                }
                vector<string> names;
                for (auto & [v, e] : a)
                    if (! block_vars.contains(v)) {
                        names.push_back(v);
                        fixed.push_back(e);
                    }
                for (auto & b : sf.blocks) {
                    names.push_back(b.universal);
                    names.push_back(b.existential);
                }
                return names;
            }

            const Structure & _s;
            size_t _m;
            vector<Element> _fixed;
            CompiledFormula _compiled;
            vector<Element> _values;
        };
    }

    auto find_witnesses(const Structure & s, const SpecialForm & sf, const Assignment & a) -> optional<WitnessTable>
    {
        Game game(s, sf, a);
        if (! game.win(0))
            return std::nullopt;

        WitnessTable table(s.universe_size(), static_cast<int>(sf.size()));
        Tuple prefix;
        auto fill = [&](auto & self, size_t level) -> void {
            if (level == sf.size())
                return;
            for (Element c = 1; c <= s.universe_size(); ++c) {
                game.universal(level) = c;
                prefix.push_back(c);
                if (! game.respond(level))
                    throw FormulaError("witness search lost a won position");
                table.set(prefix, game.existential(level));
                self(self, level + 1);
                prefix.pop_back();
            }
        };
        fill(fill, 0);
        return table;
    }

    auto verify_witnesses(const Structure & s, const SpecialForm & sf, const WitnessTable & w, const Assignment & a) -> bool
    {
        if (w.blocks() != static_cast<int>(sf.size()) || w.universe_size() != s.universe_size())
            return false;
        Game game(s, sf, a);
        bool ok = true;
        for_each_tuple(s.universe_size(), static_cast<int>(sf.size()), [&](const Tuple & c) {
            if (! ok)
                return;
            auto z = w.respond(c);
            for (size_t i = 0; i < c.size(); ++i) {
                game.universal(i) = c[i];
                game.existential(i) = z[i];
            }
            ok = game.matrix();
        });
        return ok;
    }
}
