#ifndef MUCHECK_EVALUATOR_HH
#define MUCHECK_EVALUATOR_HH

#include <mucheck/formula.hh>
#include <mucheck/structure.hh>
#include <mucheck/transform.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mucheck
{
    using Assignment = std::map<std::string, Element>;

    /// A formula compiled against a signature, with variables resolved to slots. The free
    /// variables are supplied positionally in the order given at construction.
    class CompiledFormula
    {
    public:
        CompiledFormula(const Signature & sig, const Formula & f, std::vector<std::string> free_order);

        [[nodiscard]] auto free_order() const -> const std::vector<std::string> & { return _free_order; }

        /// s must interpret the signature the formula was compiled against (same symbol order).
        [[nodiscard]] auto evaluate(const Structure & s, std::span<const Element> free_values) const -> bool;

    private:
        struct Node
        {
            NodeKind kind;
            int symbol = -1;
            std::vector<int> args;
            std::vector<int> children;
        };

        auto run(int node, const Structure & s, std::vector<Element> & slots) const -> bool;

        std::vector<std::string> _free_order;
        std::vector<Node> _nodes;
        int _root = 0;
        int _slot_count = 0;
    };

    /// Tarskian truth of f in s under a; a must bind every free variable of f.
    [[nodiscard]] auto eval(const Structure & s, const Formula & f, const Assignment & a = {}) -> bool;

    /// Truth values of a formula for every assignment to a list of variables, packed as a bit vector
    /// whose index reads the variables as base-k digits with the first variable least significant.
    class TruthTable
    {
    public:
        TruthTable(int universe_size, std::vector<std::string> variables, std::vector<std::uint64_t> bits);

        [[nodiscard]] auto universe_size() const -> int { return _universe_size; }
        [[nodiscard]] auto variables() const -> const std::vector<std::string> & { return _variables; }
        [[nodiscard]] auto size() const -> std::size_t { return _size; }
        [[nodiscard]] auto bits() const -> const std::vector<std::uint64_t> & { return _bits; }

        [[nodiscard]] auto test(std::size_t index) const -> bool { return (_bits[index / 64] >> (index % 64)) & 1; }
        [[nodiscard]] auto at(std::span<const Element> values) const -> bool;
        [[nodiscard]] auto index_of(std::span<const Element> values) const -> std::size_t;
        [[nodiscard]] auto count() const -> std::size_t;

        auto operator==(const TruthTable &) const -> bool = default;

    private:
        int _universe_size;
        std::vector<std::string> _variables;
        std::size_t _size;
        std::vector<std::uint64_t> _bits;
    };

    /// Tables are computed bottom-up over every variable of the formula at once, so the cost is
    /// k^(number of distinct variables); throws FormulaError beyond 2^26 entries.
    [[nodiscard]] auto truth_table(const Structure & s, const Formula & f, const std::vector<std::string> & variables)
        -> TruthTable;

    /// Witness functions for a special-form formula: alpha_i maps the values (c_1, ..., c_i) of the
    /// first i universal variables to a value of z_i.
    class WitnessTable
    {
    public:
        WitnessTable(int universe_size, int blocks);

        [[nodiscard]] auto universe_size() const -> int { return _universe_size; }
        [[nodiscard]] auto blocks() const -> int { return static_cast<int>(_alpha.size()); }

        /// alpha_i(c_1, ..., c_i) with i = prefix.size() >= 1.
        [[nodiscard]] auto operator()(std::span<const Element> prefix) const -> Element;
        auto set(std::span<const Element> prefix, Element value) -> void;

        /// Existential values z_1..z_m chosen against the universal values c_1..c_m.
        [[nodiscard]] auto respond(std::span<const Element> universals) const -> std::vector<Element>;

    private:
        [[nodiscard]] auto index(std::span<const Element> prefix) const -> std::size_t;

        int _universe_size;
        std::vector<std::vector<Element>> _alpha;
    };

    /// One line per entry, `alpha_i(c1,...,ci) = v`.
    [[nodiscard]] auto to_string(const WitnessTable & w) -> std::string;

    /// Witnesses choosing, at every position, the least value from which the game is still won;
    /// none iff s does not satisfy the special form under a.
    [[nodiscard]] auto find_witnesses(const Structure & s, const SpecialForm & sf, const Assignment & a = {})
        -> std::optional<WitnessTable>;

    /// Checks s |= matrix(a, c, alpha_1(c_1), ..., alpha_m(c_1..c_m)) for every c in [k]^m.
    [[nodiscard]] auto verify_witnesses(const Structure & s, const SpecialForm & sf, const WitnessTable & w,
        const Assignment & a = {}) -> bool;
}

#endif
