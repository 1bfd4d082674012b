#ifndef MUCHECK_STRUCTURE_HH
#define MUCHECK_STRUCTURE_HH

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mucheck
{
    /// Universe elements are the integers 1..k.
    using Element = int;
    using Tuple = std::vector<Element>;

    class StructureError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Symbol
    {
        std::string name;
        int arity = 0;

        auto operator==(const Symbol &) const -> bool = default;
    };

    /// An ordered, nonempty list of relation symbols with distinct names.
    class Signature
    {
    public:
        Signature() = default;
        explicit Signature(std::vector<Symbol> symbols);

        [[nodiscard]] auto symbols() const -> const std::vector<Symbol> & { return _symbols; }
        [[nodiscard]] auto size() const -> std::size_t { return _symbols.size(); }
        [[nodiscard]] auto operator[](std::size_t i) const -> const Symbol & { return _symbols[i]; }
        [[nodiscard]] auto find(const std::string & name) const -> std::optional<std::size_t>;
        [[nodiscard]] auto contains(const std::string & name) const -> bool { return find(name).has_value(); }

        /// A name of the form base, base1, base2, ... not yet used in this signature.
        [[nodiscard]] auto fresh_name(const std::string & base) const -> std::string;

        auto operator==(const Signature &) const -> bool = default;

    private:
        std::vector<Symbol> _symbols;
    };

    /// A set of tuples of fixed arity over [k], kept sorted and deduplicated.
    class Relation
    {
    public:
        Relation() = default;
        Relation(int universe_size, int arity, std::vector<Tuple> tuples);

        [[nodiscard]] auto arity() const -> int { return _arity; }
        [[nodiscard]] auto universe_size() const -> int { return _universe_size; }
        [[nodiscard]] auto tuples() const -> const std::vector<Tuple> & { return _tuples; }
        [[nodiscard]] auto size() const -> std::size_t { return _tuples.size(); }
        [[nodiscard]] auto empty() const -> bool { return _tuples.empty(); }

        /// Number of tuples in [k]^arity, saturating at SIZE_MAX.
        [[nodiscard]] auto full_size() const -> std::size_t;
        [[nodiscard]] auto is_full() const -> bool { return _tuples.size() == full_size(); }

        [[nodiscard]] auto contains(std::span<const Element> t) const -> bool;

        /// [k]^arity minus this relation.
        [[nodiscard]] auto complement() const -> Relation;

        auto operator==(const Relation & other) const -> bool
        {
            return _universe_size == other._universe_size && _arity == other._arity && _tuples == other._tuples;
        }

    private:
        int _universe_size = 0;
        int _arity = 0;
        std::vector<Tuple> _tuples;
        // Dense membership index over [k]^arity when small enough; otherwise lookups bisect _tuples.
        std::vector<bool> _index;
    };

    /// Finite relational structure with universe [k].
    ///
    /// In strict mode construction enforces k >= 2 and nonempty proper relations; non-strict
    /// structures only require tuple entries to lie in [k].
    class Structure
    {
    public:
        Structure() = default;
        Structure(Signature signature, int universe_size, std::vector<Relation> relations, bool strict = true);
        Structure(Signature signature, int universe_size, const std::vector<std::vector<Tuple>> & relations,
            bool strict = true);

        [[nodiscard]] auto signature() const -> const Signature & { return _signature; }
        [[nodiscard]] auto universe_size() const -> int { return _universe_size; }
        [[nodiscard]] auto relations() const -> const std::vector<Relation> & { return _relations; }
        [[nodiscard]] auto relation(std::size_t i) const -> const Relation & { return _relations[i]; }
        [[nodiscard]] auto relation(const std::string & name) const -> const Relation &;
        [[nodiscard]] auto strict() const -> bool { return _strict; }

        /// Same structure with the strict flag changed; throws if turning strict on fails validation.
        [[nodiscard]] auto with_strict(bool strict) const -> Structure;

        /// Same structure with one more relation appended.
        [[nodiscard]] auto with_relation(const Symbol & symbol, Relation relation) const -> Structure;

        /// Equality ignores the strict flag and is sensitive to symbol names.
        auto operator==(const Structure & other) const -> bool
        {
            return _universe_size == other._universe_size && _signature == other._signature
                && _relations == other._relations;
        }

    private:
        Signature _signature;
        int _universe_size = 0;
        std::vector<Relation> _relations;
        bool _strict = true;
    };

    [[nodiscard]] auto similar(const Structure & a, const Structure & b) -> bool;

    struct Violation
    {
        std::string symbol;   // empty for universe-level violations
        std::string rule;

        auto operator==(const Violation &) const -> bool = default;
    };

    /// Lists every way s falls short of the strict conventions.
    [[nodiscard]] auto validate_structure(const Structure & s) -> std::vector<Violation>;

    [[nodiscard]] auto complement_structure(const Structure & s) -> Structure;

    /// Adds, for every symbol R whose complement is not already interpreted by some symbol, a fresh
    /// symbol R_bar interpreted as the complement of R.
    [[nodiscard]] auto complementation_closure(const Structure & s) -> Structure;

    /// Name used for the complement symbol of `name` when closing under complementation.
    [[nodiscard]] auto complement_symbol_name(const Signature & sig, const std::string & name) -> std::string;

    /// Equality relation on [k] as a binary relation.
    [[nodiscard]] auto equality_relation(int k) -> Relation;
    [[nodiscard]] auto disequality_relation(int k) -> Relation;

    /// Single binary relation structure ([k]; =) with the given symbol name.
    [[nodiscard]] auto equality_structure(int k, const std::string & symbol = "Q") -> Structure;

    /// Calls fn on every tuple of [k]^arity in lexicographic order.
    template <typename Fn>
    auto for_each_tuple(int k, int arity, Fn && fn) -> void
    {
        Tuple t(static_cast<std::size_t>(arity), 1);
        if (k < 1)
            return;
        while (true) {
            fn(std::as_const(t));
            int i = arity - 1;
            while (i >= 0 && t[i] == k) {
                t[i] = 1;
                --i;
            }
            if (i < 0)
                return;
            ++t[i];
        }
    }

    auto to_string(const Tuple & t) -> std::string;
}

#endif
