#ifndef MUCHECK_FORMULA_HH
#define MUCHECK_FORMULA_HH

#include <mucheck/structure.hh>

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mucheck
{
    class FormulaError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class Connective : std::uint8_t
    {
        Exists,
        Forall,
        And,
        Or,
        Eq,
        Neq,
        Not
    };

    /// A subset of {exists, forall, and, or, =, !=, not}.
    class Fragment
    {
    public:
        constexpr Fragment() = default;
        constexpr Fragment(std::initializer_list<Connective> cs)
        {
            for (auto c : cs)
                _bits |= bit(c);
        }

        [[nodiscard]] constexpr auto contains(Connective c) const -> bool { return _bits & bit(c); }
        [[nodiscard]] constexpr auto with(Connective c) const -> Fragment { return from_bits(_bits | bit(c)); }
        [[nodiscard]] constexpr auto without(Connective c) const -> Fragment { return from_bits(_bits & ~bit(c)); }
        [[nodiscard]] constexpr auto subset_of(Fragment o) const -> bool { return (_bits & ~o._bits) == 0; }
        [[nodiscard]] constexpr auto empty() const -> bool { return _bits == 0; }
        [[nodiscard]] constexpr auto bits() const -> std::uint8_t { return _bits; }

        [[nodiscard]] constexpr auto has_quantifier() const -> bool
        {
            return contains(Connective::Exists) || contains(Connective::Forall);
        }
        [[nodiscard]] constexpr auto has_connective() const -> bool
        {
            return contains(Connective::And) || contains(Connective::Or);
        }

        /// Swaps exists/forall and and/or.
        [[nodiscard]] auto dual() const -> Fragment;

        constexpr auto operator==(const Fragment &) const -> bool = default;

        [[nodiscard]] static constexpr auto from_bits(std::uint8_t b) -> Fragment
        {
            Fragment f;
            f._bits = b;
            return f;
        }

    private:
        static constexpr auto bit(Connective c) -> std::uint8_t { return std::uint8_t(1u << static_cast<unsigned>(c)); }
        std::uint8_t _bits = 0;
    };

    namespace fragments
    {
        inline constexpr Fragment ea{Connective::Exists, Connective::And};
        inline constexpr Fragment eao{Connective::Exists, Connective::And, Connective::Or};
        inline constexpr Fragment eaforall{Connective::Exists, Connective::Forall, Connective::And};
        inline constexpr Fragment eao_forall{Connective::Exists, Connective::Forall, Connective::And, Connective::Or};
    }

    [[nodiscard]] auto is_canonical(Fragment f) -> bool;

    /// Set notation, e.g. `{exists,forall,and,or}`.
    [[nodiscard]] auto to_string(Fragment f) -> std::string;

    /// Command-line vocabulary: `ea`, `eao`, `eaforall`, `eao-forall`, each optionally followed by
    /// `-eq`, `-neq`, `-neg` suffixes; alternatively a comma list of exists,forall,and,or,eq,neq,not.
    [[nodiscard]] auto parse_fragment(const std::string & text) -> Fragment;

    enum class NodeKind : std::uint8_t
    {
        Atom,
        Eq,
        Neq,
        Not,
        And,
        Or,
        Exists,
        Forall
    };

    /// Immutable first-order formula over named relation symbols and named variables.
    class Formula
    {
    public:
        [[nodiscard]] static auto atom(std::string symbol, std::vector<std::string> args) -> Formula;
        [[nodiscard]] static auto eq(std::string a, std::string b) -> Formula;
        [[nodiscard]] static auto neq(std::string a, std::string b) -> Formula;
        [[nodiscard]] static auto negation(Formula child) -> Formula;
        /// Both require at least two children.
        [[nodiscard]] static auto conjunction(std::vector<Formula> children) -> Formula;
        [[nodiscard]] static auto disjunction(std::vector<Formula> children) -> Formula;
        [[nodiscard]] static auto exists(std::string var, Formula child) -> Formula;
        [[nodiscard]] static auto forall(std::string var, Formula child) -> Formula;

        [[nodiscard]] auto kind() const -> NodeKind { return _node->kind; }
        /// Relation symbol of an atom.
        [[nodiscard]] auto symbol() const -> const std::string & { return _node->symbol; }
        /// Arguments of an atom or (in)equality; the bound variable (single entry) of a quantifier.
        [[nodiscard]] auto variables() const -> const std::vector<std::string> & { return _node->vars; }
        [[nodiscard]] auto bound_variable() const -> const std::string & { return _node->vars.front(); }
        [[nodiscard]] auto children() const -> const std::vector<Formula> & { return _node->children; }
        [[nodiscard]] auto child() const -> const Formula & { return _node->children.front(); }

        [[nodiscard]] auto is_quantifier() const -> bool { return kind() == NodeKind::Exists || kind() == NodeKind::Forall; }
        [[nodiscard]] auto is_literal() const -> bool
        {
            return kind() == NodeKind::Atom || kind() == NodeKind::Eq || kind() == NodeKind::Neq;
        }

        auto operator==(const Formula & other) const -> bool;

    private:
        struct Node
        {
            NodeKind kind;
            std::string symbol;
            std::vector<std::string> vars;
            std::vector<Formula> children;
        };

        explicit Formula(std::shared_ptr<const Node> node) : _node(std::move(node)) {}

        std::shared_ptr<const Node> _node;
    };

    /// Conjunction/disjunction builders that accept a single child (returned unchanged).
    [[nodiscard]] auto conjoin(std::vector<Formula> children) -> Formula;
    [[nodiscard]] auto disjoin(std::vector<Formula> children) -> Formula;

    /// Prefix of quantifiers of the given kind over the listed variables, outermost first.
    [[nodiscard]] auto exists_all(const std::vector<std::string> & vars, Formula body) -> Formula;
    [[nodiscard]] auto forall_all(const std::vector<std::string> & vars, Formula body) -> Formula;

    /// Prints in the concrete grammar accepted by parse_formula.
    [[nodiscard]] auto to_string(const Formula & f) -> std::string;

    [[nodiscard]] auto fragment_of(const Formula & f) -> Fragment;
    [[nodiscard]] auto free_variables(const Formula & f) -> std::set<std::string>;
    /// Every variable name occurring anywhere in f, bound or free.
    [[nodiscard]] auto all_variables(const Formula & f) -> std::set<std::string>;
    [[nodiscard]] auto is_sentence(const Formula & f) -> bool;
    [[nodiscard]] auto is_quantifier_free(const Formula & f) -> bool;

    struct FormulaSize
    {
        std::size_t nodes = 0;
        std::size_t atoms = 0;
        std::size_t variables = 0;
        std::size_t quantifier_depth = 0;
    };

    [[nodiscard]] auto formula_size(const Formula & f) -> FormulaSize;

    /// Throws FormulaError on unknown symbols or arity mismatches.
    auto check_signature(const Formula & f, const Signature & sig) -> void;

    /// Renames free occurrences according to `renaming`; bound variables are left alone.
    /// The caller guarantees no target name is captured by a binder in f.
    [[nodiscard]] auto rename_free(const Formula & f, const std::map<std::string, std::string> & renaming) -> Formula;

    /// Renames atom symbols according to `renaming`; others are kept.
    [[nodiscard]] auto rename_symbols(const Formula & f, const std::map<std::string, std::string> & renaming) -> Formula;

    /// Generates names `base` followed by a counter, skipping anything in `taken`.
    class FreshNames
    {
    public:
        explicit FreshNames(std::set<std::string> taken = {}) : _taken(std::move(taken)) {}

        [[nodiscard]] auto next(const std::string & base) -> std::string;
        auto reserve(const std::string & name) -> void { _taken.insert(name); }
        [[nodiscard]] auto taken(const std::string & name) const -> bool { return _taken.contains(name); }

    private:
        std::set<std::string> _taken;
        std::map<std::string, int> _counters;
    };

    /// Renames every bound variable so that binders are pairwise distinct and distinct from the
    /// free variables of f and from anything already taken in `names`. A binder keeps its name when
    /// that name is still unused.
    [[nodiscard]] auto rename_apart(const Formula & f, FreshNames & names) -> Formula;
}

#endif
