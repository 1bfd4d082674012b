#ifndef MUCHECK_TRANSFORM_HH
#define MUCHECK_TRANSFORM_HH

#include <mucheck/formula.hh>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mucheck
{
    /// Equivalent prenex formula with a quantifier-free matrix. Bound variables are renamed apart
    /// first; quantifiers are pulled out of sibling subformulas left to right. Rejects negation.
    [[nodiscard]] auto to_prenex(const Formula & f) -> Formula;

    /// forall y1. exists z1. ... forall ym. exists zm. matrix
    struct SpecialForm
    {
        struct Block
        {
            std::string universal;
            std::string existential;
        };

        std::vector<Block> blocks;
        Formula matrix;

        [[nodiscard]] auto size() const -> std::size_t { return blocks.size(); }
        [[nodiscard]] auto universals() const -> std::vector<std::string>;
        [[nodiscard]] auto existentials() const -> std::vector<std::string>;
        /// Free variables of the matrix other than the block variables.
        [[nodiscard]] auto free_variables() const -> std::vector<std::string>;
        [[nodiscard]] auto to_formula() const -> Formula;
    };

    /// Special form with the standard block names y1, z1, ..., ym, zm around a given matrix.
    /// Throws FormulaError if the matrix has quantifiers.
    [[nodiscard]] auto make_special_form(int m, Formula matrix) -> SpecialForm;

    /// Converts a negation-free formula by prenexing and padding with dummy quantifiers until the
    /// prefix strictly alternates forall/exists, starting with forall and ending with exists. Block
    /// variables are renamed to y_i, z_i (other fresh names if those clash with free variables).
    [[nodiscard]] auto to_special_form(const Formula & f) -> SpecialForm;

    enum class DualEquality
    {
        Swap,
        Keep
    };

    /// Swaps exists/forall and and/or. With DualEquality::Swap (the default) = and != are swapped too,
    /// which makes `E |= ~f  iff  complement(E) |= dualize(f)` hold for every formula; with Keep
    /// only the connectives and quantifiers change. Rejects negation.
    [[nodiscard]] auto dualize_formula(const Formula & f, DualEquality equality = DualEquality::Swap) -> Formula;

    /// Negation normal form without negation: ~R(v) becomes complements.at(R)(v), ~(x = y) becomes
    /// x != y and vice versa, and the connectives and quantifiers are De Morganized. Throws
    /// FormulaError if a negated symbol has no complement name.
    [[nodiscard]] auto push_negations(const Formula & f, const std::map<std::string, std::string> & complements) -> Formula;
}

#endif
