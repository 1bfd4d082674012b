#ifndef MUCHECK_NORMALIZE_HH
#define MUCHECK_NORMALIZE_HH

#include <mucheck/formula.hh>
#include <mucheck/template_pair.hh>

#include <map>
#include <stdexcept>
#include <string>

namespace mucheck
{
    /// Raised for fragments whose promise problems are trivially decidable: no quantifier, no
    /// connective, or (after removing =, !=) contained in {exists, or} or {forall, and}.
    class TrivialFragment : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    [[nodiscard]] auto is_trivial_fragment(Fragment f) -> bool;

    enum class Answer
    {
        Yes,
        No
    };

    [[nodiscard]] auto to_string(Answer a) -> std::string;
    [[nodiscard]] auto negate(Answer a) -> Answer;

    /// An instance over one of the four canonical fragments equivalent to the original template and
    /// fragment: = and != become fresh binary symbols, negation is removed by closing the template
    /// under complementation and pushing negations to the atoms, and fragments outside the canonical
    /// four are replaced by their duals over the dual template.
    struct Normalization
    {
        TemplatePair original;
        Fragment original_fragment;
        TemplatePair pair;
        Fragment fragment;

        bool added_equality = false;
        bool added_disequality = false;
        bool complemented = false;
        /// When set, Yes-instances of the original become No-instances of the normalized problem.
        bool dualized = false;

        std::string equality_symbol{};
        std::string disequality_symbol{};
        /// Complement symbol of every symbol of the closed (pre-dualization) signature.
        std::map<std::string, std::string> complements{};

        /// Maps an original-fragment sentence over the original signature to a canonical-fragment
        /// sentence over the normalized signature. Throws FormulaError if f is not in the original
        /// fragment.
        [[nodiscard]] auto rewrite(const Formula & f) const -> Formula;

        /// Answer to the original instance given the answer to the rewritten one.
        [[nodiscard]] auto translate(Answer normalized) const -> Answer;

        [[nodiscard]] auto changed() const -> bool
        {
            return added_equality || added_disequality || complemented || dualized;
        }
    };

    /// Throws TrivialFragment for trivial fragments.
    [[nodiscard]] auto normalize_fragment(const TemplatePair & t, Fragment l) -> Normalization;
}

#endif
