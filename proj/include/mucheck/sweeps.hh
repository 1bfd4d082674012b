#ifndef MUCHECK_SWEEPS_HH
#define MUCHECK_SWEEPS_HH

#include <mucheck/formula.hh>
#include <mucheck/reductions.hh>
#include <mucheck/structure.hh>
#include <mucheck/transform.hh>

#include <string>
#include <vector>

namespace mucheck::sweeps
{
    /// Every strict structure over [k] with one binary relation `symbol`, in order of the
    /// relation's bitmask (tuple (i, j) is bit (i-1)k + (j-1)).
    [[nodiscard]] auto digraphs(int k, const std::string & symbol = "R") -> std::vector<Structure>;

    /// One representative per isomorphism class: the member of digraphs(k) whose bitmask is least
    /// among all relabelings.
    [[nodiscard]] auto digraph_classes(int k, const std::string & symbol = "R") -> std::vector<Structure>;

    /// digraphs(2) followed by digraphs(3), resp. the class representatives.
    [[nodiscard]] auto small_digraphs(const std::string & symbol = "R") -> std::vector<Structure>;
    [[nodiscard]] auto small_digraph_classes(const std::string & symbol = "R") -> std::vector<Structure>;

    /// All atoms symbol(u, v) with u, v in vars, followed by every conjunction and every disjunction
    /// of two distinct such atoms.
    [[nodiscard]] auto matrices(const std::vector<std::string> & vars, const std::string & symbol = "R")
        -> std::vector<Formula>;

    /// Quantifier prefix applied to a family matrix over the block variables y1, z1, ..., ym, zm.
    enum class Prefix
    {
        /// forall y1 exists z1 ... forall ym exists zm
        Alternating,
        /// exists y1 exists z1 ... exists ym exists zm
        Existential
    };

    /// Formulas prefix(matrix) for m = 1, 2 with matrices over the block variables plus `free`.
    [[nodiscard]] auto block_formulas(const std::vector<std::string> & free, Prefix prefix,
        const std::string & symbol = "R") -> std::vector<Formula>;

    /// The special-form sentences with m = 1, 2 over the matrix family.
    [[nodiscard]] auto special_form_sentences(const std::string & symbol = "R") -> std::vector<SpecialForm>;

    struct SuiteResult
    {
        std::string name;
        std::string description;
        Verification verification;
        /// Extra summary lines (instance counts, category tallies).
        std::vector<std::string> notes;
        double seconds = 0;
    };

    [[nodiscard]] auto format_result(const SuiteResult & r) -> std::string;

    /// Names accepted by run_suite, in a stable order.
    [[nodiscard]] auto suite_names() -> std::vector<std::string>;

    /// Runs the named sweep; throws std::invalid_argument for an unknown name.
    [[nodiscard]] auto run_suite(const std::string & name) -> SuiteResult;
}

#endif
