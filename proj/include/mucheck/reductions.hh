#ifndef MUCHECK_REDUCTIONS_HH
#define MUCHECK_REDUCTIONS_HH

#include <mucheck/formula.hh>
#include <mucheck/homomorphism.hh>
#include <mucheck/template_pair.hh>
#include <mucheck/transform.hh>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mucheck
{
    /// A generated formula together with its positional parameters. Every free variable of the
    /// formula is a parameter; a parameter may fail to occur (e.g. an element of A that is in no
    /// tuple), in which case the formula does not depend on it.
    struct GeneratedFormula
    {
        Formula formula;
        std::vector<std::string> free_vars;
        std::string semantics;
        std::string provenance;
        FormulaSize size;
    };

    /// Header comment lines, a `# free:` line and the formula in the formula grammar.
    [[nodiscard]] auto format_generated(const GeneratedFormula & g) -> std::string;

    /// Conjunction of R(x_{r1}, ..., x_{rk}) over all tuples r of A. Satisfied by (e1, ..., ek) in E
    /// iff i -> e_i is a homomorphism A -> E. Parameters x1, ..., xk.
    [[nodiscard]] auto endo_formula(const Structure & a) -> GeneratedFormula;

    /// Parameters x_i_j (i in [k], j in [n], i-major). Satisfied iff i -> {e_i_1, ..., e_i_n} is a
    /// multi-homomorphism A -> E. Has sum over R of |R| * n^ar(R) atoms.
    [[nodiscard]] auto muhom_formula(const Structure & a, int n) -> GeneratedFormula;

    /// forall z1 ... zm, the disjunction over h: [m] -> [k] of the multi-homomorphism formula with
    /// z_l added to the values of h(l). For |E| <= m, satisfied iff i -> {e_i_1, ..., e_i_n} is
    /// contained in a surjective multi-homomorphism A -> E. k^m disjuncts; guarded by node_limit().
    [[nodiscard]] auto smuhom_formula(const Structure & a, int n, int m) -> GeneratedFormula;

    /// The closure formula for a tuple t over A: the multi-homomorphism formula (smuhom formula when
    /// l contains forall) with x_{t_i}_i renamed to x_i and all other variables existentially
    /// quantified. Defines in E the union of f(t) over all (surjective) multi-homomorphisms
    /// A -> E, provided |E| <= m in the surjective case. n = 0 means n = |t|; m = 0 means |A|.
    [[nodiscard]] auto closure_formula(const Structure & a, const Tuple & t, Fragment l, int n = 0, int m = 0)
        -> GeneratedFormula;

    /// Disjunction of closure formulas over the tuples of r, parameters x1, ..., x_ar. In A it defines
    /// a superset of r; in B it defines the union of f(r) over the relevant maps A -> B.
    [[nodiscard]] auto promise_definition(const Structure & a, const Relation & r, Fragment l, int m = 0)
        -> GeneratedFormula;

    /// Replaces every atom Q(v1, ...) whose symbol has a definition by that definition, with the
    /// parameters substituted and bound variables renamed apart. Other atoms are kept.
    [[nodiscard]] auto p_def_rewrite(const Formula & sentence, const std::map<std::string, GeneratedFormula> & defs)
        -> Formula;

    /// Tuples of [d]^n containing every element of [d].
    [[nodiscard]] auto rainbow_relation(int d, int n) -> Relation;
    /// Non-constant tuples of [d]^n.
    [[nodiscard]] auto nae_relation(int d, int n) -> Relation;
    /// Strict structures ([d]; Rb) and ([d]; NAE); throw StructureError when strictness fails.
    [[nodiscard]] auto rainbow_structure(int d, int n, const std::string & symbol = "R") -> Structure;
    [[nodiscard]] auto nae_structure(int d, int n, const std::string & symbol = "R") -> Structure;

    /// (([a_size]; Rb^{2 a_size}), ([b_size]; NAE^{2 a_size})), the hardness target for
    /// {exists, and, or} templates without constant homomorphisms.
    [[nodiscard]] auto rbnae_template(int a_size, int b_size, const std::string & symbol = "R") -> TemplatePair;

    /// Definition of the rainbow/not-all-equal symbol over the signature of t, for p_def_rewrite.
    [[nodiscard]] auto rbnae_definitions(const TemplatePair & t, const std::string & symbol = "R")
        -> std::map<std::string, GeneratedFormula>;

    /// Gadget turning a special-form sentence phi over the binary symbol `symbol` (read as equality)
    /// into psi such that ([2]; =) |= phi implies ([k]; =) |= psi and ([2]; =) |= psi implies
    /// ([2]; =) |= phi:
    ///   psi = forall x1 x2 exists x3 ... xk (Q(x1, x2) or the conjunction over f: [k] -> [2] of rho_f),
    ///   rho_f = forall yp_1 exists z_1 ... forall yp_m exists z_m exists y_1 ... y_m
    ///           (sigma_1 and ... and sigma_m and phi'(y, z)),
    ///   sigma_i = or over a in [k] of (Q(yp_i, x_a) and Q(y_i, x_{f(a)})).
    [[nodiscard]] auto equality_pspace_gadget(const SpecialForm & phi, int k, const std::string & symbol = "Q")
        -> GeneratedFormula;

    /// Reduction of a complementation-closed template to an equality template.
    struct QuotientReduction
    {
        IndistinguishabilityPartition partition_a, partition_b;
        /// (A; ~_A), (B; ~_B) with the symbol `SIM` (a fresh name if taken).
        TemplatePair indistinguishability;
        /// (([m]; =), ([n]; =)) over the same symbol, m and n the class counts.
        TemplatePair equality;
        /// i -> i-th class of ~_A, from [m] to A.
        MultiValuedFunction classes_onto_a;
        /// b -> {class of b}, from B to [n].
        MultiValuedFunction b_onto_classes;
        std::string symbol;
        /// Definition of the symbol over the signature of the original template.
        std::map<std::string, GeneratedFormula> definitions;

        /// Rewrites a sentence over the equality template into one over the original template.
        [[nodiscard]] auto rewrite(const Formula & sentence) const -> Formula;
    };

    /// Throws StructureError if t is not closed under complementation or if the class counts
    /// violate m >= n >= 2.
    [[nodiscard]] auto quotient_reduction(const TemplatePair & t) -> QuotientReduction;

    /// Outcome of a verification sweep; failures are human-readable counterexamples.
    struct Verification
    {
        std::size_t checked = 0;
        std::vector<std::string> failures;

        [[nodiscard]] auto ok() const -> bool { return failures.empty(); }
        auto fail(std::string what) -> void;
        auto merge(const Verification & other) -> void;
    };

    [[nodiscard]] auto format_verification(const std::string & name, const Verification & v) -> std::string;

    /// Each compares the generated formula, over every assignment in E, with the property it
    /// should express, computed by enumeration.
    [[nodiscard]] auto verify_endo_formula(const Structure & a, const Structure & e) -> Verification;
    [[nodiscard]] auto verify_muhom_formula(const Structure & a, const Structure & e, int n) -> Verification;
    [[nodiscard]] auto verify_smuhom_formula(const Structure & a, const Structure & e, int n, int m) -> Verification;
    [[nodiscard]] auto verify_closure_formula(const Structure & a, const Structure & e, const Tuple & t, Fragment l)
        -> Verification;

    /// Both directions of the gadget contract for one special-form sentence.
    [[nodiscard]] auto verify_equality_gadget(const SpecialForm & phi, int k, const std::string & symbol = "Q")
        -> Verification;

    /// Smuhoms of t preserve ~, the two explicit maps are smuhoms and m >= n >= 2.
    [[nodiscard]] auto verify_quotient(const TemplatePair & t) -> Verification;

    /// A |= f iff the complement of A does not satisfy the dual of f, on both sides of t.
    [[nodiscard]] auto verify_dual_swap(const TemplatePair & t, const Formula & sentence) -> Verification;

    /// Promise preservation of a rewrite: dst.a |= phi implies src.a |= rewrite(phi), and
    /// src.b |= rewrite(phi) implies dst.b |= phi.
    [[nodiscard]] auto verify_rewrite(const TemplatePair & src, const TemplatePair & dst, const Formula & sentence,
        const std::function<Formula(const Formula &)> & rewrite) -> Verification;
}

#endif
