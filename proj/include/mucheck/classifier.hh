#ifndef MUCHECK_CLASSIFIER_HH
#define MUCHECK_CLASSIFIER_HH

#include <mucheck/normalize.hh>
#include <mucheck/template_pair.hh>

#include <optional>
#include <string>
#include <vector>

namespace mucheck
{
    enum class TemplateStatus
    {
        Valid,
        Invalid,
        /// Only possible for {exists, forall, and}: a homomorphism exists but no smuhom does, and
        /// neither condition decides validity for that fragment.
        Undetermined
    };

    struct TemplateCertificate
    {
        TemplateStatus status;
        /// The homomorphism or smuhom found, when validity was established by one.
        std::optional<MultiValuedFunction> witness;
        std::string explanation;
    };

    /// Template test for a canonical fragment: a homomorphism A -> B for {exists, and} and
    /// {exists, and, or}, a surjective multi-homomorphism for {exists, forall, and, or}. For
    /// {exists, forall, and} an smuhom certifies validity and the absence of a homomorphism refutes
    /// it; the remaining case is Undetermined. Throws FormulaError for non-canonical fragments.
    [[nodiscard]] auto is_template(const TemplatePair & t, Fragment l) -> TemplateCertificate;

    enum class Verdict
    {
        NotATemplate,
        InL,
        NPComplete,
        coNPComplete,
        PSPACEComplete,
        InNPcapCoNP_HardnessOpen,
        NPHardAndCoNPHard_MembershipOpen,
        OutOfScope
    };

    [[nodiscard]] auto to_string(Verdict v) -> std::string;
    /// Identifier-style name, e.g. `InNPcapCoNP_HardnessOpen`.
    [[nodiscard]] auto verdict_name(Verdict v) -> std::string;

    /// NP <-> coNP; every other label is self-dual.
    [[nodiscard]] auto dual_verdict(Verdict v) -> Verdict;

    struct ComplexityVerdict
    {
        Verdict label = Verdict::NotATemplate;
        Fragment fragment;
        Fragment normalized_fragment;
        bool trivial_fragment = false;
        bool dualized = false;
        /// Name of the classification rule that fixed the label.
        std::string rule;
        /// Human-readable evidence lines: witnesses, absence claims, normalization steps.
        std::vector<std::string> evidence;
        /// Machine-checkable witness (homomorphism or smuhom of the normalized template), if any.
        std::optional<MultiValuedFunction> witness;
    };

    /// Normalizes the fragment and applies, in order: the trivial-fragment rule; for
    /// {exists, and, or} the constant-homomorphism dichotomy; for {exists, forall, and, or} the
    /// Boolean-side rules, then the equality/complementation rule, then the smuhom-kind table. Dual
    /// fragments get the dual label. {exists, and} and {exists, forall, and} are out of scope.
    [[nodiscard]] auto classify(const TemplatePair & t, Fragment l) -> ComplexityVerdict;

    /// Structured text report: `label:`, `fragment:`, `rule:`, `evidence:` lines.
    [[nodiscard]] auto format_report(const ComplexityVerdict & v) -> std::string;

    /// Whether every multi-homomorphism (for {exists, and, or}) or every smuhom (for
    /// {exists, forall, and, or}) of src is one of dst. Universe sizes must agree pairwise.
    [[nodiscard]] auto p_definable(const TemplatePair & src, const TemplatePair & dst, Fragment l) -> bool;

    /// coarse = (C, D) relaxes fine = (A, B) when SMuHom(C, A) and SMuHom(B, D) are both nonempty.
    [[nodiscard]] auto is_relaxation(const TemplatePair & coarse, const TemplatePair & fine) -> bool;
}

#endif
