#ifndef MUCHECK_PMC_HH
#define MUCHECK_PMC_HH

#include <mucheck/normalize.hh>
#include <mucheck/template_pair.hh>
#include <mucheck/transform.hh>

namespace mucheck
{
    struct ReferenceDecision
    {
        Answer answer;
        /// A |= f (a Yes-instance) or B does not satisfy f (a No-instance).
        bool in_promise;
    };

    /// Answers Yes iff A |= f; reports whether f satisfies the promise.
    [[nodiscard]] auto pmc_reference_decide(const TemplatePair & t, const Formula & f) -> ReferenceDecision;

    /// Yes iff some a in A^m satisfies A |= matrix(a*, ..., a*, a), i.e. the universal variables are
    /// all fixed to a_star and the existential ones are guessed. Correct on promise instances of any
    /// template with a smuhom f such that f(a_star) is the whole weak side. sf must be a sentence.
    [[nodiscard]] auto np_algorithm(const Structure & a, Element a_star, const SpecialForm & sf) -> Answer;

    /// The dual of np_algorithm: runs it on the complement of B with b_star fixed for the (dual)
    /// universal variables, on the special form of the dualized sentence, and negates the answer.
    /// Correct on promise instances when some smuhom has b_star in every value.
    [[nodiscard]] auto conp_algorithm(const Structure & b, Element b_star, const SpecialForm & sf) -> Answer;

    /// The image of A under f' with f'(a_star) = [b_size] and f'(a) = {b_star} elsewhere.
    [[nodiscard]] auto ae_image(const Structure & a, Element a_star, int b_size, Element b_star) -> Structure;

    /// Evaluates the matrix in ae_image(...) with every universal variable at the least element
    /// different from b_star and every existential variable at b_star.
    [[nodiscard]] auto ae_fast_path(const Structure & a, Element a_star, int b_size, Element b_star, const SpecialForm & sf)
        -> Answer;

    /// Template-level entry points taking the least witnesses from the cached profile; they throw
    /// StructureError when the template lacks the required kind of smuhom.
    [[nodiscard]] auto np_algorithm(const TemplatePair & t, const SpecialForm & sf) -> Answer;
    [[nodiscard]] auto conp_algorithm(const TemplatePair & t, const SpecialForm & sf) -> Answer;
    [[nodiscard]] auto ae_fast_path(const TemplatePair & t, const SpecialForm & sf) -> Answer;
}

#endif
