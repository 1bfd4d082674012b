#include <mucheck/evaluator.hh>
#include <mucheck/pmc.hh>

using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        auto require_sentence(const SpecialForm & sf) -> void
        {
            if (! sf.free_variables().empty())
                throw FormulaError("promise model checking needs a sentence; free variable '" + sf.free_variables().front()
                    + "'");
        }

        auto block_order(const SpecialForm & sf) -> vector<string>
        {
            auto order = sf.universals();
            for (auto & z : sf.existentials())
                order.push_back(z);
            return order;
        }
    }

    auto pmc_reference_decide(const TemplatePair & t, const Formula & f) -> ReferenceDecision
    {
        if (! is_sentence(f))
            throw FormulaError("promise model checking needs a sentence");
        bool in_a = eval(t.a(), f);
        bool in_b = in_a || eval(t.b(), f);
        return {in_a ? Answer::Yes : Answer::No, in_a || ! in_b};
    }

    auto np_algorithm(const Structure & a, Element a_star, const SpecialForm & sf) -> Answer
    {
        require_sentence(sf);
        if (a_star < 1 || a_star > a.universe_size())
            throw StructureError("witness point outside the universe");
        CompiledFormula matrix(a.signature(), sf.matrix, block_order(sf));
        auto m = static_cast<int>(sf.size());
        vector<Element> values(2 * sf.size(), a_star);
        bool found = false;
        for_each_tuple(a.universe_size(), m, [&](const Tuple & guess) {
            if (found)
                return;
            std::copy(guess.begin(), guess.end(), values.begin() + m);
            found = matrix.evaluate(a, values);
        });
        return found ? Answer::Yes : Answer::No;
    }

    auto conp_algorithm(const Structure & b, Element b_star, const SpecialForm & sf) -> Answer
    {
        require_sentence(sf);
        auto dual = to_special_form(dualize_formula(sf.to_formula()));
        return negate(np_algorithm(complement_structure(b), b_star, dual));
    }

    auto ae_image(const Structure & a, Element a_star, int b_size, Element b_star) -> Structure
    {
        if (a_star < 1 || a_star > a.universe_size() || b_star < 1 || b_star > b_size)
            throw StructureError("witness points outside the universes");
        vector<ElementSet> values(static_cast<std::size_t>(a.universe_size()), singleton(b_star));
        values[static_cast<std::size_t>(a_star - 1)] = full_set(b_size);
        return image_structure(a, MultiValuedFunction(b_size, std::move(values)));
    }

    auto ae_fast_path(const Structure & a, Element a_star, int b_size, Element b_star, const SpecialForm & sf) -> Answer
    {
        require_sentence(sf);
        auto c = ae_image(a, a_star, b_size, b_star);
        Element c_star = b_star == 1 ? 2 : 1;
        CompiledFormula matrix(c.signature(), sf.matrix, block_order(sf));
        vector<Element> values(2 * sf.size(), b_star);
        std::fill(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(sf.size()), c_star);
        return matrix.evaluate(c, values) ? Answer::Yes : Answer::No;
    }

    auto np_algorithm(const TemplatePair & t, const SpecialForm & sf) -> Answer
    {
        auto & p = t.profile();
        if (! p.forall)
            throw StructureError("template has no smuhom mapping a point onto the whole weak side");
        return np_algorithm(t.a(), p.forall->a_star, sf);
    }

    auto conp_algorithm(const TemplatePair & t, const SpecialForm & sf) -> Answer
    {
        auto & p = t.profile();
        if (! p.exists)
            throw StructureError("template has no smuhom with a point common to all values");
        return conp_algorithm(t.b(), p.exists->b_star, sf);
    }

    auto ae_fast_path(const TemplatePair & t, const SpecialForm & sf) -> Answer
    {
        auto & p = t.profile();
        if (! p.ae)
            throw StructureError("template has no smuhom of both kinds at once");
        return ae_fast_path(t.a(), p.ae->a_star, t.b().universe_size(), p.ae->b_star, sf);
    }
}
