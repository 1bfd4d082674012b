#include <mucheck/normalize.hh>
#include <mucheck/transform.hh>

using std::map;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        constexpr Fragment exists_or{Connective::Exists, Connective::Or};
        constexpr Fragment forall_and{Connective::Forall, Connective::And};
        constexpr Fragment positive{Connective::Exists, Connective::Forall, Connective::And, Connective::Or};

        auto positive_part(Fragment f) -> Fragment { return Fragment::from_bits(f.bits() & positive.bits()); }

        auto replace_equalities(const Formula & f, const string & eq, const string & neq) -> Formula
        {
            switch (f.kind()) {
            case NodeKind::Atom: return f;
            case NodeKind::Eq:
                if (eq.empty())
                    throw FormulaError("equality is not available in the normalized signature");
                return Formula::atom(eq, f.variables());
            case NodeKind::Neq:
                if (neq.empty())
                    throw FormulaError("disequality is not available in the normalized signature");
                return Formula::atom(neq, f.variables());
            case NodeKind::Not: return Formula::negation(replace_equalities(f.child(), eq, neq));
            case NodeKind::And:
            case NodeKind::Or: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(replace_equalities(c, eq, neq));
                return f.kind() == NodeKind::And ? Formula::conjunction(std::move(cs)) : Formula::disjunction(std::move(cs));
            }
            case NodeKind::Exists: return Formula::exists(f.bound_variable(), replace_equalities(f.child(), eq, neq));
            case NodeKind::Forall: return Formula::forall(f.bound_variable(), replace_equalities(f.child(), eq, neq));
            }
            throw FormulaError("unreachable formula kind");
        }
    }

    auto is_trivial_fragment(Fragment f) -> bool
    {
        if (! f.has_quantifier() || ! f.has_connective())
            return true;
        if (f.contains(Connective::Not))
            return false;
        auto p = positive_part(f);
        return p.subset_of(exists_or) || p.subset_of(forall_and);
    }

    auto to_string(Answer a) -> string { return a == Answer::Yes ? "Yes" : "No"; }

    auto negate(Answer a) -> Answer { return a == Answer::Yes ? Answer::No : Answer::Yes; }

    auto normalize_fragment(const TemplatePair & t, Fragment l) -> Normalization
    {
        if (is_trivial_fragment(l))
            throw TrivialFragment("fragment " + to_string(l) + " has no quantifier, no connective, or only exists/or "
                                  "(dually forall/and); its promise problems are trivially decidable");

        Normalization n{.original = t, .original_fragment = l, .pair = t, .fragment = l};
        auto a = t.a(), b = t.b();
        bool negation = l.contains(Connective::Not);

        // Negation pushed onto an equality yields a disequality and vice versa, so with negation
        // both predicates are needed as soon as either is present.
        bool want_eq = l.contains(Connective::Eq) || (negation && l.contains(Connective::Neq));
        bool want_neq = l.contains(Connective::Neq) || (negation && l.contains(Connective::Eq));
        if (want_eq) {
            n.equality_symbol = a.signature().fresh_name("EQ");
            a = a.with_relation({n.equality_symbol, 2}, equality_relation(a.universe_size()));
            b = b.with_relation({n.equality_symbol, 2}, equality_relation(b.universe_size()));
            n.added_equality = true;
        }
        if (want_neq) {
            n.disequality_symbol = a.signature().fresh_name("NEQ");
            a = a.with_relation({n.disequality_symbol, 2}, disequality_relation(a.universe_size()));
            b = b.with_relation({n.disequality_symbol, 2}, disequality_relation(b.universe_size()));
            n.added_disequality = true;
        }
        n.pair = TemplatePair(std::move(a), std::move(b));

        auto f = positive_part(l);
        if (negation) {
            n.pair = complementation_closure(n.pair);
            n.complements = complement_symbols(n.pair);
            n.complemented = true;
            f = positive;
        }

        if (! f.contains(Connective::Exists) || f == Fragment{Connective::Exists, Connective::Forall, Connective::Or}) {
            n.pair = dual_template(n.pair);
            f = f.dual();
            n.dualized = true;
        }
        n.fragment = f;
        return n;
    }

    auto Normalization::rewrite(const Formula & f) const -> Formula
    {
        if (! fragment_of(f).subset_of(original_fragment))
            throw FormulaError("formula uses " + to_string(fragment_of(f)) + ", outside the fragment "
                + to_string(original_fragment));
        check_signature(f, original.signature());

        auto g = replace_equalities(f, equality_symbol, disequality_symbol);
        if (complemented)
            g = push_negations(g, complements);
        if (dualized)
            g = dualize_formula(g);
        return g;
    }

    auto Normalization::translate(Answer normalized) const -> Answer
    {
        return dualized ? negate(normalized) : normalized;
    }
}
