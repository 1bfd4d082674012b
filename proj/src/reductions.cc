#include <mucheck/evaluator.hh>
#include <mucheck/guardrail.hh>
#include <mucheck/io.hh>
#include <mucheck/reductions.hh>

#include <algorithm>
#include <cmath>
#include <sstream>

using std::map;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        constexpr std::size_t max_reported_failures = 25;

        auto var(int i) -> string { return "x" + std::to_string(i); }
        auto var(int i, int j) -> string { return "x_" + std::to_string(i) + "_" + std::to_string(j); }
        auto indexed(const string & base, int i) -> string { return base + "_" + std::to_string(i); }

        auto generated(Formula f, vector<string> free_vars, string semantics, string provenance) -> GeneratedFormula
        {
            auto size = formula_size(f);
            return {std::move(f), std::move(free_vars), std::move(semantics), std::move(provenance), size};
        }

        auto multiplicity_params(int k, int n) -> vector<string>
        {
            vector<string> out;
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n; ++j)
                    out.push_back(var(i, j));
            return out;
        }

        /// Conjunction over all R, r in R^A and all picks of one variable from pools[r_p - 1] per position.
        auto pooled_atoms(const Structure & a, const vector<vector<string>> & pools) -> vector<Formula>
        {
            vector<Formula> atoms;
            for (std::size_t s = 0; s < a.signature().size(); ++s) {
                auto & sym = a.signature()[s];
                for (auto & r : a.relation(s).tuples()) {
                    vector<std::size_t> pick(r.size(), 0);
                    while (true) {
                        vector<string> args;
                        for (std::size_t p = 0; p < r.size(); ++p)
                            args.push_back(pools[static_cast<std::size_t>(r[p] - 1)][pick[p]]);
                        atoms.push_back(Formula::atom(sym.name, std::move(args)));
                        std::size_t p = 0;
                        for (; p < r.size(); ++p) {
                            if (++pick[p] < pools[static_cast<std::size_t>(r[p] - 1)].size())
                                break;
                            pick[p] = 0;
                        }
                        if (p == r.size())
                            break;
                    }
                }
            }
            return atoms;
        }

        auto pooled_atom_count(const Structure & a, const vector<std::size_t> & pool_sizes) -> double
        {
            double n = 0;
            for (auto & rel : a.relations())
                for (auto & r : rel.tuples()) {
                    double c = 1;
                    for (auto e : r)
                        c *= static_cast<double>(pool_sizes[static_cast<std::size_t>(e - 1)]);
                    n += c;
                }
            return n;
        }

        auto require_universe(const Structure & a, int n, const string & what) -> void
        {
            if (n < 1)
                throw FormulaError(what + " needs a positive multiplicity");
            if (a.relations().empty())
                throw StructureError(what + " needs at least one relation");
        }

        auto assignment_values(std::size_t idx, int k, std::size_t count) -> vector<Element>
        {
            vector<Element> out(count);
            for (auto & v : out) {
                v = static_cast<Element>(idx % static_cast<std::size_t>(k)) + 1;
                idx /= static_cast<std::size_t>(k);
            }
            return out;
        }

        auto params_mvf(const vector<Element> & values, int ka, int n, int ke) -> MultiValuedFunction
        {
            vector<ElementSet> sets(static_cast<std::size_t>(ka), 0);
            for (int i = 0; i < ka; ++i)
                for (int j = 0; j < n; ++j)
                    sets[static_cast<std::size_t>(i)] |= singleton(values[static_cast<std::size_t>(i * n + j)]);
            return MultiValuedFunction(ke, std::move(sets));
        }

        auto describe_mismatch(const string & what, const Structure & a, const Structure & e, const vector<Element> & v,
            bool formula, bool oracle) -> string
        {
            std::ostringstream out;
            out << what << ": A = {" << format_structure(a) << "}, E = {" << format_structure(e) << "}, parameters "
                << to_string(Tuple(v.begin(), v.end())) << ": formula " << (formula ? "true" : "false")
                << ", enumeration " << (oracle ? "true" : "false");
            auto s = out.str();
            std::replace(s.begin(), s.end(), '\n', ';');
            return s;
        }

        auto fragment_name(Fragment l) -> string { return to_string(l); }
    }

    auto format_generated(const GeneratedFormula & g) -> string
    {
        std::ostringstream out;
        out << "# " << g.provenance << "\n";
        out << "# semantics: " << g.semantics << "\n";
        out << "# size: " << g.size.nodes << " nodes, " << g.size.atoms << " atoms, " << g.size.variables
            << " variables, quantifier depth " << g.size.quantifier_depth << "\n";
        out << "# free:";
        for (auto & v : g.free_vars)
            out << " " << v;
        out << "\n" << to_string(g.formula) << "\n";
        return out.str();
    }

    auto endo_formula(const Structure & a) -> GeneratedFormula
    {
        require_universe(a, 1, "homomorphism formula");
        vector<vector<string>> pools;
        vector<string> params;
        for (int i = 1; i <= a.universe_size(); ++i) {
            pools.push_back({var(i)});
            params.push_back(var(i));
        }
        check_node_budget("homomorphism formula",
            3 * pooled_atom_count(a, vector<std::size_t>(static_cast<std::size_t>(a.universe_size()), 1)));
        return generated(conjoin(pooled_atoms(a, pools)), std::move(params),
            "E |= phi(e1, ..., ek) iff i -> e_i is a homomorphism from A to E",
            "homomorphism formula of a structure with universe [" + std::to_string(a.universe_size()) + "]");
    }

    auto muhom_formula(const Structure & a, int n) -> GeneratedFormula
    {
        require_universe(a, n, "multi-homomorphism formula");
        auto k = static_cast<std::size_t>(a.universe_size());
        check_node_budget("multi-homomorphism formula",
            3 * pooled_atom_count(a, vector<std::size_t>(k, static_cast<std::size_t>(n))));
        vector<vector<string>> pools(k);
        for (std::size_t i = 0; i < k; ++i)
            for (int j = 1; j <= n; ++j)
                pools[i].push_back(var(static_cast<int>(i) + 1, j));
        return generated(conjoin(pooled_atoms(a, pools)), multiplicity_params(a.universe_size(), n),
            "E |= phi(e) iff i -> {x_i_1, ..., x_i_n} is a multi-homomorphism from A to E",
            "multi-homomorphism formula, multiplicity " + std::to_string(n) + ", universe ["
                + std::to_string(a.universe_size()) + "]");
    }

    auto smuhom_formula(const Structure & a, int n, int m) -> GeneratedFormula
    {
        require_universe(a, n, "surjective multi-homomorphism formula");
        if (m < 1)
            throw FormulaError("surjective multi-homomorphism formula needs m >= 1");
        auto k = static_cast<std::size_t>(a.universe_size());

        // Size check up front: k^m disjuncts, each no larger than the one with every z in one pool.
        double disjuncts = std::pow(double(k), m);
        vector<std::size_t> worst(k, static_cast<std::size_t>(n + m));
        check_node_budget("surjective multi-homomorphism formula (" + std::to_string(k) + "^" + std::to_string(m)
                + " disjuncts)",
            disjuncts * 3 * pooled_atom_count(a, worst));

        vector<string> zs;
        for (int l = 1; l <= m; ++l)
            zs.push_back(indexed("z", l));

        vector<Formula> disjunction;
        vector<std::size_t> h(static_cast<std::size_t>(m), 0);
        while (true) {
            vector<vector<string>> pools(k);
            for (std::size_t i = 0; i < k; ++i)
                for (int j = 1; j <= n; ++j)
                    pools[i].push_back(var(static_cast<int>(i) + 1, j));
            for (std::size_t l = 0; l < h.size(); ++l)
                pools[h[l]].push_back(zs[l]);
            disjunction.push_back(conjoin(pooled_atoms(a, pools)));

            std::size_t l = 0;
            for (; l < h.size(); ++l) {
                if (++h[l] < k)
                    break;
                h[l] = 0;
            }
            if (l == h.size())
                break;
        }

        return generated(forall_all(zs, disjoin(std::move(disjunction))), multiplicity_params(a.universe_size(), n),
            "for |E| <= " + std::to_string(m)
                + ", E |= phi(e) iff i -> {x_i_1, ..., x_i_n} is contained in a surjective multi-homomorphism from A to E",
            "surjective multi-homomorphism formula, multiplicity " + std::to_string(n) + ", " + std::to_string(m)
                + " universal witnesses, universe [" + std::to_string(a.universe_size()) + "]");
    }

    auto closure_formula(const Structure & a, const Tuple & t, Fragment l, int n, int m) -> GeneratedFormula
    {
        if (t.empty())
            throw FormulaError("closure formula needs a nonempty tuple");
        for (auto e : t)
            if (e < 1 || e > a.universe_size())
                throw StructureError("closure tuple " + to_string(t) + " leaves the universe");
        if (n == 0)
            n = static_cast<int>(t.size());
        if (n < static_cast<int>(t.size()))
            throw FormulaError("closure formula needs multiplicity at least the tuple length");
        if (m == 0)
            m = a.universe_size();

        bool surjective = l.contains(Connective::Forall);
        auto base = surjective ? smuhom_formula(a, n, m) : muhom_formula(a, n);

        map<string, string> renaming;
        vector<string> params;
        for (std::size_t i = 0; i < t.size(); ++i) {
            renaming[var(t[i], static_cast<int>(i) + 1)] = var(static_cast<int>(i) + 1);
            params.push_back(var(static_cast<int>(i) + 1));
        }
        // Parameter names x1, x2, ... cannot collide with x_i_j or z_l.
        auto body = rename_free(base.formula, renaming);
        auto free = free_variables(body);
        vector<string> rest;
        for (auto & v : base.free_vars)
            if (! renaming.contains(v) && free.contains(v))
                rest.push_back(v);

        string kind = surjective ? "surjective multi-homomorphisms" : "multi-homomorphisms";
        return generated(exists_all(rest, std::move(body)), std::move(params),
            "defines in E the union of f(" + to_string(t) + ") over all " + kind + " f from A to E"
                + (surjective ? " (for |E| <= " + std::to_string(m) + ")" : ""),
            "closure formula of tuple " + to_string(t) + " for " + fragment_name(l) + ", built from the " + kind
                + " formula with multiplicity " + std::to_string(n));
    }

    auto promise_definition(const Structure & a, const Relation & r, Fragment l, int m) -> GeneratedFormula
    {
        if (r.empty())
            throw StructureError("promise definition of an empty relation");
        if (r.universe_size() != a.universe_size())
            throw StructureError("promise definition: relation and structure have different universes");
        double estimate = 0;
        for (auto & t : r.tuples()) {
            auto n = t.size();
            estimate += 3 * pooled_atom_count(a, vector<std::size_t>(static_cast<std::size_t>(a.universe_size()), n));
        }
        check_node_budget("promise definition (" + std::to_string(r.size()) + " closure disjuncts)", estimate);

        vector<Formula> disjuncts;
        for (auto & t : r.tuples())
            disjuncts.push_back(closure_formula(a, t, l, 0, m).formula);
        vector<string> params;
        for (int i = 1; i <= r.arity(); ++i)
            params.push_back(var(i));
        return generated(disjoin(std::move(disjuncts)), std::move(params),
            "defines in A a superset of the relation and in E the union of its images under the maps from A to E",
            "disjunction of closure formulas over " + std::to_string(r.size()) + " tuples for " + fragment_name(l));
    }

    namespace
    {
        auto rewrite_rec(const Formula & f, const map<string, GeneratedFormula> & defs, FreshNames & names) -> Formula
        {
            switch (f.kind()) {
            case NodeKind::Atom: {
                auto it = defs.find(f.symbol());
                if (it == defs.end())
                    return f;
                auto & def = it->second;
                if (def.free_vars.size() != f.variables().size())
                    throw FormulaError("definition of " + f.symbol() + " has " + std::to_string(def.free_vars.size())
                        + " parameters but the atom has " + std::to_string(f.variables().size()) + " arguments");
                auto body = rename_apart(def.formula, names);
                map<string, string> substitution;
                for (std::size_t i = 0; i < def.free_vars.size(); ++i)
                    substitution[def.free_vars[i]] = f.variables()[i];
                return rename_free(body, substitution);
            }
            case NodeKind::Eq:
            case NodeKind::Neq: return f;
            case NodeKind::Not: return Formula::negation(rewrite_rec(f.child(), defs, names));
            case NodeKind::And:
            case NodeKind::Or: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(rewrite_rec(c, defs, names));
                return f.kind() == NodeKind::And ? Formula::conjunction(std::move(cs)) : Formula::disjunction(std::move(cs));
            }
            case NodeKind::Exists: return Formula::exists(f.bound_variable(), rewrite_rec(f.child(), defs, names));
            case NodeKind::Forall: return Formula::forall(f.bound_variable(), rewrite_rec(f.child(), defs, names));
            }
            throw FormulaError("unreachable formula kind");
        }
    }

    auto p_def_rewrite(const Formula & sentence, const map<string, GeneratedFormula> & defs) -> Formula
    {
        FreshNames names(all_variables(sentence));
        for (auto & [symbol, def] : defs)
            for (auto & v : def.free_vars)
                names.reserve(v);
        return rewrite_rec(sentence, defs, names);
    }

    auto rainbow_relation(int d, int n) -> Relation
    {
        if (d < 1 || n < 1)
            throw StructureError("rainbow relation needs positive sizes");
        vector<Tuple> tuples;
        for_each_tuple(d, n, [&](const Tuple & t) {
            ElementSet seen = 0;
            for (auto e : t)
                seen |= singleton(e);
            if (seen == full_set(d))
                tuples.push_back(t);
        });
        return Relation(d, n, std::move(tuples));
    }

    auto nae_relation(int d, int n) -> Relation
    {
        if (d < 1 || n < 1)
            throw StructureError("not-all-equal relation needs positive sizes");
        vector<Tuple> tuples;
        for_each_tuple(d, n, [&](const Tuple & t) {
            if (std::any_of(t.begin(), t.end(), [&](Element e) { return e != t.front(); }))
                tuples.push_back(t);
        });
        return Relation(d, n, std::move(tuples));
    }

    auto rainbow_structure(int d, int n, const string & symbol) -> Structure
    {
        return Structure(Signature({{symbol, n}}), d, vector<Relation>{rainbow_relation(d, n)});
    }

    auto nae_structure(int d, int n, const string & symbol) -> Structure
    {
        return Structure(Signature({{symbol, n}}), d, vector<Relation>{nae_relation(d, n)});
    }

    auto rbnae_template(int a_size, int b_size, const string & symbol) -> TemplatePair
    {
        return TemplatePair(rainbow_structure(a_size, 2 * a_size, symbol), nae_structure(b_size, 2 * a_size, symbol));
    }

    auto rbnae_definitions(const TemplatePair & t, const string & symbol) -> map<string, GeneratedFormula>
    {
        auto k = t.a().universe_size();
        return {{symbol, promise_definition(t.a(), rainbow_relation(k, 2 * k), fragments::eao)}};
    }

    auto equality_pspace_gadget(const SpecialForm & phi, int k, const string & symbol) -> GeneratedFormula
    {
        if (k < 2)
            throw StructureError("equality gadget needs k >= 2");
        if (phi.size() == 0)
            throw FormulaError("equality gadget needs at least one quantifier block");
        if (! phi.free_variables().empty())
            throw FormulaError("equality gadget needs a sentence");
        check_signature(phi.matrix, Signature({{symbol, 2}}));

        auto m = static_cast<int>(phi.size());
        auto matrix_nodes = static_cast<double>(formula_size(phi.matrix).nodes);
        check_node_budget("equality gadget (2^" + std::to_string(k) + " conjuncts)",
            std::pow(2.0, k) * (matrix_nodes + m * (3.0 * k + 5)) + k + 3);

        map<string, string> renaming;
        for (int i = 1; i <= m; ++i) {
            renaming[phi.blocks[static_cast<std::size_t>(i - 1)].universal] = indexed("y", i);
            renaming[phi.blocks[static_cast<std::size_t>(i - 1)].existential] = indexed("z", i);
        }
        auto matrix = rename_free(phi.matrix, renaming);

        vector<Formula> rhos;
        vector<int> f(static_cast<std::size_t>(k), 1);
        while (true) {
            vector<Formula> conjuncts;
            for (int i = 1; i <= m; ++i) {
                vector<Formula> sigma;
                for (int a = 1; a <= k; ++a)
                    sigma.push_back(Formula::conjunction({Formula::atom(symbol, {indexed("yp", i), var(a)}),
                        Formula::atom(symbol, {indexed("y", i), var(f[static_cast<std::size_t>(a - 1)])})}));
                conjuncts.push_back(disjoin(std::move(sigma)));
            }
            conjuncts.push_back(matrix);
            auto body = Formula::conjunction(std::move(conjuncts));
            for (int i = m; i >= 1; --i)
                body = Formula::exists(indexed("y", i), std::move(body));
            for (int i = m; i >= 1; --i)
                body = Formula::forall(indexed("yp", i), Formula::exists(indexed("z", i), std::move(body)));
            rhos.push_back(std::move(body));

            std::size_t p = 0;
            for (; p < f.size(); ++p) {
                if (++f[p] <= 2)
                    break;
                f[p] = 1;
            }
            if (p == f.size())
                break;
        }

        auto psi = Formula::disjunction({Formula::atom(symbol, {var(1), var(2)}), conjoin(std::move(rhos))});
        for (int a = k; a >= 3; --a)
            psi = Formula::exists(var(a), std::move(psi));
        psi = Formula::forall(var(1), Formula::forall(var(2), std::move(psi)));

        return generated(std::move(psi), {},
            "([2]; =) |= phi implies ([" + std::to_string(k) + "]; =) |= psi, and ([2]; =) |= psi implies ([2]; =) |= phi",
            "equality gadget for k = " + std::to_string(k) + " over " + std::to_string(m) + " quantifier blocks, "
                + symbol + " read as equality");
    }

    auto QuotientReduction::rewrite(const Formula & sentence) const -> Formula
    {
        check_signature(sentence, equality.signature());
        return p_def_rewrite(sentence, definitions);
    }

    namespace
    {
        auto partition_relation(const IndistinguishabilityPartition & p) -> Relation
        {
            vector<Tuple> tuples;
            auto k = static_cast<int>(p.class_of.size());
            for (Element a = 1; a <= k; ++a)
                for (Element b = 1; b <= k; ++b)
                    if (p.class_of[static_cast<std::size_t>(a - 1)] == p.class_of[static_cast<std::size_t>(b - 1)])
                        tuples.push_back({a, b});
            return Relation(k, 2, std::move(tuples));
        }
    }

    auto quotient_reduction(const TemplatePair & t) -> QuotientReduction
    {
        if (! is_closed_under_complementation(t))
            throw StructureError("quotient reduction needs a template closed under complementation");

        auto pa = indistinguishability_partition(t.a());
        auto pb = indistinguishability_partition(t.b());
        int m = pa.class_count(), n = pb.class_count();
        if (n < 2 || m < 2)
            throw StructureError("indistinguishability has a single class; some relation would be full");
        if (m < n)
            throw StructureError("fewer indistinguishability classes on A (" + std::to_string(m) + ") than on B ("
                + std::to_string(n) + "); the template has no surjective multi-homomorphism");

        auto symbol = t.signature().fresh_name("SIM");
        Signature sig({{symbol, 2}});
        TemplatePair sim(Structure(sig, t.a().universe_size(), vector<Relation>{partition_relation(pa)}),
            Structure(sig, t.b().universe_size(), vector<Relation>{partition_relation(pb)}));
        TemplatePair eq(Structure(sig, m, vector<Relation>{equality_relation(m)}),
            Structure(sig, n, vector<Relation>{equality_relation(n)}));

        vector<ElementSet> onto_a;
        for (auto & block : pa.blocks) {
            ElementSet s = 0;
            for (auto e : block)
                s |= singleton(e);
            onto_a.push_back(s);
        }
        vector<ElementSet> onto_classes;
        for (auto c : pb.class_of)
            onto_classes.push_back(singleton(c + 1));

        auto reach = std::max(t.a().universe_size(), t.b().universe_size());
        map<string, GeneratedFormula> defs{
            {symbol, promise_definition(t.a(), sim.a().relation(0), fragments::eao_forall, reach)}};

        return {std::move(pa), std::move(pb), std::move(sim), std::move(eq),
            MultiValuedFunction(t.a().universe_size(), std::move(onto_a)),
            MultiValuedFunction(n, std::move(onto_classes)), symbol, std::move(defs)};
    }

    auto Verification::fail(string what) -> void
    {
        if (failures.size() < max_reported_failures)
            failures.push_back(std::move(what));
        else if (failures.size() == max_reported_failures)
            failures.push_back("... further failures suppressed");
    }

    auto Verification::merge(const Verification & other) -> void
    {
        checked += other.checked;
        for (auto & f : other.failures)
            fail(f);
    }

    auto format_verification(const string & name, const Verification & v) -> string
    {
        std::ostringstream out;
        out << (v.ok() ? "PASS " : "FAIL ") << name << ": " << v.checked << " checks, "
            << (v.ok() ? 0 : v.failures.size()) << " failures\n";
        for (auto & f : v.failures)
            out << "  counterexample: " << f << "\n";
        return out.str();
    }

    auto verify_endo_formula(const Structure & a, const Structure & e) -> Verification
    {
        require_similar(a, e);
        auto g = endo_formula(a);
        auto table = truth_table(e, g.formula, g.free_vars);
        Verification v;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            auto h = assignment_values(idx, e.universe_size(), g.free_vars.size());
            bool oracle = is_homomorphism(h, a, e);
            ++v.checked;
            if (oracle != table.test(idx))
                v.fail(describe_mismatch("homomorphism formula", a, e, h, table.test(idx), oracle));
        }
        return v;
    }

    auto verify_muhom_formula(const Structure & a, const Structure & e, int n) -> Verification
    {
        require_similar(a, e);
        auto g = muhom_formula(a, n);
        auto table = truth_table(e, g.formula, g.free_vars);
        Verification v;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            auto values = assignment_values(idx, e.universe_size(), g.free_vars.size());
            bool oracle = is_multi_homomorphism(params_mvf(values, a.universe_size(), n, e.universe_size()), a, e);
            ++v.checked;
            if (oracle != table.test(idx))
                v.fail(describe_mismatch("multi-homomorphism formula", a, e, values, table.test(idx), oracle));
        }
        return v;
    }

    auto verify_smuhom_formula(const Structure & a, const Structure & e, int n, int m) -> Verification
    {
        require_similar(a, e);
        if (e.universe_size() > m)
            throw StructureError("surjective multi-homomorphism formula is only claimed for |E| <= m");
        auto g = smuhom_formula(a, n, m);
        auto table = truth_table(e, g.formula, g.free_vars);
        auto smuhoms = enumerate_smuhoms(a, e);
        Verification v;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            auto values = assignment_values(idx, e.universe_size(), g.free_vars.size());
            auto f = params_mvf(values, a.universe_size(), n, e.universe_size());
            bool oracle = std::any_of(smuhoms.begin(), smuhoms.end(), [&](auto & s) { return f.contained_in(s); });
            ++v.checked;
            if (oracle != table.test(idx))
                v.fail(describe_mismatch("surjective multi-homomorphism formula", a, e, values, table.test(idx), oracle));
        }
        return v;
    }

    auto verify_closure_formula(const Structure & a, const Structure & e, const Tuple & t, Fragment l) -> Verification
    {
        require_similar(a, e);
        bool surjective = l.contains(Connective::Forall);
        auto reach = std::max(a.universe_size(), e.universe_size());
        auto g = closure_formula(a, t, l, 0, reach);
        auto table = truth_table(e, g.formula, g.free_vars);

        auto ke = static_cast<std::size_t>(e.universe_size());
        vector<bool> expected(table.size(), false);
        auto mark = [&](const MultiValuedFunction & f) {
            vector<vector<Element>> choices;
            for (auto x : t)
                choices.push_back(set_elements(f(x)));
            vector<std::size_t> pick(t.size(), 0);
            while (true) {
                std::size_t idx = 0, stride = 1;
                for (std::size_t p = 0; p < t.size(); ++p) {
                    idx += static_cast<std::size_t>(choices[p][pick[p]] - 1) * stride;
                    stride *= ke;
                }
                expected[idx] = true;
                std::size_t p = 0;
                for (; p < t.size(); ++p) {
                    if (++pick[p] < choices[p].size())
                        break;
                    pick[p] = 0;
                }
                if (p == t.size())
                    break;
            }
            return true;
        };
        if (surjective)
            for_each_smuhom(a, e, mark);
        else
            for_each_multi_homomorphism(a, e, mark);

        Verification v;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            ++v.checked;
            if (expected[idx] != table.test(idx))
                v.fail(describe_mismatch("closure formula of " + to_string(t), a, e,
                    assignment_values(idx, e.universe_size(), t.size()), table.test(idx), expected[idx]));
        }
        return v;
    }

    auto verify_equality_gadget(const SpecialForm & phi, int k, const string & symbol) -> Verification
    {
        auto psi = equality_pspace_gadget(phi, k, symbol);
        auto a = equality_structure(k, symbol);
        auto b = equality_structure(2, symbol);
        auto phi_formula = phi.to_formula();
        bool phi_b = eval(b, phi_formula);
        bool psi_a = eval(a, psi.formula);
        bool psi_b = eval(b, psi.formula);
        Verification v;
        v.checked = 2;
        if (phi_b && ! psi_a)
            v.fail("phi = " + to_string(phi_formula) + ": true in [2] but the gadget is false in [" + std::to_string(k) + "]");
        if (psi_b && ! phi_b)
            v.fail("phi = " + to_string(phi_formula) + ": the gadget is true in [2] but phi is false there");
        return v;
    }

    auto verify_quotient(const TemplatePair & t) -> Verification
    {
        auto q = quotient_reduction(t);
        Verification v;
        auto & sim = q.indistinguishability;
        for (auto & f : t.profile().smuhoms) {
            ++v.checked;
            if (! is_multi_homomorphism(f, sim.a(), sim.b()))
                v.fail("smuhom " + to_inline_string(f) + " does not preserve indistinguishability");
        }
        v.checked += 3;
        if (! (q.classes_onto_a.is_surjective() && is_multi_homomorphism(q.classes_onto_a, q.equality.a(), sim.a())))
            v.fail("class map " + to_inline_string(q.classes_onto_a) + " is not a smuhom onto (A; ~)");
        if (! (q.b_onto_classes.is_surjective() && is_multi_homomorphism(q.b_onto_classes, sim.b(), q.equality.b())))
            v.fail("class map " + to_inline_string(q.b_onto_classes) + " is not a smuhom onto ([n]; =)");
        auto m = q.partition_a.class_count(), n = q.partition_b.class_count();
        if (! (m >= n && n >= 2))
            v.fail("class counts m = " + std::to_string(m) + ", n = " + std::to_string(n) + " violate m >= n >= 2");
        return v;
    }

    auto verify_dual_swap(const TemplatePair & t, const Formula & sentence) -> Verification
    {
        auto dual = dualize_formula(sentence);
        Verification v;
        for (auto * s : {&t.a(), &t.b()}) {
            ++v.checked;
            if (eval(*s, sentence) == eval(complement_structure(*s), dual))
                v.fail("sentence " + to_string(sentence) + " and its dual agree on a structure and its complement");
        }
        return v;
    }

    auto verify_rewrite(const TemplatePair & src, const TemplatePair & dst, const Formula & sentence,
        const std::function<Formula(const Formula &)> & rewrite) -> Verification
    {
        auto r = rewrite(sentence);
        Verification v;
        v.checked = 2;
        if (eval(dst.a(), sentence) && ! eval(src.a(), r))
            v.fail("sentence " + to_string(sentence) + " holds in the target strong side but its rewrite fails in A");
        if (eval(src.b(), r) && ! eval(dst.b(), sentence))
            v.fail("rewrite of " + to_string(sentence) + " holds in B but the sentence fails in the target weak side");
        return v;
    }
}
