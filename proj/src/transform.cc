#include <mucheck/transform.hh>

#include <algorithm>

using std::map;
using std::pair;
using std::set;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        struct Prefixed
        {
            vector<pair<NodeKind, string>> prefix;
            Formula matrix;
        };

        auto reject_negation(const Formula & f, const char * op) -> void
        {
            if (fragment_of(f).contains(Connective::Not))
                throw FormulaError(string(op) + " requires a negation-free formula");
        }

        auto pull(const Formula & f) -> Prefixed
        {
            switch (f.kind()) {
            case NodeKind::Exists:
            case NodeKind::Forall: {
                auto inner = pull(f.child());
                inner.prefix.insert(inner.prefix.begin(), {f.kind(), f.bound_variable()});
                return inner;
            }
            case NodeKind::And:
            case NodeKind::Or: {
                vector<pair<NodeKind, string>> prefix;
                vector<Formula> matrices;
                for (auto & c : f.children()) {
                    auto p = pull(c);
                    prefix.insert(prefix.end(), p.prefix.begin(), p.prefix.end());
                    matrices.push_back(std::move(p.matrix));
                }
                auto matrix = f.kind() == NodeKind::And ? Formula::conjunction(std::move(matrices))
                                                        : Formula::disjunction(std::move(matrices));
                return {std::move(prefix), std::move(matrix)};
            }
            default:
                return {{}, f};
            }
        }

        auto wrap(const vector<pair<NodeKind, string>> & prefix, Formula matrix) -> Formula
        {
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
                matrix = it->first == NodeKind::Exists ? Formula::exists(it->second, std::move(matrix))
                                                       : Formula::forall(it->second, std::move(matrix));
            return matrix;
        }

        auto dualize_rec(const Formula & f, DualEquality equality) -> Formula
        {
            switch (f.kind()) {
            case NodeKind::Atom: return f;
            case NodeKind::Eq:
                return equality == DualEquality::Swap ? Formula::neq(f.variables()[0], f.variables()[1]) : f;
            case NodeKind::Neq:
                return equality == DualEquality::Swap ? Formula::eq(f.variables()[0], f.variables()[1]) : f;
            case NodeKind::Exists: return Formula::forall(f.bound_variable(), dualize_rec(f.child(), equality));
            case NodeKind::Forall: return Formula::exists(f.bound_variable(), dualize_rec(f.child(), equality));
            case NodeKind::And:
            case NodeKind::Or: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(dualize_rec(c, equality));
                return f.kind() == NodeKind::And ? Formula::disjunction(std::move(cs)) : Formula::conjunction(std::move(cs));
            }
            case NodeKind::Not: break;
            }
            throw FormulaError("dualize_formula requires a negation-free formula");
        }

        auto nnf(const Formula & f, bool negated, const map<string, string> & complements) -> Formula
        {
            switch (f.kind()) {
            case NodeKind::Atom: {
                if (! negated)
                    return f;
                auto it = complements.find(f.symbol());
                if (it == complements.end())
                    throw FormulaError("no complement symbol for negated atom '" + f.symbol() + "'");
                return Formula::atom(it->second, f.variables());
            }
            case NodeKind::Eq: return negated ? Formula::neq(f.variables()[0], f.variables()[1]) : f;
            case NodeKind::Neq: return negated ? Formula::eq(f.variables()[0], f.variables()[1]) : f;
            case NodeKind::Not: return nnf(f.child(), ! negated, complements);
            case NodeKind::Exists:
            case NodeKind::Forall: {
                auto body = nnf(f.child(), negated, complements);
                bool exists = (f.kind() == NodeKind::Exists) != negated;
                return exists ? Formula::exists(f.bound_variable(), std::move(body))
                              : Formula::forall(f.bound_variable(), std::move(body));
            }
            case NodeKind::And:
            case NodeKind::Or: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(nnf(c, negated, complements));
                bool conj = (f.kind() == NodeKind::And) != negated;
                return conj ? Formula::conjunction(std::move(cs)) : Formula::disjunction(std::move(cs));
            }
            }
            throw FormulaError("unreachable formula kind");
        }
    }

    auto to_prenex(const Formula & f) -> Formula
    {
        reject_negation(f, "to_prenex");
        FreshNames names;
        auto p = pull(rename_apart(f, names));
        return wrap(p.prefix, std::move(p.matrix));
    }

    auto SpecialForm::universals() const -> vector<string>
    {
        vector<string> out;
        for (auto & b : blocks)
            out.push_back(b.universal);
        return out;
    }

    auto SpecialForm::existentials() const -> vector<string>
    {
        vector<string> out;
        for (auto & b : blocks)
            out.push_back(b.existential);
        return out;
    }

    auto SpecialForm::free_variables() const -> vector<string>
    {
        set<string> block_vars;
        for (auto & b : blocks) {
            block_vars.insert(b.universal);
            block_vars.insert(b.existential);
        }
        vector<string> out;
        for (auto & v : mucheck::free_variables(matrix))
            if (! block_vars.contains(v))
                out.push_back(v);
        return out;
    }

    auto SpecialForm::to_formula() const -> Formula
    {
        auto f = matrix;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
            f = Formula::forall(it->universal, Formula::exists(it->existential, std::move(f)));
        return f;
    }

    auto make_special_form(int m, Formula matrix) -> SpecialForm
    {
        if (! is_quantifier_free(matrix))
            throw FormulaError("special-form matrix must be quantifier-free");
        SpecialForm sf{{}, std::move(matrix)};
        for (int i = 1; i <= m; ++i)
            sf.blocks.push_back({"y" + std::to_string(i), "z" + std::to_string(i)});
        return sf;
    }

    auto to_special_form(const Formula & f) -> SpecialForm
    {
        reject_negation(f, "to_special_form");
        FreshNames binders;
        auto p = pull(rename_apart(f, binders));

        // Group the prefix into forall/exists blocks; empty slots are dummies filled in below.
        vector<pair<string, string>> blocks;
        bool open = false;
        for (auto & [kind, var] : p.prefix) {
            if (kind == NodeKind::Forall) {
                blocks.emplace_back(var, "");
                open = true;
            }
            else {
                if (open) {
                    blocks.back().second = var;
                    open = false;
                }
                else
                    blocks.emplace_back("", var);
            }
        }

        auto free = mucheck::free_variables(f);
        FreshNames names(free);
        for (auto & [u, e] : blocks) {
            if (! u.empty())
                names.reserve(u);
            if (! e.empty())
                names.reserve(e);
        }

        // Target names y_i, z_i unless they clash with a free variable. The renaming is simultaneous,
        // so swapping names between blocks is harmless.
        auto target = [&](char base, size_t i) {
            auto name = string(1, base) + std::to_string(i + 1);
            return free.contains(name) ? names.next(string(1, base) + "_") : name;
        };
        map<string, string> renaming;
        SpecialForm sf{{}, p.matrix};
        for (size_t i = 0; i < blocks.size(); ++i) {
            auto y = target('y', i), z = target('z', i);
            if (! blocks[i].first.empty())
                renaming[blocks[i].first] = y;
            if (! blocks[i].second.empty())
                renaming[blocks[i].second] = z;
            sf.blocks.push_back({y, z});
        }
        sf.matrix = rename_free(p.matrix, renaming);
        return sf;
    }

    auto dualize_formula(const Formula & f, DualEquality equality) -> Formula
    {
        reject_negation(f, "dualize_formula");
        return dualize_rec(f, equality);
    }

    auto push_negations(const Formula & f, const map<string, string> & complements) -> Formula
    {
        return nnf(f, false, complements);
    }
}
