#include <mucheck/formula.hh>

#include <algorithm>
#include <sstream>

using std::map;
using std::set;
using std::size_t;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        const char * const connective_names[] = {"exists", "forall", "and", "or", "eq", "neq", "not"};

        auto collect_free(const Formula & f, set<string> & bound, set<string> & out) -> void
        {
            switch (f.kind()) {
            case NodeKind::Atom:
            case NodeKind::Eq:
            case NodeKind::Neq:
                for (auto & v : f.variables())
                    if (! bound.contains(v))
                        out.insert(v);
                break;
            case NodeKind::Not:
            case NodeKind::And:
            case NodeKind::Or:
                for (auto & c : f.children())
                    collect_free(c, bound, out);
                break;
            case NodeKind::Exists:
            case NodeKind::Forall: {
                bool fresh = bound.insert(f.bound_variable()).second;
                collect_free(f.child(), bound, out);
                if (fresh)
                    bound.erase(f.bound_variable());
                break;
            }
            }
        }

        enum class Position
        {
            Top,
            OrOperand,
            AndOperand,
            NotOperand
        };

        auto print(std::ostream & os, const Formula & f, Position pos) -> void
        {
            auto needs_parens = [&]() {
                switch (f.kind()) {
                case NodeKind::Or:
                case NodeKind::Exists:
                case NodeKind::Forall:
                    return pos != Position::Top;
                case NodeKind::And:
                    return pos == Position::AndOperand || pos == Position::NotOperand;
                default:
                    return false;
                }
            }();
            if (needs_parens)
                os << "(";
            switch (f.kind()) {
            case NodeKind::Atom: {
                os << f.symbol() << "(";
                for (size_t i = 0; i < f.variables().size(); ++i)
                    os << (i ? "," : "") << f.variables()[i];
                os << ")";
                break;
            }
            case NodeKind::Eq:
                os << f.variables()[0] << " = " << f.variables()[1];
                break;
            case NodeKind::Neq:
                os << f.variables()[0] << " != " << f.variables()[1];
                break;
            case NodeKind::Not:
                os << "~";
                print(os, f.child(), Position::NotOperand);
                break;
            case NodeKind::And:
            case NodeKind::Or: {
                auto sep = f.kind() == NodeKind::And ? " & " : " | ";
                auto child_pos = f.kind() == NodeKind::And ? Position::AndOperand : Position::OrOperand;
                for (size_t i = 0; i < f.children().size(); ++i) {
                    if (i)
                        os << sep;
                    auto & c = f.children()[i];
                    // A nested disjunction inside a disjunction keeps its own parentheses.
                    if (f.kind() == NodeKind::Or && c.kind() == NodeKind::Or) {
                        os << "(";
                        print(os, c, Position::Top);
                        os << ")";
                    }
                    else
                        print(os, c, child_pos);
                }
                break;
            }
            case NodeKind::Exists:
            case NodeKind::Forall:
                os << (f.kind() == NodeKind::Exists ? "exists " : "forall ") << f.bound_variable() << ". ";
                print(os, f.child(), Position::Top);
                break;
            }
            if (needs_parens)
                os << ")";
        }

        auto size_rec(const Formula & f, FormulaSize & s, size_t depth) -> void
        {
            ++s.nodes;
            s.quantifier_depth = std::max(s.quantifier_depth, depth);
            if (f.is_literal()) {
                ++s.atoms;
                return;
            }
            auto d = f.is_quantifier() ? depth + 1 : depth;
            s.quantifier_depth = std::max(s.quantifier_depth, d);
            for (auto & c : f.children())
                size_rec(c, s, d);
        }

        auto rebuild(const Formula & f, vector<Formula> children) -> Formula
        {
            switch (f.kind()) {
            case NodeKind::Not: return Formula::negation(std::move(children.front()));
            case NodeKind::And: return Formula::conjunction(std::move(children));
            case NodeKind::Or: return Formula::disjunction(std::move(children));
            case NodeKind::Exists: return Formula::exists(f.bound_variable(), std::move(children.front()));
            case NodeKind::Forall: return Formula::forall(f.bound_variable(), std::move(children.front()));
            default: return f;
            }
        }

        auto rename_free_rec(const Formula & f, const map<string, string> & renaming, set<string> & bound) -> Formula
        {
            auto sub = [&](const string & v) {
                if (bound.contains(v))
                    return v;
                auto it = renaming.find(v);
                return it == renaming.end() ? v : it->second;
            };
            switch (f.kind()) {
            case NodeKind::Atom: {
                vector<string> args;
                for (auto & v : f.variables())
                    args.push_back(sub(v));
                return Formula::atom(f.symbol(), std::move(args));
            }
            case NodeKind::Eq: return Formula::eq(sub(f.variables()[0]), sub(f.variables()[1]));
            case NodeKind::Neq: return Formula::neq(sub(f.variables()[0]), sub(f.variables()[1]));
            case NodeKind::Exists:
            case NodeKind::Forall: {
                bool fresh = bound.insert(f.bound_variable()).second;
                auto body = rename_free_rec(f.child(), renaming, bound);
                if (fresh)
                    bound.erase(f.bound_variable());
                return rebuild(f, {std::move(body)});
            }
            default: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(rename_free_rec(c, renaming, bound));
                return rebuild(f, std::move(cs));
            }
            }
        }

        auto rename_apart_rec(const Formula & f, FreshNames & names, const map<string, string> & scope) -> Formula
        {
            auto sub = [&](const string & v) {
                auto it = scope.find(v);
                return it == scope.end() ? v : it->second;
            };
            switch (f.kind()) {
            case NodeKind::Atom: {
                vector<string> args;
                for (auto & v : f.variables())
                    args.push_back(sub(v));
                return Formula::atom(f.symbol(), std::move(args));
            }
            case NodeKind::Eq: return Formula::eq(sub(f.variables()[0]), sub(f.variables()[1]));
            case NodeKind::Neq: return Formula::neq(sub(f.variables()[0]), sub(f.variables()[1]));
            case NodeKind::Exists:
            case NodeKind::Forall: {
                auto & v = f.bound_variable();
                string target = v;
                if (names.taken(v))
                    target = names.next(v);
                else
                    names.reserve(v);
                auto inner = scope;
                inner[v] = target;
                auto body = rename_apart_rec(f.child(), names, inner);
                return f.kind() == NodeKind::Exists ? Formula::exists(target, std::move(body))
                                                    : Formula::forall(target, std::move(body));
            }
            default: {
                vector<Formula> cs;
                for (auto & c : f.children())
                    cs.push_back(rename_apart_rec(c, names, scope));
                return rebuild(f, std::move(cs));
            }
            }
        }
    }

    auto Fragment::dual() const -> Fragment
    {
        auto out = *this;
        auto swap = [&](Connective a, Connective b) {
            bool has_a = contains(a), has_b = contains(b);
            out = out.without(a).without(b);
            if (has_a)
                out = out.with(b);
            if (has_b)
                out = out.with(a);
        };
        swap(Connective::Exists, Connective::Forall);
        swap(Connective::And, Connective::Or);
        return out;
    }

    auto is_canonical(Fragment f) -> bool
    {
        return f == fragments::ea || f == fragments::eao || f == fragments::eaforall || f == fragments::eao_forall;
    }

    auto to_string(Fragment f) -> string
    {
        string out = "{";
        bool first = true;
        for (unsigned i = 0; i < 7; ++i)
            if (f.contains(static_cast<Connective>(i))) {
                if (! first)
                    out += ",";
                first = false;
                out += connective_names[i];
            }
        return out + "}";
    }

    auto parse_fragment(const string & text) -> Fragment
    {
        if (text.find(',') != string::npos || text == "exists" || text == "forall" || text == "and" || text == "or"
            || text.empty()) {
            Fragment f;
            std::stringstream ss(text);
            string item;
            while (std::getline(ss, item, ',')) {
                auto it = std::find(std::begin(connective_names), std::end(connective_names), item);
                if (it == std::end(connective_names))
                    throw FormulaError("unknown fragment member '" + item + "'");
                f = f.with(static_cast<Connective>(it - std::begin(connective_names)));
            }
            return f;
        }

        static const std::pair<const char *, Fragment> bases[] = {
            {"eao-forall", fragments::eao_forall}, {"eaforall", fragments::eaforall}, {"eao", fragments::eao}, {"ea", fragments::ea}};
        for (auto & [name, base] : bases) {
            string n = name;
            if (text.compare(0, n.size(), n) != 0)
                continue;
            auto rest = text.substr(n.size());
            auto f = base;
            bool ok = true;
            while (! rest.empty() && ok) {
                if (rest.starts_with("-eq")) {
                    f = f.with(Connective::Eq);
                    rest = rest.substr(3);
                }
                else if (rest.starts_with("-neq")) {
                    f = f.with(Connective::Neq);
                    rest = rest.substr(4);
                }
                else if (rest.starts_with("-neg")) {
                    f = f.with(Connective::Not);
                    rest = rest.substr(4);
                }
                else
                    ok = false;
            }
            if (ok)
                return f;
        }
        throw FormulaError("unknown fragment '" + text + "'");
    }

    auto Formula::atom(string symbol, vector<string> args) -> Formula
    {
        if (args.empty())
            throw FormulaError("atom " + symbol + " needs at least one argument");
        return Formula(std::make_shared<const Node>(Node{NodeKind::Atom, std::move(symbol), std::move(args), {}}));
    }

    auto Formula::eq(string a, string b) -> Formula
    {
        return Formula(std::make_shared<const Node>(Node{NodeKind::Eq, {}, {std::move(a), std::move(b)}, {}}));
    }

    auto Formula::neq(string a, string b) -> Formula
    {
        return Formula(std::make_shared<const Node>(Node{NodeKind::Neq, {}, {std::move(a), std::move(b)}, {}}));
    }

    auto Formula::negation(Formula child) -> Formula
    {
        return Formula(std::make_shared<const Node>(Node{NodeKind::Not, {}, {}, {std::move(child)}}));
    }

    auto Formula::conjunction(vector<Formula> children) -> Formula
    {
        if (children.size() < 2)
            throw FormulaError("conjunction needs at least two children");
        return Formula(std::make_shared<const Node>(Node{NodeKind::And, {}, {}, std::move(children)}));
    }

    auto Formula::disjunction(vector<Formula> children) -> Formula
    {
        if (children.size() < 2)
            throw FormulaError("disjunction needs at least two children");
        return Formula(std::make_shared<const Node>(Node{NodeKind::Or, {}, {}, std::move(children)}));
    }

    auto Formula::exists(string var, Formula child) -> Formula
    {
        return Formula(std::make_shared<const Node>(Node{NodeKind::Exists, {}, {std::move(var)}, {std::move(child)}}));
    }

    auto Formula::forall(string var, Formula child) -> Formula
    {
        return Formula(std::make_shared<const Node>(Node{NodeKind::Forall, {}, {std::move(var)}, {std::move(child)}}));
    }

    auto Formula::operator==(const Formula & other) const -> bool
    {
        if (_node == other._node)
            return true;
        return _node->kind == other._node->kind && _node->symbol == other._node->symbol
            && _node->vars == other._node->vars && _node->children == other._node->children;
    }

    auto conjoin(vector<Formula> children) -> Formula
    {
        if (children.empty())
            throw FormulaError("empty conjunction");
        if (children.size() == 1)
            return children.front();
        return Formula::conjunction(std::move(children));
    }

    auto disjoin(vector<Formula> children) -> Formula
    {
        if (children.empty())
            throw FormulaError("empty disjunction");
        if (children.size() == 1)
            return children.front();
        return Formula::disjunction(std::move(children));
    }

    auto exists_all(const vector<string> & vars, Formula body) -> Formula
    {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = Formula::exists(*it, std::move(body));
        return body;
    }

    auto forall_all(const vector<string> & vars, Formula body) -> Formula
    {
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
            body = Formula::forall(*it, std::move(body));
        return body;
    }

    auto to_string(const Formula & f) -> string
    {
        std::ostringstream os;
        print(os, f, Position::Top);
        return os.str();
    }

    auto fragment_of(const Formula & f) -> Fragment
    {
        Fragment out;
        switch (f.kind()) {
        case NodeKind::Atom: break;
        case NodeKind::Eq: out = out.with(Connective::Eq); break;
        case NodeKind::Neq: out = out.with(Connective::Neq); break;
        case NodeKind::Not: out = out.with(Connective::Not); break;
        case NodeKind::And: out = out.with(Connective::And); break;
        case NodeKind::Or: out = out.with(Connective::Or); break;
        case NodeKind::Exists: out = out.with(Connective::Exists); break;
        case NodeKind::Forall: out = out.with(Connective::Forall); break;
        }
        for (auto & c : f.children())
            out = Fragment::from_bits(out.bits() | fragment_of(c).bits());
        return out;
    }

    auto free_variables(const Formula & f) -> set<string>
    {
        set<string> bound, out;
        collect_free(f, bound, out);
        return out;
    }

    auto all_variables(const Formula & f) -> set<string>
    {
        set<string> out(f.variables().begin(), f.variables().end());
        for (auto & c : f.children())
            out.merge(all_variables(c));
        return out;
    }

    auto is_sentence(const Formula & f) -> bool
    {
        return free_variables(f).empty();
    }

    auto is_quantifier_free(const Formula & f) -> bool
    {
        if (f.is_quantifier())
            return false;
        return std::all_of(f.children().begin(), f.children().end(), [](auto & c) { return is_quantifier_free(c); });
    }

    auto formula_size(const Formula & f) -> FormulaSize
    {
        FormulaSize s;
        size_rec(f, s, 0);
        s.variables = all_variables(f).size();
        return s;
    }

    auto check_signature(const Formula & f, const Signature & sig) -> void
    {
        if (f.kind() == NodeKind::Atom) {
            auto i = sig.find(f.symbol());
            if (! i)
                throw FormulaError("unknown relation symbol " + f.symbol());
            if (sig[*i].arity != static_cast<int>(f.variables().size()))
                throw FormulaError("arity mismatch: " + f.symbol() + " has arity " + std::to_string(sig[*i].arity)
                    + " but is applied to " + std::to_string(f.variables().size()) + " arguments");
        }
        for (auto & c : f.children())
            check_signature(c, sig);
    }

    auto rename_free(const Formula & f, const map<string, string> & renaming) -> Formula
    {
        set<string> bound;
        return rename_free_rec(f, renaming, bound);
    }

    auto rename_symbols(const Formula & f, const map<string, string> & renaming) -> Formula
    {
        if (f.kind() == NodeKind::Atom) {
            auto it = renaming.find(f.symbol());
            return it == renaming.end() ? f : Formula::atom(it->second, f.variables());
        }
        if (f.is_literal())
            return f;
        vector<Formula> cs;
        for (auto & c : f.children())
            cs.push_back(rename_symbols(c, renaming));
        return rebuild(f, std::move(cs));
    }

    auto FreshNames::next(const string & base) -> string
    {
        auto & counter = _counters[base];
        while (true) {
            auto candidate = base + std::to_string(++counter);
            if (_taken.insert(candidate).second)
                return candidate;
        }
    }

    auto rename_apart(const Formula & f, FreshNames & names) -> Formula
    {
        for (auto & v : free_variables(f))
            names.reserve(v);
        return rename_apart_rec(f, names, {});
    }
}
