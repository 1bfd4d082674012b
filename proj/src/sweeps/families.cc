#include <mucheck/sweeps.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>

using std::string;
using std::vector;

namespace mucheck::sweeps
{
    namespace
    {
        auto from_mask(int k, std::uint32_t mask, const string & symbol) -> Structure
        {
            vector<Tuple> tuples;
            for (int i = 0; i < k * k; ++i)
                if ((mask >> i) & 1)
                    tuples.push_back({i / k + 1, i % k + 1});
            return Structure(Signature({{symbol, 2}}), k, vector<Relation>{Relation(k, 2, std::move(tuples))});
        }

        auto relabel(int k, std::uint32_t mask, const vector<int> & perm) -> std::uint32_t
        {
            std::uint32_t out = 0;
            for (int i = 0; i < k * k; ++i)
                if ((mask >> i) & 1)
                    out |= std::uint32_t{1} << (perm[static_cast<std::size_t>(i / k)] * k + perm[static_cast<std::size_t>(i % k)]);
            return out;
        }

        auto is_class_representative(int k, std::uint32_t mask) -> bool
        {
            vector<int> perm(static_cast<std::size_t>(k));
            std::iota(perm.begin(), perm.end(), 0);
            do
                if (relabel(k, mask, perm) < mask)
                    return false;
            while (std::next_permutation(perm.begin(), perm.end()));
            return true;
        }

        auto block_vars(int m) -> vector<string>
        {
            vector<string> out;
            for (int i = 1; i <= m; ++i) {
                out.push_back("y" + std::to_string(i));
                out.push_back("z" + std::to_string(i));
            }
            return out;
        }
    }

    auto digraphs(int k, const string & symbol) -> vector<Structure>
    {
        vector<Structure> out;
        std::uint32_t full = (std::uint32_t{1} << (k * k)) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask)
            out.push_back(from_mask(k, mask, symbol));
        return out;
    }

    auto digraph_classes(int k, const string & symbol) -> vector<Structure>
    {
        vector<Structure> out;
        std::uint32_t full = (std::uint32_t{1} << (k * k)) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask)
            if (is_class_representative(k, mask))
                out.push_back(from_mask(k, mask, symbol));
        return out;
    }

    auto small_digraphs(const string & symbol) -> vector<Structure>
    {
        auto out = digraphs(2, symbol);
        auto three = digraphs(3, symbol);
        out.insert(out.end(), three.begin(), three.end());
        return out;
    }

    auto small_digraph_classes(const string & symbol) -> vector<Structure>
    {
        auto out = digraph_classes(2, symbol);
        auto three = digraph_classes(3, symbol);
        out.insert(out.end(), three.begin(), three.end());
        return out;
    }

    auto matrices(const vector<string> & vars, const string & symbol) -> vector<Formula>
    {
        vector<Formula> atoms;
        for (auto & u : vars)
            for (auto & v : vars)
                atoms.push_back(Formula::atom(symbol, {u, v}));
        auto out = atoms;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                out.push_back(Formula::conjunction({atoms[i], atoms[j]}));
                out.push_back(Formula::disjunction({atoms[i], atoms[j]}));
            }
        return out;
    }

    auto block_formulas(const vector<string> & free, Prefix prefix, const string & symbol) -> vector<Formula>
    {
        vector<Formula> out;
        for (int m = 1; m <= 2; ++m) {
            auto vars = free;
            auto blocks = block_vars(m);
            vars.insert(vars.end(), blocks.begin(), blocks.end());
            for (auto & matrix : matrices(vars, symbol)) {
                auto f = matrix;
                for (int i = m; i >= 1; --i) {
                    f = Formula::exists("z" + std::to_string(i), std::move(f));
                    auto y = "y" + std::to_string(i);
                    f = prefix == Prefix::Alternating ? Formula::forall(y, std::move(f)) : Formula::exists(y, std::move(f));
                }
                out.push_back(std::move(f));
            }
        }
        return out;
    }

    auto special_form_sentences(const string & symbol) -> vector<SpecialForm>
    {
        vector<SpecialForm> out;
        for (int m = 1; m <= 2; ++m)
            for (auto & matrix : matrices(block_vars(m), symbol))
                out.push_back(make_special_form(m, matrix));
        return out;
    }
}
