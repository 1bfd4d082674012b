#include <mucheck/template_pair.hh>

using std::map;
using std::size_t;
using std::string;

namespace mucheck
{
    TemplatePair::TemplatePair(Structure a, Structure b) :
        _a(std::move(a)),
        _b(std::move(b)),
        _cache(std::make_shared<Cache>())
    {
        require_similar(_a, _b);
        if (! _a.strict() || ! _b.strict())
            throw StructureError("template structures must satisfy the strict conventions");
    }

    auto TemplatePair::profile() const -> const SmuhomProfile &
    {
        std::call_once(_cache->once, [&] { _cache->profile = smuhom_profile(_a, _b); });
        return _cache->profile;
    }

    auto dual_template(const TemplatePair & t) -> TemplatePair
    {
        return TemplatePair(complement_structure(t.b()), complement_structure(t.a()));
    }

    auto complement_symbols(const TemplatePair & t) -> map<string, string>
    {
        map<string, string> out;
        auto & sig = t.signature();
        for (size_t i = 0; i < sig.size(); ++i) {
            auto ca = t.a().relation(i).complement(), cb = t.b().relation(i).complement();
            for (size_t j = 0; j < sig.size(); ++j)
                if (sig[j].arity == sig[i].arity && t.a().relation(j) == ca && t.b().relation(j) == cb) {
                    out.emplace(sig[i].name, sig[j].name);
                    break;
                }
        }
        return out;
    }

    auto is_closed_under_complementation(const TemplatePair & t) -> bool
    {
        return complement_symbols(t).size() == t.signature().size();
    }

    auto complementation_closure(const TemplatePair & t) -> TemplatePair
    {
        auto present = complement_symbols(t);
        auto a = t.a(), b = t.b();
        auto & sig = t.signature();
        for (size_t i = 0; i < sig.size(); ++i) {
            if (present.contains(sig[i].name))
                continue;
            Symbol bar{complement_symbol_name(a.signature(), sig[i].name), sig[i].arity};
            a = a.with_relation(bar, t.a().relation(i).complement());
            b = b.with_relation(bar, t.b().relation(i).complement());
        }
        return TemplatePair(std::move(a), std::move(b));
    }
}
