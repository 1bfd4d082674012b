#ifndef MUCHECK_TEMPLATE_PAIR_HH
#define MUCHECK_TEMPLATE_PAIR_HH

#include <mucheck/homomorphism.hh>
#include <mucheck/structure.hh>

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace mucheck
{
    /// A pair (A, B) of similar strict structures: A is the strong side, B the weak side. Copies share
    /// one lazily computed smuhom profile.
    class TemplatePair
    {
    public:
        TemplatePair(Structure a, Structure b);

        [[nodiscard]] auto a() const -> const Structure & { return _a; }
        [[nodiscard]] auto b() const -> const Structure & { return _b; }
        [[nodiscard]] auto signature() const -> const Signature & { return _a.signature(); }

        [[nodiscard]] auto profile() const -> const SmuhomProfile &;

        auto operator==(const TemplatePair & other) const -> bool { return _a == other._a && _b == other._b; }

    private:
        struct Cache
        {
            std::once_flag once;
            SmuhomProfile profile;
        };

        Structure _a, _b;
        std::shared_ptr<Cache> _cache;
    };

    /// (complement of B, complement of A).
    [[nodiscard]] auto dual_template(const TemplatePair & t) -> TemplatePair;

    /// For every symbol, the name of a symbol interpreted as its complement on both sides, if any.
    [[nodiscard]] auto complement_symbols(const TemplatePair & t) -> std::map<std::string, std::string>;

    [[nodiscard]] auto is_closed_under_complementation(const TemplatePair & t) -> bool;

    /// Adds R_bar (complement of R on both sides) for every R lacking a joint complement symbol.
    [[nodiscard]] auto complementation_closure(const TemplatePair & t) -> TemplatePair;
}

#endif
