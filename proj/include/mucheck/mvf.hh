#ifndef MUCHECK_MVF_HH
#define MUCHECK_MVF_HH

#include <mucheck/structure.hh>

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mucheck
{
    /// Subset of a universe [k], k <= 64, with bit e-1 standing for element e.
    using ElementSet = std::uint64_t;

    constexpr int max_mvf_universe = 64;

    [[nodiscard]] constexpr auto singleton(Element e) -> ElementSet { return ElementSet{1} << (e - 1); }
    [[nodiscard]] constexpr auto full_set(int k) -> ElementSet
    {
        return k >= 64 ? ~ElementSet{0} : (ElementSet{1} << k) - 1;
    }
    [[nodiscard]] constexpr auto set_contains(ElementSet s, Element e) -> bool { return (s >> (e - 1)) & 1; }
    [[nodiscard]] constexpr auto set_size(ElementSet s) -> int { return std::popcount(s); }
    [[nodiscard]] auto set_elements(ElementSet s) -> std::vector<Element>;
    [[nodiscard]] auto set_to_string(ElementSet s) -> std::string;

    /// Map from [source_size] to nonempty subsets of [target_size].
    class MultiValuedFunction
    {
    public:
        MultiValuedFunction() = default;
        MultiValuedFunction(int target_size, std::vector<ElementSet> values);

        /// Singleton-valued function from a plain map; values[i] is the image of element i+1.
        [[nodiscard]] static auto from_function(int target_size, const std::vector<Element> & values) -> MultiValuedFunction;
        [[nodiscard]] static auto identity(int k) -> MultiValuedFunction;

        [[nodiscard]] auto source_size() const -> int { return static_cast<int>(_values.size()); }
        [[nodiscard]] auto target_size() const -> int { return _target_size; }
        [[nodiscard]] auto operator()(Element a) const -> ElementSet { return _values[a - 1]; }
        [[nodiscard]] auto values() const -> const std::vector<ElementSet> & { return _values; }

        [[nodiscard]] auto multiplicity() const -> int;
        [[nodiscard]] auto is_surjective() const -> bool;
        [[nodiscard]] auto contained_in(const MultiValuedFunction & other) const -> bool;

        /// b -> {a : b in f(a)}; requires surjectivity.
        [[nodiscard]] auto inverse() const -> MultiValuedFunction;

        /// Least a with f(a) equal to the whole target, if any.
        [[nodiscard]] auto full_image_point() const -> std::optional<Element>;
        /// Least b lying in every value set, if any.
        [[nodiscard]] auto common_point() const -> std::optional<Element>;

        auto operator==(const MultiValuedFunction &) const -> bool = default;
        auto operator<=>(const MultiValuedFunction &) const = default;

    private:
        int _target_size = 0;
        std::vector<ElementSet> _values;
    };

    /// One line per source element, `i : j1 j2 ...`.
    [[nodiscard]] auto to_string(const MultiValuedFunction & f) -> std::string;
    /// Single-line form `1->{2,3} 2->{1}`.
    [[nodiscard]] auto to_inline_string(const MultiValuedFunction & f) -> std::string;

    /// Whether the product sets[0] x sets[1] x ... lies inside r.
    [[nodiscard]] auto product_within(std::span<const ElementSet> sets, const Relation & r) -> bool;

    /// Whether f maps every tuple of `from` into `to` componentwise, i.e. the product f(t) lies in `to`.
    [[nodiscard]] auto maps_into(const MultiValuedFunction & f, const Relation & from, const Relation & to) -> bool;

    /// Structure with universe [f.target_size()] and relations the unions of f(t) over the tuples t of s.
    /// The result is non-strict.
    [[nodiscard]] auto image_structure(const Structure & s, const MultiValuedFunction & f) -> Structure;
}

#endif
