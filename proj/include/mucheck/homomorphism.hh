#ifndef MUCHECK_HOMOMORPHISM_HH
#define MUCHECK_HOMOMORPHISM_HH

#include <mucheck/mvf.hh>
#include <mucheck/structure.hh>

#include <functional>
#include <optional>
#include <vector>

namespace mucheck
{
    /// Throws StructureError unless a and b interpret the same signature.
    auto require_similar(const Structure & a, const Structure & b) -> void;

    [[nodiscard]] auto is_multi_homomorphism(const MultiValuedFunction & f, const Structure & a, const Structure & b) -> bool;

    /// Plain homomorphism given as values[i] = image of element i+1.
    [[nodiscard]] auto is_homomorphism(const std::vector<Element> & h, const Structure & a, const Structure & b) -> bool;

    /// Number of multi-valued functions from [ka] to [kb], (2^kb - 1)^ka, as a double.
    [[nodiscard]] auto mvf_candidate_count(int ka, int kb) -> double;

    /// Callbacks return false to stop the enumeration early.
    using MvfVisitor = std::function<bool(const MultiValuedFunction &)>;

    /// All homomorphisms a -> b in lexicographic order of their value vectors.
    [[nodiscard]] auto enumerate_homomorphisms(const Structure & a, const Structure & b) -> std::vector<std::vector<Element>>;

    /// The lexicographically first homomorphism, if any.
    [[nodiscard]] auto find_homomorphism(const Structure & a, const Structure & b) -> std::optional<std::vector<Element>>;

    /// Multi-homomorphisms, by backtracking over source elements in increasing order with value sets
    /// tried in increasing cardinality, then lexicographically; partial assignments are pruned as soon
    /// as a fully assigned tuple leaves the target relation.
    auto for_each_multi_homomorphism(const Structure & a, const Structure & b, const MvfVisitor & visit) -> void;
    [[nodiscard]] auto enumerate_multi_homomorphisms(const Structure & a, const Structure & b) -> std::vector<MultiValuedFunction>;

    /// Surjective multi-homomorphisms, in the same order; the value of the last source element is
    /// only accepted if it completes the cover of the target.
    auto for_each_smuhom(const Structure & a, const Structure & b, const MvfVisitor & visit) -> void;
    [[nodiscard]] auto enumerate_smuhoms(const Structure & a, const Structure & b) -> std::vector<MultiValuedFunction>;
    [[nodiscard]] auto find_smuhom(const Structure & a, const Structure & b) -> std::optional<MultiValuedFunction>;
    [[nodiscard]] auto exists_smuhom(const Structure & a, const Structure & b) -> bool;

    /// Least b whose constant map is a homomorphism a -> b.
    [[nodiscard]] auto exists_constant_homomorphism(const Structure & a, const Structure & b) -> std::optional<Element>;

    /// f(a_star) is the whole target.
    [[nodiscard]] auto is_forall_smuhom(const MultiValuedFunction & f, Element a_star) -> bool;
    /// b_star lies in every value of f.
    [[nodiscard]] auto is_exists_smuhom(const MultiValuedFunction & f, Element b_star) -> bool;

    struct ForallWitness
    {
        std::size_t smuhom;
        Element a_star;
    };

    struct ExistsWitness
    {
        std::size_t smuhom;
        Element b_star;
    };

    struct AeWitness
    {
        std::size_t smuhom;
        Element a_star;
        Element b_star;
    };

    struct SmuhomProfile
    {
        std::vector<MultiValuedFunction> smuhoms;
        /// Least a* (resp. b*, resp. pair (a*, b*)) over all smuhoms, with the first smuhom realizing it.
        std::optional<ForallWitness> forall;
        std::optional<ExistsWitness> exists;
        std::optional<AeWitness> ae;
        /// Every a* / b* realized by some smuhom, and every realized (a*, b*) pair as bit (a*-1)*kb + (b*-1).
        ElementSet forall_points = 0;
        ElementSet exists_points = 0;
        std::vector<bool> ae_pairs;

        [[nodiscard]] auto is_template() const -> bool { return ! smuhoms.empty(); }
        [[nodiscard]] auto has_ae_pair(int kb, Element a_star, Element b_star) const -> bool
        {
            return ae_pairs[static_cast<std::size_t>((a_star - 1) * kb + (b_star - 1))];
        }
    };

    [[nodiscard]] auto smuhom_profile(const Structure & a, const Structure & b) -> SmuhomProfile;

    /// Builds an smuhom that is simultaneously of both kinds from a forall-kind f (with point a*) and an
    /// exists-kind g (with point b*) between digraphs, following the case analysis on the edges at a*.
    /// Throws StructureError when the inputs are not single binary relations or f, g lack the points.
    [[nodiscard]] auto digraph_combine(const MultiValuedFunction & f, Element a_star, const MultiValuedFunction & g,
        Element b_star, const Structure & a, const Structure & b) -> MultiValuedFunction;

    struct IndistinguishabilityPartition
    {
        /// Blocks sorted by least element; each block sorted.
        std::vector<std::vector<Element>> blocks;
        /// class_of[e-1] is the index of e's block.
        std::vector<int> class_of;

        [[nodiscard]] auto class_count() const -> int { return static_cast<int>(blocks.size()); }
    };

    /// a ~ a' when replacing a by a' at any single coordinate of any tuple keeps the tuple inside
    /// (and, symmetrically, outside) every relation.
    [[nodiscard]] auto indistinguishable(const Structure & s, Element a, Element a2) -> bool;
    [[nodiscard]] auto indistinguishability_partition(const Structure & s) -> IndistinguishabilityPartition;
}

#endif
