#include <mucheck/classifier.hh>
#include <mucheck/homomorphism.hh>

#include <cmath>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace mucheck
{
    namespace
    {
        auto inline_function(const vector<Element> & h) -> string
        {
            string out;
            for (std::size_t i = 0; i < h.size(); ++i)
                out += (i ? " " : "") + std::to_string(i + 1) + "->" + std::to_string(h[i]);
            return out;
        }

        auto absence(const TemplatePair & t, const string & what) -> string
        {
            std::ostringstream out;
            out << "exhaustive search over all " << mvf_candidate_count(t.a().universe_size(), t.b().universe_size())
                << " multi-valued functions from [" << t.a().universe_size() << "] to [" << t.b().universe_size()
                << "] found no " << what;
            return out.str();
        }

        auto classify_full(const Normalization & n, ComplexityVerdict & v) -> void
        {
            auto & t = n.pair;
            auto & p = t.profile();
            auto & ev = v.evidence;
            ev.push_back(std::to_string(p.smuhoms.size()) + " surjective multi-homomorphisms enumerated");

            if (p.ae) {
                auto & f = p.smuhoms[p.ae->smuhom];
                ev.push_back("smuhom " + to_inline_string(f) + " maps " + std::to_string(p.ae->a_star)
                    + " onto the weak side and has " + std::to_string(p.ae->b_star) + " in every value");
                v.witness = f;
            }
            else {
                if (p.forall) {
                    ev.push_back("smuhom " + to_inline_string(p.smuhoms[p.forall->smuhom]) + " maps "
                        + std::to_string(p.forall->a_star) + " onto the weak side");
                    v.witness = p.smuhoms[p.forall->smuhom];
                }
                else
                    ev.push_back(absence(t, "smuhom mapping a point onto the weak side"));
                if (p.exists) {
                    ev.push_back("smuhom " + to_inline_string(p.smuhoms[p.exists->smuhom]) + " has "
                        + std::to_string(p.exists->b_star) + " in every value");
                    if (! v.witness)
                        v.witness = p.smuhoms[p.exists->smuhom];
                }
                else
                    ev.push_back(absence(t, "smuhom with a point common to all values"));
                ev.push_back(absence(t, "smuhom of both kinds at once"));
            }

            if (t.b().universe_size() == 2) {
                v.rule = "Boolean weak side";
                v.label = p.ae ? Verdict::InL : p.forall ? Verdict::NPComplete : Verdict::PSPACEComplete;
                return;
            }
            if (t.a().universe_size() == 2) {
                v.rule = "Boolean strong side";
                v.label = p.ae ? Verdict::InL : p.exists ? Verdict::coNPComplete : Verdict::PSPACEComplete;
                return;
            }
            if (n.added_equality || n.added_disequality || n.complemented) {
                v.rule = n.complemented ? "complementation-closed template quotient to equality"
                                        : "equality gadget";
                v.label = p.ae ? Verdict::InL : Verdict::PSPACEComplete;
                return;
            }

            bool digraph = t.signature().size() == 1 && t.signature()[0].arity == 2;
            if (p.ae) {
                v.rule = "smuhom of both kinds at once";
                v.label = Verdict::InL;
            }
            else if (p.forall && p.exists) {
                if (digraph) {
                    // Cannot happen for digraphs; report it loudly if enumeration disagrees.
                    auto h = digraph_combine(p.smuhoms[p.forall->smuhom], p.forall->a_star, p.smuhoms[p.exists->smuhom],
                        p.exists->b_star, t.a(), t.b());
                    ev.push_back("digraph combination produced " + to_inline_string(h) + ", missed by enumeration");
                    v.witness = h;
                    v.rule = "digraph combination of both smuhom kinds";
                    v.label = Verdict::InL;
                }
                else {
                    v.rule = "smuhoms of both kinds but not at once";
                    v.label = Verdict::InNPcapCoNP_HardnessOpen;
                }
            }
            else if (p.forall) {
                v.rule = "only smuhoms mapping a point onto the weak side";
                v.label = Verdict::NPComplete;
            }
            else if (p.exists) {
                v.rule = "only smuhoms with a common point";
                v.label = Verdict::coNPComplete;
            }
            else {
                v.rule = "smuhoms of neither kind";
                v.label = Verdict::NPHardAndCoNPHard_MembershipOpen;
            }
        }
    }

    auto is_template(const TemplatePair & t, Fragment l) -> TemplateCertificate
    {
        if (! is_canonical(l))
            throw FormulaError("template test needs a canonical fragment, got " + to_string(l));

        auto by_hom = [&]() -> TemplateCertificate {
            if (auto h = find_homomorphism(t.a(), t.b()))
                return {TemplateStatus::Valid, MultiValuedFunction::from_function(t.b().universe_size(), *h),
                    "homomorphism " + inline_function(*h)};
            std::ostringstream out;
            out << "exhaustive search over all " << std::pow(double(t.b().universe_size()), t.a().universe_size())
                << " maps found no homomorphism";
            return {TemplateStatus::Invalid, std::nullopt, out.str()};
        };

        if (l == fragments::ea || l == fragments::eao)
            return by_hom();

        if (l == fragments::eao_forall) {
            auto & p = t.profile();
            if (p.smuhoms.empty())
                return {TemplateStatus::Invalid, std::nullopt, absence(t, "surjective multi-homomorphism")};
            return {TemplateStatus::Valid, p.smuhoms.front(), "surjective multi-homomorphism " + to_inline_string(p.smuhoms.front())};
        }

        if (auto f = find_smuhom(t.a(), t.b()))
            return {TemplateStatus::Valid, *f, "surjective multi-homomorphism " + to_inline_string(*f)};
        auto hom = by_hom();
        if (hom.status == TemplateStatus::Invalid)
            return hom;
        return {TemplateStatus::Undetermined, hom.witness,
            hom.explanation + " but no surjective multi-homomorphism; validity for " + to_string(l) + " is not decided"};
    }

    auto to_string(Verdict v) -> string
    {
        switch (v) {
        case Verdict::NotATemplate: return "not a template";
        case Verdict::InL: return "in L";
        case Verdict::NPComplete: return "NP-complete";
        case Verdict::coNPComplete: return "coNP-complete";
        case Verdict::PSPACEComplete: return "PSPACE-complete";
        case Verdict::InNPcapCoNP_HardnessOpen: return "NP∩coNP (hardness open)";
        case Verdict::NPHardAndCoNPHard_MembershipOpen: return "NP-hard and coNP-hard (membership open)";
        case Verdict::OutOfScope: return "out of classification scope";
        }
        return "?";
    }

    auto verdict_name(Verdict v) -> string
    {
        switch (v) {
        case Verdict::NotATemplate: return "NotATemplate";
        case Verdict::InL: return "InL";
        case Verdict::NPComplete: return "NPComplete";
        case Verdict::coNPComplete: return "coNPComplete";
        case Verdict::PSPACEComplete: return "PSPACEComplete";
        case Verdict::InNPcapCoNP_HardnessOpen: return "InNPcapCoNP_HardnessOpen";
        case Verdict::NPHardAndCoNPHard_MembershipOpen: return "NPHardAndCoNPHard_MembershipOpen";
        case Verdict::OutOfScope: return "OutOfScope";
        }
        return "?";
    }

    auto dual_verdict(Verdict v) -> Verdict
    {
        if (v == Verdict::NPComplete)
            return Verdict::coNPComplete;
        if (v == Verdict::coNPComplete)
            return Verdict::NPComplete;
        return v;
    }

    auto classify(const TemplatePair & t, Fragment l) -> ComplexityVerdict
    {
        ComplexityVerdict v;
        v.fragment = l;
        v.normalized_fragment = l;
        if (is_trivial_fragment(l)) {
            v.label = Verdict::InL;
            v.trivial_fragment = true;
            v.rule = "trivial fragment";
            v.evidence.push_back("no quantifier, no connective, or only exists/or (dually forall/and): every sentence "
                                 "is decided by evaluating it directly");
            return v;
        }

        auto n = normalize_fragment(t, l);
        v.normalized_fragment = n.fragment;
        v.dualized = n.dualized;
        if (n.added_equality)
            v.evidence.push_back("equality interpreted by fresh symbol " + n.equality_symbol);
        if (n.added_disequality)
            v.evidence.push_back("disequality interpreted by fresh symbol " + n.disequality_symbol);
        if (n.complemented)
            v.evidence.push_back("template closed under complementation and negations pushed to atoms");
        if (n.dualized)
            v.evidence.push_back("fragment replaced by its dual " + to_string(n.fragment)
                + " over (complement of B, complement of A); label dualized");

        auto cert = is_template(n.pair, n.fragment);
        if (cert.status == TemplateStatus::Invalid) {
            v.label = Verdict::NotATemplate;
            v.rule = n.fragment == fragments::eao_forall ? "no surjective multi-homomorphism" : "no homomorphism";
            v.evidence.push_back(cert.explanation);
            return v;
        }
        v.evidence.push_back("template: " + cert.explanation);
        v.witness = cert.witness;

        if (n.fragment == fragments::ea || n.fragment == fragments::eaforall) {
            v.label = Verdict::OutOfScope;
            v.rule = "fragment outside classification scope";
            return v;
        }

        if (n.fragment == fragments::eao) {
            v.rule = "constant-homomorphism dichotomy";
            if (auto c = exists_constant_homomorphism(n.pair.a(), n.pair.b())) {
                v.label = Verdict::InL;
                v.evidence.push_back("constant map to " + std::to_string(*c) + " is a homomorphism");
                v.witness = MultiValuedFunction::from_function(n.pair.b().universe_size(),
                    vector<Element>(static_cast<std::size_t>(n.pair.a().universe_size()), *c));
            }
            else {
                v.label = Verdict::NPComplete;
                v.evidence.push_back("no constant map is a homomorphism; rainbow/not-all-equal template is definable");
            }
        }
        else
            classify_full(n, v);

        if (n.dualized)
            v.label = dual_verdict(v.label);
        return v;
    }

    auto format_report(const ComplexityVerdict & v) -> string
    {
        string out;
        out += "label: " + to_string(v.label) + "\n";
        out += "verdict: " + verdict_name(v.label) + "\n";
        out += "fragment: " + to_string(v.fragment) + "\n";
        out += "normalized-fragment: " + to_string(v.normalized_fragment) + "\n";
        out += string("dualized: ") + (v.dualized ? "yes" : "no") + "\n";
        out += "rule: " + v.rule + "\n";
        for (auto & e : v.evidence)
            out += "evidence: " + e + "\n";
        if (v.witness)
            out += "witness: " + to_inline_string(*v.witness) + "\n";
        return out;
    }

    auto p_definable(const TemplatePair & src, const TemplatePair & dst, Fragment l) -> bool
    {
        if (src.a().universe_size() != dst.a().universe_size() || src.b().universe_size() != dst.b().universe_size())
            throw StructureError("p-definability check needs matching universes");
        bool ok = true;
        auto check = [&](const MultiValuedFunction & f) {
            ok = is_multi_homomorphism(f, dst.a(), dst.b());
            return ok;
        };
        if (l == fragments::eao)
            for_each_multi_homomorphism(src.a(), src.b(), check);
        else if (l == fragments::eao_forall)
            for_each_smuhom(src.a(), src.b(), check);
        else
            throw FormulaError("p-definability is characterized only for {exists,and,or} and {exists,forall,and,or}");
        return ok;
    }

    auto is_relaxation(const TemplatePair & coarse, const TemplatePair & fine) -> bool
    {
        require_similar(coarse.a(), fine.a());
        return exists_smuhom(coarse.a(), fine.a()) && exists_smuhom(fine.b(), coarse.b());
    }
}
