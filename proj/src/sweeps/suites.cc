#include <mucheck/classifier.hh>
#include <mucheck/evaluator.hh>
#include <mucheck/homomorphism.hh>
#include <mucheck/io.hh>
#include <mucheck/pmc.hh>
#include <mucheck/reductions.hh>
#include <mucheck/sweeps.hh>

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

using std::string;
using std::vector;

namespace mucheck::sweeps
{
    namespace
    {
        using Bits = vector<std::uint64_t>;

        auto one_line(const Structure & s) -> string
        {
            auto text = format_structure(s);
            string out;
            for (auto c : text)
                out += c == '\n' ? string("; ") : string(1, c);
            return out;
        }

        auto pair_text(const Structure & a, const Structure & b) -> string
        {
            return "A = {" + one_line(a) + "}, B = {" + one_line(b) + "}";
        }

        auto set_bit(Bits & b, std::size_t i) -> void { b[i / 64] |= std::uint64_t{1} << (i % 64); }

        /// For each pair (a1, a2), the set of family formulas satisfied at x1 = a1, x2 = a2.
        auto satisfied_sets(const Structure & s, const vector<Formula> & family) -> vector<Bits>
        {
            auto k = static_cast<std::size_t>(s.universe_size());
            vector<Bits> out(k * k, Bits((family.size() + 63) / 64, 0));
            for (std::size_t f = 0; f < family.size(); ++f) {
                auto table = truth_table(s, family[f], {"x1", "x2"});
                for (std::size_t idx = 0; idx < k * k; ++idx)
                    if (table.test(idx))
                        set_bit(out[idx], f);
            }
            return out;
        }

        /// Index in satisfied_sets of the first formula true at a in A but false at b in B, if any.
        auto first_lost(const Bits & fa, const Bits & fb) -> std::optional<std::size_t>
        {
            for (std::size_t w = 0; w < fa.size(); ++w)
                if (auto lost = fa[w] & ~fb[w])
                    return w * 64 + static_cast<std::size_t>(std::countr_zero(lost));
            return std::nullopt;
        }

        auto check_preservation(const Structure & a, const Structure & b, const MultiValuedFunction & f,
            const vector<Bits> & fa, const vector<Bits> & fb, const vector<Formula> & family, const string & kind,
            Verification & v) -> void
        {
            auto ka = static_cast<std::size_t>(a.universe_size()), kb = static_cast<std::size_t>(b.universe_size());
            for (Element a1 = 1; a1 <= a.universe_size(); ++a1)
                for (Element a2 = 1; a2 <= a.universe_size(); ++a2) {
                    auto & from = fa[static_cast<std::size_t>(a1 - 1) + static_cast<std::size_t>(a2 - 1) * ka];
                    for (auto b1 : set_elements(f(a1)))
                        for (auto b2 : set_elements(f(a2))) {
                            ++v.checked;
                            auto & to = fb[static_cast<std::size_t>(b1 - 1) + static_cast<std::size_t>(b2 - 1) * kb];
                            if (auto lost = first_lost(from, to))
                                v.fail(kind + " " + to_inline_string(f) + " of " + pair_text(a, b) + " loses "
                                    + to_string(family[*lost]) + " from (" + std::to_string(a1) + "," + std::to_string(a2)
                                    + ") to (" + std::to_string(b1) + "," + std::to_string(b2) + ")");
                        }
                }
        }

        auto preservation() -> SuiteResult
        {
            SuiteResult r{"preservation",
                "multi-homomorphisms preserve existential positive formulas and smuhoms preserve "
                "forall-exists positive formulas, all digraph templates with universes of size 2 and 3",
                {}, {}, 0};
            auto structures = small_digraphs();
            auto existential = block_formulas({"x1", "x2"}, Prefix::Existential);
            auto alternating = block_formulas({"x1", "x2"}, Prefix::Alternating);

            vector<vector<Bits>> ep, ae;
            for (auto & s : structures) {
                ep.push_back(satisfied_sets(s, existential));
                ae.push_back(satisfied_sets(s, alternating));
            }

            std::size_t muhom_templates = 0, smuhom_templates = 0, muhoms = 0, smuhoms = 0;
            for (std::size_t i = 0; i < structures.size(); ++i)
                for (std::size_t j = 0; j < structures.size(); ++j) {
                    auto & a = structures[i];
                    auto & b = structures[j];
                    std::size_t found = 0;
                    for_each_multi_homomorphism(a, b, [&](const MultiValuedFunction & f) {
                        ++found;
                        check_preservation(a, b, f, ep[i], ep[j], existential, "multi-homomorphism", r.verification);
                        return true;
                    });
                    muhoms += found;
                    muhom_templates += found > 0;
                    found = 0;
                    for_each_smuhom(a, b, [&](const MultiValuedFunction & f) {
                        ++found;
                        check_preservation(a, b, f, ae[i], ae[j], alternating, "smuhom", r.verification);
                        return true;
                    });
                    smuhoms += found;
                    smuhom_templates += found > 0;
                }
            r.notes.push_back(std::to_string(structures.size()) + " structures, " + std::to_string(existential.size())
                + " existential and " + std::to_string(alternating.size()) + " forall-exists formulas");
            r.notes.push_back(std::to_string(muhom_templates) + " pairs with multi-homomorphisms (" + std::to_string(muhoms)
                + " maps), " + std::to_string(smuhom_templates) + " pairs with smuhoms (" + std::to_string(smuhoms)
                + " maps)");
            return r;
        }

        auto example_golden() -> SuiteResult
        {
            SuiteResult r{"example-golden",
                "forall x exists y forall z (Q(z,x) | Q(z,y)) is true on ([2]; =) and false on ([3]; =)", {}, {}, 0};
            auto phi = parse_formula("forall x. exists y. forall z. (Q(z, x) | Q(z, y))");
            bool two = eval(equality_structure(2), phi), three = eval(equality_structure(3), phi);
            r.verification.checked = 2;
            if (! two)
                r.verification.fail("false on ([2]; =)");
            if (three)
                r.verification.fail("true on ([3]; =)");
            return r;
        }

        auto muhom_semantics() -> SuiteResult
        {
            SuiteResult r{"muhom-semantics",
                "multi-homomorphism formula holds exactly at multi-homomorphisms, all digraphs A, E of sizes 2 and 3, "
                "multiplicity 1 and 2",
                {}, {}, 0};
            auto structures = small_digraphs();
            for (auto & a : structures)
                for (auto & e : structures)
                    for (int n = 1; n <= 2; ++n)
                        r.verification.merge(verify_muhom_formula(a, e, n));
            r.notes.push_back(std::to_string(structures.size() * structures.size() * 2) + " instances");
            return r;
        }

        auto smuhom_semantics() -> SuiteResult
        {
            SuiteResult r{"smuhom-semantics",
                "surjective multi-homomorphism formula with three universal witnesses holds exactly at maps "
                "contained in an smuhom, digraph classes A, E of sizes 2 and 3, multiplicity 1 and 2",
                {}, {}, 0};
            auto structures = small_digraph_classes();
            for (auto & a : structures)
                for (auto & e : structures)
                    for (int n = 1; n <= 2; ++n)
                        r.verification.merge(verify_smuhom_formula(a, e, n, 3));
            r.notes.push_back(std::to_string(structures.size()) + " isomorphism class representatives, "
                + std::to_string(structures.size() * structures.size() * 2) + " instances");
            return r;
        }

        auto eao_dichotomy() -> SuiteResult
        {
            SuiteResult r{"eao-dichotomy",
                "{exists, and, or} templates over digraphs of sizes 2 and 3: in L iff a constant homomorphism exists, "
                "else NP-complete with a verified rainbow/not-all-equal definition",
                {}, {}, 0};
            auto structures = small_digraphs();
            std::map<std::pair<int, int>, TemplatePair> targets;
            for (int ka = 2; ka <= 3; ++ka)
                for (int kb = 2; kb <= 3; ++kb)
                    targets.emplace(std::pair{ka, kb}, rbnae_template(ka, kb));

            std::size_t templates = 0, easy = 0, hard = 0;
            for (auto & a : structures)
                for (auto & b : structures) {
                    TemplatePair t(a, b);
                    auto v = classify(t, fragments::eao);
                    if (v.label == Verdict::NotATemplate) {
                        if (find_homomorphism(a, b))
                            r.verification.fail("classified as not a template despite a homomorphism: " + pair_text(a, b));
                        continue;
                    }
                    ++templates;
                    ++r.verification.checked;
                    bool constant = exists_constant_homomorphism(a, b).has_value();
                    auto expected = constant ? Verdict::InL : Verdict::NPComplete;
                    if (v.label != expected)
                        r.verification.fail("label " + to_string(v.label) + " but expected " + to_string(expected) + ": "
                            + pair_text(a, b));
                    if (constant) {
                        ++easy;
                        continue;
                    }
                    ++hard;
                    ++r.verification.checked;
                    auto & target = targets.at({a.universe_size(), b.universe_size()});
                    if (! p_definable(t, target, fragments::eao))
                        r.verification.fail("some multi-homomorphism is not one of the rainbow/not-all-equal template: "
                            + pair_text(a, b));
                }
            r.notes.push_back(std::to_string(templates) + " templates: " + std::to_string(easy) + " in L, "
                + std::to_string(hard) + " NP-complete");
            return r;
        }

        auto algorithm_agreement() -> SuiteResult
        {
            SuiteResult r{"algorithm-agreement",
                "the NP, coNP and both-kinds algorithms agree with direct evaluation on every promise instance, "
                "digraph templates of sizes 2 and 3, special-form sentences with at most two blocks",
                {}, {}, 0};
            auto structures = small_digraphs();
            auto sentences = special_form_sentences();
            auto n_sent = sentences.size();
            vector<Formula> plain;
            for (auto & sf : sentences)
                plain.push_back(sf.to_formula());

            vector<vector<bool>> truth;
            for (auto & s : structures) {
                vector<bool> row;
                for (auto & f : plain)
                    row.push_back(eval(s, f));
                truth.push_back(std::move(row));
            }

            // Each algorithm reads only part of the template; results are cached by exactly those inputs.
            std::map<std::pair<std::size_t, Element>, vector<Answer>> np_cache, conp_cache;
            std::map<std::tuple<std::size_t, Element, int, Element>, vector<Answer>> ae_cache;
            auto np = [&](std::size_t i, Element a_star) -> const vector<Answer> & {
                auto [it, fresh] = np_cache.try_emplace({i, a_star});
                if (fresh)
                    for (auto & sf : sentences)
                        it->second.push_back(np_algorithm(structures[i], a_star, sf));
                return it->second;
            };
            auto conp = [&](std::size_t j, Element b_star) -> const vector<Answer> & {
                auto [it, fresh] = conp_cache.try_emplace({j, b_star});
                if (fresh)
                    for (auto & sf : sentences)
                        it->second.push_back(conp_algorithm(structures[j], b_star, sf));
                return it->second;
            };
            auto ae = [&](std::size_t i, Element a_star, int kb, Element b_star) -> const vector<Answer> & {
                auto [it, fresh] = ae_cache.try_emplace({i, a_star, kb, b_star});
                if (fresh)
                    for (auto & sf : sentences)
                        it->second.push_back(ae_fast_path(structures[i], a_star, kb, b_star, sf));
                return it->second;
            };

            std::size_t np_templates = 0, conp_templates = 0, ae_templates = 0, promise = 0;
            auto compare = [&](std::size_t i, std::size_t j, const vector<Answer> & got, const string & what) {
                for (std::size_t s = 0; s < n_sent; ++s) {
                    bool in_a = truth[i][s], in_b = truth[j][s];
                    if (! in_a && in_b)
                        continue;
                    ++promise;
                    ++r.verification.checked;
                    auto expected = in_a ? Answer::Yes : Answer::No;
                    if (got[s] != expected)
                        r.verification.fail(what + " answers " + to_string(got[s]) + " on " + to_string(plain[s]) + " for "
                            + pair_text(structures[i], structures[j]));
                }
            };

            for (std::size_t i = 0; i < structures.size(); ++i)
                for (std::size_t j = 0; j < structures.size(); ++j) {
                    auto & a = structures[i];
                    auto & b = structures[j];
                    auto p = smuhom_profile(a, b);
                    if (! p.is_template())
                        continue;
                    auto kb = b.universe_size();
                    if (p.forall_points)
                        ++np_templates;
                    for (auto a_star : set_elements(p.forall_points))
                        compare(i, j, np(i, a_star), "NP algorithm with a* = " + std::to_string(a_star));
                    if (p.exists_points)
                        ++conp_templates;
                    for (auto b_star : set_elements(p.exists_points))
                        compare(i, j, conp(j, b_star), "coNP algorithm with b* = " + std::to_string(b_star));
                    bool any = false;
                    for (Element a_star = 1; a_star <= a.universe_size(); ++a_star)
                        for (Element b_star = 1; b_star <= kb; ++b_star)
                            if (p.has_ae_pair(kb, a_star, b_star)) {
                                any = true;
                                compare(i, j, ae(i, a_star, kb, b_star),
                                    "both-kinds fast path with (a*, b*) = (" + std::to_string(a_star) + ","
                                        + std::to_string(b_star) + ")");
                            }
                    ae_templates += any;
                }
            r.notes.push_back(std::to_string(n_sent) + " sentences; templates with a forall-kind smuhom: "
                + std::to_string(np_templates) + ", exists-kind: " + std::to_string(conp_templates)
                + ", both at once: " + std::to_string(ae_templates));
            r.notes.push_back(std::to_string(promise) + " promise instance comparisons");
            return r;
        }

        auto digraph_combination() -> SuiteResult
        {
            SuiteResult r{"digraph-combine",
                "every digraph template of sizes 2 and 3 with smuhoms of both kinds has one of both kinds at once, "
                "and the digraph combination builds it",
                {}, {}, 0};
            auto structures = small_digraphs();
            std::size_t both = 0;
            for (auto & a : structures)
                for (auto & b : structures) {
                    auto p = smuhom_profile(a, b);
                    if (! p.forall || ! p.exists)
                        continue;
                    ++both;
                    r.verification.checked += 2;
                    if (! p.ae)
                        r.verification.fail("no smuhom of both kinds at once: " + pair_text(a, b));
                    // Combine every forall-kind with every exists-kind smuhom, not only the least ones.
                    for (auto & f : p.smuhoms) {
                        auto a_star = f.full_image_point();
                        if (! a_star)
                            continue;
                        for (auto & g : p.smuhoms) {
                            auto b_star = g.common_point();
                            if (! b_star)
                                continue;
                            ++r.verification.checked;
                            auto h = digraph_combine(f, *a_star, g, *b_star, a, b);
                            bool ok = h.is_surjective() && is_multi_homomorphism(h, a, b)
                                && ((h.full_image_point() && h.common_point()));
                            if (! ok)
                                r.verification.fail("combination of " + to_inline_string(f) + " and " + to_inline_string(g) + " gives "
                                    + to_inline_string(h) + ", not an smuhom of both kinds: " + pair_text(a, b));
                        }
                    }
                }
            r.notes.push_back(std::to_string(both) + " templates with smuhoms of both kinds");
            return r;
        }

        auto equality_gadget() -> SuiteResult
        {
            SuiteResult r{"eq-pspace-contract",
                "equality gadget contract for k = 3 on every family special-form sentence over one binary symbol",
                {}, {}, 0};
            auto sentences = special_form_sentences("Q");
            std::size_t true_in_two = 0;
            for (auto & sf : sentences) {
                r.verification.merge(verify_equality_gadget(sf, 3, "Q"));
                true_in_two += eval(equality_structure(2), sf.to_formula());
            }
            r.notes.push_back(std::to_string(sentences.size()) + " sentences, " + std::to_string(true_in_two)
                + " true in ([2]; =)");
            return r;
        }

        auto profile_examples() -> SuiteResult
        {
            SuiteResult r{"example-profiles",
                "smuhom kinds of the ternary, two-binary, unary and rainbow-complement examples", {}, {}, 0};
            struct Case
            {
                string name, a, b;
                bool forall, exists;
            };
            vector<Case> cases{
                {"ternary", "universe 3\nrel R 3\n1 2 3\nend\n",
                    "universe 3\nrel R 3\n1 2 3\n2 2 3\n3 2 3\n1 2 2\n2 2 2\nend\n", true, true},
                {"two binary", "universe 3\nrel R 2\n1 2\nend\nrel S 2\n1 3\nend\n",
                    "universe 3\nrel R 2\n1 2\n2 2\n3 2\nend\nrel S 2\n1 2\n1 3\n2 2\n2 3\n3 3\nend\n", true, true},
                {"unary", "universe 3\nrel P1 1\n1\nend\nrel P2 1\n2\nend\nrel P3 1\n3\nend\n",
                    "universe 3\nrel P1 1\n2\n3\nend\nrel P2 1\n1\n3\nend\nrel P3 1\n1\n2\nend\n", false, false},
                {"ternary product", "universe 3\nrel R 3\n1 2 3\nend\n",
                    "universe 3\nrel R 3\n2 1 1\n2 1 2\n2 3 1\n2 3 2\n3 1 1\n3 1 2\n3 3 1\n3 3 2\nend\n", false, false},
            };
            for (auto & c : cases) {
                auto a = parse_structure(c.a), b = parse_structure(c.b);
                auto p = smuhom_profile(a, b);
                // Recount by brute force over the enumerated list rather than trusting the summary fields.
                bool forall = false, exists = false, both = false;
                for (auto & f : p.smuhoms) {
                    forall = forall || f.full_image_point();
                    exists = exists || f.common_point();
                    both = both || (f.full_image_point() && f.common_point());
                }
                r.verification.checked += 4;
                auto describe = [&](bool got, bool want, const string & kind) {
                    if (got != want)
                        r.verification.fail(c.name + ": " + kind + (got ? " present" : " absent") + ", expected "
                            + (want ? "present" : "absent"));
                };
                if (p.smuhoms.empty())
                    r.verification.fail(c.name + ": no smuhom at all");
                describe(forall, c.forall, "forall-kind smuhom");
                describe(exists, c.exists, "exists-kind smuhom");
                describe(both, false, "smuhom of both kinds");
                if (forall != p.forall.has_value() || exists != p.exists.has_value() || both != p.ae.has_value())
                    r.verification.fail(c.name + ": profile summary disagrees with its smuhom list");
                r.notes.push_back(c.name + ": " + std::to_string(p.smuhoms.size()) + " smuhoms, forall-kind "
                    + (forall ? "yes" : "no") + ", exists-kind " + (exists ? "yes" : "no") + ", both at once "
                    + (both ? "yes" : "no"));
            }
            return r;
        }

        auto quotient() -> SuiteResult
        {
            SuiteResult r{"quotient",
                "complementation closures of digraph templates of sizes 2 and 3: smuhoms preserve indistinguishability "
                "and the two class maps are smuhoms",
                {}, {}, 0};
            auto structures = small_digraphs();
            std::size_t closed = 0;
            for (auto & a : structures)
                for (auto & b : structures) {
                    auto t = complementation_closure(TemplatePair(a, b));
                    if (! t.profile().is_template())
                        continue;
                    ++closed;
                    r.verification.merge(verify_quotient(t));
                }
            r.notes.push_back(std::to_string(closed) + " complementation-closed templates");
            return r;
        }

        auto dual_swap() -> SuiteResult
        {
            SuiteResult r{"dual-swap",
                "a sentence holds in a structure iff its dual fails in the complement, all digraphs of sizes 2 and 3",
                {}, {}, 0};
            auto structures = small_digraphs();
            auto sentences = special_form_sentences();
            for (auto & s : structures) {
                auto c = complement_structure(s);
                for (auto & sf : sentences) {
                    auto f = sf.to_formula();
                    ++r.verification.checked;
                    if (eval(s, f) == eval(c, dualize_formula(f)))
                        r.verification.fail("sentence " + to_string(f) + " and its dual agree on {" + one_line(s)
                            + "} and its complement");
                }
            }
            return r;
        }

        auto closure_semantics() -> SuiteResult
        {
            SuiteResult r{"closure-semantics",
                "closure formulas define the union of images of the tuple, digraph classes of sizes 2 and 3, "
                "tuples of length 1 and 2, both fragments",
                {}, {}, 0};
            auto structures = small_digraph_classes();
            for (auto & a : structures)
                for (auto & e : structures) {
                    vector<Tuple> tuples;
                    for (Element x = 1; x <= a.universe_size(); ++x) {
                        tuples.push_back({x});
                        for (Element y = 1; y <= a.universe_size(); ++y)
                            tuples.push_back({x, y});
                    }
                    for (auto & t : tuples) {
                        r.verification.merge(verify_closure_formula(a, e, t, fragments::eao));
                        if (t.size() == 1)
                            r.verification.merge(verify_closure_formula(a, e, t, fragments::eao_forall));
                    }
                }
            return r;
        }

        auto rbnae_pipeline() -> SuiteResult
        {
            SuiteResult r{"rbnae-pipeline",
                "rewriting rainbow/not-all-equal sentences into the template signature preserves promise answers, "
                "{exists, and, or} digraph templates with a two-element strong side and no constant homomorphism",
                {}, {}, 0};
            auto strong = digraphs(2);
            auto weak = small_digraph_classes();
            vector<Formula> sentences;
            vector<string> vars{"y1", "z1"};
            for_each_tuple(2, 4, [&](const Tuple & t) {
                vector<string> args;
                for (auto e : t)
                    args.push_back(vars[static_cast<std::size_t>(e - 1)]);
                sentences.push_back(Formula::exists("y1", Formula::exists("z1", Formula::atom("R", args))));
            });
            std::size_t templates = 0;
            for (auto & a : strong)
                for (auto & b : weak) {
                    if (! find_homomorphism(a, b) || exists_constant_homomorphism(a, b))
                        continue;
                    ++templates;
                    TemplatePair t(a, b);
                    auto target = rbnae_template(2, b.universe_size());
                    auto defs = rbnae_definitions(t);
                    for (auto & s : sentences)
                        r.verification.merge(
                            verify_rewrite(t, target, s, [&](const Formula & f) { return p_def_rewrite(f, defs); }));
                }
            r.notes.push_back(std::to_string(templates) + " templates, " + std::to_string(sentences.size()) + " sentences");
            return r;
        }

        struct Entry
        {
            string name;
            std::function<SuiteResult()> run;
        };

        auto registry() -> const vector<Entry> &
        {
            static const vector<Entry> entries{
                {"example-golden", example_golden},
                {"preservation", preservation},
                {"muhom-semantics", muhom_semantics},
                {"smuhom-semantics", smuhom_semantics},
                {"eao-dichotomy", eao_dichotomy},
                {"algorithm-agreement", algorithm_agreement},
                {"digraph-combine", digraph_combination},
                {"eq-pspace-contract", equality_gadget},
                {"example-profiles", profile_examples},
                {"quotient", quotient},
                {"dual-swap", dual_swap},
                {"closure-semantics", closure_semantics},
                {"rbnae-pipeline", rbnae_pipeline},
            };
            return entries;
        }
    }

    auto format_result(const SuiteResult & r) -> string
    {
        std::ostringstream out;
        out.precision(3);
        out << format_verification(r.name, r.verification);
        out << "  " << r.description << "\n";
        for (auto & n : r.notes)
            out << "  " << n << "\n";
        out << "  time: " << std::fixed << r.seconds << " s\n";
        return out.str();
    }

    auto suite_names() -> vector<string>
    {
        vector<string> out;
        for (auto & e : registry())
            out.push_back(e.name);
        return out;
    }

    auto run_suite(const string & name) -> SuiteResult
    {
        for (auto & e : registry())
            if (e.name == name) {
                auto start = std::chrono::steady_clock::now();
                auto r = e.run();
                r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                return r;
            }
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
}
