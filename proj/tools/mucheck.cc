#include <mucheck/classifier.hh>
#include <mucheck/evaluator.hh>
#include <mucheck/guardrail.hh>
#include <mucheck/homomorphism.hh>
#include <mucheck/io.hh>
#include <mucheck/normalize.hh>
#include <mucheck/reductions.hh>
#include <mucheck/sweeps.hh>
#include <mucheck/template_pair.hh>
#include <mucheck/transform.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mucheck;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        ok = 0,
        failure = 1,
        parse_error = 2,
        type_error = 3,
        not_template = 4,
        trivial_fragment = 5,
        guardrail = 6
    };

    /// Exit code travelling with an exception, for errors detected by the command itself.
    struct Exit
    {
        int code;
        string message;
    };

    struct Options
    {
        bool json_like = false;
    };

    auto digest(const string & text) -> string
    {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : text) {
            h ^= c;
            h *= 1099511628211ull;
        }
        std::ostringstream out;
        out << std::hex << h;
        return out.str();
    }

    /// Line-oriented key: value records, or plain text, on stdout.
    class Report
    {
    public:
        Report(const Options & options, string command) :
            _options(options),
            _start(std::chrono::steady_clock::now())
        {
            record("command", command);
        }

        auto input(const string & path, const string & text) -> void { record("input", path + " " + digest(text)); }

        auto record(const string & key, const string & value) -> void
        {
            if (_options.json_like)
                _records.emplace_back(key, value);
        }

        auto text(const string & line) -> void
        {
            if (! _options.json_like)
                cout << line << (line.ends_with('\n') ? "" : "\n");
        }

        auto result(const string & key, const string & value) -> void
        {
            record(key, value);
            if (! _options.json_like)
                cout << value << (value.ends_with('\n') ? "" : "\n");
        }

        /// Like result, but plain text shows the key as well.
        auto field(const string & key, const string & value) -> void
        {
            record(key, value);
            if (! _options.json_like)
                cout << key << ": " << value << "\n";
        }

        ~Report()
        {
            if (! _options.json_like)
                return;
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - _start).count();
            _records.emplace_back("wall-time-ms", std::to_string(ms));
            for (auto & [k, v] : _records) {
                std::istringstream lines(v);
                string line;
                bool any = false;
                while (std::getline(lines, line)) {
                    cout << k << ": " << line << "\n";
                    any = true;
                }
                if (! any)
                    cout << k << ":\n";
            }
        }

    private:
        const Options & _options;
        std::chrono::steady_clock::time_point _start;
        vector<std::pair<string, string>> _records;
    };

    auto load_text(const string & path) -> string
    {
        try {
            return read_file(path);
        }
        catch (const std::exception & e) {
            throw Exit{failure, e.what()};
        }
    }

    auto load_structure(const string & path, Report & report) -> Structure
    {
        auto text = load_text(path);
        report.input(path, text);
        try {
            return parse_structure(text);
        }
        catch (const ParseError & e) {
            throw Exit{parse_error, path + ": " + e.what()};
        }
        catch (const StructureError & e) {
            throw Exit{parse_error, path + ": " + e.what()};
        }
    }

    auto load_formula(const string & path, const Signature & sig, Report & report) -> Formula
    {
        auto text = load_text(path);
        report.input(path, text);
        try {
            return parse_formula(text, &sig);
        }
        catch (const ParseError & e) {
            throw Exit{parse_error, path + ": " + e.what()};
        }
        catch (const FormulaError & e) {
            throw Exit{type_error, path + ": " + e.what()};
        }
    }

    auto load_pair(const string & a_path, const string & b_path, Report & report) -> TemplatePair
    {
        auto a = load_structure(a_path, report);
        auto b = load_structure(b_path, report);
        if (! similar(a, b))
            throw Exit{type_error, "structures " + a_path + " and " + b_path + " have different signatures"};
        return TemplatePair(a, b);
    }

    auto write_output(const string & path, const string & content) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw Exit{failure, "cannot write " + path};
        out << content;
    }

    auto print_verification(Report & report, const string & name, const Verification & v) -> bool
    {
        report.result("verification", format_verification(name, v));
        return v.ok();
    }

    auto parse_tuple(const string & text) -> Tuple
    {
        Tuple t;
        std::stringstream ss(text);
        string item;
        while (std::getline(ss, item, ',')) {
            try {
                t.push_back(std::stoi(item));
            }
            catch (const std::exception &) {
                throw Exit{parse_error, "malformed tuple '" + text + "'"};
            }
        }
        if (t.empty())
            throw Exit{parse_error, "empty tuple"};
        return t;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"mucheck: promise model checking over finite relational structures"};
    app.require_subcommand(1);
    Options options;
    app.add_flag("--json-like", options.json_like, "Print line-oriented key: value records");

    string structure_path, formula_path, a_path, b_path, fragment_text = "eao-forall", kind = "smuhom", suite,
                                                            gadget, out_path, tuple_text, against_path;
    bool witnesses = false, verify = false;
    std::size_t limit = 0;
    double max_candidates = default_candidate_limit;
    int n = 1, m = 0, d = 2, k = 3;

    auto check = app.add_subcommand("check", "Evaluate a sentence in a structure");
    check->add_option("structure", structure_path, "Structure file")->required();
    check->add_option("formula", formula_path, "Formula file")->required();
    check->add_flag("--witnesses", witnesses, "Also print witness functions for the special form");

    auto wit = app.add_subcommand("witnesses", "Print witness functions for a sentence");
    wit->add_option("structure", structure_path, "Structure file")->required();
    wit->add_option("formula", formula_path, "Formula file")->required();

    auto enumerate = app.add_subcommand("enumerate", "List homomorphisms, multi-homomorphisms or smuhoms");
    enumerate->add_option("a", a_path, "Source structure")->required();
    enumerate->add_option("b", b_path, "Target structure")->required();
    enumerate->add_option("--kind", kind, "hom, muhom or smuhom")->check(CLI::IsMember({"hom", "muhom", "smuhom"}));
    enumerate->add_option("--limit", limit, "Stop after this many maps (0: all)");
    enumerate->add_option("--max-candidates", max_candidates, "Refuse searches over more candidate maps");

    auto profile = app.add_subcommand("profile", "Summarize the smuhoms of a template");
    profile->add_option("a", a_path, "Strong structure")->required();
    profile->add_option("b", b_path, "Weak structure")->required();
    profile->add_option("--max-candidates", max_candidates, "Refuse searches over more candidate maps");

    auto classify_cmd = app.add_subcommand("classify", "Classify the promise model checking problem of a template");
    classify_cmd->add_option("a", a_path, "Strong structure")->required();
    classify_cmd->add_option("b", b_path, "Weak structure")->required();
    classify_cmd->add_option("--fragment", fragment_text, "ea, eao, eaforall, eao-forall, with -eq, -neq, -neg");
    classify_cmd->add_option("--max-candidates", max_candidates, "Refuse searches over more candidate maps");

    auto reduce = app.add_subcommand("reduce", "Generate formulas and structures of the reductions");
    reduce->add_option("--gadget", gadget, "Construction")
        ->required()
        ->check(CLI::IsMember({"endo", "muhom", "smuhom", "closure", "rbnae", "eq-pspace", "dual", "quotient"}));
    reduce->add_option("--structure", structure_path, "Source structure (endo, muhom, smuhom, closure)");
    reduce->add_option("--a", a_path, "Strong structure (dual, quotient)");
    reduce->add_option("--b", b_path, "Weak structure (dual, quotient)");
    reduce->add_option("--formula", formula_path, "Sentence (eq-pspace)");
    reduce->add_option("--against", against_path, "Structure to verify the semantics in (default: the source)");
    reduce->add_option("--n", n, "Multiplicity, or arity for rbnae");
    reduce->add_option("--m", m, "Universal witnesses for smuhom formulas");
    reduce->add_option("--d", d, "Universe size for rbnae");
    reduce->add_option("--k", k, "Strong universe size for eq-pspace");
    reduce->add_option("--tuple", tuple_text, "Tuple for closure, e.g. 1,2");
    reduce->add_option("--fragment", fragment_text, "Fragment for closure");
    reduce->add_option("--out", out_path, "Output path (prefix for multi-file outputs)");
    reduce->add_flag("--verify", verify, "Run the paired semantic check");

    auto verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    string suites_help = "Suite name or all:";
    for (auto & s : sweeps::suite_names())
        suites_help += " " + s;
    verify_cmd->add_option("--suite", suite, suites_help)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : parse_error;
    }

    try {
        if (*check || *wit) {
            Report report(options, check->parsed() ? "check" : "witnesses");
            auto s = load_structure(structure_path, report);
            auto f = load_formula(formula_path, s.signature(), report);
            if (! is_sentence(f))
                throw Exit{type_error, "formula has free variables; a sentence is needed"};
            bool truth = eval(s, f);
            if (*check)
                report.result("result", truth ? "true" : "false");
            if (*wit || witnesses) {
                if (fragment_of(f).contains(Connective::Not))
                    throw Exit{type_error, "witness tables need a negation-free sentence"};
                auto sf = to_special_form(f);
                report.text("special form: " + to_string(sf.to_formula()));
                report.record("special-form", to_string(sf.to_formula()));
                if (auto w = find_witnesses(s, sf))
                    report.result("witnesses", to_string(*w));
                else
                    report.result("witnesses", "none: the sentence is false");
            }
            return ok;
        }

        if (*enumerate) {
            Report report(options, "enumerate");
            auto a = load_structure(a_path, report);
            auto b = load_structure(b_path, report);
            if (! similar(a, b))
                throw Exit{type_error, "structures have different signatures"};
            check_candidate_budget("enumeration", mvf_candidate_count(a.universe_size(), b.universe_size()), max_candidates);
            std::size_t count = 0;
            string listing;
            auto visit = [&](const MultiValuedFunction & f) {
                ++count;
                listing += to_inline_string(f) + "\n";
                return limit == 0 || count < limit;
            };
            if (kind == "hom")
                for (auto & h : enumerate_homomorphisms(a, b)) {
                    if (! visit(MultiValuedFunction::from_function(b.universe_size(), h)))
                        break;
                }
            else if (kind == "muhom")
                for_each_multi_homomorphism(a, b, visit);
            else
                for_each_smuhom(a, b, visit);
            report.result("maps", listing.empty() ? "none" : listing);
            report.field("count", std::to_string(count));
            return ok;
        }

        if (*profile) {
            Report report(options, "profile");
            auto t = load_pair(a_path, b_path, report);
            check_candidate_budget("smuhom profile", mvf_candidate_count(t.a().universe_size(), t.b().universe_size()),
                max_candidates);
            auto & p = t.profile();
            report.field("smuhoms", std::to_string(p.smuhoms.size()));
            auto show = [&](const string & key, bool present, const string & detail) {
                report.field(key, present ? "yes " + detail : "no");
            };
            show("has-forall", p.forall.has_value(),
                p.forall ? "a*=" + std::to_string(p.forall->a_star) + " " + to_inline_string(p.smuhoms[p.forall->smuhom]) : "");
            show("has-exists", p.exists.has_value(),
                p.exists ? "b*=" + std::to_string(p.exists->b_star) + " " + to_inline_string(p.smuhoms[p.exists->smuhom]) : "");
            show("has-ae", p.ae.has_value(),
                p.ae ? "a*=" + std::to_string(p.ae->a_star) + " b*=" + std::to_string(p.ae->b_star) + " "
                        + to_inline_string(p.smuhoms[p.ae->smuhom])
                     : "");
            return ok;
        }

        if (*classify_cmd) {
            Report report(options, "classify");
            Fragment l;
            try {
                l = parse_fragment(fragment_text);
            }
            catch (const FormulaError & e) {
                throw Exit{parse_error, e.what()};
            }
            auto t = load_pair(a_path, b_path, report);
            check_candidate_budget("classification", mvf_candidate_count(t.a().universe_size(), t.b().universe_size()),
                max_candidates);
            auto v = classify(t, l);
            report.result("report", format_report(v));
            if (v.trivial_fragment)
                return trivial_fragment;
            if (v.label == Verdict::NotATemplate)
                return not_template;
            return ok;
        }

        if (*reduce) {
            Report report(options, "reduce --gadget " + gadget);
            auto emit = [&](const string & suffix, const string & content) {
                if (out_path.empty())
                    report.result("output" + (suffix.empty() ? string() : " " + suffix), content);
                else {
                    auto path = out_path + suffix;
                    write_output(path, content);
                    report.result("wrote", path);
                }
            };
            auto need = [&](const string & value, const string & flag) {
                if (value.empty())
                    throw Exit{parse_error, "--gadget " + gadget + " needs " + flag};
            };
            bool passed = true;

            if (gadget == "endo" || gadget == "muhom" || gadget == "smuhom" || gadget == "closure") {
                need(structure_path, "--structure");
                auto a = load_structure(structure_path, report);
                auto e = against_path.empty() ? a : load_structure(against_path, report);
                if (! similar(a, e))
                    throw Exit{type_error, "verification structure has a different signature"};
                if (gadget == "endo") {
                    emit("", format_generated(endo_formula(a)));
                    if (verify)
                        passed = print_verification(report, "homomorphism formula", verify_endo_formula(a, e));
                }
                else if (gadget == "muhom") {
                    emit("", format_generated(muhom_formula(a, n)));
                    if (verify)
                        passed = print_verification(report, "multi-homomorphism formula", verify_muhom_formula(a, e, n));
                }
                else if (gadget == "smuhom") {
                    auto mm = m > 0 ? m : std::max(a.universe_size(), e.universe_size());
                    emit("", format_generated(smuhom_formula(a, n, mm)));
                    if (verify)
                        passed = print_verification(report, "surjective multi-homomorphism formula",
                            verify_smuhom_formula(a, e, n, mm));
                }
                else {
                    need(tuple_text, "--tuple");
                    auto t = parse_tuple(tuple_text);
                    auto l = parse_fragment(fragment_text);
                    auto mm = m > 0 ? m : std::max(a.universe_size(), e.universe_size());
                    emit("", format_generated(closure_formula(a, t, l, 0, mm)));
                    if (verify)
                        passed = print_verification(report, "closure formula", verify_closure_formula(a, e, t, l));
                }
            }
            else if (gadget == "rbnae") {
                auto rb = rainbow_structure(d, n);
                auto nae = nae_structure(d, n);
                auto header = [&](const string & what, const Structure & s) {
                    return "# " + what + " relation on [" + std::to_string(d) + "], arity " + std::to_string(n) + ", "
                        + std::to_string(s.relation(0).size()) + " tuples\n" + format_structure(s);
                };
                emit("_rainbow.txt", header("rainbow", rb));
                emit("_nae.txt", header("not-all-equal", nae));
                if (verify) {
                    Verification v;
                    for_each_tuple(d, n, [&](const Tuple & t) {
                        ElementSet seen = 0;
                        for (auto e : t)
                            seen |= singleton(e);
                        ++v.checked;
                        if ((seen == full_set(d)) != rb.relation(0).contains(t))
                            v.fail("rainbow membership of " + to_string(t));
                        ++v.checked;
                        if ((set_size(seen) > 1) != nae.relation(0).contains(t))
                            v.fail("not-all-equal membership of " + to_string(t));
                    });
                    passed = print_verification(report, "rainbow and not-all-equal relations", v);
                }
            }
            else if (gadget == "eq-pspace") {
                need(formula_path, "--formula");
                auto sig = Signature({{"Q", 2}});
                auto f = load_formula(formula_path, sig, report);
                if (! is_sentence(f) || fragment_of(f).contains(Connective::Not))
                    throw Exit{type_error, "the gadget needs a negation-free sentence over Q"};
                auto sf = to_special_form(f);
                emit("", format_generated(equality_pspace_gadget(sf, k)));
                if (verify)
                    passed = print_verification(report, "equality gadget contract", verify_equality_gadget(sf, k));
            }
            else if (gadget == "dual") {
                need(a_path, "--a");
                need(b_path, "--b");
                auto t = load_pair(a_path, b_path, report);
                auto dual = dual_template(t);
                emit("_a.txt", "# complement of the weak side\n" + format_structure(dual.a()));
                emit("_b.txt", "# complement of the strong side\n" + format_structure(dual.b()));
                if (verify) {
                    Verification v;
                    auto back = dual_template(dual);
                    ++v.checked;
                    if (! (back == t))
                        v.fail("dualizing twice does not give the template back");
                    if (! formula_path.empty()) {
                        auto f = load_formula(formula_path, t.signature(), report);
                        v.merge(verify_dual_swap(t, f));
                    }
                    passed = print_verification(report, "dual template", v);
                }
            }
            else {
                need(a_path, "--a");
                need(b_path, "--b");
                auto t = load_pair(a_path, b_path, report);
                auto q = quotient_reduction(t);
                auto classes = [](const IndistinguishabilityPartition & p) {
                    string out;
                    for (auto & block : p.blocks) {
                        out += "{";
                        for (std::size_t i = 0; i < block.size(); ++i)
                            out += (i ? "," : "") + std::to_string(block[i]);
                        out += "} ";
                    }
                    return out;
                };
                report.field("classes-a", classes(q.partition_a));
                report.field("classes-b", classes(q.partition_b));
                emit("_c.txt", "# indistinguishability on the strong side\n" + format_structure(q.indistinguishability.a()));
                emit("_d.txt", "# indistinguishability on the weak side\n" + format_structure(q.indistinguishability.b()));
                emit("_e.txt", "# equality on the classes of the strong side\n" + format_structure(q.equality.a()));
                emit("_f.txt", "# equality on the classes of the weak side\n" + format_structure(q.equality.b()));
                emit("_maps.txt", "# classes onto the strong side\n" + to_string(q.classes_onto_a)
                        + "# weak side onto its classes\n" + to_string(q.b_onto_classes));
                if (verify)
                    passed = print_verification(report, "quotient", verify_quotient(t));
            }
            return passed ? ok : failure;
        }

        if (*verify_cmd) {
            Report report(options, "verify --suite " + suite);
            vector<string> names;
            if (suite == "all")
                names = sweeps::suite_names();
            else
                names.push_back(suite);
            bool passed = true;
            for (auto & name : names) {
                sweeps::SuiteResult r;
                try {
                    r = sweeps::run_suite(name);
                }
                catch (const std::invalid_argument & e) {
                    throw Exit{parse_error, e.what()};
                }
                report.result("suite", format_result(r));
                passed = passed && r.verification.ok();
            }
            return passed ? ok : failure;
        }
    }
    catch (const Exit & e) {
        cerr << "mucheck: " << e.message << "\n";
        return e.code;
    }
    catch (const GuardrailExceeded & e) {
        cerr << "mucheck: guardrail: " << e.what() << "\n";
        return guardrail;
    }
    catch (const ParseError & e) {
        cerr << "mucheck: parse error: " << e.what() << "\n";
        return parse_error;
    }
    catch (const FormulaError & e) {
        cerr << "mucheck: " << e.what() << "\n";
        return type_error;
    }
    catch (const std::exception & e) {
        cerr << "mucheck: " << e.what() << "\n";
        return failure;
    }
    return ok;
}
