// Runs the acceptance criteria as exhaustive sweeps and prints one line per criterion.
//
//     mucheck_acceptance            # all criteria
//     mucheck_acceptance 3 7        # selected criteria
//     mucheck_acceptance --verbose  # also the sweep summaries

#include <mucheck/reductions.hh>
#include <mucheck/sweeps.hh>

#include <cstring>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace mucheck;

namespace
{
    struct Criterion
    {
        int number;
        std::string suite;
        std::string claim;
        double budget_seconds;
    };

    auto criteria() -> const std::vector<Criterion> &
    {
        static const std::vector<Criterion> list{
            {1, "example-golden", "equality example true on [2], false on [3]", 1},
            {2, "preservation", "multi-homomorphisms and smuhoms preserve the sentence families", 300},
            {3, "muhom-semantics", "multi-homomorphism formula is exact", 0},
            {4, "smuhom-semantics", "smuhom formula is exact for m = 3", 0},
            {5, "eao-dichotomy", "existential positive dichotomy with rainbow/NAE witnesses", 0},
            {6, "algorithm-agreement", "promise algorithms agree with the reference decision", 0},
            {7, "digraph-combine", "both smuhom kinds combine on digraphs", 0},
            {8, "eq-pspace-contract", "equality gadget contract for k = 3", 600},
            {9, "example-profiles", "smuhom kind profiles of the worked examples", 0},
            {10, "quotient", "smuhoms preserve indistinguishability, quotient maps verify", 0},
        };
        return list;
    }
}

auto main(int argc, char * argv[]) -> int
{
    bool verbose = false;
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (0 == std::strcmp(argv[i], "--verbose"))
            verbose = true;
        else
            selected.insert(std::stoi(argv[i]));
    }

    int failed = 0;
    for (auto & c : criteria()) {
        if (! selected.empty() && ! selected.contains(c.number))
            continue;
        sweeps::SuiteResult r;
        std::string error;
        try {
            r = sweeps::run_suite(c.suite);
        }
        catch (const std::exception & e) {
            error = e.what();
        }
        bool in_budget = c.budget_seconds <= 0 || r.seconds <= c.budget_seconds;
        bool pass = error.empty() && r.verification.ok() && in_budget;
        if (! pass)
            ++failed;

        std::cout << (pass ? "PASS" : "FAIL") << " AC" << c.number << " " << c.suite << ": " << c.claim << " ("
                  << r.verification.checked << " checks, " << r.verification.failures.size() << " failures, "
                  << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (! error.empty())
            std::cout << " error: " << error;
        if (! in_budget)
            std::cout << " over the " << c.budget_seconds << " s budget";
        std::cout << std::endl;
        if (verbose || ! pass)
            std::cout << sweeps::format_result(r);
    }
    return failed == 0 ? 0 : 1;
}
