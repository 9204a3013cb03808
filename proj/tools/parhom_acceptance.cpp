// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include <CLI11.hpp>
#include <iostream>

#include "parhom/selfcheck.hpp"

int main(int argc, char** argv) {
    CLI::App app{"parhom acceptance criteria"};
    parhom::SelfcheckOptions opt;
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--only", opt.only, "criteria to run (1-10)")->check(CLI::Range(1, parhom::kCriterionCount));
    app.add_option("--exhaustive-max", opt.exhaustive_max_order, "largest order in the exhaustive sweep")
        ->check(CLI::Range(2, 12));
    CLI11_PARSE(app, argc, argv);

    auto report = parhom::run_selfcheck(opt);
    std::cout << report.text(true);
    std::cout << (report.ok() ? "all criteria passed" : "some criteria failed") << '\n';
    return report.ok() ? 0 : 1;
}
