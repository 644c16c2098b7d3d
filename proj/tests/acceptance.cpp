/// Acceptance gate: runs every reference check and prints one PASS/FAIL line
/// per criterion, with indented diagnostic detail. Exits nonzero if any
/// requested criterion fails.

#include "fanocascade/checks.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

void print_result(const fano::CheckResult& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
    if (!r.detail.empty()) {
        std::istringstream lines(r.detail);
        std::string line;
        while (std::getline(lines, line)) {
            std::cout << "  " << line << "\n";
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }

    bool all_pass = true;
    if (criterion != 0) {
        fano::CheckResult r = fano::run_criterion(criterion);
        print_result(r);
        all_pass = r.pass;
    } else {
        for (const fano::CheckResult& r : fano::run_all_criteria()) {
            print_result(r);
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}
