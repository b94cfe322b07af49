#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthokit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance suite (11 criteria). Each criterion also enforces
/// its own runtime budget.
std::vector<CriterionResult> run_acceptance();

/// Prints one line per criterion; returns 0 iff every criterion passed.
int print_acceptance(std::ostream& os);

}  // namespace orthokit
