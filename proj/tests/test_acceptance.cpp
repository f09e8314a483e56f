#include <cstdio>

#include <hopfoid/acceptance.hpp>

// Runs every acceptance criterion and prints one pass/fail line per
// criterion.  Exit status 0 iff all of them pass.
int main() {
    hopfoid::AcceptanceReport rep = hopfoid::run_acceptance();
    std::fputs(rep.table().c_str(), stdout);
    return rep.all_pass ? 0 : 1;
}
