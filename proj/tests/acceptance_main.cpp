// Acceptance suite: one line per criterion, each an exact integer check.
// Exit code 0 only if every numbered criterion passes.
//
// Criterion 7 is run exactly as claimed (every admissible characteristic
// class has strictly positive square).  That claim has a boundary
// counterexample at nine blow-ups: the null class (3,1,...,1) with
// dimension zero and square zero.  The sweep reports it and the criterion
// fails honestly; the supplementary no-wall sweep verifies the statement
// that actually holds (no admissible class has negative square, so no wall
// meets the positive cone).

#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "rbd/repro.hpp"

int main() {
    std::vector<rbd::ReproCheck> checks = rbd::bundled_checks();

    struct Row {
        bool pass = true;
        std::vector<std::string> failures;
        int subchecks = 0;
    };
    std::map<int, Row> rows;
    std::vector<std::pair<std::string, rbd::CheckOutcome>> supplementary;

    for (const auto& c : checks) {
        rbd::CheckOutcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("error: ") + e.what()};
        }
        if (c.criterion < 0) {
            supplementary.emplace_back(c.name, out);
            continue;
        }
        Row& row = rows[c.criterion];
        ++row.subchecks;
        if (!out.pass) {
            row.pass = false;
            row.failures.push_back(c.name + ": " + out.detail);
        }
    }

    static const char* kLabel[12] = {
        nullptr,
        "boundary order 81 with torsion (1,1,3,27)",
        "family boundary orders (4r+1)^2 for r = 2,4,6,8,10",
        "all three trees negative definite",
        "blow-down fingerprints and their five identifications",
        "crossing-class condition reports (1,6,-1) and (2,7,-2)",
        "dimension zero, wall present, crossing magnitude 1",
        "unique chamber: strict positive-square sweep (exhaustive)",
        "monodromy identities, powers and the three censuses",
        "configuration search and the smoothing law",
        "seifert cross-check 81 and family round-trips",
        "randomized property suites, 1000 cases each",
    };

    int failed = 0;
    for (int k = 1; k <= 11; ++k) {
        const Row& row = rows[k];
        std::printf("criterion %2d: %-55s %s (%d checks)\n", k, kLabel[k],
                    row.pass ? "PASS" : "FAIL", row.subchecks);
        if (!row.pass) {
            ++failed;
            for (const auto& f : row.failures) std::printf("              %s\n", f.c_str());
        }
    }

    std::printf("supplementary:\n");
    for (const auto& [name, out] : supplementary)
        std::printf("              %s: %s -- %s\n", name.c_str(), out.pass ? "PASS" : "FAIL",
                    out.detail.c_str());

    std::printf("%d of 11 criteria pass\n", 11 - failed);
    if (failed) {
        std::printf("note: the strict positivity sweep fails only on null classes at nine\n"
                    "blow-ups; those admit no wall, as the supplementary checks verify.\n");
    }
    return failed == 0 ? 0 : 1;
}
