#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rbd {

// One re-derivable claim: an operation, its inputs, the expected value.
// Provenance says where the expected value comes from: stated by the
// reference construction, derived by an independent computation here, or
// true by definition/arithmetic.
enum class Provenance { stated, derived, definitional };

const char* to_string(Provenance p);

struct CheckOutcome {
    bool pass = false;
    std::string detail;
};

struct ReproCheck {
    int criterion; // acceptance criterion number; -1 for supplementary checks
    std::string name;
    std::string source; // anchor naming the claim being re-derived
    Provenance provenance;
    std::function<CheckOutcome()> run;
};

// The bundled manifest: every acceptance check, self-contained (no files).
std::vector<ReproCheck> bundled_checks();

// External manifests: {"checks":[{"name":...,"op":...,...},...]}, with any
// file paths resolved relative to the manifest location.
std::vector<ReproCheck> load_manifest(const std::string& path);

struct ReproReport {
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

// Runs every check in order, one report line each (text or JSON).
ReproReport run_checks(const std::vector<ReproCheck>& checks, std::ostream& out,
                       bool json_format = false);

// Deterministic randomized property suites (fixed seeds).  Suites:
// bilinearity, characteristic_congruence, snf_chain, blowup_pairing,
// wallcross_involution, sl2_det_closure.
CheckOutcome run_property_suite(const std::string& suite, int cases);

} // namespace rbd
