#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vclab {

// One self-contained verification check.  `pass` is meaningful only when
// `finished` is true; an unfinished check was cut off by the deadline.
struct CheckResult {
    std::string name;
    bool pass = false;
    bool finished = true;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool complete = true;  // every selected check ran to completion

    bool all_pass() const;
};

// Soft deadline handed into the long-running checks; they poll it between
// instances and stop early when it expires.
struct Deadline {
    bool unlimited = true;
    double budget_seconds = 0.0;
    long long start_ns = 0;

    static Deadline none();
    static Deadline after(double seconds);
    bool expired() const;
};

// The individual checks, one per acceptance criterion.  Each one is
// deterministic, self-timed, and independent of the others.
CheckResult check_mvc_oracle_agreement(const Deadline& dl = Deadline::none());
CheckResult check_ed_matching_identity(const Deadline& dl = Deadline::none());
CheckResult check_ed_factor_two(const Deadline& dl = Deadline::none());
CheckResult check_ged_size_law(const Deadline& dl = Deadline::none());
CheckResult check_gmdg_size_law(const Deadline& dl = Deadline::none());
CheckResult check_hath_certificates(const Deadline& dl = Deadline::none());
CheckResult check_hatg_instances(const Deadline& dl = Deadline::none());
CheckResult check_hatgr_instance(const Deadline& dl = Deadline::none());
CheckResult check_gadget_family(const Deadline& dl = Deadline::none());
CheckResult check_ratio_decider(const Deadline& dl = Deadline::none());

// Known suite names, in the order `all` runs them.
std::vector<std::string> verify_suites();

// Runs one suite: eq1 (g_ed size law), eq4 (g_mdg size law), thm1 (hath
// certificates), thm3r1 (hatg instances), thm3r2 (hatgr instance), lemma4
// (gadget family), oracles (solver cross-checks, the edge-deletion
// identity, the factor-2 sweep and the ratio decider), or all.  Progress
// lines go to `log`; the report flags incompleteness when the budget ran
// out.  Throws std::invalid_argument on an unknown suite name.
VerifyReport run_verify(const std::string& suite, double budget_seconds, std::ostream& log);

}  // namespace vclab
