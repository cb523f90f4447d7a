// Acceptance battery: runs the twelve verification criteria and prints one
// pass/fail line per criterion. Exit status is nonzero iff any criterion
// fails. NHV_DEGREE_BOUND overrides the default degree bounds.
#include "ennil/suite.hpp"

#include <cstdio>

int main() {
    auto bounds = ennil::suite_bounds_from_env();
    auto criteria = ennil::run_acceptance(bounds);
    int failures = 0;
    for (auto &c : criteria) {
        bool ok = c.rep.passed();
        if (!ok) ++failures;
        std::printf("criterion %2d (%s): %s  [%ld checks, %ld ms]\n", c.id,
                    c.name.c_str(), ok ? "PASS" : "FAIL",
                    static_cast<long>(c.rep.checks.size()), c.rep.timing_ms);
        if (!ok)
            for (auto &ch : c.rep.checks)
                if (!ch.equal)
                    std::printf("    failed: %s | lhs=%s | rhs=%s | %s\n",
                                ch.name.c_str(), ch.lhs.c_str(),
                                ch.rhs.c_str(), ch.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
