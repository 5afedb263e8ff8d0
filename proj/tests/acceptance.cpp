#include <cstdio>
#include <functional>
#include <vector>

#include <blockcount/selftest.hpp>

int main()
{
    using blockcount::CriterionResult;
    std::vector<std::function<CriterionResult()>> criteria = {
        blockcount::criterion_spin_counts,
        blockcount::criterion_adjoint_conformal,
        blockcount::criterion_sl_composite_not_conformal,
        blockcount::criterion_fusion_oracles,
        blockcount::criterion_factorization_propagation,
        blockcount::criterion_branching,
        blockcount::criterion_character_crosscheck,
        blockcount::criterion_theta_counts,
        blockcount::criterion_projection_casimir,
        blockcount::criterion_center_action,
    };
    bool all = true;
    for (const auto &fn : criteria)
    {
        CriterionResult r = fn();
        std::printf("criterion %d: %s (%s)%s [%.2fs]\n", r.number,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
