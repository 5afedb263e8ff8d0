#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "branching.hpp"
#include "center.hpp"
#include "structure_constants.hpp"
#include "theta_f2.hpp"

namespace blockcount
{

struct CriterionResult
{
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace selftest_detail
{

inline double run_timed(const std::function<void()> &fn)
{
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

inline Int pow2(int k) { return Int(1) << k; }

template <typename F>
CriterionResult run_criterion(int number, const std::string &name, F &&body)
{
    CriterionResult r;
    r.number = number;
    r.name = name;
    std::ostringstream detail;
    try
    {
        auto t0 = std::chrono::steady_clock::now();
        r.pass = body(detail);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    catch (const std::exception &e)
    {
        r.pass = false;
        detail << " exception: " << e.what();
    }
    r.detail = detail.str();
    return r;
}

/// All multisets of size <= max_size from the level alcove.
inline std::vector<std::vector<Labels>> insertion_multisets(const SimpleLieAlgebra &g,
                                                            int level, int max_size)
{
    auto alc = root_system(g).alcove(level);
    std::vector<std::vector<Labels>> out = {{}};
    size_t start = 0;
    for (int s = 1; s <= max_size; ++s)
    {
        size_t end = out.size();
        for (size_t i = start; i < end; ++i)
            for (const auto &w : alc)
            {
                if (!out[i].empty() && w < out[i].back())
                    continue; // non-decreasing representatives only
                auto next = out[i];
                next.push_back(w);
                out.push_back(std::move(next));
            }
        start = end;
    }
    return out;
}

} // namespace selftest_detail

inline CriterionResult criterion_spin_counts()
{
    using namespace selftest_detail;
    return run_criterion(1, "level-1 so Verlinde counts", [](std::ostringstream &out) {
        bool ok = true;
        for (int genus = 1; genus <= 4; ++genus)
        {
            Int d4 = 0, b3 = 0;
            double td = run_timed([&] {
                d4 = verlinde_dim_exact({make_algebra(Family::D, 4), 1, genus, {}});
            });
            double tb = run_timed([&] {
                b3 = verlinde_dim_exact({make_algebra(Family::B, 3), 1, genus, {}});
            });
            Int want_d4 = pow2(2 * genus);
            Int want_b3 = pow2(genus - 1) * (pow2(genus) + 1);
            bool here = d4 == want_d4 && b3 == want_b3 && td < 1.0 && tb < 1.0;
            ok = ok && here;
            out << " g=" << genus << ": D4=" << d4 << " B3=" << b3
                << (here ? "" : " MISMATCH");
        }
        return ok;
    });
}

inline CriterionResult criterion_adjoint_conformal()
{
    using namespace selftest_detail;
    return run_criterion(2, "adjoint embeddings are conformal", [](std::ostringstream &out) {
        std::vector<SimpleLieAlgebra> sweep;
        for (int r = 2; r <= 5; ++r)
            sweep.push_back(make_algebra(Family::A, r));
        for (int r = 2; r <= 4; ++r)
            sweep.push_back(make_algebra(Family::B, r));
        sweep.push_back(make_algebra(Family::C, 3));
        sweep.push_back(make_algebra(Family::D, 4));
        sweep.push_back(make_algebra(Family::D, 5));
        sweep.push_back(make_algebra(Family::G, 2));
        sweep.push_back(make_algebra(Family::F, 4));
        for (int r = 6; r <= 8; ++r)
            sweep.push_back(make_algebra(Family::E, r));
        bool ok = true;
        double total = run_timed([&] {
            for (const auto &g : sweep)
            {
                auto check = is_conformal(adjoint_embedding(g));
                bool here = check.conformal && check.lhs == check.rhs &&
                            check.index == Rat(dual_coxeter(g));
                ok = ok && here;
                if (!here)
                    out << " " << g.name() << " FAILED";
            }
        });
        out << " " << sweep.size() << " algebras in " << total << "s";
        return ok && total < 1.0;
    });
}

inline CriterionResult criterion_sl_composite_not_conformal()
{
    using namespace selftest_detail;
    return run_criterion(3, "composite through sl is not conformal",
                         [](std::ostringstream &out) {
                             bool ok = true;
                             for (const auto &g : {make_algebra(Family::A, 2),
                                                   make_algebra(Family::G, 2)})
                             {
                                 auto check = is_conformal(adjoint_into_sl(g));
                                 ok = ok && !check.conformal && check.lhs != check.rhs;
                                 out << " " << g.name() << "->sl: "
                                     << (check.conformal ? "conformal?!" : "not conformal");
                             }
                             return ok;
                         });
}

inline CriterionResult criterion_fusion_oracles()
{
    using namespace selftest_detail;
    return run_criterion(4, "Kac-Walton vs S-matrix oracles", [](std::ostringstream &out) {
        bool ok = true;
        // fusion coefficients entrywise
        std::vector<std::pair<SimpleLieAlgebra, int>> coeff_grid;
        for (int l = 1; l <= 4; ++l)
            coeff_grid.push_back({make_algebra(Family::A, 1), l});
        for (int l = 1; l <= 3; ++l)
            coeff_grid.push_back({make_algebra(Family::A, 2), l});
        long checked = 0;
        for (const auto &[g, l] : coeff_grid)
        {
            auto alc = root_system(g).alcove(l);
            for (const auto &a : alc)
                for (const auto &b : alc)
                {
                    auto fus = fuse(g, l, a, b);
                    for (const auto &c : alc)
                    {
                        auto it = fus.find(c);
                        Int exact = it == fus.end() ? Int(0) : it->second;
                        Int numeric = fusion_coefficient_from_s(g, l, a, b, c);
                        if (exact != numeric)
                        {
                            ok = false;
                            out << " coeff mismatch " << g.name() << " l=" << l;
                        }
                        ++checked;
                    }
                }
        }
        out << " " << checked << " coefficients";
        // dimensions on the block grid
        long dims = 0;
        for (const auto &g : {make_algebra(Family::A, 1), make_algebra(Family::A, 2),
                              make_algebra(Family::B, 3), make_algebra(Family::D, 4)})
            for (int l = 1; l <= 2; ++l)
                for (const auto &ins : insertion_multisets(g, l, 3))
                    for (int genus = 0; genus <= 3; ++genus)
                    {
                        VerlindeProblem p{g, l, genus, ins};
                        Int exact = verlinde_dim_exact(p);
                        Int numeric = verlinde_dim(p, 1e-6);
                        if (exact != numeric)
                        {
                            ok = false;
                            out << " dim mismatch " << g.name() << " l=" << l
                                << " genus=" << genus;
                        }
                        ++dims;
                    }
        out << ", " << dims << " dimensions";
        return ok;
    });
}

inline CriterionResult criterion_factorization_propagation()
{
    using namespace selftest_detail;
    return run_criterion(5, "factorization and vacuum propagation",
                         [](std::ostringstream &out) {
                             bool ok = true;
                             long points = 0;
                             for (const auto &g :
                                  {make_algebra(Family::A, 1), make_algebra(Family::A, 2),
                                   make_algebra(Family::B, 3), make_algebra(Family::D, 4)})
                                 for (int l = 1; l <= 2; ++l)
                                 {
                                     const RootSystem &rs = root_system(g);
                                     Labels vac(rs.rank(), 0);
                                     auto alc = rs.alcove(l);
                                     for (const auto &ins : insertion_multisets(g, l, 3))
                                         for (int genus = 0; genus <= 3; ++genus)
                                         {
                                             VerlindeProblem p{g, l, genus, ins};
                                             Int base = verlinde_dim(p);
                                             // propagation of vacua, numeric route
                                             VerlindeProblem pv = p;
                                             pv.insertions.push_back(vac);
                                             if (verlinde_dim(pv) != base ||
                                                 verlinde_dim_exact(pv) != verlinde_dim_exact(p))
                                                 ok = false;
                                             // factorization, numeric route (the exact
                                             // route factorizes by construction)
                                             if (genus >= 1)
                                             {
                                                 Int sum = 0;
                                                 for (const auto &mu : alc)
                                                 {
                                                     VerlindeProblem q{g, l, genus - 1,
                                                                       ins};
                                                     q.insertions.push_back(mu);
                                                     q.insertions.push_back(
                                                         dual_weight(g, mu));
                                                     sum += verlinde_dim(q);
                                                 }
                                                 if (sum != base)
                                                     ok = false;
                                             }
                                             ++points;
                                         }
                                 }
                             out << " " << points << " grid points";
                             return ok;
                         });
}

inline CriterionResult criterion_branching()
{
    using namespace selftest_detail;
    return run_criterion(6, "adjoint conformal branching for A2", [](std::ostringstream &out) {
        SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
        BranchingResult br{a2, 0, {}, {}};
        double t = run_timed([&] { br = branch_adjoint_vacuum(a2, 2); });
        Labels vac(2, 0);
        bool ok = br.head_mult(vac, 0) == 1 && br.clean() && t < 60.0;
        out << " vacuum multiplicity " << br.head_mult(vac, 0) << ", residual "
            << (br.clean() ? "0" : "nonzero") << ", " << t << "s; heads:";
        for (const auto &h : br.heads)
        {
            out << " [";
            for (size_t i = 0; i < h.weight.size(); ++i)
                out << (i ? "," : "") << h.weight[i];
            out << "]@" << h.offset << "x" << h.mult;
        }
        return ok;
    });
}

inline CriterionResult criterion_character_crosscheck()
{
    using namespace selftest_detail;
    return run_criterion(7, "graded character route agreement", [](std::ostringstream &out) {
        bool ok = true;
        long modules = 0;
        SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
        for (int l = 1; l <= 2; ++l)
            for (const auto &lam : root_system(a1).alcove(l))
            {
                try
                {
                    crosschecked_character(a1, l, lam, 4);
                }
                catch (const crosscheck_error &)
                {
                    ok = false;
                    out << " A1 l=" << l << " mismatch";
                }
                ++modules;
            }
        SimpleLieAlgebra d4 = make_algebra(Family::D, 4);
        for (const auto &lam : root_system(d4).alcove(1))
        {
            try
            {
                crosschecked_character(d4, 1, lam, 4);
            }
            catch (const crosscheck_error &)
            {
                ok = false;
                out << " D4 mismatch";
            }
            ++modules;
        }
        out << " " << modules << " modules to depth 4";
        return ok;
    });
}

inline CriterionResult criterion_theta_counts()
{
    using namespace selftest_detail;
    return run_criterion(8, "theta characteristics vs Verlinde", [](std::ostringstream &out) {
        bool ok = true;
        for (int genus = 1; genus <= 5; ++genus)
        {
            Int even = count_even(genus);
            Int want = pow2(genus - 1) * (pow2(genus) + 1);
            if (even != want)
            {
                ok = false;
                out << " count mismatch g=" << genus;
            }
            if (genus <= 4)
            {
                Int b3 = verlinde_dim_exact({make_algebra(Family::B, 3), 1, genus, {}});
                if (even != b3)
                {
                    ok = false;
                    out << " Verlinde mismatch g=" << genus;
                }
            }
        }
        // torsor action free and transitive
        for (int genus = 1; genus <= 3; ++genus)
        {
            SymplecticSpaceF2 space(genus);
            auto forms = enumerate_theta(space);
            for (const auto &q : forms)
            {
                std::set<uint32_t> images;
                for (F2Vector chi = 0; chi < space.vector_count(); ++chi)
                {
                    auto r = act_character(chi, q);
                    images.insert(r.basis_values);
                    if (chi != 0 && r == q)
                    {
                        ok = false;
                        out << " action not free g=" << genus;
                    }
                }
                if (images.size() != forms.size())
                {
                    ok = false;
                    out << " action not transitive g=" << genus;
                }
            }
        }
        out << " counts g<=5, torsor g<=3";
        return ok;
    });
}

inline CriterionResult criterion_projection_casimir()
{
    using namespace selftest_detail;
    return run_criterion(9, "projection and Casimir identities", [](std::ostringstream &out) {
        bool ok = true;
        for (const auto &g : {make_algebra(Family::A, 1), make_algebra(Family::A, 2),
                              make_algebra(Family::B, 2)})
        {
            auto sc = structure_constants(g);
            auto P = adjoint_projection(sc);
            const int d = sc.dimension;
            for (int k = 0; k < d && ok; ++k)
            {
                auto coef = P.apply(sc.ad(k));
                for (int i = 0; i < d; ++i)
                    if (coef[i] != (i == k ? 1 : 0))
                        ok = false;
            }
            auto K = killing_form(sc);
            auto gamma = casimir_tensor(sc).gamma;
            auto prod = rat_mul(gamma, K);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    if (prod[i][j] != (i == j ? 1 : 0))
                        ok = false;
            out << " " << g.name() << (ok ? " ok" : " FAILED");
        }
        return ok;
    });
}

inline CriterionResult criterion_center_action()
{
    using namespace selftest_detail;
    return run_criterion(10, "center swaps vacuum and vector; action laws",
                         [](std::ostringstream &out) {
                             bool ok = true;
                             // vacuum <-> vector swap at level 1
                             for (const auto &g : {make_algebra(Family::D, 4),
                                                   make_algebra(Family::B, 3)})
                             {
                                 const RootSystem &rs = root_system(g);
                                 Labels vac(rs.rank(), 0), vec(rs.rank(), 0);
                                 vec[0] = 1;
                                 bool found = false;
                                 for (const auto &sigma : center_group(g))
                                     if (!sigma.is_identity() &&
                                         act(sigma, 1, vac) == vec &&
                                         act(sigma, 1, vec) == vac)
                                         found = true;
                                 ok = ok && found;
                                 out << " " << g.name() << (found ? " swap" : " NO SWAP");
                             }
                             // group-action laws
                             std::vector<SimpleLieAlgebra> sweep;
                             for (int r = 1; r <= 5; ++r)
                                 sweep.push_back(make_algebra(Family::A, r));
                             for (int r = 2; r <= 5; ++r)
                                 sweep.push_back(make_algebra(Family::B, r));
                             for (int r = 3; r <= 5; ++r)
                                 sweep.push_back(make_algebra(Family::C, r));
                             sweep.push_back(make_algebra(Family::D, 4));
                             sweep.push_back(make_algebra(Family::D, 5));
                             sweep.push_back(make_algebra(Family::G, 2));
                             sweep.push_back(make_algebra(Family::F, 4));
                             for (const auto &g : sweep)
                             {
                                 const RootSystem &rs = root_system(g);
                                 auto group = center_group(g);
                                 for (int l = 1; l <= 3; ++l)
                                 {
                                     auto alc = rs.alcove(l);
                                     for (const auto &a : group)
                                     {
                                         std::set<Labels> image;
                                         for (const auto &w : alc)
                                             image.insert(act(a, l, w));
                                         if (image.size() != alc.size())
                                             ok = false;
                                         for (const auto &b : group)
                                         {
                                             auto ab = compose(a, b);
                                             for (const auto &w : alc)
                                                 if (act(ab, l, w) !=
                                                     act(a, l, act(b, l, w)))
                                                     ok = false;
                                         }
                                     }
                                 }
                             }
                             out << "; laws on " << sweep.size() << " algebras";
                             return ok;
                         });
}

inline std::vector<CriterionResult> run_acceptance_suite()
{
    return {criterion_spin_counts(),
            criterion_adjoint_conformal(),
            criterion_sl_composite_not_conformal(),
            criterion_fusion_oracles(),
            criterion_factorization_propagation(),
            criterion_branching(),
            criterion_character_crosscheck(),
            criterion_theta_counts(),
            criterion_projection_casimir(),
            criterion_center_action()};
}

} // namespace blockcount
