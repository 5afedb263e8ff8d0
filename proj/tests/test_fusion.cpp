#include <catch2/catch_amalgamated.hpp>

#include <blockcount/smatrix.hpp>

using namespace blockcount;

TEST_CASE("classical tensor decomposition")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    WeightVector cg = tensor_decompose(a1, {1}, {1});
    CHECK(cg == WeightVector{{{0}, 1}, {{2}, 1}});
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    CHECK(tensor_decompose(a2, {1, 0}, {0, 1}) ==
          WeightVector{{{0, 0}, 1}, {{1, 1}, 1}});
    CHECK(tensor_decompose(a2, {1, 1}, {0, 0}) == WeightVector{{{1, 1}, 1}});
    // dimension bookkeeping on a bigger product
    WeightVector adj2 = tensor_decompose(a2, {1, 1}, {1, 1});
    const RootSystem &rs = root_system(a2);
    Int total = 0;
    for (const auto &[w, m] : adj2)
        total += m * rs.weyl_dim(w);
    CHECK(total == 64);
    CHECK(adj2.at({0, 0}) == 1);
    CHECK(adj2.at({1, 1}) == 2);
}

TEST_CASE("level fusion")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    CHECK(fuse(a1, 1, {1}, {1}) == WeightVector{{{0}, 1}});
    CHECK(fuse(a1, 2, {1}, {1}) == WeightVector{{{0}, 1}, {{2}, 1}});
    CHECK(fuse(a1, 2, {2}, {2}) == WeightVector{{{0}, 1}});
    CHECK_THROWS_AS(fuse(a1, 1, {2}, {1}), domain_error);
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    for (int l = 1; l <= 2; ++l)
    {
        const RootSystem &rs = root_system(a2);
        Labels vac(2, 0);
        auto alc = rs.alcove(l);
        for (const auto &a : alc)
        {
            CHECK(fuse(a2, l, a, vac) == WeightVector{{a, 1}});
            // duality pairing: vacuum appears exactly once
            CHECK(fuse(a2, l, a, rs.dual(a)).at(vac) == 1);
            for (const auto &b : alc)
            {
                auto ab = fuse(a2, l, a, b);
                CHECK(ab == fuse(a2, l, b, a));
                for (const auto &[w, m] : ab)
                    CHECK(rs.level_pairing(w) <= l);
            }
        }
        // associativity
        for (const auto &a : alc)
            for (const auto &b : alc)
                for (const auto &c : alc)
                {
                    WeightVector left, right;
                    for (const auto &[w, m] : fuse(a2, l, a, b))
                        for (const auto &[v, k] : fuse(a2, l, w, c))
                            left[v] += m * k;
                    for (const auto &[w, m] : fuse(a2, l, b, c))
                        for (const auto &[v, k] : fuse(a2, l, a, w))
                            right[v] += m * k;
                    CHECK(left == right);
                }
    }
}

TEST_CASE("dual weights")
{
    CHECK(dual_weight(make_algebra(Family::A, 1), {1}) == Labels{1});
    CHECK(dual_weight(make_algebra(Family::A, 2), {1, 0}) == Labels{0, 1});
    CHECK(dual_weight(make_algebra(Family::A, 2), {0, 0}) == Labels{0, 0});
    CHECK(dual_weight(make_algebra(Family::B, 3), {0, 0, 1}) == Labels{0, 0, 1});
}

TEST_CASE("S-matrix values and unitarity")
{
    const SMatrix &s = s_matrix(make_algebra(Family::A, 1), 1);
    REQUIRE(s.size() == 2);
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s(0, 0) - r) < 1e-12);
    CHECK(std::abs(s(0, 1) - r) < 1e-12);
    CHECK(std::abs(s(1, 0) - r) < 1e-12);
    CHECK(std::abs(s(1, 1) + r) < 1e-12);
    CHECK(s.unitarity_defect() < 1e-9);

    const SMatrix &b3 = s_matrix(make_algebra(Family::B, 3), 1);
    REQUIRE(b3.size() == 3);
    std::vector<double> row;
    for (size_t i = 0; i < 3; ++i)
    {
        CHECK(std::abs(b3(0, i).imag()) < 1e-12);
        row.push_back(b3(0, i).real());
    }
    std::sort(row.begin(), row.end());
    CHECK(std::abs(row[0] - 0.5) < 1e-9);
    CHECK(std::abs(row[1] - 0.5) < 1e-9);
    CHECK(std::abs(row[2] - 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(b3.unitarity_defect() < 1e-9);
    // symmetry
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(std::abs(b3(i, j) - b3(j, i)) < 1e-9);
}

TEST_CASE("Verlinde dimensions")
{
    SimpleLieAlgebra d4 = make_algebra(Family::D, 4);
    SimpleLieAlgebra b3 = make_algebra(Family::B, 3);
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    VerlindeProblem pd{d4, 1, 2, {}};
    CHECK(verlinde_dim_exact(pd) == 16);
    CHECK(verlinde_dim(pd) == 16);
    VerlindeProblem pb{b3, 1, 2, {}};
    CHECK(verlinde_dim_exact(pb) == 10);
    CHECK(verlinde_dim(pb) == 10);
    VerlindeProblem pa{a1, 1, 0, {{1}, {1}}};
    CHECK(verlinde_dim_exact(pa) == 1);
    CHECK(verlinde_dim(pa) == 1);
    // propagation of vacua
    VerlindeProblem pav = pa;
    pav.insertions.push_back({0});
    CHECK(verlinde_dim_exact(pav) == 1);
    // factorization at A1 level 2 genus 2
    VerlindeProblem p2{a1, 2, 2, {}};
    Int direct = verlinde_dim_exact(p2);
    Int sum = 0;
    for (const auto &mu : root_system(a1).alcove(2))
        sum += verlinde_dim_exact({a1, 2, 1, {mu, dual_weight(a1, mu)}});
    CHECK(direct == sum);
    CHECK_THROWS_AS(verlinde_dim_exact({a1, 1, -1, {}}), domain_error);
    CHECK_THROWS_AS(verlinde_dim_exact({a1, 1, 0, {{3}}}), domain_error);
}
