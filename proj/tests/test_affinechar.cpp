#include <catch2/catch_amalgamated.hpp>

#include <blockcount/branching.hpp>

using namespace blockcount;

TEST_CASE("degree zero equals the finite module")
{
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    const RootSystem &rs = root_system(a2);
    for (const auto &lam : rs.alcove(2))
    {
        GradedCharacter ch = graded_character(a2, 2, lam, 1);
        CHECK(ch.layers[0] == rs.dominant_weight_mults(lam));
        CHECK(ch.layer_dim(0) == rs.weyl_dim(lam));
    }
}

TEST_CASE("A1 level-1 vacuum: one adjoint layer at degree 1")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    GradedCharacter ch = graded_character(a1, 1, {0}, 2);
    CHECK(ch.layer_dim(0) == 1);
    CHECK(ch.layer_dim(1) == 3);
    CHECK(ch.mult(1, {2}) == 1);
    CHECK(ch.mult(1, {-2}) == 1);
    CHECK(ch.mult(1, {0}) == 1);
}

TEST_CASE("route agreement for A1, A2, B3")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    for (int l = 1; l <= 2; ++l)
        for (const auto &lam : root_system(a1).alcove(l))
            CHECK_NOTHROW(crosschecked_character(a1, l, lam, 4));
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    for (const auto &lam : root_system(a2).alcove(1))
        CHECK_NOTHROW(crosschecked_character(a2, 1, lam, 4));
    SimpleLieAlgebra b3 = make_algebra(Family::B, 3);
    for (const auto &lam : root_system(b3).alcove(1))
        CHECK_NOTHROW(crosschecked_character(b3, 1, lam, 3));
}

TEST_CASE("layers are Weyl invariant and graded dimensions are positive")
{
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    GradedCharacter ch = graded_character(a2, 1, {1, 0}, 3);
    const RootSystem &rs = root_system(a2);
    for (int d = 0; d <= 3; ++d)
    {
        CHECK(ch.layer_dim(d) > 0);
        for (const auto &[mu, m] : ch.layers[d])
        {
            CHECK(m > 0);
            CHECK(is_dominant(mu));
            // folding any orbit point recovers the multiplicity
            for (const auto &w : rs.weyl_orbit(mu))
                CHECK(ch.mult(d, w) == m);
        }
    }
}

TEST_CASE("restriction of the so8 vector module is the A2 adjoint")
{
    SimpleLieAlgebra d4 = make_algebra(Family::D, 4);
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    GradedCharacter vec = graded_character(d4, 1, {1, 0, 0, 0}, 0);
    RestrictedCharacter res = restrict_adjoint(vec, a2);
    Int total = 0;
    for (const auto &[w, m] : res.layers[0])
        total += m;
    CHECK(total == 8);
    CHECK(res.layers[0].at({1, 1}) == 1);
    CHECK(res.layers[0].at({0, 0}) == 2);
    CHECK(res.layers[0].at({-1, -1}) == 1);
    // matches the adjoint weight system of A2
    std::map<Labels, Int> adjoint;
    for (const auto &[w, m] : root_system(a2).weight_system({1, 1}))
        adjoint[w] += m;
    CHECK(res.layers[0] == adjoint);
}

TEST_CASE("branching of the so8 vacuum under A2 to depth 2")
{
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    BranchingResult br = branch_adjoint_vacuum(a2, 2);
    CHECK(br.clean());
    CHECK(br.head_mult({0, 0}, 0) == 1);
    CHECK(br.head_mult({3, 0}, 1) == 1);
    CHECK(br.head_mult({0, 3}, 1) == 1);
    for (const auto &h : br.heads)
    {
        CHECK(h.mult > 0);
        CHECK(conformal_weight(a2, 3, h.weight) == Rat(h.offset));
    }
    // degree-wise dimension conservation
    SimpleLieAlgebra so8 = make_algebra(Family::D, 4);
    GradedCharacter big = graded_character(so8, 1, {0, 0, 0, 0}, 2);
    for (int d = 0; d <= 2; ++d)
    {
        Int sum = 0;
        for (const auto &h : br.heads)
            if (h.offset <= d)
                sum += h.mult *
                       graded_character(a2, 3, h.weight, d - h.offset).layer_dim(d - h.offset);
        CHECK(sum == big.layer_dim(d));
    }
}

TEST_CASE("alcove and depth preconditions")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    CHECK_THROWS_AS(graded_character(a1, 1, {2}, 2), domain_error);
    CHECK_THROWS_AS(graded_character(a1, 1, {1}, -1), domain_error);
}
