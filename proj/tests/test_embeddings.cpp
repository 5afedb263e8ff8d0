#include <catch2/catch_amalgamated.hpp>

#include <blockcount/embedding.hpp>

using namespace blockcount;

TEST_CASE("Dynkin index of irreducible modules")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    CHECK(dynkin_index_irrep(a1, {1}) == Rat(1, 2));
    CHECK(dynkin_index_irrep(a1, {2}) == 2); // adjoint: the dual Coxeter number
    CHECK(dynkin_index_irrep(a1, {0}) == 0);
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    CHECK(dynkin_index_irrep(a2, {1, 0}) == Rat(1, 2));
    CHECK(dynkin_index_irrep(a2, {1, 1}) == 3);
}

TEST_CASE("defining representation constants")
{
    CHECK(defining_rep_index(make_algebra(Family::A, 3)) == Rat(1, 2));
    CHECK(defining_rep_index(make_algebra(Family::B, 3)) == 1);
    CHECK(defining_rep_index(make_algebra(Family::D, 4)) == 1);
    CHECK(defining_rep_index(make_algebra(Family::C, 3)) == Rat(1, 2));
    CHECK(defining_rep_dim(make_algebra(Family::B, 3)) == 7);
    CHECK(defining_rep_dim(make_algebra(Family::D, 4)) == 8);
    CHECK(defining_rep_dim(make_algebra(Family::A, 3)) == 4);
    CHECK(defining_rep_dim(make_algebra(Family::C, 3)) == 6);
    // the constants equal the index of the defining module in its own algebra
    CHECK(dynkin_index_irrep(make_algebra(Family::A, 3), {1, 0, 0}) == Rat(1, 2));
    CHECK(dynkin_index_irrep(make_algebra(Family::B, 3), {1, 0, 0}) == 1);
    CHECK(dynkin_index_irrep(make_algebra(Family::D, 4), {1, 0, 0, 0}) == 1);
    CHECK(dynkin_index_irrep(make_algebra(Family::C, 3), {1, 0, 0}) == Rat(1, 2));
}

TEST_CASE("embedding indices")
{
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    CHECK(dynkin_index_embedding(adjoint_embedding(a2)) == 3);
    CHECK(dynkin_index_embedding(adjoint_embedding(make_algebra(Family::G, 2))) == 4);
    // vector embedding so7 -> sl7 has index two
    SimpleLieAlgebra b3 = make_algebra(Family::B, 3);
    EmbeddingSpec vec{b3, special_linear_algebra(7), {{{1, 0, 0}, 1}}};
    CHECK(dynkin_index_embedding(vec) == 2);
    // additivity over direct sums: A1 -> so5 with 5 = 3 + 1 + 1
    EmbeddingSpec sum{make_algebra(Family::A, 1),
                      make_algebra(Family::B, 2),
                      {{{2}, 1}, {{0}, 2}}};
    CHECK(dynkin_index_embedding(sum) == 2);
    // dimension mismatch rejected
    EmbeddingSpec bad{a2, make_algebra(Family::D, 4), {{{1, 0}, 1}}};
    CHECK_THROWS_AS(dynkin_index_embedding(bad), domain_error);
}

TEST_CASE("central charge")
{
    CHECK(central_charge(make_algebra(Family::A, 1), 1) == 1);
    CHECK(central_charge(make_algebra(Family::D, 4), 1) == 4);
    CHECK(central_charge(make_algebra(Family::A, 2), 3) == 4);
    SimpleLieAlgebra b3 = make_algebra(Family::B, 3);
    Rat prev = 0;
    for (int l = 1; l <= 6; ++l)
    {
        Rat c = central_charge(b3, l);
        CHECK(c > prev);
        CHECK(c <= Rat(dim_algebra(b3)));
        prev = c;
    }
}

TEST_CASE("conformal embedding criterion")
{
    auto ad_a2 = is_conformal(adjoint_embedding(make_algebra(Family::A, 2)));
    CHECK(ad_a2.conformal);
    CHECK(ad_a2.lhs == 4);
    CHECK(ad_a2.rhs == 4);
    auto ad_e8 = is_conformal(adjoint_embedding(make_algebra(Family::E, 8)));
    CHECK(ad_e8.conformal);
    CHECK(ad_e8.index == 30);
    auto sl_a2 = is_conformal(adjoint_into_sl(make_algebra(Family::A, 2)));
    CHECK_FALSE(sl_a2.conformal);
    auto sl_g2 = is_conformal(adjoint_into_sl(make_algebra(Family::G, 2)));
    CHECK_FALSE(sl_g2.conformal);
}

TEST_CASE("conformal weights")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    CHECK(conformal_weight(a1, 2, {0}) == 0);
    CHECK(conformal_weight(a1, 2, {2}) == Rat(1, 2));
    SimpleLieAlgebra d4 = make_algebra(Family::D, 4);
    CHECK(conformal_weight(d4, 1, {1, 0, 0, 0}) == Rat(1, 2));
    CHECK(conformal_weight(d4, 1, {0, 0, 0, 1}) == Rat(1, 2));
    CHECK_THROWS_AS(conformal_weight(a1, 1, {2}), domain_error);
}
