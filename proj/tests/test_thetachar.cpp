#include <catch2/catch_amalgamated.hpp>

#include <blockcount/theta_f2.hpp>

using namespace blockcount;

TEST_CASE("enumeration sizes")
{
    CHECK(enumerate_theta(SymplecticSpaceF2(1)).size() == 4);
    CHECK(enumerate_theta(SymplecticSpaceF2(2)).size() == 16);
    CHECK(enumerate_theta(SymplecticSpaceF2(3)).size() == 64);
    CHECK_THROWS_AS(SymplecticSpaceF2(0), domain_error);
    CHECK_THROWS_AS(enumerate_theta(SymplecticSpaceF2(7)), domain_error);
}

TEST_CASE("pairing is alternating and non-degenerate")
{
    for (int g = 1; g <= 3; ++g)
    {
        SymplecticSpaceF2 space(g);
        for (F2Vector x = 0; x < space.vector_count(); ++x)
        {
            CHECK(space.pairing(x, x) == 0);
            if (x != 0)
            {
                bool hit = false;
                for (F2Vector y = 0; y < space.vector_count(); ++y)
                    if (space.pairing(x, y))
                        hit = true;
                CHECK(hit);
            }
        }
    }
}

TEST_CASE("quadratic refinement identity")
{
    for (int g = 1; g <= 3; ++g)
    {
        SymplecticSpaceF2 space(g);
        for (const auto &q : enumerate_theta(space))
            for (F2Vector x = 0; x < space.vector_count(); ++x)
                for (F2Vector y = 0; y < space.vector_count(); ++y)
                    CHECK(q(x ^ y) == (q(x) ^ q(y) ^ space.pairing(x, y)));
    }
}

TEST_CASE("Arf counts")
{
    CHECK(arf(QuadraticFormF2{SymplecticSpaceF2(2), 0}) == 0); // split form
    CHECK(count_even(1) == 3);
    CHECK(count_even(2) == 10);
    CHECK(count_even(3) == 36);
    CHECK(count_odd(3) == 28);
    for (int g = 1; g <= 5; ++g)
    {
        Int expected = (Int(1) << (g - 1)) * ((Int(1) << g) + 1);
        CHECK(count_even(g) == expected);
        CHECK(count_even(g) + count_odd(g) == Int(1) << (2 * g));
    }
}

TEST_CASE("torsor action")
{
    for (int g = 1; g <= 3; ++g)
    {
        SymplecticSpaceF2 space(g);
        auto forms = enumerate_theta(space);
        for (const auto &q : forms)
        {
            CHECK(act_character(0, q) == q);
            std::set<uint32_t> images;
            for (F2Vector chi = 0; chi < space.vector_count(); ++chi)
            {
                auto r = act_character(chi, q);
                images.insert(r.basis_values);
                if (chi != 0)
                    CHECK_FALSE(r == q); // free
                // the action shifts by the pairing
                for (F2Vector x = 0; x < space.vector_count(); ++x)
                    CHECK(r(x) == (q(x) ^ space.pairing(chi, x)));
                // Arf changes by the value of q at chi
                CHECK((arf(r) ^ arf(q)) == q(chi));
            }
            CHECK(images.size() == forms.size()); // transitive
        }
    }
}
