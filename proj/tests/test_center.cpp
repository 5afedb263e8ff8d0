#include <catch2/catch_amalgamated.hpp>

#include <blockcount/center.hpp>

using namespace blockcount;

TEST_CASE("center group orders")
{
    CHECK(center_group(make_algebra(Family::A, 1)).size() == 2);
    CHECK(center_group(make_algebra(Family::A, 2)).size() == 3);
    CHECK(center_group(make_algebra(Family::A, 4)).size() == 5);
    CHECK(center_group(make_algebra(Family::B, 3)).size() == 2);
    CHECK(center_group(make_algebra(Family::C, 3)).size() == 2);
    CHECK(center_group(make_algebra(Family::D, 4)).size() == 4);
    CHECK(center_group(make_algebra(Family::D, 5)).size() == 4);
    CHECK(center_group(make_algebra(Family::E, 6)).size() == 3);
    CHECK(center_group(make_algebra(Family::E, 7)).size() == 2);
    CHECK(center_group(make_algebra(Family::E, 8)).size() == 1);
    CHECK(center_group(make_algebra(Family::F, 4)).size() == 1);
    CHECK(center_group(make_algebra(Family::G, 2)).size() == 1);
}

TEST_CASE("D parity: Klein four for even rank, cyclic for odd")
{
    auto orders = [](const SimpleLieAlgebra &g) {
        std::vector<int> out;
        for (const auto &e : center_group(g))
        {
            CenterElement p = e;
            int k = 1;
            while (!p.is_identity())
            {
                p = compose(p, e);
                ++k;
            }
            out.push_back(k);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(orders(make_algebra(Family::D, 4)) == std::vector<int>{1, 2, 2, 2});
    CHECK(orders(make_algebra(Family::D, 5)) == std::vector<int>{1, 2, 4, 4});
    CHECK(orders(make_algebra(Family::A, 2)) == std::vector<int>{1, 3, 3});
}

TEST_CASE("A1 action is label reversal")
{
    SimpleLieAlgebra a1 = make_algebra(Family::A, 1);
    auto group = center_group(a1);
    REQUIRE(group.size() == 2);
    const CenterElement &sigma = group[0].is_identity() ? group[1] : group[0];
    for (int l = 1; l <= 3; ++l)
        for (int m = 0; m <= l; ++m)
            CHECK(act(sigma, l, {m}) == Labels{l - m});
}

TEST_CASE("level-1 so swap of vacuum and vector classes")
{
    for (const auto &g : {make_algebra(Family::D, 4), make_algebra(Family::B, 3)})
    {
        const int n = g.rank;
        Labels vac(n, 0), vec(n, 0);
        vec[0] = 1;
        bool found = false;
        for (const auto &sigma : center_group(g))
            if (!sigma.is_identity() && sigma.node_perm[0] == 1)
            {
                CHECK(act(sigma, 1, vac) == vec);
                CHECK(act(sigma, 1, vec) == vac);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("group action laws and bijectivity")
{
    for (const auto &g : {make_algebra(Family::A, 3), make_algebra(Family::D, 4),
                          make_algebra(Family::C, 4)})
    {
        auto group = center_group(g);
        const RootSystem &rs = root_system(g);
        for (int l = 1; l <= 2; ++l)
        {
            auto alc = rs.alcove(l);
            for (const auto &a : group)
            {
                std::set<Labels> image;
                for (const auto &w : alc)
                    image.insert(act(a, l, w));
                CHECK(image.size() == alc.size());
                for (const auto &b : group)
                    for (const auto &w : alc)
                        CHECK(act(compose(a, b), l, w) == act(a, l, act(b, l, w)));
            }
        }
    }
}

TEST_CASE("identity acts trivially")
{
    SimpleLieAlgebra a2 = make_algebra(Family::A, 2);
    const auto &group = center_group(a2);
    for (const auto &e : group)
        if (e.is_identity())
            for (const auto &w : root_system(a2).alcove(2))
                CHECK(act(e, 2, w) == w);
}
