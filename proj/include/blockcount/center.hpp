#pragma once

#include <vector>

#include "root_system.hpp"

namespace blockcount
{

/// A center element of the simply connected group, represented as the
/// automorphism of the affine Dynkin diagram it induces (a permutation of
/// the nodes {0,...,rank} preserving the affine Cartan matrix).
struct CenterElement
{
    SimpleLieAlgebra algebra;
    std::vector<int> node_perm; // size rank+1; node_perm[i] = image of node i

    bool operator==(const CenterElement &o) const = default;
    bool operator<(const CenterElement &o) const
    {
        return std::tie(algebra, node_perm) < std::tie(o.algebra, o.node_perm);
    }

    bool is_identity() const
    {
        for (size_t i = 0; i < node_perm.size(); ++i)
            if (node_perm[i] != static_cast<int>(i))
                return false;
        return true;
    }
};

inline CenterElement compose(const CenterElement &a, const CenterElement &b)
{
    if (a.algebra != b.algebra)
        throw domain_error("cannot compose center elements of different algebras");
    CenterElement c{a.algebra, std::vector<int>(a.node_perm.size())};
    for (size_t i = 0; i < a.node_perm.size(); ++i)
        c.node_perm[i] = a.node_perm[b.node_perm[i]];
    return c;
}

/// Action on a level-l weight: convert to affine Dynkin labels, permute the
/// nodes, convert back. A bijection of the alcove.
inline Labels act(const CenterElement &sigma, int level, const Labels &lambda)
{
    const RootSystem &rs = root_system(sigma.algebra);
    const int n = rs.rank();
    if (!is_dominant(lambda) || rs.level_pairing(lambda) > level)
        throw domain_error("weight outside the level alcove");
    std::vector<int> aff(n + 1);
    aff[0] = level - rs.level_pairing(lambda);
    for (int i = 0; i < n; ++i)
        aff[i + 1] = lambda[i];
    std::vector<int> img(n + 1);
    for (int i = 0; i <= n; ++i)
        img[sigma.node_perm[i]] = aff[i];
    Labels out(img.begin() + 1, img.end());
    if (img[0] != level - rs.level_pairing(out))
        throw domain_error("affine automorphism does not preserve the level");
    return out;
}

namespace detail
{

/// Affine Cartan matrix on nodes {0..n}, alpha_0 = delta - theta.
inline std::vector<std::vector<Rat>> affine_cartan(const RootSystem &rs)
{
    const int n = rs.rank();
    std::vector<std::vector<Rat>> a(n + 1, std::vector<Rat>(n + 1, 0));
    a[0][0] = 2;
    for (int j = 0; j < n; ++j)
    {
        a[0][j + 1] = -Rat(rs.theta()[j]) * rs.symmetrizer()[j]; // -(theta,alpha_j)
        a[j + 1][0] = -rs.theta()[j];
        for (int k = 0; k < n; ++k)
            a[j + 1][k + 1] = rs.cartan()[j][k];
    }
    return a;
}

/// Longest element of the parabolic Weyl group generated by all simple
/// reflections except node `skip`, returned as a reduced word.
inline std::vector<int> parabolic_longest_word(const RootSystem &rs, int skip)
{
    const int n = rs.rank();
    Labels v(n, 1);
    v[skip] = 0;
    std::vector<int> word;
    bool again = true;
    while (again)
    {
        again = false;
        for (int j = 0; j < n; ++j)
            if (j != skip && v[j] > 0)
            {
                rs.reflect(j, v);
                word.push_back(j);
                again = true;
            }
    }
    return word;
}

/// The diagram automorphism attached to a special node i (mark 1):
/// lambda -> l*omega_i + w0^(i) w0 (lambda), read off as a node permutation.
inline CenterElement center_element_for_node(const RootSystem &rs, int special)
{
    const int n = rs.rank();
    // dual permutation: -w0(omega_j) = omega_{j*}
    std::vector<int> dualperm(n);
    for (int j = 0; j < n; ++j)
    {
        Labels e(n, 0);
        e[j] = 1;
        Labels d = rs.dual(e);
        for (int k = 0; k < n; ++k)
            if (d[k] == 1)
                dualperm[j] = k;
    }
    auto word = parabolic_longest_word(rs, special);
    // test weight with pairwise distinct affine labels
    Labels test(n);
    for (int i = 0; i < n; ++i)
        test[i] = i + 1;
    int level = rs.level_pairing(test) + (n + 1);
    // u = w0(test), then the parabolic word, then shift by level*omega_special
    Labels u(n, 0);
    for (int j = 0; j < n; ++j)
        u[dualperm[j]] = -test[j];
    for (int j : word)
        rs.reflect(j, u);
    u[special] += level;

    std::vector<int> aff(n + 1), img(n + 1);
    aff[0] = level - rs.level_pairing(test);
    for (int i = 0; i < n; ++i)
        aff[i + 1] = test[i];
    img[0] = level - rs.level_pairing(u);
    for (int i = 0; i < n; ++i)
        img[i + 1] = u[i];

    CenterElement sigma{rs.algebra(), std::vector<int>(n + 1, -1)};
    for (int i = 0; i <= n; ++i)
    {
        int where = -1;
        for (int k = 0; k <= n; ++k)
            if (img[k] == aff[i])
                where = k;
        if (where < 0)
            throw domain_error("center construction: affine labels are not permuted");
        sigma.node_perm[i] = where;
    }
    if (sigma.node_perm[0] != special + 1)
        throw domain_error("center construction: node 0 does not map to the special node");
    auto ac = affine_cartan(rs);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (ac[sigma.node_perm[i]][sigma.node_perm[j]] != ac[i][j])
                throw domain_error("center construction: affine Cartan matrix not preserved");
    return sigma;
}

} // namespace detail

/// Z(G-tilde) as affine-diagram automorphisms: the identity plus one element
/// per special node (mark 1), closed under composition. The group structure
/// (e.g. cyclic vs Klein four for D_n) emerges from the computed table.
inline std::vector<CenterElement> center_group(const SimpleLieAlgebra &g)
{
    const RootSystem &rs = root_system(g);
    const int n = rs.rank();
    std::vector<CenterElement> elems;
    CenterElement id{g, std::vector<int>(n + 1)};
    for (int i = 0; i <= n; ++i)
        id.node_perm[i] = i;
    elems.push_back(id);
    for (int i = 0; i < n; ++i)
        if (rs.theta_coords()[i] == 1) // mark 1: special node
            elems.push_back(detail::center_element_for_node(rs, i));
    // close under composition (a sanity check: generators already exhaust Z)
    std::set<std::vector<int>> seen;
    for (const auto &e : elems)
        seen.insert(e.node_perm);
    for (size_t grow = 0; grow < elems.size(); ++grow)
        for (size_t j = 0; j < elems.size(); ++j)
        {
            CenterElement c = compose(elems[grow], elems[j]);
            if (seen.insert(c.node_perm).second)
                elems.push_back(c);
        }
    size_t specials = 1;
    for (int i = 0; i < n; ++i)
        if (rs.theta_coords()[i] == 1)
            ++specials;
    if (elems.size() != specials)
        throw domain_error("center group closure does not match the special-node count");
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace blockcount
