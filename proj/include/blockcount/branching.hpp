#pragma once

#include <map>
#include <vector>

#include "affine_character.hpp"

namespace blockcount
{

namespace detail
{

/// Orthogonal coordinates of a weight of so_N (labels of B_m or D_m).
inline std::vector<Rat> orthogonal_coordinates(const SimpleLieAlgebra &so, const Labels &mu)
{
    const int m = so.rank;
    std::vector<Rat> e(m, 0);
    if (so.family == Family::B)
    {
        for (int i = 0; i < m - 1; ++i)
            for (int j = 0; j <= i; ++j)
                e[j] += mu[i];
        for (int j = 0; j < m; ++j)
            e[j] += Rat(mu[m - 1], 2);
    }
    else if (so.family == Family::D)
    {
        for (int i = 0; i < m - 2; ++i)
            for (int j = 0; j <= i; ++j)
                e[j] += mu[i];
        for (int j = 0; j < m - 1; ++j)
            e[j] += Rat(mu[m - 2] + mu[m - 1], 2);
        e[m - 1] += Rat(mu[m - 1] - mu[m - 2], 2);
    }
    else
        throw domain_error("orthogonal coordinates need a B or D algebra");
    return e;
}

} // namespace detail

/// A graded character with full (unfolded) weight maps per grade, over the
/// weight lattice of `algebra`.
struct RestrictedCharacter
{
    SimpleLieAlgebra algebra;
    int depth = 0;
    std::vector<std::map<Labels, Int>> layers;
};

/// Restricts a graded character of so(dim g) along the adjoint embedding
/// g -> so(dim g): the first #(positive roots) orthogonal directions map to
/// the positive roots of g in enumeration order, the rest to zero.
inline RestrictedCharacter restrict_adjoint(const GradedCharacter &big,
                                            const SimpleLieAlgebra &g)
{
    const RootSystem &rs_so = root_system(big.algebra);
    const RootSystem &rs_g = root_system(g);
    if (defining_rep_dim(big.algebra) != dim_algebra(g))
        throw domain_error("character algebra is not so(dim g)");
    const int n = rs_g.rank();
    std::vector<Labels> betas;
    for (const auto &coords : rs_g.positive_roots())
        betas.push_back(rs_g.root_labels(coords));
    const size_t npos = betas.size();

    RestrictedCharacter out{g, big.depth, {}};
    out.layers.assign(big.depth + 1, {});
    for (int d = 0; d <= big.depth; ++d)
        for (const auto &[nu, m] : big.layers[d])
            for (const auto &w : rs_so.weyl_orbit(nu))
            {
                auto e = detail::orthogonal_coordinates(big.algebra, w);
                std::vector<Rat> acc(n, 0);
                for (size_t i = 0; i < e.size(); ++i)
                {
                    if (i >= npos || e[i] == 0)
                        continue;
                    for (int j = 0; j < n; ++j)
                        acc[j] += e[i] * betas[i][j];
                }
                Labels img(n);
                for (int j = 0; j < n; ++j)
                {
                    if (!is_integer(acc[j]))
                        throw domain_error("restriction left the weight lattice");
                    img[j] = static_cast<int>(numerator(acc[j]));
                }
                out.layers[d][img] += m;
            }
    return out;
}

/// One module in a branching decomposition: H_{weight} at level h_dual(g)
/// entering at conformal-weight offset `offset` with multiplicity `mult`.
struct BranchingHead
{
    Labels weight;
    int offset = 0;
    Int mult;
};

struct BranchingResult
{
    SimpleLieAlgebra algebra;
    int depth = 0;
    std::vector<BranchingHead> heads;
    std::vector<Int> residual; // per grade, sum of |leftover| after peeling

    bool clean() const
    {
        for (const auto &r : residual)
            if (r != 0)
                return false;
        return true;
    }

    Int head_mult(const Labels &weight, int offset) const
    {
        for (const auto &h : heads)
            if (h.weight == weight && h.offset == offset)
                return h.mult;
        return 0;
    }
};

/// Decomposes the level-one vacuum module of so(dim g) under the adjoint
/// embedding into level-h_dual modules of g, by greedy peeling of highest
/// residual weights grade by grade. Offsets must match the conformal weight
/// of the head exactly; anything left over is reported in `residual`.
inline BranchingResult branch_adjoint_vacuum(const SimpleLieAlgebra &g, int depth)
{
    const RootSystem &rs = root_system(g);
    SimpleLieAlgebra so = orthogonal_algebra(dim_algebra(g));
    Labels vac(root_system(so).rank(), 0);
    GradedCharacter big = graded_character(so, 1, vac, depth);
    RestrictedCharacter res = restrict_adjoint(big, g);
    const int level = rs.dual_coxeter(); // index of the adjoint embedding

    BranchingResult out{g, depth, {}, std::vector<Int>(depth + 1, 0)};
    for (int d = 0; d <= depth; ++d)
        for (;;)
        {
            // highest dominant weight still present at this grade
            const Labels *head = nullptr;
            int besth = 0;
            for (const auto &[w, m] : res.layers[d])
            {
                if (m == 0 || !is_dominant(w))
                    continue;
                int h = detail::lattice_height(rs, w);
                if (!head || h > besth)
                {
                    head = &w;
                    besth = h;
                }
            }
            if (!head)
                break;
            Labels mu = *head;
            Int mult = res.layers[d][mu];
            // a negative count or an offset mismatch cannot be peeled; leave
            // it in the residual report
            if (mult < 0 || rs.level_pairing(mu) > level ||
                conformal_weight(g, level, mu) != Rat(d))
                break;
            GradedCharacter sub = graded_character(g, level, mu, depth - d);
            for (int dd = 0; dd + d <= depth; ++dd)
                for (const auto &[w, c] : sub.full_layer(dd))
                {
                    auto it = res.layers[d + dd].find(w);
                    Int cur = it == res.layers[d + dd].end() ? Int(0) : it->second;
                    cur -= mult * c;
                    if (cur == 0)
                    {
                        if (it != res.layers[d + dd].end())
                            res.layers[d + dd].erase(it);
                    }
                    else
                        res.layers[d + dd][w] = cur;
                }
            out.heads.push_back({mu, d, mult});
        }
    for (int d = 0; d <= depth; ++d)
        for (const auto &[w, m] : res.layers[d])
            out.residual[d] += abs(m);
    return out;
}

} // namespace blockcount
