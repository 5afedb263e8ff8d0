#pragma once

#include <utility>
#include <vector>

#include "root_system.hpp"

namespace blockcount
{

/// How the defining representation of the target restricts to the source.
struct EmbeddingSpec
{
    SimpleLieAlgebra source;
    SimpleLieAlgebra target;
    std::vector<std::pair<Labels, Int>> branching_of_defining_rep;
};

/// Dynkin index of the irreducible module V_lambda:
/// dim V * (lambda, lambda+2rho) / (2 dim g).
inline Rat dynkin_index_irrep(const SimpleLieAlgebra &g, const Labels &lambda)
{
    const RootSystem &rs = root_system(g);
    if (!is_dominant(lambda))
        throw domain_error("dynkin_index_irrep requires a dominant weight");
    Labels l2r = lambda;
    for (int i = 0; i < rs.rank(); ++i)
        l2r[i] += 2;
    Rat quad = rs.form(lambda, l2r); // (lambda, lambda + 2 rho)
    return Rat(rs.weyl_dim(lambda)) * quad / (2 * Rat(rs.dim()));
}

/// Dynkin index of the defining representation of a classical target,
/// the normalization divisor for embedding indices:
///   sl_N: 1/2, so_N: 1, sp_N: 1/2.
inline Rat defining_rep_index(const SimpleLieAlgebra &g)
{
    switch (g.family)
    {
    case Family::A:
    case Family::C:
        return Rat(1, 2);
    case Family::B:
    case Family::D:
        return Rat(1);
    default:
        throw domain_error("defining representation index: classical families only");
    }
}

/// Dimension of the defining representation of a classical algebra.
inline Int defining_rep_dim(const SimpleLieAlgebra &g)
{
    switch (g.family)
    {
    case Family::A:
        return Int(g.rank) + 1;
    case Family::B:
        return Int(2) * g.rank + 1;
    case Family::C:
    case Family::D:
        return Int(2) * g.rank;
    default:
        throw domain_error("defining representation dimension: classical families only");
    }
}

/// Dynkin index d_phi of an embedding from the branching of the target's
/// defining representation; additive over direct sums.
inline Rat dynkin_index_embedding(const EmbeddingSpec &e)
{
    const RootSystem &rs = root_system(e.source);
    Int total = 0;
    Rat idx = 0;
    for (const auto &[lambda, mult] : e.branching_of_defining_rep)
    {
        total += mult * rs.weyl_dim(lambda);
        idx += Rat(mult) * dynkin_index_irrep(e.source, lambda);
    }
    if (total != defining_rep_dim(e.target))
        throw domain_error("branching dimensions do not match the defining representation");
    return idx / defining_rep_index(e.target);
}

/// Sugawara central charge l*dim(g)/(l+h_dual), exact.
inline Rat central_charge(const SimpleLieAlgebra &g, int level)
{
    if (level < 1)
        throw domain_error("level must be >= 1");
    return Rat(level) * Rat(dim_algebra(g)) / (level + dual_coxeter(g));
}

struct ConformalCheck
{
    bool conformal;
    Rat lhs; // d_phi * dim g1 / (d_phi + h_dual(g1))
    Rat rhs; // dim g2 / (1 + h_dual(g2))
    Rat index;
};

/// Conformal-embedding criterion at target level one.
inline ConformalCheck is_conformal(const EmbeddingSpec &e)
{
    Rat d = dynkin_index_embedding(e);
    Rat lhs = d * Rat(dim_algebra(e.source)) / (d + dual_coxeter(e.source));
    Rat rhs = Rat(dim_algebra(e.target)) / (1 + dual_coxeter(e.target));
    return {lhs == rhs, lhs, rhs, d};
}

/// The adjoint embedding g -> so(dim g): the defining (vector)
/// representation of the target restricts to the adjoint module V_theta.
inline EmbeddingSpec adjoint_embedding(const SimpleLieAlgebra &g)
{
    const RootSystem &rs = root_system(g);
    return {g, orthogonal_algebra(dim_algebra(g)), {{rs.theta(), 1}}};
}

/// The composite g -> so(dim g) -> sl(dim g); the defining representation of
/// sl(dim g) restricts to the adjoint module.
inline EmbeddingSpec adjoint_into_sl(const SimpleLieAlgebra &g)
{
    const RootSystem &rs = root_system(g);
    return {g, special_linear_algebra(dim_algebra(g)), {{rs.theta(), 1}}};
}

/// Conformal weight (L0 eigenvalue) of the highest-weight vector of
/// H_{lambda,level}: (lambda, lambda+2rho) / (2(level+h_dual)).
inline Rat conformal_weight(const SimpleLieAlgebra &g, int level, const Labels &lambda)
{
    const RootSystem &rs = root_system(g);
    if (!is_dominant(lambda) || rs.level_pairing(lambda) > level)
        throw domain_error("weight outside the level alcove");
    Labels l2r = lambda;
    for (int i = 0; i < rs.rank(); ++i)
        l2r[i] += 2;
    return rs.form(lambda, l2r) / (2 * Rat(level + rs.dual_coxeter()));
}

} // namespace blockcount
