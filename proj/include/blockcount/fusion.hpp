#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "root_system.hpp"

namespace blockcount
{

/// Finitely supported map weight -> non-negative multiplicity.
using WeightVector = std::map<Labels, Int>;

/// Classical tensor product multiplicities V_lambda (x) V_mu, exact
/// (Racah-Speiser reflection of the weight system of the smaller factor).
inline WeightVector tensor_decompose(const SimpleLieAlgebra &g, const Labels &lambda,
                                     const Labels &mu)
{
    const RootSystem &rs = root_system(g);
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw domain_error("tensor_decompose requires dominant weights");
    const Labels *big = &lambda, *small = &mu;
    if (rs.weyl_dim(lambda) < rs.weyl_dim(mu))
        std::swap(big, small);
    WeightVector out;
    for (const auto &[w, m] : rs.weight_system(*small))
    {
        Labels v = *big + w + rs.rho();
        int sign = rs.dominant_with_sign(v);
        if (sign == 0)
            continue;
        for (int i = 0; i < rs.rank(); ++i)
            v[i] -= 1;
        out[v] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();)
    {
        if (it->second == 0)
            it = out.erase(it);
        else if (it->second < 0)
            throw domain_error("negative tensor multiplicity");
        else
            ++it;
    }
    return out;
}

/// Level-l fusion product (Kac-Walton): tensor multiplicities folded into the
/// alcove by the affine Weyl group at shifted level l + h_dual.
inline WeightVector fuse(const SimpleLieAlgebra &g, int level, const Labels &lambda,
                         const Labels &mu)
{
    const RootSystem &rs = root_system(g);
    if (rs.level_pairing(lambda) > level || rs.level_pairing(mu) > level)
        throw domain_error("fusion weight outside the level alcove");
    const int shifted = level + rs.dual_coxeter();
    WeightVector out;
    for (const auto &[nu, m] : tensor_decompose(g, lambda, mu))
    {
        Labels v = nu + rs.rho();
        int sign = 1;
        for (;;)
        {
            int s = rs.dominant_with_sign(v);
            if (s == 0)
            {
                sign = 0;
                break;
            }
            sign *= s;
            int p = rs.level_pairing(v);
            if (p < shifted)
                break;
            if (p == shifted)
            {
                sign = 0;
                break;
            }
            // affine reflection across (x, theta) = shifted
            int c = p - shifted;
            for (int i = 0; i < rs.rank(); ++i)
                v[i] -= c * rs.theta()[i];
            sign = -sign;
        }
        if (sign == 0)
            continue;
        for (int i = 0; i < rs.rank(); ++i)
            v[i] -= 1;
        out[v] += sign * m;
    }
    for (auto it = out.begin(); it != out.end();)
    {
        if (it->second == 0)
            it = out.erase(it);
        else if (it->second < 0)
            throw domain_error("negative fusion multiplicity");
        else
            ++it;
    }
    return out;
}

/// mu-dagger: -w0(mu), the duality involution on the alcove.
inline Labels dual_weight(const SimpleLieAlgebra &g, const Labels &mu)
{
    return root_system(g).dual(mu);
}

/// A conformal-block dimension query.
struct VerlindeProblem
{
    SimpleLieAlgebra algebra;
    int level = 1;
    int genus = 0;
    std::vector<Labels> insertions;
};

namespace detail
{

struct FusionCache
{
    std::mutex mtx;
    std::map<std::tuple<SimpleLieAlgebra, int, Labels, Labels>, WeightVector> table;
};

inline WeightVector fuse_cached(FusionCache &cache, const SimpleLieAlgebra &g, int level,
                                const Labels &a, const Labels &b)
{
    auto key = std::make_tuple(g, level, std::min(a, b), std::max(a, b));
    {
        std::lock_guard<std::mutex> lk(cache.mtx);
        auto it = cache.table.find(key);
        if (it != cache.table.end())
            return it->second;
    }
    WeightVector r = fuse(g, level, std::get<2>(key), std::get<3>(key));
    std::lock_guard<std::mutex> lk(cache.mtx);
    cache.table.emplace(std::move(key), r);
    return r;
}

inline FusionCache &fusion_cache()
{
    static FusionCache c;
    return c;
}

/// Genus-0 dimension: fold all but the last insertion through the fusion
/// product and pair with the dual of the last.
inline Int genus0_dim(const SimpleLieAlgebra &g, int level, std::vector<Labels> ins)
{
    const RootSystem &rs = root_system(g);
    Labels vac(rs.rank(), 0);
    while (ins.size() < 2)
        ins.push_back(vac); // propagation of vacua keeps the recursion total
    std::sort(ins.begin(), ins.end()); // fusion is commutative; canonical key
    static std::mutex mtx;
    static std::map<std::tuple<SimpleLieAlgebra, int, std::vector<Labels>>, Int> memo;
    auto key = std::make_tuple(g, level, ins);
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    Labels last = ins.back();
    ins.pop_back();
    WeightVector acc;
    acc[ins[0]] = 1;
    for (size_t i = 1; i < ins.size(); ++i)
    {
        WeightVector next;
        for (const auto &[w, m] : acc)
            for (const auto &[v, c] : fuse_cached(fusion_cache(), g, level, w, ins[i]))
                next[v] += m * c;
        acc = std::move(next);
    }
    auto it = acc.find(rs.dual(last));
    Int result = it == acc.end() ? Int(0) : it->second;
    std::lock_guard<std::mutex> lk(mtx);
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

/// Exact Verlinde dimension via the factorization recursion: genus is reduced
/// to zero by summing over pairs (mu, mu-dagger) of alcove weights.
inline Int verlinde_dim_exact(const VerlindeProblem &p)
{
    const RootSystem &rs = root_system(p.algebra);
    if (p.genus < 0)
        throw domain_error("genus must be >= 0");
    for (const auto &ins : p.insertions)
        if (!is_dominant(ins) || rs.level_pairing(ins) > p.level)
            throw domain_error("insertion outside the level alcove");
    if (p.genus == 0)
        return detail::genus0_dim(p.algebra, p.level, p.insertions);
    Int total = 0;
    for (const auto &mu : rs.alcove(p.level))
    {
        VerlindeProblem q{p.algebra, p.level, p.genus - 1, p.insertions};
        q.insertions.push_back(mu);
        q.insertions.push_back(rs.dual(mu));
        total += verlinde_dim_exact(q);
    }
    return total;
}

} // namespace blockcount
