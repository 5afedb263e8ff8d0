#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "smatrix.hpp"

namespace blockcount
{

/// Truncated graded character of the integrable module H_{lambda,level}:
/// layers[d] holds the dominant weights of grade d with exact multiplicities
/// (each grade is a finite-Weyl-invariant finite-dimensional module).
struct GradedCharacter
{
    SimpleLieAlgebra algebra;
    int level = 1;
    Labels lambda;
    int depth = 0;
    std::vector<std::map<Labels, Int>> layers;

    /// Multiplicity of an arbitrary weight at grade d (folds into the
    /// dominant chamber first).
    Int mult(int d, Labels mu) const
    {
        if (d < 0 || d > depth)
            throw domain_error("grade outside the truncation window");
        root_system(algebra).make_dominant(mu);
        auto it = layers[d].find(mu);
        return it == layers[d].end() ? Int(0) : it->second;
    }

    /// Dimension of the grade-d piece.
    Int layer_dim(int d) const
    {
        const RootSystem &rs = root_system(algebra);
        Int total = 0;
        for (const auto &[mu, m] : layers.at(d))
            total += m * Int(rs.weyl_orbit(mu).size());
        return total;
    }

    /// Grade-d piece as a full weight map (orbit expansion).
    std::map<Labels, Int> full_layer(int d) const
    {
        const RootSystem &rs = root_system(algebra);
        std::map<Labels, Int> out;
        for (const auto &[mu, m] : layers.at(d))
            for (const auto &w : rs.weyl_orbit(mu))
                out[w] += m;
        return out;
    }

    bool operator==(const GradedCharacter &o) const
    {
        return algebra == o.algebra && level == o.level && lambda == o.lambda &&
               depth == o.depth && layers == o.layers;
    }
};

namespace detail
{

/// All dominant mu with (mu+rho, mu+rho) <= bound. The Gram matrix of the
/// fundamental weights is entrywise positive, so the norm grows in every
/// label and a box recursion with prefix pruning is exhaustive.
inline void dominant_ball_rec(const RootSystem &rs, const Rat &bound, Labels &cur, int pos,
                              std::vector<Labels> &out)
{
    Labels mr = cur + rs.rho();
    if (rs.form(mr, mr) > bound)
        return;
    if (pos == rs.rank())
    {
        out.push_back(cur);
        return;
    }
    for (int v = 0;; ++v)
    {
        cur[pos] = v;
        Labels probe = cur + rs.rho();
        if (rs.form(probe, probe) > bound)
            break;
        dominant_ball_rec(rs, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

inline std::vector<Labels> enumerate_dominant_ball(const RootSystem &rs, const Rat &bound)
{
    std::vector<Labels> out;
    Labels cur(rs.rank(), 0);
    dominant_ball_rec(rs, bound, cur, 0, out);
    return out;
}

inline bool in_root_lattice(const RootSystem &rs, const Labels &v)
{
    for (const auto &c : rs.root_coordinates(v))
        if (!is_integer(c))
            return false;
    return true;
}

inline int lattice_height(const RootSystem &rs, const Labels &v)
{
    Rat s = 0;
    for (const auto &c : rs.root_coordinates(v))
        s += c;
    if (!is_integer(s))
        throw domain_error("height of a non-root-lattice vector");
    return static_cast<int>(numerator(s));
}

/// Per-grade dominant candidate weights (those with non-negative Casimir
/// defect), sorted so that higher weights come first within a grade.
inline std::vector<std::vector<Labels>> grade_candidates(const RootSystem &rs,
                                                         const Labels &lambda, int L,
                                                         int depth)
{
    Labels lr = lambda + rs.rho();
    Rat top = rs.form(lr, lr);
    std::vector<std::vector<Labels>> out(depth + 1);
    for (int d = 0; d <= depth; ++d)
    {
        std::vector<std::pair<int, Labels>> keyed;
        for (const auto &mu : enumerate_dominant_ball(rs, top + 2 * Rat(L) * d))
            if (in_root_lattice(rs, mu - lambda))
                keyed.push_back({-lattice_height(rs, mu - lambda), mu});
        std::sort(keyed.begin(), keyed.end());
        for (auto &[h, mu] : keyed)
            out[d].push_back(std::move(mu));
    }
    return out;
}

/// Whether (d, mu) is an affine Weyl image of the highest weight; such
/// weights are exactly the norm-saturating ones and have multiplicity one.
inline bool is_max_weight_orbit(const RootSystem &rs, int level, const Labels &lambda,
                                int d, Labels mu)
{
    for (;;)
    {
        rs.make_dominant(mu);
        int c = level - rs.level_pairing(mu);
        if (c >= 0)
            break;
        for (int i = 0; i < rs.rank(); ++i)
            mu[i] += c * rs.theta()[i];
        d += c;
        if (d < 0)
            return false;
    }
    return d == 0 && mu == lambda;
}

} // namespace detail

/// Graded character through the affine Freudenthal recursion, exact.
inline GradedCharacter graded_character_freudenthal(const SimpleLieAlgebra &g, int level,
                                                    const Labels &lambda, int depth)
{
    const RootSystem &rs = root_system(g);
    if (!is_dominant(lambda) || rs.level_pairing(lambda) > level)
        throw domain_error("highest weight outside the level alcove");
    if (depth < 0)
        throw domain_error("depth must be >= 0");
    const int n = rs.rank();
    const int L = level + rs.dual_coxeter();
    Labels lr = lambda + rs.rho();
    const Rat top = rs.form(lr, lr);

    std::vector<std::pair<Labels, Labels>> roots; // (coords, labels)
    for (const auto &alpha : rs.positive_roots())
        roots.push_back({alpha, rs.root_labels(alpha)});

    GradedCharacter ch{g, level, lambda, depth, {}};
    ch.layers.assign(depth + 1, {});
    auto candidates = detail::grade_candidates(rs, lambda, L, depth);
    for (int d = 0; d <= depth; ++d)
        for (const auto &mu : candidates[d])
        {
            if (d == 0 && mu == lambda)
            {
                ch.layers[0][mu] = 1;
                continue;
            }
            Labels mr = mu + rs.rho();
            Rat defect = top - rs.form(mr, mr) + 2 * Rat(L) * d;
            if (defect == 0)
            {
                if (detail::is_max_weight_orbit(rs, level, lambda, d, mu))
                    ch.layers[d][mu] = 1;
                continue;
            }
            Rat acc = 0;
            // same-grade contributions from the finite positive roots
            for (const auto &[coords, al] : roots)
            {
                Labels nu = mu;
                for (int k = 1;; ++k)
                {
                    nu = nu + al;
                    Labels nr = nu + rs.rho();
                    if (top - rs.form(nr, nr) + 2 * Rat(L) * d < 0)
                        break;
                    Labels dom = nu;
                    rs.make_dominant(dom);
                    auto it = ch.layers[d].find(dom);
                    if (it != ch.layers[d].end())
                        acc += Rat(it->second) * rs.form_weight_root(nu, coords);
                }
            }
            // lower grades through real affine roots alpha + n delta
            for (int dir : {+1, -1})
                for (const auto &[coords, al] : roots)
                    for (int nn = 1; nn <= d; ++nn)
                        for (int k = 1; k * nn <= d; ++k)
                        {
                            Labels nu = mu;
                            for (int i = 0; i < n; ++i)
                                nu[i] += k * dir * al[i];
                            Labels dom = nu;
                            rs.make_dominant(dom);
                            auto it = ch.layers[d - k * nn].find(dom);
                            if (it == ch.layers[d - k * nn].end())
                                continue;
                            Rat pairing = Rat(dir) * rs.form_weight_root(nu, coords);
                            acc += Rat(it->second) * (pairing + Rat(nn) * level);
                        }
            // imaginary roots n delta with multiplicity rank
            for (int nn = 1; nn <= d; ++nn)
                for (int k = 1; k * nn <= d; ++k)
                {
                    auto it = ch.layers[d - k * nn].find(mu);
                    if (it != ch.layers[d - k * nn].end())
                        acc += Rat(n) * Rat(it->second) * Rat(nn) * level;
                }
            Rat m = 2 * acc / defect;
            if (!is_integer(m) || m < 0)
                throw domain_error("non-integral graded multiplicity");
            if (m != 0)
                ch.layers[d][mu] = numerator(m);
        }
    return ch;
}

namespace detail
{

/// Signed numerator terms sum_{v in W, beta in M} eps(v) at weight
/// v(lambda+rho) + L beta - rho and grade (v(lambda+rho), beta) + L|beta|^2/2,
/// truncated at the given depth. M is the lattice of translations.
inline std::map<std::pair<int, Labels>, Int> alternating_sum(const RootSystem &rs,
                                                             const Labels &lambda, int L,
                                                             int depth)
{
    const int n = rs.rank();
    Labels lr = lambda + rs.rho();
    // translation lattice generators: simple coroots under the normalized form
    std::vector<Labels> gens(n, Labels(n, 0));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
        {
            Rat v = Rat(rs.cartan()[i][k]) / rs.symmetrizer()[k];
            if (!is_integer(v))
                throw domain_error("non-integral translation generator");
            gens[k][i] = static_cast<int>(numerator(v));
        }
    // box bounds for beta: |beta| <= (|lr| + sqrt(|lr|^2 + 2 L depth)) / L,
    // per-coefficient via the inverse Gram matrix of the generators
    double nlr = std::sqrt(static_cast<double>(rs.form(lr, lr)));
    double radius = (nlr + std::sqrt(nlr * nlr + 2.0 * L * depth)) / L + 1e-9;
    std::vector<std::vector<double>> gram(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram[i][j] = static_cast<double>(rs.form(gens[i], gens[j]));
    // double-precision Gauss-Jordan; used only for enumeration bounds
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0));
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col)
    {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(gram[r][col]) > std::abs(gram[piv][col]))
                piv = r;
        std::swap(gram[col], gram[piv]);
        std::swap(inv[col], inv[piv]);
        double p = gram[col][col];
        for (int c = 0; c < n; ++c)
        {
            gram[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < n; ++r)
            if (r != col)
            {
                double f = gram[r][col];
                for (int c = 0; c < n; ++c)
                {
                    gram[r][c] -= f * gram[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
    }
    std::vector<int> box(n);
    for (int i = 0; i < n; ++i)
        box[i] = static_cast<int>(std::floor(radius * std::sqrt(std::abs(inv[i][i])) + 1)) + 1;

    auto weyl = enumerate_weyl_group(rs);
    std::vector<Labels> images; // v(lambda+rho) for each v
    for (const auto &m : weyl.matrices)
    {
        Labels im(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                im[i] += m[i * n + j] * lr[j];
        images.push_back(im);
    }

    std::map<std::pair<int, Labels>, Int> out;
    Labels beta(n, 0);
    std::vector<int> coeff(n, 0);
    auto emit = [&]() {
        for (int i = 0; i < n; ++i)
        {
            beta[i] = 0;
            for (int k = 0; k < n; ++k)
                beta[i] += coeff[k] * gens[k][i];
        }
        Rat b2 = rs.form(beta, beta);
        for (size_t w = 0; w < images.size(); ++w)
        {
            Rat grade = rs.form(images[w], beta) + Rat(L) * b2 / 2;
            if (!is_integer(grade))
                throw domain_error("non-integral numerator grade");
            Int d = numerator(grade);
            if (d < 0)
                throw domain_error("negative numerator grade");
            if (d > depth)
                continue;
            Labels y(n);
            for (int i = 0; i < n; ++i)
                y[i] = images[w][i] + L * beta[i] - 1;
            out[{static_cast<int>(d), y}] += weyl.signs[w];
        }
    };
    // iterate the coefficient box
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n)
        {
            emit();
            return;
        }
        for (int c = -box[pos]; c <= box[pos]; ++c)
        {
            coeff[pos] = c;
            rec(pos + 1);
        }
    };
    rec(0);
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace detail

/// Graded character through the numerator/denominator expansion: the
/// denominator series is the alternating sum at the zero weight (the
/// denominator identity) and the character is recovered by series division.
inline GradedCharacter graded_character_weyl_kac(const SimpleLieAlgebra &g, int level,
                                                 const Labels &lambda, int depth)
{
    const RootSystem &rs = root_system(g);
    if (!is_dominant(lambda) || rs.level_pairing(lambda) > level)
        throw domain_error("highest weight outside the level alcove");
    if (depth < 0)
        throw domain_error("depth must be >= 0");
    const int L = level + rs.dual_coxeter();
    Labels zero(rs.rank(), 0);
    auto numer = detail::alternating_sum(rs, lambda, L, depth);
    auto denom = detail::alternating_sum(rs, zero, rs.dual_coxeter(), depth);

    auto unit = std::make_pair(0, zero);
    if (denom.find(unit) == denom.end() || denom[unit] != 1)
        throw domain_error("denominator series has no unit term");
    for (const auto &[key, c] : denom)
        if (key != unit && key.first == 0 && detail::lattice_height(rs, key.second) >= 0)
            throw domain_error("denominator series is not triangular");

    GradedCharacter ch{g, level, lambda, depth, {}};
    ch.layers.assign(depth + 1, {});
    auto candidates = detail::grade_candidates(rs, lambda, L, depth);
    auto lookup = [&](int d, Labels nu) -> Int {
        if (d < 0)
            return 0;
        rs.make_dominant(nu);
        auto it = ch.layers[d].find(nu);
        return it == ch.layers[d].end() ? Int(0) : it->second;
    };
    for (int d = 0; d <= depth; ++d)
        for (const auto &mu : candidates[d])
        {
            Int val = 0;
            auto nit = numer.find({d, mu});
            if (nit != numer.end())
                val = nit->second;
            for (const auto &[key, c] : denom)
            {
                if (key == unit || key.first > d)
                    continue;
                val -= c * lookup(d - key.first, mu - key.second);
            }
            if (val < 0)
                throw domain_error("negative graded multiplicity in series division");
            if (val != 0)
                ch.layers[d][mu] = val;
        }
    return ch;
}

/// Default route for graded characters.
inline GradedCharacter graded_character(const SimpleLieAlgebra &g, int level,
                                        const Labels &lambda, int depth)
{
    return graded_character_freudenthal(g, level, lambda, depth);
}

/// Runs both routes and insists on layer-by-layer agreement.
inline GradedCharacter crosschecked_character(const SimpleLieAlgebra &g, int level,
                                              const Labels &lambda, int depth)
{
    GradedCharacter a = graded_character_freudenthal(g, level, lambda, depth);
    GradedCharacter b = graded_character_weyl_kac(g, level, lambda, depth);
    if (!(a == b))
        throw crosscheck_error("graded character routes disagree");
    return a;
}

} // namespace blockcount
