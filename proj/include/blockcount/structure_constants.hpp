#pragma once

#include <vector>

#include "algebra.hpp"
#include "rational.hpp"

namespace blockcount
{

using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix rat_zeros(int r, int c) { return RatMatrix(r, std::vector<Rat>(c, 0)); }

inline RatMatrix rat_identity(int n)
{
    RatMatrix m = rat_zeros(n, n);
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline RatMatrix rat_mul(const RatMatrix &a, const RatMatrix &b)
{
    int r = a.size(), k = b.size(), c = b[0].size();
    RatMatrix m = rat_zeros(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t)
        {
            if (a[i][t] == 0)
                continue;
            for (int j = 0; j < c; ++j)
                if (b[t][j] != 0)
                    m[i][j] += a[i][t] * b[t][j];
        }
    return m;
}

inline RatMatrix rat_bracket(const RatMatrix &a, const RatMatrix &b)
{
    RatMatrix ab = rat_mul(a, b), ba = rat_mul(b, a);
    for (size_t i = 0; i < ab.size(); ++i)
        for (size_t j = 0; j < ab[i].size(); ++j)
            ab[i][j] -= ba[i][j];
    return ab;
}

inline Rat rat_trace_mul(const RatMatrix &a, const RatMatrix &b)
{
    Rat s = 0;
    int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a[i][j] != 0 && b[j][i] != 0)
                s += a[i][j] * b[j][i];
    return s;
}

inline RatMatrix rat_inverse(const RatMatrix &a)
{
    int n = a.size();
    RatMatrix m = rat_zeros(n, 2 * n);
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
            m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col)
    {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0)
            {
                piv = r;
                break;
            }
        if (piv < 0)
            throw domain_error("singular matrix");
        std::swap(m[col], m[piv]);
        Rat p = m[col][col];
        for (auto &x : m[col])
            x /= p;
        for (int r = 0; r < n; ++r)
            if (r != col && m[r][col] != 0)
            {
                Rat f = m[r][col];
                for (int c = 0; c < 2 * n; ++c)
                    m[r][c] -= f * m[col][c];
            }
    }
    RatMatrix inv = rat_zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

/// Exact structure constants [x_i, x_j] = sum_k c[i][j][k] x_k of a simple
/// Lie algebra in a basis generated from defining-representation Chevalley
/// generators. Classical families only, rank <= 4.
struct StructureConstants
{
    SimpleLieAlgebra algebra;
    int dimension;
    std::vector<std::vector<std::vector<Rat>>> c;

    /// ad(x_k) as a dimension x dimension matrix.
    RatMatrix ad(int k) const
    {
        RatMatrix m = rat_zeros(dimension, dimension);
        for (int j = 0; j < dimension; ++j)
            for (int i = 0; i < dimension; ++i)
                m[i][j] = c[k][j][i];
        return m;
    }
};

namespace detail
{

/// Incremental exact span tracker over flattened matrices.
class SpanBasis
{
  public:
    explicit SpanBasis(int veclen) : veclen_(veclen) {}

    /// Adds v to the span if independent; returns true when added.
    bool add(const std::vector<Rat> &v)
    {
        std::vector<Rat> r = reduce_only(v);
        int piv = -1;
        for (int i = 0; i < veclen_; ++i)
            if (r[i] != 0)
            {
                piv = i;
                break;
            }
        if (piv < 0)
            return false;
        Rat p = r[piv];
        for (auto &x : r)
            x /= p;
        rows_.push_back(r);
        pivots_.push_back(piv);
        return true;
    }

    /// Coefficients of v against an external basis B given the reduction
    /// data; here we only need membership-free reduction.
    std::vector<Rat> reduce_only(std::vector<Rat> v) const
    {
        for (size_t k = 0; k < rows_.size(); ++k)
        {
            Rat f = v[pivots_[k]];
            if (f == 0)
                continue;
            for (int i = 0; i < veclen_; ++i)
                if (rows_[k][i] != 0)
                    v[i] -= f * rows_[k][i];
        }
        return v;
    }

    size_t size() const { return rows_.size(); }

  private:
    int veclen_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<int> pivots_;
};

inline std::vector<Rat> flatten(const RatMatrix &m)
{
    std::vector<Rat> v;
    v.reserve(m.size() * m.size());
    for (const auto &row : m)
        for (const auto &x : row)
            v.push_back(x);
    return v;
}

/// Defining-representation Chevalley generators (antidiagonal bilinear form
/// realizations for so and sp).
inline void classical_generators(const SimpleLieAlgebra &g, std::vector<RatMatrix> &e,
                                 std::vector<RatMatrix> &f)
{
    const int n = g.rank;
    auto E = [](int N, int i, int j) { // 1-based elementary matrix
        RatMatrix m = rat_zeros(N, N);
        m[i - 1][j - 1] = 1;
        return m;
    };
    auto sub = [](RatMatrix a, const RatMatrix &b) {
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j)
                a[i][j] -= b[i][j];
        return a;
    };
    e.clear();
    f.clear();
    switch (g.family)
    {
    case Family::A:
    {
        int N = n + 1;
        for (int i = 1; i <= n; ++i)
        {
            e.push_back(E(N, i, i + 1));
            f.push_back(E(N, i + 1, i));
        }
        break;
    }
    case Family::B:
    {
        int N = 2 * n + 1;
        for (int i = 1; i < n; ++i)
        {
            e.push_back(sub(E(N, i, i + 1), E(N, N - i, N + 1 - i)));
            f.push_back(sub(E(N, i + 1, i), E(N, N + 1 - i, N - i)));
        }
        e.push_back(sub(E(N, n, n + 1), E(N, n + 1, n + 2)));
        f.push_back(sub(E(N, n + 1, n), E(N, n + 2, n + 1)));
        break;
    }
    case Family::C:
    {
        int N = 2 * n;
        for (int i = 1; i < n; ++i)
        {
            e.push_back(sub(E(N, i, i + 1), E(N, N - i, N + 1 - i)));
            f.push_back(sub(E(N, i + 1, i), E(N, N + 1 - i, N - i)));
        }
        e.push_back(E(N, n, n + 1));
        f.push_back(E(N, n + 1, n));
        break;
    }
    case Family::D:
    {
        int N = 2 * n;
        for (int i = 1; i < n; ++i)
        {
            e.push_back(sub(E(N, i, i + 1), E(N, N - i, N + 1 - i)));
            f.push_back(sub(E(N, i + 1, i), E(N, N + 1 - i, N - i)));
        }
        e.push_back(sub(E(N, n - 1, n + 1), E(N, n, n + 2)));
        f.push_back(sub(E(N, n + 1, n - 1), E(N, n + 2, n)));
        break;
    }
    default:
        throw domain_error("structure constants: classical families (A,B,C,D) only");
    }
}

} // namespace detail

/// Builds exact structure constants from the defining representation:
/// the basis is the bracket closure of the Chevalley generators.
inline StructureConstants structure_constants(const SimpleLieAlgebra &g)
{
    if (g.rank > 4)
        throw domain_error("structure constants: rank cap 4 exceeded");
    std::vector<RatMatrix> e, f;
    detail::classical_generators(g, e, f);
    const int N = e[0].size();

    std::vector<RatMatrix> basis;
    detail::SpanBasis span(N * N);
    auto try_add = [&](const RatMatrix &m) {
        if (span.add(detail::flatten(m)))
            basis.push_back(m);
    };
    for (size_t i = 0; i < e.size(); ++i)
        try_add(rat_bracket(e[i], f[i])); // h_i first
    for (const auto &m : e)
        try_add(m);
    for (const auto &m : f)
        try_add(m);
    for (size_t grow = 0; grow < basis.size(); ++grow)
        for (size_t j = 0; j < basis.size(); ++j)
            try_add(rat_bracket(basis[grow], basis[j]));
    const int d = basis.size();
    if (Int(d) != dim_algebra(g))
        throw domain_error("bracket closure has unexpected dimension");

    // express arbitrary matrices in the generated basis (exact least-change
    // Gaussian elimination on the stacked system)
    std::vector<std::vector<Rat>> flat;
    for (const auto &b : basis)
        flat.push_back(detail::flatten(b));
    // row-reduce [flat | I] to solve coefficient systems
    std::vector<std::vector<Rat>> red = flat;
    RatMatrix trans = rat_identity(d);
    std::vector<int> pivots(d, -1);
    for (int r = 0; r < d; ++r)
    {
        int piv = -1;
        for (int cidx = 0; cidx < N * N && piv < 0; ++cidx)
        {
            if (red[r][cidx] != 0)
            {
                bool used = false;
                for (int rr = 0; rr < r; ++rr)
                    if (pivots[rr] == cidx)
                        used = true;
                if (!used)
                    piv = cidx;
            }
        }
        if (piv < 0)
            throw domain_error("dependent basis row");
        pivots[r] = piv;
        Rat p = red[r][piv];
        for (auto &x : red[r])
            x /= p;
        for (auto &x : trans[r])
            x /= p;
        for (int rr = 0; rr < d; ++rr)
            if (rr != r && red[rr][piv] != 0)
            {
                Rat fct = red[rr][piv];
                for (int cidx = 0; cidx < N * N; ++cidx)
                    red[rr][cidx] -= fct * red[r][cidx];
                for (int cidx = 0; cidx < d; ++cidx)
                    trans[rr][cidx] -= fct * trans[r][cidx];
            }
    }
    auto coefficients = [&](const RatMatrix &m) {
        std::vector<Rat> v = detail::flatten(m);
        std::vector<Rat> coef(d, 0);
        for (int r = 0; r < d; ++r)
        {
            Rat fct = v[pivots[r]];
            if (fct == 0)
                continue;
            for (int cidx = 0; cidx < N * N; ++cidx)
                v[cidx] -= fct * red[r][cidx];
            for (int cidx = 0; cidx < d; ++cidx)
                coef[cidx] += fct * trans[r][cidx];
        }
        for (const auto &x : v)
            if (x != 0)
                throw domain_error("matrix outside the algebra span");
        return coef;
    };

    StructureConstants sc{g, d, {}};
    sc.c.assign(d, std::vector<std::vector<Rat>>(d, std::vector<Rat>(d, 0)));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
        {
            auto coef = coefficients(rat_bracket(basis[i], basis[j]));
            for (int k = 0; k < d; ++k)
            {
                sc.c[i][j][k] = coef[k];
                sc.c[j][i][k] = -coef[k];
            }
        }
    return sc;
}

/// Killing form K(x_i,x_j) = trace(ad x_i ad x_j); exact, non-degenerate.
inline RatMatrix killing_form(const StructureConstants &sc)
{
    const int d = sc.dimension;
    std::vector<RatMatrix> ads;
    for (int k = 0; k < d; ++k)
        ads.push_back(sc.ad(k));
    RatMatrix K = rat_zeros(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            K[i][j] = K[j][i] = rat_trace_mul(ads[i], ads[j]);
    rat_inverse(K); // throws on a degenerate form
    return K;
}

/// Orthogonal projection gl(g) -> g with respect to trace(AB), in the
/// adjoint realization. Rows index the basis of g, columns the d*d entries
/// of gl (row-major).
struct ProjectionOperator
{
    int dimension;
    RatMatrix matrix; // d x d^2

    /// Applies the projection to M in gl(g); returns coefficients in the
    /// structure-constant basis.
    std::vector<Rat> apply(const RatMatrix &m) const
    {
        std::vector<Rat> out(dimension, 0);
        for (int k = 0; k < dimension; ++k)
            for (int i = 0; i < dimension; ++i)
                for (int j = 0; j < dimension; ++j)
                    if (matrix[k][i * dimension + j] != 0 && m[i][j] != 0)
                        out[k] += matrix[k][i * dimension + j] * m[i][j];
        return out;
    }
};

inline ProjectionOperator adjoint_projection(const StructureConstants &sc)
{
    const int d = sc.dimension;
    std::vector<RatMatrix> ads;
    for (int k = 0; k < d; ++k)
        ads.push_back(sc.ad(k));
    RatMatrix K = killing_form(sc);
    RatMatrix Kinv = rat_inverse(K);
    // P(M) = sum_k (K^{-1} t)_k x_k with t_l = trace(ad x_l * M)
    ProjectionOperator P{d, rat_zeros(d, d * d)};
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
        {
            if (Kinv[k][l] == 0)
                continue;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    // trace(ad x_l M) = sum_ij (ad x_l)_{ij} M_{ji}
                    P.matrix[k][j * d + i] += Kinv[k][l] * ads[l][i][j];
        }
    return P;
}

/// dim of the Killing-orthogonal complement of ad(g) inside sl(g):
/// d^2 - 1 - d, verified against the rank of the trace pairing.
inline int orthogonal_complement_dim(const StructureConstants &sc)
{
    const int d = sc.dimension;
    // rank of M -> (trace(ad x_k M))_k restricted to sl equals d because the
    // Killing Gram matrix is invertible and trace(ad x) = 0
    rat_inverse(killing_form(sc));
    return d * d - 1 - d;
}

/// The Casimir tensor gamma = sum K^{ab} x_a (x) x_b (inverse Killing Gram).
struct CasimirTensor
{
    int dimension;
    RatMatrix gamma;
};

inline CasimirTensor casimir_tensor(const StructureConstants &sc)
{
    return {sc.dimension, rat_inverse(killing_form(sc))};
}

} // namespace blockcount
