#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "fusion.hpp"
#include "root_system.hpp"

namespace blockcount
{

struct crosscheck_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Alcove-size cap for S-matrix construction; overridable through the
/// BLOCKCOUNT_MAX_ALCOVE environment variable.
inline size_t max_alcove_size()
{
    if (const char *env = std::getenv("BLOCKCOUNT_MAX_ALCOVE"))
        return static_cast<size_t>(std::strtoull(env, nullptr, 10));
    return 20000;
}

namespace detail
{

/// Finite Weyl group as signed matrices acting on Dynkin labels.
struct SignedWeylGroup
{
    std::vector<std::vector<int>> matrices; // row-major n x n
    std::vector<int> signs;
};

inline SignedWeylGroup enumerate_weyl_group(const RootSystem &rs, size_t cap = 2000000)
{
    const int n = rs.rank();
    std::vector<std::vector<int>> gens(n, std::vector<int>(n * n, 0));
    for (int k = 0; k < n; ++k)
    {
        for (int i = 0; i < n; ++i)
            gens[k][i * n + i] = 1;
        for (int i = 0; i < n; ++i)
            gens[k][i * n + k] -= rs.cartan()[i][k];
    }
    SignedWeylGroup w;
    std::map<std::vector<int>, int> seen;
    std::vector<int> id(n * n, 0);
    for (int i = 0; i < n; ++i)
        id[i * n + i] = 1;
    seen[id] = 1;
    w.matrices.push_back(id);
    w.signs.push_back(1);
    std::queue<size_t> q;
    q.push(0);
    while (!q.empty())
    {
        size_t cur = q.front();
        q.pop();
        for (int k = 0; k < n; ++k)
        {
            std::vector<int> m(n * n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                {
                    int s = 0;
                    for (int t = 0; t < n; ++t)
                        s += gens[k][i * n + t] * w.matrices[cur][t * n + j];
                    m[i * n + j] = s;
                }
            if (seen.emplace(m, 1).second)
            {
                w.matrices.push_back(m);
                w.signs.push_back(-w.signs[cur]);
                if (w.matrices.size() > cap)
                    throw domain_error("Weyl group enumeration cap exceeded");
                q.push(w.matrices.size() - 1);
            }
        }
    }
    return w;
}

} // namespace detail

/// Kac-Peterson modular S-matrix at level l, indexed by the alcove order.
/// Entries are double precision; the overall normalization and phase are fixed
/// by unitarity and positivity of the vacuum row.
class SMatrix
{
  public:
    SMatrix(const SimpleLieAlgebra &g, int level) : g_(g), level_(level)
    {
        const RootSystem &rs = root_system(g);
        alcove_ = rs.alcove(level);
        if (alcove_.size() > max_alcove_size())
            throw domain_error("alcove size exceeds the configured cap");
        const int n = rs.rank();
        const double L = level + rs.dual_coxeter();
        auto weyl = detail::enumerate_weyl_group(rs);
        // (w(lambda+rho), mu+rho) needs the form matrix; precompute F * (mu+rho)
        std::vector<std::vector<double>> fm(alcove_.size(), std::vector<double>(n, 0));
        for (size_t b = 0; b < alcove_.size(); ++b)
            for (int i = 0; i < n; ++i)
            {
                Labels e(n, 0);
                e[i] = 1;
                Labels mr = alcove_[b];
                for (int j = 0; j < n; ++j)
                    mr[j] += 1;
                fm[b][i] = static_cast<double>(rs.form(e, mr));
            }
        const double twopi = 2.0 * std::numbers::pi;
        s_.assign(alcove_.size(), std::vector<std::complex<double>>(alcove_.size()));
        for (size_t a = 0; a < alcove_.size(); ++a)
        {
            Labels lr = alcove_[a];
            for (int i = 0; i < n; ++i)
                lr[i] += 1;
            for (size_t b = 0; b < alcove_.size(); ++b)
            {
                std::complex<double> sum = 0;
                for (size_t wi = 0; wi < weyl.matrices.size(); ++wi)
                {
                    double pairing = 0;
                    for (int i = 0; i < n; ++i)
                    {
                        int vi = 0;
                        for (int j = 0; j < n; ++j)
                            vi += weyl.matrices[wi][i * n + j] * lr[j];
                        pairing += vi * fm[b][i];
                    }
                    double phase = -twopi * pairing / L;
                    sum += double(weyl.signs[wi]) *
                           std::complex<double>(std::cos(phase), std::sin(phase));
                }
                s_[a][b] = sum;
            }
        }
        // normalize: S S^dagger = c I for the raw Kac-Peterson sums
        double c = 0;
        for (size_t b = 0; b < alcove_.size(); ++b)
            c += std::norm(s_[0][b]);
        double scale = 1.0 / std::sqrt(c);
        std::complex<double> phase = s_[0][0] / std::abs(s_[0][0]);
        std::complex<double> factor = std::conj(phase) * scale;
        for (auto &row : s_)
            for (auto &x : row)
                x *= factor;
    }

    const std::vector<Labels> &alcove() const { return alcove_; }
    std::complex<double> operator()(size_t a, size_t b) const { return s_[a][b]; }
    size_t size() const { return alcove_.size(); }

    size_t index_of(const Labels &w) const
    {
        auto it = std::lower_bound(alcove_.begin(), alcove_.end(), w);
        if (it == alcove_.end() || *it != w)
            throw domain_error("weight not in the level alcove");
        return static_cast<size_t>(it - alcove_.begin());
    }

    /// max |S S^dagger - I| entry, a numerical health check.
    double unitarity_defect() const
    {
        double worst = 0;
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = 0; j < size(); ++j)
            {
                std::complex<double> acc = 0;
                for (size_t k = 0; k < size(); ++k)
                    acc += s_[i][k] * std::conj(s_[j][k]);
                worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
            }
        return worst;
    }

  private:
    SimpleLieAlgebra g_;
    int level_;
    std::vector<Labels> alcove_; // lexicographic; index 0 is the vacuum
    std::vector<std::vector<std::complex<double>>> s_;
};

inline const SMatrix &s_matrix(const SimpleLieAlgebra &g, int level)
{
    static std::mutex mtx;
    static std::map<std::pair<SimpleLieAlgebra, int>, std::unique_ptr<SMatrix>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(g, level);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<SMatrix>(g, level)).first;
    return *it->second;
}

/// Verlinde formula through the S-matrix; the sum must land within
/// `tol` of an integer or a crosscheck_error is thrown.
inline Int verlinde_dim(const VerlindeProblem &p, double tol = 1e-6)
{
    const SMatrix &S = s_matrix(p.algebra, p.level);
    if (p.genus < 0)
        throw domain_error("genus must be >= 0");
    std::vector<size_t> ins;
    for (const auto &w : p.insertions)
        ins.push_back(S.index_of(w));
    std::complex<double> total = 0;
    for (size_t mu = 0; mu < S.size(); ++mu)
    {
        std::complex<double> term = std::pow(S(0, mu), 2.0 - 2.0 * p.genus);
        for (size_t i : ins)
            term *= S(i, mu) / S(0, mu);
        total += term;
    }
    double re = total.real();
    double rounded = std::round(re);
    if (std::abs(re - rounded) > tol || std::abs(total.imag()) > tol)
        throw crosscheck_error("Verlinde sum is not integral within tolerance");
    return Int(static_cast<long long>(rounded));
}

/// Fusion coefficient N_{lambda mu}^{nu} from the S-matrix (Verlinde sum),
/// the numeric referee for the Kac-Walton path.
inline Int fusion_coefficient_from_s(const SimpleLieAlgebra &g, int level,
                                     const Labels &lambda, const Labels &mu,
                                     const Labels &nu, double tol = 1e-6)
{
    const SMatrix &S = s_matrix(g, level);
    size_t a = S.index_of(lambda), b = S.index_of(mu), c = S.index_of(nu);
    std::complex<double> total = 0;
    for (size_t k = 0; k < S.size(); ++k)
        total += S(a, k) * S(b, k) * std::conj(S(c, k)) / S(0, k);
    double re = total.real();
    double rounded = std::round(re);
    if (std::abs(re - rounded) > tol || std::abs(total.imag()) > tol)
        throw crosscheck_error("fusion Verlinde sum is not integral within tolerance");
    return Int(static_cast<long long>(rounded));
}

} // namespace blockcount
