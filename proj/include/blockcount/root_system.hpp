#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "algebra.hpp"
#include "rational.hpp"

namespace blockcount
{

/// Dynkin labels (coordinates in the fundamental-weight basis).
using Labels = std::vector<int>;

struct LabelsHash
{
    size_t operator()(const Labels &v) const
    {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (int x : v)
            h = h * 1099511628211ull + static_cast<size_t>(x + (1 << 20));
        return h;
    }
};

inline Labels operator+(const Labels &a, const Labels &b)
{
    Labels r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Labels operator-(const Labels &a, const Labels &b)
{
    Labels r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline bool is_dominant(const Labels &v)
{
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

/// Exact root-system and weight-lattice data for one simple Lie algebra.
/// All tables are built once in the constructor and immutable afterwards;
/// every member function is const and safe for concurrent use.
class RootSystem
{
  public:
    explicit RootSystem(const SimpleLieAlgebra &g)
        : g_(g), n_(g.rank), cartan_(cartan_matrix(g)), d_(symmetrizers(g))
    {
        build_inverse_cartan();
        build_form();
        enumerate_roots();
        theta_coords_ = positive_roots_.back(); // unique root of maximal height
        theta_labels_ = root_labels(theta_coords_);
        comarks_.resize(n_);
        for (int i = 0; i < n_; ++i)
        {
            Rat c = Rat(theta_coords_[i]) * d_[i];
            if (!is_integer(c))
                throw domain_error("non-integer comark");
            comarks_[i] = static_cast<int>(numerator(c));
        }
        h_dual_ = 1 + std::accumulate(comarks_.begin(), comarks_.end(), 0);
        rho_.assign(n_, 1);
    }

    const SimpleLieAlgebra &algebra() const { return g_; }
    int rank() const { return n_; }
    const std::vector<std::vector<int>> &cartan() const { return cartan_; }
    const std::vector<Rat> &symmetrizer() const { return d_; }
    const std::vector<Labels> &positive_roots() const { return positive_roots_; }
    const Labels &theta_coords() const { return theta_coords_; }
    const Labels &theta() const { return theta_labels_; }
    const std::vector<int> &comarks() const { return comarks_; }
    const Labels &rho() const { return rho_; }
    int dual_coxeter() const { return h_dual_; }
    Int dim() const { return Int(n_) + Int(2) * Int(positive_roots_.size()); }

    /// Normalized invariant form on the weight lattice, (theta,theta) = 2.
    Rat form(const Labels &a, const Labels &b) const
    {
        if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
            throw domain_error("weight dimension mismatch");
        Rat s = 0;
        for (int i = 0; i < n_; ++i)
        {
            if (a[i] == 0)
                continue;
            for (int j = 0; j < n_; ++j)
                if (b[j] != 0)
                    s += Rat(a[i]) * form_[i][j] * b[j];
        }
        return s;
    }

    /// (mu, alpha) for mu in labels and alpha in simple-root coordinates.
    Rat form_weight_root(const Labels &mu, const Labels &coords) const
    {
        Rat s = 0;
        for (int i = 0; i < n_; ++i)
            if (mu[i] != 0 && coords[i] != 0)
                s += Rat(mu[i]) * d_[i] * coords[i];
        return s;
    }

    /// Labels of a root given in simple-root coordinates.
    Labels root_labels(const Labels &coords) const
    {
        Labels v(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k)
                v[i] += cartan_[i][k] * coords[k];
        return v;
    }

    /// (lambda, theta), the alcove pairing; integer valued on the weight lattice.
    int level_pairing(const Labels &v) const
    {
        long s = 0;
        for (int i = 0; i < n_; ++i)
            s += static_cast<long>(v[i]) * comarks_[i];
        return static_cast<int>(s);
    }

    /// Simple reflection s_k acting on labels, in place.
    void reflect(int k, Labels &v) const
    {
        int c = v[k];
        if (c == 0)
            return;
        for (int i = 0; i < n_; ++i)
            v[i] -= c * cartan_[i][k];
    }

    /// Reflects v into the dominant chamber; returns the reflection count parity
    /// as a sign (+1/-1). Points on a wall map to themselves with some order.
    int make_dominant(Labels &v) const
    {
        int sign = 1;
        bool again = true;
        while (again)
        {
            again = false;
            for (int k = 0; k < n_; ++k)
                if (v[k] < 0)
                {
                    reflect(k, v);
                    sign = -sign;
                    again = true;
                }
        }
        return sign;
    }

    /// Dominant-chamber representative with sign for rho-shifted weights:
    /// returns 0 when v lies on a reflection wall.
    int dominant_with_sign(Labels &v) const
    {
        int sign = 1;
        bool again = true;
        while (again)
        {
            again = false;
            for (int k = 0; k < n_; ++k)
            {
                if (v[k] == 0)
                    return 0;
                if (v[k] < 0)
                {
                    reflect(k, v);
                    sign = -sign;
                    again = true;
                }
            }
        }
        return sign;
    }

    /// -w0(lambda): the duality involution on dominant weights.
    Labels dual(const Labels &lambda) const
    {
        Labels v(n_);
        for (int i = 0; i < n_; ++i)
            v[i] = -lambda[i];
        make_dominant(v);
        return v;
    }

    /// Weyl dimension formula, exact.
    Int weyl_dim(const Labels &lambda) const
    {
        if (!is_dominant(lambda))
            throw domain_error("weyl_dim requires a dominant weight");
        Rat num = 1, den = 1;
        Labels lr = lambda + rho_;
        for (const auto &alpha : positive_roots_)
        {
            num *= form_weight_root(lr, alpha);
            den *= form_weight_root(rho_, alpha);
        }
        Rat q = num / den;
        if (!is_integer(q))
            throw domain_error("non-integral Weyl dimension");
        return numerator(q);
    }

    /// All dominant weights with (lambda,theta) <= level, lexicographic order.
    std::vector<Labels> alcove(int level) const
    {
        if (level < 1)
            throw domain_error("level must be >= 1");
        std::vector<Labels> out;
        Labels cur(n_, 0);
        alcove_rec(0, level, cur, out);
        return out;
    }

    /// Full Weyl orbit of a weight.
    std::vector<Labels> weyl_orbit(const Labels &start) const
    {
        std::vector<Labels> orbit;
        std::unordered_set<Labels, LabelsHash> seen;
        std::queue<Labels> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty())
        {
            Labels v = q.front();
            q.pop();
            orbit.push_back(v);
            for (int k = 0; k < n_; ++k)
            {
                Labels w = v;
                reflect(k, w);
                if (seen.insert(w).second)
                    q.push(w);
            }
        }
        return orbit;
    }

    /// Dominant weights of the irreducible module V_lambda with multiplicities
    /// (finite Freudenthal recursion, exact).
    std::map<Labels, Int> dominant_weight_mults(const Labels &lambda) const
    {
        if (!is_dominant(lambda))
            throw domain_error("dominant weight required");
        // saturation closure of the weight system
        std::unordered_set<Labels, LabelsHash> weights;
        std::queue<Labels> q;
        weights.insert(lambda);
        q.push(lambda);
        while (!q.empty())
        {
            Labels v = q.front();
            q.pop();
            for (int k = 0; k < n_; ++k)
            {
                int m = v[k];
                Labels w = v;
                for (int step = 1; step <= m; ++step)
                {
                    for (int i = 0; i < n_; ++i)
                        w[i] -= cartan_[i][k];
                    if (weights.insert(w).second)
                        q.push(w);
                }
            }
        }
        // dominant representatives sorted by height gap
        std::vector<std::pair<int, Labels>> dominants;
        for (const auto &w : weights)
            if (is_dominant(w))
                dominants.push_back({height_gap(lambda, w), w});
        std::sort(dominants.begin(), dominants.end());

        std::map<Labels, Int> mult;
        Labels lr = lambda + rho_;
        Rat top_norm = form(lr, lr);
        for (const auto &[gap, mu] : dominants)
        {
            if (gap == 0)
            {
                mult[mu] = 1;
                continue;
            }
            Rat acc = 0;
            for (const auto &alpha : positive_roots_)
            {
                Labels al = root_labels(alpha);
                Labels v = mu;
                for (int k = 1;; ++k)
                {
                    for (int i = 0; i < n_; ++i)
                        v[i] += al[i];
                    Labels dom = v;
                    make_dominant(dom);
                    auto it = mult.find(dom);
                    if (it == mult.end())
                        break;
                    acc += Rat(it->second) * form_weight_root(v, alpha);
                }
            }
            Labels mr = mu + rho_;
            Rat denom = top_norm - form(mr, mr);
            Rat m = 2 * acc / denom;
            if (!is_integer(m))
                throw domain_error("non-integral Freudenthal multiplicity");
            mult[mu] = numerator(m);
        }
        return mult;
    }

    /// The full weight system of V_lambda as (weight, multiplicity) pairs.
    std::vector<std::pair<Labels, Int>> weight_system(const Labels &lambda) const
    {
        std::vector<std::pair<Labels, Int>> out;
        for (const auto &[mu, m] : dominant_weight_mults(lambda))
            for (const auto &w : weyl_orbit(mu))
                out.push_back({w, m});
        return out;
    }

    /// Height of lambda - mu as an element of the positive root cone
    /// (sum of simple-root coefficients); throws if not in the root lattice.
    int height_gap(const Labels &lambda, const Labels &mu) const
    {
        Rat s = 0;
        for (int i = 0; i < n_; ++i)
        {
            Rat c = 0;
            for (int j = 0; j < n_; ++j)
                c += ainv_[i][j] * (lambda[j] - mu[j]);
            s += c;
        }
        if (!is_integer(s))
            throw domain_error("weights differ by a non-root-lattice vector");
        return static_cast<int>(numerator(s));
    }

    /// Simple-root coordinates of lambda - mu (exact; entries may be negative).
    std::vector<Rat> root_coordinates(const Labels &v) const
    {
        std::vector<Rat> c(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                c[i] += ainv_[i][j] * v[j];
        return c;
    }

  private:
    void build_inverse_cartan()
    {
        // exact Gauss-Jordan
        std::vector<std::vector<Rat>> m(n_, std::vector<Rat>(2 * n_, 0));
        for (int i = 0; i < n_; ++i)
        {
            for (int j = 0; j < n_; ++j)
                m[i][j] = cartan_[i][j];
            m[i][n_ + i] = 1;
        }
        for (int col = 0; col < n_; ++col)
        {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (m[r][col] != 0)
                {
                    piv = r;
                    break;
                }
            if (piv < 0)
                throw domain_error("singular Cartan matrix");
            std::swap(m[col], m[piv]);
            Rat p = m[col][col];
            for (auto &x : m[col])
                x /= p;
            for (int r = 0; r < n_; ++r)
                if (r != col && m[r][col] != 0)
                {
                    Rat f = m[r][col];
                    for (int c = 0; c < 2 * n_; ++c)
                        m[r][c] -= f * m[col][c];
                }
        }
        ainv_.assign(n_, std::vector<Rat>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                ainv_[i][j] = m[i][n_ + j];
    }

    void build_form()
    {
        // (omega_i, omega_j) = (A^{-1})_{ji} d_j
        form_.assign(n_, std::vector<Rat>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                form_[i][j] = ainv_[j][i] * d_[j];
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < i; ++j)
                if (form_[i][j] != form_[j][i])
                    throw domain_error("asymmetric normalized form");
    }

    void enumerate_roots()
    {
        // height-by-height closure from the simple roots
        std::unordered_set<Labels, LabelsHash> known;
        std::vector<Labels> frontier;
        for (int i = 0; i < n_; ++i)
        {
            Labels e(n_, 0);
            e[i] = 1;
            known.insert(e);
            frontier.push_back(e);
            positive_roots_.push_back(e);
        }
        while (!frontier.empty())
        {
            std::vector<Labels> next;
            for (const auto &beta : frontier)
            {
                Labels lab = root_labels(beta);
                for (int i = 0; i < n_; ++i)
                {
                    // p = max k with beta - k*alpha_i a root
                    int p = 0;
                    Labels down = beta;
                    for (;;)
                    {
                        down[i] -= 1;
                        bool nonneg = std::any_of(down.begin(), down.end(),
                                                  [](int x) { return x != 0; });
                        if (!nonneg || down[i] < 0 || !known.count(down))
                            break;
                        ++p;
                    }
                    if (p - lab[i] > 0)
                    {
                        Labels up = beta;
                        up[i] += 1;
                        if (known.insert(up).second)
                            next.push_back(up);
                    }
                }
            }
            std::sort(next.begin(), next.end());
            for (const auto &r : next)
                positive_roots_.push_back(r);
            frontier = std::move(next);
        }
    }

    void alcove_rec(int pos, int budget, Labels &cur, std::vector<Labels> &out) const
    {
        if (pos == n_)
        {
            out.push_back(cur);
            return;
        }
        int cm = comarks_[pos];
        for (int v = 0; v * cm <= budget; ++v)
        {
            cur[pos] = v;
            alcove_rec(pos + 1, budget - v * cm, cur, out);
        }
        cur[pos] = 0;
    }

    SimpleLieAlgebra g_;
    int n_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rat> d_;
    std::vector<std::vector<Rat>> ainv_;
    std::vector<std::vector<Rat>> form_;
    std::vector<Labels> positive_roots_; // simple-root coordinates, by height
    Labels theta_coords_;
    Labels theta_labels_;
    std::vector<int> comarks_;
    Labels rho_;
    int h_dual_ = 0;
};

/// Process-wide cache: one immutable RootSystem per algebra,
/// built under a mutex on first use.
inline const RootSystem &root_system(const SimpleLieAlgebra &g)
{
    static std::mutex mtx;
    static std::map<SimpleLieAlgebra, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(g);
    if (it == cache.end())
        it = cache.emplace(g, std::make_unique<RootSystem>(g)).first;
    return *it->second;
}

} // namespace blockcount
