#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace blockcount
{

enum class Family : char
{
    A = 'A',
    B = 'B',
    C = 'C',
    D = 'D',
    E = 'E',
    F = 'F',
    G = 'G'
};

struct domain_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A simple Lie algebra identified by its family letter and rank
/// (Bourbaki numbering throughout). Low-rank aliases are canonicalized:
/// B1, C1 -> A1 and D3 -> A3; D2 is rejected (not simple).
struct SimpleLieAlgebra
{
    Family family;
    int rank;

    bool operator==(const SimpleLieAlgebra &o) const = default;
    auto operator<=>(const SimpleLieAlgebra &o) const = default;

    std::string name() const
    {
        return std::string(1, static_cast<char>(family)) + std::to_string(rank);
    }
};

inline SimpleLieAlgebra make_algebra(Family f, int n)
{
    switch (f)
    {
    case Family::A:
        if (n < 1)
            throw domain_error("A_n requires n >= 1");
        return {Family::A, n};
    case Family::B:
        if (n == 1)
            return {Family::A, 1};
        if (n < 2)
            throw domain_error("B_n requires n >= 1");
        return {Family::B, n};
    case Family::C:
        if (n == 1)
            return {Family::A, 1};
        if (n < 2)
            throw domain_error("C_n requires n >= 1");
        return {Family::C, n};
    case Family::D:
        if (n == 3)
            return {Family::A, 3};
        if (n == 2)
            throw domain_error("D2 is not simple");
        if (n < 4)
            throw domain_error("D_n requires n >= 3");
        return {Family::D, n};
    case Family::E:
        if (n < 6 || n > 8)
            throw domain_error("E_n requires n in {6,7,8}");
        return {Family::E, n};
    case Family::F:
        if (n != 4)
            throw domain_error("F_n requires n = 4");
        return {Family::F, 4};
    case Family::G:
        if (n != 2)
            throw domain_error("G_n requires n = 2");
        return {Family::G, 2};
    }
    throw domain_error("unknown family");
}

/// Parses descriptors like "A2", "D4", and matrix-style aliases
/// "sl3", "so7", "so8", "sp4".
inline SimpleLieAlgebra parse_algebra(const std::string &s)
{
    if (s.size() < 2)
        throw domain_error("cannot parse algebra descriptor '" + s + "'");
    auto num_from = [&](size_t pos) -> int {
        for (size_t i = pos; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw domain_error("cannot parse algebra descriptor '" + s + "'");
        return std::stoi(s.substr(pos));
    };
    char c0 = s[0];
    if (c0 >= 'A' && c0 <= 'G')
        return make_algebra(static_cast<Family>(c0), num_from(1));
    if (s.rfind("sl", 0) == 0)
    {
        int N = num_from(2);
        if (N < 2)
            throw domain_error("sl_N requires N >= 2");
        return make_algebra(Family::A, N - 1);
    }
    if (s.rfind("so", 0) == 0)
    {
        int N = num_from(2);
        if (N < 3)
            throw domain_error("so_N requires N >= 3");
        if (N % 2 == 1)
            return make_algebra(Family::B, (N - 1) / 2);
        return make_algebra(Family::D, N / 2);
    }
    if (s.rfind("sp", 0) == 0)
    {
        int N = num_from(2);
        if (N < 2 || N % 2 != 0)
            throw domain_error("sp_N requires even N >= 2");
        return make_algebra(Family::C, N / 2);
    }
    throw domain_error("cannot parse algebra descriptor '" + s + "'");
}

/// Finite-type Cartan matrix a_ij = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
/// in Bourbaki numbering.
inline std::vector<std::vector<int>> cartan_matrix(const SimpleLieAlgebra &g)
{
    const int n = g.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (g.family)
    {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i)
            chain(i, i + 1);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i)
            chain(i, i + 1);
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        a[n - 1][n - 2] = -2;
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i)
            chain(i, i + 1);
        // alpha_n long
        a[n - 2][n - 1] = -2;
        break;
    case Family::D:
        for (int i = 0; i + 1 < n - 1; ++i)
            chain(i, i + 1);
        chain(n - 3, n - 1);
        break;
    case Family::E:
        // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
        chain(0, 2);
        chain(2, 3);
        chain(3, 4);
        chain(1, 3);
        for (int i = 4; i + 1 < n; ++i)
            chain(i, i + 1);
        break;
    case Family::F:
        chain(0, 1);
        chain(1, 2);
        chain(2, 3);
        // alpha_3, alpha_4 short
        a[2][1] = -2;
        break;
    case Family::G:
        // alpha_1 short, alpha_2 long
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    }
    return a;
}

/// Symmetrizers d_i = (alpha_i,alpha_i)/2 in the normalization (theta,theta)=2.
inline std::vector<Rat> symmetrizers(const SimpleLieAlgebra &g)
{
    const int n = g.rank;
    std::vector<Rat> d(n, Rat(1));
    switch (g.family)
    {
    case Family::B:
        d[n - 1] = Rat(1, 2);
        break;
    case Family::C:
        for (int i = 0; i + 1 < n; ++i)
            d[i] = Rat(1, 2);
        break;
    case Family::F:
        d[2] = d[3] = Rat(1, 2);
        break;
    case Family::G:
        d[0] = Rat(1, 3);
        break;
    default:
        break;
    }
    return d;
}

/// dim g, closed form (cross-checked against root enumeration in tests).
inline Int dim_algebra(const SimpleLieAlgebra &g)
{
    const Int n = g.rank;
    switch (g.family)
    {
    case Family::A:
        return n * (n + 2);
    case Family::B:
    case Family::C:
        return n * (2 * n + 1);
    case Family::D:
        return n * (2 * n - 1);
    case Family::E:
        return g.rank == 6 ? 78 : (g.rank == 7 ? 133 : 248);
    case Family::F:
        return 52;
    case Family::G:
        return 14;
    }
    throw domain_error("unknown family");
}

/// Dual Coxeter number, closed form (equals 1 + (rho,theta); see tests).
inline int dual_coxeter(const SimpleLieAlgebra &g)
{
    const int n = g.rank;
    switch (g.family)
    {
    case Family::A:
        return n + 1;
    case Family::B:
        return 2 * n - 1;
    case Family::C:
        return n + 1;
    case Family::D:
        return 2 * n - 2;
    case Family::E:
        return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F:
        return 9;
    case Family::G:
        return 4;
    }
    throw domain_error("unknown family");
}

/// so(N) as a SimpleLieAlgebra; rejects N for which so_N is not simple.
inline SimpleLieAlgebra orthogonal_algebra(const Int &N)
{
    if (N < 3)
        throw domain_error("so_N requires N >= 3");
    int n = static_cast<int>(N);
    if (n % 2 == 1)
        return make_algebra(Family::B, (n - 1) / 2);
    return make_algebra(Family::D, n / 2);
}

inline SimpleLieAlgebra special_linear_algebra(const Int &N)
{
    if (N < 2)
        throw domain_error("sl_N requires N >= 2");
    return make_algebra(Family::A, static_cast<int>(N) - 1);
}

} // namespace blockcount
