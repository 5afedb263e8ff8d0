#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"

namespace blockcount
{

/// F2^{2g} vectors are bitmasks; bit 2i is a_i, bit 2i+1 is b_i of the
/// fixed hyperbolic basis (a_1,b_1,...,a_g,b_g).
using F2Vector = uint32_t;

/// The standard symplectic space over F2 of genus g with the hyperbolic
/// Weil pairing <a_i,b_i> = 1.
struct SymplecticSpaceF2
{
    int genus;

    explicit SymplecticSpaceF2(int g) : genus(g)
    {
        if (g < 1)
            throw domain_error("genus must be >= 1");
        if (g > 15)
            throw domain_error("genus enumeration bound exceeded");
    }

    int dim() const { return 2 * genus; }
    uint32_t vector_count() const { return 1u << dim(); }

    int pairing(F2Vector x, F2Vector y) const
    {
        int s = 0;
        for (int i = 0; i < genus; ++i)
        {
            int xa = (x >> (2 * i)) & 1, xb = (x >> (2 * i + 1)) & 1;
            int ya = (y >> (2 * i)) & 1, yb = (y >> (2 * i + 1)) & 1;
            s ^= (xa & yb) ^ (xb & ya);
        }
        return s;
    }
};

/// A quadratic refinement q of the Weil pairing: q(x+y) = q(x)+q(y)+<x,y>.
/// Stored by its values on the basis; q on arbitrary vectors follows from
/// the polarization identity.
struct QuadraticFormF2
{
    SymplecticSpaceF2 space;
    uint32_t basis_values; // bit k = q(e_k)

    int operator()(F2Vector x) const
    {
        int s = 0;
        int n = space.dim();
        for (int i = 0; i < n; ++i)
        {
            if (!((x >> i) & 1))
                continue;
            s ^= (basis_values >> i) & 1;
            for (int j = i + 1; j < n; ++j)
                if ((x >> j) & 1)
                    s ^= space.pairing(1u << i, 1u << j);
        }
        return s;
    }

    bool operator==(const QuadraticFormF2 &o) const
    {
        return space.genus == o.space.genus && basis_values == o.basis_values;
    }
};

/// All 2^{2g} quadratic refinements, ordered by their basis value vectors.
inline std::vector<QuadraticFormF2> enumerate_theta(const SymplecticSpaceF2 &space)
{
    if (space.genus > 6)
        throw domain_error("enumerate_theta bound: genus <= 6");
    std::vector<QuadraticFormF2> out;
    out.reserve(space.vector_count());
    for (uint32_t v = 0; v < space.vector_count(); ++v)
        out.push_back({space, v});
    return out;
}

/// Arf invariant: sum of q(a_i) q(b_i) over the hyperbolic basis.
/// Separates even (0) from odd (1) theta characteristics.
inline int arf(const QuadraticFormF2 &q)
{
    int s = 0;
    for (int i = 0; i < q.space.genus; ++i)
        s ^= q(1u << (2 * i)) & q(1u << (2 * i + 1));
    return s;
}

/// Torsor action of a character chi: (chi . q)(x) = q(x) + <chi, x>.
inline QuadraticFormF2 act_character(F2Vector chi, const QuadraticFormF2 &q)
{
    QuadraticFormF2 r = q;
    for (int k = 0; k < q.space.dim(); ++k)
        if (q.space.pairing(chi, 1u << k))
            r.basis_values ^= 1u << k;
    return r;
}

/// #even = 2^{g-1}(2^g+1) by exhaustive enumeration.
inline Int count_even(int genus)
{
    SymplecticSpaceF2 space(genus);
    Int even = 0;
    for (const auto &q : enumerate_theta(space))
        if (arf(q) == 0)
            ++even;
    return even;
}

inline Int count_odd(int genus)
{
    SymplecticSpaceF2 space(genus);
    return Int(space.vector_count()) - count_even(genus);
}

} // namespace blockcount
