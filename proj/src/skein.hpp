#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "tribracket/bracket.hpp"

namespace tribracket::detail {

// Flat indices of X1, X2, X3, Y1, Y2, Y3 for the quadruple (a,b,c,d):
// X1 = (a,b,c), X2 = (c,[abc],[acd]), X3 = (a,c,d),
// Y1 = (b,[abc],[abd]), Y2 = (a,b,d), Y3 = (d,[abd],[acd]).
inline std::array<std::size_t, 6> skein_triples(const Tribracket& t, int a, int b, int c, int d) {
    int abc = t(a, b, c), acd = t(a, c, d), abd = t(a, b, d);
    return {t.index(a, b, c), t.index(c, abc, acd), t.index(a, c, d),
            t.index(b, abc, abd), t.index(a, b, d), t.index(d, abd, acd)};
}

// Bit k set means equation ii.(k+1) fails.
inline unsigned skein_failures(const ModulusRing& r, const std::int64_t* A, const std::int64_t* B,
                               std::int64_t delta, const std::array<std::size_t, 6>& q, SkeinVariant variant) {
    auto m3 = [&](std::int64_t x, std::int64_t y, std::int64_t z) { return r.mul(r.mul(x, y), z); };
    const auto x1 = q[0], x2 = q[1], x3 = q[2], y1 = q[3], y2 = q[4], y3 = q[5];
    unsigned fail = 0;
    if (m3(A[x1], A[x2], A[x3]) != m3(A[y1], A[y2], A[y3])) fail |= 1u;
    if (m3(A[x1], B[x2], B[x3]) != m3(B[y1], A[y2], B[y3])) fail |= 2u;
    if (m3(B[x1], B[x2], A[x3]) != m3(A[y1], B[y2], B[y3])) fail |= 4u;

    std::int64_t rhs4 = r.add(r.add(m3(A[y1], A[y2], B[y3]), m3(B[y1], A[y2], A[y3])),
                              r.add(r.mul(delta, m3(B[y1], A[y2], B[y3])), m3(B[y1], B[y2], B[y3])));
    if (variant == SkeinVariant::printed) rhs4 = r.add(rhs4, m3(A[y1], A[y2], B[y3]));
    if (m3(A[x1], B[x2], A[x3]) != rhs4) fail |= 8u;

    std::int64_t lhs5 = r.add(r.add(m3(A[x1], A[x2], B[x3]), m3(B[x1], A[x2], A[x3])),
                              r.add(r.mul(delta, m3(B[x1], A[x2], B[x3])), m3(B[x1], B[x2], B[x3])));
    if (lhs5 != m3(A[y1], B[y2], A[y3])) fail |= 16u;
    return fail;
}

inline const char* skein_name(int k) {
    static const char* names[] = {"ii.i", "ii.ii", "ii.iii", "ii.iv", "ii.v"};
    return names[k];
}

}  // namespace tribracket::detail
