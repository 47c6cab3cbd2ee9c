#pragma once

#include "degvisc/fields.hpp"
#include "degvisc/parallel.hpp"

#include <cstddef>

namespace degvisc::detail {

/// Visits every cell together with its two neighbours along `axis`.
/// fn(idx, up, dn, up_reflected, dn_reflected). On a box the missing
/// neighbour is the cell itself and the reflected flag is set, so the caller
/// applies the ghost parity.
template <class Fn>
void for_axis_neighbors(const Grid& g, int axis, Fn&& fn) {
    const std::ptrdiff_t s = g.strides()[axis];
    const int na = g.n[axis];
    const bool periodic = g.topology == Topology::Periodic;
    const int n1 = g.n[1], n2 = g.n[2];
    const std::ptrdiff_t wrap = s * (na - 1);
    parallel_for(g.n[0], [&, s, na, periodic, n1, n2, wrap](std::ptrdiff_t p0) {
        Fn f = fn;  // local copy so its captures stay in registers
        const int i0 = static_cast<int>(p0);
        for (int i1 = 0; i1 < n1; ++i1) {
            const std::size_t base = (static_cast<std::size_t>(i0) * n1 + i1) * n2;
            if (axis != 2) {
                // offsets are constant along the row
                const int ia = axis == 0 ? i0 : i1;
                const bool top = ia == na - 1, bottom = ia == 0;
                if (!top && !bottom) {
                    for (int i2 = 0; i2 < n2; ++i2) f(base + i2, base + i2 + s, base + i2 - s, false, false);
                    continue;
                }
                const bool ru = top && !periodic, rd = bottom && !periodic;
                const std::ptrdiff_t up = top ? (periodic ? -wrap : 0) : s;
                const std::ptrdiff_t dn = bottom ? (periodic ? -wrap : 0) : s;
                for (int i2 = 0; i2 < n2; ++i2) f(base + i2, base + i2 + up, base + i2 - dn, ru, rd);
                continue;
            }
            const std::size_t last = base + n2 - 1;
            f(base, base + 1, periodic ? last : base, false, !periodic);
            for (int i2 = 1; i2 < n2 - 1; ++i2) f(base + i2, base + i2 + 1, base + i2 - 1, false, false);
            f(last, periodic ? base : last, last - 1, !periodic, false);
        }
    });
}

/// Parallel pointwise loop over all cells.
template <class Fn>
void for_cells(const Grid& g, Fn&& fn) {
    const std::size_t per_slab = static_cast<std::size_t>(g.n[1]) * g.n[2];
    parallel_for(g.n[0], [&](std::ptrdiff_t i0) {
        const std::size_t lo = static_cast<std::size_t>(i0) * per_slab;
        for (std::size_t i = lo; i < lo + per_slab; ++i) fn(i);
    });
}

}  // namespace degvisc::detail
