#pragma once

#include <functional>

#include "lempert/algebra.hpp"
#include "lempert/errors.hpp"

namespace lempert {

/*
 * Derivative of a holomorphic function by the trapezoid rule on a circle,
 *
 *     f'(c) = 1/(2 pi i) \oint f(z) / (z-c)^2 dz
 *           = 1/N sum_k f(c + r e^{i t_k}) e^{-i t_k} / r,   t_k = 2 pi k/N.
 *
 * For f holomorphic on a neighbourhood of the closed disc of radius R > r
 * around c the error decays like (r/R)^N, so 64 nodes at r <= R/2 reach
 * machine precision.  Nodes must be a power of two, at least 16.
 */
cplx circle_derivative(const std::function<cplx(cplx)>& f, cplx center, double radius,
                       int nodes);

bool valid_contour_nodes(int nodes);

}  // namespace lempert
