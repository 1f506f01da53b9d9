#include "lempert/contour.hpp"

#include <cmath>

namespace lempert {

bool valid_contour_nodes(int nodes) {
  return nodes >= 16 && (nodes & (nodes - 1)) == 0;
}

cplx circle_derivative(const std::function<cplx(cplx)>& f, cplx center, double radius,
                       int nodes) {
  if (!valid_contour_nodes(nodes)) throw Error("contour nodes must be a power of two >= 16");
  if (!(radius > 0.0)) throw Error("contour radius must be positive");
  cplx acc(0.0);
  for (int k = 0; k < nodes; ++k) {
    const double t = 2.0 * M_PI * k / nodes;
    const cplx dir = std::polar(1.0, t);
    acc += f(center + radius * dir) / dir;
  }
  return acc / (static_cast<double>(nodes) * radius);
}

}  // namespace lempert
