#include "lempert/covector.hpp"

#include <cmath>
#include <sstream>

#include "lempert/grid.hpp"

namespace lempert {

CovectorField CovectorField::analytic(std::function<C2(cplx)> fn, std::string label) {
  CovectorField v;
  v.fn_ = std::move(fn);
  v.label_ = std::move(label);
  return v;
}

CovectorField CovectorField::pulled_back(LeftInverseSpec inverse, GeodesicSpec geodesic) {
  CovectorField v;
  v.label_ = "grad " + inverse.describe() + " along " + geodesic.describe();
  v.fn_ = [inv = std::move(inverse), geo = std::move(geodesic)](cplx l) {
    return inv.gradient(geo.eval(l));
  };
  return v;
}

C2 CovectorField::eval(cplx l) const { return fn_(l); }

std::string CovectorField::describe() const { return label_; }

CovectorField field_from_inverse(const LeftInverseSpec& inverse, const GeodesicSpec& geodesic) {
  return CovectorField::pulled_back(inverse, geodesic);
}

CovectorField normalize_field(const CovectorField& v, const GeodesicSpec& f, int grid_size) {
  double worst_low = 1e300, worst_dev = 0.0;
  for (cplx l : radial_angular_grid(grid_size)) {
    const cplx pairing = dot(v.eval(l), f.derivative(l));
    worst_low = std::min(worst_low, std::abs(pairing));
    worst_dev = std::max(worst_dev, std::abs(pairing - 1.0));
  }
  if (worst_low < 1e-8) {
    std::ostringstream os;
    os << "pairing v . f' drops to " << worst_low << " on the grid";
    throw DegeneratePairing(os.str());
  }

  CovectorField out;
  if (worst_dev < 1e-12) {
    out = v;  // already the dual field of a left inverse
  } else {
    out.label_ = v.describe() + ", normalized";
    out.fn_ = [inner = v.fn_, f](cplx l) {
      const C2 w = inner(l);
      return w / dot(w, f.derivative(l));
    };
  }
  out.normalized_ = true;
  out.base_ = f;
  return out;
}

CovectorField combine(const CovectorField& v0, const CovectorField& v1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("combination weight must lie in [0, 1]");
  if (!v0.normalized() || !v1.normalized())
    throw Error("only normalized fields can be combined");
  if (!(*v0.base() == *v1.base()))
    throw MixedGeodesics("fields were normalized against different geodesics");

  CovectorField out;
  {
    std::ostringstream os;
    os << "(1-" << t << ")*[" << v0.describe() << "] + " << t << "*[" << v1.describe() << "]";
    out.label_ = os.str();
  }
  out.fn_ = [a = v0.fn_, b = v1.fn_, t](cplx l) { return (1.0 - t) * a(l) + t * b(l); };
  out.normalized_ = true;
  out.base_ = v0.base();
  return out;
}

}  // namespace lempert
