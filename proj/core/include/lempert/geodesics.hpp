#pragma once

#include <string>
#include <variant>

#include "lempert/algebra.hpp"
#include "lempert/domains.hpp"
#include "lempert/hyperbolic.hpp"

namespace lempert {

// Bounded multiplier psi : D -> closed D used by the graph geodesics of the
// bidisc, (l, l psi(l)).
class Multiplier {
 public:
  struct Constant { cplx c; };
  struct Identity {};
  struct BlaschkeFactor { cplx center; };  // (l - a)/(1 - conj(a) l)

  static Multiplier constant(cplx c);
  static Multiplier identity();
  static Multiplier blaschke(cplx center);

  cplx eval(cplx l) const;
  cplx derivative(cplx l) const;
  std::string describe() const;
  bool operator==(const Multiplier& o) const;

 private:
  std::variant<Constant, Identity, BlaschkeFactor> v_;
};

/*
 * Catalogue of complex geodesics f : D -> D, one closed-form map per variant.
 *
 *   Diagonal     bidisc      f(l) = (l, l)
 *   BidiscGraph  bidisc      f(l) = (l, l psi(l))
 *   Royal        symbidisc   f(l) = (2l, l^2)
 *   Flat         symbidisc   f(l) = (b + conj(b) l, l),  |b| < 1
 *   BallFamily   ball        f(l) = ((t^2+l)/(1+t^2), t(l-1)/(1+t^2)),  t real
 *   BallAxis     ball        f(l) = (l, 0)
 */
class GeodesicSpec {
 public:
  struct Diagonal {};
  struct BidiscGraph { Multiplier psi; };
  struct Royal {};
  struct Flat { cplx beta; };
  struct BallFamily { double t; };
  struct BallAxis {};

  static GeodesicSpec diagonal();
  static GeodesicSpec bidisc_graph(Multiplier psi);
  static GeodesicSpec royal();
  static GeodesicSpec flat(cplx beta);
  static GeodesicSpec ball_family(double t);  // |t| <= 10
  static GeodesicSpec ball_axis();

  DomainPoint eval(cplx l) const;
  C2 derivative(cplx l) const;  // closed form
  DomainModel codomain() const;
  bool extends_through_boundary() const { return true; }  // all variants are rational with poles outside the closed disc
  std::string describe() const;
  bool operator==(const GeodesicSpec& o) const;

 private:
  std::variant<Diagonal, BidiscGraph, Royal, Flat, BallFamily, BallAxis> v_;
};

}  // namespace lempert
