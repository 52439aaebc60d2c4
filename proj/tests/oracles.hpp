// Independent reference computations used only by the test suites. None of
// these share code paths with the library routines they check.
#pragma once

#include <complex>
#include <vector>

#include "qhelix/curveforms.hpp"
#include "qhelix/generators.hpp"
#include "qhelix/poly.hpp"

namespace qhelix::oracle {

using cplx = std::complex<double>;

/// Resultant via the Sylvester matrix and fraction-free elimination over ℚ(i).
GaussRat sylvester_resultant(const GaussPoly& a, const GaussPoly& b);

/// All complex roots by Durand–Kerner iteration at double precision.
std::vector<cplx> numeric_roots(const GaussPoly& p);

cplx evaluate(const GaussPoly& p, cplx t);

/// α′ = A·i·A* computed with the quaternion Hamilton product.
Hodograph hodograph_by_quaternion_product(const QuaternionPolynomial& a);

/// 4σ²((u′q−uq′−v′p+vp′)² + (u′p−up′+v′q−vq′)²) from the component polynomials.
RatPoly cross_norm_by_components(const QuaternionPolynomial& a);

/// de Casteljau evaluation of a Bézier quaternion curve.
Quaternion de_casteljau(std::vector<Quaternion> controls, const Rat& t);

/// Random polynomial of exactly the given degree.
RatPoly random_rat_poly(RationalSampler& rng, std::size_t degree);
GaussPoly random_gauss_poly(RationalSampler& rng, std::size_t degree);

}  // namespace qhelix::oracle
