#ifndef PSEUDOHARMONIC_QUADRATURE_HPP
#define PSEUDOHARMONIC_QUADRATURE_HPP

#include <functional>

namespace pseudoharmonic {

// Adaptive double-exponential (tanh-sinh) quadrature on a finite interval.
// Levels are refined (h -> h/2, nodes reused) until two successive estimates
// agree to `tol` or `max_level` is hit.  Suited to the smooth integrands used
// here; endpoint-singular integrands converge as well but are not required.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-13, int max_level = 12);

}  // namespace pseudoharmonic

#endif
