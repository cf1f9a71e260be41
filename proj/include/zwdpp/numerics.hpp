#pragma once

#include "zwdpp/common.hpp"

namespace zwdpp::numerics {

// sin(pi x), cos(pi x) with exact argument reduction
double sin_pi(double x);
double cos_pi(double x);
Cplx sin_pi(Cplx z);

// Principal branch of log Gamma.
// Throws PoleError at nonpositive integers, OverflowError for |Im z| outside
// the supported band.
Cplx log_gamma(Cplx z);

// Gauss hypergeometric 2F1(a, b; c; zeta) for real zeta < 1.
// zeta <= 0 goes through a Pfaff transformation; transformed arguments near 1
// use the c-a-b connection formula (with a perturb-and-average fallback when
// the connection parameter degenerates to an integer).
Cplx gauss_2f1(Cplx a, Cplx b, Cplx c, double zeta);

// d/dzeta 2F1 via the contiguous relation (ab/c) 2F1(a+1, b+1; c+1; zeta)
Cplx deriv_2f1(Cplx a, Cplx b, Cplx c, double zeta);

}  // namespace zwdpp::numerics
