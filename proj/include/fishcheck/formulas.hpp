#pragma once

#include "fishcheck/bipoly.hpp"
#include "fishcheck/quad.hpp"

// Stated closed forms for the comparison families. Everything here is typed in
// by hand; the checks compare these against values computed from the graphs.
namespace fishcheck::formulas {

BiPoly p_m();

// characteristic polynomials of the equitable quotients
BiPoly q_t();
BiPoly f_same();
BiPoly f_dist();
BiPoly f_mix();

// f = quotient * p_m + remainder
BiPoly quot_same();
BiPoly quot_dist();
BiPoly quot_mix();
BiPoly r_same();
BiPoly r_dist();
BiPoly r_mix();

// derivatives in x
BiPoly q_t_dx();
BiPoly q_t_dxx();
BiPoly r_same_dx();
BiPoly r_same_dxx();
BiPoly r_dist_dx();
BiPoly r_dist_dxx();
BiPoly q_mix_dx();
BiPoly r_mix_dx();
BiPoly r_mix_dxx();

// values at L_m = (1 + s)/2, s = sqrt(4m - 5)
QuadElem q_t_at_l();
QuadElem q_t_dx_at_l();
QuadElem r_same_at_l();
QuadElem r_same_at_l_dm();
QuadElem r_same_dx_at_l();
QuadElem r_same_dx_at_l_dm();
QuadElem r_dist_at_l();
QuadElem r_dist_at_l_dm();
QuadElem r_dist_dx_at_l();
QuadElem r_dist_dx_at_l_dm();
QuadElem q_mix_at_l();
QuadElem r_mix_at_l();
QuadElem r_mix_at_l_dm();
QuadElem r_mix_dxx_at_l();
QuadElem r_mix_dx_at_l();
QuadElem r_mix_dx_at_l_dm();

// L^2 - L/2 and L^2 - 3L/2
QuadElem lower_half();
QuadElem lower_three_halves();

}  // namespace fishcheck::formulas
