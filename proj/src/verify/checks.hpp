#pragma once

// Internal interface between the registry and the individual checks.

#include <string>
#include <vector>

#include "besselxi/verify.hpp"

namespace besselxi::verify::detail {

struct CheckData {
  std::vector<Sample> samples;
  std::vector<Condition> conditions;
  std::vector<Erratum> errata;
  std::vector<std::string> notes;
  bool complex_valued = false;
  /// Constant the printed identity claims between LHS and RHS.
  Complex printed_constant{1.0, 0.0};
  std::string printed_description;
};

BesselScale scale_of(const ParamPoint& p);
PhysParams phys_of(const ParamPoint& p);
std::string format_number(double v);
std::string format_number(Complex v);

struct Thm12Sides {
  double lhs;        // H₁(x)
  double printed;    // e^{-r²/4t} ∫₁^∞ M(y) (t(xy)² − π²)^{-1/2} dy
  double corrected;  // 2 e^{-r²/4t} ∫_{π/(x√t)}^∞ (same)
};
Thm12Sides theorem_1_2_sides(const PhysParams& p, double qtol);

CheckData check_eq_1_1(const Grid& grid, double tol);
CheckData check_thm_1_1(const Grid& grid, double tol);
CheckData check_thm_1_2(const Grid& grid, double tol);
CheckData check_thm_1_2_r0(const Grid& grid, double tol);
CheckData check_thm_1_3(const Grid& grid, double tol);

CheckData check_asym_remark(const Grid& grid, double tol);
CheckData check_heat_pde(const Grid& grid, double tol);
CheckData check_bvp_i(const Grid& grid, double tol);
CheckData check_bvp_ii(const Grid& grid, double tol);
CheckData check_bessel_derivs(const Grid& grid, double tol);

CheckData check_parseval(const Grid& grid, double tol);
CheckData check_mellin_3_3(const Grid& grid, double tol);
CheckData check_residue_3_5(const Grid& grid, double tol);
CheckData check_contour_3_6(const Grid& grid, double tol);
CheckData check_reflect_3_7(const Grid& grid, double tol);
CheckData check_beta_3_8(const Grid& grid, double tol);
CheckData check_kummer_3_9(const Grid& grid, double tol);
CheckData check_muntz_3_11(const Grid& grid, double tol);
CheckData check_chain_3_12(const Grid& grid, double tol);

}  // namespace besselxi::verify::detail
