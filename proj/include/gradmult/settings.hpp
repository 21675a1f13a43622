#ifndef GRADMULT_SETTINGS_HPP
#define GRADMULT_SETTINGS_HPP

#include "gradmult/rational.hpp"

namespace gradmult {

/// Knobs shared across the computation pipelines. Defaults target desk-scale
/// instances in dimension <= 3.
struct Settings {
  long fit_cap = 64;        // offset cap for polynomial stabilization
  long q_max = 12;          // Noetherian period search bound
  long c_max = 8;           // linear growth search bound
  long horizon_d2 = 24;     // sequence-mode horizon, dimension 2
  long horizon_d3 = 12;     // sequence-mode horizon, dimension >= 3
  long verify_horizon = 6;  // graded-family axiom verification horizon
  Rat tolerance = Rat(1, 20);

  long horizon_for(int dim) const { return dim <= 2 ? horizon_d2 : horizon_d3; }
};

}  // namespace gradmult

#endif
