// Truncation table for the classic instance: every finite truncation of the
// dual has value 1, while the semi-infinite dual value is 0. The table makes
// the non-convergence visible.

#include <iostream>

#include "galegap/gale.hpp"
#include "galegap/lp_oracle.hpp"

int main() {
  using namespace galegap;
  const CostSpec cost(Ratio(0), Ratio(0),
                      TailSeq({Ratio(1)}, TailRule{Ratio(0), Ratio(0), Ratio(0)}));
  const Rhs b{Ratio(1), Ratio(0)};
  std::cout << sweep_csv(truncation_sweep(cost, b, {1, 10, 100, 1000}));
  std::cout << "semi-infinite dual value: "
            << dual_sup_general(cost, b).value.str() << "\n";
  return 0;
}
