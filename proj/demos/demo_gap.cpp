// Classic instance of the family: cost e_0, right-hand side (1, 0). The
// primal value is 1, the dual value 0, and the dual optimum is attained at
// the origin, so the gap is exactly 1.

#include <iostream>

#include "galegap/gale.hpp"
#include "galegap/io.hpp"

int main() {
  using namespace galegap;
  const CostSpec cost(Ratio(0), Ratio(0),
                      TailSeq({Ratio(1)}, TailRule{Ratio(0), Ratio(0), Ratio(0)}));
  const GapReport report = gap_report(cost, Rhs{Ratio(1), Ratio(0)});
  std::cout << render_gap_report(report, Format::pretty);
  return 0;
}
