// Partial actions of the Sweedler algebra on k and the deformation H_lambda
// for lambda(x) = lambda(gx) = alpha.

#include <iostream>

#include "hopf/json_io.hpp"

using namespace hopf;

int main() {
  HopfAlgebra H = get_algebra("Sweedler");
  GroupLikeSet GL = group_likes(H);
  for (const auto& sol : enumerate_all_partial_actions(H)) {
    std::cout << "N = " << sol.N.str(GL.group) << ", " << sol.equation_count << " equations\n";
    for (const auto& f : sol.families) std::cout << "  " << to_json(f).dump() << "\n";
  }

  Vec lam = H.zero();
  lam[H.require_index("1")] = Cyclotomic::one(H.order);
  lam[H.require_index("x")] = Cyclotomic(H.order, Rational(2));
  lam[H.require_index("gx")] = Cyclotomic(H.order, Rational(2));
  SmashReport r = smash_report(H, lam);
  std::cout << "\nalpha = 2: dim H_lambda = " << r.dim << ", basis";
  for (const auto& b : r.basis) std::cout << " [" << H.format(b) << "]";
  std::cout << "\ncarac " << r.carac.holds << ", coproduct closure " << r.closure << "\n";
}
