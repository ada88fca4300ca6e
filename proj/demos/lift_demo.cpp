// Lifts (2, 3, 4) a few times: the values run through 27^(3^k) and the
// arithmetic-progression differences through 3, 3^4, 3^13, ...

#include <iostream>

#include "circulant/circulant.hpp"

int main() {
  using namespace circulant;
  const LiftChain chain = lift_chain(to_big(Triple{2, 3, 4}), 4);
  std::cout << lift_chain_report(chain);
  return 0;
}
