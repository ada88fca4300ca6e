// Enumerates the representations of a few small integers with both
// backends and prints the factorization F = (x+y+z) * Q alongside.

#include <iostream>

#include "circulant/circulant.hpp"

int main() {
  using namespace circulant;
  for (std::int64_t n : {1, 7, 8, 27, 64, 108}) {
    const RepresentationSet set = nu(n, Backend::both);
    std::cout << "nu(" << n << ") = " << set.nu() << '\n';
    for (const Triple& t : set.reps) {
      const std::int64_t s = t.x + t.y + t.z;
      std::cout << "  " << t << " = " << s << " * " << eval_q(t) << '\n';
    }
  }
  return 0;
}
