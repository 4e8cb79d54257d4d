#include "isg/fixtures.hpp"

#include <numeric>

namespace isg::fixtures {

ISG chain2() {
  return ISG::close(1, {PartialPerm::identity(1), PartialPerm::empty_map(1)});
}

ISG z2() { return ISG::close(2, {PartialPerm(2, {2, 1})}); }

ISG sym_inv(int n) {
  if (n == 1) return chain2();
  std::vector<int> cycle(n), swap(n), drop(n);
  for (int p = 1; p <= n; ++p) {
    cycle[p - 1] = (p % n) + 1;
    swap[p - 1] = p;
    drop[p - 1] = p;
  }
  swap[0] = 2;
  swap[1] = 1;
  drop[n - 1] = 0;
  return ISG::close(n, {PartialPerm(n, cycle), PartialPerm(n, swap),
                        PartialPerm(n, drop)},
                    20000);
}

}  // namespace isg::fixtures
