// Minimal consumer of the public headers. Builds against the static
// library alone; prints fixture sizes and one induction round trip.
#include <cstdio>

#include "isg/fixtures.hpp"
#include "isg/induction.hpp"

int main() {
  using namespace isg;
  auto g1 = fixtures::chain2();
  auto g2 = fixtures::sym_inv(2);
  auto g3 = fixtures::sym_inv(3);
  std::printf("fixtures: %d %d %d\n", g1.size(), g2.size(), g3.size());

  auto h = SubISG::from_indices(g2, g2.idempotents());
  auto iota = unit_iota(epsilon_algebra(h), SubISG::whole(g2));
  if (!iota.ok() || !iota.injective) {
    std::printf("fail: unit round trip\n");
    return 1;
  }
  std::printf("pass: induction round trip\n");
  return 0;
}
