#ifndef ISG_CROSSED_HPP
#define ISG_CROSSED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isg/galgebra.hpp"
#include "isg/linalg.hpp"
#include "isg/semigroup.hpp"
#include "isg/star_algebra.hpp"

namespace isg {

enum class CrossedVariant { universal, sieben };

// Covariance *-algebra of an equivariant algebra.  The universal variant is
// spanned by pairs a delta_g with a running over the image of the domain
// idempotent of g, multiplied by (a delta_g)(b delta_h) = a g(b) delta_{gh}
// and starred by (a delta_g)* = g*(a*) delta_{g*}.  The sieben variant
// divides out the two sided *-ideal generated by e(a) delta_g - a delta_{eg}
// over all idempotents e.
struct CrossedAlg {
  CrossedVariant variant = CrossedVariant::universal;
  StarAlgebra alg;                 // the covariance algebra itself
  StarAlgebra universal;           // full tables before any quotient
  std::vector<int> slot_elem;      // universal slot -> acting local element
  std::vector<Vec> slot_coeff;     // universal slot -> coefficient vector
  Mat project;                     // universal coords -> alg coords
  std::vector<Vec> relation_gens;  // sieben generators, universal coords

  int dim() const { return alg.dim; }
};

CrossedAlg covariance_algebra(const GAlgebra& a, CrossedVariant variant);

// Artin-Wedderburn data of a finite dimensional *-algebra over the Gaussian
// rationals: the trace form radical is cut out exactly, the number of blocks
// is the exact center dimension of the quotient, and the block sizes come
// from spectral splitting of a random self adjoint central element.  Whether
// the induced involution on the quotient is positive is probed numerically
// and reported, never assumed.
struct BlockDecomposition {
  int dim = 0;
  int radical_dim = 0;
  std::vector<int> blocks;  // ascending
  bool star_positive = false;
  uint64_t seed = 0;        // stream that produced the accepted split

  int k0_rank() const { return static_cast<int>(blocks.size()); }
};

BlockDecomposition semisimple_blocks(const StarAlgebra& a, uint64_t seed = 1,
                                     double tol = 1e-8, int retries = 8);

// Morita invariant comparison across the induction: the sieben covariance
// algebra of the induced algebra over g against that of the input over its
// own acting subsemigroup.  Only the block counts are asserted to agree;
// both size multisets are reported.
struct ImprimitivityReport {
  BlockDecomposition induced_side;
  BlockDecomposition base_side;
  bool counts_match = false;
};

ImprimitivityReport imprimitivity_check(const GAlgebra& a, const SubISG& g,
                                        uint64_t seed = 1, double tol = 1e-8);

}  // namespace isg

#endif
