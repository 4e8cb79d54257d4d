#ifndef ISG_GENERATORS_HPP
#define ISG_GENERATORS_HPP

#include "isg/galgebra.hpp"
#include "isg/hilbert.hpp"
#include "isg/linalg.hpp"
#include "isg/rng.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// One random partial injection on the given number of points.
PartialPerm random_partial_perm(SplitMix64& rng, int degree);

// Random inverse semigroup of partial permutations with degree at most
// max_degree and at most size_cap elements.  Oversized closures are redrawn,
// so the result is a pure function of the generator state.
ISG random_isg(SplitMix64& rng, int max_degree, int size_cap);

// Closure of a few random elements of g.
SubISG random_sub(SplitMix64& rng, const ISG& g);

// Product of random elementary row operations; exactly invertible.
Mat random_invertible(SplitMix64& rng, int n);

// The same algebra and action written in scrambled coordinates.
GAlgebra scramble_galgebra(SplitMix64& rng, const GAlgebra& a);

// Random valid algebra acted on by h.  Nontrivial shapes are drawn when
// their dimension fits max_dim; the scalars are always available.
GAlgebra random_galgebra(SplitMix64& rng, const SubISG& h, int max_dim);

// Random exact unitary respecting the fiber grid of the module.
Mat random_module_unitary(SplitMix64& rng, const HModule& m);

}  // namespace isg

#endif
