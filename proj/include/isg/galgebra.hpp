#ifndef ISG_GALGEBRA_HPP
#define ISG_GALGEBRA_HPP

#include <string>
#include <vector>

#include "isg/lattice.hpp"
#include "isg/semigroup.hpp"
#include "isg/star_algebra.hpp"

namespace isg {

// A finite-dimensional algebra with involution carried by an inverse
// semigroup action.  The acting semigroup is stored as a sub-semigroup of
// its ambient, so induced and restricted algebras can share element
// bookkeeping.  Fiber data over the idempotent semilattice is computed once
// at construction.  The ambient semigroup must outlive the algebra.
struct GAlgebra {
  StarAlgebra alg;
  SubISG acting;
  std::vector<Mat> action;  // indexed by local element of the acting semigroup
  ProjLattice lattice;      // idempotents of the acting semigroup, in the ambient
  std::vector<EchelonBasis> fibers;  // per lattice position

  static GAlgebra make(StarAlgebra a, SubISG h, std::vector<Mat> act);

  int dim() const { return alg.dim; }
  const ISG& group() const { return acting.local; }

  // Endomorphism attached to a lattice projection, via the exact expansion
  // of the projection over the semilattice members.
  Mat act_tproj(const TProj& p) const;

  // Lattice position of a local idempotent of the acting semigroup.
  int lattice_pos(int local_idem) const;

  int fiber_dim(int pos) const { return fibers[pos].dim(); }
  int total_fiber_dim() const;
  bool is_fibered() const { return total_fiber_dim() == dim(); }

  // Decomposes v into fiber components; empty when v has a component
  // outside the fiber sum.
  std::optional<std::vector<Vec>> fiber_components(const Vec& v) const;
};

struct ActionReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the action axioms: associativity and involution of the underlying
// algebra, multiplicativity of g -> alpha_g, each alpha_g an algebra map
// preserving the involution, and idempotents acting as central multipliers.
ActionReport validate_action(const GAlgebra& a);

// Functions on the idempotent set; alpha_g(1_x) = [g*g >= x] 1_{gxg*}.
GAlgebra epsilon_algebra(SubISG h);
GAlgebra epsilon_algebra(const ISG& g);

// Functions on the whole semigroup; alpha_k(1_x) = [k*k >= xx*] 1_{kx}.
GAlgebra c0_algebra(SubISG h);
GAlgebra c0_algebra(const ISG& g);

// The scalars with every element acting as the identity.
GAlgebra trivial_algebra(SubISG h);

// Functions on a conjugation-closed set of ambient idempotents, which may be
// smaller than the idempotent set of the acting semigroup;
// alpha_s(1_x) = [s*s >= x] 1_{sxs*}.
GAlgebra epsilon_span_algebra(SubISG acting, std::vector<int> idem_indices);

// Coordinates of v over the fiber basis at lattice position e; throws
// InvalidAlgebra when v escapes the fiber.
Vec fiber_coords(const GAlgebra& a, int e, const Vec& v);

// Same algebra, acted on by a smaller semigroup.  Every member of s must act
// on a already.
GAlgebra plain_restrict(const GAlgebra& a, SubISG s);

// Tensor product balanced over the common function-algebra structure,
// realized fiberwise with the diagonal action.
GAlgebra balanced_tensor(const GAlgebra& a, const GAlgebra& b);

// Balanced tensor together with its basis layout: one block per lattice
// position, a row of second-factor coordinates per first-factor coordinate.
struct BalancedTensor {
  GAlgebra algebra;
  std::vector<int> offset;  // per lattice position, plus a total sentinel
  std::vector<int> adim;    // first-factor fiber dimensions
  std::vector<int> bdim;    // second-factor fiber dimensions

  int index(int e, int i, int j) const { return offset[e] + i * bdim[e] + j; }
  int total() const { return offset.back(); }
};

BalancedTensor balanced_tensor_full(const GAlgebra& a, const GAlgebra& b);

struct IsoReport {
  int lhs_dim = 0;
  int rhs_dim = 0;
  bool bijective = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Verifies that m is a bijective *-homomorphism intertwining the two actions;
// both algebras must carry the same acting semigroup.
IsoReport check_equivariant_iso(const GAlgebra& lhs, const GAlgebra& rhs,
                                const Mat& m);

struct FiberedModel {
  GAlgebra model;   // epsilon algebra tensored with the input, fiberwise
  Mat comparison;   // model coordinates -> input coordinates
  bool fibered = false;
};

// Builds the canonical fibered model and the comparison map onto the input;
// the input is fibered exactly when the comparison is bijective.
FiberedModel fibered_model(const GAlgebra& a);

}  // namespace isg

#endif
