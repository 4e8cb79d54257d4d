#ifndef ISG_HILBERT_HPP
#define ISG_HILBERT_HPP

#include <string>
#include <vector>

#include "isg/galgebra.hpp"
#include "isg/induction.hpp"
#include "isg/linalg.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// A finite rank Hilbert module over the point functions on the idempotent
// semilattice of the acting semigroup, together with a compatible action.
// Coefficient values are stored pointwise: a Vec indexed by lattice
// position is the function taking those values at the corresponding
// idempotents. Every basis vector sits over a single idempotent, its
// range, recorded in range_at.
struct HModule {
  SubISG acting;
  ProjLattice lattice;
  std::vector<std::string> labels;
  std::vector<int> range_at;
  std::vector<Mat> action;
  std::vector<std::vector<Vec>> inner;

  int rank() const { return static_cast<int>(labels.size()); }
};

// Sesquilinear extension of the inner product table, conjugate linear in
// the first slot. Returns a pointwise coefficient vector.
Vec module_inner(const HModule& m, const Vec& x, const Vec& y);

// Right coefficient action: (xi f)(g) = xi(g) f(gg*) with f pointwise.
Vec module_coeff(const HModule& m, const Vec& x, const Vec& f);

// The coefficient action of a local element on a pointwise function:
// (k f)(e) = f(k* e k) [k k* >= e].
Vec coeff_action(const HModule& m, int k_local, const Vec& f);

// Squared module norm: the largest value of <x, x>, an exact rational.
mpq_class module_norm_sq(const HModule& m, const Vec& x);

struct ModuleReport {
  bool full = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural audit: table shapes, hermitian symmetry and single point
// support of the inner product, positive definiteness of each fiber Gram
// matrix, the action law, and the exact admissibility identity
// <k xi, k eta> = k<xi, eta>. Also reports whether the inner products span
// all coefficient functions.
ModuleReport check_module(const HModule& m);

HModule build_l2(SubISG g);
HModule build_l2(const ISG& g);
HModule build_l2_cosets(const SubISG& g, const SubISG& h,
                        const CosetTable* table = nullptr);

// For every h the translations x -> hx restrict to bijections between the
// elements with range h*h and those with range hh*, and likewise for the
// dominated versions and for right multiplication. Violations returned.
std::vector<std::string> check_translation_bijections(const ISG& g);

// Operators supported on single ranges: the direct sum over idempotents e
// of the full matrix algebra on the basis vectors with range e, carrying
// the conjugation action T -> k T k*.
struct Compacts {
  GAlgebra algebra;
  std::vector<std::vector<int>> blocks;
  std::vector<int> offset;

  int index(int pos, int i, int j) const;
};

Compacts compact_operators(const HModule& m);

// The class functions sitting inside the compacts of the class module as
// the diagonal rank one projections.
struct DiagonalEmbed {
  HModule module;
  GAlgebra classes;
  Compacts compacts;
  Mat map;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

DiagonalEmbed diagonal_embedding(const SubISG& g, const SubISG& h,
                                 const CosetTable* table = nullptr);

// The balanced tensor of the base square summable module with e: basis
// pairs of an element x and a fiber basis vector of e at the range of x.
struct TensorModule {
  HModule module;
  std::vector<int> first;               // slot -> local element
  std::vector<int> second;              // slot -> base basis index
  std::vector<std::vector<int>> slot;   // [element][base index] -> slot or -1
};

TensorModule l2_tensor(const HModule& e);

struct MingoReport {
  TensorModule t1;
  TensorModule t2;
  Mat v;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// The comparison operator moving a coefficient linear unitary u across the
// tensor legs: each cell over x receives x u x*. Checked equivariant and
// inner product preserving; throws NotUnitary when u fails its own
// preconditions.
MingoReport mingo_v(const HModule& e1, const HModule& e2, const Mat& u);

}  // namespace isg

#endif
