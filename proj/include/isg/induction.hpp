#ifndef ISG_INDUCTION_HPP
#define ISG_INDUCTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "isg/galgebra.hpp"

namespace isg {

// Decomposition of {g : g*g in the subgroup} into right translation classes
// g ~ gh, where h runs over the subgroup members with hh* = g*g.  Class
// members share their range projection; the representative is the least
// member unless a rotated table is requested.
struct CosetTable {
  const ISG* parent = nullptr;
  std::vector<int> members;               // ascending parent indices
  std::vector<std::vector<int>> classes;  // partition of members, ascending
  std::vector<int> transversal;           // one member per class
  std::vector<int> class_of;              // parent index -> class or -1

  int class_count() const { return static_cast<int>(classes.size()); }
  bool contains(int parent_index) const { return class_of[parent_index] >= 0; }
};

CosetTable coset_table(const SubISG& g, const SubISG& h);

// Same classes with each representative moved `shift` places along its class.
CosetTable rotate_transversal(const CosetTable& t, int shift);

struct RelationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Confirms the translation relation is an equivalence and that every class
// is regenerated from each of its members.
RelationReport verify_coset_relation(const SubISG& g, const SubISG& h,
                                     const CosetTable& t);

// Functions on the classes; alpha_k pulls back along left translation.
GAlgebra c0_cosets(const CosetTable& t, const SubISG& g);

// An element times an atom of the subgroup lattice, identified by its exact
// expansion over the ambient element basis.
struct PairPoint {
  int g = -1;     // parent element index
  int atom = -1;  // lattice position
  Vec form;       // coefficients per parent element
};

struct DeltaReport {
  int pair_count = 0;
  int member_count = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// The correspondence between the pair model and the coset members: a pair
// (g, p) maps to g * sigma(p), a member m maps back to the pair at the atom
// of m*m.  Both directions are verified mutually inverse and class
// compatible; any failure lands in the report.
struct DeltaBijection {
  ProjLattice lattice;  // subgroup idempotents inside the parent
  CosetTable cosets;
  std::vector<PairPoint> points;
  std::vector<int> to_member;                  // point -> parent index
  std::vector<int> to_point;                   // member position -> point
  std::vector<std::vector<int>> point_classes; // translation classes of points
  std::vector<int> point_class_of;             // point -> class
  DeltaReport report;
};

DeltaBijection delta_bijection(const SubISG& g, const SubISG& h);

// The induced algebra of a subgroup algebra: one block per class, carrying
// the base fiber at the atom of the representative's domain projection.
// Elements are stored on the transversal only; values elsewhere follow from
// the translation constraint.  The base algebra is kept alive by the handle.
struct IndAlgebra {
  GAlgebra algebra;
  CosetTable cosets;
  std::shared_ptr<const GAlgebra> base;
  std::vector<int> block_offset;  // per class
  std::vector<int> block_atom;    // per class, base lattice position

  int block_dim(int c) const {
    return block_offset[c + 1] - block_offset[c];
  }
  int slot(int c, int i) const { return block_offset[c] + i; }
};

IndAlgebra induce(const GAlgebra& d, const SubISG& g,
                  const CosetTable* table = nullptr);

// Value of the stored function at an arbitrary member, in base coordinates.
Vec ind_value_at(const IndAlgebra& ind, const Vec& f, int member);

// The translation constraint at every admissible pair of a member and a
// subgroup element, on every basis function.
std::vector<std::string> check_translation_constraint(const IndAlgebra& ind);

// Blockwise transport of a subgroup-equivariant homomorphism between base
// algebras along a shared coset table.
Mat induce_map(const IndAlgebra& src, const IndAlgebra& dst, const Mat& phi);

// The direct sum of the ambient fibers sitting over the subgroup
// idempotents, with the restricted action; embed maps its coordinates back
// into the ambient algebra and carrier tracks the subspace.
struct Restriction {
  GAlgebra algebra;
  Mat embed;
  EchelonBasis carrier;
};

Restriction fibered_restriction(const GAlgebra& a, const SubISG& h);

struct RouteReport {
  int direct_dim = 0;
  int route_dim = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Rebuilds the restriction through the function-algebra tensor route and
// checks the canonical comparison is an equivariant isomorphism.
RouteReport restriction_route_report(const GAlgebra& a, const SubISG& h);

// The comparison from the induced restriction onto the class functions
// tensored with the input: f maps to the sum over representatives t of
// 1_{class t} tensor t(f(t)).
struct MuIso {
  Restriction restricted;       // over the subgroup
  IndAlgebra ind;               // induced back up
  GAlgebra classes_algebra;     // functions on the classes
  BalancedTensor rhs;
  Mat map;
  IsoReport report;
};

MuIso mu_iso(const GAlgebra& b, const SubISG& h,
             const CosetTable* table = nullptr);

// The comparison Ind(A (x) R(B)) -> Ind(A) (x) B moving the second leg by
// the representative.
struct TauIso {
  Restriction restricted;       // R of the second factor
  BalancedTensor inner;         // A (x) R(B) over the subgroup
  IndAlgebra lhs;
  IndAlgebra ind_first;         // Ind(A)
  BalancedTensor rhs;
  Mat map;
  IsoReport report;
};

TauIso tau_iso(const GAlgebra& a, const GAlgebra& b, const SubISG& g,
               const CosetTable* table = nullptr);

// The unit of the adjunction: a maps to the function supported on the
// subgroup whose value at h is the atom cut of h*(a), landing in the
// restriction of the induced algebra.
struct UnitIota {
  IndAlgebra ind;
  Restriction restricted;  // of the induced algebra, over the subgroup
  Mat map;                 // base coordinates -> restriction coordinates
  bool injective = false;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

UnitIota unit_iota(const GAlgebra& a, const SubISG& g,
                   const CosetTable* table = nullptr);

// The two composite identities of the adjunction, executed as finite linear
// algebra: the unit composed into the comparison has the closed diagonal
// form, the cut-down of the first cycle is carried by a unitary onto the
// induced algebra, and dually for the counit side.
struct TriangleReport {
  bool unit_form = false;     // closed form of the composite through mu
  bool cutdown_u = false;     // first cycle collapses onto the induced algebra
  bool counit_form = false;   // closed diagonal form on the restriction side
  bool cutdown_v = false;     // second cycle collapses onto the restriction
  std::vector<std::pair<std::string, int>> dims;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

TriangleReport triangle_identities(const GAlgebra& a, const GAlgebra& b,
                                   const SubISG& g);

}  // namespace isg

#endif
