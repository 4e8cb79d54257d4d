#ifndef ISG_LATTICE_HPP
#define ISG_LATTICE_HPP

#include <string>
#include <vector>

#include "isg/rational.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// A finite meet-semilattice of idempotents inside an ambient inverse
// semigroup.  Members are stored by ambient index in canonical order; all
// lattice-level operations use local positions 0..size()-1.
struct ProjLattice {
  const ISG* ambient = nullptr;
  std::vector<int> members;   // local position -> ambient index
  std::vector<int> position;  // ambient index -> local position or -1

  static ProjLattice over(const ISG& g, std::vector<int> idem_indices);
  static ProjLattice full(const ISG& g);

  int size() const { return static_cast<int>(members.size()); }
  int meet(int x, int y) const;
  bool leq(int x, int y) const;
  int position_of_ambient(int ambient_index) const;
  std::string label(int x) const;
};

// A projection in the Boolean lattice generated by the semilattice, stored
// as the set of atoms lying under it.  Atoms are in bijection with the
// semilattice members, so the mask is indexed by local position.
struct TProj {
  const ProjLattice* host = nullptr;
  std::vector<char> mask;

  static TProj zero(const ProjLattice& host);
  static TProj one(const ProjLattice& host);

  bool is_zero() const;
  bool is_one() const;
  int count() const;
  bool has_atom(int a) const { return mask[a] != 0; }
  std::vector<int> atom_list() const;

  TProj meet(const TProj& other) const;
  TProj join(const TProj& other) const;
  TProj complement() const;
  bool leq(const TProj& other) const;
  bool operator==(const TProj& other) const;
  bool operator!=(const TProj& other) const { return !(*this == other); }
  std::string str() const;
};

// The word e0 * prod_i (1 - negatives[i]), all letters given by local
// position.  Every atom is the value of its canonical word.
struct AtomWord {
  int e0 = -1;
  std::vector<int> negatives;
};

AtomWord canonical_atom_word(const ProjLattice& host, int a);

// Atom set of a word: the members a with e0 >= a and no negative >= a.
TProj word_to_atoms(const ProjLattice& host, int e0,
                    const std::vector<int>& negatives);

// The atom sitting at member e, as a projection.
TProj atom_of(const ProjLattice& host, int e);

// All atoms, indexed by local position.
std::vector<TProj> all_atoms(const ProjLattice& host);

// Leading coefficient: the minimum semilattice member dominating every atom
// of p.  Throws ZeroProjection when p is empty and NoLeadingCoefficient when
// no member dominates all atoms.
int sigma(const TProj& p);

// Conjugation g . p . g* computed termwise on each atom's canonical word.
// Every conjugated letter must stay inside the host semilattice.
TProj conjugate_projection(int g_ambient, const TProj& p);

// Exact coefficients of p in the linear span of the semilattice members
// inside the semigroup algebra, indexed by local position.
std::vector<QC> expand_in_span(const TProj& p);

}  // namespace isg

#endif
