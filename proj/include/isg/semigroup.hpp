#ifndef ISG_SEMIGROUP_HPP
#define ISG_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "isg/partial_perm.hpp"

namespace isg {

inline constexpr int kDefaultSizeCap = 5000;

// Finite inverse semigroup of partial permutations, closed under composition
// and inversion, with dense index tables.  Elements are stored in canonical
// order so that identical generating data always yields identical indexing.
class InverseSemigroup {
 public:
  static InverseSemigroup close(int degree,
                                const std::vector<PartialPerm>& gens,
                                int size_cap = kDefaultSizeCap);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const PartialPerm& elem(int i) const { return elems_[i]; }
  const std::vector<PartialPerm>& elements() const { return elems_; }

  int mul(int i, int j) const { return mult_[i][j]; }
  int inv(int i) const { return inv_[i]; }

  // Indices of the idempotents, ascending.
  const std::vector<int>& idempotents() const { return idem_; }
  bool is_idempotent(int i) const { return idem_mask_[i]; }

  // Natural partial order: g <= h iff g = h g* g.
  bool leq(int i, int j) const { return leq_[i][j] != 0; }

  // g g* and g* g.
  int range_proj(int i) const { return mul(i, inv_[i]); }
  int domain_proj(int i) const { return mul(inv_[i], i); }

  std::optional<int> zero() const { return zero_; }

  int index_of(const PartialPerm& p) const;

  // Exhaustive table checks; used by the verification suites.
  bool table_associative(int* bad_i = nullptr, int* bad_j = nullptr,
                         int* bad_k = nullptr) const;

 private:
  int degree_ = 0;
  std::vector<PartialPerm> elems_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> inv_;
  std::vector<int> idem_;
  std::vector<char> idem_mask_;
  std::vector<std::vector<char>> leq_;
  std::optional<int> zero_;

  void build_tables();
};

using ISG = InverseSemigroup;

// Result of checking a subset for closure under product and inverse.
struct SubsetCheck {
  bool closed_mul = true;
  bool closed_inv = true;
  int witness_i = -1;  // offending pair/element when not closed
  int witness_j = -1;

  bool ok() const { return closed_mul && closed_inv; }
};

SubsetCheck subsemigroup_check(const ISG& g, const std::vector<int>& subset);

// A sub-inverse-semigroup materialized with its own tables plus index maps
// to and from the parent.
struct SubISG {
  const ISG* parent = nullptr;
  ISG local;
  std::vector<int> to_parent;    // local index -> parent index
  std::vector<int> from_parent;  // parent index -> local index or -1

  static SubISG whole(const ISG& g);

  // Throws ErrorCode::NotASubsemigroup when the subset is not closed.
  static SubISG from_indices(const ISG& g, std::vector<int> subset);

  // Smallest sub-inverse-semigroup of g containing the seed elements.
  static SubISG closure_of(const ISG& g, const std::vector<int>& seed);

  int size() const { return local.size(); }
};

// The minimum idempotent e0 (finite semilattices always have one) and the
// subgroup {e0 g e0 : g in G}, together with the outcome of verifying the
// group axioms on it.
struct MinimalGroup {
  int e0 = -1;
  std::vector<int> members;
  bool is_group = false;
  std::string failure;
};

MinimalGroup minimal_idempotent_group(const ISG& g);

// --- input documents and table cache ---

struct SemigroupInput {
  int degree = 0;
  std::vector<PartialPerm> generators;
};

SemigroupInput parse_semigroup_text(const std::string& json_text);
SemigroupInput load_semigroup_file(const std::string& path);
std::string semigroup_input_to_text(const SemigroupInput& in);

// Content hash of degree + generator images; keys the table cache.
std::string generator_hash(const SemigroupInput& in);

void save_table_cache(const ISG& g, const SemigroupInput& in,
                      const std::string& path);

// Returns the cached closure when the stored hash matches the input.
std::optional<ISG> load_table_cache(const SemigroupInput& in,
                                    const std::string& path);

}  // namespace isg

#endif
