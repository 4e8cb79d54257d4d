#ifndef ISG_PARTIAL_PERM_HPP
#define ISG_PARTIAL_PERM_HPP

#include <string>
#include <vector>

namespace isg {

// Partial injective map on {1..degree}.  Image value 0 means undefined.
// Elements compare lexicographically on their image sequences with
// undefined slots sorting after every defined value.
class PartialPerm {
 public:
  PartialPerm() = default;
  PartialPerm(int degree, std::vector<int> img);

  static PartialPerm identity(int degree);
  static PartialPerm empty_map(int degree);

  int degree() const { return degree_; }

  // Image of point p (1-based); 0 when undefined.
  int image(int p) const { return img_[p - 1]; }

  const std::vector<int>& images() const { return img_; }

  std::vector<int> domain() const;
  std::vector<int> range() const;

  // (f.compose(g))(p) = f(g(p)): g applies first.
  PartialPerm compose(const PartialPerm& g) const;
  PartialPerm inverse() const;

  bool is_idempotent() const;

  std::string str() const;

  friend bool operator==(const PartialPerm& a, const PartialPerm& b) {
    return a.degree_ == b.degree_ && a.img_ == b.img_;
  }
  friend bool operator!=(const PartialPerm& a, const PartialPerm& b) {
    return !(a == b);
  }
  friend bool operator<(const PartialPerm& a, const PartialPerm& b);

 private:
  int degree_ = 0;
  std::vector<int> img_;
};

}  // namespace isg

#endif
