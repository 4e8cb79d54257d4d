#include "isg/partial_perm.hpp"

#include <algorithm>

#include "isg/error.hpp"

namespace isg {

PartialPerm::PartialPerm(int degree, std::vector<int> img)
    : degree_(degree), img_(std::move(img)) {
  if (static_cast<int>(img_.size()) != degree_) {
    throw Error(ErrorCode::ParseError,
                "partial permutation image list has wrong length");
  }
  std::vector<char> seen(static_cast<size_t>(degree_) + 1, 0);
  for (int v : img_) {
    if (v < 0 || v > degree_) {
      throw Error(ErrorCode::ParseError,
                  "partial permutation image out of range");
    }
    if (v != 0) {
      if (seen[v]) {
        throw Error(ErrorCode::ParseError, "partial permutation not injective");
      }
      seen[v] = 1;
    }
  }
}

PartialPerm PartialPerm::identity(int degree) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[i] = i + 1;
  return PartialPerm(degree, std::move(img));
}

PartialPerm PartialPerm::empty_map(int degree) {
  return PartialPerm(degree, std::vector<int>(static_cast<size_t>(degree), 0));
}

std::vector<int> PartialPerm::domain() const {
  std::vector<int> d;
  for (int p = 1; p <= degree_; ++p)
    if (img_[p - 1] != 0) d.push_back(p);
  return d;
}

std::vector<int> PartialPerm::range() const {
  std::vector<int> r;
  for (int v : img_)
    if (v != 0) r.push_back(v);
  std::sort(r.begin(), r.end());
  return r;
}

PartialPerm PartialPerm::compose(const PartialPerm& g) const {
  if (degree_ != g.degree_) {
    throw Error(ErrorCode::DegreeMismatch,
                "cannot compose partial permutations of different degree");
  }
  std::vector<int> img(static_cast<size_t>(degree_), 0);
  for (int p = 1; p <= degree_; ++p) {
    int q = g.img_[p - 1];
    if (q != 0) img[p - 1] = img_[q - 1];
  }
  return PartialPerm(degree_, std::move(img));
}

PartialPerm PartialPerm::inverse() const {
  std::vector<int> img(static_cast<size_t>(degree_), 0);
  for (int p = 1; p <= degree_; ++p) {
    int q = img_[p - 1];
    if (q != 0) img[q - 1] = p;
  }
  return PartialPerm(degree_, std::move(img));
}

bool PartialPerm::is_idempotent() const {
  // Idempotent partial permutations are exactly the partial identities.
  for (int p = 1; p <= degree_; ++p) {
    int q = img_[p - 1];
    if (q != 0 && q != p) return false;
  }
  return true;
}

std::string PartialPerm::str() const {
  std::string s = "[";
  for (int p = 1; p <= degree_; ++p) {
    if (p > 1) s += ",";
    s += img_[p - 1] == 0 ? "-" : std::to_string(img_[p - 1]);
  }
  s += "]";
  return s;
}

bool operator<(const PartialPerm& a, const PartialPerm& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  for (int i = 0; i < a.degree_; ++i) {
    int x = a.img_[i] == 0 ? a.degree_ + 1 : a.img_[i];
    int y = b.img_[i] == 0 ? b.degree_ + 1 : b.img_[i];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace isg
