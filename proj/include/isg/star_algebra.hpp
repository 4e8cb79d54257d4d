#ifndef ISG_STAR_ALGEBRA_HPP
#define ISG_STAR_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "isg/linalg.hpp"

namespace isg {

// A finite-dimensional associative algebra with a conjugate-linear
// involution, given by structure constants over a fixed basis.  The product
// table stores b_i * b_j as a coordinate vector; the involution is the
// matrix applied after conjugating coordinates.
struct StarAlgebra {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> mult;
  Mat invol;

  static StarAlgebra zero_algebra();
  static StarAlgebra complex_line();
  static StarAlgebra full_matrix(int n);
  static StarAlgebra function_algebra(std::vector<std::string> point_labels);

  Vec basis_vec(int i) const { return vec_unit(dim, i); }
  Vec mul_vec(const Vec& x, const Vec& y) const;
  Vec star_vec(const Vec& x) const;
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;
  std::optional<Vec> find_unit() const;

  // Associativity and involution axioms on basis tuples; returns at most a
  // handful of violation descriptions.
  std::vector<std::string> check_axioms() const;
};

StarAlgebra direct_sum_star(const StarAlgebra& a, const StarAlgebra& b);
StarAlgebra tensor_star(const StarAlgebra& a, const StarAlgebra& b);

}  // namespace isg

#endif
