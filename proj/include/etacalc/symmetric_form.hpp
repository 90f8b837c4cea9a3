#pragma once

#include <cstddef>
#include <vector>

#include "etacalc/rational.hpp"

namespace etacalc {

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  friend bool operator==(const SignatureTriple&,
                         const SignatureTriple&) = default;
};

// Symmetric bilinear form over the rationals, stored as a full n x n matrix.
// Construction enforces symmetry.
class SymmetricForm {
 public:
  explicit SymmetricForm(std::size_t n) : n_(n), a_(n * n) {}
  // Validates entries[i][j] == entries[j][i].
  explicit SymmetricForm(const std::vector<std::vector<Rational>>& entries);

  std::size_t dim() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }
  // Sets both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const Rational& v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  // Counts of positive, negative and zero eigenvalues, computed by exact
  // symmetric Gaussian reduction (congruence diagonalization).  Sylvester's
  // law of inertia makes the result independent of pivot choices.
  SignatureTriple signature() const;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
};

}  // namespace etacalc
