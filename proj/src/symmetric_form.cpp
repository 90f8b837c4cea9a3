#include "etacalc/symmetric_form.hpp"

#include "etacalc/errors.hpp"

namespace etacalc {

SymmetricForm::SymmetricForm(const std::vector<std::vector<Rational>>& entries)
    : n_(entries.size()), a_(entries.size() * entries.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (entries[i].size() != n_)
      throw SchemaError("symmetric form rows must have length n");
    for (std::size_t j = 0; j < n_; ++j) a_[i * n_ + j] = entries[i][j];
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i))
        throw SchemaError("matrix is not symmetric at (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
}

SignatureTriple SymmetricForm::signature() const {
  std::vector<Rational> m = a_;
  auto e = [&](std::size_t i, std::size_t j) -> Rational& {
    return m[i * n_ + j];
  };
  std::vector<bool> done(n_, false);
  SignatureTriple sig;

  // row/col combination: row_t += f*row_s, then col_t += f*col_s
  auto combine = [&](std::size_t t, std::size_t s, const Rational& f) {
    for (std::size_t k = 0; k < n_; ++k) e(t, k) += f * e(s, k);
    for (std::size_t k = 0; k < n_; ++k) e(k, t) += f * e(k, s);
  };

  for (;;) {
    // pick a nonzero diagonal pivot among the unreduced indices
    std::size_t piv = n_;
    for (std::size_t i = 0; i < n_ && piv == n_; ++i)
      if (!done[i] && !e(i, i).is_zero()) piv = i;

    if (piv == n_) {
      // no diagonal pivot: look for an off-diagonal hyperbolic entry and
      // fold it onto the diagonal
      std::size_t hi = n_, hj = n_;
      for (std::size_t i = 0; i < n_ && hi == n_; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n_; ++j) {
          if (done[j]) continue;
          if (!e(i, j).is_zero()) {
            hi = i;
            hj = j;
            break;
          }
        }
      }
      if (hi == n_) break;  // fully reduced: the rest is the kernel
      combine(hi, hj, Rational(1));
      continue;
    }

    Rational p = e(piv, piv);
    if (p.sign() > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == piv || done[j]) continue;
      if (e(piv, j).is_zero()) continue;
      combine(j, piv, -(e(j, piv) / p));
    }
    done[piv] = true;
  }

  for (std::size_t i = 0; i < n_; ++i)
    if (!done[i]) ++sig.n_zero;
  return sig;
}

}  // namespace etacalc
