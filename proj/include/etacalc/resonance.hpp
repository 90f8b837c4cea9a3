#pragma once

#include <cmath>
#include <utility>

#include "etacalc/rational.hpp"
#include "etacalc/symmetric_form.hpp"

namespace etacalc {

// Element of Q[sqrt(2)]: a + b*sqrt(2).  Closed under the arithmetic needed
// by the resonance pairing, so the pairing identity can be checked exactly
// on Gaussian-rational inputs.
struct Sqrt2Ext {
  Rational a;
  Rational b;

  Sqrt2Ext() = default;
  Sqrt2Ext(int v) : a(v) {}
  Sqrt2Ext(Rational v) : a(std::move(v)) {}
  Sqrt2Ext(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static Sqrt2Ext sqrt2() { return {Rational(0), Rational(1)}; }
  static Sqrt2Ext inv_sqrt2() { return {Rational(0), Rational(1, 2)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  double to_double() const {
    return a.to_double() + b.to_double() * std::sqrt(2.0);
  }

  Sqrt2Ext operator-() const { return {-a, -b}; }
  friend Sqrt2Ext operator+(const Sqrt2Ext& x, const Sqrt2Ext& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend Sqrt2Ext operator-(const Sqrt2Ext& x, const Sqrt2Ext& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend Sqrt2Ext operator*(const Sqrt2Ext& x, const Sqrt2Ext& y) {
    return {x.a * y.a + Rational(2) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Sqrt2Ext&, const Sqrt2Ext&) = default;
};

namespace field {
// Uniform access to the scalar fields used by the fiberwise model:
// F = double (numeric route) or F = Sqrt2Ext (exact route).
inline double sqrt2(double) { return std::sqrt(2.0); }
inline double inv_sqrt2(double) { return 1.0 / std::sqrt(2.0); }
inline bool is_zero(double v) { return v == 0.0; }
inline Sqrt2Ext sqrt2(const Sqrt2Ext&) { return Sqrt2Ext::sqrt2(); }
inline Sqrt2Ext inv_sqrt2(const Sqrt2Ext&) { return Sqrt2Ext::inv_sqrt2(); }
inline bool is_zero(const Sqrt2Ext& v) { return v.is_zero(); }
}  // namespace field

// Minimal complex type over an arbitrary scalar field F.
template <class F>
struct Cx {
  F re{};
  F im{};

  Cx() = default;
  Cx(F r) : re(std::move(r)) {}
  Cx(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  Cx conj() const { return {re, -im}; }
  bool is_zero() const { return field::is_zero(re) && field::is_zero(im); }

  Cx operator-() const { return {-re, -im}; }
  friend Cx operator+(const Cx& x, const Cx& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend Cx operator-(const Cx& x, const Cx& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend Cx operator*(const Cx& x, const Cx& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend Cx operator*(const F& s, const Cx& y) {
    return {s * y.re, s * y.im};
  }
  friend bool operator==(const Cx&, const Cx&) = default;

  static Cx i() { return {F(0), F(1)}; }
};

// Hermitian inner product, conjugate-linear in the FIRST slot.
template <class F>
Cx<F> herm(const Cx<F>& u, const Cx<F>& v) {
  return u.conj() * v;
}

// 2x2 matrix over Cx<F>; enough linear algebra for the Clifford relations.
template <class F>
struct Mat2 {
  Cx<F> a, b, c, d;  // [[a, b], [c, d]]

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator*(const F& s, const Mat2& y) {
    return {s * y.a, s * y.b, s * y.c, s * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  static Mat2 identity() {
    return {Cx<F>(F(1)), Cx<F>(), Cx<F>(), Cx<F>(F(1))};
  }
};

// Clifford action of the covector a*phi + b*phi1 + c*phi2 in the fiberwise
// model: [[ia, b+ic], [-(b-ic), -ia]].
template <class F>
Mat2<F> clifford_block(const F& a, const F& b, const F& c) {
  return {Cx<F>(F(0), a), Cx<F>(b, c), -Cx<F>(b, -c), Cx<F>(F(0), -a)};
}

// Fiberwise background of an irreducible monopole: the spinor has only a
// plus component phi_+ != 0.
template <class F>
struct ResonanceInstance {
  Cx<F> phi_plus;
};

// Tangent vector Xi = (psi_dot, i a_dot, i f) in fiberwise coordinates:
// spinor components psi_minus/psi_plus, the phi-coefficient a0 of i*a_dot,
// its K-component omega (via i*a_dot = (omega - conj(omega))/2), and the
// i*Lambda^0 component f.
template <class F>
struct TangentVector {
  Cx<F> psi_minus{};
  Cx<F> psi_plus{};
  F a0{};
  Cx<F> omega{};
  F f{};
};

// First-order perturbation operator P_phi applied to Xi.
template <class F>
TangentVector<F> perturbation_apply(const ResonanceInstance<F>& inst,
                                    const TangentVector<F>& xi) {
  const Cx<F>& phi = inst.phi_plus;
  TangentVector<F> out;
  out.psi_minus = -(xi.omega.conj() * phi);
  out.psi_plus = -(Cx<F>::i() * (F(xi.f) * phi));
  Cx<F> pairing = herm(phi, xi.psi_plus);
  out.a0 = pairing.re;
  Cx<F> w = xi.psi_minus * phi.conj();
  out.omega = field::inv_sqrt2(F{}) * (w - w.conj());
  out.f = pairing.im;
  return out;
}

// The resonance pairing of the second-order analysis:
// sqrt(2) f Im<phi_+, psi_+> - Re(conj(psi_-) phi_+ conj(omega)).
template <class F>
F resonance_pairing(const ResonanceInstance<F>& inst,
                    const TangentVector<F>& xi) {
  F first = field::sqrt2(F{}) * xi.f * herm(inst.phi_plus, xi.psi_plus).im;
  F second = (xi.psi_minus.conj() * inst.phi_plus * xi.omega.conj()).re;
  return first - second;
}

// Real inner product of the tangent-vector model.  The weights are pinned
// by the pairing identity <P(Xi), Xi> = resonance_pairing(Xi): spinor slots
// carry weight 1, the f slot carries weight 1 + sqrt(2), and the a0/omega
// slots do not enter.
template <class F>
F model_pairing(const TangentVector<F>& x, const TangentVector<F>& y) {
  F spinor = (herm(x.psi_minus, y.psi_minus) + herm(x.psi_plus, y.psi_plus)).re;
  F fpart = (F(1) + field::sqrt2(F{})) * x.f * y.f;
  return spinor + fpart;
}

// Gram matrix of the resonance form Q1(f (+) v) = f*v2 on the (2d+1)-dim
// space with coordinates (f, v_1, ..., v_2d).
SymmetricForm q1_gram(long long d);

// Gram matrix of Q2(u (+) v) = -Re<u, v> on R^{2m} (+) R^{2g}, with U
// embedded in the first 2m coordinates of V.
SymmetricForm q2_gram(long long g, long long m);

// Contribution of the order-two pair to the spectral flow: -1 when l > 0,
// else 0.
long long degenerate_contribution(long long l);

struct AdotCoefficient {
  Rational coefficient;  // -1/(2l)
  int pairing_sign;      // sign(coefficient * norm_sq_integral) = -sign(l)
};

// Closed form of the second-order coefficient and the sign of the induced
// pairing against a positive norm integral.
AdotCoefficient explicit_adot_coefficient(long long l,
                                          const Rational& norm_sq_integral);

// Spectral flow across the resonance instant:
//   sf_plus  = -2 - 2h*  if l > 0,  -1 - 2h*  if l < 0
// and sf_minus is the same with the sign of l flipped.
long long sf_plus(long long l, long long h_L_star);
long long sf_minus(long long l, long long h_L_star);

// Kernel dimensions along the deformation: (dim ker H_t for t > 0,
// dim ker R) = (2(g-1-|n|), 2(g-|n|)-1).
std::pair<long long, long long> ker_counts(long long g, long long n);

}  // namespace etacalc
