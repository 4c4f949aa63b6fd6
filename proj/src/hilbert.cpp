#include "ctxfer/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include "ctxfer/errors.hpp"

namespace ctxfer {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double CVec3::norm() const {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

CVec3 CVec3::normalized() const {
  const double n = norm();
  if (n < 1e-12) throw ZeroNorm("cannot normalize a zero vector");
  return (1.0 / n) * (*this);
}

CVec3 CVec3::conjugated() const {
  return {std::conj(v[0]), std::conj(v[1]), std::conj(v[2])};
}

CVec3 CVec3::basis(int i) {
  CVec3 e;
  e[i] = 1.0;
  return e;
}

CVec3 operator+(const CVec3& a, const CVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

CVec3 operator-(const CVec3& a, const CVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

CVec3 operator*(Cx s, const CVec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

CVec3 operator*(double s, const CVec3& a) { return Cx(s, 0.0) * a; }

Cx inner(const CVec3& a, const CVec3& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

CMat3 CMat3::zero() { return CMat3{}; }

CMat3 CMat3::identity() {
  CMat3 i;
  i(0, 0) = i(1, 1) = i(2, 2) = 1.0;
  return i;
}

CMat3 CMat3::adjoint() const {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

Cx CMat3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

double CMat3::hermiticity_deviation() const {
  double dev = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      dev = std::max(dev, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return dev;
}

double CMat3::unitarity_deviation() const {
  const CMat3 g = adjoint() * (*this) - CMat3::identity();
  double dev = 0.0;
  for (const Cx& x : g.m) dev = std::max(dev, std::abs(x));
  return dev;
}

CMat3 operator+(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

CMat3 operator-(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

CMat3 operator*(const CMat3& a, const CMat3& b) {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Cx s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

CMat3 operator*(Cx s, const CMat3& a) {
  CMat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = s * a.m[i];
  return out;
}

CVec3 operator*(const CMat3& m, const CVec3& x) {
  CVec3 out;
  for (int r = 0; r < 3; ++r)
    out[r] = m(r, 0) * x[0] + m(r, 1) * x[1] + m(r, 2) * x[2];
  return out;
}

CMat3 outer(const CVec3& ket, const CVec3& bra) {
  CMat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = ket[r] * std::conj(bra[c]);
  return out;
}

double min_eigenvalue_hermitian(const CMat3& a) {
  // Trigonometric solution of the cubic characteristic polynomial of a
  // Hermitian matrix; eigenvalues are real.
  const double q = std::real(a.trace()) / 3.0;
  const double p1 =
      std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
  const double d0 = std::real(a(0, 0)) - q;
  const double d1 = std::real(a(1, 1)) - q;
  const double d2 = std::real(a(2, 2)) - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
  if (p2 < 1e-30) return q;  // a == q*I
  const double p = std::sqrt(p2 / 6.0);

  CMat3 b = (1.0 / p) * (a - Cx(q, 0.0) * CMat3::identity());
  const Cx detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                  b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                  b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  const double r = std::clamp(std::real(detb) / 2.0, -1.0, 1.0);

  const double phi = std::acos(r) / 3.0;
  // Smallest root of the three.
  return q + 2.0 * p * std::cos(phi + kTwoPi / 3.0);
}

DensityMatrix DensityMatrix::checked(const CMat3& m) {
  if (m.hermiticity_deviation() > 1e-12)
    throw NotHermitian("density matrix is not Hermitian within 1e-12");
  if (std::abs(m.trace() - Cx(1.0, 0.0)) > 1e-12)
    throw BadTrace("density matrix trace deviates from 1 beyond 1e-12");
  if (min_eigenvalue_hermitian(m) < -1e-10)
    throw NotPositive("density matrix has an eigenvalue below -1e-10");
  return DensityMatrix{m};
}

Cx DensityMatrix::sandwich(const CVec3& bra, const CVec3& ket) const {
  return inner(bra, rho * ket);
}

double DensityMatrix::expectation(const CVec3& psi) const {
  return std::real(sandwich(psi, psi));
}

DensityMatrix pure_density(const CVec3& psi) {
  const double n = psi.norm();
  if (n < 1e-12) throw ZeroNorm("pure_density of a zero vector");
  const CVec3 u = psi.normalized();
  return DensityMatrix{outer(u, u)};
}

DensityMatrix random_density(std::uint64_t seed) {
  Rng rng(seed);
  CMat3 g;
  for (std::size_t i = 0; i < 9; ++i) g.m[i] = Cx(rng.gaussian(), rng.gaussian());
  CMat3 ggd = g * g.adjoint();
  const double tr = std::real(ggd.trace());
  return DensityMatrix{(1.0 / tr) * ggd};
}

DensityMatrix maximally_mixed() {
  return DensityMatrix{Cx(1.0 / 3.0, 0.0) * CMat3::identity()};
}

double Rng::uniform() {
  // 53 high bits of the 64-bit word.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

CMat6 CMat6::identity() {
  CMat6 i;
  for (int k = 0; k < 6; ++k) i(k, k) = 1.0;
  return i;
}

CMat6 CMat6::adjoint() const {
  CMat6 out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

CMat6 operator*(const CMat6& a, const CMat6& b) {
  CMat6 out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      Cx s = 0.0;
      for (int k = 0; k < 6; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

CMat6 kron(const CMat3& a, const std::array<Cx, 4>& b) {
  CMat6 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          out(2 * i + s, 2 * j + t) = a(i, j) * b[static_cast<std::size_t>(2 * s + t)];
  return out;
}

}  // namespace ctxfer
