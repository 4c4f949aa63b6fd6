#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>

namespace ctxfer {

using Cx = std::complex<double>;

// Amplitude vector in the 3-dimensional path Hilbert space.
struct CVec3 {
  std::array<Cx, 3> v{};

  CVec3() = default;
  CVec3(Cx a, Cx b, Cx c) : v{a, b, c} {}

  Cx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const Cx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  double norm() const;
  // Unit-norm copy; throws ZeroNorm below 1e-12.
  CVec3 normalized() const;
  CVec3 conjugated() const;

  static CVec3 basis(int i);
};

CVec3 operator+(const CVec3& a, const CVec3& b);
CVec3 operator-(const CVec3& a, const CVec3& b);
CVec3 operator*(Cx s, const CVec3& a);
CVec3 operator*(double s, const CVec3& a);

// Hermitian inner product <a|b>, conjugate-linear in the first argument.
Cx inner(const CVec3& a, const CVec3& b);

// 3x3 complex matrix, row major.
struct CMat3 {
  std::array<Cx, 9> m{};

  Cx& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  const Cx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(3 * r + c)];
  }

  static CMat3 zero();
  static CMat3 identity();

  CMat3 adjoint() const;
  Cx trace() const;
  // max_ij |M - M^dag|
  double hermiticity_deviation() const;
  // max_ij |M^dag M - I|
  double unitarity_deviation() const;
};

CMat3 operator+(const CMat3& a, const CMat3& b);
CMat3 operator-(const CMat3& a, const CMat3& b);
CMat3 operator*(const CMat3& a, const CMat3& b);
CMat3 operator*(Cx s, const CMat3& a);
CVec3 operator*(const CMat3& m, const CVec3& x);

// |ket><bra|
CMat3 outer(const CVec3& ket, const CVec3& bra);

// Smallest eigenvalue of a Hermitian 3x3 matrix, via the closed-form
// solution of the characteristic polynomial.
double min_eigenvalue_hermitian(const CMat3& a);

// Density operator on the 3-dimensional path space.
// Invariants: Hermitian within 1e-12, trace 1 within 1e-12,
// min eigenvalue >= -1e-10.
struct DensityMatrix {
  CMat3 rho;

  // Validating factory; throws NotHermitian / BadTrace / NotPositive.
  static DensityMatrix checked(const CMat3& m);

  Cx sandwich(const CVec3& bra, const CVec3& ket) const;  // <bra| rho |ket>
  double expectation(const CVec3& psi) const;             // Re <psi| rho |psi>
};

// |psi><psi| for unit-norm psi (within 1e-9); throws ZeroNorm below 1e-12.
DensityMatrix pure_density(const CVec3& psi);

// G G^dag / tr(G G^dag) for a seeded 3x3 matrix G of independent standard
// complex Gaussians. Deterministic per seed.
DensityMatrix random_density(std::uint64_t seed);

DensityMatrix maximally_mixed();

// Deterministic random source. mt19937_64 has a standardized stream, and
// the uniform/gaussian transforms below avoid the implementation-defined
// std:: distributions, so identical seeds give identical values everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0,1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// 6x6 complex matrix for the path (x) polarization probe space.
// Index convention: composite index 2*path + pol with pol 0 = H, 1 = V.
struct CMat6 {
  std::array<Cx, 36> m{};

  Cx& operator()(int r, int c) { return m[static_cast<std::size_t>(6 * r + c)]; }
  const Cx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(6 * r + c)];
  }

  static CMat6 identity();
  CMat6 adjoint() const;
};

CMat6 operator*(const CMat6& a, const CMat6& b);

// A (x) B for 3x3 A and 2x2 B (row-major 2x2 array).
CMat6 kron(const CMat3& a, const std::array<Cx, 4>& b);

}  // namespace ctxfer
