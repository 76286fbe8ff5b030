// Spin-1/2 operator algebra for one electron and one nucleus, the fictitious
// double-quantum / zero-quantum bases, expectation values and subspace
// reduction.
//
// Basis convention used throughout the library: product states are ordered
// |aa>, |ab>, |ba>, |bb> with the ELECTRON as the first factor and a = m=+1/2.
// All index-based subspace extraction (DQ block = {1,4}, ZQ block = {2,3} in
// 1-based labels) relies on this ordering and is defined only here.
//
// States are deviation density matrices: traceless, Hermitian, e.g.
// rho(0) = Sz. Expectation values are plain traces <O> = Tr[O rho] with no
// basis-dependent normalization; Bloch vectors carry an explicit factor 2 so
// that a pure +/-z state of a 2x2 (sub)matrix maps to z = +/-1.
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>

#include "chirpdnp/errors.hpp"

namespace chirpdnp {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default tolerance for Hermiticity / trace checks (double precision).
inline constexpr double kHermTol = 1e-12;
/// Largest acceptable imaginary residue of an expectation-value trace.
inline constexpr double kImagTol = 1e-10;

/// Single spin-1/2 operator set (2x2). z = diag(1/2, -1/2).
struct SpinHalfOps {
  Mat2 id, x, y, z, plus, minus;
};

/// Two-spin operator set (4x4), electron S (first factor) and nucleus I.
struct TwoSpinOps {
  Mat4 id;
  Mat4 sx, sy, sz, splus, sminus;  // electron, lifted as S (x) 1
  Mat4 ix, iy, iz, iplus, iminus;  // nucleus,  lifted as 1 (x) I
  Mat4 sz_iz, sz_ix;               // secular / pseudo-secular coupling products
};

/// Fictitious spin-1/2 triples spanning the DQ {|aa>,|bb>} and ZQ
/// {|ab>,|ba>} two-level blocks. Each triple obeys [Qx,Qy] = i Qz within its
/// block and commutes with the other block's operators.
struct FictitiousBasis {
  Mat4 dq_x, dq_y, dq_z;
  Mat4 zq_x, zq_y, zq_z;
};

const SpinHalfOps& spin_half_operators();
const TwoSpinOps& two_spin_operators();
const FictitiousBasis& fictitious_basis();

enum class Subspace { DQ, ZQ };

/// Orthogonal 16-operator product basis {1,2Sx,2Sy,2Sz} (x) {1,2Ix,2Iy,2Iz};
/// every element satisfies Tr[Bk Bl] = 4 delta_kl.
std::array<Mat4, 16> product_operator_basis();

/// Max element-wise |M - M^dagger|.
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Tr[op * rho] without validity checks; hot-path use only.
template <typename Derived1, typename Derived2>
cplx trace_product(const Eigen::MatrixBase<Derived1>& op,
                   const Eigen::MatrixBase<Derived2>& rho) {
  return op.cwiseProduct(rho.transpose()).sum();
}

/// Expectation value <op> = Tr[op * rho]. Dimension agreement between op and
/// rho is enforced by the fixed-size matrix types. Throws
/// NonHermitianObservable if op fails the Hermiticity check and
/// ImaginaryResidue if the trace has an imaginary part above tolerance
/// (a corrupted state).
template <typename Derived1, typename Derived2>
double expect(const Eigen::MatrixBase<Derived1>& op,
              const Eigen::MatrixBase<Derived2>& rho,
              double herm_tol = kHermTol, double imag_tol = kImagTol) {
  static_assert(Derived1::RowsAtCompileTime == Derived2::RowsAtCompileTime,
                "operator and state dimensions must agree");
  if (hermiticity_error(op) > herm_tol)
    throw NonHermitianObservable("expect: observable is not Hermitian");
  const cplx tr = trace_product(op, rho);
  if (std::abs(tr.imag()) > imag_tol)
    throw ImaginaryResidue("expect: imaginary trace residue " +
                           std::to_string(tr.imag()));
  return tr.real();
}

/// Restrict a 4x4 state to one two-level block: DQ keeps rows/cols {1,4},
/// ZQ keeps {2,3} (1-based). The result is again a deviation matrix.
Mat2 reduce_subspace(const Mat4& rho, Subspace which);

/// Bloch components (x,y,z) = 2 Tr[S_a rho] of a 2x2 state, so diag(1/2,-1/2)
/// maps to (0,0,1). The factor 2 normalizes the subspace polarization 1/2 to
/// the pole.
Vec3 bloch_vector(const Mat2& rho2);

}  // namespace chirpdnp
