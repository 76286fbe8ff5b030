#include "chirpdnp/spin_ops.hpp"

namespace chirpdnp {

namespace {

SpinHalfOps build_spin_half() {
  SpinHalfOps o;
  const cplx i(0.0, 1.0);
  o.id = Mat2::Identity();
  o.x << 0.0, 0.5, 0.5, 0.0;
  o.y << 0.0, -0.5 * i, 0.5 * i, 0.0;
  o.z << 0.5, 0.0, 0.0, -0.5;
  o.plus = o.x + i * o.y;
  o.minus = o.x - i * o.y;
  return o;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = a(r, c) * b;
  return out;
}

TwoSpinOps build_two_spin() {
  const SpinHalfOps& s = spin_half_operators();
  TwoSpinOps o;
  o.id = Mat4::Identity();
  o.sx = kron(s.x, s.id);
  o.sy = kron(s.y, s.id);
  o.sz = kron(s.z, s.id);
  o.splus = kron(s.plus, s.id);
  o.sminus = kron(s.minus, s.id);
  o.ix = kron(s.id, s.x);
  o.iy = kron(s.id, s.y);
  o.iz = kron(s.id, s.z);
  o.iplus = kron(s.id, s.plus);
  o.iminus = kron(s.id, s.minus);
  o.sz_iz = o.sz * o.iz;
  o.sz_ix = o.sz * o.ix;
  return o;
}

FictitiousBasis build_fictitious() {
  const TwoSpinOps& t = two_spin_operators();
  FictitiousBasis f;
  f.dq_x = t.sx * t.ix - t.sy * t.iy;
  f.dq_y = t.sx * t.iy + t.sy * t.ix;
  f.dq_z = 0.5 * (t.sz + t.iz);
  f.zq_x = t.sx * t.ix + t.sy * t.iy;
  f.zq_y = t.sx * t.iy - t.sy * t.ix;
  f.zq_z = 0.5 * (t.sz - t.iz);
  return f;
}

}  // namespace

const SpinHalfOps& spin_half_operators() {
  static const SpinHalfOps ops = build_spin_half();
  return ops;
}

const TwoSpinOps& two_spin_operators() {
  static const TwoSpinOps ops = build_two_spin();
  return ops;
}

const FictitiousBasis& fictitious_basis() {
  static const FictitiousBasis basis = build_fictitious();
  return basis;
}

std::array<Mat4, 16> product_operator_basis() {
  const SpinHalfOps& s = spin_half_operators();
  const std::array<Mat2, 4> single = {s.id, 2.0 * s.x, 2.0 * s.y, 2.0 * s.z};
  std::array<Mat4, 16> basis;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) basis[4 * a + b] = kron(single[a], single[b]);
  return basis;
}

Mat2 reduce_subspace(const Mat4& rho, Subspace which) {
  const int lo = (which == Subspace::DQ) ? 0 : 1;
  const int hi = (which == Subspace::DQ) ? 3 : 2;
  Mat2 out;
  out << rho(lo, lo), rho(lo, hi), rho(hi, lo), rho(hi, hi);
  return out;
}

Vec3 bloch_vector(const Mat2& rho2) {
  const SpinHalfOps& s = spin_half_operators();
  return Vec3(2.0 * trace_product(s.x, rho2).real(),
              2.0 * trace_product(s.y, rho2).real(),
              2.0 * trace_product(s.z, rho2).real());
}

}  // namespace chirpdnp
