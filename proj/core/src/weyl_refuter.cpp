#include "latlab/weyl_refuter.hpp"

#include <stdexcept>

namespace latlab {

Mat2 rho_to_matrix(const Vec22& rho) {
  return Mat2(-rho.l, rho.m, rho.n, rho.k);
}

namespace {

// Working state for the reduction: M tracks P*A*Q as left and right
// elementary factors accumulate.
struct Reduction {
  Mat2 M, P, Q;

  explicit Reduction(const Mat2& A) : M(A), P(Mat2::identity()), Q(Mat2::identity()) {}

  void left(const Mat2& L) { M = L * M; P = L * P; }
  void right(const Mat2& R) { M = M * R; Q = Q * R; }

  void row2_minus(const Int& q) { left(Mat2(Int(1), Int(0), -q, Int(1))); }
  void col2_minus(const Int& q) { right(Mat2(Int(1), -q, Int(0), Int(1))); }
  void col1_plus_col2() { right(Mat2(Int(1), Int(0), Int(1), Int(1))); }
  void row_swap() { left(Mat2(Int(0), Int(1), Int(-1), Int(0))); }
  void col_swap() { right(Mat2(Int(0), Int(1), Int(-1), Int(0))); }
  void negate() { left(-Mat2::identity()); }
};

}  // namespace

ReductionTrace sl2_diagonalize(const Mat2& A) {
  if (A.is_zero()) throw ZeroMatrix("cannot diagonalize the zero matrix");
  Reduction r(A);

  // Move a nonzero entry to the (0,0) slot.
  if (r.M.a == 0) {
    if (r.M.c != 0) r.row_swap();
    else if (r.M.b != 0) r.col_swap();
    else { r.row_swap(); r.col_swap(); }
  }

  // Euclid on row/column remainders until the off-diagonal entries vanish.
  // Every swap strictly shrinks |M.a|, so this terminates.
  for (;;) {
    if (r.M.c != 0) {
      const Int q = floor_div(r.M.c, r.M.a);
      if (q != 0) r.row2_minus(q);
      if (r.M.c != 0) r.row_swap();
      continue;
    }
    if (r.M.b != 0) {
      const Int q = floor_div(r.M.b, r.M.a);
      if (q != 0) r.col2_minus(q);
      if (r.M.b != 0) r.col_swap();
      continue;
    }
    break;
  }

  // Enforce divisibility of the second diagonal entry by the first.
  while (r.M.d % r.M.a != 0) {
    r.col1_plus_col2();
    for (;;) {
      if (r.M.c != 0) {
        const Int q = floor_div(r.M.c, r.M.a);
        if (q != 0) r.row2_minus(q);
        if (r.M.c != 0) r.row_swap();
        continue;
      }
      if (r.M.b != 0) {
        const Int q = floor_div(r.M.b, r.M.a);
        if (q != 0) r.col2_minus(q);
        if (r.M.b != 0) r.col_swap();
        continue;
      }
      break;
    }
  }

  if (r.M.a < 0) r.negate();

  ReductionTrace t{UnimodularMat2(r.P), UnimodularMat2(r.Q), r.M.a, r.M.d / r.M.a};
  if (!reduction_holds(t, A)) throw std::logic_error("reduction lost its invariant");
  return t;
}

bool reduction_holds(const ReductionTrace& t, const Mat2& A) {
  const Mat2 m = t.P.mat() * A * t.Q.mat();
  return t.d1 != 0 && m == Mat2(t.d1, Int(0), Int(0), t.d1 * t.e);
}

OrthogonalityCertificate orthogonal_root(const Vec22& rho) {
  Vec22 alpha;
  if (rho.is_zero()) {
    alpha = Vec22(1, -1, 0, 0);
  } else {
    const Mat2 A = rho_to_matrix(rho);
    const ReductionTrace t = sl2_diagonalize(A);
    // diag(d1, d1*e) has trace d1*(1+e). Adding the first column to the
    // second and then subtracting e+1 times the first row from the second
    // kills the trace while keeping both factors in SL(2,Z).
    const Mat2 p_fix(Int(1), Int(0), -(t.e + 1), Int(1));
    const Mat2 q_fix(Int(1), Int(1), Int(0), Int(1));
    const Mat2 P2 = p_fix * t.P.mat();
    const Mat2 Q2 = t.Q.mat() * q_fix;
    // tr(P2*A*Q2) == tr(Q2*P2*A), so R = Q2*P2 pairs to zero with rho.
    alpha = from_sl2(Q2 * P2);
  }
  OrthogonalityCertificate c{rho, alpha, inner22(rho, alpha), norm22(alpha)};
  if (!certificate_holds(c)) throw std::logic_error("orthogonal_root produced a bad certificate");
  return c;
}

bool certificate_holds(const OrthogonalityCertificate& c) {
  return c.inner_value == 0 && c.alpha_norm == 2 && is_root22(c.alpha) &&
         inner22(c.rho, c.alpha) == 0 && norm22(c.alpha) == 2;
}

}  // namespace latlab
