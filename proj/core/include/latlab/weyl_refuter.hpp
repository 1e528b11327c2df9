#pragma once

#include "latlab/gamma22.hpp"

namespace latlab {

// rho = (a,b;c,d) as the matrix [[-b, c], [d, a]]. For any root alpha with
// R = to_sl2(alpha), tr(R * rho_to_matrix(rho)) == -inner22(rho, alpha).
Mat2 rho_to_matrix(const Vec22& rho);

struct ReductionTrace {
  UnimodularMat2 P, Q;
  Int d1;  // nonzero; divides both diagonal entries of P*A*Q
  Int e;   // P*A*Q == diag(d1, d1*e)
};

// Diagonalizes a nonzero integer matrix by determinant-1 elementary
// operations (integer shears and the signed swap [[0,1],[-1,0]]).
// Postcondition: P*A*Q == diag(d1, d1*e) with d1 > 0.
ReductionTrace sl2_diagonalize(const Mat2& A);

bool reduction_holds(const ReductionTrace& t, const Mat2& A);

struct OrthogonalityCertificate {
  Vec22 rho;
  Vec22 alpha;
  Int inner_value;  // always 0
  Int alpha_norm;   // always 2
};

// For any rho, a lattice root exactly orthogonal to it. Total: no height
// functional induced by a lattice vector can avoid vanishing on roots.
OrthogonalityCertificate orthogonal_root(const Vec22& rho);

// Recomputes the certificate equalities from scratch.
bool certificate_holds(const OrthogonalityCertificate& c);

}  // namespace latlab
