#pragma once

#include "gkz/intmatrix.hpp"

namespace gkz {

// All exact lattice data attached to one weight matrix B: the Gale dual A,
// the section/splitting pair (Si, K), the projection onto the dual-torus
// character lattice, and the covector h with <h, a_i> = 1.
//
// Shapes: B is n x d, A is m x d with m = d - n, Si is d x n with
// B Si = I_n, K is d x m with A K = I_m and Si^T K = 0.  The projection
// P = K^T satisfies P A^T = I_m, P Si = 0 and chi = Si (B chi) + A^T (P chi)
// for every chi in Z^d.
struct WeightConfig {
  size_t n = 0, d = 0, m = 0;
  IntMatrix B;      // n x d
  IntMatrix A;      // m x d
  IntMatrix Si;     // d x n
  IntMatrix K;      // d x m
  IntMatrix P;      // m x d (= K^T)
  VecI h_cov;       // length m
  bool quasi_symmetric = false;
  bool lattice_surjective = false;
  bool zero_sum = false;

  Label b_col(size_t i) const { return B.col_label(i); }
  Label a_col(size_t i) const { return A.col_label(i); }
  // X(T)-part and X(H)-part of chi in Z^d.
  Label t_part(Label chi) const;
  Label h_part(Label chi) const;
};

struct NormalForms {
  IntMatrix hermite;
  IntMatrix hermite_u;
  IntMatrix smith;
  IntMatrix smith_u, smith_v;
};

NormalForms normal_forms(const IntMatrix& m);

// Gale dual of B: canonical (HNF) basis of the saturated kernel lattice,
// as rows of an m x d matrix.  Throws NotSaturated when ZB != Z^n.
IntMatrix gale_dual(const IntMatrix& b);

struct Splittings {
  IntMatrix si;  // d x n
  IntMatrix k;   // d x m
  IntMatrix p;   // m x d
};

Splittings choose_splittings(const IntMatrix& b, const IntMatrix& a);

// Full validation pipeline: saturation, nonzero columns, quasi-symmetry by
// line grouping, zero sum, Gale dual, splittings, h covector.
WeightConfig validate_config(const IntMatrix& b);

}  // namespace gkz
