#pragma once

#include "gkz/labeled.hpp"
#include "gkz/resonance.hpp"
#include "gkz/schober.hpp"

namespace gkz {

using CVec = std::vector<Cplx>;

struct QuadratureOptions {
  double half_width = 40.0;
  size_t nodes = 2000;
  bool experimental_nd = false;  // iterated 1-d quadrature for n >= 2
};

// Contour data for one Mellin-Barnes integral: gamma in C^d with
// A gamma = alpha, and sigma with Re(gamma_j + <b_j, sigma>) < 0.
struct MBParams {
  CVec gamma;   // length d
  CVec sigma;   // length n
  QuadratureOptions quad;
};

struct MBValue {
  Cplx value;
  double error_estimate;
};

// canonical gamma = K alpha (the section with trivial T-part)
CVec gamma_of_alpha(const WeightConfig& cfg, const CVec& alpha);

// sigma with margin, by exact rational feasibility on the real parts
CVec choose_sigma(const WeightConfig& cfg, const CVec& gamma);

MBParams make_mb_params(const WeightConfig& cfg, const CVec& alpha, const QuadratureOptions& q = {});

// single-valued integral on the covering coordinates; vhat lives in C^d
MBValue evaluate_mb_ambient(const WeightConfig& cfg, const MBParams& p, const CVec& vhat);
// restricted along the section: x in C^n, vhat = Si x
MBValue evaluate_mb(const WeightConfig& cfg, const MBParams& p, const CVec& x);
// the basis element of a chamber: M_chi(x) = M(x - chi)
MBValue evaluate_mb_basis(const WeightConfig& cfg, const MBParams& p, const Label& chi, const CVec& x);

struct GKZResidual {
  std::vector<double> box_residuals;    // one per kernel-lattice generator
  std::vector<double> euler_residuals;  // one per Y(H)-basis functional
  double max_box() const;
  double max_euler() const;
};

GKZResidual gkz_residual(const WeightConfig& cfg, const MBParams& p, const CVec& x);

struct SeriesParams {
  std::vector<size_t> index_set;  // I with (b_i)_{i in I} a basis
  CVec gamma;                     // A gamma = alpha, gamma_i integral on I
  CVec iota_gamma;                // Si^T gamma in C^n
};

// the multiset I_rho with |det(b_i)_{i in I}| parameter choices each
std::vector<SeriesParams> series_basis(const WeightConfig& cfg, const VecQ& rho, const CVec& alpha);

struct SeriesValue {
  Cplx value;
  double error_estimate;
  bool decayed;  // term decay observed before the truncation bound
};

SeriesValue evaluate_series(const WeightConfig& cfg, const SeriesParams& sp, const CVec& x, long trunc);

struct ConnectionResult {
  std::vector<SeriesParams> basis;
  std::vector<Label> chamber_labels;   // chi in L_C
  std::vector<CVec> coeff;             // coeff[k][i]: M_chi_k = sum_i c Phi_i
  double solve_residual;
  double factor_residual;  // ratio structure c_{chi,I} = e^{-2 pi i <chi, iota gamma_I>} a_I
};

ConnectionResult connection_matrix(const WeightConfig& cfg, const FaceComplex& fc, size_t chamber,
                                   const VecQ& rho, const CVec& alpha, const QuadratureOptions& q = {},
                                   long trunc = 48);

// analytic continuation across a wall: expand M_{C1} in the bridge series,
// re-expand in M_{C2}; the contract is equality with the specialized exact
// wall matrix
CMat numeric_wall_matrix(const WeightConfig& cfg, const FaceComplex& fc, size_t c1, size_t c2,
                         const CVec& alpha, const QuadratureOptions& q = {}, long trunc = 48);

}  // namespace gkz
