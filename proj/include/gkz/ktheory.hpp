#pragma once

#include "gkz/arrangement.hpp"
#include "gkz/labeled.hpp"
#include "gkz/resonance.hpp"

namespace gkz {

// Filtration context for the X(H)-graded series: theta = sum of the a_i.
// Within the entry (from chi1 to chi2) the order of a term u^h equals the
// total degree |m| of the unique witness monomial,
//   ord(h) = <theta, h> + <si_colsum, chi2 - chi1>.
struct SeriesContext {
  size_t m = 0;
  Label theta;       // in Z^m
  Label si_colsum;   // column sums of Si, a functional on X(T)

  static SeriesContext of(const WeightConfig& cfg);
  int64_t offset(const Label& from, const Label& to) const { return dot(si_colsum, sub(to, from)); }
  int64_t ord(const Label& h, int64_t off) const { return dot(theta, h) + off; }
};

// One graded Hom series truncated at order N: all terms of order <= N are
// present, nothing above is stored.
struct TruncatedSeries {
  GroupRingElement terms;
  int64_t offset = 0;
  int64_t trunc = 0;
};

// Hilbert series of Hom(P_{i chi1}, P_{i chi2}): coefficient of u^h is 1
// exactly when S_i(chi2-chi1) + A^T(-h) lies in N^d.
TruncatedSeries hilbert_entry(const WeightConfig& cfg, const Label& chi1, const Label& chi2, int64_t N);

// Psi over the label set L_{-C}: entry (i, j) = Hom series from label j to
// label i.  Entries are plain group-ring elements truncated per the context.
GMat psi_matrix(const WeightConfig& cfg, const std::vector<Label>& labels, int64_t N);
// Phi = Psi^{-1} by Neumann inversion to order N.
GMat phi_matrix(const WeightConfig& cfg, const std::vector<Label>& labels, int64_t N);

// Gram matrix of the twisted Euler pairing <[P],[P]>' in projective bases;
// the row index runs over the reflected labels.
GMat pairing_gram(const WeightConfig& cfg, const std::vector<Label>& labels, int64_t N);

// <[P_{i(-l_i)}], [s_{C, i l_j}]>' contracted from Phi and the Gram; true
// iff it is the identity to order N.
bool dual_basis_check(const WeightConfig& cfg, const std::vector<Label>& labels, int64_t N);

// drop all terms of order > N (order taken in the entry's own offset)
GroupRingElement truncate_entry(const WeightConfig& cfg, const GroupRingElement& g,
                                int64_t off, int64_t N);
bool series_equal_to_order(const SeriesContext& sc, const GroupRingElement& a,
                           const GroupRingElement& b, int64_t off, int64_t N);

struct RationalSeries {
  GroupRingElement num;
  // denominator factors (1 - u^{v})^k
  std::vector<std::pair<Label, int>> den;
};

// Exact rational generating functions for Psi over the given labels, via
// vertex tangent cones and half-open triangulations; mandatory for m <= 3.
std::vector<std::vector<RationalSeries>> exact_rational_psi(const WeightConfig& cfg,
                                                            const std::vector<Label>& labels);

GroupRingElement expand_to_order(const WeightConfig& cfg, const RationalSeries& rs,
                                 const Label& from, const Label& to, int64_t N);

struct SpecializationReport {
  bool pole = false;
  Label pole_factor;      // primitive ray whose factor vanishes
  Cplx f_value;           // F(h)
  bool invertible = false;
  Cplx det_psi;
};

// Evaluate the exact rational Psi at h = exp(-2 pi i alpha) for rational
// alpha; poles are detected exactly on the denominator factors.
SpecializationReport specialization_invertibility(const WeightConfig& cfg,
                                                  const std::vector<Label>& labels,
                                                  const VecQ& alpha);

}  // namespace gkz
