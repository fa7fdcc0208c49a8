#pragma once

#include "gkz/ksdata.hpp"
#include "gkz/ktheory.hpp"

namespace gkz {

// Decomposition [P_chi] = monomial * [P_{i(B chi)}] for chi in Z^d; the
// monomial is u^{-P chi}, with the exponent sign being the single global
// orientation constant of the build.
std::pair<Label, GroupRingElement> normalize_label(const WeightConfig& cfg, const Label& chi);

// q_j = u^{row j of K}; specializing u at exp(-2 pi i alpha) gives
// exp(-2 pi i gamma_j) with gamma = K alpha.
std::vector<GroupRingElement> q_monomials(const WeightConfig& cfg);

// Alternating Koszul class sum_{S subset J_lambda} (-1)^{|S|} [P_{chi - sum_S e_j}]
// with J_lambda = { j : <lambda, b_j> < 0 }, each term normalized into the
// face basis.  Throws LabelOutsideBasis when a normalized label escapes.
std::map<Label, GroupRingElement> koszul_class(const WeightConfig& cfg, const Label& lambda,
                                               const Label& chi, const std::vector<Label>& face_basis);

// Which side the representation lives on: the analytic side uses bases
// L_C with labels moving by +b_j, the K-theory side uses L_{-C} with labels
// moving through the e_j Koszul shifts.
enum class RepSide { Analytic, KTheory };

// label set of the module attached to a face: L_C or L_{-C}
std::vector<Label> rep_basis(const WeightConfig& cfg, const FaceComplex& fc, size_t face, RepSide side);

GMat wall_crossing_matrix(const WeightConfig& cfg, const FaceComplex& fc,
                          size_t c1, size_t c2, RepSide side);
CMat wall_crossing_matrix_at(const WeightConfig& cfg, const FaceComplex& fc,
                             size_t c1, size_t c2, RepSide side, const std::vector<Cplx>& alpha);

// translation by mu: face -> face + mu, labels shifted, coefficients from
// the normal form (always 1 on pure section lifts)
GMat translation_matrix(const WeightConfig& cfg, const FaceComplex& fc,
                        const Label& mu, size_t face, RepSide side);

struct MonodromyRep {
  RepSide side;
  GroupoidRepT<GroupRingElement> rep;
  bool resonance_warning = false;
};

MonodromyRep build_monodromy_rep(const WeightConfig& cfg, const FaceComplex& fc, RepSide side);

// Full equivariant KS datum over Z[X(H)]: delta = label inclusion, gamma by
// Koszul classes on chamber-facet pairs and by the pairing adjoint with
// Phi/Psi truncated at order N elsewhere; the two routes are cross-checked
// where both apply.
EquivKSDatum<GroupRingElement> build_ks_datum(const WeightConfig& cfg, const FaceComplex& fc,
                                              int64_t N);

// determinant is +- a monomial times a product of F-factors
bool unit_in_F_localization(const WeightConfig& cfg, const GroupRingElement& g);
std::function<bool(const GMat&)> groupring_invertible(const WeightConfig& cfg);
std::function<bool(const CMat&)> complex_invertible(double tol = 1e-9);

}  // namespace gkz
