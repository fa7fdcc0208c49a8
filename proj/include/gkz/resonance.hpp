#pragma once

#include "gkz/exactlat.hpp"
#include "gkz/groupring.hpp"

namespace gkz {

// Double description of the cone spanned by the columns of A.
struct ConeDescription {
  size_t dim = 0;
  std::vector<Label> rays;           // primitive generators
  std::vector<Label> facet_normals;  // primitive inward normals
};

ConeDescription cone_of_A(const WeightConfig& cfg);

// Primitive generators of the rays of the dual cone sigma^vee, by exact
// subset enumeration.  The opposite-sign convention differs from this one
// by a global sign, which no downstream test can see.
std::vector<Label> dual_cone_rays(const WeightConfig& cfg);

struct NonResonancePolicy {
  double tol = 1e-9;
};

// A complex number counts as integral when its imaginary part vanishes and
// its real part is an integer; exact for (rational, rational i) inputs,
// within tol otherwise.
bool is_integral_complex(const Cplx& z, const NonResonancePolicy& pol = {});

bool is_nonresonant(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                    const NonResonancePolicy& pol = {});
// Independent oracle: facet normals of sigma instead of rays of sigma^vee.
bool is_nonresonant_direct(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                           const NonResonancePolicy& pol = {});
bool is_totally_nonresonant(const WeightConfig& cfg, const std::vector<Cplx>& alpha,
                            const NonResonancePolicy& pol = {});

// exact versions for rational alpha
bool is_nonresonant_rat(const WeightConfig& cfg, const VecQ& alpha);
bool is_totally_nonresonant_rat(const WeightConfig& cfg, const VecQ& alpha);

// Re(alpha) in sum_i R_{<0} a_i, decided by exact feasibility.
bool re_in_negative_cone(const WeightConfig& cfg, const VecQ& re_alpha);

// Normalized volume of conv(a_1..a_d) inside <h_cov, .> = 1.
Int normalized_volume(const WeightConfig& cfg);

// F = prod_j (1 - u^{m_j}) over the dual cone ray generators.
GroupRingElement F_element(const WeightConfig& cfg);

}  // namespace gkz
