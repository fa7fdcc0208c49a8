#pragma once

#include <gmpxx.h>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

using VecI = std::vector<Int>;
using VecQ = std::vector<Rat>;
// Lattice points, exponent vectors, basis labels.  These stay small
// (inside zonotope translates), so machine integers suffice.
using Label = std::vector<int64_t>;

inline Rat rat_of(const Int& a) { return Rat(a); }

inline Int ifloor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Int iceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

inline int64_t to_i64(const Int& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("integer too large for label arithmetic");
  return static_cast<int64_t>(a.get_si());
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline Label add(const Label& a, const Label& b) {
  Label r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Label sub(const Label& a, const Label& b) {
  Label r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Label neg(const Label& a) {
  Label r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline int64_t dot(const Label& a, const Label& b) {
  int64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Label& a) {
  for (auto v : a) if (v != 0) return false;
  return true;
}

std::string label_str(const Label& a);

// Domain errors carry a short machine-readable code alongside the message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define GKZ_DEFINE_ERROR(NAME)                                     \
  class NAME : public DomainError {                                \
   public:                                                         \
    explicit NAME(const std::string& what) : DomainError(#NAME, what) {} \
  }

GKZ_DEFINE_ERROR(NotSaturated);
GKZ_DEFINE_ERROR(QuasiSymmetryViolation);
GKZ_DEFINE_ERROR(ZeroSumViolation);
GKZ_DEFINE_ERROR(ZeroColumn);
GKZ_DEFINE_ERROR(DegenerateArrangement);
GKZ_DEFINE_ERROR(NotAWallPair);
GKZ_DEFINE_ERROR(NotFullDimensional);
GKZ_DEFINE_ERROR(ShapeMismatch);
GKZ_DEFINE_ERROR(NoCommonFace);
GKZ_DEFINE_ERROR(AxiomsFailed);
GKZ_DEFINE_ERROR(ZeroCoordinate);
GKZ_DEFINE_ERROR(LabelOutsideBasis);
GKZ_DEFINE_ERROR(NotAdjacent);
GKZ_DEFINE_ERROR(TruncationUnstable);
GKZ_DEFINE_ERROR(TriangulationTooLarge);
GKZ_DEFINE_ERROR(PoleAtH);
GKZ_DEFINE_ERROR(OutsideConvergenceDomain);
GKZ_DEFINE_ERROR(PoleOnContour);
GKZ_DEFINE_ERROR(Infeasible);
GKZ_DEFINE_ERROR(NotGeneric);
GKZ_DEFINE_ERROR(NotTotallyNonResonant);
GKZ_DEFINE_ERROR(Diverging);
GKZ_DEFINE_ERROR(IllConditioned);
GKZ_DEFINE_ERROR(UnsupportedDimension);

#undef GKZ_DEFINE_ERROR

}  // namespace gkz
