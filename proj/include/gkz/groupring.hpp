#pragma once

#include <map>
#include <optional>

#include "gkz/numtypes.hpp"

namespace gkz {

// Element of Z[X(H)]: finitely supported map from exponent vectors in Z^m
// to nonzero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(size_t nvars) : nvars_(nvars) {}
  static GroupRingElement zero(size_t nvars) { return GroupRingElement(nvars); }
  static GroupRingElement one(size_t nvars);
  static GroupRingElement monomial(const Label& exp, Int coeff = Int(1));
  static GroupRingElement constant(size_t nvars, Int c);

  size_t nvars() const { return nvars_; }
  const std::map<Label, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const GroupRingElement& o) const { return terms_ != o.terms_; }

  void add_term(const Label& exp, const Int& c);

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);

  // exponent negation u^e -> u^{-e} (the tau twist)
  GroupRingElement tau() const;

  // evaluation at a point of the torus (C^*)^m
  Cplx eval(const std::vector<Cplx>& h) const;
  // evaluation at h = exp(-2 pi i alpha), i.e. u^e -> e^{-2 pi i <e,alpha>}
  Cplx eval_alpha(const std::vector<Cplx>& alpha) const;

  // +-(single monomial)?
  bool is_monomial_unit() const;

  Int constant_coeff() const;
  std::string str() const;

 private:
  size_t nvars_ = 0;
  std::map<Label, Int> terms_;
};

// Exact divisibility test/division f = q*g in the Laurent ring; nullopt when
// g does not divide f.
std::optional<GroupRingElement> laurent_div(const GroupRingElement& f, const GroupRingElement& g);

GroupRingElement det(const std::vector<std::vector<GroupRingElement>>& m);

}  // namespace gkz
