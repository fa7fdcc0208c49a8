#include "gkz/groupring.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace gkz {

GroupRingElement GroupRingElement::one(size_t nvars) {
  GroupRingElement e(nvars);
  e.terms_[Label(nvars, 0)] = 1;
  return e;
}

GroupRingElement GroupRingElement::monomial(const Label& exp, Int coeff) {
  GroupRingElement e(exp.size());
  if (coeff != 0) e.terms_[exp] = coeff;
  return e;
}

GroupRingElement GroupRingElement::constant(size_t nvars, Int c) {
  GroupRingElement e(nvars);
  if (c != 0) e.terms_[Label(nvars, 0)] = c;
  return e;
}

void GroupRingElement::add_term(const Label& exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
  return r;
}

GroupRingElement GroupRingElement::tau() const {
  GroupRingElement r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[neg(e)] = c;
  return r;
}

Cplx GroupRingElement::eval(const std::vector<Cplx>& h) const {
  Cplx s = 0;
  for (const auto& [e, c] : terms_) {
    Cplx t = c.get_d();
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      t *= std::pow(h[i], static_cast<double>(e[i]));
    }
    s += t;
  }
  return s;
}

Cplx GroupRingElement::eval_alpha(const std::vector<Cplx>& alpha) const {
  constexpr double two_pi = 6.283185307179586476925286766559;
  Cplx s = 0;
  for (const auto& [e, c] : terms_) {
    Cplx dotea = 0;
    for (size_t i = 0; i < nvars_; ++i) dotea += static_cast<double>(e[i]) * alpha[i];
    s += c.get_d() * std::exp(Cplx(0, -two_pi) * dotea);
  }
  return s;
}

bool GroupRingElement::is_monomial_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

Int GroupRingElement::constant_coeff() const {
  auto it = terms_.find(Label(nvars_, 0));
  return it == terms_.end() ? Int(0) : it->second;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    bool pure = gkz::is_zero(e);
    if (a != 1 || pure) os << a.get_str();
    if (!pure) {
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "u" << (i + 1);
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    first = false;
  }
  return os.str();
}

std::optional<GroupRingElement> laurent_div(const GroupRingElement& f, const GroupRingElement& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return GroupRingElement::zero(f.nvars());
  GroupRingElement rem = f;
  GroupRingElement q(f.nvars());
  // lex-largest term of g; when g | f the division by the leading term
  // succeeds at every step
  const auto glead = *g.terms().rbegin();
  size_t guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 200000) return std::nullopt;
    const auto rlead = *rem.terms().rbegin();
    if (rlead.second % glead.second != 0) return std::nullopt;
    Label shift = sub(rlead.first, glead.first);
    Int c = rlead.second / glead.second;
    GroupRingElement mono = GroupRingElement::monomial(shift, c);
    q += mono;
    rem = rem - mono * g;
  }
  return q;
}

GroupRingElement det(const std::vector<std::vector<GroupRingElement>>& m) {
  size_t n = m.size();
  if (n == 0) return GroupRingElement::one(0);
  size_t nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  std::vector<size_t> cols(n);
  for (size_t j = 0; j < n; ++j) cols[j] = j;
  std::function<GroupRingElement(std::vector<size_t>, size_t)> rec =
      [&](std::vector<size_t> cs, size_t row) -> GroupRingElement {
    if (cs.size() == 1) return m[row][cs[0]];
    GroupRingElement acc(nv);
    for (size_t k = 0; k < cs.size(); ++k) {
      if (m[row][cs[k]].is_zero()) continue;
      std::vector<size_t> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      GroupRingElement sub = m[row][cs[k]] * rec(rest, row + 1);
      if (k % 2) acc = acc - sub;
      else acc += sub;
    }
    return acc;
  };
  return rec(cols, 0);
}

}  // namespace gkz
