#pragma once

#include <functional>

#include "gkz/arrangement.hpp"
#include "gkz/labeled.hpp"

namespace gkz {

// Diagram (E_C, gamma, delta) over the face poset: gamma_{C'C}: E_{C'} -> E_C
// and delta_{CC'}: E_C -> E_{C'} for incident pairs C' <= C, stored keyed by
// (lower, upper) face index.
template <class R>
struct KSDatum {
  const FaceComplex* fc = nullptr;
  std::vector<size_t> faces;
  std::map<size_t, std::vector<Label>> basis;
  std::map<std::pair<size_t, size_t>, LabeledMatrix<R>> gam;
  std::map<std::pair<size_t, size_t>, LabeledMatrix<R>> del;
  RingOps<R> ops;

  bool in_scope(size_t f) const { return basis.count(f) > 0; }
  const LabeledMatrix<R>& gamma(size_t lower, size_t upper) const {
    auto it = gam.find({lower, upper});
    if (it == gam.end()) throw NoCommonFace("no gamma stored for the pair");
    return it->second;
  }
  const LabeledMatrix<R>& delta(size_t lower, size_t upper) const {
    auto it = del.find({lower, upper});
    if (it == del.end()) throw NoCommonFace("no delta stored for the pair");
    return it->second;
  }
};

template <class R>
struct EquivKSDatum {
  KSDatum<R> ks;
  std::vector<Label> gens;  // translation generators, usually +-e_k
  // (face, mu) -> (target face, matrix E_face -> E_target)
  std::map<std::pair<size_t, Label>, std::pair<size_t, LabeledMatrix<R>>> trans;
};

struct AxiomViolation {
  std::string axiom;  // "m", "i", "t", "functoriality", "equivariance"
  std::vector<size_t> faces;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  size_t checked_m = 0, checked_i = 0, checked_t = 0, checked_chain = 0;
  bool pass() const { return violations.empty(); }
};

// phi_{C1 C2} through a common lower face; consistency across all stored
// choices of the lower face is asserted.
template <class R>
LabeledMatrix<R> ks_phi(const KSDatum<R>& ks, size_t c1, size_t c2) {
  const FaceComplex& fc = *ks.fc;
  std::optional<LabeledMatrix<R>> result;
  auto id_of = [&](size_t f) { return LabeledMatrix<R>::identity(ks.basis.at(f), ks.ops); };
  for (size_t f : ks.faces) {
    if (!fc.leq(f, c1) || !fc.leq(f, c2)) continue;
    bool have_gamma = f == c2 || ks.gam.count({f, c2});
    bool have_delta = f == c1 || ks.del.count({f, c1});
    if (!have_gamma || !have_delta) continue;
    LabeledMatrix<R> gam_m = f == c2 ? id_of(c2) : ks.gamma(f, c2);
    LabeledMatrix<R> del_m = f == c1 ? id_of(c1) : ks.delta(f, c1);
    LabeledMatrix<R> cand = gam_m.compose(del_m);
    if (!result) result = cand;
    else if (!result->equals(cand))
      throw ShapeMismatch("phi depends on the choice of the common face");
  }
  if (!result) throw NoCommonFace("no common lower face in scope");
  return *result;
}

template <class R>
AxiomReport check_axioms(const KSDatum<R>& ks,
                         const std::function<bool(const LabeledMatrix<R>&)>& invertible,
                         bool triples_from_class_reps = true) {
  const FaceComplex& fc = *ks.fc;
  AxiomReport rep;
  size_t n = fc.n;
  // (m): gamma_{C'C} delta_{CC'} = id
  for (const auto& [key, g] : ks.gam) {
    auto dit = ks.del.find(key);
    if (dit == ks.del.end()) continue;
    ++rep.checked_m;
    if (!g.compose(dit->second).is_identity())
      rep.violations.push_back({"m", {key.first, key.second}, "gamma delta != id"});
  }
  // gamma functoriality along chains f <= g <= h
  for (size_t f : ks.faces)
    for (size_t g : ks.faces) {
      if (f == g || !fc.leq(f, g)) continue;
      if (!ks.gam.count({f, g})) continue;
      for (size_t h : ks.faces) {
        if (g == h || !fc.leq(g, h) || !ks.gam.count({g, h}) || !ks.gam.count({f, h})) continue;
        ++rep.checked_chain;
        if (!ks.gamma(g, h).compose(ks.gamma(f, g)).equals(ks.gamma(f, h)))
          rep.violations.push_back({"functoriality", {f, g, h}, "gamma chain mismatch"});
        if (!ks.delta(f, g).compose(ks.delta(g, h)).equals(ks.delta(f, h)))
          rep.violations.push_back({"functoriality", {f, g, h}, "delta chain mismatch"});
      }
    }
  // (i): equal-dimension faces in a common affine span sharing a facet
  auto zeros_of = [&](size_t f) {
    std::vector<size_t> z;
    for (size_t h = 0; h < fc.hyps.size(); ++h)
      if (fc.faces[f].sign[h] == 0) z.push_back(h);
    return z;
  };
  for (size_t a : ks.faces)
    for (size_t b : ks.faces) {
      if (a >= b) continue;
      const Face& fa = fc.faces[a];
      const Face& fb = fc.faces[b];
      if (fa.dim != fb.dim || fa.dim == 0) continue;
      if (zeros_of(a) != zeros_of(b)) continue;  // affine spans differ
      bool share_facet = false;
      for (size_t f : ks.faces)
        if (fc.faces[f].dim == fa.dim - 1 && fc.leq(f, a) && fc.leq(f, b)) share_facet = true;
      if (!share_facet) continue;
      ++rep.checked_i;
      try {
        LabeledMatrix<R> phi = ks_phi(ks, a, b);
        if (!invertible(phi))
          rep.violations.push_back({"i", {a, b}, "phi not invertible"});
      } catch (const DomainError& e) {
        rep.violations.push_back({"i", {a, b}, e.what()});
      }
    }
  // (t): collinear face triples through class-representative common faces
  for (size_t f : ks.faces) {
    if (triples_from_class_reps && fc.class_reps[fc.faces[f].cls] != f) continue;
    std::vector<size_t> above;
    for (size_t g : ks.faces)
      if (fc.leq(f, g)) above.push_back(g);
    for (size_t c1 : above)
      for (size_t c2 : above)
        for (size_t c3 : above) {
          if (!is_collinear(fc, c1, c2, c3)) continue;
          ++rep.checked_t;
          try {
            LabeledMatrix<R> lhs = ks_phi(ks, c1, c3);
            LabeledMatrix<R> rhs = ks_phi(ks, c2, c3).compose(ks_phi(ks, c1, c2));
            if (!lhs.equals(rhs))
              rep.violations.push_back({"t", {c1, c2, c3}, "triple relation fails"});
          } catch (const DomainError& e) {
            rep.violations.push_back({"t", {c1, c2, c3}, e.what()});
          }
        }
  }
  (void)n;
  return rep;
}

namespace detail {
inline GroupRingElement ring_tau(const GroupRingElement& x) { return x.tau(); }
inline Rat ring_tau(const Rat& x) { return x; }
inline Cplx ring_tau(const Cplx& x) { return x; }
}  // namespace detail

// Dual datum: modules dualized (same labels), gamma and delta swapped and
// transposed; tau optionally negates all X(H)-exponents.
template <class R>
KSDatum<R> ks_dual(const KSDatum<R>& ks, bool tau) {
  KSDatum<R> d;
  d.fc = ks.fc;
  d.faces = ks.faces;
  d.basis = ks.basis;
  d.ops = ks.ops;
  auto twist = [&](LabeledMatrix<R> m) {
    if (!tau) return m;
    for (size_t i = 0; i < m.nrows(); ++i)
      for (size_t j = 0; j < m.ncols(); ++j) m.at(i, j) = detail::ring_tau(m.at(i, j));
    return m;
  };
  for (const auto& [key, del_m] : ks.del) d.gam.emplace(key, twist(del_m.transpose()));
  for (const auto& [key, gam_m] : ks.gam) d.del.emplace(key, twist(gam_m.transpose()));
  return d;
}

inline KSDatum<Cplx> ks_specialize(const KSDatum<GroupRingElement>& ks, const std::vector<Cplx>& h) {
  KSDatum<Cplx> out;
  out.fc = ks.fc;
  out.faces = ks.faces;
  out.basis = ks.basis;
  out.ops = RingOps<Cplx>{};
  for (const auto& [key, m] : ks.gam) out.gam.emplace(key, specialize(m, h));
  for (const auto& [key, m] : ks.del) out.del.emplace(key, specialize(m, h));
  return out;
}

template <class R>
struct GroupoidRepT {
  const FaceComplex* fc = nullptr;
  std::vector<size_t> chambers;
  std::map<std::pair<size_t, size_t>, LabeledMatrix<R>> wall;
  std::map<std::pair<size_t, Label>, std::pair<size_t, LabeledMatrix<R>>> trans;
};

template <class R>
GroupoidRepT<R> restrict_to_groupoid(const EquivKSDatum<R>& eks,
                                     const std::function<bool(const LabeledMatrix<R>&)>& invertible) {
  AxiomReport rep = check_axioms(eks.ks, invertible);
  if (!rep.pass()) throw AxiomsFailed(rep.violations.front().axiom + " violated");
  GroupoidRepT<R> out;
  out.fc = eks.ks.fc;
  const FaceComplex& fc = *eks.ks.fc;
  for (size_t f : eks.ks.faces)
    if (fc.faces[f].dim == static_cast<int>(fc.n)) out.chambers.push_back(f);
  for (const auto& w : fc.walls()) {
    if (!eks.ks.in_scope(w.lo) || !eks.ks.in_scope(w.hi) || !eks.ks.in_scope(w.wall)) continue;
    out.wall.emplace(std::make_pair(w.lo, w.hi), ks_phi(eks.ks, w.lo, w.hi));
    out.wall.emplace(std::make_pair(w.hi, w.lo), ks_phi(eks.ks, w.hi, w.lo));
  }
  for (const auto& [key, tgt] : eks.trans)
    if (fc.faces[key.first].dim == static_cast<int>(fc.n)) out.trans.emplace(key, tgt);
  return out;
}

}  // namespace gkz
