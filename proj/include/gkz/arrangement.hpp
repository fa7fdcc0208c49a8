#pragma once

#include <map>
#include <set>

#include "gkz/exactlat.hpp"

namespace gkz {

// One facet-supporting halfspace of the zonotope: <normal, x> <= offset on
// the body, equality on the facet.  Normals are primitive and both
// orientations are listed.
struct ZonotopeFacet {
  VecI normal;
  Rat offset;
};

struct Zonotope {
  size_t n = 0;
  std::vector<ZonotopeFacet> facets;
  VecQ box_halfwidth;   // support values on the coordinate directions
  Rat diam_bound;       // rational upper bound for the diameter

  bool contains(const VecQ& p) const;
  bool on_facet(const VecQ& p, size_t facet) const;
};

Zonotope zonotope(const WeightConfig& cfg);

struct Hyperplane {
  Label normal;  // primitive, lex-positive
  Rat offset;    // <normal, x> = offset
};

struct Face {
  int dim = 0;
  std::vector<int8_t> sign;   // relative to the complex's hyperplane list
  VecQ rep;                   // rational point in the relative interior
  std::vector<VecQ> verts;    // vertices of the closure, sorted
  size_t cls = 0;             // translation class id
  Label shift;                // this face = (class representative) + shift
};

class FaceComplex {
 public:
  size_t n = 0;
  Rat fatten;
  std::vector<Hyperplane> hyps;
  std::vector<Face> faces;            // sorted by (dim, sign)
  std::vector<size_t> class_reps;     // face index per class, class_reps[f.cls]
  std::map<std::vector<int8_t>, size_t> sign_index;
  std::vector<size_t> chamber_cache;
  size_t num_classes() const { return class_reps.size(); }

  int sign_of(const VecQ& p, size_t h) const;
  std::vector<int8_t> sign_vector(const VecQ& p) const;
  // closure order: a <= b
  bool leq(size_t a, size_t b) const;
  int find_face(const VecQ& p) const;  // -1 when outside the covered region
  int find_by_sign(const std::vector<int8_t>& s) const;
  std::vector<size_t> chambers() const;
  std::vector<size_t> chambers_above(size_t f) const;
  // walls together with their two incident chambers
  struct Wall { size_t wall, lo, hi; };
  std::vector<Wall> walls() const;
  // translate of a face inside the complex, -1 when it falls outside
  int translate_face(size_t f, const Label& mu) const;
};

FaceComplex face_complex(const WeightConfig& cfg, const Rat& fatten);
FaceComplex face_complex(const WeightConfig& cfg);  // default fatten = diam_bound + 1

// L_C = (nu + Delta) cap Z^n for nu in the face; recomputed at a second
// interior point as a consistency check.
std::vector<Label> lattice_points_LC(const WeightConfig& cfg, const FaceComplex& fc, size_t face);
std::vector<Label> lattice_points_at(const WeightConfig& cfg, const VecQ& nu);

// J = { i : L0(b_i) > 0 } for L the affine equation of the wall's span,
// normalized strictly positive on the chamber.
std::vector<size_t> wall_set_J(const WeightConfig& cfg, const FaceComplex& fc,
                               size_t wall, size_t chamber);

struct CollinearTriple {
  size_t c1, c2, c3;
};

// All ordered chamber triples, with representatives within `radius` of the
// fundamental box, that admit a common lower face and an exact segment
// witness c2 in [c1, c3].  anchor_core restricts the common lower face to
// ones meeting the unit box, which is enough for relation checking by
// translation equivariance.
std::vector<CollinearTriple> collinear_triples(const WeightConfig& cfg, const FaceComplex& fc,
                                               const Rat& radius, bool anchor_core = false);

bool is_collinear(const FaceComplex& fc, size_t c1, size_t c2, size_t c3);

struct ZetaData {
  // multiset of (|n_j|, b_j) with b_j = n_j * (primitive generator)
  std::vector<std::pair<Int, Label>> weights;
  VecQ exp_value;  // coordinates of e^{2 pi i zeta}, exact rationals
};

ZetaData compute_zeta(const WeightConfig& cfg);

bool is_generic(const WeightConfig& cfg, const VecQ& rho);

// L_C = union of L_{C0} over chambers C0 > C, for non-chamber faces.
bool union_check(const WeightConfig& cfg, const FaceComplex& fc, size_t face);

}  // namespace gkz
