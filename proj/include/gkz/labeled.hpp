#pragma once

#include <algorithm>

#include "gkz/groupring.hpp"

namespace gkz {

// Ring traits used by the labeled matrix and the KS-data checks.  Exact
// rings compare with ==; the complex instantiation uses a tolerance.
template <class R>
struct RingOps;

template <>
struct RingOps<GroupRingElement> {
  size_t nvars;
  GroupRingElement zero() const { return GroupRingElement::zero(nvars); }
  GroupRingElement one() const { return GroupRingElement::one(nvars); }
  bool eq(const GroupRingElement& a, const GroupRingElement& b) const { return a == b; }
  bool is_zero(const GroupRingElement& a) const { return a.is_zero(); }
};

template <>
struct RingOps<Rat> {
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  bool eq(const Rat& a, const Rat& b) const { return a == b; }
  bool is_zero(const Rat& a) const { return a == 0; }
};

template <>
struct RingOps<Cplx> {
  double tol = 1e-9;
  Cplx zero() const { return Cplx(0, 0); }
  Cplx one() const { return Cplx(1, 0); }
  bool eq(const Cplx& a, const Cplx& b) const { return std::abs(a - b) <= tol; }
  bool is_zero(const Cplx& a) const { return std::abs(a) <= tol; }
};

// Matrix indexed by basis labels rather than positions.  Compositions check
// label compatibility; silent basis misalignment is the main failure mode
// these guard against.
template <class R>
class LabeledMatrix {
 public:
  LabeledMatrix() = default;
  LabeledMatrix(std::vector<Label> row_labels, std::vector<Label> col_labels, RingOps<R> ops)
      : rows_(std::move(row_labels)), cols_(std::move(col_labels)), ops_(ops),
        e_(rows_.size() * cols_.size(), ops_.zero()) {
    build_index();
  }

  static LabeledMatrix identity(const std::vector<Label>& labels, RingOps<R> ops) {
    LabeledMatrix m(labels, labels, ops);
    for (size_t i = 0; i < labels.size(); ++i) m.e_[i * labels.size() + i] = ops.one();
    return m;
  }

  const std::vector<Label>& row_labels() const { return rows_; }
  const std::vector<Label>& col_labels() const { return cols_; }
  const RingOps<R>& ops() const { return ops_; }
  size_t nrows() const { return rows_.size(); }
  size_t ncols() const { return cols_.size(); }

  R& at(size_t i, size_t j) { return e_[i * cols_.size() + j]; }
  const R& at(size_t i, size_t j) const { return e_[i * cols_.size() + j]; }

  bool has_row(const Label& l) const { return row_index_.count(l) > 0; }
  bool has_col(const Label& l) const { return col_index_.count(l) > 0; }
  size_t row_of(const Label& l) const {
    auto it = row_index_.find(l);
    if (it == row_index_.end()) throw LabelOutsideBasis("row label " + label_str(l));
    return it->second;
  }
  size_t col_of(const Label& l) const {
    auto it = col_index_.find(l);
    if (it == col_index_.end()) throw LabelOutsideBasis("column label " + label_str(l));
    return it->second;
  }
  R& at(const Label& r, const Label& c) { return at(row_of(r), col_of(c)); }
  const R& at(const Label& r, const Label& c) const { return at(row_of(r), col_of(c)); }

  // matrix of (this o other): other maps into the basis this maps from
  LabeledMatrix compose(const LabeledMatrix& other) const {
    if (cols_ != other.rows_) throw ShapeMismatch("composition label mismatch");
    LabeledMatrix r(rows_, other.cols_, ops_);
    for (size_t i = 0; i < nrows(); ++i)
      for (size_t k = 0; k < ncols(); ++k) {
        if (ops_.is_zero(at(i, k))) continue;
        for (size_t j = 0; j < other.ncols(); ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * other.at(k, j);
      }
    return r;
  }

  LabeledMatrix operator-(const LabeledMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("difference label mismatch");
    LabeledMatrix r(rows_, cols_, ops_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }

  bool equals(const LabeledMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!ops_.eq(e_[i], o.e_[i])) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < nrows(); ++i)
      for (size_t j = 0; j < ncols(); ++j) {
        const R want = i == j ? ops_.one() : ops_.zero();
        if (!ops_.eq(at(i, j), want)) return false;
      }
    return true;
  }

  LabeledMatrix transpose() const {
    LabeledMatrix r(cols_, rows_, ops_);
    for (size_t i = 0; i < nrows(); ++i)
      for (size_t j = 0; j < ncols(); ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // relabel rows/columns through a map applied to every label; the result
  // keeps its labels sorted so comparisons stay order-independent
  template <class F>
  LabeledMatrix relabel(F&& f) const {
    std::vector<Label> nr(rows_.size()), nc(cols_.size());
    for (size_t i = 0; i < rows_.size(); ++i) nr[i] = f(rows_[i]);
    for (size_t j = 0; j < cols_.size(); ++j) nc[j] = f(cols_[j]);
    std::sort(nr.begin(), nr.end());
    std::sort(nc.begin(), nc.end());
    LabeledMatrix r(std::move(nr), std::move(nc), ops_);
    for (size_t i = 0; i < nrows(); ++i)
      for (size_t j = 0; j < ncols(); ++j) r.at(f(rows_[i]), f(cols_[j])) = at(i, j);
    return r;
  }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < nrows(); ++i) {
      s += label_str(rows_[i]) + ": ";
      for (size_t j = 0; j < ncols(); ++j) {
        if (j) s += ", ";
        if constexpr (std::is_same_v<R, GroupRingElement>) s += at(i, j).str();
        else if constexpr (std::is_same_v<R, Rat>) s += at(i, j).get_str();
        else s += std::to_string(at(i, j).real()) + "+" + std::to_string(at(i, j).imag()) + "i";
      }
      s += "\n";
    }
    return s;
  }

 private:
  void build_index() {
    for (size_t i = 0; i < rows_.size(); ++i) row_index_[rows_[i]] = i;
    for (size_t j = 0; j < cols_.size(); ++j) col_index_[cols_[j]] = j;
    if (row_index_.size() != rows_.size() || col_index_.size() != cols_.size())
      throw ShapeMismatch("duplicate labels");
  }

  std::vector<Label> rows_, cols_;
  RingOps<R> ops_;
  std::vector<R> e_;
  std::map<Label, size_t> row_index_, col_index_;
};

using GMat = LabeledMatrix<GroupRingElement>;
using CMat = LabeledMatrix<Cplx>;

// specialize all entries of a symbolic matrix at a torus point
CMat specialize(const GMat& m, const std::vector<Cplx>& h);
// specialize at h = exp(-2 pi i alpha)
CMat specialize_alpha(const GMat& m, const std::vector<Cplx>& alpha);

GroupRingElement det(const GMat& m);
Cplx det(const CMat& m);

}  // namespace gkz
