#pragma once

#include <optional>

#include "gkz/numtypes.hpp"

namespace gkz {

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  IntMatrix transpose() const;
  IntMatrix mul(const IntMatrix& o) const;
  VecI mul(const VecI& v) const;       // M * v
  VecI mul_left(const VecI& v) const;  // v^T * M
  IntMatrix row_slice(size_t r0, size_t r1) const;
  bool is_zero() const;
  std::string str() const;

  std::vector<long> row_i64(size_t i) const;
  Label col_label(size_t j) const;

 private:
  size_t rows_, cols_;
  std::vector<Int> e_;
};

struct HermiteResult {
  IntMatrix h;  // row-style HNF of the input
  IntMatrix u;  // unimodular, u * m == h
  size_t rank = 0;
};

struct SmithResult {
  IntMatrix s;  // diagonal d1 | d2 | ...
  IntMatrix u, v;  // unimodular, u * m * v == s
  size_t rank = 0;
};

HermiteResult hermite_form(const IntMatrix& m);
SmithResult smith_form(const IntMatrix& m);

// Basis of the saturated lattice {v in Z^cols : m v = 0}, returned as rows
// in HNF.  This is the canonical form used for Gale duals.
IntMatrix kernel_lattice(const IntMatrix& m);

// True iff the rows of m generate the full lattice Z^cols restricted to
// their span saturated, i.e. the Smith invariants are all 1.
bool has_unit_invariants(const IntMatrix& m);

// One integer solution x of m x = b, if any.
std::optional<VecI> solve_integer(const IntMatrix& m, const VecI& b);

// Solve m x = b over the rationals; nullopt when inconsistent.
std::optional<VecQ> solve_rational(const IntMatrix& m, const VecQ& b);

// Rank over Q.
size_t rank_rational(const IntMatrix& m);

Int det(const IntMatrix& m);

// Primitive integer vector spanning the rational kernel of a matrix of
// rank cols-1; nullopt when the kernel is not one dimensional.
std::optional<VecI> primitive_kernel_vector(const IntMatrix& m);

VecI primitive(const VecI& v);
Int content(const VecI& v);

}  // namespace gkz
