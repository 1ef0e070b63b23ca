#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "simpdeg/simplex.hpp"

namespace simpdeg {

struct Triplet {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Integer sparse matrix in compressed-column form, with the simplex bases
/// labelling its rows and columns.
///
/// Stored entries are always nonzero and row indices are sorted within each
/// column, so two matrices with equal entries compare equal.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t nrows, std::size_t ncols);

  /// Duplicate coordinates are summed; zero results are dropped.
  static SparseIntMatrix from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> entries);
  static SparseIntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return nrows_; }
  std::size_t cols() const noexcept { return ncols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  std::int64_t at(std::size_t row, std::size_t col) const;

  /// Row indices / values of the nonzeros in column c.
  std::span<const std::size_t> col_rows(std::size_t c) const;
  std::span<const std::int64_t> col_values(std::size_t c) const;

  SparseIntMatrix transpose() const;
  /// Entrywise absolute value.
  SparseIntMatrix abs() const;
  bool symmetric() const;

  /// Column-major triplets, rows ascending within a column.
  std::vector<Triplet> triplets() const;

  const std::vector<Simplex>& row_basis() const noexcept { return row_basis_; }
  const std::vector<Simplex>& col_basis() const noexcept { return col_basis_; }
  void set_bases(std::vector<Simplex> rows, std::vector<Simplex> cols);

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  /// Compares shape and entries; bases are not compared.
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b);

  /// Dense row-major copy, for small matrices and tests.
  std::vector<std::vector<std::int64_t>> to_dense() const;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<std::size_t> col_ptr_{0};
  std::vector<std::size_t> row_idx_;
  std::vector<std::int64_t> values_;
  std::vector<Simplex> row_basis_;
  std::vector<Simplex> col_basis_;
};

/// Writes the coordinate-triplet text format:
///
///     %%simpdeg-matrix coordinate integer
///     %label <label>
///     %rows <n>
///     %row <i> <v0> <v1> ...        (one line per row basis simplex)
///     %cols <m>
///     %col <j> <v0> <v1> ...
///     <nrows> <ncols> <nnz>
///     <row> <col> <value>           (0-based, column-major)
///
/// Output is LF-terminated and byte-deterministic for a given matrix.
void write_triplets(std::ostream& os, const SparseIntMatrix& m, const std::string& label);

/// Reads the format produced by write_triplets. Throws FormatError on malformed input.
SparseIntMatrix read_triplets(std::istream& is, std::string* label = nullptr);

}  // namespace simpdeg
