#include "simpdeg/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "simpdeg/error.hpp"

namespace simpdeg {

SparseIntMatrix::SparseIntMatrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows), ncols_(ncols), col_ptr_(ncols + 1, 0) {}

SparseIntMatrix SparseIntMatrix::from_triplets(std::size_t nrows, std::size_t ncols, std::vector<Triplet> entries) {
  for (const auto& t : entries)
    if (t.row >= nrows || t.col >= ncols) throw DimensionError("triplet outside matrix shape");
  std::sort(entries.begin(), entries.end(),
            [](const Triplet& a, const Triplet& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
  SparseIntMatrix m(nrows, ncols);
  std::size_t i = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    while (i < entries.size() && entries[i].col == c) {
      const std::size_t r = entries[i].row;
      std::int64_t sum = 0;
      while (i < entries.size() && entries[i].col == c && entries[i].row == r) sum += entries[i++].value;
      if (sum != 0) {
        m.row_idx_.push_back(r);
        m.values_.push_back(sum);
      }
    }
    m.col_ptr_[c + 1] = m.row_idx_.size();
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.row_idx_.push_back(i);
    m.values_.push_back(1);
    m.col_ptr_[i + 1] = i + 1;
  }
  return m;
}

std::int64_t SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= nrows_ || col >= ncols_) throw DimensionError("matrix index out of range");
  auto rows = col_rows(col);
  auto it = std::lower_bound(rows.begin(), rows.end(), row);
  if (it == rows.end() || *it != row) return 0;
  return col_values(col)[static_cast<std::size_t>(it - rows.begin())];
}

std::span<const std::size_t> SparseIntMatrix::col_rows(std::size_t c) const {
  return std::span<const std::size_t>(row_idx_).subspan(col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]);
}

std::span<const std::int64_t> SparseIntMatrix::col_values(std::size_t c) const {
  return std::span<const std::int64_t>(values_).subspan(col_ptr_[c], col_ptr_[c + 1] - col_ptr_[c]);
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(ncols_, nrows_);
  std::vector<std::size_t> counts(nrows_ + 1, 0);
  for (std::size_t r : row_idx_) ++counts[r + 1];
  for (std::size_t r = 0; r < nrows_; ++r) counts[r + 1] += counts[r];
  t.col_ptr_ = counts;
  t.row_idx_.resize(row_idx_.size());
  t.values_.resize(values_.size());
  // Scanning columns in order keeps rows sorted inside each transposed column.
  for (std::size_t c = 0; c < ncols_; ++c)
    for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) {
      const std::size_t dst = counts[row_idx_[k]]++;
      t.row_idx_[dst] = c;
      t.values_[dst] = values_[k];
    }
  t.row_basis_ = col_basis_;
  t.col_basis_ = row_basis_;
  return t;
}

SparseIntMatrix SparseIntMatrix::abs() const {
  SparseIntMatrix m = *this;
  for (auto& v : m.values_) v = v < 0 ? -v : v;
  return m;
}

bool SparseIntMatrix::symmetric() const { return nrows_ == ncols_ && *this == transpose(); }

std::vector<Triplet> SparseIntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(values_.size());
  for (std::size_t c = 0; c < ncols_; ++c)
    for (std::size_t k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) out.push_back({row_idx_[k], c, values_[k]});
  return out;
}

void SparseIntMatrix::set_bases(std::vector<Simplex> rows, std::vector<Simplex> cols) {
  if (rows.size() != nrows_ || cols.size() != ncols_) throw DimensionError("basis size does not match matrix shape");
  row_basis_ = std::move(rows);
  col_basis_ = std::move(cols);
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.ncols_ != b.nrows_) throw DimensionError("matrix product shape mismatch");
  SparseIntMatrix m(a.nrows_, b.ncols_);
  // Gustavson: accumulate each output column in a dense scratch vector.
  std::vector<std::int64_t> acc(a.nrows_, 0);
  std::vector<char> seen(a.nrows_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.ncols_; ++c) {
    touched.clear();
    for (std::size_t kb = b.col_ptr_[c]; kb < b.col_ptr_[c + 1]; ++kb) {
      const std::size_t mid = b.row_idx_[kb];
      const std::int64_t bv = b.values_[kb];
      for (std::size_t ka = a.col_ptr_[mid]; ka < a.col_ptr_[mid + 1]; ++ka) {
        const std::size_t r = a.row_idx_[ka];
        if (!seen[r]) {
          seen[r] = 1;
          touched.push_back(r);
        }
        acc[r] += a.values_[ka] * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t r : touched) {
      if (acc[r] != 0) {
        m.row_idx_.push_back(r);
        m.values_.push_back(acc[r]);
      }
      acc[r] = 0;
      seen[r] = 0;
    }
    m.col_ptr_[c + 1] = m.row_idx_.size();
  }
  if (!a.row_basis_.empty() || !b.col_basis_.empty()) {
    m.row_basis_ = a.row_basis_;
    m.col_basis_ = b.col_basis_;
  }
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_) throw DimensionError("matrix sum shape mismatch");
  std::vector<Triplet> t = a.triplets();
  auto tb = b.triplets();
  t.insert(t.end(), tb.begin(), tb.end());
  SparseIntMatrix m = SparseIntMatrix::from_triplets(a.nrows_, a.ncols_, std::move(t));
  m.row_basis_ = a.row_basis_.empty() ? b.row_basis_ : a.row_basis_;
  m.col_basis_ = a.col_basis_.empty() ? b.col_basis_ : a.col_basis_;
  return m;
}

bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.col_ptr_ == b.col_ptr_ && a.row_idx_ == b.row_idx_ &&
         a.values_ == b.values_;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(nrows_, std::vector<std::int64_t>(ncols_, 0));
  for (const auto& t : triplets()) d[t.row][t.col] = t.value;
  return d;
}

namespace {

void write_basis(std::ostream& os, const char* tag, const std::vector<Simplex>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    os << tag << ' ' << i;
    for (VertexId v : basis[i]) os << ' ' << v;
    os << '\n';
  }
}

}  // namespace

void write_triplets(std::ostream& os, const SparseIntMatrix& m, const std::string& label) {
  os << "%%simpdeg-matrix coordinate integer\n";
  os << "%label " << label << '\n';
  os << "%rows " << m.row_basis().size() << '\n';
  write_basis(os, "%row", m.row_basis());
  os << "%cols " << m.col_basis().size() << '\n';
  write_basis(os, "%col", m.col_basis());
  os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (const auto& t : m.triplets()) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

SparseIntMatrix read_triplets(std::istream& is, std::string* label) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Simplex> rows, cols;
  auto fail = [&](const std::string& what) { throw FormatError("<matrix>", lineno, what); };

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] != '%') break;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "%label" && label) {
      std::getline(ls >> std::ws, *label);
    } else if (tag == "%row" || tag == "%col") {
      std::size_t idx;
      if (!(ls >> idx)) fail("bad basis line");
      std::vector<VertexId> v;
      VertexId x;
      while (ls >> x) v.push_back(x);
      auto& target = tag == "%row" ? rows : cols;
      if (idx != target.size()) fail("basis lines out of order");
      target.push_back(Simplex(std::move(v)));
    }
  }
  std::istringstream header(line);
  std::size_t nr, nc, nnz;
  if (!(header >> nr >> nc >> nnz)) fail("missing shape line");
  std::vector<Triplet> entries;
  entries.reserve(nnz);
  while (entries.size() < nnz && std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    Triplet t{};
    if (!(ls >> t.row >> t.col >> t.value)) fail("bad triplet");
    if (t.row >= nr || t.col >= nc) fail("triplet outside the declared shape");
    entries.push_back(t);
  }
  if (entries.size() != nnz) fail("expected " + std::to_string(nnz) + " triplets");
  auto m = SparseIntMatrix::from_triplets(nr, nc, std::move(entries));
  if (!rows.empty() || !cols.empty()) m.set_bases(std::move(rows), std::move(cols));
  return m;
}

}  // namespace simpdeg
