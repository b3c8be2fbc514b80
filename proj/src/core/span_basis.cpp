#include "liegen/span_basis.hpp"

#include <algorithm>

namespace liegen {

namespace {

void require_dim(const SpanBasis& b, const Matrix& m) {
  if (b.size() != m.size())
    fail(ErrorCode::dimension_mismatch, "span basis: dimension mismatch (" +
                                            std::to_string(b.size()) + " vs " +
                                            std::to_string(m.size()) + ")");
}

}  // namespace

Matrix SpanBasis::row(std::size_t k) const {
  Matrix m(n_);
  std::copy(rows_.at(k).begin(), rows_.at(k).end(), m.flat().begin());
  return m;
}

std::vector<Matrix> SpanBasis::rows() const {
  std::vector<Matrix> out;
  out.reserve(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) out.push_back(row(k));
  return out;
}

std::size_t SpanBasis::reduce(Vector& v) const {
  Rational tmp;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t pos : support_[r]) {
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), rows_[r][pos].get_mpq_t());
      v[pos] -= tmp;
    }
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) return k;
  return v.size();
}

bool SpanBasis::contains(const Matrix& m) const {
  require_dim(*this, m);
  Vector v(m.flat().begin(), m.flat().end());
  return reduce(v) == v.size();
}

bool SpanBasis::insert(const Matrix& m) {
  require_dim(*this, m);
  Vector v(m.flat().begin(), m.flat().end());
  const std::size_t pivot = reduce(v);
  if (pivot == v.size()) return false;

  const Rational lead = v[pivot];
  std::vector<std::size_t> supp;
  for (std::size_t k = pivot; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    v[k] /= lead;
    supp.push_back(k);
  }

  // Clear the new pivot column from existing rows to stay fully reduced.
  Rational tmp;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r][pivot];
    if (sgn(f) == 0) continue;
    for (std::size_t pos : supp) {
      mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), v[pos].get_mpq_t());
      rows_[r][pos] -= tmp;
    }
    auto& s = support_[r];
    s.clear();
    for (std::size_t k = 0; k < rows_[r].size(); ++k)
      if (sgn(rows_[r][k]) != 0) s.push_back(k);
  }

  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  support_.insert(support_.begin() + idx, std::move(supp));
  return true;
}

std::pair<SpanBasis, bool> span_insert(SpanBasis basis, const Matrix& m) {
  const bool grew = basis.insert(m);
  return {std::move(basis), grew};
}

}  // namespace liegen
