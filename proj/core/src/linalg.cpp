#include "openchi/linalg.hpp"

#include "openchi/error.hpp"

namespace openchi {

int rref(RatMat& m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(m[r][col]) != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rat inv = m[rank][col];
    for (int c = col; c < cols; ++c) m[rank][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      Rat factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

int rank_of(RatMat m) { return rref(m); }

RatMat nullspace_basis(const RatMat& m, int dim) {
  RatMat work = m;
  for (auto& row : work)
    require(static_cast<int>(row.size()) == dim, Ec::DimensionMismatch, "nullspace row width");
  int rank = rref(work);
  // locate pivot columns
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(dim, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < dim; ++c)
      if (sgn(work[r][c]) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }
  RatMat basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(dim, Rat(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -work[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
  if (a.empty()) return RatVec{};
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  RatMat aug(rows, RatVec(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug[r][c] = a[r][c];
    aug[r][cols] = b[r];
  }
  int rank = rref(aug);
  RatVec x(cols, Rat(0));
  for (int r = 0; r < rank; ++r) {
    int lead = -1;
    for (int c = 0; c <= cols; ++c)
      if (sgn(aug[r][c]) != 0) { lead = c; break; }
    if (lead == cols) return std::nullopt;  // 0 = nonzero
    x[lead] = aug[r][cols];
  }
  return x;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t r = 0; r < m.size(); ++r) {
    require(m[r].size() == v.size(), Ec::DimensionMismatch, "mat_apply width");
    for (size_t c = 0; c < v.size(); ++c)
      if (sgn(m[r][c]) != 0 && sgn(v[c]) != 0) out[r] += m[r][c] * v[c];
  }
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RatMat out(n, RatVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    require(a[i].size() == k, Ec::DimensionMismatch, "mat_mul inner");
    for (size_t j = 0; j < k; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      for (size_t c = 0; c < m; ++c)
        if (sgn(b[j][c]) != 0) out[i][c] += a[i][j] * b[j][c];
    }
  }
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  require(a.size() == b.size(), Ec::DimensionMismatch, "dot width");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RatVec primitive_direction(RatVec v) {
  mpz_class lcm_den(1);
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class gcd_num(0);
  for (auto& x : v) {
    x *= Rat(lcm_den);
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (gcd_num == 0) return v;  // zero vector
  for (auto& x : v) {
    x /= Rat(gcd_num);
    x.canonicalize();
  }
  return v;
}

}  // namespace openchi
