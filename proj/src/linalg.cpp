#include "pgeo/linalg.hpp"

namespace pgeo {

std::vector<Eigen::Matrix<Rat, Eigen::Dynamic, 1>> exact_kernel(MatX a) {
  using VecX = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  // Gauss-Jordan with first-nonzero pivoting; exact over the rationals, and the
  // pivot rule makes the reduced form (hence the basis) deterministic.
  std::vector<Eigen::Index> pivot_col_of_row;
  std::vector<bool> is_pivot_col(static_cast<std::size_t>(cols), false);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pr = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (a(r, col).sign() != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    a.row(row).swap(a.row(pr));
    Rat inv_pivot = Rat(1) / a(row, col);
    a.row(row) *= inv_pivot;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col).sign() == 0) continue;
      a.row(r) -= a(r, col) * a.row(row);
    }
    pivot_col_of_row.push_back(col);
    is_pivot_col[static_cast<std::size_t>(col)] = true;
    ++row;
  }

  std::vector<VecX> basis;
  for (Eigen::Index col = 0; col < cols; ++col) {
    if (is_pivot_col[static_cast<std::size_t>(col)]) continue;
    VecX v = VecX::Zero(cols);
    v(col) = Rat(1);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v(pivot_col_of_row[r]) = -a(static_cast<Eigen::Index>(r), col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::pair<Rat, Rat> span_coefficients(const Vec3& b0, const Vec3& b1, const Vec3& e) {
  Vec3 n = b0.cross(b1);
  int idx = -1;
  for (int i = 0; i < 3; ++i)
    if (n(i).sign() != 0) idx = i;
  if (idx < 0) throw Error("DegenerateBasis", "basis triples are proportional");
  // cross(e, b1) = s * cross(b0, b1) and cross(b0, e) = t * cross(b0, b1)
  Rat s = e.cross(b1)(idx) / n(idx);
  Rat t = b0.cross(e)(idx) / n(idx);
  check_internal(exactly_equal((s * b0 + t * b1).eval(), e), "triple not in span of basis");
  return {s, t};
}

bool perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = sqrt(n);  // floor square root
  return root * root == n;
}

bool rational_square_root(const Rat& x, Rat& root) {
  if (x.sign() < 0) return false;
  BigInt rn, rd;
  if (!perfect_square(x.num(), rn) || !perfect_square(x.den(), rd)) return false;
  root = Rat::normalized(rn, rd);
  return true;
}

}  // namespace pgeo
