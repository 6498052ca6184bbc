#pragma once

#include <vector>

#include "quatinv/integers.hpp"

namespace quatinv {

// Row-vector convention everywhere: a lattice or module is the Z-span of the
// rows of its matrix.
using Mat = std::vector<std::vector<Int>>;

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
std::vector<Int> vec_mat(const std::vector<Int>& v, const Mat& a);
Mat mat_transpose(const Mat& a);
Int mat_det(Mat a);  // fraction-free Bareiss

// adj(A) with A * adj(A) = det(A) * I
Mat mat_adjugate(const Mat& a);

// Row Hermite normal form. Pivots positive, entries above each pivot reduced
// into [0, pivot), zero rows dropped.  Returns rank many rows.
Mat hnf_rows(Mat a);

// true if v is an integer combination of the rows of h (h in row HNF)
bool hnf_contains(const Mat& h, const std::vector<Int>& v);
// coordinates of v in the row basis h (must be contained)
std::vector<Int> hnf_coords(const Mat& h, const std::vector<Int>& v);

// Smith normal form: u * a * v = d with u, v unimodular and d diagonal,
// d[0] | d[1] | ... all nonnegative.  a is m x n; u is m x m; v is n x n.
void snf(const Mat& a, Mat& u, Mat& v, Mat& d);

// basis of { x : x * a = 0 mod p }, row vectors over F_p
std::vector<std::vector<Int>> left_kernel_mod_p(const Mat& a, const Int& p);

}  // namespace quatinv
