#pragma once

#include <vector>

namespace k3strat {

// Dense linear algebra over F_p for small odd primes. Vectors are rows with
// entries normalized to 0..p-1; matrices are row lists.
using Row = std::vector<int>;
using Matrix = std::vector<Row>;

int mod_norm(long long a, int p);
int mod_pow(long long a, long long e, int p);
int mod_inv(int a, int p);  // a nonzero mod p

// Row-reduced echelon form with zero rows dropped; canonical per subspace.
Matrix rref(Matrix rows, int p);

int rank_of(const Matrix& rows, int p);

// Residual of v after eliminating against RREF rows; zero iff v lies in the span.
Row reduce_against(Row v, const Matrix& rref_rows, int p);

bool in_span(const Row& v, const Matrix& rref_rows, int p);

// Right inverse of a square matrix; DomainError if singular.
Matrix invert(const Matrix& a, int p);

// RREF basis of {x : a * x^T = 0}.
Matrix kernel_basis(const Matrix& a, int ncols, int p);

Row mat_vec(const Matrix& a, const Row& x, int p);  // a * x^T as a row
Row vec_mat(const Row& x, const Matrix& a, int p);  // x * a

}  // namespace k3strat
