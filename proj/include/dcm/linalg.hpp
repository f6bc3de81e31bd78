#ifndef DCM_LINALG_HPP
#define DCM_LINALG_HPP

#include <cstddef>
#include <vector>

namespace dcm {

/// Solves the dense square system a*x = rhs in place via LU with partial
/// pivoting. a is n*n row-major and is destroyed. Returns false when a pivot
/// falls below tol (singular to working precision).
bool lu_solve(std::vector<double>& a, std::vector<double>& rhs, std::size_t n, double tol = 1e-12);

/// Cyclic Jacobi eigendecomposition of a symmetric k*k matrix (row-major).
/// On return eigenvalues[i] pairs with the eigenvector stored in column i of
/// vectors (row-major k*k, orthonormal columns). Iterates until the
/// off-diagonal Frobenius norm drops below off_tol.
void jacobi_eigen_symmetric(std::vector<double> matrix, std::size_t k,
                            std::vector<double>& eigenvalues, std::vector<double>& vectors,
                            double off_tol = 1e-12);

}  // namespace dcm

#endif
