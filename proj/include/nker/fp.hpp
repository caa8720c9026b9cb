#pragma once

// Linear algebra over a prime field F_p, sized for class-matrix work
// (dimensions up to a few hundred, p < 2^31).  The matrix product has a
// serial reference kernel and an OpenMP kernel; both are exposed so tests
// and the benchmark can compare them.

#include <cstdint>
#include <vector>

namespace nker::fp {

struct PrimeField {
    uint64_t p;

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
};

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<uint64_t> a; // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
    uint64_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
    uint64_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
    static Matrix identity(const int n);
    bool operator==(const Matrix&) const = default;
};

// C = A*B.  mul() dispatches to the OpenMP kernel for large sizes.
Matrix mul_serial(const PrimeField& F, const Matrix& A, const Matrix& B);
Matrix mul_parallel(const PrimeField& F, const Matrix& A, const Matrix& B);
Matrix mul(const PrimeField& F, const Matrix& A, const Matrix& B);

std::vector<uint64_t> mul_vec(const PrimeField& F, const Matrix& A,
                              const std::vector<uint64_t>& x);

// In-place reduction to row echelon form with unit pivots; returns pivot
// column indices.
std::vector<int> row_echelon(const PrimeField& F, Matrix& A);

// Basis of the right null space of A, one vector per row of the result.
Matrix nullspace(const PrimeField& F, const Matrix& A);

// Characteristic polynomial det(xI - A), coefficients low to high
// (monic, size n+1).  Hessenberg reduction, O(n^3).
std::vector<uint64_t> charpoly(const PrimeField& F, Matrix A);

// All distinct roots in F_p, found by scanning (p is small here).
std::vector<uint64_t> poly_roots(const PrimeField& F, const std::vector<uint64_t>& poly);

// Smallest prime q with q ≡ 1 (mod m) and q > lower_bound; throws
// PrimeSearchFailed past 2^31.
uint64_t find_prime(uint64_t m, uint64_t lower_bound);

// Smallest generator of F_p^*.
uint64_t primitive_root(const PrimeField& F);

} // namespace nker::fp
