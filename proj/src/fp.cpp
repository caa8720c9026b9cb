#include "nker/fp.hpp"

#include "nker/errors.hpp"

#include <algorithm>

namespace nker::fp {

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Matrix Matrix::identity(const int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

namespace {

// i-k-j loop order; the inner accumulation stays in uint64 and reduces
// lazily (p < 2^31 so up to 4 products fit before overflow).
void mul_row_range(const PrimeField& F, const Matrix& A, const Matrix& B, Matrix& C,
                   int r0, int r1) {
    const int n = A.cols, m = B.cols;
    for (int i = r0; i < r1; ++i) {
        uint64_t* crow = &C.a[size_t(i) * m];
        for (int k = 0; k < n; ++k) {
            uint64_t aik = A.at(i, k);
            if (aik == 0) continue;
            const uint64_t* brow = &B.a[size_t(k) * m];
            for (int j = 0; j < m; ++j) {
                crow[j] = (crow[j] + aik * brow[j]) % F.p;
            }
        }
    }
}

} // namespace

Matrix mul_serial(const PrimeField& F, const Matrix& A, const Matrix& B) {
    Matrix C(A.rows, B.cols);
    mul_row_range(F, A, B, C, 0, A.rows);
    return C;
}

Matrix mul_parallel(const PrimeField& F, const Matrix& A, const Matrix& B) {
    Matrix C(A.rows, B.cols);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < A.rows; ++i) mul_row_range(F, A, B, C, i, i + 1);
    return C;
}

Matrix mul(const PrimeField& F, const Matrix& A, const Matrix& B) {
    if (size_t(A.rows) * A.cols * B.cols >= 1u << 21) return mul_parallel(F, A, B);
    return mul_serial(F, A, B);
}

std::vector<uint64_t> mul_vec(const PrimeField& F, const Matrix& A,
                              const std::vector<uint64_t>& x) {
    std::vector<uint64_t> y(A.rows, 0);
    for (int i = 0; i < A.rows; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = &A.a[size_t(i) * A.cols];
        for (int j = 0; j < A.cols; ++j) acc = (acc + row[j] * x[j]) % F.p;
        y[i] = acc;
    }
    return y;
}

std::vector<int> row_echelon(const PrimeField& F, Matrix& A) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols && row < A.rows; ++col) {
        int sel = -1;
        for (int i = row; i < A.rows; ++i)
            if (A.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(row, j));
        uint64_t piv_inv = F.inv(A.at(row, col));
        for (int j = col; j < A.cols; ++j) A.at(row, j) = F.mul(A.at(row, j), piv_inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == row || A.at(i, col) == 0) continue;
            uint64_t f = A.at(i, col);
            for (int j = col; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix nullspace(const PrimeField& F, const Matrix& A) {
    Matrix R = A;
    std::vector<int> pivots = row_echelon(F, R);
    std::vector<char> is_pivot(A.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    Matrix N(A.cols - int(pivots.size()), A.cols);
    int out = 0;
    for (int c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        N.at(out, c) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            N.at(out, pivots[r]) = F.neg(R.at(int(r), c));
        ++out;
    }
    return N;
}

std::vector<uint64_t> charpoly(const PrimeField& F, Matrix A) {
    const int n = A.rows;
    // Reduce to upper Hessenberg by similarity transforms.
    for (int col = 0; col < n - 2; ++col) {
        int sel = -1;
        for (int i = col + 1; i < n; ++i)
            if (A.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(A.at(sel, j), A.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(A.at(i, sel), A.at(i, col + 1));
        }
        uint64_t inv_piv = F.inv(A.at(col + 1, col));
        for (int i = col + 2; i < n; ++i) {
            uint64_t f = F.mul(A.at(i, col), inv_piv);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(col + 1, j)));
            for (int j = 0; j < n; ++j) A.at(j, col + 1) = F.add(A.at(j, col + 1), F.mul(f, A.at(j, i)));
        }
    }
    // p_0 = 1; p_k = charpoly of the leading k x k block.
    std::vector<std::vector<uint64_t>> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // p_k(x) = (x - A[k-1][k-1]) p_{k-1}(x)
        //          - sum_{m=1..k-1} A[k-1-m][k-1] * (prod of subdiagonal) * p_{k-1-m}(x)
        std::vector<uint64_t> pk(k + 1, 0);
        const std::vector<uint64_t>& prev = p[k - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            pk[i + 1] = F.add(pk[i + 1], prev[i]);
            pk[i] = F.sub(pk[i], F.mul(A.at(k - 1, k - 1), prev[i]));
        }
        uint64_t beta = 1;
        for (int m = 1; m < k; ++m) {
            beta = F.mul(beta, A.at(k - m, k - m - 1));
            if (beta == 0) break;
            uint64_t coef = F.mul(beta, A.at(k - 1 - m, k - 1));
            if (coef == 0) continue;
            const std::vector<uint64_t>& q = p[k - 1 - m];
            for (size_t i = 0; i < q.size(); ++i) pk[i] = F.sub(pk[i], F.mul(coef, q[i]));
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

std::vector<uint64_t> poly_roots(const PrimeField& F, const std::vector<uint64_t>& poly) {
    std::vector<uint64_t> roots;
    for (uint64_t x = 0; x < F.p; ++x) {
        uint64_t v = 0;
        for (size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % F.p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

uint64_t find_prime(uint64_t m, uint64_t lower_bound) {
    auto is_prime = [](uint64_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    uint64_t q = (lower_bound / m + 1) * m + 1;
    for (; q < (1ull << 31); q += m)
        if (is_prime(q)) return q;
    throw PrimeSearchFailed("no prime ≡ 1 mod " + std::to_string(m) + " below 2^31");
}

uint64_t primitive_root(const PrimeField& F) {
    uint64_t order = F.p - 1;
    std::vector<uint64_t> prime_factors;
    uint64_t n = order;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) prime_factors.push_back(n);
    for (uint64_t g = 2; g < F.p; ++g) {
        bool ok = true;
        for (uint64_t q : prime_factors)
            if (F.pow(g, order / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    return 1; // p == 2
}

} // namespace nker::fp
