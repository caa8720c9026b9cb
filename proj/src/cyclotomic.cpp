#include "nker/cyclotomic.hpp"

#include "nker/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nker {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long multiplicative_order(long a, long m) {
    if (m == 1) return 1;
    a %= m;
    if (a < 0) a += m;
    if (std::gcd(a, m) != 1) throw NotCoprime("order of " + std::to_string(a) + " mod " + std::to_string(m));
    long k = 1, x = a;
    while (x != 1) {
        x = x * a % m;
        ++k;
    }
    return k;
}

namespace {

// Polynomial remainder of x^e - 1 divided by prod of Phi_d over proper
// divisors d of e gives Phi_e; the division is exact over Z.
std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<mpz_class> poly_div_exact_z(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        mpz_class f = num[i + den.size() - 1] / den.back();
        q[i] = f;
        if (f == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    return q;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int e) {
    static std::map<int, std::vector<mpz_class>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    // Fill the cache bottom-up over divisors of e.
    for (int n = 1; n <= e; ++n) {
        if (e % n != 0 || cache.count(n)) continue;
        std::vector<mpz_class> num(n + 1);
        num[0] = -1;
        num[n] = 1;
        std::vector<mpz_class> den{1};
        for (int d = 1; d < n; ++d)
            if (n % d == 0) den = poly_mul_z(den, cache.at(d));
        cache.emplace(n, poly_div_exact_z(std::move(num), den));
    }
    return cache.at(e);
}

Cyclotomic Cyclotomic::root_of_unity(int e, long k) {
    if (e < 1 || e > kMaxConductor) throw InvalidParams("conductor out of range: " + std::to_string(e));
    std::vector<Rational> c(e);
    k %= e;
    if (k < 0) k += e;
    c[k] = 1;
    return Cyclotomic(e, std::move(c));
}

Cyclotomic Cyclotomic::lifted(int target) const {
    if (target == e_) return *this;
    // zeta_{e}^i = zeta_{target}^{i * target/e}
    int step = target / e_;
    std::vector<Rational> c(target);
    for (int i = 0; i < e_; ++i)
        if (c_[i] != 0) c[size_t(i) * step] = c_[i];
    return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int e = std::lcm(e_, o.e_);
    Cyclotomic a = lifted(e), b = o.lifted(e);
    for (int i = 0; i < e; ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    int e = std::lcm(e_, o.e_);
    Cyclotomic a = lifted(e), b = o.lifted(e);
    for (int i = 0; i < e; ++i) a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int e = std::lcm(e_, o.e_);
    Cyclotomic a = lifted(e), b = o.lifted(e);
    std::vector<Rational> c(e);
    for (int i = 0; i < e; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < e; ++j) {
            if (b.c_[j] == 0) continue;
            int k = i + j;
            if (k >= e) k -= e;
            c[k] += a.c_[i] * b.c_[j];
        }
    }
    return Cyclotomic(e, std::move(c));
}

Cyclotomic Cyclotomic::scalar_mul(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    if (e_ == 1) return *this;
    return galois_apply(e_ - 1);
}

Cyclotomic Cyclotomic::galois_apply(long k) const {
    k %= e_;
    if (k < 0) k += e_;
    if (std::gcd(k, long(e_)) != 1)
        throw NotCoprime("galois exponent " + std::to_string(k) + " vs conductor " + std::to_string(e_));
    std::vector<Rational> c(e_);
    for (int i = 0; i < e_; ++i)
        if (c_[i] != 0) c[size_t(i) * k % e_] += c_[i];
    return Cyclotomic(e_, std::move(c));
}

void Cyclotomic::reduce() {
    const std::vector<mpz_class>& phi = cyclotomic_polynomial(e_);
    size_t deg = phi.size() - 1; // phi is monic
    for (size_t i = c_.size(); i-- > deg;) {
        if (c_[i] == 0) continue;
        Rational f = c_[i];
        for (size_t j = 0; j < phi.size(); ++j) c_[i - deg + j] -= f * Rational(phi[j]);
    }
    c_.resize(deg);
    c_.resize(e_);
}

bool Cyclotomic::is_zero() const {
    Cyclotomic r = *this;
    r.reduce();
    for (const auto& q : r.c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    Cyclotomic r = *this;
    r.reduce();
    for (int i = 1; i < r.e_; ++i)
        if (r.c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    Cyclotomic r = *this;
    r.reduce();
    for (int i = 1; i < r.e_; ++i)
        if (r.c_[i] != 0) throw NotRational("value has nontrivial conductor " + std::to_string(r.e_));
    return r.c_[0];
}

namespace {

// Solve B x = y exactly over Q (B column-major, rows x cols); returns false
// when inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> B, std::vector<Rational> y,
                    int rows, int cols, std::vector<Rational>& x) {
    std::vector<int> pivot_col_of_row(rows, -1);
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (B[c][r] != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != row) {
            for (int cc = 0; cc < cols; ++cc) std::swap(B[cc][sel], B[cc][row]);
            std::swap(y[sel], y[row]);
        }
        Rational piv = B[c][row];
        for (int r = 0; r < rows; ++r) {
            if (r == row || B[c][r] == 0) continue;
            Rational f = B[c][r] / piv;
            for (int cc = c; cc < cols; ++cc) B[cc][r] -= f * B[cc][row];
            y[r] -= f * y[row];
        }
        pivot_col_of_row[row] = c;
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (y[r] != 0) return false;
    x.assign(cols, Rational(0));
    for (int r = 0; r < row; ++r) {
        int c = pivot_col_of_row[r];
        x[c] = y[r] / B[c][r];
    }
    return true;
}

} // namespace

Cyclotomic Cyclotomic::canonical() const {
    Cyclotomic r = *this;
    r.reduce();
    // Smallest divisor conductor d such that the value lies in Q(zeta_d):
    // holds iff every Galois map with k ≡ 1 mod d fixes the value.
    for (int d = 1; d <= r.e_; ++d) {
        if (r.e_ % d != 0) continue;
        bool fixed = true;
        for (long k = 2; k < r.e_ && fixed; ++k) {
            if (std::gcd(k, long(r.e_)) != 1 || k % d != 1 % d) continue;
            Cyclotomic g = r.galois_apply(k);
            g.reduce();
            if (g.c_ != r.c_) fixed = false;
        }
        if (!fixed) continue;
        if (d == r.e_) return r;
        // Solve for coordinates in the basis zeta_d^i, i < phi(d), each
        // basis vector lifted and reduced at conductor e.
        int rows = euler_phi(r.e_), cols = euler_phi(d);
        std::vector<std::vector<Rational>> B(cols);
        for (int i = 0; i < cols; ++i) {
            Cyclotomic b = root_of_unity(d, i).lifted(r.e_);
            b.reduce();
            B[i].assign(b.c_.begin(), b.c_.begin() + rows);
        }
        std::vector<Rational> y(r.c_.begin(), r.c_.begin() + rows), x;
        if (!solve_rational(std::move(B), std::move(y), rows, cols, x)) continue;
        std::vector<Rational> c(d);
        for (int i = 0; i < cols; ++i) c[i] = x[i];
        return Cyclotomic(d, std::move(c));
    }
    return r;
}

long Cyclotomic::root_order() const {
    Cyclotomic r = canonical();
    if (r.is_rational()) {
        Rational q = r.as_rational();
        if (q == 1) return 1;
        if (q == -1) return 2;
        return -1;
    }
    // r = q * zeta_{e}^k exactly when r / (its positive rational norm...)
    // cheap test: search exponents at the canonical conductor.
    for (int k = 0; k < r.e_; ++k) {
        Cyclotomic w = root_of_unity(r.e_, k);
        Cyclotomic ratio = r * w.conj();
        if (!ratio.is_rational()) continue;
        Rational q = ratio.as_rational();
        if (q > 0) return k == 0 ? 1 : r.e_ / std::gcd(long(r.e_), long(k));
    }
    return -1;
}

std::string Cyclotomic::str() const {
    Cyclotomic r = canonical();
    if (r.is_rational()) return r.as_rational().get_str();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < r.e_; ++i) {
        if (r.c_[i] == 0) continue;
        Rational q = r.c_[i];
        if (!first) os << (q < 0 ? " - " : " + ");
        else if (q < 0) os << "-";
        first = false;
        Rational aq = abs(q);
        if (aq != 1 || i == 0) os << aq.get_str() << (i > 0 ? "*" : "");
        if (i > 0) {
            os << "z" << r.e_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace nker
