#include "binderlab/cyclo.hpp"

#include <algorithm>
#include <numeric>

namespace binderlab {

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (u) {
        s += char('0' + int(u % 10));
        u /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

CycloInt CycloInt::root_power(int p, int k) {
    CycloInt z(p);
    k %= p;
    if (k < 0) k += p;
    if (k < p - 1) {
        z.c_[size_t(k)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : z.c_) c = -1;
    }
    return z;
}

CycloInt CycloInt::signed_root(int p, int eps, int k) {
    CycloInt z = root_power(p, k);
    if (eps < 0) z = -z;
    return z;
}

bool CycloInt::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloInt::is_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void CycloInt::check(const CycloInt& o) const {
    if (p_ != o.p_) throw InvalidInput("CycloInt: mixed root orders");
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
    check(o);
    CycloInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
    check(o);
    CycloInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycloInt CycloInt::operator-() const {
    CycloInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
    check(o);
    if (p_ == 2) {
        CycloInt r(2);
        r.c_[0] = c_[0] * o.c_[0];
        return r;
    }
    std::vector<Int128> prod(size_t(2 * p_ - 3), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    CycloInt r(p_);
    for (size_t d = 0; d < prod.size(); ++d) {
        size_t e = d % size_t(p_);
        if (e < size_t(p_ - 1)) {
            r.c_[e] += prod[d];
        } else {
            for (auto& c : r.c_) c -= prod[d];
        }
    }
    return r;
}

CycloInt CycloInt::conj() const {
    if (p_ == 2) return *this;
    CycloInt r(p_);
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        int e = int((p_ - int(k)) % p_);
        if (e < p_ - 1) {
            r.c_[size_t(e)] += c_[k];
        } else {
            for (auto& c : r.c_) c -= c_[k];
        }
    }
    return r;
}

CycloInt CycloInt::scaled(Int128 k) const {
    CycloInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
    return r;
}

bool CycloInt::operator==(const CycloInt& o) const { return p_ == o.p_ && c_ == o.c_; }

std::string CycloInt::to_string() const {
    if (p_ == 2 || is_integer()) return int128_to_string(c_[0]);
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += int128_to_string(c_[i]);
        if (i > 0) {
            s += "*z^";
            s += std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {
Int128 gcd128(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

Rat::Rat(Int128 n, Int128 d) {
    if (d == 0) throw InvalidInput("Rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int128 g = gcd128(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

std::string Rat::to_string() const {
    std::string s = int128_to_string(num);
    if (den != 1) {
        s += '/';
        s += int128_to_string(den);
    }
    return s;
}

Int128 binom128(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;  // exact: r is binom(n-k+i, i) after each step
    }
    return r;
}

SignedRoot SignedRoot::make(int p, int eps, int k) {
    if (eps == 0) return zero();
    k %= p;
    if (k < 0) k += p;
    if (p == 2 && k == 1) {  // zeta_2 = -1 folds into the sign
        eps = -eps;
        k = 0;
    }
    return SignedRoot{int8_t(eps), int16_t(k)};
}

SignedRoot SignedRoot::conj(int p) const {
    if (eps == 0) return zero();
    return make(p, eps, (p - k) % p);
}

SignedRoot SignedRoot::times(int p, const SignedRoot& o) const {
    if (eps == 0 || o.eps == 0) return zero();
    return make(p, eps * o.eps, k + o.k);
}

CycloInt SignedRoot::to_cyclo(int p) const {
    if (eps == 0) return CycloInt(p);
    return CycloInt::signed_root(p, eps, k);
}

CycloInt cyclo_determinant(const std::vector<std::vector<CycloInt>>& m) {
    const size_t n = m.size();
    if (n == 0) throw InvalidInput("cyclo_determinant: empty matrix");
    const int p = m[0][0].p();
    if (n == 1) return m[0][0];
    // Bird: X <- mu(X) * A repeated n-1 times; det = (-1)^{n-1} X[0][0].
    auto mul = [&](const std::vector<std::vector<CycloInt>>& x) {
        std::vector<std::vector<CycloInt>> r(n, std::vector<CycloInt>(n, CycloInt(p)));
        for (size_t i = 0; i < n; ++i)
            for (size_t k2 = 0; k2 < n; ++k2) {
                if (x[i][k2].is_zero()) continue;
                for (size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + x[i][k2] * m[k2][j];
            }
        return r;
    };
    auto mu = [&](std::vector<std::vector<CycloInt>> x) {
        CycloInt acc(p);
        for (size_t i = n; i-- > 0;) {
            CycloInt d = x[i][i];
            x[i][i] = -acc;
            for (size_t j = 0; j < i; ++j) x[i][j] = CycloInt(p);
            acc = acc + d;
        }
        return x;
    };
    std::vector<std::vector<CycloInt>> x = m;
    for (size_t step = 0; step + 1 < n; ++step) x = mul(mu(x));
    CycloInt det = x[0][0];
    if (n % 2 == 0) det = -det;
    return det;
}

Int128 integer_determinant(std::vector<std::vector<Int128>> m) {
    const size_t n = m.size();
    if (n == 0) throw InvalidInput("integer_determinant: empty matrix");
    Int128 prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace binderlab
