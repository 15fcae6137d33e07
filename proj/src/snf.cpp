#include "convexcalc/snf.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>

namespace convexcalc {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigMat = std::vector<std::vector<Big>>;

long long narrow(const Big& x) {
    if (x > std::numeric_limits<long long>::max() ||
        x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer matrix entry exceeds 64-bit range");
    return x.convert_to<long long>();
}

BigMat widen(const IMat& m) {
    BigMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

Big big_abs(const Big& x) { return x < 0 ? Big(-x) : x; }

void swap_cols(BigMat& m, int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

std::vector<Big> poly_mul(const std::vector<Big>& p, const std::vector<Big>& q) {
    std::vector<Big> out(p.size() + q.size() - 1, Big(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

// Remainder of q by monic p, both constant term first; quotient discarded.
std::vector<Big> poly_rem(const std::vector<Big>& p, std::vector<Big>& q) {
    int pd = static_cast<int>(p.size()) - 1;
    for (int d = static_cast<int>(q.size()) - 1; d >= pd; --d) {
        Big coef = q[d];
        if (coef == 0) continue;
        for (int k = 0; k <= pd; ++k) q[d - pd + k] -= coef * p[k];
    }
    return q;
}

} // namespace

IMat imat_identity(int n) {
    IMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size(), k = b.size(), p = b[0].size();
    IMat out(n, std::vector<long long>(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < p; ++j) {
            Big acc = 0;
            for (size_t t = 0; t < k; ++t) acc += Big(a[i][t]) * b[t][j];
            out[i][j] = narrow(acc);
        }
    return out;
}

IMat imat_sub(const IMat& a, const IMat& b) {
    IMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

SmithForm smith_normal_form(const IMat& m) {
    BigMat w = widen(m);
    int rows = static_cast<int>(w.size());
    int cols = rows ? static_cast<int>(w[0].size()) : 0;
    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (w[i][j] != 0 &&
                    (pi < 0 || big_abs(w[i][j]) < big_abs(w[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(w[t], w[pi]);
        swap_cols(w, t, pj);
        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < rows; ++i) {
                if (w[i][t] == 0) continue;
                Big q = w[i][t] / w[t][t];
                for (int j = t; j < cols; ++j) w[i][j] -= q * w[t][j];
                if (w[i][t] != 0) {
                    std::swap(w[i], w[t]);
                    settled = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (w[t][j] == 0) continue;
                Big q = w[t][j] / w[t][t];
                for (int i = t; i < rows; ++i) w[i][j] -= q * w[i][t];
                if (w[t][j] != 0) {
                    swap_cols(w, t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (int i = t + 1; i < rows && settled; ++i)
                for (int j = t + 1; j < cols && settled; ++j)
                    if (w[i][j] % w[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj) w[t][jj] += w[i][jj];
                        settled = false;
                    }
        }
        ++t;
    }
    SmithForm out;
    out.rank = t;
    for (int k = 0; k < t; ++k) out.factors.push_back(narrow(big_abs(w[k][k])));
    for (int k = 1; k < t; ++k)
        if (out.factors[k] % out.factors[k - 1] != 0)
            throw std::logic_error("invariant factor chain broke divisibility");
    return out;
}

std::vector<long long> char_poly(const IMat& a) {
    int n = static_cast<int>(a.size());
    BigMat A = widen(a);
    BigMat M(n, std::vector<Big>(n, Big(0)));
    for (int i = 0; i < n; ++i) M[i][i] = 1;
    std::vector<Big> c(n + 1, Big(0));
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        BigMat AM(n, std::vector<Big>(n, Big(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int s = 0; s < n; ++s) AM[i][j] += A[i][s] * M[s][j];
        Big tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[i][i];
        c[n - k] = -tr / k;
        M = AM;
        for (int i = 0; i < n; ++i) M[i][i] += c[n - k];
    }
    std::vector<long long> out(n + 1);
    for (int k = 0; k <= n; ++k) out[k] = narrow(c[k]);
    return out;
}

bool poly_divides(const std::vector<long long>& p,
                  const std::vector<long long>& q) {
    if (p.empty() || (p.back() != 1 && p.back() != -1))
        throw std::invalid_argument("divisor polynomial must have unit leading coefficient");
    if (q.size() < p.size()) return false;
    std::vector<Big> pb(p.begin(), p.end());
    if (p.back() == -1)
        for (auto& x : pb) x = -x;
    std::vector<Big> r(q.begin(), q.end());
    poly_rem(pb, r);
    for (const Big& x : r)
        if (x != 0) return false;
    return true;
}

std::vector<std::pair<int, std::vector<long long>>>
cyclotomics_up_to(int max_degree) {
    // phi(n) >= sqrt(n/2), so degrees above max_degree start past this bound.
    int nmax = 2 * max_degree * max_degree + 1;
    std::vector<std::vector<Big>> table(nmax + 1);
    std::vector<std::pair<int, std::vector<long long>>> out;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Big> num(n + 1, Big(0));
        num[0] = -1;
        num[n] = 1;
        std::vector<Big> den{1};
        for (int d = 1; d < n; ++d)
            if (n % d == 0) den = poly_mul(den, table[d]);
        // num / den is exact; divide by the monic den via remainder steps.
        std::vector<Big> quot(num.size() - den.size() + 1, Big(0));
        std::vector<Big> r = num;
        int dd = static_cast<int>(den.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= dd; --d) {
            Big coef = r[d];
            if (coef == 0) continue;
            quot[d - dd] = coef;
            for (int k = 0; k <= dd; ++k) r[d - dd + k] -= coef * den[k];
        }
        table[n] = quot;
        if (static_cast<int>(quot.size()) - 1 <= max_degree) {
            std::vector<long long> small(quot.size());
            for (size_t k = 0; k < quot.size(); ++k) small[k] = narrow(quot[k]);
            out.emplace_back(n, std::move(small));
        }
    }
    return out;
}

} // namespace convexcalc
