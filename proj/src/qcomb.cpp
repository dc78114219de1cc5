#include "branchkit/qcomb.hpp"

#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "branchkit/errors.hpp"

namespace branchkit {

QPolynomial::QPolynomial(const std::map<int, Count>& coeffs) {
    for (const auto& [e, c] : coeffs)
        add_term(e, c);
}

QPolynomial QPolynomial::constant(Count c) { return monomial(0, c); }

QPolynomial QPolynomial::monomial(int exponent, Count c) {
    if (exponent < 0)
        throw RangeError("negative exponent in QPolynomial");
    QPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void QPolynomial::add_term(int exponent, Count c) {
    if (c == 0)
        return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

Count QPolynomial::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

bool QPolynomial::is_palindromic() const {
    if (coeffs_.empty())
        return true;
    const int lo = coeffs_.begin()->first;
    const int hi = degree();
    for (const auto& [e, c] : coeffs_) {
        if (coefficient(lo + hi - e) != c)
            return false;
    }
    return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_)
        add_term(e, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_)
        add_term(e, checked_sub<Count>(0, c));
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term(ea + eb, checked_mul(ca, cb));
    return out;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
        Count mag = c < 0 ? -c : c;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        if (e == 0 || mag != 1)
            out += std::to_string(mag);
        if (e >= 1)
            out += "q";
        if (e >= 2)
            out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

struct PiCache {
    std::shared_mutex mutex;
    std::map<std::tuple<int, int, int>, Count> table;
};

PiCache& pi_cache() {
    static PiCache cache;
    return cache;
}

} // namespace

Count pi(int n, int k, int d) {
    if (n < 0 || k < 0)
        throw RangeError("pi(n,k,d) needs n,k >= 0");
    if (d < 0)
        return 0;
    if (d == 0)
        return 1;
    if (n == 0 || k == 0)
        return 0;
    const long long top = static_cast<long long>(n) * k;
    if (d > top)
        return 0;
    // pi(n,k,d) = pi(n,k,nk-d): complement inside the n-by-k box.
    const int key_d = static_cast<int>(std::min<long long>(d, top - d));
    if (key_d == 0)
        return 1;
    const auto key = std::make_tuple(n, k, key_d);

    auto& cache = pi_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(key); it != cache.table.end())
            return it->second;
    }
    const Count value = checked_add(pi(n - 1, k, key_d), pi(n, k - 1, key_d - n));
    std::unique_lock lock(cache.mutex);
    cache.table.try_emplace(key, value);
    return value;
}

std::size_t pi_cache_size() {
    auto& cache = pi_cache();
    std::shared_lock lock(cache.mutex);
    return cache.table.size();
}

Count p_k_n(int k, int n, int d) {
    if (k < 1 || n < 1)
        throw RangeError("p_k_n needs k,n >= 1");
    if (k > n)
        return 0;
    // a_i -> a_i - (k-i+1) maps strict k-tuples from {1..n} onto partitions
    // with at most k parts of size at most n-k.
    return pi(n - k, k, d - k * (k + 1) / 2);
}

QPolynomial gaussian_binomial(int a, int b) {
    if (b < 0 || b > a)
        throw RangeError("gaussian_binomial(a,b) needs 0 <= b <= a");
    // row[j] holds [i choose j]_q; [i,j] = [i-1,j-1] + q^j [i-1,j]
    std::vector<QPolynomial> row(static_cast<std::size_t>(b + 1));
    row[0] = QPolynomial::constant(1);
    for (int i = 1; i <= a; ++i) {
        for (int j = std::min(i, b); j >= 1; --j) {
            auto ju = static_cast<std::size_t>(j);
            row[ju] = row[ju - 1] + QPolynomial::monomial(j) * row[ju];
        }
    }
    return row[static_cast<std::size_t>(b)];
}

} // namespace branchkit
