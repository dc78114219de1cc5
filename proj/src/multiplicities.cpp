#include "branchkit/multiplicities.hpp"

#include <cstdlib>

#include "branchkit/errors.hpp"

namespace branchkit {

void WeightMultiset::add(int weight, Count times) {
    if (times <= 0)
        return;
    auto& c = counts_[weight];
    c = checked_add(c, times);
    total_ = checked_add(total_, times);
}

Count WeightMultiset::count(int weight) const {
    auto it = counts_.find(weight);
    return it == counts_.end() ? 0 : it->second;
}

bool WeightMultiset::is_symmetric() const {
    for (const auto& [w, c] : counts_) {
        if (count(-w) != c)
            return false;
    }
    return true;
}

MultVector::MultVector(const std::map<int, Count>& mults) {
    for (const auto& [j, m] : mults)
        add(j, m);
}

MultVector MultVector::single(int j, Count m) {
    MultVector out;
    out.add(j, m);
    return out;
}

void MultVector::add(int j, Count times) {
    if (j < 0)
        throw RangeError("F_j needs j >= 0, got " + std::to_string(j));
    if (times == 0)
        return;
    auto it = mults_.find(j);
    const Count updated = checked_add(it == mults_.end() ? Count{0} : it->second, times);
    if (updated < 0)
        throw ConsistencyError("negative multiplicity " + std::to_string(updated) + " for F_" + std::to_string(j));
    if (updated == 0)
        mults_.erase(it);
    else if (it == mults_.end())
        mults_.emplace(j, updated);
    else
        it->second = updated;
}

Count MultVector::operator[](int j) const {
    auto it = mults_.find(j);
    return it == mults_.end() ? 0 : it->second;
}

int MultVector::highest() const {
    if (mults_.empty())
        throw RangeError("highest component of an empty decomposition");
    return mults_.rbegin()->first;
}

int MultVector::lowest() const {
    if (mults_.empty())
        throw RangeError("lowest component of an empty decomposition");
    return mults_.begin()->first;
}

Count MultVector::summands() const {
    Count s = 0;
    for (const auto& [j, m] : mults_)
        s = checked_add(s, m);
    return s;
}

BigInt MultVector::dimension() const {
    BigInt d = 0;
    for (const auto& [j, m] : mults_)
        d += BigInt(m) * (j + 1);
    return d;
}

std::string MultVector::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [j, m] : mults_) {
        if (!first)
            out += ", ";
        first = false;
        out += std::to_string(j) + ":" + std::to_string(m);
    }
    return out + "}";
}

MultVector mult_from_multiset(const WeightMultiset& w) {
    if (!w.is_symmetric())
        throw CorruptMultiset("weight multiset is not symmetric under negation");
    MultVector out;
    if (w.counts().empty())
        return out;
    const int top = w.counts().rbegin()->first;
    for (int j = 0; j <= top; ++j) {
        const Count m = w.count(j) - w.count(j + 2);
        if (m < 0)
            throw CorruptMultiset("dim V_" + std::to_string(j) + " < dim V_" + std::to_string(j + 2));
        out.add(j, m);
    }
    return out;
}

MultVector cg_convolve(const MultVector& a, const MultVector& b) {
    MultVector out;
    for (const auto& [j, ma] : a.entries()) {
        for (const auto& [jp, mb] : b.entries()) {
            const Count prod = checked_mul(ma, mb);
            for (int d = std::abs(j - jp); d <= j + jp; d += 2)
                out.add(d, prod);
        }
    }
    return out;
}

MultVector scaled(const MultVector& m, Count factor) {
    if (factor < 0)
        throw RangeError("negative scale factor");
    MultVector out;
    for (const auto& [j, c] : m.entries())
        out.add(j, checked_mul(c, factor));
    return out;
}

MultVector& operator+=(MultVector& a, const MultVector& b) {
    for (const auto& [j, c] : b.entries())
        a.add(j, c);
    return a;
}

} // namespace branchkit
