#include "jmod/jacquet.hpp"

#include <functional>
#include <stdexcept>

namespace jmod {

SplitResult split_segment(const Segment& d, int l) {
    if (l < 0 || l > d.size())
        throw std::invalid_argument("split level out of range");
    SplitResult res;
    if (l % d.dim != 0) {
        res.zero = true;
        return res;
    }
    int p = d.a + l / d.dim;
    if (p > d.a) res.left = Segment{d.line, d.dim, d.a, p - 1};
    if (p <= d.b) res.right = Segment{d.line, d.dim, p, d.b};
    return res;
}

void FormalSum::add(Multisegment left, Multisegment right, SplitVector split) {
    terms_[{std::move(left), std::move(right)}].push_back(std::move(split));
}

long long FormalSum::total_multiplicity() const {
    long long t = 0;
    for (const auto& [key, splits] : terms_) t += static_cast<long long>(splits.size());
    return t;
}

FormalSum jacquet_max_levi(const Multisegment& ms, int l) {
    const int n = ms.total_size();
    if (l < 1 || l > n - 1)
        throw std::invalid_argument("level must satisfy 1 <= l <= n-1");

    const auto& segs = ms.segments();
    const std::size_t r = segs.size();
    FormalSum out;

    std::vector<int> x(r, 0);  // p_i = a_i + x_i
    // Lexicographic enumeration of (x_1, ..., x_r), x_i in [0, k_i],
    // with sum m_i x_i = l.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i == r) {
            if (rem != 0) return;
            std::vector<Segment> left, right;
            SplitVector split(r);
            for (std::size_t t = 0; t < r; ++t) {
                const Segment& s = segs[t];
                int p = s.a + x[t];
                split[t] = p;
                if (p > s.a) left.push_back(Segment{s.line, s.dim, s.a, p - 1});
                if (p <= s.b) right.push_back(Segment{s.line, s.dim, p, s.b});
            }
            out.add(Multisegment(std::move(left)), Multisegment(std::move(right)),
                    std::move(split));
            return;
        }
        const Segment& s = segs[i];
        for (int v = 0; v <= s.length() && v * s.dim <= rem; ++v) {
            x[i] = v;
            rec(i + 1, rem - v * s.dim);
        }
        x[i] = 0;
    };
    rec(0, l);
    return out;
}

void LeviSum::add(const Key& factors, long long mult) {
    terms_[factors] += mult;
}

long long LeviSum::total_multiplicity() const {
    long long t = 0;
    for (const auto& [key, mult] : terms_) t += mult;
    return t;
}

LeviSum jacquet_levi(const Multisegment& ms, const Composition& gamma) {
    if (gamma.size() < 2)
        throw std::invalid_argument("composition must have at least two parts");
    if (gamma.total() != ms.total_size())
        throw std::invalid_argument("composition does not sum to the total size");

    LeviSum out;
    if (gamma.size() == 2) {
        FormalSum base = jacquet_max_levi(ms, gamma.parts()[0]);
        for (const auto& [key, splits] : base.terms())
            out.add({key.first, key.second}, static_cast<long long>(splits.size()));
        return out;
    }
    std::vector<int> rest(gamma.parts().begin() + 1, gamma.parts().end());
    FormalSum base = jacquet_max_levi(ms, gamma.parts()[0]);
    for (const auto& [key, splits] : base.terms()) {
        LeviSum tail = jacquet_levi(key.second, Composition(rest));
        for (const auto& [factors, mult] : tail.terms()) {
            LeviSum::Key full;
            full.reserve(factors.size() + 1);
            full.push_back(key.first);
            full.insert(full.end(), factors.begin(), factors.end());
            out.add(full, static_cast<long long>(splits.size()) * mult);
        }
    }
    return out;
}

std::vector<CuspidalPoint> cuspidal_support(const Multisegment& ms) {
    std::vector<CuspidalPoint> out;
    for (const Segment& s : ms.segments())
        for (int k = s.a; k <= s.b; ++k)
            out.push_back(CuspidalPoint{s.line, s.dim, k});
    return out;
}

}  // namespace jmod
