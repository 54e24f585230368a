#include "jmod/segment.hpp"

#include <algorithm>
#include <numeric>

namespace jmod {

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
    std::stable_sort(segs_.begin(), segs_.end(), canonical_less);
}

int Multisegment::total_size() const {
    return std::accumulate(segs_.begin(), segs_.end(), 0,
                           [](int acc, const Segment& s) { return acc + s.size(); });
}

bool operator<(const Multisegment& x, const Multisegment& y) {
    return std::lexicographical_compare(
        x.segs_.begin(), x.segs_.end(), y.segs_.begin(), y.segs_.end(),
        canonical_less);
}

bool contains(const Segment& outer, const Segment& inner) {
    return outer.line == inner.line && outer.a <= inner.a && inner.b <= outer.b;
}

bool is_linked(const Segment& d1, const Segment& d2) {
    if (d1.line != d2.line) return false;
    if (contains(d1, d2) || contains(d2, d1)) return false;
    return std::max(d1.a, d2.a) <= std::min(d1.b, d2.b) + 1;
}

bool precedes(const Segment& d1, const Segment& d2) {
    return is_linked(d1, d2) && d1.a < d2.a;
}

bool is_irreducible(const Multisegment& ms) {
    const auto& segs = ms.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            if (is_linked(segs[i], segs[j])) return false;
    return true;
}

bool in_m_irr(const Multisegment& ms) {
    if (!is_irreducible(ms)) return false;
    const auto& segs = ms.segments();
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = 0; j < segs.size(); ++j)
            if (i != j && contains(segs[i], segs[j])) return false;
    return true;
}

Multisegment canonicalize(const Multisegment& ms) {
    return ms;  // the representation is always canonical
}

}  // namespace jmod
