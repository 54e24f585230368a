#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "jmod/segment.hpp"

namespace jmod {

// A composition of n: a nonempty list of positive parts. The blocks are the
// consecutive index intervals cut out by the parts.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    int total() const { return total_; }

    // Interior boundaries: the proper nonzero prefix sums, sorted.
    std::vector<int> boundaries() const;

    friend bool operator==(const Composition& x, const Composition& y) {
        return x.parts_ == y.parts_;
    }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// r x s matrix of non-negative integers; row i sums to beta_i, column j to
// gamma_j.
struct SplitMatrix {
    std::vector<std::vector<int>> entries;

    friend bool operator==(const SplitMatrix& x, const SplitMatrix& y) {
        return x.entries == y.entries;
    }
};

// true iff every block of beta lies inside a single block of gamma,
// equivalently boundaries(gamma) is a subset of boundaries(beta).
// Throws std::invalid_argument if the totals differ.
bool is_subpartition(const Composition& beta, const Composition& gamma);

// All non-negative integer matrices with row sums beta and column sums gamma,
// in lexicographic row-major order. Throws if the totals differ.
std::vector<SplitMatrix> enumerate_split_matrices(const Composition& beta,
                                                  const Composition& gamma);

// Number of matrices enumerate_split_matrices would return, computed by a
// memoized recursion over rows that never materializes a matrix.
long long count_contingency_tables(const Composition& beta,
                                   const Composition& gamma);

// true iff the Jacquet module of the representation induced from cuspidal
// factors of sizes beta vanishes at gamma, i.e. beta is not a subpartition of
// gamma. Throws if the totals differ.
bool vanishing_cuspidal(const Composition& beta, const Composition& gamma);

// One ordered list of points per gamma-block.
using Arrangement = std::vector<std::vector<CuspidalPoint>>;

// Formal sum of arrangements with multiplicities, in deterministic order.
class ArrangementSum {
public:
    void add(const Arrangement& arr) { ++terms_[arr]; }
    bool empty() const { return terms_.empty(); }
    long long total_multiplicity() const;
    const std::map<Arrangement, long long>& terms() const { return terms_; }

private:
    std::map<Arrangement, long long> terms_;
};

// The cuspidal-level specialization of the geometric lemma: one term per
// assignment of each point to a single gamma-block that preserves the original
// order inside every block and fills each block exactly (sum of assigned dims
// equals the part). An empty sum signals vanishing.
ArrangementSum oracle_jacquet_cuspidal(const std::vector<CuspidalPoint>& points,
                                       const Composition& gamma);

}  // namespace jmod
