#include "jmod/geometric.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace jmod {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("composition must have at least one part");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        total_ += p;
    }
}

std::vector<int> Composition::boundaries() const {
    std::vector<int> out;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        acc += parts_[i];
        out.push_back(acc);
    }
    return out;
}

static void require_equal_totals(const Composition& beta, const Composition& gamma) {
    if (beta.total() != gamma.total())
        throw std::invalid_argument("compositions have different totals");
}

bool is_subpartition(const Composition& beta, const Composition& gamma) {
    require_equal_totals(beta, gamma);
    auto bb = beta.boundaries();
    auto gb = gamma.boundaries();
    return std::includes(bb.begin(), bb.end(), gb.begin(), gb.end());
}

std::vector<SplitMatrix> enumerate_split_matrices(const Composition& beta,
                                                  const Composition& gamma) {
    require_equal_totals(beta, gamma);
    const auto& rows = beta.parts();
    const std::size_t r = rows.size(), s = gamma.size();

    std::vector<SplitMatrix> out;
    std::vector<std::vector<int>> mat(r, std::vector<int>(s, 0));
    std::vector<int> col_rem = gamma.parts();

    // Entry-by-entry recursion in row-major order; the last entry of each row
    // is forced by the row sum, pruned against the remaining column capacity.
    std::function<void(std::size_t, std::size_t, int)> rec =
        [&](std::size_t i, std::size_t j, int row_rem) {
            if (i == r) {
                out.push_back(SplitMatrix{mat});
                return;
            }
            if (j == s - 1) {
                if (row_rem <= col_rem[j]) {
                    mat[i][j] = row_rem;
                    col_rem[j] -= row_rem;
                    rec(i + 1, 0, i + 1 < r ? rows[i + 1] : 0);
                    col_rem[j] += row_rem;
                    mat[i][j] = 0;
                }
                return;
            }
            int hi = std::min(row_rem, col_rem[j]);
            for (int v = 0; v <= hi; ++v) {
                mat[i][j] = v;
                col_rem[j] -= v;
                rec(i, j + 1, row_rem - v);
                col_rem[j] += v;
            }
            mat[i][j] = 0;
        };
    rec(0, 0, rows[0]);
    return out;
}

long long count_contingency_tables(const Composition& beta,
                                   const Composition& gamma) {
    require_equal_totals(beta, gamma);
    const auto& rows = beta.parts();

    // Per-row transfer over the vector of remaining column sums.
    std::map<std::vector<int>, long long> state{{gamma.parts(), 1}};
    for (int row_sum : rows) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [cols, ways] : state) {
            // distribute row_sum over the columns within their capacities
            std::vector<int> take(cols.size(), 0);
            std::function<void(std::size_t, int)> rec = [&](std::size_t j, int rem) {
                if (j == cols.size()) {
                    if (rem != 0) return;
                    std::vector<int> reduced(cols.size());
                    for (std::size_t t = 0; t < cols.size(); ++t)
                        reduced[t] = cols[t] - take[t];
                    next[reduced] += ways;
                    return;
                }
                for (int v = 0; v <= std::min(rem, cols[j]); ++v) {
                    take[j] = v;
                    rec(j + 1, rem - v);
                }
                take[j] = 0;
            };
            rec(0, row_sum);
        }
        state = std::move(next);
    }
    long long total = 0;
    for (const auto& [cols, ways] : state) total += ways;
    return total;
}

bool vanishing_cuspidal(const Composition& beta, const Composition& gamma) {
    return !is_subpartition(beta, gamma);
}

long long ArrangementSum::total_multiplicity() const {
    long long t = 0;
    for (const auto& [arr, mult] : terms_) t += mult;
    return t;
}

ArrangementSum oracle_jacquet_cuspidal(const std::vector<CuspidalPoint>& points,
                                       const Composition& gamma) {
    int dim_total = 0;
    for (const auto& p : points) dim_total += p.dim;
    if (dim_total != gamma.total())
        throw std::invalid_argument("point dimensions do not sum to the composition total");

    ArrangementSum out;
    const std::size_t s = gamma.size();
    std::vector<int> rem = gamma.parts();
    Arrangement arr(s);

    // Assign each point, in original order, to one block that still has room.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == points.size()) {
            bool full = std::all_of(rem.begin(), rem.end(),
                                    [](int x) { return x == 0; });
            if (full) out.add(arr);
            return;
        }
        for (std::size_t j = 0; j < s; ++j) {
            if (rem[j] < points[i].dim) continue;
            rem[j] -= points[i].dim;
            arr[j].push_back(points[i]);
            rec(i + 1);
            arr[j].pop_back();
            rem[j] += points[i].dim;
        }
    };
    rec(0);
    return out;
}

}  // namespace jmod
