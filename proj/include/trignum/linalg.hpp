#ifndef TRIGNUM_LINALG_HPP
#define TRIGNUM_LINALG_HPP

#include <vector>

#include "trignum/numeric.hpp"

namespace trignum {

struct RankNullspace {
    long rank = 0;
    // Basis of { x : sum_i x_i * col_i = 0 }, each vector in canonical
    // form: coprime integers, first nonzero entry positive.
    std::vector<std::vector<Integer>> nullspace;
};

// Exact rank and nullspace of the column family, by fraction-free
// (Bareiss) elimination. Columns must share one dimension.
RankNullspace rank_nullspace(const std::vector<std::vector<Integer>>& columns);

long rank_of(const std::vector<std::vector<Integer>>& columns);

// Scales a rational vector to coprime integers, first nonzero positive.
std::vector<Integer> canonical_integer_vector(const std::vector<Rational>& v);

}  // namespace trignum

#endif
