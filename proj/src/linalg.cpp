#include "trignum/linalg.hpp"

#include <utility>

namespace trignum {

std::vector<Integer> canonical_integer_vector(const std::vector<Rational>& v) {
    Integer den(1);
    for (const auto& x : v) den = int_lcm(den, x.get_den());
    std::vector<Integer> out;
    out.reserve(v.size());
    Integer g(0);
    for (const auto& x : v) {
        Integer e = x.get_num() * (den / x.get_den());
        g = int_gcd(g, e);
        out.push_back(std::move(e));
    }
    if (g == 0) return out;
    for (const auto& e : out)
        if (e != 0) {
            if (e < 0) g = -g;
            break;
        }
    for (auto& e : out) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        e = std::move(q);
    }
    return out;
}

RankNullspace rank_nullspace(const std::vector<std::vector<Integer>>& columns) {
    RankNullspace result;
    const size_t k = columns.size();
    if (k == 0) return result;
    const size_t dim = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != dim) throw std::invalid_argument("rank_nullspace: dimension mismatch");

    // Row-major working copy, dim rows by k columns.
    std::vector<std::vector<Integer>> m(dim, std::vector<Integer>(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < dim; ++i) m[i][j] = columns[j][i];

    std::vector<size_t> pivot_row, pivot_col;
    Integer prev(1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < dim; ++col) {
        size_t sel = row;
        while (sel < dim && m[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(m[row], m[sel]);
        for (size_t i = row + 1; i < dim; ++i) {
            for (size_t j = col + 1; j < k; ++j) {
                Integer t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_row.push_back(row);
        pivot_col.push_back(col);
        ++row;
    }
    result.rank = static_cast<long>(pivot_col.size());

    // Back-substitute one solution per free column.
    std::vector<bool> is_pivot(k, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    for (size_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> sol(k, Rational(0));
        sol[f] = 1;
        for (size_t t = pivot_col.size(); t-- > 0;) {
            if (pivot_col[t] > f) continue;
            size_t r = pivot_row[t], c = pivot_col[t];
            Rational acc(0);
            for (size_t j = c + 1; j < k; ++j)
                if (sol[j] != 0) acc += Rational(m[r][j]) * sol[j];
            sol[c] = -acc / Rational(m[r][c]);
        }
        result.nullspace.push_back(canonical_integer_vector(sol));
    }
    return result;
}

long rank_of(const std::vector<std::vector<Integer>>& columns) {
    return rank_nullspace(columns).rank;
}

}  // namespace trignum
