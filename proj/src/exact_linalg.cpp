#include "lcmlat/exact_linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "lcmlat/errors.hpp"

namespace lcmlat {

using BigInt = boost::multiprecision::cpp_int;

std::size_t rank_over_rationals(const IntMatrix& matrix) {
    const std::size_t rows = matrix.size();
    if (rows == 0) return 0;
    const std::size_t cols = matrix[0].size();
    if (cols == 0) return 0;

    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (matrix[i].size() != cols) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = matrix[i][j];
    }

    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);

        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BigInt num = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
                BigInt q, r;
                boost::multiprecision::divide_qr(num, prev, q, r);
                if (r != 0) {
                    // The Bareiss one-step identity guarantees exactness; a
                    // nonzero remainder means the elimination is broken.
                    throw std::logic_error("fraction-free elimination: inexact division");
                }
                m[i][j] = std::move(q);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    unsigned __int128 result = 1;
    unsigned __int128 b = static_cast<unsigned __int128>(base % p);
    while (exp > 0) {
        if (exp & 1) result = result * b % static_cast<unsigned __int128>(p);
        b = b * b % static_cast<unsigned __int128>(p);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

std::size_t rank_mod_p(const IntMatrix& matrix, std::int64_t p) {
    if (!is_prime(p)) throw InputError("rank_mod_p: modulus must be prime");
    const std::size_t rows = matrix.size();
    if (rows == 0) return 0;
    const std::size_t cols = matrix[0].size();
    if (cols == 0) return 0;

    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (matrix[i].size() != cols) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) {
            std::int64_t v = matrix[i][j] % p;
            if (v < 0) v += p;
            m[i][j] = v;
        }
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) std::swap(m[pivot], m[rank]);

        const std::int64_t inv = mod_inverse(m[rank][col], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const auto factor = static_cast<unsigned __int128>(
                static_cast<unsigned __int128>(m[i][col]) * static_cast<unsigned __int128>(inv) %
                static_cast<unsigned __int128>(p));
            for (std::size_t j = col; j < cols; ++j) {
                if (m[rank][j] == 0) continue;
                auto sub = factor * static_cast<unsigned __int128>(m[rank][j]) %
                           static_cast<unsigned __int128>(p);
                std::int64_t v = m[i][j] - static_cast<std::int64_t>(sub);
                if (v < 0) v += p;
                m[i][j] = v;
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank(const IntMatrix& matrix, const FieldSpec& field) {
    return field.is_rationals() ? rank_over_rationals(matrix)
                                : rank_mod_p(matrix, field.prime());
}

}  // namespace lcmlat
