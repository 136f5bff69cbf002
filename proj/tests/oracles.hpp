#pragma once

// Reference computations that share no code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

/// Number of partitions of k whose Young diagram fits in a rows x cols box,
/// by enumerating every nonincreasing sequence of row lengths.
std::uint64_t box_partitions(int rows, int cols, int k);

std::uint64_t binomial(int n, int k);

/// Coefficients c_0..c_{order-1} of 1 / f for a power series f with f_0 = 1,
/// by the triangular recurrence c_n = -sum_{i>=1} f_i c_{n-i}.
std::vector<mpq_class> invert_series(const std::vector<mpq_class>& f, int order);

/// Logarithm of x + y - b*x*y at b = 1, coefficients of x^1..x^order, from
/// log'(x) = 1 / (1 - x) by inversion and termwise integration.
std::vector<mpq_class> multiplicative_log(int order);

/// Compositional inverse of x + a_2 x^2 + ... by fixed-point iteration
/// g <- x - (f(g) - g), truncated at x^order. Index i holds the x^i
/// coefficient; index 0 is unused.
std::vector<mpq_class> revert_series(const std::vector<mpq_class>& f, int order);

} // namespace oracle
