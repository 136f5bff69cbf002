#include "oracles.hpp"

namespace oracle {

namespace {

std::uint64_t count(int rows_left, int max_part, int remaining)
{
    if (remaining == 0)
        return 1;
    if (rows_left == 0)
        return 0;
    std::uint64_t total = 0;
    for (int part = 1; part <= max_part && part <= remaining; ++part)
        total += count(rows_left - 1, part, remaining - part);
    return total;
}

std::vector<mpq_class> mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b, int order)
{
    std::vector<mpq_class> out(order + 1, 0);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

std::uint64_t box_partitions(int rows, int cols, int k)
{
    if (k < 0)
        return 0;
    return count(rows, cols, k);
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<mpq_class> invert_series(const std::vector<mpq_class>& f, int order)
{
    std::vector<mpq_class> c(order, 0);
    c[0] = 1;
    for (int n = 1; n < order; ++n) {
        mpq_class s = 0;
        for (int i = 1; i <= n && i < static_cast<int>(f.size()); ++i)
            s += f[i] * c[n - i];
        c[n] = -s;
    }
    return c;
}

std::vector<mpq_class> multiplicative_log(int order)
{
    const auto deriv = invert_series({1, -1}, order);
    std::vector<mpq_class> log(order + 1, 0);
    for (int n = 0; n < order; ++n)
        log[n + 1] = deriv[n] / (n + 1);
    return log;
}

std::vector<mpq_class> revert_series(const std::vector<mpq_class>& f, int order)
{
    std::vector<mpq_class> g(order + 1, 0);
    g[1] = 1;
    for (int iter = 0; iter < order; ++iter) {
        // f(g) = sum_i f_i g^i
        std::vector<mpq_class> fg(order + 1, 0), power{1};
        for (int i = 1; i <= order && i < static_cast<int>(f.size()); ++i) {
            power = mul(power, g, order);
            for (int n = 0; n <= order; ++n)
                fg[n] += f[i] * power[n];
        }
        for (int n = 2; n <= order; ++n)
            g[n] -= fg[n];
    }
    return g;
}

} // namespace oracle
