#pragma once

#include "motivec/graded_ring.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace motivec {

/// Multivariate power series over a graded coefficient ring, truncated at a
/// total variable degree. Each formal variable has degree +1.
class TruncatedSeries {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, GradedRingElement>;

    TruncatedSeries(RingPtr ring, std::vector<std::string> variables, int order);

    static TruncatedSeries zero(RingPtr ring, std::vector<std::string> variables, int order);
    static TruncatedSeries constant(const GradedRingElement& c, std::vector<std::string> variables, int order);
    static TruncatedSeries variable(RingPtr ring, std::vector<std::string> variables, std::string_view name,
                                    int order);
    /// Parses a sum of terms "coeff*x^i*y^j" where coeff uses the ring syntax
    /// (parenthesize compound coefficients: "(2 + m_1)*x^2").
    static TruncatedSeries parse(RingPtr ring, std::vector<std::string> variables, int order, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::string>& variables() const { return variables_; }
    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t variable_index(std::string_view name) const;
    GradedRingElement coefficient(const Exponents& e) const;
    /// Coefficient of x^k in a single-variable series.
    GradedRingElement coefficient(int k) const;
    GradedRingElement constant_term() const;

    void set_coefficient(const Exponents& e, const GradedRingElement& c);
    void add_term(const Exponents& e, const GradedRingElement& c);

    /// Copy at a lower truncation order.
    TruncatedSeries truncated(int order) const;
    /// Re-express over another variable list containing every variable that
    /// occurs with a nonzero exponent.
    TruncatedSeries with_variables(std::vector<std::string> variables) const;
    TruncatedSeries in_ring(RingPtr ring) const;

    /// Every coefficient of x^e is homogeneous of ring-degree d - |e|.
    bool is_homogeneous_of_degree(int d) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const GradedRingElement& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const GradedRingElement& c) { return a *= c; }
    friend TruncatedSeries operator*(const GradedRingElement& c, TruncatedSeries a) { return a *= c; }

    /// Equality of the retained terms at the smaller of the two orders.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string to_string() const;

private:
    void check_compatible(const TruncatedSeries& o, std::string_view what) const;

    RingPtr ring_;
    std::vector<std::string> variables_;
    int order_;
    Terms terms_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_pow(const TruncatedSeries& a, int n);

/// Simultaneous substitution: variable i of s is replaced by images[i]. All
/// images share one variable list, which becomes the result's. Images must
/// have zero constant term.
TruncatedSeries compose(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images);

/// Replaces one variable of s by t (same variable list as s).
TruncatedSeries series_substitute(const TruncatedSeries& s, std::string_view var, const TruncatedSeries& t);

/// Compositional inverse of a single-variable series a_1 x + ..., with a_1 a
/// unit scalar.
TruncatedSeries series_reversion(const TruncatedSeries& s);

/// Multiplicative inverse of a single-variable series with constant term 1.
TruncatedSeries series_unit_inverse(const TruncatedSeries& s);

} // namespace motivec
