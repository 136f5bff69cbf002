#pragma once

#include "motivec/graded_ring.hpp"
#include "motivec/series.hpp"

#include <string>

namespace motivec {

inline constexpr int default_truncation_order = 10;

enum class LawKind { Additive, Multiplicative, Universal, Custom };

/// A formal group law F(x, y) truncated at a total degree, over the
/// coefficient ring of an oriented theory.
class FormalGroupLaw {
public:
    /// Wraps an arbitrary two-variable series in (x, y). Axioms are not
    /// checked here; see satisfies_axioms().
    FormalGroupLaw(TruncatedSeries law, LawKind kind = LawKind::Custom);

    const RingPtr& ring() const { return law_.ring(); }
    const TruncatedSeries& series() const { return law_; }
    int order() const { return law_.order(); }
    LawKind kind() const { return kind_; }

    /// Polynomial built-in laws can be rebuilt exactly at any order.
    bool rebuildable() const { return kind_ == LawKind::Additive || kind_ == LawKind::Multiplicative; }
    FormalGroupLaw at_order(int order) const;

    /// F(x,y) evaluated at two series sharing a variable list.
    TruncatedSeries apply(const TruncatedSeries& u, const TruncatedSeries& v) const;

    bool satisfies_unit() const;
    bool satisfies_commutativity() const;
    bool satisfies_associativity() const;
    /// Coefficient of x^i y^j is homogeneous of ring-degree 1 - i - j.
    bool satisfies_homogeneity() const;
    bool satisfies_axioms() const;

private:
    TruncatedSeries law_;
    LawKind kind_;
};

/// F = x + y over CHOW.
FormalGroupLaw fgl_additive(int order = default_truncation_order);
/// F = x + y - beta*x*y over K0.
FormalGroupLaw fgl_multiplicative(int order = default_truncation_order);
/// F = exp(log x + log y) with log x = x + sum_{i<N} m_i x^{i+1} over UNIVERSAL(N).
FormalGroupLaw fgl_universal(int order = default_truncation_order);

/// The logarithm x + m_1 x^2 + ... + m_{N-1} x^N used to build fgl_universal.
TruncatedSeries universal_logarithm(int order);

/// Logarithm of the law, over the rationalized coefficient ring: the unique
/// l = x + ... with l(F(x,y)) = l(x) + l(y). Computed by integrating the
/// invariant differential 1 / F_y(x, 0).
TruncatedSeries fgl_log(const FormalGroupLaw& law);
/// Compositional inverse of fgl_log.
TruncatedSeries fgl_exp(const FormalGroupLaw& law);

/// i(x) with F(x, i(x)) = 0.
TruncatedSeries formal_inverse(const FormalGroupLaw& law);

/// Class of n-dimensional projective space in the coefficient ring:
/// (n + 1) times the x^{n+1} coefficient of the logarithm.
GradedRingElement pn_class(const FormalGroupLaw& law, int n);

} // namespace motivec
