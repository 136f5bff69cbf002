#include "motivec/fgl.hpp"

#include "motivec/errors.hpp"

namespace motivec {

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> x_only{"x"};

TruncatedSeries var(const RingPtr& ring, const std::vector<std::string>& vars, std::string_view name, int order)
{
    return TruncatedSeries::variable(ring, vars, name, order);
}

} // namespace

FormalGroupLaw::FormalGroupLaw(TruncatedSeries law, LawKind kind) : law_(std::move(law)), kind_(kind)
{
    if (law_.variables() != xy)
        throw InvalidElement("formal group law must be a series in (x, y)");
}

FormalGroupLaw FormalGroupLaw::at_order(int order) const
{
    switch (kind_) {
    case LawKind::Additive:
        return fgl_additive(order);
    case LawKind::Multiplicative:
        return fgl_multiplicative(order);
    default:
        if (order <= law_.order())
            return FormalGroupLaw(law_.truncated(order), kind_);
        throw TruncationExceeded("law is only known to order " + std::to_string(law_.order()));
    }
}

TruncatedSeries FormalGroupLaw::apply(const TruncatedSeries& u, const TruncatedSeries& v) const
{
    return compose(law_, {u, v});
}

bool FormalGroupLaw::satisfies_unit() const
{
    const auto& r = ring();
    const int n = order();
    const auto x = var(r, x_only, "x", n);
    const auto zero = TruncatedSeries::zero(r, x_only, n);
    return apply(x, zero) == x && apply(zero, x) == x;
}

bool FormalGroupLaw::satisfies_commutativity() const
{
    const int n = order();
    return apply(var(ring(), xy, "y", n), var(ring(), xy, "x", n)) == law_;
}

bool FormalGroupLaw::satisfies_associativity() const
{
    const auto& r = ring();
    const int n = order();
    const auto x = var(r, xyz, "x", n), y = var(r, xyz, "y", n), z = var(r, xyz, "z", n);
    return apply(apply(x, y), z) == apply(x, apply(y, z));
}

bool FormalGroupLaw::satisfies_homogeneity() const
{
    return law_.is_homogeneous_of_degree(1);
}

bool FormalGroupLaw::satisfies_axioms() const
{
    return satisfies_unit() && satisfies_commutativity() && satisfies_associativity() && satisfies_homogeneity();
}

FormalGroupLaw fgl_additive(int order)
{
    const auto ring = RingDescriptor::chow();
    return FormalGroupLaw(var(ring, xy, "x", order) + var(ring, xy, "y", order), LawKind::Additive);
}

FormalGroupLaw fgl_multiplicative(int order)
{
    const auto ring = RingDescriptor::k0();
    const auto x = var(ring, xy, "x", order), y = var(ring, xy, "y", order);
    const auto beta = GradedRingElement::generator(ring, "beta");
    return FormalGroupLaw(x + y - beta * (x * y), LawKind::Multiplicative);
}

TruncatedSeries universal_logarithm(int order)
{
    const auto ring = RingDescriptor::universal(order);
    TruncatedSeries log = var(ring, x_only, "x", order);
    for (int i = 1; i < order; ++i)
        log.set_coefficient({i + 1}, GradedRingElement::generator(ring, "m_" + std::to_string(i)));
    return log;
}

FormalGroupLaw fgl_universal(int order)
{
    if (order < 1)
        throw InvalidElement("fgl_universal: order must be at least 1");
    const auto log = universal_logarithm(order);
    const auto exp = series_reversion(log);
    const auto& ring = log.ring();
    const auto lx = compose(log, {var(ring, xy, "x", order)});
    const auto ly = compose(log, {var(ring, xy, "y", order)});
    return FormalGroupLaw(compose(exp, {lx + ly}), LawKind::Universal);
}

TruncatedSeries fgl_log(const FormalGroupLaw& law)
{
    const auto ring = law.ring()->rationalized();
    const auto F = law.series().in_ring(ring);
    const int n = law.order();

    // F_y(x, 0) = sum_i a_{i,1} x^i
    TruncatedSeries dy(ring, x_only, n);
    for (const auto& [e, c] : F.terms())
        if (e[1] == 1)
            dy.set_coefficient({e[0]}, c);
    const auto omega = series_unit_inverse(dy);

    TruncatedSeries log(ring, x_only, n);
    for (const auto& [e, c] : omega.terms())
        if (e[0] + 1 <= n)
            log.set_coefficient({e[0] + 1}, c * Scalar(1, e[0] + 1));
    return log;
}

TruncatedSeries fgl_exp(const FormalGroupLaw& law)
{
    return series_reversion(fgl_log(law));
}

TruncatedSeries formal_inverse(const FormalGroupLaw& law)
{
    // Solve F(x, i(x)) = 0 order by order: F(x, y) = x + y + (higher), so the
    // x^k coefficient of F(x, i_{<k}) determines -i_k.
    const auto& ring = law.ring();
    const int n = law.order();
    const auto x = var(ring, x_only, "x", n);
    TruncatedSeries inv(ring, x_only, n);
    inv.set_coefficient({1}, -GradedRingElement::one(ring));
    for (int k = 2; k <= n; ++k) {
        const auto err = law.apply(x.truncated(k), inv.truncated(k)).coefficient(k);
        if (!err.is_zero())
            inv.add_term({k}, -err);
    }
    return inv;
}

GradedRingElement pn_class(const FormalGroupLaw& law, int n)
{
    if (n < 0)
        throw InvalidElement("pn_class: negative dimension");
    if (n == 0)
        return GradedRingElement::one(law.ring());
    if (n + 1 > law.order()) {
        if (!law.rebuildable())
            throw TruncationExceeded("pn_class: [P^" + std::to_string(n) + "] needs order " + std::to_string(n + 1) +
                                     ", law has order " + std::to_string(law.order()));
        return pn_class(law.at_order(n + 1), n);
    }
    const auto log = fgl_log(law);
    const auto value = log.coefficient(n + 1) * Scalar(n + 1);
    if (law.ring()->field() == ScalarField::Integers && !value.is_integral())
        throw InvalidElement("pn_class: non-integral class " + value.to_string());
    return value.in_ring(law.ring());
}

} // namespace motivec
