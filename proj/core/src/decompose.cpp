#include "motivec/decompose.hpp"

#include "motivec/errors.hpp"

#include <algorithm>

namespace motivec {

namespace {

template <typename CellShift>
TateMotive decompose(const SpaceExpr& s, CellShift shift)
{
    switch (s.kind()) {
    case SpaceKind::Point:
        return TateMotive({0});
    case SpaceKind::Cellular: {
        TateMotive total;
        for (const auto& c : s.cells())
            total = total + decompose(c.base, shift).twisted(shift(c));
        return total;
    }
    case SpaceKind::Union: {
        TateMotive total;
        for (const auto& p : s.parts())
            total = total + decompose(p, shift);
        return total;
    }
    }
    return {};
}

} // namespace

TateMotive decompose_by_rank(const SpaceExpr& s)
{
    return decompose(s, [](const Cell& c) { return c.rank; });
}

TateMotive decompose_by_codim(const SpaceExpr& s)
{
    return decompose(s, [](const Cell& c) { return c.codim; });
}

std::size_t GradedModuleTable::rank(int k) const
{
    if (periodic)
        return periodic_rank;
    if (!known(k))
        throw TruncationExceeded("module table: degree " + std::to_string(k) + " is below the truncation range");
    auto it = degrees.find(k);
    return it == degrees.end() ? 0 : it->second.rank();
}

std::size_t GradedModuleTable::total_rank() const
{
    if (periodic)
        return periodic_rank;
    std::size_t total = 0;
    for (const auto& [k, d] : degrees)
        total += d.rank();
    return total;
}

bool operator==(const GradedModuleTable& a, const GradedModuleTable& b)
{
    if (a.field != b.field || a.periodic != b.periodic || a.periodic_rank != b.periodic_rank ||
        a.known_from != b.known_from)
        return false;
    if (a.degrees.size() != b.degrees.size())
        return false;
    for (const auto& [k, d] : a.degrees) {
        auto it = b.degrees.find(k);
        if (it == b.degrees.end() || it->second.basis != d.basis)
            return false;
    }
    return true;
}

ModuleDescription realize(const TateMotive& m, const OrientedTheory& theory, int k)
{
    const auto& ring = *theory.ring();
    ModuleDescription out;
    out.field = ring.field();
    for (int n : m.twists()) {
        const int d = k - n;
        if (ring.truncation() && std::abs(d) > *ring.truncation()) {
            if (d > 0)
                continue; // positive-degree components of a nonpositively graded ring vanish
            throw TruncationExceeded("realize: degree " + std::to_string(k) + " needs A^" + std::to_string(d) +
                                     "(pt) beyond truncation of " + ring.name());
        }
        for (auto& b : component_rank(ring, d).basis)
            out.basis.push_back({n, std::move(b.monomial)});
    }
    return out;
}

GradedModuleTable realize_table(const TateMotive& m, const OrientedTheory& theory)
{
    const auto& ring = *theory.ring();
    GradedModuleTable table;
    table.field = ring.field();
    const bool laurent = std::any_of(ring.generators().begin(), ring.generators().end(),
                                     [](const Generator& g) { return g.invertible; });
    if (laurent) {
        table.periodic = true;
        table.periodic_rank = realize(m, theory, 0).rank();
        table.degrees.emplace(0, realize(m, theory, 0));
        return table;
    }
    if (m.empty())
        return table;
    // Coefficient rings here are nonpositively graded, so A^k(M) = 0 above
    // the top twist. A truncated ring only knows A^d(pt) for d >= -N.
    const int hi = m.twists().back();
    int lo = m.twists().front();
    if (ring.truncation() && !ring.generators().empty()) {
        lo = hi - *ring.truncation();
        table.known_from = lo;
    }
    for (int k = lo; k <= hi; ++k) {
        auto desc = realize(m, theory, k);
        if (desc.rank() > 0)
            table.degrees.emplace(k, std::move(desc));
    }
    return table;
}

GradedModuleTable operator+(const GradedModuleTable& a, const GradedModuleTable& b)
{
    if (a.field != b.field || a.periodic != b.periodic)
        throw ShapeMismatch("module tables come from different theories");
    GradedModuleTable r = a;
    r.periodic_rank += b.periodic_rank;
    if (a.known_from || b.known_from)
        r.known_from = std::max(a.known_from.value_or(b.known_from.value_or(0)),
                                b.known_from.value_or(a.known_from.value_or(0)));
    for (auto it = r.degrees.begin(); it != r.degrees.end();)
        it = r.known(it->first) ? std::next(it) : r.degrees.erase(it);
    for (const auto& [k, d] : b.degrees) {
        if (!r.known(k))
            continue;
        auto& slot = r.degrees[k];
        slot.field = d.field;
        slot.basis.insert(slot.basis.end(), d.basis.begin(), d.basis.end());
    }
    // keep basis order canonical: by twist, stable
    for (auto& [k, d] : r.degrees)
        std::stable_sort(d.basis.begin(), d.basis.end(), [](auto& l, auto& rr) { return l.twist < rr.twist; });
    return r;
}

std::vector<long long> poincare_polynomial(const TateMotive& m)
{
    if (m.empty())
        return {};
    std::vector<long long> coeffs(m.twists().back() + 1, 0);
    for (int t : m.twists())
        ++coeffs[t];
    return coeffs;
}

bool duality_holds(const SpaceExpr& s)
{
    const auto codim = poincare_polynomial(decompose_by_codim(s));
    auto rank = poincare_polynomial(decompose_by_rank(s));
    // t^dim * P(1/t): reverse the coefficient list padded to length dim + 1
    const int d = s.dim();
    if (static_cast<int>(rank.size()) > d + 1)
        return false;
    rank.resize(d + 1, 0);
    std::reverse(rank.begin(), rank.end());
    while (!rank.empty() && rank.back() == 0)
        rank.pop_back();
    return codim == rank;
}

} // namespace motivec
