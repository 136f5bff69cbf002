#include "motivec/random.hpp"

#include "motivec/errors.hpp"

#include <algorithm>

namespace motivec::random {

int uniform(Engine& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

Scalar small_scalar(const RingPtr& ring, Engine& rng)
{
    int num = 0;
    while (num == 0)
        num = uniform(rng, -5, 5);
    if (ring->field() == ScalarField::Rationals && uniform(rng, 0, 2) == 0)
        return Scalar(num, uniform(rng, 1, 4));
    return Scalar(num);
}

} // namespace

GradedRingElement element(const RingPtr& ring, Engine& rng, int max_terms)
{
    GradedRingElement r = GradedRingElement::zero(ring);
    const int terms = uniform(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        // pick a degree, then a basis monomial of that component
        int k = 0;
        if (ring->truncation())
            k = -uniform(rng, 0, *ring->truncation());
        else if (!ring->generators().empty())
            k = uniform(rng, -3, 3);
        const auto basis = component_rank(*ring, k).basis;
        if (basis.empty())
            continue;
        const auto& b = basis[uniform(rng, 0, static_cast<int>(basis.size()) - 1)];
        r += GradedRingElement::monomial(ring, b.monomial, small_scalar(ring, rng));
    }
    return r;
}

GradedRingElement homogeneous(const RingPtr& ring, int k, Engine& rng)
{
    if (ring->truncation() && std::abs(k) > *ring->truncation())
        return GradedRingElement::zero(ring);
    const auto basis = component_rank(*ring, k).basis;
    GradedRingElement r = GradedRingElement::zero(ring);
    for (const auto& b : basis)
        if (uniform(rng, 0, 2) != 0)
            r += GradedRingElement::monomial(ring, b.monomial, small_scalar(ring, rng));
    return r;
}

ProjectiveSpaceElement projective_element(const TheoryPtr& theory, int m, Engine& rng)
{
    std::vector<GradedRingElement> coords;
    for (int i = 0; i <= m; ++i)
        coords.push_back(element(theory->ring(), rng, 3));
    return ProjectiveSpaceElement(theory, m, std::move(coords));
}

ProjectiveSpaceElement homogeneous_projective_element(const TheoryPtr& theory, int m, int k, Engine& rng)
{
    std::vector<GradedRingElement> coords;
    for (int i = 0; i <= m; ++i)
        coords.push_back(homogeneous(theory->ring(), k - i, rng));
    return ProjectiveSpaceElement(theory, m, std::move(coords));
}

TateMotive motive(Engine& rng, int max_size, int max_twist)
{
    std::vector<int> t;
    const int n = uniform(rng, 0, max_size);
    for (int i = 0; i < n; ++i)
        t.push_back(uniform(rng, 0, max_twist));
    return TateMotive(std::move(t));
}

Correspondence correspondence(const RingPtr& ring, const TateMotive& source, const TateMotive& target, int degree,
                              Engine& rng)
{
    Correspondence c(ring, source, target, degree);
    for (std::size_t j = 0; j < target.size(); ++j)
        for (std::size_t i = 0; i < source.size(); ++i)
            c.set(j, i, homogeneous(ring, c.entry_degree(j, i), rng));
    return c;
}

namespace {

using IntMatrix = std::vector<std::vector<Scalar>>;

/// Random n x n idempotent A D A^{-1} with A a product of elementary matrices.
IntMatrix scalar_idempotent(std::size_t n, Engine& rng)
{
    IntMatrix a(n, std::vector<Scalar>(n, 0)), ainv(n, std::vector<Scalar>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = ainv[i][i] = 1;
    if (n > 1) {
        const int steps = uniform(rng, static_cast<int>(n), 3 * static_cast<int>(n));
        for (int s = 0; s < steps; ++s) {
            const auto r = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            auto c = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
            if (c >= r)
                ++c;
            const int f = uniform(rng, -2, 2);
            // A <- A * E (col r += f col c); A^{-1} <- E^{-1} A^{-1} (row c -= f row r)
            for (std::size_t i = 0; i < n; ++i)
                a[i][r] += f * a[i][c];
            for (std::size_t j = 0; j < n; ++j)
                ainv[c][j] -= f * ainv[r][j];
        }
    }
    std::vector<int> d(n);
    for (auto& x : d)
        x = uniform(rng, 0, 1);
    IntMatrix p(n, std::vector<Scalar>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (d[k] && sgn(a[i][k]) != 0)
                for (std::size_t j = 0; j < n; ++j)
                    p[i][j] += a[i][k] * ainv[k][j];
    return p;
}

} // namespace

Correspondence idempotent(const RingPtr& ring, const TateMotive& m, Engine& rng)
{
    const std::size_t n = m.size();
    Correspondence p(ring, m, m, 0);
    bool all_units = true;
    for (std::size_t i = 0; i < n && all_units; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!ring->unit_of_degree(m[i] - m[j])) {
                all_units = false;
                break;
            }

    auto place = [&](const std::vector<std::size_t>& idx) {
        const auto s = scalar_idempotent(idx.size(), rng);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) {
                if (sgn(s[a][b]) == 0)
                    continue;
                const std::size_t j = idx[a], i = idx[b];
                const auto unit = ring->unit_of_degree(m[i] - m[j]);
                p.set(j, i, GradedRingElement::monomial(ring, *unit, s[a][b]));
            }
    };

    if (all_units) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i;
        place(all);
    } else {
        for (std::size_t start = 0; start < n;) {
            std::size_t end = start;
            std::vector<std::size_t> block;
            while (end < n && m[end] == m[start])
                block.push_back(end++);
            place(block);
            start = end;
        }
    }
    return p;
}

namespace {

SpaceExpr builtin_space(Engine& rng, int max_dim)
{
    for (;;) {
        switch (uniform(rng, 0, 3)) {
        case 0:
            return SpaceExpr::point();
        case 1:
            return projective_space(uniform(rng, 0, std::min(max_dim, 4)));
        case 2: {
            const int d = uniform(rng, 0, 2);
            if (2 * d <= max_dim)
                return quadric(d);
            break;
        }
        default: {
            const int n = uniform(rng, 1, 5);
            const int d = uniform(rng, 0, n);
            if (d * (n - d) <= max_dim)
                return grassmannian(d, n);
            break;
        }
        }
    }
}

SpaceExpr space_impl(Engine& rng, int depth, int& counter)
{
    const int target_dim = uniform(rng, 0, 6);
    const int ncells = uniform(rng, 1, std::min(target_dim + 1, 4));
    std::vector<int> codims{0};
    while (static_cast<int>(codims.size()) < ncells) {
        const int next = codims.back() + uniform(rng, 1, 2);
        if (next > target_dim)
            break;
        codims.push_back(next);
    }
    std::vector<Cell> cells;
    for (int c : codims) {
        const int room = target_dim - c;
        SpaceExpr base = SpaceExpr::point();
        const int choice = uniform(rng, 0, 3);
        if (choice == 0 && depth > 0) {
            base = space_impl(rng, depth - 1, counter);
            if (base.dim() > room)
                base = SpaceExpr::point();
        } else if (choice == 1) {
            base = builtin_space(rng, room);
        } else if (choice == 2 && room >= 0) {
            auto a = builtin_space(rng, room);
            auto b = builtin_space(rng, room);
            if (a.dim() == b.dim())
                base = SpaceExpr::disjoint_union({a, b});
        }
        cells.push_back({base, room - base.dim(), c});
    }
    return SpaceExpr::cellular("s" + std::to_string(counter++), std::move(cells));
}

} // namespace

SpaceExpr space(Engine& rng, int depth)
{
    int counter = 0;
    return space_impl(rng, depth, counter);
}

} // namespace motivec::random
