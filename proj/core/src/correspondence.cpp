#include "motivec/correspondence.hpp"

#include "motivec/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace motivec {

// TateMotive ------------------------------------------------------------------

TateMotive::TateMotive(std::vector<int> twists) : twists_(std::move(twists))
{
    if (std::any_of(twists_.begin(), twists_.end(), [](int t) { return t < 0; }))
        throw NegativeTwist("Tate motive twists must be nonnegative");
    std::sort(twists_.begin(), twists_.end());
}

TateMotive TateMotive::twisted(int k) const
{
    std::vector<int> t = twists_;
    for (int& x : t)
        x += k;
    return TateMotive(std::move(t));
}

TateMotive TateMotive::dual(int dim) const
{
    std::vector<int> t;
    for (int x : twists_) {
        if (dim - x < 0)
            throw NegativeTwist("dualizing L^" + std::to_string(x) + " against dimension " + std::to_string(dim) +
                                " gives a negative twist");
        t.push_back(dim - x);
    }
    return TateMotive(std::move(t));
}

TateMotive operator+(const TateMotive& a, const TateMotive& b)
{
    std::vector<int> t = a.twists_;
    t.insert(t.end(), b.twists_.begin(), b.twists_.end());
    return TateMotive(std::move(t));
}

std::string TateMotive::to_string() const
{
    if (twists_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < twists_.size(); ++i) {
        if (i)
            out += " + ";
        out += "L^" + std::to_string(twists_[i]);
    }
    return out;
}

// Correspondence --------------------------------------------------------------

Correspondence::Correspondence(RingPtr ring, TateMotive source, TateMotive target, int degree)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), degree_(degree)
{
    entries_.assign(rows() * cols(), GradedRingElement::zero(ring_));
}

Correspondence::Correspondence(RingPtr ring, TateMotive source, TateMotive target, int degree,
                               std::vector<GradedRingElement> entries)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)), degree_(degree),
      entries_(std::move(entries))
{
    if (entries_.size() != rows() * cols())
        throw ShapeMismatch("correspondence entries do not match motive sizes");
    for (std::size_t j = 0; j < rows(); ++j)
        for (std::size_t i = 0; i < cols(); ++i) {
            const auto& e = at(j, i);
            require_same_ring(ring_, e.ring(), "correspondence entry");
            if (!e.is_homogeneous_of(entry_degree(j, i)))
                throw InvalidElement("entry (" + std::to_string(j) + "," + std::to_string(i) + ") = " + e.to_string() +
                                     " is not homogeneous of degree " + std::to_string(entry_degree(j, i)));
        }
}

Correspondence Correspondence::identity(RingPtr ring, const TateMotive& m)
{
    Correspondence id(ring, m, m, 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        id.entries_[i * m.size() + i] = GradedRingElement::one(ring);
    return id;
}

int Correspondence::entry_degree(std::size_t row, std::size_t col) const
{
    return degree_ + source_[col] - target_[row];
}

void Correspondence::set(std::size_t row, std::size_t col, GradedRingElement value)
{
    if (row >= rows() || col >= cols())
        throw ShapeMismatch("correspondence index out of range");
    require_same_ring(ring_, value.ring(), "correspondence entry");
    if (!value.is_homogeneous_of(entry_degree(row, col)))
        throw InvalidElement("entry " + value.to_string() + " is not homogeneous of degree " +
                             std::to_string(entry_degree(row, col)));
    entries_[row * cols() + col] = std::move(value);
}

bool Correspondence::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

Correspondence& Correspondence::operator+=(const Correspondence& o)
{
    require_same_ring(ring_, o.ring_, "correspondence sum");
    if (source_ != o.source_ || target_ != o.target_ || degree_ != o.degree_)
        throw ShapeMismatch("correspondence sum: shape or degree mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += o.entries_[k];
    return *this;
}

Correspondence operator-(const Correspondence& a, const Correspondence& b)
{
    Correspondence r = b;
    for (auto& e : r.entries_)
        e = -e;
    return a + r;
}

bool operator==(const Correspondence& a, const Correspondence& b)
{
    return same_ring(a.ring_, b.ring_) && a.source_ == b.source_ && a.target_ == b.target_ &&
           a.degree_ == b.degree_ && a.entries_ == b.entries_;
}

std::string Correspondence::to_string() const
{
    std::string out = "[" + source_.to_string() + " -> " + target_.to_string() + ", degree " +
                      std::to_string(degree_) + "]";
    for (std::size_t j = 0; j < rows(); ++j) {
        out += "\n  ";
        for (std::size_t i = 0; i < cols(); ++i) {
            if (i)
                out += ", ";
            out += at(j, i).to_string();
        }
    }
    return out;
}

Correspondence compose(const Correspondence& alpha, const Correspondence& beta)
{
    require_same_ring(alpha.ring(), beta.ring(), "compose");
    if (beta.target() != alpha.source())
        throw ShapeMismatch("compose: target of the first map " + beta.target().to_string() +
                            " differs from source of the second " + alpha.source().to_string());
    Correspondence r(alpha.ring(), beta.source(), alpha.target(), alpha.degree() + beta.degree());
    std::vector<GradedRingElement> entries;
    entries.reserve(r.rows() * r.cols());
    for (std::size_t k = 0; k < r.rows(); ++k)
        for (std::size_t i = 0; i < r.cols(); ++i) {
            GradedRingElement sum = GradedRingElement::zero(alpha.ring());
            for (std::size_t j = 0; j < alpha.cols(); ++j)
                if (!alpha.at(k, j).is_zero() && !beta.at(j, i).is_zero())
                    sum += alpha.at(k, j) * beta.at(j, i);
            entries.push_back(std::move(sum));
        }
    return Correspondence(alpha.ring(), beta.source(), alpha.target(), r.degree(), std::move(entries));
}

Correspondence transpose(const Correspondence& alpha, int dim_source, int dim_target)
{
    // Dualizing reverses sorted order: index i of M corresponds to index
    // size-1-i of M^dual.
    const TateMotive new_source = alpha.target().dual(dim_target);
    const TateMotive new_target = alpha.source().dual(dim_source);
    const std::size_t p = alpha.cols(), q = alpha.rows();
    std::vector<GradedRingElement> entries;
    entries.reserve(p * q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            entries.push_back(alpha.at(q - 1 - j, p - 1 - i));
    return Correspondence(alpha.ring(), new_source, new_target, dim_source + alpha.degree() - dim_target,
                          std::move(entries));
}

namespace {

/// Kronecker twist list of a (x) b and the permutation sorting it:
/// order[k] = Kronecker index of sorted position k.
std::pair<TateMotive, std::vector<std::size_t>> tensor_order(const TateMotive& a, const TateMotive& b)
{
    std::vector<int> kron;
    for (int x : a.twists())
        for (int y : b.twists())
            kron.push_back(x + y);
    std::vector<std::size_t> order(kron.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return kron[l] < kron[r]; });
    return {TateMotive(kron), std::move(order)};
}

} // namespace

TateMotive product(const TateMotive& a, const TateMotive& b)
{
    return tensor_order(a, b).first;
}

Correspondence product(const Correspondence& alpha, const Correspondence& beta)
{
    require_same_ring(alpha.ring(), beta.ring(), "product");
    const auto [source, src_order] = tensor_order(alpha.source(), beta.source());
    const auto [target, tgt_order] = tensor_order(alpha.target(), beta.target());
    const std::size_t bp = beta.cols(), bq = beta.rows();
    std::vector<GradedRingElement> entries;
    entries.reserve(source.size() * target.size());
    for (std::size_t row = 0; row < target.size(); ++row) {
        const std::size_t jk = tgt_order[row];
        for (std::size_t col = 0; col < source.size(); ++col) {
            const std::size_t ik = src_order[col];
            const auto& a = alpha.at(jk / bq, ik / bp);
            const auto& b = beta.at(jk % bq, ik % bp);
            entries.push_back(a.is_zero() || b.is_zero() ? GradedRingElement::zero(alpha.ring()) : a * b);
        }
    }
    return Correspondence(alpha.ring(), source, target, alpha.degree() + beta.degree(), std::move(entries));
}

Correspondence direct_sum(const Correspondence& alpha, const Correspondence& beta)
{
    require_same_ring(alpha.ring(), beta.ring(), "direct_sum");
    if (alpha.degree() != beta.degree())
        throw ShapeMismatch("direct_sum: degrees differ");
    // Merge the block twists into sorted order, remembering where each came from.
    auto merge = [](const TateMotive& a, const TateMotive& b) {
        std::vector<std::pair<int, std::size_t>> tagged; // (twist, index into a then b)
        for (std::size_t i = 0; i < a.size(); ++i)
            tagged.emplace_back(a[i], i);
        for (std::size_t i = 0; i < b.size(); ++i)
            tagged.emplace_back(b[i], a.size() + i);
        std::stable_sort(tagged.begin(), tagged.end(), [](auto& l, auto& r) { return l.first < r.first; });
        std::vector<std::size_t> order;
        for (auto& [t, idx] : tagged)
            order.push_back(idx);
        return std::pair{a + b, order};
    };
    const auto [source, src_order] = merge(alpha.source(), beta.source());
    const auto [target, tgt_order] = merge(alpha.target(), beta.target());
    std::vector<GradedRingElement> entries;
    for (std::size_t row = 0; row < target.size(); ++row)
        for (std::size_t col = 0; col < source.size(); ++col) {
            const std::size_t j = tgt_order[row], i = src_order[col];
            const bool a_row = j < alpha.rows(), a_col = i < alpha.cols();
            if (a_row && a_col)
                entries.push_back(alpha.at(j, i));
            else if (!a_row && !a_col)
                entries.push_back(beta.at(j - alpha.rows(), i - alpha.cols()));
            else
                entries.push_back(GradedRingElement::zero(alpha.ring()));
        }
    return Correspondence(alpha.ring(), source, target, alpha.degree(), std::move(entries));
}

bool is_idempotent(const Correspondence& p)
{
    return p.is_endomorphism() && p.degree() == 0 && compose(p, p) == p;
}

// Splitting --------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

bool integral(const Matrix& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (x.get_den() != 1)
                return false;
    return true;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols)
{
    Matrix r(a.size(), std::vector<Scalar>(cols, Scalar(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (sgn(a[i][k]) != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    r[i][j] += a[i][k] * b[k][j];
    return r;
}

struct Factorization {
    Matrix u;                        // n x r
    Matrix v;                        // r x n
    std::vector<std::size_t> anchor; // row (or column) whose twist labels basis vector k
};

/// Z-basis of the column lattice of an integer matrix by integer column
/// reduction; each basis column has a distinct pivot row with zeros above.
std::optional<Factorization> integral_factorization(const Matrix& s)
{
    const std::size_t n = s.size();
    // work on columns
    std::vector<std::vector<mpz_class>> cols(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cols[j][i] = s[i][j].get_num();

    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), 0);
    std::vector<std::size_t> basis_cols, pivot_rows;
    for (std::size_t r = 0; r < n && !active.empty(); ++r) {
        for (;;) {
            // column with the smallest nonzero |entry| in row r
            std::optional<std::size_t> best;
            for (std::size_t idx = 0; idx < active.size(); ++idx) {
                const auto& e = cols[active[idx]][r];
                if (sgn(e) != 0 && (!best || abs(e) < abs(cols[active[*best]][r])))
                    best = idx;
            }
            if (!best)
                break;
            bool reduced = true;
            const auto& piv = cols[active[*best]];
            for (std::size_t idx = 0; idx < active.size(); ++idx) {
                if (idx == *best)
                    continue;
                auto& c = cols[active[idx]];
                if (sgn(c[r]) == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), c[r].get_mpz_t(), piv[r].get_mpz_t());
                for (std::size_t i = 0; i < n; ++i)
                    c[i] -= q * piv[i];
                if (sgn(c[r]) != 0)
                    reduced = false;
            }
            if (reduced) {
                basis_cols.push_back(active[*best]);
                pivot_rows.push_back(r);
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(*best));
                break;
            }
        }
    }

    const std::size_t rank = basis_cols.size();
    Factorization f;
    f.u.assign(n, std::vector<Scalar>(rank));
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < n; ++i)
            f.u[i][k] = Scalar(cols[basis_cols[k]][i]);
    f.anchor = pivot_rows;

    // Solve U v = s_col by forward substitution on pivot rows.
    f.v.assign(rank, std::vector<Scalar>(n));
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t k = 0; k < rank; ++k) {
            Scalar x = s[pivot_rows[k]][col];
            for (std::size_t l = 0; l < k; ++l)
                x -= f.u[pivot_rows[k]][l] * f.v[l][col];
            x /= f.u[pivot_rows[k]][k];
            f.v[k][col] = x;
        }
    }
    if (!integral(f.v) || multiply(f.u, f.v, rank, n) != s)
        return std::nullopt;
    return f;
}

/// Rational factorization S = C R, with C the pivot columns of S and R the
/// nonzero rows of its reduced row echelon form.
Factorization rational_factorization(const Matrix& s)
{
    const std::size_t n = s.size();
    Matrix rref = s;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && sgn(rref[p][col]) == 0)
            ++p;
        if (p == n)
            continue;
        std::swap(rref[p], rref[row]);
        const Scalar lead = rref[row][col];
        for (auto& x : rref[row])
            x /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || sgn(rref[i][col]) == 0)
                continue;
            const Scalar f = rref[i][col];
            for (std::size_t j = 0; j < n; ++j)
                rref[i][j] -= f * rref[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    Factorization f;
    const std::size_t rank = pivots.size();
    f.u.assign(n, std::vector<Scalar>(rank));
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < n; ++i)
            f.u[i][k] = s[i][pivots[k]];
    f.v.assign(rref.begin(), rref.begin() + static_cast<std::ptrdiff_t>(rank));
    f.anchor = pivots;
    return f;
}

/// Rows labelling a basis of the column space: pivot rows of the integer
/// column reduction when S is integral, pivot columns of the RREF otherwise.
std::vector<std::size_t> label_rows(const Matrix& s)
{
    if (integral(s))
        if (auto f = integral_factorization(s))
            return f->anchor;
    return rational_factorization(s).anchor;
}

bool has_laurent_generator(const RingDescriptor& ring)
{
    return std::any_of(ring.generators().begin(), ring.generators().end(),
                       [](const Generator& g) { return g.invertible; });
}

} // namespace

Splitting split_idempotent(const Correspondence& p)
{
    if (!p.is_endomorphism() || p.degree() != 0)
        throw NotIdempotent("split_idempotent: need a degree-0 endomorphism");
    if (compose(p, p) != p)
        throw NotIdempotent("split_idempotent: p o p != p");

    const auto& ring = p.ring();
    const auto& m = p.source();
    const std::size_t n = m.size();

    auto unit = [&](int d) -> std::optional<GradedRingElement> {
        auto mono = ring->unit_of_degree(d);
        if (!mono)
            return std::nullopt;
        return GradedRingElement::monomial(ring, *mono);
    };

    // p(j,i) = S(j,i) * u(a_i - a_j)
    Matrix s(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const auto& e = p.at(j, i);
            if (e.is_zero())
                continue;
            const int d = m[i] - m[j];
            auto mono = ring->unit_of_degree(d);
            if (!mono || e.term_count() != 1 || e.terms().begin()->first != *mono)
                throw NonSplittable("split_idempotent: entry (" + std::to_string(j) + "," + std::to_string(i) +
                                    ") = " + e.to_string() + " is not a scalar multiple of a unit of degree " +
                                    std::to_string(d));
            s[j][i] = e.terms().begin()->second;
        }

    std::optional<Factorization> f;
    if (integral(s))
        f = integral_factorization(s);
    if (!f)
        f = rational_factorization(s);
    const bool is_integral = integral(f->u) && integral(f->v);
    if (!is_integral && ring->field() == ScalarField::Integers)
        throw NonSplittable("split_idempotent: no factorization over the integers");

    const std::size_t rank = f->anchor.size();
    std::vector<int> labels(rank);
    for (std::size_t k = 0; k < rank; ++k)
        labels[k] = m[f->anchor[k]];
    if (has_laurent_generator(*ring)) {
        // With an invertible generator every twist label is admissible. Take
        // the pivot rows of whichever of S, 1 - S comes first in a fixed
        // order, and give the other one the complementary rows, so that the
        // two images always reassemble the source twists.
        Matrix c(n, std::vector<Scalar>(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                c[j][i] = Scalar(j == i ? 1 : 0) - s[j][i];
        const bool s_first = !(c < s);
        const auto& first = s_first ? s : c;
        const auto rows = label_rows(first);
        std::vector<bool> taken(n, false);
        for (auto r : rows)
            taken[r] = true;
        labels.clear();
        for (std::size_t r = 0; r < n; ++r)
            if (taken[r] == s_first)
                labels.push_back(m[r]);
        if (labels.size() != rank)
            throw NonSplittable("split_idempotent: rank mismatch between p and its complement");
    }

    std::vector<std::size_t> order(rank);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return labels[l] < labels[r]; });
    std::vector<int> twists;
    for (std::size_t k : order)
        twists.push_back(labels[k]);
    TateMotive image(twists);

    auto scalar_entry = [&](const Scalar& c, int d) {
        if (sgn(c) == 0)
            return GradedRingElement::zero(ring);
        auto u = unit(d);
        if (!u)
            throw NonSplittable("split_idempotent: factor needs a unit of degree " + std::to_string(d));
        return *u * c;
    };

    Correspondence section(ring, image, m, 0);
    Correspondence retraction(ring, m, image, 0);
    for (std::size_t k = 0; k < rank; ++k) {
        const std::size_t src = order[k];
        for (std::size_t j = 0; j < n; ++j) {
            section.set(j, k, scalar_entry(f->u[j][src], image[k] - m[j]));
            retraction.set(k, j, scalar_entry(f->v[src][j], m[j] - image[k]));
        }
    }

    if (compose(retraction, section) != Correspondence::identity(ring, image) || compose(section, retraction) != p)
        throw NonSplittable("split_idempotent: factorization failed to certify");
    return {std::move(image), std::move(section), std::move(retraction), is_integral};
}

TateMotive projective_bundle_motive(const TateMotive& x, int bundle_rank)
{
    TateMotive total;
    for (int i = 0; i < bundle_rank; ++i)
        total = total + x.twisted(i);
    return total;
}

std::vector<Correspondence> pbt_projectors(RingPtr ring, const TateMotive& x, int bundle_rank)
{
    if (bundle_rank < 1)
        throw InvalidElement("pbt_projectors: bundle rank must be at least 1");
    // tag each basis vector of the sorted sum with its summand index
    std::vector<std::pair<int, int>> tagged;
    for (int i = 0; i < bundle_rank; ++i)
        for (int t : x.twists())
            tagged.emplace_back(t + i, i);
    std::stable_sort(tagged.begin(), tagged.end(), [](auto& l, auto& r) { return l.first < r.first; });
    const TateMotive total = projective_bundle_motive(x, bundle_rank);

    std::vector<Correspondence> projectors;
    for (int i = 0; i < bundle_rank; ++i) {
        Correspondence p(ring, total, total, 0);
        for (std::size_t k = 0; k < tagged.size(); ++k)
            if (tagged[k].second == i)
                p.set(k, k, GradedRingElement::one(ring));
        projectors.push_back(std::move(p));
    }
    return projectors;
}

} // namespace motivec
