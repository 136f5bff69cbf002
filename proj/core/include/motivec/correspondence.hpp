#pragma once

#include "motivec/graded_ring.hpp"

#include <string>
#include <vector>

namespace motivec {

/// Direct sum of Lefschetz twists L^{n_1} + ... + L^{n_k}, kept as a sorted
/// multiset of nonnegative integers.
class TateMotive {
public:
    TateMotive() = default;
    explicit TateMotive(std::vector<int> twists);

    const std::vector<int>& twists() const { return twists_; }
    std::size_t size() const { return twists_.size(); }
    bool empty() const { return twists_.empty(); }
    int operator[](std::size_t i) const { return twists_[i]; }

    /// Tensor with L^k.
    TateMotive twisted(int k) const;
    /// n -> dim - n; rejects results below zero.
    TateMotive dual(int dim) const;

    friend TateMotive operator+(const TateMotive& a, const TateMotive& b);
    friend bool operator==(const TateMotive&, const TateMotive&) = default;

    std::string to_string() const;

private:
    std::vector<int> twists_;
};

/// Graded matrix between Tate motives: a morphism source -> target of
/// degree c, whose entry (j, i) lies in A^{c + a_i - b_j}(pt) for source
/// twist a_i and target twist b_j.
class Correspondence {
public:
    /// The zero correspondence.
    Correspondence(RingPtr ring, TateMotive source, TateMotive target, int degree);
    /// Row-major entries, target.size() rows by source.size() columns.
    Correspondence(RingPtr ring, TateMotive source, TateMotive target, int degree,
                   std::vector<GradedRingElement> entries);

    static Correspondence identity(RingPtr ring, const TateMotive& m);

    const RingPtr& ring() const { return ring_; }
    const TateMotive& source() const { return source_; }
    const TateMotive& target() const { return target_; }
    int degree() const { return degree_; }
    std::size_t rows() const { return target_.size(); }
    std::size_t cols() const { return source_.size(); }

    /// Ring degree an entry must have.
    int entry_degree(std::size_t row, std::size_t col) const;
    const GradedRingElement& at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
    void set(std::size_t row, std::size_t col, GradedRingElement value);

    bool is_endomorphism() const { return source_ == target_; }
    bool is_zero() const;

    Correspondence& operator+=(const Correspondence& o);
    friend Correspondence operator+(Correspondence a, const Correspondence& b) { return a += b; }
    friend Correspondence operator-(const Correspondence& a, const Correspondence& b);
    friend bool operator==(const Correspondence& a, const Correspondence& b);

    std::string to_string() const;

private:
    RingPtr ring_;
    TateMotive source_;
    TateMotive target_;
    int degree_;
    std::vector<GradedRingElement> entries_;
};

/// alpha o beta (beta first); degrees add.
Correspondence compose(const Correspondence& alpha, const Correspondence& beta);

/// Transpose for a correspondence between spaces of the given dimensions:
/// twists dualize by n -> dim - n and the degree becomes
/// dim_source + c - dim_target.
Correspondence transpose(const Correspondence& alpha, int dim_source, int dim_target);

/// Tensor product: twists add, entries multiply (Kronecker), degrees add.
/// Basis order is the stable sort of the Kronecker order by twist.
Correspondence product(const Correspondence& alpha, const Correspondence& beta);
TateMotive product(const TateMotive& a, const TateMotive& b);

/// Block-diagonal sum.
Correspondence direct_sum(const Correspondence& alpha, const Correspondence& beta);

bool is_idempotent(const Correspondence& p);

struct Splitting {
    TateMotive image;
    Correspondence section;    ///< image -> source
    Correspondence retraction; ///< source -> image
    bool integral = true;      ///< every scalar in section/retraction is an integer
};

/// Splits a degree-0 projector: returns I with r o s = id_I and s o r = p.
/// Throws NotIdempotent, or NonSplittable if some entry is not a scalar
/// multiple of a unit of the required degree.
Splitting split_idempotent(const Correspondence& p);

/// Orthogonal projectors p_0..p_n onto the summands X(i) of
/// P = X + X(1) + ... + X(n), for a bundle of rank n + 1.
std::vector<Correspondence> pbt_projectors(RingPtr ring, const TateMotive& x, int bundle_rank);

/// P = X + X(1) + ... + X(n) as used by pbt_projectors.
TateMotive projective_bundle_motive(const TateMotive& x, int bundle_rank);

} // namespace motivec
