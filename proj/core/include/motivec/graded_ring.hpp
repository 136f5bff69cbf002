#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motivec {

using Scalar = mpq_class;
/// Exponent vector over the generators of a ring, in generator order.
using Monomial = std::vector<int>;

enum class ScalarField { Integers, Rationals };

std::string to_string(ScalarField f);

struct Generator {
    std::string symbol;
    int degree = 0;
    bool invertible = false;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// Describes a graded commutative coefficient ring A*(pt): a polynomial
/// (or Laurent, for invertible generators) ring over Z or Q, optionally
/// truncated to |degree| <= N.
class RingDescriptor {
public:
    RingDescriptor(std::string name, std::vector<Generator> generators, ScalarField field,
                   std::optional<int> truncation = std::nullopt);

    static RingPtr chow();
    static RingPtr k0();
    static RingPtr universal(int n);

    const std::string& name() const { return name_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    ScalarField field() const { return field_; }
    std::optional<int> truncation() const { return truncation_; }

    std::optional<std::size_t> index_of(std::string_view symbol) const;
    int degree(const Monomial& m) const;
    bool retains(const Monomial& m) const;
    bool valid_monomial(const Monomial& m) const;
    Monomial unit_monomial() const { return Monomial(generators_.size(), 0); }

    /// An invertible monomial of ring-degree d, if the ring has one.
    std::optional<Monomial> unit_of_degree(int d) const;

    /// Same generators with rational scalars. Returns an equal descriptor
    /// when the field is already Q.
    RingPtr rationalized() const;

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

private:
    std::string name_;
    std::vector<Generator> generators_;
    ScalarField field_;
    std::optional<int> truncation_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

/// Order used for printing and for basis listings: ring degree descending,
/// then fewer factors first, then lexicographic on generator order.
bool display_before(const RingDescriptor& ring, const Monomial& a, const Monomial& b);

/// Exact element of a graded coefficient ring, stored as a sparse map from
/// monomial to nonzero scalar.
class GradedRingElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit GradedRingElement(RingPtr ring);
    GradedRingElement(RingPtr ring, const Scalar& constant);
    GradedRingElement(RingPtr ring, Terms terms);

    static GradedRingElement zero(RingPtr ring) { return GradedRingElement(std::move(ring)); }
    static GradedRingElement one(RingPtr ring) { return GradedRingElement(std::move(ring), Scalar(1)); }
    static GradedRingElement monomial(RingPtr ring, Monomial m, const Scalar& c = Scalar(1));
    static GradedRingElement generator(RingPtr ring, std::string_view symbol, int power = 1);
    static GradedRingElement parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Scalar coefficient of a monomial (zero if absent).
    Scalar coefficient(const Monomial& m) const;
    /// Constant term.
    Scalar constant_term() const;
    bool is_constant() const;

    /// Sorted distinct degrees of the stored monomials.
    std::vector<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    /// Degree of a nonzero homogeneous element.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous_of(int k) const;
    GradedRingElement homogeneous_component(int k) const;

    bool is_integral() const;
    /// Re-home this element in a ring with identical generators.
    GradedRingElement in_ring(RingPtr target) const;
    /// Drops terms beyond |degree| <= n.
    GradedRingElement truncated(int n) const;

    /// Inverse of a single-term element whose monomial is invertible and
    /// whose scalar is a unit of the scalar field.
    GradedRingElement inverse() const;

    GradedRingElement operator-() const;
    GradedRingElement& operator+=(const GradedRingElement& o);
    GradedRingElement& operator-=(const GradedRingElement& o);
    GradedRingElement& operator*=(const GradedRingElement& o);
    GradedRingElement& operator*=(const Scalar& s);

    friend GradedRingElement operator+(GradedRingElement a, const GradedRingElement& b) { return a += b; }
    friend GradedRingElement operator-(GradedRingElement a, const GradedRingElement& b) { return a -= b; }
    friend GradedRingElement operator*(const GradedRingElement& a, const GradedRingElement& b);
    friend GradedRingElement operator*(GradedRingElement a, const Scalar& s) { return a *= s; }
    friend GradedRingElement operator*(const Scalar& s, GradedRingElement a) { return a *= s; }

    friend bool operator==(const GradedRingElement& a, const GradedRingElement& b);

    /// Evaluate at images of the generators, all living in one target ring.
    /// Negative exponents require the image to be invertible.
    GradedRingElement substitute(const std::vector<GradedRingElement>& images) const;

    std::string to_string() const;

private:
    void normalize();

    RingPtr ring_;
    Terms terms_;
};

GradedRingElement ring_add(const GradedRingElement& a, const GradedRingElement& b);
GradedRingElement ring_mul(const GradedRingElement& a, const GradedRingElement& b);
GradedRingElement pow(const GradedRingElement& a, int n);

/// A free module over the scalar field described by an explicit basis.
/// For a coefficient-ring component every twist is 0; realizations of Tate
/// motives record which summand L^twist each basis element comes from.
struct BasisElement {
    int twist = 0;
    Monomial monomial;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

struct ModuleDescription {
    ScalarField field = ScalarField::Integers;
    std::vector<BasisElement> basis;

    std::size_t rank() const { return basis.size(); }
};

/// Monomial basis of A^k(pt).
ModuleDescription component_rank(const RingDescriptor& ring, int k);

std::string format_scalar(const Scalar& s);
std::string format_monomial(const RingDescriptor& ring, const Monomial& m);

} // namespace motivec
