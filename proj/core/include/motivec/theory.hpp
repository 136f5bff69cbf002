#pragma once

#include "motivec/fgl.hpp"
#include "motivec/graded_ring.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace motivec {

class OrientedTheory;
using TheoryPtr = std::shared_ptr<const OrientedTheory>;

/// Computable shadow of an oriented cohomology theory: its coefficient ring
/// A*(pt) together with the formal group law of its Chern classes.
class OrientedTheory {
public:
    OrientedTheory(std::string name, FormalGroupLaw fgl);

    static TheoryPtr chow(int order = default_truncation_order);
    static TheoryPtr k0(int order = default_truncation_order);
    static TheoryPtr universal(int n);
    /// "chow", "k0", "universal:N"; a bare "universal" uses fallback_truncation.
    static TheoryPtr from_selector(std::string_view selector, std::optional<int> fallback_truncation = std::nullopt);

    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return fgl_.ring(); }
    const FormalGroupLaw& fgl() const { return fgl_; }

    /// [P^n] in A^{-n}(pt). Precomputed for n < order of the law.
    GradedRingElement projective_class(int n) const;

private:
    std::string name_;
    FormalGroupLaw fgl_;
    std::vector<GradedRingElement> pn_table_;
};

/// Element sum_i a_i xi^i of A(P^m) = A(pt)[xi]/(xi^{m+1}), xi = c(O(-1)).
class ProjectiveSpaceElement {
public:
    ProjectiveSpaceElement(TheoryPtr theory, int m);
    ProjectiveSpaceElement(TheoryPtr theory, int m, std::vector<GradedRingElement> coords);

    /// The class xi^i.
    static ProjectiveSpaceElement xi_power(TheoryPtr theory, int m, int i);
    /// Pull-back of b along P^m -> pt.
    static ProjectiveSpaceElement pullback(TheoryPtr theory, int m, const GradedRingElement& b);

    const TheoryPtr& theory() const { return theory_; }
    int dimension() const { return m_; }
    const std::vector<GradedRingElement>& coords() const { return coords_; }

    /// Degree k when every a_i is homogeneous of degree k - i.
    bool is_homogeneous_of(int k) const;

    ProjectiveSpaceElement& operator+=(const ProjectiveSpaceElement& o);
    friend ProjectiveSpaceElement operator+(ProjectiveSpaceElement a, const ProjectiveSpaceElement& b) { return a += b; }
    friend ProjectiveSpaceElement operator*(const ProjectiveSpaceElement& a, const GradedRingElement& c);
    friend bool operator==(const ProjectiveSpaceElement& a, const ProjectiveSpaceElement& b);

    std::string to_string() const;

private:
    TheoryPtr theory_;
    int m_;
    std::vector<GradedRingElement> coords_;
};

ProjectiveSpaceElement pm_mul(const ProjectiveSpaceElement& u, const ProjectiveSpaceElement& v);

/// p_*(sum a_i xi^i) = sum a_i [P^{m-i}].
GradedRingElement pushforward_to_point(const ProjectiveSpaceElement& u);

/// Whether p_*(alpha * p^*(b)) == p_*(alpha) * b.
bool projection_formula_check(const TheoryPtr& theory, int m, const ProjectiveSpaceElement& alpha,
                              const GradedRingElement& b);

} // namespace motivec
