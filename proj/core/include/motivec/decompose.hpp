#pragma once

#include "motivec/cellular.hpp"
#include "motivec/correspondence.hpp"
#include "motivec/theory.hpp"

#include <map>
#include <optional>
#include <vector>

namespace motivec {

/// Motive of a cellular space from the affine-bundle ranks:
/// X = sum_i Y_i (x) L^{r_i}.
TateMotive decompose_by_rank(const SpaceExpr& s);

/// Twists of the cohomology decomposition by codimension:
/// A^k(X) = sum_i A^{k - c_i}(Y_i).
TateMotive decompose_by_codim(const SpaceExpr& s);

/// Realized graded module of a Tate motive, degree by degree.
struct GradedModuleTable {
    ScalarField field = ScalarField::Integers;
    /// Every degree has the same rank (Laurent coefficient rings).
    bool periodic = false;
    std::size_t periodic_rank = 0;
    std::map<int, ModuleDescription> degrees;
    /// Lowest degree whose realization is fully inside a truncated
    /// coefficient ring; unset when every degree is known.
    std::optional<int> known_from;

    bool known(int k) const { return periodic || !known_from || k >= *known_from; }
    /// Throws TruncationExceeded below known_from.
    std::size_t rank(int k) const;
    /// Sum of ranks over the stored degrees (or the periodic rank).
    std::size_t total_rank() const;

    friend bool operator==(const GradedModuleTable& a, const GradedModuleTable& b);
};

/// A^k(M) = sum_j A^{k - n_j}(pt).
ModuleDescription realize(const TateMotive& m, const OrientedTheory& theory, int k);
GradedModuleTable realize_table(const TateMotive& m, const OrientedTheory& theory);

/// Degreewise sum of two tables over the same theory.
GradedModuleTable operator+(const GradedModuleTable& a, const GradedModuleTable& b);

/// Coefficient of t^k is the multiplicity of twist k.
std::vector<long long> poincare_polynomial(const TateMotive& m);

/// poincare(codim route)(t) == t^dim * poincare(rank route)(1/t).
bool duality_holds(const SpaceExpr& s);

} // namespace motivec
