#pragma once

#include "motivec/cellular.hpp"
#include "motivec/correspondence.hpp"
#include "motivec/graded_ring.hpp"
#include "motivec/theory.hpp"

#include <random>

namespace motivec::random {

using Engine = std::mt19937_64;

int uniform(Engine& rng, int lo, int hi);

/// Mixed-degree element with a few small-coefficient terms.
GradedRingElement element(const RingPtr& ring, Engine& rng, int max_terms = 4);
/// Random element of A^k(pt); zero when the component is empty or truncated.
GradedRingElement homogeneous(const RingPtr& ring, int k, Engine& rng);

ProjectiveSpaceElement projective_element(const TheoryPtr& theory, int m, Engine& rng);
/// Homogeneous element of A^k(P^m).
ProjectiveSpaceElement homogeneous_projective_element(const TheoryPtr& theory, int m, int k, Engine& rng);

TateMotive motive(Engine& rng, int max_size = 4, int max_twist = 4);
Correspondence correspondence(const RingPtr& ring, const TateMotive& source, const TateMotive& target, int degree,
                              Engine& rng);
/// Degree-0 idempotent on m built as A D A^{-1} with A unimodular, blocked by
/// twist unless the ring has a unit of every degree.
Correspondence idempotent(const RingPtr& ring, const TateMotive& m, Engine& rng);

/// Well-formed user space mixing builtins and nested user declarations.
SpaceExpr space(Engine& rng, int depth = 2);

} // namespace motivec::random
