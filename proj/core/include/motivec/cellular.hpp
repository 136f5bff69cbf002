#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace motivec {

struct Cell;

enum class SpaceKind { Point, Cellular, Union };

/// Immutable description of a relative cellular space: a point, a filtration
/// whose strata are affine bundles over smaller spaces, or a disjoint union
/// of equidimensional spaces.
class SpaceExpr {
public:
    static SpaceExpr point();
    /// Validates the filtration: nonempty, codims strictly increasing from 0,
    /// nonnegative ranks, and equal c_i + r_i + dim(Y_i) across cells.
    static SpaceExpr cellular(std::string name, std::vector<Cell> cells, bool builtin = false);
    static SpaceExpr disjoint_union(std::vector<SpaceExpr> parts, std::string name = {}, bool builtin = false);

    SpaceKind kind() const;
    /// Declaration name, or the builtin expression ("P(3)", "Gr(2,4)").
    const std::string& name() const;
    bool builtin() const;
    const std::vector<Cell>& cells() const;
    const std::vector<SpaceExpr>& parts() const;
    int dim() const;

    /// Structural equality: names and builtin tags are ignored.
    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

    /// Identity of the underlying node (for memoization).
    const void* id() const { return node_.get(); }

private:
    struct Node;
    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Cell {
    SpaceExpr base;
    int rank = 0;
    int codim = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

enum class CellIssueKind { Empty, NegativeRank, NegativeCodim, FirstCodimNonzero, NonIncreasingCodim, Equidimensionality };

struct CellIssue {
    CellIssueKind kind;
    std::size_t cell_index = 0;
    std::string message;
};

/// First well-formedness problem of a cell list, if any.
std::optional<CellIssue> validate_cells(const std::vector<Cell>& cells);

int dim(const SpaceExpr& s);

SpaceExpr projective_space(int n);
SpaceExpr quadric(int d);
SpaceExpr grassmannian(int d, int n);

/// Collapses trivial wrappers: a single cell of rank 0 and codim 0 becomes
/// its base, a one-component union becomes the component.
SpaceExpr normalized(const SpaceExpr& s);

/// Number of leaves of the full cell recursion (the total Tate rank).
std::size_t cell_count(const SpaceExpr& s);

} // namespace motivec
