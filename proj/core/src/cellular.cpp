#include "motivec/cellular.hpp"

#include "motivec/errors.hpp"

#include <map>

namespace motivec {

struct SpaceExpr::Node {
    SpaceKind kind = SpaceKind::Point;
    std::string name;
    bool builtin = false;
    std::vector<Cell> cells;
    std::vector<SpaceExpr> parts;
    int dim = 0;
};

SpaceExpr SpaceExpr::point()
{
    static const SpaceExpr pt = [] {
        auto node = std::make_shared<Node>();
        node->name = "point";
        node->builtin = true;
        return SpaceExpr(std::move(node));
    }();
    return pt;
}

std::optional<CellIssue> validate_cells(const std::vector<Cell>& cells)
{
    if (cells.empty())
        return CellIssue{CellIssueKind::Empty, 0, "cellular space needs at least one cell"};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        if (c.rank < 0)
            return CellIssue{CellIssueKind::NegativeRank, i, "cell " + std::to_string(i) + " has negative rank"};
        if (c.codim < 0)
            return CellIssue{CellIssueKind::NegativeCodim, i, "cell " + std::to_string(i) + " has negative codim"};
        if (i == 0 && c.codim != 0)
            return CellIssue{CellIssueKind::FirstCodimNonzero, 0, "first cell must have codim 0"};
        if (i > 0 && c.codim <= cells[i - 1].codim)
            return CellIssue{CellIssueKind::NonIncreasingCodim, i,
                             "codims must be strictly increasing (cell " + std::to_string(i) + ")"};
    }
    const int expected = cells[0].codim + cells[0].rank + cells[0].base.dim();
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const auto& c = cells[i];
        const int d = c.codim + c.rank + c.base.dim();
        if (d != expected)
            return CellIssue{CellIssueKind::Equidimensionality, i,
                             "cell " + std::to_string(i) + " gives dimension " + std::to_string(d) + ", cell 0 gives " +
                                 std::to_string(expected)};
    }
    return std::nullopt;
}

SpaceExpr SpaceExpr::cellular(std::string name, std::vector<Cell> cells, bool builtin)
{
    if (auto issue = validate_cells(cells)) {
        if (issue->kind == CellIssueKind::Equidimensionality)
            throw EquidimensionalityViolation(name + ": " + issue->message);
        throw InvalidSpace(name + ": " + issue->message);
    }
    auto node = std::make_shared<Node>();
    node->kind = SpaceKind::Cellular;
    node->name = std::move(name);
    node->builtin = builtin;
    node->dim = cells[0].codim + cells[0].rank + cells[0].base.dim();
    node->cells = std::move(cells);
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::disjoint_union(std::vector<SpaceExpr> parts, std::string name, bool builtin)
{
    if (parts.empty())
        throw InvalidSpace("disjoint union needs at least one component");
    for (const auto& p : parts)
        if (p.dim() != parts.front().dim())
            throw EquidimensionalityViolation("disjoint union components have different dimensions");
    auto node = std::make_shared<Node>();
    node->kind = SpaceKind::Union;
    node->name = std::move(name);
    node->builtin = builtin;
    node->dim = parts.front().dim();
    node->parts = std::move(parts);
    return SpaceExpr(std::move(node));
}

SpaceKind SpaceExpr::kind() const { return node_->kind; }
const std::string& SpaceExpr::name() const { return node_->name; }
bool SpaceExpr::builtin() const { return node_->builtin; }
const std::vector<Cell>& SpaceExpr::cells() const { return node_->cells; }
const std::vector<SpaceExpr>& SpaceExpr::parts() const { return node_->parts; }
int SpaceExpr::dim() const { return node_->dim; }

bool operator==(const SpaceExpr& a, const SpaceExpr& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.dim() != b.dim())
        return false;
    switch (a.kind()) {
    case SpaceKind::Point:
        return true;
    case SpaceKind::Cellular:
        return a.cells() == b.cells();
    case SpaceKind::Union:
        return a.parts() == b.parts();
    }
    return false;
}

int dim(const SpaceExpr& s)
{
    return s.dim();
}

SpaceExpr projective_space(int n)
{
    if (n < 0)
        throw InvalidSpace("projective_space: negative dimension");
    std::vector<Cell> cells;
    for (int i = 0; i <= n; ++i)
        cells.push_back({SpaceExpr::point(), n - i, i});
    return SpaceExpr::cellular("P(" + std::to_string(n) + ")", std::move(cells), true);
}

SpaceExpr quadric(int d)
{
    if (d < 0)
        throw InvalidSpace("quadric: negative d");
    const std::string name = "quadric(" + std::to_string(d) + ")";
    if (d == 0)
        return SpaceExpr::disjoint_union({SpaceExpr::point(), SpaceExpr::point()}, name, true);
    const auto pd = projective_space(d);
    return SpaceExpr::cellular(name, {{pd, d, 0}, {pd, 0, d}}, true);
}

namespace {

SpaceExpr grassmannian_memo(int d, int n, std::map<std::pair<int, int>, SpaceExpr>& memo)
{
    if (d == 0 || d == n)
        return SpaceExpr::point();
    if (auto it = memo.find({d, n}); it != memo.end())
        return it->second;
    std::vector<Cell> cells;
    for (int i = 0; i <= n - d; ++i)
        cells.push_back({grassmannian_memo(d - 1, n - 1 - i, memo), n - i - d, d * i});
    auto s = SpaceExpr::cellular("Gr(" + std::to_string(d) + "," + std::to_string(n) + ")", std::move(cells), true);
    memo.emplace(std::pair{d, n}, s);
    return s;
}

} // namespace

SpaceExpr grassmannian(int d, int n)
{
    if (d < 0 || n < 0 || d > n)
        throw InvalidSpace("grassmannian: need 0 <= d <= n, got d=" + std::to_string(d) + ", n=" + std::to_string(n));
    std::map<std::pair<int, int>, SpaceExpr> memo;
    return grassmannian_memo(d, n, memo);
}

SpaceExpr normalized(const SpaceExpr& s)
{
    switch (s.kind()) {
    case SpaceKind::Point:
        return s;
    case SpaceKind::Cellular: {
        if (s.cells().size() == 1 && s.cells()[0].rank == 0 && s.cells()[0].codim == 0)
            return normalized(s.cells()[0].base);
        std::vector<Cell> cells;
        for (const auto& c : s.cells())
            cells.push_back({normalized(c.base), c.rank, c.codim});
        return SpaceExpr::cellular(s.name(), std::move(cells), s.builtin());
    }
    case SpaceKind::Union: {
        if (s.parts().size() == 1)
            return normalized(s.parts()[0]);
        std::vector<SpaceExpr> parts;
        for (const auto& p : s.parts())
            parts.push_back(normalized(p));
        return SpaceExpr::disjoint_union(std::move(parts), s.name(), s.builtin());
    }
    }
    return s;
}

std::size_t cell_count(const SpaceExpr& s)
{
    switch (s.kind()) {
    case SpaceKind::Point:
        return 1;
    case SpaceKind::Cellular: {
        std::size_t total = 0;
        for (const auto& c : s.cells())
            total += cell_count(c.base);
        return total;
    }
    case SpaceKind::Union: {
        std::size_t total = 0;
        for (const auto& p : s.parts())
            total += cell_count(p);
        return total;
    }
    }
    return 0;
}

} // namespace motivec
