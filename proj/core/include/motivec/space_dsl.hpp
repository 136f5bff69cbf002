#pragma once

#include "motivec/cellular.hpp"
#include "motivec/errors.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivec {

// Space description language:
//
//   file  := decl* [expr]
//   decl  := 'space' NAME '{' cell+ '}'
//   cell  := 'cell' '{' 'base' '=' expr ';' 'rank' '=' NAT ';' 'codim' '=' NAT [';'] '}'
//   expr  := 'point' | 'P(' NAT ')' | 'quadric(' NAT ')' | 'Gr(' NAT ',' NAT ')'
//          | 'union(' expr ',' expr ')' | NAME
//
// Whitespace-insensitive, '#' starts a line comment. Names resolve in file
// order only.

struct SourcePosition {
    int line = 1;
    int column = 1;
};

enum class DslErrorKind {
    Syntax,
    UnresolvedReference,
    DuplicateName,
    NegativeValue,
    NonIncreasingCodim,
    Equidimensionality,
    InvalidBuiltin,
};

class DslError : public InvalidSpace {
public:
    DslError(DslErrorKind kind, SourcePosition pos, const std::string& message);

    DslErrorKind kind() const { return kind_; }
    SourcePosition position() const { return pos_; }

private:
    DslErrorKind kind_;
    SourcePosition pos_;
};

struct SpaceFile {
    std::vector<std::pair<std::string, SpaceExpr>> declarations;
    std::optional<SpaceExpr> expression;

    std::optional<SpaceExpr> find(std::string_view name) const;
    /// The trailing expression, or else the last declaration.
    SpaceExpr result() const;
};

SpaceFile parse_space_file(std::string_view text);
SpaceExpr parse_space(std::string_view text);

/// Renders s so that parse_space(print_space(s)) == s. User spaces become
/// declarations (dependencies first); builtins print as expressions.
std::string print_space(const SpaceExpr& s);

} // namespace motivec
