#include "motivec/space_dsl.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace motivec {

DslError::DslError(DslErrorKind kind, SourcePosition pos, const std::string& message)
    : InvalidSpace(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), kind_(kind), pos_(pos)
{
}

std::optional<SpaceExpr> SpaceFile::find(std::string_view name) const
{
    for (const auto& [n, s] : declarations)
        if (n == name)
            return s;
    return std::nullopt;
}

SpaceExpr SpaceFile::result() const
{
    if (expression)
        return *expression;
    if (declarations.empty())
        throw InvalidSpace("space file declares nothing");
    return declarations.back().second;
}

namespace {

const std::set<std::string, std::less<>> reserved{"space", "cell", "base", "rank", "codim",
                                                  "point", "P",    "quadric", "Gr", "union"};

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    SourcePosition pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip();
            Token t;
            t.pos = pos_;
            if (i_ >= text_.size()) {
                t.type = Tok::End;
                out.push_back(t);
                return out;
            }
            const char c = text_[i_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.type = Tok::Ident;
                while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                    t.text += advance();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.type = Tok::Number;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                    t.text += advance();
            } else if (std::string_view("{}()=;,-").find(c) != std::string_view::npos) {
                t.type = Tok::Punct;
                t.text = advance();
            } else {
                throw DslError(DslErrorKind::Syntax, pos_, std::string("unexpected character '") + c + "'");
            }
            out.push_back(std::move(t));
        }
    }

private:
    char advance()
    {
        const char c = text_[i_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip()
    {
        while (i_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[i_]))) {
                advance();
            } else if (text_[i_] == '#') {
                while (i_ < text_.size() && text_[i_] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePosition pos_;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    SpaceFile run()
    {
        SpaceFile file;
        while (is_ident("space"))
            declaration(file);
        if (!at_end())
            file.expression = expression(file);
        if (!at_end())
            fail(DslErrorKind::Syntax, peek().pos, "unexpected '" + peek().text + "' after expression");
        if (file.declarations.empty() && !file.expression)
            fail(DslErrorKind::Syntax, peek().pos, "empty space description");
        return file;
    }

private:
    void declaration(SpaceFile& file)
    {
        next(); // 'space'
        const Token name = expect_ident("space name");
        if (reserved.count(name.text))
            fail(DslErrorKind::Syntax, name.pos, "'" + name.text + "' is a reserved word");
        if (file.find(name.text))
            fail(DslErrorKind::DuplicateName, name.pos, "space '" + name.text + "' is already declared");
        expect_punct("{");

        std::vector<Cell> cells;
        std::vector<SourcePosition> rank_pos, codim_pos, cell_pos;
        while (is_ident("cell")) {
            cell_pos.push_back(next().pos);
            expect_punct("{");
            expect_keyword("base");
            expect_punct("=");
            SpaceExpr base = expression(file);
            expect_punct(";");
            expect_keyword("rank");
            expect_punct("=");
            rank_pos.push_back(peek().pos);
            const int rank = natural("rank");
            expect_punct(";");
            expect_keyword("codim");
            expect_punct("=");
            codim_pos.push_back(peek().pos);
            const int codim = natural("codim");
            if (is_punct(";"))
                next();
            expect_punct("}");
            cells.push_back({std::move(base), rank, codim});
        }
        if (cells.empty())
            fail(DslErrorKind::Syntax, peek().pos, "expected 'cell' in space '" + name.text + "'");
        expect_punct("}");

        if (auto issue = validate_cells(cells)) {
            const auto i = issue->cell_index;
            switch (issue->kind) {
            case CellIssueKind::NegativeRank:
                fail(DslErrorKind::NegativeValue, rank_pos[i], issue->message);
            case CellIssueKind::NegativeCodim:
                fail(DslErrorKind::NegativeValue, codim_pos[i], issue->message);
            case CellIssueKind::FirstCodimNonzero:
            case CellIssueKind::NonIncreasingCodim:
                fail(DslErrorKind::NonIncreasingCodim, codim_pos[i], issue->message);
            case CellIssueKind::Equidimensionality:
                fail(DslErrorKind::Equidimensionality, cell_pos[i], issue->message);
            case CellIssueKind::Empty:
                fail(DslErrorKind::Syntax, name.pos, issue->message);
            }
        }
        file.declarations.emplace_back(name.text, SpaceExpr::cellular(name.text, std::move(cells)));
    }

    SpaceExpr expression(const SpaceFile& file)
    {
        const Token t = peek();
        if (t.type != Tok::Ident)
            fail(DslErrorKind::Syntax, t.pos, "expected space expression, got '" + t.text + "'");
        next();
        if (t.text == "point")
            return SpaceExpr::point();
        if (t.text == "P") {
            expect_punct("(");
            const int n = natural("dimension");
            expect_punct(")");
            return projective_space(n);
        }
        if (t.text == "quadric") {
            expect_punct("(");
            const int d = natural("quadric parameter");
            expect_punct(")");
            return quadric(d);
        }
        if (t.text == "Gr") {
            expect_punct("(");
            const int d = natural("Grassmannian d");
            expect_punct(",");
            const int n = natural("Grassmannian n");
            expect_punct(")");
            if (d > n)
                fail(DslErrorKind::InvalidBuiltin, t.pos, "Gr(d,n) needs d <= n");
            return grassmannian(d, n);
        }
        if (t.text == "union") {
            expect_punct("(");
            SpaceExpr a = expression(file);
            expect_punct(",");
            SpaceExpr b = expression(file);
            expect_punct(")");
            if (a.dim() != b.dim())
                fail(DslErrorKind::Equidimensionality, t.pos,
                     "union components have dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
            return SpaceExpr::disjoint_union({std::move(a), std::move(b)});
        }
        if (reserved.count(t.text))
            fail(DslErrorKind::Syntax, t.pos, "unexpected keyword '" + t.text + "'");
        if (auto s = file.find(t.text))
            return *s;
        fail(DslErrorKind::UnresolvedReference, t.pos, "unknown space '" + t.text + "'");
    }

    int natural(const std::string& what)
    {
        if (is_punct("-")) {
            const auto pos = next().pos;
            if (peek().type == Tok::Number)
                fail(DslErrorKind::NegativeValue, pos, what + " must be nonnegative");
            fail(DslErrorKind::Syntax, pos, "expected number for " + what);
        }
        const Token t = peek();
        if (t.type != Tok::Number)
            fail(DslErrorKind::Syntax, t.pos, "expected number for " + what + ", got '" + t.text + "'");
        next();
        int value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{})
            fail(DslErrorKind::Syntax, t.pos, what + " is out of range");
        return value;
    }

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
    bool at_end() const { return peek().type == Tok::End; }
    bool is_ident(std::string_view s) const { return peek().type == Tok::Ident && peek().text == s; }
    bool is_punct(std::string_view s) const { return peek().type == Tok::Punct && peek().text == s; }

    Token expect_ident(const std::string& what)
    {
        if (peek().type != Tok::Ident)
            fail(DslErrorKind::Syntax, peek().pos, "expected " + what);
        return next();
    }

    void expect_keyword(std::string_view kw)
    {
        if (!is_ident(kw))
            fail(DslErrorKind::Syntax, peek().pos, "expected '" + std::string(kw) + "', got '" + describe(peek()) + "'");
        next();
    }

    void expect_punct(std::string_view p)
    {
        if (!is_punct(p))
            fail(DslErrorKind::Syntax, peek().pos, "expected '" + std::string(p) + "', got '" + describe(peek()) + "'");
        next();
    }

    static std::string describe(const Token& t) { return t.type == Tok::End ? "end of input" : t.text; }

    [[noreturn]] static void fail(DslErrorKind kind, SourcePosition pos, const std::string& msg)
    {
        throw DslError(kind, pos, msg);
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

bool valid_name(const std::string& s)
{
    if (s.empty() || reserved.count(s) || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

class Printer {
public:
    std::string run(const SpaceExpr& s)
    {
        std::string expr = expression(s);
        if (s.kind() == SpaceKind::Cellular && !s.builtin())
            return out_;
        return out_ + expr + "\n";
    }

private:
    std::string expression(const SpaceExpr& s)
    {
        if (s.kind() == SpaceKind::Point)
            return "point";
        if (s.builtin())
            return s.name();
        if (s.kind() == SpaceKind::Union) {
            // nested binary unions, right-associated
            const auto& parts = s.parts();
            std::string e = expression(parts.back());
            for (std::size_t i = parts.size() - 1; i-- > 0;)
                e = "union(" + expression(parts[i]) + ", " + e + ")";
            return e;
        }
        if (auto it = printed_.find(s.id()); it != printed_.end())
            return it->second;

        std::vector<std::string> bases;
        for (const auto& c : s.cells())
            bases.push_back(expression(c.base));

        std::string name = valid_name(s.name()) ? s.name() : "space";
        if (used_.count(name)) {
            int k = 2;
            while (used_.count(name + "_" + std::to_string(k)))
                ++k;
            name += "_" + std::to_string(k);
        }
        used_.insert(name);
        printed_.emplace(s.id(), name);

        out_ += "space " + name + " {\n";
        for (std::size_t i = 0; i < s.cells().size(); ++i) {
            const auto& c = s.cells()[i];
            out_ += "  cell { base = " + bases[i] + "; rank = " + std::to_string(c.rank) +
                    "; codim = " + std::to_string(c.codim) + " }\n";
        }
        out_ += "}\n";
        return name;
    }

    std::string out_;
    std::map<const void*, std::string> printed_;
    std::set<std::string> used_;
};

} // namespace

SpaceFile parse_space_file(std::string_view text)
{
    return Parser(Lexer(text).run()).run();
}

SpaceExpr parse_space(std::string_view text)
{
    return parse_space_file(text).result();
}

std::string print_space(const SpaceExpr& s)
{
    return Printer().run(s);
}

} // namespace motivec
