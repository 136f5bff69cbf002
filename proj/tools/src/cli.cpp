#include "cli.hpp"

#include "motivec/cellular.hpp"
#include "motivec/checks.hpp"
#include "motivec/correspondence.hpp"
#include "motivec/decompose.hpp"
#include "motivec/errors.hpp"
#include "motivec/space_dsl.hpp"
#include "motivec/theory.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace motivec::cli {

namespace {

using nlohmann::json;

// Thrown for bad input; becomes exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_nat(std::string_view text, std::string_view what)
{
    int value = -1;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
        throw UsageError(fmt::format("bad {} '{}': expected a nonnegative integer", what, text));
    return value;
}

SpaceExpr builtin_space(const std::string& sel)
{
    if (sel == "point")
        return SpaceExpr::point();
    auto colon = sel.find(':');
    if (colon == std::string::npos)
        throw UsageError(fmt::format("unknown space '{}' (expected point, P:n, quadric:d, Gr:d,n)", sel));
    const std::string head = sel.substr(0, colon);
    const std::string_view args = std::string_view(sel).substr(colon + 1);
    if (head == "P")
        return projective_space(parse_nat(args, "dimension"));
    if (head == "quadric")
        return quadric(parse_nat(args, "quadric dimension"));
    if (head == "Gr") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos)
            throw UsageError(fmt::format("bad Grassmannian selector '{}' (expected Gr:d,n)", sel));
        const int d = parse_nat(args.substr(0, comma), "Grassmannian d");
        const int n = parse_nat(args.substr(comma + 1), "Grassmannian n");
        if (d > n)
            throw UsageError(fmt::format("Gr:{},{} needs d <= n", d, n));
        return grassmannian(d, n);
    }
    throw UsageError(fmt::format("unknown space '{}' (expected point, P:n, quadric:d, Gr:d,n)", sel));
}

SpaceExpr load_space(const RunConfig& c)
{
    if (!c.file)
        return builtin_space(c.space);
    std::ifstream in(*c.file);
    if (!in)
        throw UsageError(fmt::format("cannot open '{}'", *c.file));
    std::stringstream buf;
    buf << in.rdbuf();
    SpaceFile parsed;
    try {
        parsed = parse_space_file(buf.str());
    } catch (const DslError& e) {
        throw UsageError(fmt::format("{}:{}:{}: {}", *c.file, e.position().line, e.position().column, e.what()));
    }
    if (c.space.empty())
        return parsed.result();
    auto found = parsed.find(c.space);
    if (!found)
        throw UsageError(fmt::format("{}: no space named '{}'", *c.file, c.space));
    return *found;
}

TheoryPtr select_theory(const RunConfig& c)
{
    const bool universal = c.theory.starts_with("universal");
    if (!universal && c.truncation)
        throw UsageError(fmt::format("--truncation only applies to universal theories, not '{}'", c.theory));
    if (universal && c.theory.size() > 9 && c.truncation) {
        auto n = parse_nat(std::string_view(c.theory).substr(10), "truncation");
        if (n != *c.truncation)
            throw UsageError(fmt::format("conflicting truncations {} and {}", n, *c.truncation));
    }
    try {
        return OrientedTheory::from_selector(c.theory, c.truncation);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string group_symbol(const OrientedTheory& t)
{
    if (t.name() == "chow")
        return "CH";
    if (t.name() == "k0")
        return "K0";
    return "A";
}

std::string basis_text(const RingDescriptor& ring, const BasisElement& b)
{
    const auto mono = format_monomial(ring, b.monomial);
    return mono == "1" ? fmt::format("L^{}", b.twist) : fmt::format("{}*L^{}", mono, b.twist);
}

std::string table_text(const GradedModuleTable& table, const OrientedTheory& theory)
{
    const auto& ring = *theory.ring();
    const auto sym = group_symbol(theory);
    std::string out;
    if (table.periodic) {
        out += fmt::format("{}^k: rank {} in every degree k (beta-periodic)\n", sym, table.periodic_rank);
        return out;
    }
    for (const auto& [k, desc] : table.degrees) {
        std::vector<std::string> names;
        for (const auto& b : desc.basis)
            names.push_back(basis_text(ring, b));
        out += fmt::format("{}^{}: rank {}  [{}]\n", sym, k, desc.rank(), fmt::join(names, ", "));
    }
    if (table.degrees.empty())
        out += fmt::format("{}^*: 0\n", sym);
    if (table.known_from)
        out += fmt::format("(degrees below {} exceed the truncation)\n", *table.known_from);
    return out;
}

json groups_json(const GradedModuleTable& table)
{
    json groups = json::object();
    if (table.periodic) {
        groups["0"] = table.periodic_rank;
        return groups;
    }
    for (const auto& [k, desc] : table.degrees)
        groups[std::to_string(k)] = desc.rank();
    return groups;
}

std::string join_ints(const std::vector<long long>& v)
{
    return fmt::format("{}", fmt::join(v, " "));
}

RunResult run_checks(const RunConfig& c)
{
    RunResult r;
    const auto results = run_all_checks(c.seed);
    std::size_t failed = 0;
    json items = json::array();
    for (const auto& res : results) {
        failed += res.passed ? 0 : 1;
        if (c.format == Format::Json) {
            json item = {{"suite", res.suite}, {"name", res.name}, {"passed", res.passed}};
            if (!res.detail.empty())
                item["detail"] = res.detail;
            items.push_back(std::move(item));
        } else {
            r.out += fmt::format("{} {}/{}{}\n", res.passed ? "PASS" : "FAIL", res.suite, res.name,
                                 res.detail.empty() ? "" : ": " + res.detail);
        }
    }
    if (c.format == Format::Json)
        r.out = json{{"checks", items}, {"failed", failed}, {"total", results.size()}}.dump(2) + "\n";
    else
        r.out += fmt::format("{} of {} checks passed\n", results.size() - failed, results.size());
    r.exit_code = failed ? exit_invariant : exit_ok;
    return r;
}

RunResult run_space(const RunConfig& c)
{
    const auto space = load_space(c);
    const auto theory = select_theory(c);
    const std::string space_name = c.file ? (c.space.empty() ? space.name() : c.space) : c.space;

    const bool dual = c.mode == Mode::Dual;
    const auto motive = dual ? decompose_by_codim(space) : decompose_by_rank(space);
    RunResult r;

    if (c.format == Format::Json) {
        json doc;
        doc["space"] = space_name;
        doc["theory"] = theory->name();
        doc["dim"] = space.dim();
        doc["twists"] = motive.twists();
        doc["groups"] = groups_json(realize_table(motive, *theory));
        doc["poincare"] = poincare_polynomial(motive);
        if (dual)
            doc["duality_ok"] = duality_holds(space);
        r.out = doc.dump() + "\n";
        if (dual && !doc["duality_ok"].get<bool>()) {
            r.err = "duality check failed\n";
            r.exit_code = exit_invariant;
        }
        return r;
    }

    switch (c.mode) {
    case Mode::Motive:
        r.out = motive.empty() ? "0\n" : motive.to_string() + "\n";
        break;
    case Mode::Groups:
        r.out = table_text(realize_table(motive, *theory), *theory);
        break;
    case Mode::Poincare:
        r.out = join_ints(poincare_polynomial(motive)) + "\n";
        break;
    case Mode::Dual: {
        const bool ok = duality_holds(space);
        r.out = fmt::format("codim route: {}\n", motive.empty() ? "0" : motive.to_string());
        r.out += table_text(realize_table(motive, *theory), *theory);
        r.out += fmt::format("poincare: {}\n", join_ints(poincare_polynomial(motive)));
        r.out += fmt::format("duality: {}\n", ok ? "ok" : "FAILED");
        if (!ok)
            r.exit_code = exit_invariant;
        break;
    }
    case Mode::Check:
        break;
    }
    return r;
}

} // namespace

RunResult run(const RunConfig& config)
{
    try {
        if (config.mode == Mode::Check)
            return run_checks(config);
        return run_space(config);
    } catch (const UsageError& e) {
        return {"", fmt::format("motivec: {}\n", e.what()), exit_invalid};
    } catch (const InvalidSpace& e) {
        return {"", fmt::format("motivec: {}\n", e.what()), exit_invalid};
    } catch (const TruncationExceeded& e) {
        return {"", fmt::format("motivec: {}\n", e.what()), exit_invalid};
    } catch (const std::exception& e) {
        return {"", fmt::format("motivec: internal error: {}\n", e.what()), exit_invariant};
    }
}

RunResult run_args(const std::vector<std::string>& args, std::optional<std::string> env_truncation)
{
    RunConfig config;
    CLI::App app{"Tate-motive decompositions of relative cellular spaces", "motivec"};
    std::optional<std::string> file;
    std::optional<int> truncation;
    app.add_option("--space", config.space, "point, P:n, quadric:d, Gr:d,n, or a declaration name with --file");
    app.add_option("--file", file, "space description file");
    app.add_option("--theory", config.theory, "chow, k0 or universal:N")->capture_default_str();
    const std::map<std::string, Mode> modes{{"motive", Mode::Motive},
                                            {"groups", Mode::Groups},
                                            {"poincare", Mode::Poincare},
                                            {"dual", Mode::Dual},
                                            {"check", Mode::Check}};
    const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    std::string mode = "motive", format = "text";
    app.add_option("--mode", mode, "motive, groups, poincare, dual or check")
        ->check(CLI::IsMember({"motive", "groups", "poincare", "dual", "check"}))
        ->capture_default_str();
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--truncation", truncation, "truncation N for the universal theory")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", config.seed, "seed for --mode check");

    std::vector<std::string> argv_store{"motivec"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    std::ostringstream out, err;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {out.str(), err.str(), code == 0 ? exit_ok : exit_invalid};
    }

    config.mode = modes.at(mode);
    config.format = formats.at(format);
    if (file) {
        config.file = file;
        if (app.count("--space") == 0)
            config.space.clear();
    }
    config.truncation = truncation;
    if (!config.truncation && env_truncation && config.theory == "universal") {
        try {
            config.truncation = parse_nat(*env_truncation, "MOTIVEC_TRUNCATION");
        } catch (const UsageError& e) {
            return {"", fmt::format("motivec: {}\n", e.what()), exit_invalid};
        }
    }
    return run(config);
}

} // namespace motivec::cli
