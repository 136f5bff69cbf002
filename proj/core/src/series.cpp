#include "motivec/series.hpp"

#include "motivec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace motivec {

namespace {

int total_degree(const TruncatedSeries::Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

TruncatedSeries::TruncatedSeries(RingPtr ring, std::vector<std::string> variables, int order)
    : ring_(std::move(ring)), variables_(std::move(variables)), order_(order)
{
    if (order_ < 0)
        throw InvalidElement("series order must be nonnegative");
    for (std::size_t i = 0; i < variables_.size(); ++i)
        for (std::size_t j = i + 1; j < variables_.size(); ++j)
            if (variables_[i] == variables_[j])
                throw InvalidElement("duplicate series variable " + variables_[i]);
}

TruncatedSeries TruncatedSeries::zero(RingPtr ring, std::vector<std::string> variables, int order)
{
    return TruncatedSeries(std::move(ring), std::move(variables), order);
}

TruncatedSeries TruncatedSeries::constant(const GradedRingElement& c, std::vector<std::string> variables, int order)
{
    TruncatedSeries s(c.ring(), std::move(variables), order);
    s.set_coefficient(Exponents(s.variables_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, std::vector<std::string> variables, std::string_view name,
                                          int order)
{
    TruncatedSeries s(ring, std::move(variables), order);
    Exponents e(s.variables_.size(), 0);
    e[s.variable_index(name)] = 1;
    s.set_coefficient(e, GradedRingElement::one(std::move(ring)));
    return s;
}

std::size_t TruncatedSeries::variable_index(std::string_view name) const
{
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end())
        throw InvalidElement("unknown series variable " + std::string(name));
    return static_cast<std::size_t>(it - variables_.begin());
}

GradedRingElement TruncatedSeries::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GradedRingElement::zero(ring_) : it->second;
}

GradedRingElement TruncatedSeries::coefficient(int k) const
{
    if (variables_.size() != 1)
        throw InvalidElement("coefficient(k) requires a single-variable series");
    return coefficient(Exponents{k});
}

GradedRingElement TruncatedSeries::constant_term() const
{
    return coefficient(Exponents(variables_.size(), 0));
}

void TruncatedSeries::set_coefficient(const Exponents& e, const GradedRingElement& c)
{
    require_same_ring(ring_, c.ring(), "series coefficient");
    if (e.size() != variables_.size() || std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw InvalidElement("bad exponent vector for series");
    if (total_degree(e) > order_)
        return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_.insert_or_assign(e, c);
}

void TruncatedSeries::add_term(const Exponents& e, const GradedRingElement& c)
{
    if (total_degree(e) > order_ || c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        set_coefficient(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    TruncatedSeries r(ring_, variables_, std::min(order, order_));
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= r.order_)
            r.terms_.emplace(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::with_variables(std::vector<std::string> variables) const
{
    TruncatedSeries r(ring_, std::move(variables), order_);
    for (const auto& [e, c] : terms_) {
        Exponents ne(r.variables_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                ne[r.variable_index(variables_[i])] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::in_ring(RingPtr ring) const
{
    TruncatedSeries r(ring, variables_, order_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c.in_ring(ring));
    return r;
}

bool TruncatedSeries::is_homogeneous_of_degree(int d) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.second.is_homogeneous_of(d - total_degree(t.first)); });
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o, std::string_view what) const
{
    require_same_ring(ring_, o.ring_, what);
    if (variables_ != o.variables_)
        throw InvalidElement(std::string(what) + ": series variable lists differ");
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    check_compatible(o, "series_add");
    if (o.order_ < order_)
        *this = truncated(o.order_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    return *this += -o;
}

TruncatedSeries& TruncatedSeries::operator*=(const GradedRingElement& c)
{
    require_same_ring(ring_, c.ring(), "series scale");
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    a.check_compatible(b, "series_mul");
    TruncatedSeries r(a.ring_, a.variables_, std::min(a.order_, b.order_));
    TruncatedSeries::Exponents e(a.variables_.size());
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        if (da > r.order_)
            continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > r.order_)
                continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!same_ring(a.ring_, b.ring_) || a.variables_ != b.variables_)
        return false;
    const int n = std::min(a.order_, b.order_);
    return a.truncated(n).terms_ == b.truncated(n).terms_;
}

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    // by total degree, then lexicographically descending so x^2 precedes xy.
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        const int da = total_degree(a->first), db = total_degree(b->first);
        return da != db ? da < db : a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        std::string mono;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += variables_[i];
            if (t->first[i] != 1)
                mono += '^' + std::to_string(t->first[i]);
        }
        std::string coeff = t->second.to_string();
        bool negative = false;
        if (t->second.term_count() == 1 && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        } else if (t->second.term_count() > 1) {
            coeff = "(" + coeff + ")";
        }
        std::string term;
        if (mono.empty())
            term = coeff;
        else if (coeff == "1")
            term = mono;
        else
            term = coeff + "*" + mono;
        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

TruncatedSeries TruncatedSeries::parse(RingPtr ring, std::vector<std::string> variables, int order,
                                       std::string_view text)
{
    TruncatedSeries result(ring, variables, order);
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) {
        throw InvalidElement("cannot parse series '" + std::string(text) + "' at offset " + std::to_string(pos) +
                             ": " + msg);
    };
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto is_variable_at = [&](std::size_t p) -> std::optional<std::size_t> {
        std::size_t end = p;
        while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            ++end;
        auto word = text.substr(p, end - p);
        for (std::size_t i = 0; i < result.variables_.size(); ++i)
            if (result.variables_[i] == word)
                return i;
        return std::nullopt;
    };

    skip();
    if (pos == text.size())
        fail("empty series");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        GradedRingElement coeff = GradedRingElement::one(ring);
        Exponents e(result.variables_.size(), 0);
        for (;;) {
            skip();
            if (pos == text.size())
                fail("expected factor");
            if (text[pos] == '(') {
                auto close = text.find(')', pos);
                if (close == std::string_view::npos)
                    fail("unbalanced parenthesis");
                coeff *= GradedRingElement::parse(ring, text.substr(pos + 1, close - pos - 1));
                pos = close + 1;
            } else if (auto vi = is_variable_at(pos)) {
                pos += result.variables_[*vi].size();
                int power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    std::size_t start = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        ++pos;
                    if (start == pos)
                        fail("expected exponent");
                    power = std::stoi(std::string(text.substr(start, pos - start)));
                }
                e[*vi] += power;
            } else {
                // a ring factor: scalar or generator power, up to the next '*', '+', '-'
                std::size_t end = pos;
                while (end < text.size() && text[end] != '*' && text[end] != '+' &&
                       !(text[end] == '-' && end > pos && text[end - 1] != '^'))
                    ++end;
                coeff *= GradedRingElement::parse(ring, text.substr(pos, end - pos));
                pos = end;
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (sign < 0)
            coeff = -coeff;
        result.add_term(e, coeff);
    }
    return result;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a + b;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a * b;
}

TruncatedSeries series_pow(const TruncatedSeries& a, int n)
{
    if (n < 0)
        throw InvalidElement("series_pow: negative exponent");
    TruncatedSeries r = TruncatedSeries::constant(GradedRingElement::one(a.ring()), a.variables(), a.order());
    for (int i = 0; i < n; ++i)
        r = r * a;
    return r;
}

TruncatedSeries compose(const TruncatedSeries& s, const std::vector<TruncatedSeries>& images)
{
    if (images.size() != s.variables().size())
        throw InvalidElement("compose: need one image per variable");
    if (images.empty())
        throw InvalidElement("compose: nothing to substitute");
    const auto& vars = images.front().variables();
    int order = s.order();
    for (const auto& img : images) {
        require_same_ring(s.ring(), img.ring(), "compose");
        if (img.variables() != vars)
            throw InvalidElement("compose: images must share a variable list");
        if (!img.constant_term().is_zero())
            throw ConstantTermError("compose: substituted series must have zero constant term");
        order = std::min(order, img.order());
    }

    // powers[i][k] = images[i]^k
    std::vector<std::vector<TruncatedSeries>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        int max_e = 0;
        for (const auto& [e, c] : s.terms())
            max_e = std::max(max_e, e[i]);
        max_e = std::min(max_e, order);
        powers[i].push_back(TruncatedSeries::constant(GradedRingElement::one(s.ring()), vars, order));
        for (int k = 1; k <= max_e; ++k)
            powers[i].push_back(powers[i].back() * images[i].truncated(order));
    }

    TruncatedSeries result(s.ring(), vars, order);
    for (const auto& [e, c] : s.terms()) {
        int deg = 0;
        for (int x : e)
            deg += x;
        if (deg > order)
            continue;
        TruncatedSeries term = TruncatedSeries::constant(c, vars, order);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                term = term * powers[i][e[i]];
        result += term;
    }
    return result;
}

TruncatedSeries series_substitute(const TruncatedSeries& s, std::string_view var, const TruncatedSeries& t)
{
    const auto idx = s.variable_index(var);
    std::vector<TruncatedSeries> images;
    for (std::size_t i = 0; i < s.variables().size(); ++i)
        images.push_back(i == idx ? t : TruncatedSeries::variable(s.ring(), s.variables(), s.variables()[i], s.order()));
    return compose(s, images);
}

TruncatedSeries series_reversion(const TruncatedSeries& s)
{
    if (s.variables().size() != 1)
        throw InvalidElement("series_reversion: single-variable series required");
    if (!s.constant_term().is_zero())
        throw ConstantTermError("series_reversion: nonzero constant term");
    const GradedRingElement a1 = s.coefficient(1);
    if (!a1.is_constant() || a1.is_zero())
        throw NonUnitLinearTerm("series_reversion: linear coefficient is not a unit");
    const Scalar lead = a1.constant_term();
    const Scalar inv = 1 / lead;
    if (s.ring()->field() == ScalarField::Integers && inv.get_den() != 1)
        throw NonUnitLinearTerm("series_reversion: linear coefficient is not a unit over Z");

    const int n = s.order();
    TruncatedSeries g(s.ring(), s.variables(), n);
    g.set_coefficient({1}, GradedRingElement(s.ring(), inv));
    for (int k = 2; k <= n; ++k) {
        // correct the x^k coefficient of s(g) to zero
        const GradedRingElement err = compose(s.truncated(k), {g.truncated(k)}).coefficient(k);
        if (!err.is_zero())
            g.add_term({k}, -(err * inv));
    }
    return g;
}

TruncatedSeries series_unit_inverse(const TruncatedSeries& s)
{
    if (s.variables().size() != 1)
        throw InvalidElement("series_unit_inverse: single-variable series required");
    if (s.constant_term() != GradedRingElement::one(s.ring()))
        throw InvalidElement("series_unit_inverse: constant term must be 1");
    // (1 + u)^{-1} = sum (-u)^k
    const TruncatedSeries one = TruncatedSeries::constant(GradedRingElement::one(s.ring()), s.variables(), s.order());
    const TruncatedSeries minus_u = one - s;
    TruncatedSeries result = one;
    TruncatedSeries power = one;
    for (int k = 1; k <= s.order(); ++k) {
        power = power * minus_u;
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

} // namespace motivec
