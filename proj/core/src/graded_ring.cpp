#include "motivec/graded_ring.hpp"

#include "motivec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace motivec {

std::string to_string(ScalarField f)
{
    return f == ScalarField::Integers ? "integers" : "rationals";
}

RingDescriptor::RingDescriptor(std::string name, std::vector<Generator> generators, ScalarField field,
                               std::optional<int> truncation)
    : name_(std::move(name)), generators_(std::move(generators)), field_(field), truncation_(truncation)
{
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.symbol.empty())
            throw InvalidElement("generator symbol must be nonempty");
        if (!seen.insert(g.symbol).second)
            throw InvalidElement("duplicate generator symbol '" + g.symbol + "' in ring " + name_);
    }
    if (truncation_ && *truncation_ < 0)
        throw InvalidElement("ring truncation must be nonnegative");
}

RingPtr RingDescriptor::chow()
{
    static const RingPtr ring = std::make_shared<const RingDescriptor>("CHOW", std::vector<Generator>{},
                                                                       ScalarField::Integers);
    return ring;
}

RingPtr RingDescriptor::k0()
{
    static const RingPtr ring = std::make_shared<const RingDescriptor>(
        "K0", std::vector<Generator>{{"beta", -1, true}}, ScalarField::Integers);
    return ring;
}

RingPtr RingDescriptor::universal(int n)
{
    if (n < 0)
        throw InvalidElement("universal truncation must be nonnegative");
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back({"m_" + std::to_string(i), -i, false});
    return std::make_shared<const RingDescriptor>("UNIVERSAL(" + std::to_string(n) + ")", std::move(gens),
                                                  ScalarField::Rationals, n);
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view symbol) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].symbol == symbol)
            return i;
    return std::nullopt;
}

int RingDescriptor::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * generators_[i].degree;
    return d;
}

bool RingDescriptor::retains(const Monomial& m) const
{
    return !truncation_ || std::abs(degree(m)) <= *truncation_;
}

bool RingDescriptor::valid_monomial(const Monomial& m) const
{
    if (m.size() != generators_.size())
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < 0 && !generators_[i].invertible)
            return false;
    return true;
}

std::optional<Monomial> RingDescriptor::unit_of_degree(int d) const
{
    Monomial m = unit_monomial();
    if (d == 0)
        return m;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.invertible && g.degree != 0 && d % g.degree == 0) {
            m[i] = d / g.degree;
            if (retains(m))
                return m;
            m[i] = 0;
        }
    }
    return std::nullopt;
}

RingPtr RingDescriptor::rationalized() const
{
    if (field_ == ScalarField::Rationals)
        return std::make_shared<const RingDescriptor>(*this);
    return std::make_shared<const RingDescriptor>(name_ + "_Q", generators_, ScalarField::Rationals, truncation_);
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what)
{
    if (!same_ring(a, b))
        throw RingMismatch(std::string(what) + ": ring mismatch (" + (a ? a->name() : "null") + " vs " +
                           (b ? b->name() : "null") + ")");
}

bool display_before(const RingDescriptor& ring, const Monomial& a, const Monomial& b)
{
    const int da = ring.degree(a), db = ring.degree(b);
    if (da != db)
        return da > db;
    auto weight = [](const Monomial& m) {
        return std::accumulate(m.begin(), m.end(), 0, [](int s, int e) { return s + std::abs(e); });
    };
    const int wa = weight(a), wb = weight(b);
    if (wa != wb)
        return wa < wb;
    return a > b;
}

// GradedRingElement ---------------------------------------------------------

GradedRingElement::GradedRingElement(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw InvalidElement("element requires a ring");
}

GradedRingElement::GradedRingElement(RingPtr ring, const Scalar& constant) : GradedRingElement(std::move(ring))
{
    terms_.emplace(ring_->unit_monomial(), constant);
    normalize();
}

GradedRingElement::GradedRingElement(RingPtr ring, Terms terms) : GradedRingElement(std::move(ring))
{
    terms_ = std::move(terms);
    normalize();
}

void GradedRingElement::normalize()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!ring_->valid_monomial(it->first))
            throw InvalidElement("invalid monomial for ring " + ring_->name());
        it->second.canonicalize();
        if (ring_->field() == ScalarField::Integers && it->second.get_den() != 1)
            throw InvalidElement("non-integral scalar in ring " + ring_->name());
        if (sgn(it->second) == 0 || !ring_->retains(it->first))
            it = terms_.erase(it);
        else
            ++it;
    }
}

GradedRingElement GradedRingElement::monomial(RingPtr ring, Monomial m, const Scalar& c)
{
    Terms t;
    t.emplace(std::move(m), c);
    return GradedRingElement(std::move(ring), std::move(t));
}

GradedRingElement GradedRingElement::generator(RingPtr ring, std::string_view symbol, int power)
{
    auto idx = ring->index_of(symbol);
    if (!idx)
        throw InvalidElement("unknown generator '" + std::string(symbol) + "' in ring " + ring->name());
    Monomial m = ring->unit_monomial();
    m[*idx] = power;
    return monomial(std::move(ring), std::move(m));
}

Scalar GradedRingElement::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar GradedRingElement::constant_term() const
{
    return coefficient(ring_->unit_monomial());
}

bool GradedRingElement::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ring_->unit_monomial());
}

std::vector<int> GradedRingElement::degrees() const
{
    std::set<int> ds;
    for (const auto& [m, c] : terms_)
        ds.insert(ring_->degree(m));
    return {ds.begin(), ds.end()};
}

std::optional<int> GradedRingElement::homogeneous_degree() const
{
    auto ds = degrees();
    if (ds.size() != 1)
        return std::nullopt;
    return ds.front();
}

bool GradedRingElement::is_homogeneous_of(int k) const
{
    for (const auto& [m, c] : terms_)
        if (ring_->degree(m) != k)
            return false;
    return true;
}

GradedRingElement GradedRingElement::homogeneous_component(int k) const
{
    GradedRingElement r(ring_);
    for (const auto& [m, c] : terms_)
        if (ring_->degree(m) == k)
            r.terms_.emplace(m, c);
    return r;
}

bool GradedRingElement::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

GradedRingElement GradedRingElement::in_ring(RingPtr target) const
{
    if (target->generators() != ring_->generators())
        throw RingMismatch("cannot move element from " + ring_->name() + " to " + target->name());
    return GradedRingElement(std::move(target), terms_);
}

GradedRingElement GradedRingElement::truncated(int n) const
{
    GradedRingElement r(ring_);
    for (const auto& [m, c] : terms_)
        if (std::abs(ring_->degree(m)) <= n)
            r.terms_.emplace(m, c);
    return r;
}

GradedRingElement GradedRingElement::inverse() const
{
    if (terms_.size() != 1)
        throw InvalidElement("only single-term elements can be inverted: " + to_string());
    const auto& [m, c] = *terms_.begin();
    Monomial inv(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0 && !ring_->generators()[i].invertible)
            throw InvalidElement("monomial is not invertible: " + to_string());
        inv[i] = -m[i];
    }
    Scalar ci = 1 / c;
    if (ring_->field() == ScalarField::Integers && ci.get_den() != 1)
        throw InvalidElement("scalar is not a unit over the integers: " + to_string());
    return monomial(ring_, std::move(inv), ci);
}

GradedRingElement GradedRingElement::operator-() const
{
    GradedRingElement r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

GradedRingElement& GradedRingElement::operator+=(const GradedRingElement& o)
{
    require_same_ring(ring_, o.ring_, "ring_add");
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

GradedRingElement& GradedRingElement::operator-=(const GradedRingElement& o)
{
    return *this += -o;
}

GradedRingElement operator*(const GradedRingElement& a, const GradedRingElement& b)
{
    require_same_ring(a.ring_, b.ring_, "ring_mul");
    GradedRingElement r(a.ring_);
    Monomial m(a.ring_->generator_count());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            if (!a.ring_->retains(m))
                continue;
            auto [it, inserted] = r.terms_.emplace(m, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    std::erase_if(r.terms_, [](const auto& t) { return sgn(t.second) == 0; });
    return r;
}

GradedRingElement& GradedRingElement::operator*=(const GradedRingElement& o)
{
    *this = *this * o;
    return *this;
}

GradedRingElement& GradedRingElement::operator*=(const Scalar& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    if (ring_->field() == ScalarField::Integers && !is_integral())
        throw InvalidElement("non-integral scalar in ring " + ring_->name());
    return *this;
}

bool operator==(const GradedRingElement& a, const GradedRingElement& b)
{
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

GradedRingElement GradedRingElement::substitute(const std::vector<GradedRingElement>& images) const
{
    if (images.size() != ring_->generator_count())
        throw InvalidElement("substitute: expected one image per generator");
    if (images.empty())
        throw InvalidElement("substitute: ring without generators needs an explicit target");
    const RingPtr& target = images.front().ring();
    for (const auto& img : images)
        require_same_ring(target, img.ring(), "substitute");

    GradedRingElement r(target);
    for (const auto& [m, c] : terms_) {
        GradedRingElement t(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0)
                t *= pow(images[i], m[i]);
        r += t;
    }
    return r;
}

std::string format_scalar(const Scalar& s)
{
    return s.get_str();
}

std::string format_monomial(const RingDescriptor& ring, const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ring.generators()[i].symbol;
        if (m[i] != 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string GradedRingElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [&](auto* a, auto* b) { return display_before(*ring_, a->first, b->first); });

    std::string out;
    bool first = true;
    for (const auto* t : order) {
        Scalar c = t->second;
        const bool negative = sgn(c) < 0;
        if (negative)
            c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const bool unit = t->first == ring_->unit_monomial();
        if (unit)
            out += format_scalar(c);
        else if (c == 1)
            out += format_monomial(*ring_, t->first);
        else
            out += format_scalar(c) + "*" + format_monomial(*ring_, t->first);
    }
    return out;
}

// Parsing -------------------------------------------------------------------

namespace {

class ElementParser {
public:
    ElementParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

    GradedRingElement parse()
    {
        GradedRingElement result(ring_);
        skip_ws();
        if (at_end())
            fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto t = term();
            if (sign < 0)
                t = -t;
            result += t;
            skip_ws();
        }
        return result;
    }

private:
    GradedRingElement term()
    {
        Scalar coeff = 1;
        Monomial m = ring_->unit_monomial();
        bool any = false;
        for (;;) {
            skip_ws();
            if (at_end())
                fail("expected factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Scalar num(number());
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip_ws();
                    Scalar den(number());
                    if (sgn(den) == 0)
                        fail("zero denominator");
                    num /= den;
                }
                coeff *= num;
            } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
                std::string sym = identifier();
                auto idx = ring_->index_of(sym);
                if (!idx)
                    fail("unknown generator '" + sym + "'");
                int e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    int sign = 1;
                    if (!at_end() && peek() == '-') {
                        sign = -1;
                        ++pos_;
                    }
                    e = sign * std::stoi(number());
                }
                m[*idx] += e;
            } else {
                fail(std::string("unexpected character '") + peek() + "'");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any)
            fail("empty term");
        if (!ring_->valid_monomial(m))
            fail("negative exponent on non-invertible generator");
        return GradedRingElement::monomial(ring_, std::move(m), coeff);
    }

    std::string number()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InvalidElement("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                             ": " + msg);
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GradedRingElement GradedRingElement::parse(RingPtr ring, std::string_view text)
{
    return ElementParser(std::move(ring), text).parse();
}

GradedRingElement ring_add(const GradedRingElement& a, const GradedRingElement& b)
{
    return a + b;
}

GradedRingElement ring_mul(const GradedRingElement& a, const GradedRingElement& b)
{
    return a * b;
}

GradedRingElement pow(const GradedRingElement& a, int n)
{
    if (n < 0)
        return pow(a.inverse(), -n);
    GradedRingElement result = GradedRingElement::one(a.ring());
    GradedRingElement base = a;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

// Component bases -------------------------------------------------------------

namespace {

void enumerate_polynomial(const RingDescriptor& ring, std::size_t gen, int remaining, Monomial& current,
                          std::vector<Monomial>& out)
{
    if (gen == ring.generator_count()) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    const int d = ring.generators()[gen].degree;
    if (d == 0)
        throw InvalidElement("component_rank: degree-0 generators give infinite components");
    for (int e = 0;; ++e) {
        const int rest = remaining - e * d;
        if (e > 0 && (rest == 0 ? false : (rest > 0) != (remaining > 0)))
            break;
        current[gen] = e;
        enumerate_polynomial(ring, gen + 1, rest, current, out);
        if (rest == 0)
            break;
    }
    current[gen] = 0;
}

} // namespace

ModuleDescription component_rank(const RingDescriptor& ring, int k)
{
    ModuleDescription desc;
    desc.field = ring.field();
    if (ring.truncation() && std::abs(k) > *ring.truncation())
        throw TruncationExceeded("component_rank: degree " + std::to_string(k) + " outside truncation of " +
                                 ring.name());

    const auto& gens = ring.generators();
    const auto invertible = std::count_if(gens.begin(), gens.end(), [](const Generator& g) { return g.invertible; });
    std::vector<Monomial> monos;
    if (invertible > 0) {
        if (gens.size() != 1)
            throw InvalidElement("component_rank: mixed Laurent rings are not supported");
        if (auto m = ring.unit_of_degree(k))
            monos.push_back(*m);
    } else {
        const bool all_negative = std::all_of(gens.begin(), gens.end(), [](const Generator& g) { return g.degree < 0; });
        const bool all_positive = std::all_of(gens.begin(), gens.end(), [](const Generator& g) { return g.degree > 0; });
        if (!all_negative && !all_positive)
            throw InvalidElement("component_rank: generators of mixed sign give infinite components");
        Monomial cur = ring.unit_monomial();
        if (gens.empty()) {
            if (k == 0)
                monos.push_back(cur);
        } else if ((all_negative && k <= 0) || (all_positive && k >= 0)) {
            enumerate_polynomial(ring, 0, k, cur, monos);
        }
    }
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return display_before(ring, a, b); });
    for (auto& m : monos)
        desc.basis.push_back({0, std::move(m)});
    return desc;
}

} // namespace motivec
