#include "motivec/theory.hpp"

#include "motivec/errors.hpp"

#include <charconv>

namespace motivec {

OrientedTheory::OrientedTheory(std::string name, FormalGroupLaw fgl) : name_(std::move(name)), fgl_(std::move(fgl))
{
    const auto log = fgl_log(fgl_);
    pn_table_.push_back(GradedRingElement::one(ring()));
    for (int n = 1; n + 1 <= fgl_.order(); ++n) {
        auto value = log.coefficient(n + 1) * Scalar(n + 1);
        if (!value.is_integral() && ring()->field() == ScalarField::Integers)
            throw InvalidElement("non-integral [P^" + std::to_string(n) + "] in theory " + name_);
        pn_table_.push_back(value.in_ring(ring()));
    }
}

TheoryPtr OrientedTheory::chow(int order)
{
    return std::make_shared<const OrientedTheory>("chow", fgl_additive(order));
}

TheoryPtr OrientedTheory::k0(int order)
{
    return std::make_shared<const OrientedTheory>("k0", fgl_multiplicative(order));
}

TheoryPtr OrientedTheory::universal(int n)
{
    if (n < 1)
        throw InvalidElement("universal theory needs truncation N >= 1");
    return std::make_shared<const OrientedTheory>("universal:" + std::to_string(n), fgl_universal(n));
}

TheoryPtr OrientedTheory::from_selector(std::string_view selector, std::optional<int> fallback_truncation)
{
    if (selector == "chow")
        return chow();
    if (selector == "k0")
        return k0();
    constexpr std::string_view prefix = "universal";
    if (selector.starts_with(prefix)) {
        auto rest = selector.substr(prefix.size());
        std::optional<int> n;
        if (rest.empty()) {
            n = fallback_truncation;
        } else if (rest.front() == ':') {
            int value = 0;
            auto digits = rest.substr(1);
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
                throw InvalidElement("bad truncation in theory selector '" + std::string(selector) + "'");
            n = value;
        } else {
            throw InvalidElement("unknown theory '" + std::string(selector) + "'");
        }
        if (!n)
            throw InvalidElement("universal theory requires a truncation N (universal:N)");
        return universal(*n);
    }
    throw InvalidElement("unknown theory '" + std::string(selector) + "' (expected chow, k0, universal:N)");
}

GradedRingElement OrientedTheory::projective_class(int n) const
{
    if (n < 0)
        throw InvalidElement("projective_class: negative dimension");
    if (n < static_cast<int>(pn_table_.size()))
        return pn_table_[n];
    return pn_class(fgl_, n);
}

// ProjectiveSpaceElement ------------------------------------------------------

ProjectiveSpaceElement::ProjectiveSpaceElement(TheoryPtr theory, int m)
    : theory_(std::move(theory)), m_(m)
{
    if (m_ < 0)
        throw InvalidElement("projective space dimension must be nonnegative");
    coords_.assign(m_ + 1, GradedRingElement::zero(theory_->ring()));
}

ProjectiveSpaceElement::ProjectiveSpaceElement(TheoryPtr theory, int m, std::vector<GradedRingElement> coords)
    : theory_(std::move(theory)), m_(m), coords_(std::move(coords))
{
    if (m_ < 0 || coords_.size() != static_cast<std::size_t>(m_ + 1))
        throw ShapeMismatch("A(P^m) element needs exactly m+1 coordinates");
    for (const auto& c : coords_)
        require_same_ring(theory_->ring(), c.ring(), "A(P^m) coordinate");
}

ProjectiveSpaceElement ProjectiveSpaceElement::xi_power(TheoryPtr theory, int m, int i)
{
    ProjectiveSpaceElement e(std::move(theory), m);
    if (i >= 0 && i <= m)
        e.coords_[i] = GradedRingElement::one(e.theory_->ring());
    return e;
}

ProjectiveSpaceElement ProjectiveSpaceElement::pullback(TheoryPtr theory, int m, const GradedRingElement& b)
{
    ProjectiveSpaceElement e(std::move(theory), m);
    require_same_ring(e.theory_->ring(), b.ring(), "pullback");
    e.coords_[0] = b;
    return e;
}

bool ProjectiveSpaceElement::is_homogeneous_of(int k) const
{
    for (int i = 0; i <= m_; ++i)
        if (!coords_[i].is_homogeneous_of(k - i))
            return false;
    return true;
}

ProjectiveSpaceElement& ProjectiveSpaceElement::operator+=(const ProjectiveSpaceElement& o)
{
    if (m_ != o.m_ || !same_ring(theory_->ring(), o.theory_->ring()))
        throw ShapeMismatch("A(P^m) addition: theory or dimension mismatch");
    for (int i = 0; i <= m_; ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

ProjectiveSpaceElement operator*(const ProjectiveSpaceElement& a, const GradedRingElement& c)
{
    ProjectiveSpaceElement r = a;
    for (auto& x : r.coords_)
        x *= c;
    return r;
}

bool operator==(const ProjectiveSpaceElement& a, const ProjectiveSpaceElement& b)
{
    return a.m_ == b.m_ && same_ring(a.theory_->ring(), b.theory_->ring()) && a.coords_ == b.coords_;
}

std::string ProjectiveSpaceElement::to_string() const
{
    std::string out;
    for (int i = 0; i <= m_; ++i) {
        if (coords_[i].is_zero())
            continue;
        std::string c = coords_[i].to_string();
        bool negative = false;
        if (coords_[i].term_count() > 1) {
            c = "(" + c + ")";
        } else if (c.front() == '-') {
            negative = true;
            c.erase(0, 1);
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string power = i == 1 ? "xi" : "xi^" + std::to_string(i);
        if (i == 0)
            out += c;
        else if (c == "1")
            out += power;
        else
            out += c + "*" + power;
    }
    return out.empty() ? "0" : out;
}

ProjectiveSpaceElement pm_mul(const ProjectiveSpaceElement& u, const ProjectiveSpaceElement& v)
{
    if (u.dimension() != v.dimension() || !same_ring(u.theory()->ring(), v.theory()->ring()))
        throw ShapeMismatch("pm_mul: theory or dimension mismatch");
    const int m = u.dimension();
    std::vector<GradedRingElement> out(m + 1, GradedRingElement::zero(u.theory()->ring()));
    for (int i = 0; i <= m; ++i) {
        if (u.coords()[i].is_zero())
            continue;
        for (int j = 0; i + j <= m; ++j)
            if (!v.coords()[j].is_zero())
                out[i + j] += u.coords()[i] * v.coords()[j];
    }
    return ProjectiveSpaceElement(u.theory(), m, std::move(out));
}

GradedRingElement pushforward_to_point(const ProjectiveSpaceElement& u)
{
    const int m = u.dimension();
    GradedRingElement r = GradedRingElement::zero(u.theory()->ring());
    for (int i = 0; i <= m; ++i)
        if (!u.coords()[i].is_zero())
            r += u.coords()[i] * u.theory()->projective_class(m - i);
    return r;
}

bool projection_formula_check(const TheoryPtr& theory, int m, const ProjectiveSpaceElement& alpha,
                              const GradedRingElement& b)
{
    if (alpha.dimension() != m)
        throw ShapeMismatch("projection_formula_check: alpha lives on a different P^m");
    const auto lhs = pushforward_to_point(pm_mul(alpha, ProjectiveSpaceElement::pullback(theory, m, b)));
    const auto rhs = pushforward_to_point(alpha) * b;
    return lhs == rhs;
}

} // namespace motivec
