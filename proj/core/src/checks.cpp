#include "motivec/checks.hpp"

#include "motivec/decompose.hpp"
#include "motivec/errors.hpp"
#include "motivec/fgl.hpp"
#include "motivec/random.hpp"
#include "motivec/space_dsl.hpp"
#include "motivec/theory.hpp"

#include <functional>

namespace motivec {

namespace {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void run(const std::string& check, const std::function<bool(std::string&)>& body)
    {
        CheckResult r{name_, check, false, {}};
        try {
            r.passed = body(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    std::vector<CheckResult> results() && { return std::move(results_); }

private:
    std::string name_;
    std::vector<CheckResult> results_;
};

std::vector<RingPtr> sample_rings()
{
    return {RingDescriptor::chow(), RingDescriptor::k0(), RingDescriptor::universal(4)};
}

std::vector<TheoryPtr> sample_theories()
{
    return {OrientedTheory::chow(), OrientedTheory::k0(), OrientedTheory::universal(10)};
}

std::vector<SpaceExpr> builtin_spaces(int max_dim)
{
    std::vector<SpaceExpr> out{SpaceExpr::point()};
    for (int n = 0; n <= max_dim; ++n)
        out.push_back(projective_space(n));
    for (int d = 0; 2 * d <= max_dim; ++d)
        out.push_back(quadric(d));
    for (int n = 0; n <= max_dim + 1; ++n)
        for (int d = 0; d <= n; ++d)
            if (d * (n - d) <= max_dim)
                out.push_back(grassmannian(d, n));
    return out;
}

} // namespace

std::vector<CheckResult> check_graded_ring(std::uint64_t seed)
{
    Suite s("graded-ring");
    random::Engine rng(seed);
    s.run("ring axioms", [&](std::string& detail) {
        for (const auto& ring : sample_rings())
            for (int t = 0; t < 40; ++t) {
                const auto a = random::element(ring, rng), b = random::element(ring, rng),
                           c = random::element(ring, rng);
                const auto one = GradedRingElement::one(ring);
                if ((a * b) * c != a * (b * c) || a * b != b * a || a * (b + c) != a * b + a * c || a * one != a ||
                    a + b != b + a || !(a - a).is_zero()) {
                    detail = ring->name() + ": a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string();
                    return false;
                }
            }
        return true;
    });
    s.run("product degrees", [&](std::string& detail) {
        for (const auto& ring : sample_rings())
            for (int t = 0; t < 40; ++t) {
                const auto a = random::element(ring, rng), b = random::element(ring, rng);
                const auto da = a.degrees(), db = b.degrees();
                for (int d : (a * b).degrees()) {
                    bool found = false;
                    for (int x : da)
                        for (int y : db)
                            found = found || x + y == d;
                    if (!found) {
                        detail = ring->name() + ": stray degree " + std::to_string(d);
                        return false;
                    }
                }
            }
        return true;
    });
    s.run("homogeneous components partition", [&](std::string& detail) {
        for (const auto& ring : sample_rings())
            for (int t = 0; t < 40; ++t) {
                const auto a = random::element(ring, rng);
                auto sum = GradedRingElement::zero(ring);
                for (int k : a.degrees())
                    sum += a.homogeneous_component(k);
                if (sum != a) {
                    detail = a.to_string();
                    return false;
                }
            }
        return true;
    });
    s.run("truncation idempotent", [&](std::string&) {
        const auto ring = RingDescriptor::universal(6);
        for (int t = 0; t < 40; ++t) {
            const auto a = random::element(ring, rng, 6);
            const int n = random::uniform(rng, 0, 6);
            if (a.truncated(n).truncated(n) != a.truncated(n))
                return false;
        }
        return true;
    });
    s.run("print/parse round trip", [&](std::string& detail) {
        for (const auto& ring : sample_rings())
            for (int t = 0; t < 40; ++t) {
                const auto a = random::element(ring, rng);
                if (GradedRingElement::parse(ring, a.to_string()) != a) {
                    detail = a.to_string();
                    return false;
                }
            }
        return true;
    });
    return std::move(s).results();
}

std::vector<CheckResult> check_fgl(std::uint64_t)
{
    Suite s("fgl-engine");
    const int order = default_truncation_order;
    const std::vector<std::pair<std::string, FormalGroupLaw>> laws{
        {"additive", fgl_additive(order)}, {"multiplicative", fgl_multiplicative(order)},
        {"universal", fgl_universal(order)}};
    for (const auto& [name, law] : laws) {
        s.run(name + " unit", [&](std::string&) { return law.satisfies_unit(); });
        s.run(name + " commutativity", [&](std::string&) { return law.satisfies_commutativity(); });
        s.run(name + " associativity", [&](std::string&) { return law.satisfies_associativity(); });
        s.run(name + " homogeneity", [&](std::string&) { return law.satisfies_homogeneity(); });
        s.run(name + " log/exp round trip", [&](std::string&) {
            const auto log = fgl_log(law);
            const auto exp = series_reversion(log);
            const auto x = TruncatedSeries::variable(log.ring(), {"x"}, "x", order);
            return compose(log, {exp}) == x && compose(exp, {log}) == x;
        });
        s.run(name + " log additivity", [&](std::string&) {
            const auto log = fgl_log(law);
            const auto ring = log.ring();
            const auto F = law.series().in_ring(ring);
            const auto x = TruncatedSeries::variable(ring, {"x", "y"}, "x", order);
            const auto y = TruncatedSeries::variable(ring, {"x", "y"}, "y", order);
            return compose(log, {F}) == compose(log, {x}) + compose(log, {y});
        });
        s.run(name + " formal inverse", [&](std::string&) {
            const auto inv = formal_inverse(law);
            const auto x = TruncatedSeries::variable(law.ring(), {"x"}, "x", order);
            return law.apply(x, inv).is_zero();
        });
        s.run(name + " [P^n] homogeneous of degree -n", [&](std::string& detail) {
            for (int n = 0; n + 1 <= order; ++n) {
                const auto p = pn_class(law, n);
                if (!p.is_homogeneous_of(-n)) {
                    detail = "n=" + std::to_string(n) + ": " + p.to_string();
                    return false;
                }
            }
            return true;
        });
    }
    s.run("specialization m_i -> 0 gives additive", [&](std::string&) {
        const auto& F = laws[2].second.series();
        const auto target = RingDescriptor::chow()->rationalized();
        TruncatedSeries image(target, F.variables(), order);
        for (const auto& [e, c] : F.terms())
            image.set_coefficient(e, GradedRingElement(target, c.constant_term()));
        return image == laws[0].second.series().in_ring(target);
    });
    s.run("specialization m_i -> beta^i/(i+1) gives multiplicative log", [&](std::string&) {
        const auto log = universal_logarithm(order);
        const auto target = RingDescriptor::k0()->rationalized();
        std::vector<GradedRingElement> images;
        for (int i = 1; i <= order; ++i)
            images.push_back(GradedRingElement::generator(target, "beta", i) * Scalar(1, i + 1));
        TruncatedSeries image(target, {"x"}, order);
        for (const auto& [e, c] : log.terms())
            image.set_coefficient(e, c.substitute(images));
        return image == fgl_log(laws[1].second);
    });
    return std::move(s).results();
}

std::vector<CheckResult> check_theory(std::uint64_t seed)
{
    Suite s("theory");
    random::Engine rng(seed + 1);
    for (const auto& theory : sample_theories()) {
        s.run(theory->name() + " projection formula", [&](std::string& detail) {
            for (int t = 0; t < 30; ++t) {
                const int m = random::uniform(rng, 0, 8);
                const auto alpha = random::projective_element(theory, m, rng);
                const auto b = random::element(theory->ring(), rng);
                if (!projection_formula_check(theory, m, alpha, b)) {
                    detail = "m=" + std::to_string(m) + ", alpha=" + alpha.to_string() + ", b=" + b.to_string();
                    return false;
                }
            }
            return true;
        });
        s.run(theory->name() + " push-forward linearity", [&](std::string&) {
            for (int t = 0; t < 30; ++t) {
                const int m = random::uniform(rng, 0, 8);
                const auto u = random::projective_element(theory, m, rng);
                const auto v = random::projective_element(theory, m, rng);
                const auto c = random::element(theory->ring(), rng);
                if (pushforward_to_point(u + v) != pushforward_to_point(u) + pushforward_to_point(v) ||
                    pushforward_to_point(u * c) != pushforward_to_point(u) * c)
                    return false;
            }
            return true;
        });
        s.run(theory->name() + " push-forward shifts degree by -m", [&](std::string& detail) {
            for (int t = 0; t < 30; ++t) {
                const int m = random::uniform(rng, 0, 8);
                const int k = random::uniform(rng, -3, m + 2);
                const auto u = random::homogeneous_projective_element(theory, m, k, rng);
                if (!pushforward_to_point(u).is_homogeneous_of(k - m)) {
                    detail = "m=" + std::to_string(m) + ", k=" + std::to_string(k);
                    return false;
                }
            }
            return true;
        });
    }
    return std::move(s).results();
}

std::vector<CheckResult> check_cellular(std::uint64_t seed)
{
    Suite s("cellular-model");
    random::Engine rng(seed + 2);
    s.run("builtin dimensions", [&](std::string& detail) {
        for (int n = 0; n <= 10; ++n)
            if (projective_space(n).dim() != n) {
                detail = "P(" + std::to_string(n) + ")";
                return false;
            }
        for (int d = 0; d <= 8; ++d)
            if (quadric(d).dim() != 2 * d) {
                detail = "quadric(" + std::to_string(d) + ")";
                return false;
            }
        for (int n = 0; n <= 10; ++n)
            for (int d = 0; d <= n; ++d)
                if (grassmannian(d, n).dim() != d * (n - d)) {
                    detail = "Gr(" + std::to_string(d) + "," + std::to_string(n) + ")";
                    return false;
                }
        return true;
    });
    s.run("Gr(1,n) is P(n-1)", [&](std::string&) {
        for (int n = 1; n <= 10; ++n)
            if (!(normalized(grassmannian(1, n)) == normalized(projective_space(n - 1))))
                return false;
        return true;
    });
    s.run("DSL round trip", [&](std::string& detail) {
        for (int t = 0; t < 50; ++t) {
            const auto space = random::space(rng);
            const auto text = print_space(space);
            if (!(parse_space(text) == space)) {
                detail = text;
                return false;
            }
        }
        return true;
    });
    return std::move(s).results();
}

std::vector<CheckResult> check_tate(std::uint64_t seed)
{
    Suite s("tate-motives");
    random::Engine rng(seed + 3);
    const std::vector<RingPtr> rings{RingDescriptor::chow(), RingDescriptor::k0(), RingDescriptor::universal(6)};

    s.run("category laws", [&](std::string& detail) {
        for (int t = 0; t < 60; ++t) {
            const auto& ring = rings[t % rings.size()];
            const auto a = random::motive(rng), b = random::motive(rng), c = random::motive(rng),
                       d = random::motive(rng);
            const int da = random::uniform(rng, -1, 1), db = random::uniform(rng, -1, 1),
                      dc = random::uniform(rng, -1, 1);
            const auto f = random::correspondence(ring, a, b, da, rng);
            const auto g = random::correspondence(ring, b, c, db, rng);
            const auto h = random::correspondence(ring, c, d, dc, rng);
            if (compose(h, compose(g, f)) != compose(compose(h, g), f) ||
                compose(Correspondence::identity(ring, b), f) != f ||
                compose(f, Correspondence::identity(ring, a)) != f) {
                detail = ring->name() + " trial " + std::to_string(t);
                return false;
            }
        }
        return true;
    });
    s.run("transpose laws", [&](std::string&) {
        for (int t = 0; t < 60; ++t) {
            const auto& ring = rings[t % rings.size()];
            const int dx = 4, dy = 5, dz = 6;
            const auto a = random::motive(rng, 4, dx), b = random::motive(rng, 4, dy), c = random::motive(rng, 4, dz);
            const auto f = random::correspondence(ring, a, b, 0, rng); // X -> Y
            const auto g = random::correspondence(ring, b, c, 1, rng); // Y -> Z
            const auto ft = transpose(f, dx, dy);
            if (transpose(ft, dy, dx) != f || ft.degree() != dx + f.degree() - dy)
                return false;
            if (transpose(compose(g, f), dx, dz) != compose(ft, transpose(g, dy, dz)))
                return false;
        }
        return true;
    });
    s.run("product interchange", [&](std::string&) {
        for (int t = 0; t < 40; ++t) {
            const auto& ring = rings[t % rings.size()];
            const auto a = random::motive(rng, 3, 3), b = random::motive(rng, 3, 3), c = random::motive(rng, 3, 3);
            const auto a2 = random::motive(rng, 3, 3), b2 = random::motive(rng, 3, 3), c2 = random::motive(rng, 3, 3);
            const auto g = random::correspondence(ring, a, b, 0, rng), f = random::correspondence(ring, b, c, 0, rng);
            const auto d = random::correspondence(ring, a2, b2, 0, rng),
                       e = random::correspondence(ring, b2, c2, 0, rng);
            if (compose(product(f, e), product(g, d)) != product(compose(f, g), compose(e, d)))
                return false;
        }
        return true;
    });
    s.run("idempotent splitting", [&](std::string& detail) {
        for (int t = 0; t < 40; ++t) {
            const auto& ring = rings[t % rings.size()];
            const auto m = random::motive(rng, 5, 3);
            const auto p = random::idempotent(ring, m, rng);
            const auto sp = split_idempotent(p);
            const auto sq = split_idempotent(Correspondence::identity(ring, m) - p);
            if (compose(sp.retraction, sp.section) != Correspondence::identity(ring, sp.image) ||
                compose(sp.section, sp.retraction) != p || sp.image + sq.image != m) {
                detail = p.to_string();
                return false;
            }
        }
        return true;
    });
    s.run("projective bundle projectors", [&](std::string&) {
        for (int n = 0; n <= 6; ++n) {
            const auto x = random::motive(rng, 3, 3);
            const auto ring = rings[n % rings.size()];
            const auto ps = pbt_projectors(ring, x, n + 1);
            const auto total = projective_bundle_motive(x, n + 1);
            Correspondence sum(ring, total, total, 0);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                sum += ps[i];
                for (std::size_t j = 0; j < ps.size(); ++j)
                    if (i != j && !compose(ps[i], ps[j]).is_zero())
                        return false;
                if (split_idempotent(ps[i]).image != x.twisted(static_cast<int>(i)))
                    return false;
            }
            if (sum != Correspondence::identity(ring, total))
                return false;
        }
        return true;
    });
    s.run("decomposition duality", [&](std::string& detail) {
        for (const auto& sp : builtin_spaces(12))
            if (!duality_holds(sp)) {
                detail = sp.name();
                return false;
            }
        for (int t = 0; t < 30; ++t) {
            const auto sp = random::space(rng);
            if (!duality_holds(sp)) {
                detail = print_space(sp);
                return false;
            }
        }
        return true;
    });
    s.run("cell counts", [&](std::string&) {
        for (const auto& sp : builtin_spaces(12))
            if (decompose_by_rank(sp).size() != cell_count(sp))
                return false;
        return true;
    });
    s.run("realization additivity", [&](std::string&) {
        for (const auto& theory : sample_theories())
            for (int t = 0; t < 10; ++t) {
                const auto a = random::motive(rng), b = random::motive(rng);
                if (realize_table(a + b, *theory) != realize_table(a, *theory) + realize_table(b, *theory))
                    return false;
            }
        return true;
    });
    return std::move(s).results();
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed)
{
    std::vector<CheckResult> all;
    for (auto* suite : {&check_graded_ring, &check_fgl, &check_theory, &check_cellular, &check_tate}) {
        auto r = suite(seed);
        all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    }
    return all;
}

} // namespace motivec
