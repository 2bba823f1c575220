#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qfc/code.hpp"
#include "qfc/field.hpp"
#include "qfc/formulas.hpp"
#include "qfc/quadform.hpp"

#include <map>
#include <stdexcept>
#include <vector>

using namespace qfc;

namespace {

FieldElement vec(std::vector<Scalar> coeffs) { return FieldElement{std::move(coeffs)}; }

}  // namespace

TEST_CASE("defining set construction") {
    const FieldSpec f(3, 2);
    const auto q = QuadraticForm::identity(f);
    const DefiningSetCode code(q, 1);

    // Solutions of x0^2 + x1^2 = 1 in F_3^2, in encoding order
    // (1,0) enc 1, (2,0) enc 2, (0,1) enc 3, (0,2) enc 6.
    CHECK(code.length() == 4);
    CHECK(code.dimension() == 2);
    CHECK(code.level() == 1);
    const auto& d = code.defining_set();
    REQUIRE(d.size() == 4);
    CHECK(d[0] == vec({1, 0}));
    CHECK(d[1] == vec({2, 0}));
    CHECK(d[2] == vec({0, 1}));
    CHECK(d[3] == vec({0, 2}));

    // Level is reduced mod p.
    const DefiningSetCode same(q, 4);
    CHECK(same.level() == 1);
    CHECK(same.defining_set() == code.defining_set());

    // No nonzero solutions of x0^2 + x1^2 = 0 over F_3.
    CHECK_THROWS_AS(DefiningSetCode(q, 0), UnusableCodeError);

    // Degenerate forms are rejected outright.
    const auto deg = QuadraticForm::from_diagonal(f, {1, 0});
    CHECK_THROWS_AS(DefiningSetCode(deg, 1), std::invalid_argument);

    // Lengths match the closed-form count.
    for (auto [p, m] : std::vector<std::pair<Scalar, int>>{{3, 3}, {3, 4}, {5, 2}}) {
        const FieldSpec g(p, m);
        for (const auto& form : {QuadraticForm::identity(g),
                                 QuadraticForm::from_trace_scale(g, g.one())}) {
            const int eps = form.discriminant_sign();
            for (Scalar a = 0; a < p; ++a) {
                if (predicted_length(p, m, eps, a) == 0) continue;
                CHECK(DefiningSetCode(form, a).length() == predicted_length(p, m, eps, a));
            }
        }
    }
}

TEST_CASE("encoding is the trace pairing against the defining set") {
    const FieldSpec f(3, 3);
    const auto q = QuadraticForm::identity(f);
    const DefiningSetCode code(q, 0);
    CHECK(code.length() == 8);
    CHECK(code.dimension() == 3);

    for (std::int64_t k = 0; k < f.order(); ++k) {
        const FieldElement x = f.element(k);
        const Codeword w = code.encode(x);
        REQUIRE(w.coords.size() == 8);
        for (std::size_t i = 0; i < w.coords.size(); ++i) {
            CHECK(w.coords[i] == f.trace(f.mul(x, code.defining_set()[i])));
        }
    }

    // Linearity: encode(x + y) = encode(x) + encode(y) coordinatewise.
    for (std::int64_t i = 0; i < f.order(); i += 2) {
        for (std::int64_t j = 0; j < f.order(); j += 3) {
            const auto wx = code.encode(f.element(i));
            const auto wy = code.encode(f.element(j));
            const auto ws = code.encode(f.add(f.element(i), f.element(j)));
            for (std::size_t t = 0; t < ws.coords.size(); ++t) {
                CHECK(ws.coords[t] == (wx.coords[t] + wy.coords[t]) % 3);
            }
        }
    }

    const Codeword zero = code.encode(f.zero());
    CHECK(zero.weight() == 0);
}

TEST_CASE("weight distribution in F_9, level 1") {
    const FieldSpec f(3, 2);
    const DefiningSetCode code(QuadraticForm::identity(f), 1);
    // Coordinates come in pairs {d, 2d}, so every codeword has even weight.
    const std::map<Scalar, std::int64_t> expect = {{0, 1}, {2, 4}, {4, 4}};
    CHECK(code.weight_distribution() == expect);

    // Any weight distribution sums to q and respects the zero word.
    const FieldSpec g(3, 3);
    const DefiningSetCode c2(QuadraticForm::identity(g), 0);
    const auto dist = c2.weight_distribution();
    std::int64_t total = 0;
    for (const auto& [w, count] : dist) {
        CHECK(w >= 0);
        CHECK(w <= c2.length());
        total += count;
    }
    CHECK(total == g.order());
    CHECK(dist.at(0) == 1);
}

TEST_CASE("generalized Hamming weights by both routes") {
    const FieldSpec f9(3, 2);
    const DefiningSetCode c9(QuadraticForm::identity(f9), 1);
    CHECK(c9.ghw_by_definition(1) == 2);
    CHECK(c9.ghw_by_definition(2) == 4);
    CHECK(c9.ghw_by_intersection(1) == 2);
    CHECK(c9.ghw_by_intersection(2) == 4);
    CHECK(c9.hierarchy_by_definition().values == std::vector<Scalar>{2, 4});

    const FieldSpec f27(3, 3);
    const DefiningSetCode c27(QuadraticForm::identity(f27), 0);
    CHECK(c27.hierarchy_by_definition().values == std::vector<Scalar>{4, 6, 8});
    CHECK(c27.hierarchy_by_intersection().values == std::vector<Scalar>{4, 6, 8});

    CHECK_THROWS_AS(c27.ghw_by_definition(0), std::invalid_argument);
    CHECK_THROWS_AS(c27.ghw_by_definition(4), std::invalid_argument);
}

TEST_CASE("the two routes agree across a sweep") {
    for (auto [p, m] : std::vector<std::pair<Scalar, int>>{{3, 2}, {3, 3}, {3, 4}, {5, 2}}) {
        const FieldSpec f(p, m);
        std::vector<QuadraticForm> forms = {QuadraticForm::identity(f),
                                            QuadraticForm::from_trace_scale(f, f.one())};
        if (m >= 2) {
            std::vector<Scalar> diag(m, 1);
            diag.back() = smallest_nonresidue(p);
            forms.push_back(QuadraticForm::from_diagonal(f, diag));
        }
        for (const auto& form : forms) {
            for (Scalar a = 0; a < p; ++a) {
                if (predicted_length(p, m, form.discriminant_sign(), a) == 0) continue;
                const DefiningSetCode code(form, a);
                if (code.dimension() < m) continue;  // intersection route refuses
                const auto by_def = code.hierarchy_by_definition();
                CHECK(by_def == code.hierarchy_by_intersection());
                by_def.validate(code.length(), m);
            }
        }
    }
}

TEST_CASE("degenerate dimension is reported, never silently patched") {
    // Over F_9 with f = 2 x0^2 + x1^2 at level 1 every solution satisfies
    // x0 = 0, so the defining set spans only a line and the code collapses
    // to dimension 1.
    const FieldSpec f(3, 2);
    const auto form = QuadraticForm::from_diagonal(f, {2, 1});
    const DefiningSetCode code(form, 1);
    CHECK(code.length() == 2);
    CHECK(code.dimension() == 1);
    const auto& d = code.defining_set();
    REQUIRE(d.size() == 2);
    CHECK(d[0] == vec({0, 1}));
    CHECK(d[1] == vec({0, 2}));
    // Neither hierarchy route accepts a non-injective message map.
    CHECK_THROWS_AS(code.ghw_by_definition(1), DegenerateCodeError);
    CHECK_THROWS_AS(code.ghw_by_intersection(1), DegenerateCodeError);
    try {
        code.hierarchy_by_intersection();
        FAIL("expected DegenerateCodeError");
    } catch (const DegenerateCodeError& e) {
        CHECK(e.dimension() == 1);
        CHECK(e.required() == 2);
    }
    // Encoding and the weight distribution still work on the collapsed code.
    const auto dist = code.weight_distribution();
    std::int64_t total = 0;
    for (const auto& [w, count] : dist) total += count;
    CHECK(total == f.order());
    CHECK(dist.at(0) == 3);  // the kernel line maps to the zero word
}

TEST_CASE("worker count never changes results") {
    const FieldSpec f(3, 4);
    const DefiningSetCode code(QuadraticForm::identity(f), 0);
    for (int r = 1; r <= 4; ++r) {
        CHECK(code.ghw_by_definition(r, 1) == code.ghw_by_definition(r, 4));
        CHECK(code.ghw_by_intersection(r, 1) == code.ghw_by_intersection(r, 4));
    }
    CHECK(code.hierarchy_by_definition(3) == code.hierarchy_by_definition());
    CHECK(code.hierarchy_by_definition().values == std::vector<Scalar>{18, 24, 30, 32});
}

TEST_CASE("hierarchy validation catches malformed values") {
    WeightHierarchy good{{2, 4}};
    CHECK_NOTHROW(good.validate(4, 2));
    WeightHierarchy nonmono{{4, 4}};
    CHECK_THROWS_AS(nonmono.validate(4, 2), std::logic_error);
    WeightHierarchy wrong_size{{2, 3, 4}};
    CHECK_THROWS_AS(wrong_size.validate(4, 2), std::logic_error);
    WeightHierarchy bad_tail{{2, 3}};
    CHECK_THROWS_AS(bad_tail.validate(4, 2), std::logic_error);  // d_k != n
    // A Singleton-only violation cannot be built: strict monotonicity plus
    // d_k = n already force d_r <= n - k + r for integers. The bound at the
    // edge is tight and accepted.
    WeightHierarchy tight{{3, 4}};
    CHECK_NOTHROW(tight.validate(4, 2));
}
