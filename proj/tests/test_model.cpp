#include <doctest.h>

#include <algorithm>

#include "fixture.hpp"
#include "isocov/errors.hpp"
#include "isocov/model.hpp"

using namespace isocov;

namespace {

DecisionProblem two_by_two() {
    DecisionProblem p;
    p.alternatives = {"x", "y"};
    p.criteria = {{"delay", Nature::Cost, 0.5, std::nullopt, std::nullopt},
                  {"rate", Nature::Benefit, 0.5, std::nullopt, std::nullopt}};
    p.ratings = Matrix::from_rows({{1.0, 10.0}, {3.0, 30.0}});
    return p;
}

bool has_rule(const std::vector<ValidationIssue>& issues, const std::string& rule) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& v) { return v.rule == rule; });
}

const ResolvedCriterion& by_name(const std::vector<ResolvedCriterion>& rs, const std::string& n) {
    return *std::find_if(rs.begin(), rs.end(),
                         [&](const ResolvedCriterion& r) { return r.spec.name == n; });
}

}  // namespace

TEST_CASE("validate accepts the bundled route fixture") {
    CHECK(validate(fixture::routes()).empty());
}

TEST_CASE("validate reports broken weight sums") {
    auto p = two_by_two();
    p.criteria[0].weight = 0.5;
    p.criteria[1].weight = 0.6;
    const auto issues = validate(p);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].rule == "weight_sum");
    CHECK(issues[0].subject == "problem");

    p.criteria[1].weight = 0.5 + 5e-10;
    CHECK(validate(p).empty());
}

TEST_CASE("validate reports inverted constraint intervals") {
    auto p = two_by_two();
    p.criteria[0].lower_bound = 10;
    p.criteria[0].upper_bound = 5;
    const auto issues = validate(p);
    REQUIRE(has_rule(issues, "bound_order"));
    CHECK(issues[0].subject == "delay");
    CHECK(issues[0].message.find("lower_bound > upper_bound") != std::string::npos);
}

TEST_CASE("validate catches structural problems") {
    SUBCASE("duplicate ids") {
        auto p = two_by_two();
        p.alternatives = {"x", "x"};
        p.criteria[1].name = "delay";
        const auto issues = validate(p);
        CHECK(has_rule(issues, "unique_alternative"));
        CHECK(has_rule(issues, "unique_criterion"));
    }
    SUBCASE("weight outside [0,1]") {
        auto p = two_by_two();
        p.criteria[0].weight = -0.5;
        p.criteria[1].weight = 1.5;
        CHECK(has_rule(validate(p), "weight_range"));
    }
    SUBCASE("shape mismatch") {
        auto p = two_by_two();
        p.ratings = Matrix(3, 2);
        CHECK(has_rule(validate(p), "shape"));
    }
    SUBCASE("empty problem") {
        DecisionProblem p;
        CHECK(has_rule(validate(p), "nonempty"));
    }
    SUBCASE("non-finite rating") {
        auto p = two_by_two();
        p.ratings(1, 0) = std::numeric_limits<double>::quiet_NaN();
        const auto issues = validate(p);
        REQUIRE(has_rule(issues, "finite"));
        CHECK(issues[0].subject == "y");
    }
    SUBCASE("constraint outside the data range") {
        auto p = two_by_two();
        p.criteria[1].lower_bound = 5.0;  // data range is [10, 30]
        CHECK(has_rule(validate(p), "bound_range"));
        CHECK(validate(p, BoundsPolicy::Clamp).empty());
        CHECK_THROWS_AS(resolve(p), ValidationError);
    }
}

TEST_CASE("resolve fills open bounds from the data range") {
    const auto resolved = resolve(fixture::routes());
    REQUIRE(resolved.size() == 6);

    const auto& hops = by_name(resolved, "Hop Count");
    CHECK(hops.col_min == 3);
    CHECK(hops.col_max == 7);
    CHECK(hops.a == 3);
    CHECK(hops.b == 5);

    const auto& rate = by_name(resolved, "Data rate");
    CHECK(rate.a == 1600);
    CHECK(rate.b == 2025);
    CHECK(rate.col_min == 1500);

    for (const auto& r : resolved) {
        CHECK(r.col_min <= r.a);
        CHECK(r.a <= r.b);
        CHECK(r.b <= r.col_max);
    }
}

TEST_CASE("fully open bounds resolve to the column extrema") {
    const auto resolved = resolve(two_by_two());
    CHECK(resolved[0].a == 1.0);
    CHECK(resolved[0].b == 3.0);
    CHECK(resolved[0].spread() == 0.0);
}

TEST_CASE("clamp policy pulls bounds into the data range") {
    auto p = two_by_two();
    p.criteria[1].lower_bound = 5.0;
    p.criteria[1].upper_bound = 50.0;
    const auto resolved = resolve(p, BoundsPolicy::Clamp);
    CHECK(resolved[1].a == 10.0);
    CHECK(resolved[1].b == 30.0);
}

TEST_CASE("constant columns give a point interval") {
    auto p = two_by_two();
    p.ratings = Matrix::from_rows({{2.0, 10.0}, {2.0, 30.0}});
    const auto resolved = resolve(p);
    CHECK(resolved[0].a == 2.0);
    CHECK(resolved[0].b == 2.0);
}

TEST_CASE("resolve does not depend on criterion order") {
    auto p = fixture::routes();
    const auto forward = resolve(p);
    std::reverse(p.criteria.begin(), p.criteria.end());
    Matrix flipped(p.ratings.rows(), p.ratings.cols());
    for (std::size_t i = 0; i < p.ratings.rows(); ++i) {
        for (std::size_t j = 0; j < p.ratings.cols(); ++j) {
            flipped(i, j) = p.ratings(i, p.ratings.cols() - 1 - j);
        }
    }
    p.ratings = flipped;
    const auto backward = resolve(p);
    for (std::size_t j = 0; j < forward.size(); ++j) {
        const auto& f = forward[j];
        const auto& b = backward[forward.size() - 1 - j];
        CHECK(f.spec == b.spec);
        CHECK(f.a == b.a);
        CHECK(f.b == b.b);
        CHECK(f.col_min == b.col_min);
        CHECK(f.col_max == b.col_max);
    }
}

TEST_CASE("zero-weight criteria are allowed") {
    auto p = two_by_two();
    p.criteria[0].weight = 0.0;
    p.criteria[1].weight = 1.0;
    CHECK(validate(p).empty());
}
