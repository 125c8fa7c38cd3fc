#include <doctest.h>

#include <json.hpp>

#include "bq/verify.hpp"

using namespace bq;
using namespace bq::verify;

TEST_CASE("case table enumerates the admissible pairs") {
    const auto& cases = theorem_cases();
    std::set<std::pair<int, std::pair<int, int>>> seen;
    for (std::size_t n = 0; n < cases.size(); ++n) {
        CHECK(cases[n].id == static_cast<int>(n) + 1);
        seen.insert({static_cast<int>(cases[n].q_variant), cases[n].p_support});
        const auto [i, j] = positions(cases[n].q_variant);
        const int shared = (cases[n].p_support.first == i || cases[n].p_support.first == j) +
                           (cases[n].p_support.second == i || cases[n].p_support.second == j);
        CHECK(shared == 1);
    }
    CHECK(seen.size() == 8);
}

TEST_CASE("closed form of case 1 at a rational point") {
    const ExactScalar alpha(0, Rational(3, 5));
    const ExactScalar beta(0, Rational(4, 5));
    const ExactBiQuat r = theorem_closed_form(1, alpha, beta, Rational(3, 5), Rational(4, 5));
    const ExactBiQuat expect(ExactScalar(Rational(-7, 25)) * alpha, beta,
                             ExactScalar(Rational(24, 25)) * alpha, 0L);
    CHECK(r == expect);
    CHECK_THROWS_AS(theorem_closed_form(9, alpha, beta, 1, 0), DomainError);
}

TEST_CASE("closed form of case 5 symbolically at a sample point") {
    const ExactScalar alpha(2, 1), beta(-1, 3);
    const Rational a1(5, 13), a2(12, 13);
    const ExactBiQuat r = theorem_closed_form(5, alpha, beta, a1, a2);
    CHECK(r.coeff(1) == alpha * ExactScalar(a1 * a1 - a2 * a2));
    CHECK(r.coeff(2) == ExactScalar(2) * alpha * ExactScalar(a1 * a2));
    CHECK(r.coeff(3) == beta);
    CHECK(r.coeff(4) == ExactScalar());
}

TEST_CASE("case 2 printed reading is refuted, derived reading holds") {
    // Compare the oracle's p q p with both readings at 20 rational unit-circle points.
    int printed_ok = 0, derived_ok = 0;
    for (int n = 1; n <= 20; ++n) {
        const Rational t(n, 23);
        const Rational a2 = (1 - t * t) / (1 + t * t), a4 = 2 * t / (1 + t * t);
        const ExactScalar alpha(Rational(n, 3), 1), beta(-2, Rational(1, n));
        const ExactBiQuat p(0L, ExactScalar(a2), 0L, ExactScalar(a4));
        const ExactBiQuat q(alpha, beta, 0L, 0L);
        const ExactBiQuat pqp = exact::oracle_mul(exact::oracle_mul(p, q), p);
        printed_ok += theorem_closed_form(2, alpha, beta, a2, a4, Reading::printed) == pqp;
        derived_ok += theorem_closed_form(2, alpha, beta, a2, a4, Reading::derived) == pqp;
    }
    CHECK(derived_ok == 20);
    CHECK(printed_ok == 0);
}

TEST_CASE("verify_theorem passes all cases and flags the misprinted forms") {
    const TheoremReport r = verify_theorem(200, 7);
    REQUIRE(r.cases.size() == 8);
    CHECK(r.passed());
    for (const CaseResult& c : r.cases) {
        CHECK(c.identity_points >= 9);
        CHECK(c.identity_pass());
        CHECK(c.concurrence_pass());
        CHECK(c.concurrence_max_error <= kConcurrenceTol);
        const bool misprint = c.tc.id == 2 || c.tc.id == 6;
        CHECK(c.printed_form_ok() == !misprint);
        if (misprint) {
            CHECK(c.printed_counterexample.find("component 4") != std::string::npos);
        }
    }
    const std::string text = to_text(r);
    CHECK(text.find("8/8 cases pass") != std::string::npos);
    CHECK(text.find("misprint flagged") != std::string::npos);
}

TEST_CASE("verify_theorem smoke run and determinism") {
    const TheoremReport one = verify_theorem(1, 0);
    CHECK(one.passed());
    CHECK(one.cases[0].concurrence_samples == 1);
    CHECK(to_text(verify_theorem(50, 3)) == to_text(verify_theorem(50, 3)));
    CHECK(to_json(verify_theorem(50, 3)) == to_json(verify_theorem(50, 3)));
    CHECK(to_text(verify_theorem(50, 3)) != to_text(verify_theorem(50, 4)));
    CHECK_THROWS_AS(verify_theorem(0, 1), DomainError);
}

TEST_CASE("theorem report JSON schema") {
    const auto j = nlohmann::json::parse(to_json(verify_theorem(10, 7)));
    CHECK(j["pass"] == true);
    CHECK(j["cases_passed"] == 8);
    CHECK(j["cases"].size() == 8);
    CHECK(j["cases"][5]["printed_misprint"] == true);
    CHECK(j["cases"][0]["printed_misprint"] == false);
    CHECK(j["cases"][1]["derived_form"].get<std::string>().find("a2 a4") != std::string::npos);
}

TEST_CASE("verify_examples") {
    const ExamplesReport r = verify_examples();
    REQUIRE(r.examples.size() == 3);
    CHECK(r.passed());

    const ExampleResult& e1 = r.examples[0];
    CHECK(e1.exact_match);
    CHECK(e1.concurrence_before == 0.0);
    CHECK(e1.concurrence_after_is_one);

    const ExampleResult& e2 = r.examples[1];
    CHECK_FALSE(e2.exact_match);
    CHECK(e2.magnitude_match);
    CHECK(e2.sign_mismatch == std::vector<int>{4});
    CHECK(e2.concurrence_after_is_one);
    const double s = std::numbers::sqrt2 / 2;
    CHECK(approx_equal(e2.oracle, {Complex(0, -s), 0, 0, Complex(0, s)}, 1e-15));

    const ExampleResult& e3 = r.examples[2];
    CHECK(e3.exact_match);
    CHECK(e3.concurrence_after_is_one);

    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["examples"][1]["sign_discrepancy"] == true);
    CHECK(to_text(r).find("sign discrepancy in component(s) 4") != std::string::npos);
}
