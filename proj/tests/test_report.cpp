#include "doctest.h"

#include "stirdet/report.hpp"
#include "stirdet/stirling_dets.hpp"
#include "stirdet/verify.hpp"

#include <algorithm>
#include <tuple>

using namespace stirdet;

TEST_CASE("max = 1 sweep")
{
    const Report r = generate_report(1);
    REQUIRE(r.cells.size() == 4);
    const std::vector<std::tuple<int, int, int>> expected = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    std::vector<std::tuple<int, int, int>> got;
    for (const auto& c : r.cells) {
        got.emplace_back(c.n, c.a, c.b);
        CHECK(c.beta == 1);
        CHECK(c.gamma == 1);
        CHECK(c.ok());
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(r.passed());
}

TEST_CASE("cells are ordered by (a, b, n) with one genfun per (a, b)")
{
    const Report r = generate_report(4);
    std::size_t expected_count = 0;
    for (int n = 0; n <= 4; ++n) {
        for (int a = 0; a <= n; ++a) {
            expected_count += static_cast<std::size_t>(a + 1);
        }
    }
    CHECK(r.cells.size() == expected_count);
    CHECK(std::is_sorted(r.cells.begin(), r.cells.end(), [](const ReportCell& l, const ReportCell& rr) {
        return std::tie(l.a, l.b, l.n) < std::tie(rr.a, rr.b, rr.n);
    }));
    for (const auto& c : r.cells) {
        CHECK(c.genfun.has_value() == (c.n == 4));
        CHECK(c.beta == beta(c.n, c.a, c.b));
        CHECK(c.gamma == gamma(c.n, c.a, c.b));
    }
    const auto it = std::find_if(r.cells.begin(), r.cells.end(),
                                 [](const ReportCell& c) { return c.n == 2 && c.a == 2 && c.b == 1; });
    REQUIRE(it != r.cells.end());
    CHECK(it->beta == 7);
    CHECK(it->gamma == gamma(2, 2, 1));
}

TEST_CASE("thread count does not change the report")
{
    CHECK(render_json(generate_report(5, 1)) == render_json(generate_report(5, 4)));
    CHECK(render_text(generate_report(5, 1)) == render_text(generate_report(5, 3)));
}

TEST_CASE("JSON round trip")
{
    const Report r = generate_report(5);
    const std::string text = render_json(r);
    const Report back = parse_report_json(text);
    CHECK(back == r);
    CHECK(render_json(back) == text);
}

TEST_CASE("JSON integers are strings")
{
    const std::string text = render_json(generate_report(2));
    CHECK(text.find("\"max\": \"2\"") != std::string::npos);
    CHECK(text.find("\"beta\": \"7\"") != std::string::npos);
    CHECK(text.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("malformed JSON is rejected")
{
    CHECK_THROWS_AS(parse_report_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_report_json(R"({"max": 3, "cells": [], "genfuns": []})"), std::invalid_argument);
}

TEST_CASE("text rendering")
{
    const std::string text = render_text(generate_report(2));
    CHECK(text.find("n=2 a=2 b=1 beta=7 gamma=") != std::string::npos);
    CHECK(text.find("genfun a=2 b=1 num=1 den=(1-q)(1-2q)\n") != std::string::npos);
    CHECK(text.rfind("status=pass max=2 cells=10\n") != std::string::npos);
}

TEST_CASE("a failing cell marks the report failed")
{
    Report r = generate_report(1);
    r.cells[0].methods_agree = false;
    CHECK_FALSE(r.passed());
    CHECK(render_text(r).find("status=fail") != std::string::npos);
    CHECK(parse_report_json(render_json(r)) == r);
}

TEST_CASE("verification suite passes at max 6")
{
    for (const auto& check : run_verification(6)) {
        CAPTURE(check.name);
        CAPTURE(check.detail);
        CHECK(check.passed);
    }
}
