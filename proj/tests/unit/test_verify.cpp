#include <chrono>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qmock/error.hpp"
#include "qmock/verify.hpp"

using namespace qmock;

TEST_CASE("registry contents") {
  const auto& reg = registry();
  CHECK(reg.size() >= 40);
  std::set<std::string> names;
  for (const auto& e : reg) names.insert(e.name);
  CHECK(names.size() == reg.size());
  for (const char* want :
       {"gls", "lat2", "lat3", "at4", "at3", "at6", "at8", "at7", "c6", "c5", "mockf", "om00", "fine-12.2.3",
        "fine-12.2.5", "idt5", "pt51", "pt52", "pt53", "pt54", "eastharlem", "t53-display", "e1", "qtp1", "qtp2",
        "idt9", "pt95", "cor32-a", "cor32-b", "pt96", "pt9f", "t9f", "t919a", "leid54", "leid55", "leid56", "leid57",
        "pom4", "cor31-instance", "pt920a", "equiv", "hi-mo-consequence", "e2", "l31", "last11", "thirty", "waston",
        "ftonu", "r-identity"}) {
    CHECK_MESSAGE(names.count(want) == 1, want);
  }
  const IdentityEntry* idt5 = find_identity("idt5");
  REQUIRE(idt5);
  CHECK(idt5->instances.size() == 5);
  CHECK(find_identity("nope") == nullptr);
}

TEST_CASE("qtp1 starts 1 - 5q + 7q^2 - 11q^5") {
  const IdentityEntry* e = find_identity("qtp1");
  REQUIRE(e);
  const PolarSum lhs = e->lhs({}, 6);
  const QSeries s = lhs.cleared(LaurentPoly(1), 6);
  const std::vector<int> want{1, -5, 7, 0, 0, -11};
  for (int n = 0; n < 6; ++n) CHECK(s.coeff(n) == LaurentPoly(want[static_cast<std::size_t>(n)]));
  CHECK(verify_identity("qtp1", {}, 30).status == Status::pass);
}

TEST_CASE("c6 at order 200") { CHECK(verify_identity("c6", {}, 200).status == Status::pass); }

TEST_CASE("unknown identity and bad parameters") {
  CHECK_THROWS_WITH(verify_identity("nope", {}, 10), doctest::Contains("unknown identity"));
  CHECK_THROWS_WITH(verify_identity("idt5", {{"l", 1}, {"j", 5}}, 10), doctest::Contains("instance list"));
  CHECK(verify_identity("idt5", {{"l", 1}, {"j", 5}}, 20, true).status == Status::pass);
  // construction failures become status error
  CHECK(verify_identity("gls", {{"i", 99}}, 20, true).status == Status::error);
}

TEST_CASE("parse_params") {
  CHECK(parse_params("l=1,j=-3") == Params{{"l", 1}, {"j", -3}});
  CHECK(parse_params("").empty());
  CHECK_THROWS(parse_params("l=1,l=2"));
  CHECK_THROWS(parse_params("l"));
  CHECK_THROWS(parse_params("l=x"));
  CHECK(params_str({{"l", 1}, {"j", -3}}) == "j=-3,l=1");
}

TEST_CASE("every registry instance passes at order 30") {
  for (const auto& e : registry()) {
    for (const auto& p : e.instances) {
      const VerificationReport r = verify_entry(e, p, 30);
      INFO(e.name, " ", params_str(p), " ", r.error);
      CHECK(r.status == Status::pass);
    }
  }
}

TEST_CASE("pinned clearing multipliers match the detected poles") {
  for (const auto& e : registry()) {
    if (!e.clearing) continue;
    const Params& p = e.instances.front();
    const Comparison c = compare_sides([&](int w) { return e.lhs(p, w); }, [&](int w) { return e.rhs(p, w); }, 20);
    INFO(e.name);
    CHECK(c.clearing == lp_normalized(*e.clearing));
  }
}

TEST_CASE("bivariate entries specialize coherently") {
  for (const auto& e : registry()) {
    if (!e.bivariate()) continue;
    const Params& p = e.instances.front();
    const int order = 24;
    const Comparison c = compare_sides([&](int w) { return e.lhs(p, w); }, [&](int w) { return e.rhs(p, w); }, order);
    const QSeries l = e.lhs(p, order + 8).cleared(c.clearing, order);
    const QSeries r = e.rhs(p, order + 8).cleared(c.clearing, order);
    int span = 0;
    for (int n = l.valuation(); n < order; ++n) {
      for (const auto& [d, v] : l.coeff(n).terms()) span = std::max(span, std::abs(d));
    }
    for (int m = 1; m <= 2; ++m) {
      const XTarget t{Rational(-1), m};
      // x^span makes every x-degree nonnegative, so nothing lands below the window
      const Monomial lift = Monomial::x(span, 0);
      const QSeries ls = subst_x(QSeries(l) * lift, t), rs = subst_x(QSeries(r) * lift, t);
      INFO(e.name, " m=", m);
      CHECK_FALSE(first_mismatch(ls.truncated(order), rs.truncated(order)).has_value());
    }
  }
}

TEST_CASE("a perturbed side fails with the first mismatch") {
  const IdentityEntry* e = find_identity("qtp2");
  REQUIRE(e);
  const Comparison c = compare_sides([&](int w) { return e->lhs({}, w); },
                                     [&](int w) {
                                       PolarSum r = e->rhs({}, w);
                                       return r + PolarSum(QSeries::monomial(Monomial::q(7), w));
                                     },
                                     20);
  REQUIRE(c.mismatch.has_value());
  CHECK(c.mismatch->n == 7);
}

TEST_CASE("suite output does not depend on the worker count") {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport a = run_suite(10, 10, 4);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5.0);
  const SuiteReport b = run_suite(10, 10, 1);
  CHECK(to_json(a) == to_json(b));
  CHECK_FALSE(a.any(Status::fail));
  CHECK_FALSE(a.any(Status::error));
}

TEST_CASE("json schema") {
  const SuiteReport s = run_suite(12, 5, 2);
  const auto j = nlohmann::json::parse(to_json(s));
  CHECK(j["order"] == 12);
  CHECK(j["nMax"] == 5);
  REQUIRE(j["results"].is_array());
  for (const auto& r : j["results"]) {
    CHECK(r.contains("name"));
    CHECK(r["params"].is_object());
    CHECK(r["status"] == "pass");
    CHECK(r["firstMismatch"].is_null());
    CHECK(r["elapsedMs"].is_null());
  }
  const auto t = nlohmann::json::parse(to_json(s, true));
  CHECK(t["results"][0]["elapsedMs"].is_number_integer());
}
