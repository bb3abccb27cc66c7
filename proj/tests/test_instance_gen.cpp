#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "twopaths/instance_gen.hpp"
#include "twopaths/oracle.hpp"

using namespace twopaths;

namespace {

constexpr CaseKind kSupported[] = {
    CaseKind::ShortShort,     CaseKind::ShortExact, CaseKind::ExactExact,
    CaseKind::ShortUnbounded, CaseKind::ExactUnbounded,
    CaseKind::ShortLong,      CaseKind::ExactLong,
};

}  // namespace

TEST_CASE("gen_random is deterministic and respects its bounds") {
  auto a = gen_random(8, 12, TerminalRule::Distinct, LengthConstraint::at_most(3),
                      LengthConstraint::unbounded(), 7);
  auto b = gen_random(8, 12, TerminalRule::Distinct, LengthConstraint::at_most(3),
                      LengthConstraint::unbounded(), 7);
  CHECK(serialize_instance(a) == serialize_instance(b));
  CHECK(a.graph.vertex_count() == 8);
  CHECK(a.graph.edge_count() == 12);

  auto c = gen_random(8, 12, TerminalRule::Distinct, LengthConstraint::at_most(3),
                      LengthConstraint::unbounded(), 8);
  CHECK(serialize_instance(a) != serialize_instance(c));

  CHECK_THROWS_AS(gen_random(4, 7, TerminalRule::Distinct, LengthConstraint::unbounded(),
                             LengthConstraint::unbounded(), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_random(3, 2, TerminalRule::Distinct, LengthConstraint::unbounded(),
                             LengthConstraint::unbounded(), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_random(8, -1, TerminalRule::Distinct, LengthConstraint::unbounded(),
                             LengthConstraint::unbounded(), 1),
                  std::invalid_argument);

  // Exactly full density is fine.
  auto full = gen_random(5, 10, TerminalRule::Distinct, LengthConstraint::unbounded(),
                         LengthConstraint::unbounded(), 3);
  CHECK(full.graph.edge_count() == 10);
}

TEST_CASE("gen_random draws edges roughly uniformly") {
  // Every pair of a 6-vertex graph should appear eventually.
  std::set<std::pair<int, int>> seen;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    auto inst = gen_random(6, 7, TerminalRule::Distinct, LengthConstraint::unbounded(),
                           LengthConstraint::unbounded(), 1000 + seed);
    for (const Edge& e : inst.graph.edges()) seen.insert({e.u, e.v});
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("terminal rules shape the terminal tuple") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto distinct = gen_random(9, 10, TerminalRule::Distinct, LengthConstraint::at_most(2),
                               LengthConstraint::at_most(2), seed);
    std::set<int> ids{distinct.s1, distinct.t1, distinct.s2, distinct.t2};
    CHECK(ids.size() == 4);

    auto coincident = gen_random(9, 10, TerminalRule::Coincident, LengthConstraint::at_most(2),
                                 LengthConstraint::at_most(2), seed);
    CHECK(coincident.s1 == coincident.s2);
    CHECK(coincident.t1 == coincident.t2);
    CHECK(coincident.s1 != coincident.t1);

    auto crossing = gen_random(9, 10, TerminalRule::CrossingCycle, LengthConstraint::at_most(2),
                               LengthConstraint::at_most(2), seed);
    CHECK(crossing.s1 < crossing.s2);
    CHECK(crossing.s2 < crossing.t1);
    CHECK(crossing.t1 < crossing.t2);
  }
}

TEST_CASE("terminal rule names round-trip") {
  for (auto rule :
       {TerminalRule::Distinct, TerminalRule::Coincident, TerminalRule::CrossingCycle}) {
    auto back = terminal_rule_from_name(terminal_rule_name(rule));
    REQUIRE(back.has_value());
    CHECK(*back == rule);
  }
  CHECK(!terminal_rule_from_name("bogus").has_value());
}

TEST_CASE("constraints_for_case covers the supported kinds") {
  CHECK(constraints_for_case(CaseKind::ShortShort, 2, 3) ==
        std::pair{LengthConstraint::at_most(2), LengthConstraint::at_most(3)});
  CHECK(constraints_for_case(CaseKind::ShortExact, 2, 3) ==
        std::pair{LengthConstraint::at_most(2), LengthConstraint::exactly(3)});
  CHECK(constraints_for_case(CaseKind::ExactExact, 2, 3) ==
        std::pair{LengthConstraint::exactly(2), LengthConstraint::exactly(3)});
  CHECK(constraints_for_case(CaseKind::ShortUnbounded, 2, 3) ==
        std::pair{LengthConstraint::at_most(2), LengthConstraint::unbounded()});
  CHECK(constraints_for_case(CaseKind::ExactUnbounded, 2, 3) ==
        std::pair{LengthConstraint::exactly(2), LengthConstraint::unbounded()});
  CHECK(constraints_for_case(CaseKind::ShortLong, 2, 3) ==
        std::pair{LengthConstraint::at_most(2), LengthConstraint::at_least(3)});
  CHECK(constraints_for_case(CaseKind::ExactLong, 2, 3) ==
        std::pair{LengthConstraint::exactly(2), LengthConstraint::at_least(3)});
  CHECK_THROWS_AS(constraints_for_case(CaseKind::OpenLongLong, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(constraints_for_case(CaseKind::Unconstrained, 2, 3), std::invalid_argument);
}

TEST_CASE("gen_planted certificates verify in every supported shape") {
  for (CaseKind kind : kSupported) {
    for (std::uint64_t seed : {0ull, 5ull, 11ull}) {
      PlantedShape shape{kind, 2, 3, 3, 4};
      auto [inst, cert] = gen_planted(shape, seed);
      CAPTURE(case_name(kind));
      CAPTURE(seed);
      auto [c1, c2] = constraints_for_case(kind, 2, 3);
      CHECK(inst.c1 == c1);
      CHECK(inst.c2 == c2);
      CHECK(verify_solution(inst, cert.p1, cert.p2).valid());
    }
  }
}

TEST_CASE("gen_planted is deterministic and decoy-sized as requested") {
  PlantedShape shape{CaseKind::ShortShort, 2, 2, 5, 6};
  auto [a, cert_a] = gen_planted(shape, 99);
  auto [b, cert_b] = gen_planted(shape, 99);
  CHECK(serialize_instance(a) == serialize_instance(b));
  CHECK(cert_a.p1 == cert_b.p1);
  CHECK(cert_a.p2 == cert_b.p2);

  // Planted paths take 3 + 3 vertices and 2 + 2 edges; decoys add on top.
  CHECK(a.graph.vertex_count() == 6 + 5);
  CHECK(a.graph.edge_count() == 4 + 6);

  auto [c, cert_c] = gen_planted(shape, 100);
  CHECK(serialize_instance(a) != serialize_instance(c));
}

TEST_CASE("gen_planted validates its shape") {
  CHECK_THROWS_AS(gen_planted({CaseKind::OpenLongLong, 1, 1, 0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_planted({CaseKind::ShortShort, -1, 1, 0, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_planted({CaseKind::ShortShort, 1, 1, -2, 0}, 1), std::invalid_argument);
  // More decoy edges than the final vertex count allows.
  CHECK_THROWS_AS(gen_planted({CaseKind::ShortShort, 1, 1, 0, 100}, 1), std::invalid_argument);
}

TEST_CASE("oracle confirms yes on small planted instances") {
  for (CaseKind kind : kSupported) {
    PlantedShape shape{kind, 1, 2, 2, 2};
    auto [inst, cert] = gen_planted(shape, 31);
    CAPTURE(case_name(kind));
    REQUIRE(inst.graph.vertex_count() <= 12);
    CHECK(oracle_solve(inst).has_value());
  }
}

TEST_CASE("zero-length plants are allowed where the case admits them") {
  PlantedShape shape{CaseKind::ShortShort, 0, 1, 0, 0};
  auto [inst, cert] = gen_planted(shape, 4);
  CHECK(cert.p1.length() == 0);
  CHECK(inst.s1 == inst.t1);
  CHECK(verify_solution(inst, cert.p1, cert.p2).valid());
}
