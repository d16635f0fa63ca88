#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "specbim/oracle.hpp"
#include "specbim/sweep.hpp"

using namespace specbim;

namespace {

Point pt(const Realisation& real, std::vector<long> pairings) {
  Vec v;
  for (long p : pairings) v.push_back(Scalar(p));
  return point_from_pairings(real, v);
}

const LocalProfile& entry_at(const SupportDecomposition& sup, const OrbitTable& table,
                             const Point& p) {
  const LocalProfile* local = sup.at(table.index_of(p));
  REQUIRE(local != nullptr);
  return *local;
}

}  // namespace

TEST_CASE("point modules") {
  Realisation real = Realisation::named("A2");
  Point a{Vec{Scalar(3), Scalar::fraction(-1, 2)}};
  FinModule m = point_module(real, a);
  CHECK(m.dim_k == 1);
  REQUIRE(m.actions.size() == 2);
  CHECK(m.actions[0](0, 0) == Scalar(3));
  CHECK(m.actions[1](0, 0) == Scalar::fraction(-1, 2));
  CHECK(actions_commute(m));

  FinModule zero = point_module(real, pt(real, {0, 0}));
  CHECK(zero.actions[0].is_zero());
  CHECK(zero.actions[1].is_zero());
}

TEST_CASE("apply_Bs doubles the dimension and splits the support") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  Point s2a = brute::apply(real.element_from_word({1}), a);
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  SUBCASE("generator moving the point: two eigenpoints") {
    FinModule m = apply_Bs(real, point_module(real, a), 1);
    CHECK(m.dim_k == 2);
    CHECK(actions_commute(m));
    SupportDecomposition sup = support_decompose(real, m, *table);
    CHECK(sup.total_dim == 2);
    REQUIRE(sup.entries.size() == 2);
    CHECK(entry_at(sup, *table, a).dim == 1);
    CHECK(entry_at(sup, *table, a).profile == std::vector<int>{1, 0});
    CHECK(entry_at(sup, *table, s2a).dim == 1);
    CHECK(entry_at(sup, *table, s2a).profile == std::vector<int>{1, 0});
  }

  SUBCASE("generator fixing the point: one non-semisimple block") {
    FinModule m = apply_Bs(real, point_module(real, a), 0);
    CHECK(m.dim_k == 2);
    SupportDecomposition sup = support_decompose(real, m, *table);
    REQUIRE(sup.entries.size() == 1);
    CHECK(entry_at(sup, *table, a).dim == 2);
    CHECK(entry_at(sup, *table, a).profile == std::vector<int>{2, 1, 0});
  }

  SUBCASE("iterating doubles each time") {
    FinModule m = point_module(real, a);
    for (int i = 0; i < 4; ++i) {
      m = apply_Bs(real, m, i % 2);
      CHECK(m.dim_k == (1 << (i + 1)));
    }
    CHECK(actions_commute(m));
  }
}

TEST_CASE("apply_Bs accepts non-simple reflections") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  Point s2a = brute::apply(real.element_from_word({1}), a);
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  // s2s1s2 fixes s2a; its Demazure splitting uses the conjugated root
  Reflection r = real.reflection_from(real.element_from_word({1}), 0);
  FinModule m = apply_Bs(real, point_module(real, s2a), r);
  CHECK(m.dim_k == 2);
  CHECK(actions_commute(m));
  SupportDecomposition sup = support_decompose(real, m, *table);
  REQUIRE(sup.entries.size() == 1);
  CHECK(entry_at(sup, *table, s2a).profile == std::vector<int>{2, 1, 0});

  // a reflection moving the point splits into the two-point support
  FinModule split = apply_Bs(real, point_module(real, a), r);
  SupportDecomposition sup2 = support_decompose(real, split, *table);
  CHECK(sup2.entries.size() == 2);
}

TEST_CASE("worked support decompositions at the A2 wall point") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  Point s2a = brute::apply(real.element_from_word({1}), a);
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  FinModule w1 = build_bs_module(real, {0}, a);
  SupportDecomposition sup1 = support_decompose(real, w1, *table);
  REQUIRE(sup1.entries.size() == 1);
  CHECK(entry_at(sup1, *table, a).dim == 2);
  CHECK(entry_at(sup1, *table, a).profile == std::vector<int>{2, 1, 0});

  FinModule w2 = build_bs_module(real, {1}, a);
  SupportDecomposition sup2 = support_decompose(real, w2, *table);
  REQUIRE(sup2.entries.size() == 2);
  CHECK(entry_at(sup2, *table, a).dim == 1);
  CHECK(entry_at(sup2, *table, s2a).dim == 1);

  FinModule w21 = build_bs_module(real, {1, 0}, a);
  CHECK(w21.dim_k == 4);
  SupportDecomposition sup21 = support_decompose(real, w21, *table);
  CHECK(sup21.total_dim == 4);
  CHECK(entry_at(sup21, *table, a).dim == 2);
  CHECK(entry_at(sup21, *table, s2a).dim == 2);
}

TEST_CASE("all constructed modules have commuting actions") {
  for (const std::string& type : {"A2", "B2", "G2"}) {
    CAPTURE(type);
    Realisation real = Realisation::named(type);
    for (const auto& walls : wall_subsets(real.rank())) {
      Point a = sample_dominant_point(real, walls);
      for (const Word& w : words_up_to(real.rank(), 4)) {
        CHECK(actions_commute(build_bs_module(real, w, a)));
      }
    }
  }
  // one deeper case: the module invariant extends to length 6
  Realisation a2 = Realisation::named("A2");
  FinModule deep = build_bs_module(a2, {0, 1, 0, 1, 0, 1}, pt(a2, {0, 1}));
  CHECK(deep.dim_k == 64);
  CHECK(actions_commute(deep));
}

TEST_CASE("twist") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});

  SUBCASE("point modules twist to point modules, over the whole group") {
    for (const auto& g : brute::full_group(real)) {
      Point ga = brute::apply(g, a);
      for (int s = 0; s < real.rank(); ++s) {
        GroupElement sg = real.multiply(real.element_from_word(Word{s}), g);
        FinModule lhs = twist(real, point_module(real, ga), real.element_from_word(Word{s}));
        FinModule rhs = point_module(real, brute::apply(sg, a));
        CHECK(lhs.actions == rhs.actions);
      }
    }
  }

  SUBCASE("identity and involution") {
    FinModule m = build_bs_module(real, {1, 0}, a);
    FinModule e = twist(real, m, real.identity_element());
    CHECK(e.actions == m.actions);
    GroupElement s1 = real.element_from_word({0});
    FinModule back = twist(real, twist(real, m, s1), s1);
    CHECK(back.actions == m.actions);
  }

  SUBCASE("support relabels along the twist") {
    auto table = orbit_table(real, a);
    REQUIRE(table.has_value());
    FinModule m = build_bs_module(real, {1, 0}, a);
    SupportDecomposition before = support_decompose(real, m, *table);
    for (const auto& g : brute::full_group(real)) {
      FinModule t = twist(real, m, g);
      CHECK(actions_commute(t));
      SupportDecomposition after = support_decompose(real, t, *table);
      CHECK(after.total_dim == before.total_dim);
      for (const auto& entry : before.entries) {
        Point p = table->points()[entry.orbit_index].point;
        const LocalProfile* moved = after.at(table->index_of(brute::apply(g, p)));
        REQUIRE(moved != nullptr);
        CHECK(moved->dim == entry.local.dim);
        CHECK(moved->profile == entry.local.profile);
      }
    }
  }
}

TEST_CASE("support outside the orbit is an error, not a silent drop") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  // a point module off the orbit of a
  FinModule stray = point_module(real, pt(real, {2, 2}));
  CHECK_THROWS_AS(support_decompose(real, stray, *table), std::domain_error);
  try {
    support_decompose(real, stray, *table);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("support outside orbit") != std::string::npos);
  }
}

TEST_CASE("whole module profile") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  CHECK(whole_module_profile(point_module(real, a), a) == std::vector<int>{1, 0});
  FinModule m = build_bs_module(real, {0}, a);
  CHECK(whole_module_profile(m, a) == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(whole_module_profile(m, pt(real, {1, 1})), std::domain_error);
}

TEST_CASE("actions_commute detects non-commuting families") {
  FinModule bad;
  bad.dim_k = 2;
  bad.actions = {Mat::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}}),
                 Mat::from_rows({{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}})};
  CHECK(!actions_commute(bad));
}

TEST_CASE("verify_decomposition on the worked examples") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  for (const BSWord& w :
       std::vector<BSWord>{{}, {0}, {1}, {1, 0}, {0, 1, 0}, {1, 0, 1, 0}}) {
    CAPTURE(word_str(w));
    VerificationReport rep = verify_decomposition(real, w, a, *table, nullptr);
    CHECK(rep.pass);
    CHECK(rep.failure.empty());
    CHECK(rep.module_dim == (std::size_t{1} << w.size()));
    for (const auto& pc : rep.points) {
      CHECK(pc.pass);
      CHECK(pc.engine_dim == pc.oracle_dim);
      CHECK(pc.engine_profile == pc.oracle_profile);
    }
  }

  // degenerate endpoints
  VerificationReport at_zero = verify_decomposition(real, {0, 1, 0}, pt(real, {0, 0}));
  CHECK(at_zero.pass);
  VerificationReport regular = verify_decomposition(real, {0, 1}, pt(real, {1, 2}));
  CHECK(regular.pass);
  for (const auto& pc : regular.points) {
    if (pc.oracle_dim == 0) continue;
    CHECK(pc.oracle_profile == std::vector<int>{1, 0});
  }

  // one spot check beyond A2
  Realisation b2 = Realisation::named("B2");
  VerificationReport b2rep = verify_decomposition(b2, {0, 1, 0}, pt(b2, {0, 1}));
  CHECK(b2rep.pass);
}

TEST_CASE("summand profile cache") {
  Realisation real = Realisation::named("A2");
  Point a = pt(real, {0, 1});
  auto table = orbit_table(real, a);
  REQUIRE(table.has_value());

  SummandProfileCache cache;
  std::vector<Reflection> letters{real.simple_reflection(0)};
  CHECK(!cache.find(a, letters).has_value());
  cache.store(a, letters, {2, 1, 0});
  auto hit = cache.find(a, letters);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{2, 1, 0});
  CHECK(!cache.find(a, {}).has_value());

  // a shared cache across repeated verifications keeps results identical
  SummandProfileCache shared;
  VerificationReport first = verify_decomposition(real, {1, 0}, a, *table, &shared);
  VerificationReport second = verify_decomposition(real, {1, 0}, a, *table, &shared);
  CHECK(first.pass);
  CHECK(second.pass);
  REQUIRE(first.points.size() == second.points.size());
  for (std::size_t i = 0; i < first.points.size(); ++i) {
    CHECK(first.points[i].oracle_profile == second.points[i].oracle_profile);
  }
}

TEST_CASE("verify_decomposition convenience overload builds its own table") {
  Realisation real = Realisation::named("A2");
  VerificationReport rep = verify_decomposition(real, {1, 0}, pt(real, {0, 1}));
  CHECK(rep.pass);

  TitsCaps tiny;
  tiny.orbit = 1;
  CHECK_THROWS_AS(
      verify_decomposition(real, {1, 0}, pt(real, {1, 2}), tiny), std::domain_error);
}
