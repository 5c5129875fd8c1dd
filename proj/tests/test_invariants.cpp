// Milnor and sectional Milnor numbers, Lê–Greuel colengths, branch
// transversal data, Euler obstructions, ICIS fibres, and polar curves.
#include <catch_amalgamated.hpp>

#include "germlab/invariants.hpp"
#include "germlab/parser.hpp"
#include "germlab/polar.hpp"

using namespace germlab;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial<Rational> P(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

}  // namespace

TEST_CASE("Brieskorn Milnor grids") {
  for (int a = 2; a <= 5; ++a)
    for (int b = 2; b <= 5; ++b) {
      auto f = P("x^" + std::to_string(a) + " + y^" + std::to_string(b), xy);
      CHECK(milnor_number(f) == ExtNat::of(Integer((a - 1) * (b - 1))));
    }
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b)
      for (int c = 2; c <= 4; ++c) {
        auto f = P("x^" + std::to_string(a) + " + y^" + std::to_string(b) +
                       " + z^" + std::to_string(c),
                   xyz);
        CHECK(milnor_number(f) == ExtNat::of(Integer((a - 1) * (b - 1) * (c - 1))));
      }
}

TEST_CASE("sectional Milnor numbers of the bundled germs") {
  CHECK(sectional_milnor(P("x^3 + y^3 + z^3", xyz), 42).value == ExtNat::of(4));
  CHECK(sectional_milnor(P("x^2 + y^2 + z^2", xyz), 42).value == ExtNat::of(1));
  CHECK(sectional_milnor(P("y^2 - x^3", xy), 42).value == ExtNat::of(1));
  CHECK(sectional_milnor(P("x^2 - y^2*z", xyz), 42).value == ExtNat::of(2));
  CHECK(sectional_milnor(P("x^2 + y^2*z^2", xyz), 42).value == ExtNat::of(3));
}

TEST_CASE("sectional minimum is attained at least twice and is seed-stable") {
  for (std::uint64_t seed : {42ull, 1337ull, 9001ull}) {
    for (const char* text : {"x^3 + y^3 + z^3", "x^2 - y^2*z", "x^2 + y^2*z^2"}) {
      auto r = sectional_milnor(P(text, xyz), seed, 5);
      int hits = 0;
      for (const auto& s : r.samples) hits += s == r.value ? 1 : 0;
      CHECK(hits >= 2);
      CHECK(r.value == sectional_milnor(P(text, xyz), 42).value);
    }
  }
}

TEST_CASE("Le-Greuel colengths") {
  auto l = P("x + 2*y + 3*z", xyz);
  auto whitney = P("x^2 - y^2*z", xyz);
  auto lg = le_greuel_number(l, whitney);
  // with a linear first germ the colength equals mu of the restriction
  CHECK(lg == slice_milnor(whitney, linear_form_coefficients(l)));
  CHECK(lg == ExtNat::of(2));
  // degenerate direction: restriction to z = 0 is x^2
  CHECK(le_greuel_number(P("z", xyz), whitney) == ExtNat::infinity());

  auto sphere = P("x^2 + y^2 + z^2", xyz);
  CHECK(le_greuel_number(sphere, whitney) == ExtNat::of(8));
  CHECK(le_greuel_number(sphere, P("x^2 + y^2*z^2", xyz)) == ExtNat::of(10));
}

TEST_CASE("ICIS fibre Euler characteristics") {
  CHECK(icis_fiber_euler(P("x + y + z", xyz), P("x^2 + y^2 + z^2", xyz)) == 0);
  CHECK(icis_fiber_euler(P("x + y + z", xyz), P("x^3 + y^3 + z^3", xyz)) == -3);
  CHECK(icis_fiber_euler(P("x^2 + y^2 + z^2", xyz), P("x^2 - y^2*z", xyz)) == -6);
  CHECK_THROWS_MATCHES(
      icis_fiber_euler(P("z", xyz), P("x^2 - y^2*z", xyz)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::NotICIS; }));
}

TEST_CASE("Euler obstructions of isolated singularities") {
  CHECK(euler_obstruction_isolated(P("x^2 + y^2 + z^2", xyz), 42) == 0);
  CHECK(euler_obstruction_isolated(P("x^3 + y^3 + z^3", xyz), 42) == -3);
  CHECK(euler_obstruction_isolated(P("y^2 - x^3", xy), 42) == 2);
}

TEST_CASE("transversal data and obstruction of the whitney umbrella") {
  auto g = P("x^2 - y^2*z", xyz);
  auto bs = decompose_critical_locus(jacobian_ideal(g), 42);
  REQUIRE(bs.branches.size() == 1);
  CHECK(bs.certificate == "exact-cover");
  auto data = branch_invariants(g, bs, 42);
  CHECK(data[0].multiplicity == 1);
  CHECK(data[0].transversal.milnor == 1);
  CHECK(data[0].transversal.sectional == 1);
  CHECK(data[0].transversal.euler_obstruction == 2);
  CHECK(euler_obstruction_1dim(g, data, 42) == 1);
}

TEST_CASE("transversal data and obstruction of the two-branch germ") {
  auto g = P("x^2 + y^2*z^2", xyz);
  auto bs = decompose_critical_locus(jacobian_ideal(g), 42);
  REQUIRE(bs.branches.size() == 2);
  CHECK(bs.certificate == "exact-cover");
  auto data = branch_invariants(g, bs, 42);
  for (const auto& d : data) {
    CHECK(d.multiplicity == 1);
    CHECK(d.transversal.milnor == 1);
    CHECK(d.transversal.sectional == 1);
    CHECK(d.transversal.euler_obstruction == 2);
  }
  CHECK(euler_obstruction_1dim(g, data, 42) == 2);
}

TEST_CASE("obstruction formula degenerates to the isolated one") {
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = P("x^" + std::to_string(rng.next_in(2, 4)) + " + y^" +
                   std::to_string(rng.next_in(2, 4)) + " + z^" +
                   std::to_string(rng.next_in(2, 4)),
               xyz);
    std::uint64_t seed = 42 + trial;
    CHECK(euler_obstruction_1dim(g, {}, seed) == euler_obstruction_isolated(g, seed));
  }
}

TEST_CASE("branch multiplicity equals the local degree of a generic linear form") {
  struct Case {
    std::vector<std::string> gens;
    const std::vector<std::string>& vars;
  };
  for (const Case& c : std::vector<Case>{{{"2*x", "-2*y*z", "-1*y^2"}, xyz},
                                         {{"y^2 - x^3", "z"}, xyz},
                                         {{"x", "y^2 - 2*z^2"}, xyz}}) {
    std::vector<Polynomial<Rational>> gens;
    for (const auto& t : c.gens) gens.push_back(P(t, c.vars));
    auto bs =
        decompose_critical_locus(Ideal<Rational>((int)c.vars.size(), gens), 42);
    for (const auto& b : bs.branches) {
      long mult = branch_multiplicity(b, 42);
      for (std::uint64_t seed : {42ull, 1337ull, 9001ull}) {
        CHECK(branch_multiplicity(b, seed) == mult);
        auto l = random_linear_form((int)c.vars.size(), derive_seed(seed, "probe"));
        CHECK(local_degree_along_branch(l, b) == mult);
      }
    }
  }
}

TEST_CASE("Milnor numbers on nearby levels at branch points") {
  Ideal<Rational> comp(3, {P("x", xyz), P("y^2 - 2*z^2", xyz)});
  auto bs = decompose_critical_locus(comp, 42);
  REQUIRE(bs.branches.size() == 2);
  auto f = P("x^2 + y^2 + z^2", xyz);
  auto g = P("x^2 - y^2*z", xyz);
  for (const auto& b : bs.branches)
    CHECK(milnor_on_level_at(f, g, point_on_branch(b, Rational(1, 7))) ==
          ExtNat::of(1));
  std::vector<AlgebraicNumber> axis = {AlgebraicNumber(Rational(1, 7)),
                                       AlgebraicNumber(0L), AlgebraicNumber(0L)};
  CHECK(milnor_on_level_at(f, g, axis) == ExtNat::of(1));
  // away from the critical locus the germ is smooth
  std::vector<AlgebraicNumber> q = {AlgebraicNumber(1L), AlgebraicNumber(0L),
                                    AlgebraicNumber(0L)};
  CHECK(milnor_number_at(f, q) == ExtNat::of(0));
}

TEST_CASE("polar schemes with linear levels") {
  auto l3 = P("x + 2*y + 3*z", xyz);
  {
    auto g = P("x^2 - y^2*z", xyz);
    auto p = polar_scheme(l3, g);
    CHECK(polar_level_count(p, l3) == ExtNat::of(1));
    CHECK(polar_level_count(p, g) == ExtNat::of(3));
    auto pc = polar_curve_with_levels(l3, g, 42);
    REQUIRE(pc.branches.branches.size() == 1);
    CHECK(pc.branches.certificate == "exact-cover");
    CHECK(polar_conservation_sum(pc) == 1);
  }
  {
    auto g = P("x^2 + y^2*z^2", xyz);
    auto p = polar_scheme(l3, g);
    CHECK(polar_level_count(p, l3) == ExtNat::of(1));
    CHECK(polar_level_count(p, g) == ExtNat::of(4));
    auto pc = polar_curve_with_levels(l3, g, 42);
    REQUIRE(pc.branches.branches.size() == 1);
    CHECK(polar_conservation_sum(pc) == 1);
  }
}

TEST_CASE("polar schemes with the sphere level") {
  auto f = P("x^2 + y^2 + z^2", xyz);
  {
    auto g = P("x^2 - y^2*z", xyz);
    auto p = polar_scheme(f, g);
    CHECK(polar_level_count(p, f) == ExtNat::of(6));
    CHECK(polar_level_count(p, g) == ExtNat::of(8));
    auto pc = polar_curve_with_levels(f, g, 42);
    REQUIRE(pc.branches.branches.size() == 3);
    CHECK(pc.branches.certificate == "exact-cover");
    CHECK(polar_conservation_sum(pc) == 6);
  }
  {
    auto g = P("x^2 + y^2*z^2", xyz);
    auto p = polar_scheme(f, g);
    CHECK(polar_level_count(p, f) == ExtNat::of(6));
    CHECK(polar_level_count(p, g) == ExtNat::of(10));
    auto pc = polar_curve_with_levels(f, g, 42);
    REQUIRE(pc.branches.branches.size() == 3);
    CHECK(polar_conservation_sum(pc) == 6);
  }
}

TEST_CASE("polar counts of isolated singularities") {
  auto l3 = P("x + 2*y + 3*z", xyz);
  {
    auto p = polar_scheme(l3, P("x^3 + y^3 + z^3", xyz));
    CHECK(polar_level_count(p, l3) == ExtNat::of(4));          // mu'
    CHECK(polar_level_count(p, P("x^3 + y^3 + z^3", xyz)) == ExtNat::of(12));  // mu + mu'
  }
  {
    auto p = polar_scheme(l3, P("x^2 + y^2 + z^2", xyz));
    CHECK(polar_level_count(p, l3) == ExtNat::of(1));
    CHECK(polar_level_count(p, P("x^2 + y^2 + z^2", xyz)) == ExtNat::of(2));
  }
  {
    auto l2 = P("x + 2*y", xy);
    auto p = polar_scheme(l2, P("y^2 - x^3", xy));
    CHECK(polar_level_count(p, l2) == ExtNat::of(1));
    CHECK(polar_level_count(p, P("y^2 - x^3", xy)) == ExtNat::of(3));
  }
}

TEST_CASE("proportional germs have no polar curve") {
  auto g = P("x^2 + y^2 + z^2", xyz);
  CHECK_THROWS_MATCHES(
      polar_curve_with_levels(g, g, 42), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::PolarNotCurve; }));
}
