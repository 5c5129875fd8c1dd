// Brasselet numbers: Milnor-fibre chi on the three ambient kinds, slice
// characteristics on a singular hypersurface, and stratification refinement.
#include <catch_amalgamated.hpp>

#include "germlab/brasselet.hpp"
#include "germlab/parser.hpp"

using namespace germlab;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

Polynomial<Rational> P(const std::string& text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, vars);
}

}  // namespace

TEST_CASE("Milnor fibre chi on affine space") {
  auto aff3 = AmbientSpace::affine(3);
  CHECK(chi_milnor_fiber(P("x + 2*y + 3*z", xyz), aff3, 42) == 1);
  CHECK(chi_milnor_fiber(P("x^2 + y^2 + z^2", xyz), aff3, 42) == 2);
  CHECK(chi_milnor_fiber(P("x^3 + y^3 + z^3", xyz), aff3, 42) == 9);
  CHECK(chi_milnor_fiber(P("y^2 - x^3", xy), AmbientSpace::affine(2), 42) == -1);
  CHECK_THROWS_MATCHES(
      chi_milnor_fiber(P("x^2 - y^2*z", xyz), aff3, 42), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::NonIsolated; }));
}

TEST_CASE("isolated-hypersurface ambient") {
  auto x = AmbientSpace::isolated_hypersurface(P("x^2 + y^2 + z^2", xyz));
  CHECK(x.d == 2);
  CHECK(x.n == 3);
  CHECK(chi_milnor_fiber(P("x + 2*y + 3*z", xyz), x, 42) == 0);
  CHECK(x.eu_origin(42) == 0);
  CHECK(x.eu_regular() == 1);

  auto xb = AmbientSpace::isolated_hypersurface(P("x^3 + y^3 + z^3", xyz));
  CHECK(xb.eu_origin(42) == -3);

  CHECK_THROWS_MATCHES(
      AmbientSpace::isolated_hypersurface(P("x^2 - y^2*z", xyz)), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::NonIsolated; }));
}

TEST_CASE("declared ambient sums the user table") {
  StratificationDescriptor v;
  Stratum reg;
  reg.name = "regular";
  reg.dim = 3;
  reg.eu = 1;
  reg.chi = Integer(2);
  v.strata.push_back(reg);
  Stratum o;
  o.name = "origin";
  o.dim = 0;
  o.contains_origin = true;
  v.strata.push_back(o);

  auto x = AmbientSpace::declared(3, 3, v);
  CHECK(chi_milnor_fiber(P("x^2 + y^2 + z^2", xyz), x, 42) == 2);

  v.strata[0].chi.reset();
  CHECK_THROWS_MATCHES(
      brasselet_assembly(v), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::MissingStratumChi; }));
}

TEST_CASE("slice chi and Brasselet numbers on a singular hypersurface") {
  auto l3 = P("x + 2*y + 3*z", xyz);
  auto sphere = P("x^2 + y^2 + z^2", xyz);
  auto whitney = P("x^2 - y^2*z", xyz);
  auto twob = P("x^2 + y^2*z^2", xyz);

  struct Case {
    Polynomial<Rational> f, g;
    long f_degree;
    Integer level_mu, chi_slice, b_number;
  };
  for (const Case& c : std::vector<Case>{
           {l3, whitney, 1, 1, 0, 1},
           {l3, twob, 1, 1, 0, 2},
           {sphere, whitney, 2, 1, -4, -2},
           {sphere, twob, 2, 1, -4, 0},
       }) {
    auto bs = decompose_critical_locus(jacobian_ideal(c.g), 42);
    auto levels = branch_level_data(c.f, c.g, bs);
    for (const auto& d : levels) {
      CHECK(d.f_degree == c.f_degree);
      CHECK(d.level_milnor == c.level_mu);
      CHECK(d.level_b == Integer(1) - d.level_milnor);
    }
    CHECK(chi_hypersurface_slice(c.g, c.f, levels) == c.chi_slice);

    auto data = branch_invariants(c.g, bs, 42);
    std::vector<Integer> branch_eu;
    for (const auto& d : data) branch_eu.push_back(d.transversal.euler_obstruction);
    Integer eu0 = euler_obstruction_1dim(c.g, data, 42);
    CHECK(brasselet_number_on_hypersurface(c.f, c.g, levels, branch_eu, eu0, bs) ==
          c.b_number);
  }
}

TEST_CASE("stratification refinement and normal Morse indices") {
  StratificationDescriptor base;
  Stratum top;
  top.name = "complement";
  top.dim = 3;
  base.strata.push_back(top);
  Stratum lvl;
  lvl.name = "zero-level";
  lvl.dim = 2;
  lvl.in_zero_f = true;
  base.strata.push_back(lvl);
  Stratum o;
  o.name = "origin";
  o.dim = 0;
  o.contains_origin = true;
  o.in_zero_f = true;
  o.in_zero_g = true;
  base.strata.push_back(o);

  auto bs = decompose_critical_locus(jacobian_ideal(P("x^2 - y^2*z", xyz)), 42);
  auto first = refine_first(base, bs, {Integer(2)});
  CHECK(first.strata.size() == 4);
  auto second = refine_second(base, bs, {Integer(2)});
  CHECK(second.strata.size() == 6);

  BranchSet none;
  auto unchanged = refine_first(base, none, {});
  CHECK(unchanged.strata.size() == base.strata.size());
  auto regular_split = refine_second(base, none, {});
  CHECK(regular_split.strata.size() == 5);

  CHECK(normal_morse_index(first.strata[0], first.strata[0]) == 1);
  CHECK(normal_morse_index(first.strata[0], first.strata[1]) == 0);
  CHECK_THROWS_MATCHES(
      normal_morse_index(first.strata[0], first.strata[0], WeightKind::Unit), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.kind() == Errc::UnsupportedWeight; }));
}
