// Polynomial arithmetic, parsing, monomial orders, univariate polynomials,
// and the quadratic-extension coefficient field.
#include <catch_amalgamated.hpp>

#include "germlab/algebraic.hpp"
#include "germlab/monomial.hpp"
#include "germlab/parser.hpp"
#include "germlab/polynomial.hpp"
#include "germlab/puiseux.hpp"
#include "germlab/unipoly.hpp"

using namespace germlab;
using A = AlgebraicNumber;

static const std::vector<std::string> xy = {"x", "y"};
static const std::vector<std::string> xyz = {"x", "y", "z"};

TEST_CASE("parser accepts the documented grammar") {
  CHECK(render_polynomial(parse_polynomial("x^3 - y^2", xy), xy) ==
        "x^3 - y^2");
  CHECK(render_polynomial(parse_polynomial("(x + y)^2 - x^2 - y^2", xy), xy) ==
        "2*x*y");
  CHECK(render_polynomial(parse_polynomial("1/2*x - 3*y", xy), xy) ==
        "1/2*x - 3*y");
  CHECK(render_polynomial(parse_polynomial("-x", xy), xy) == "-x");
  CHECK(parse_polynomial("0", xy).is_zero());
  // exponent zero and one
  CHECK(render_polynomial(parse_polynomial("x^1 + y^0", xy), xy) == "x + 1");
}

TEST_CASE("parser rejects what the grammar excludes") {
  auto rejects = [&](const std::string& text, Errc want) {
    try {
      parse_polynomial(text, xy);
      return false;
    } catch (const Error& e) {
      return e.kind() == want;
    }
  };
  CHECK(rejects("2x", Errc::SyntaxError));        // implicit multiplication
  CHECK(rejects("x y", Errc::SyntaxError));       // implicit multiplication
  CHECK(rejects("x^-1", Errc::SyntaxError));      // negative exponent
  CHECK(rejects("x^(2)", Errc::SyntaxError));     // exponent must be a literal
  CHECK(rejects("x +* y", Errc::SyntaxError));
  CHECK(rejects("x + ", Errc::SyntaxError));
  CHECK(rejects("x + w", Errc::UnknownVariable));
  CHECK(rejects("x / y", Errc::SyntaxError));     // division only inside numbers
  CHECK(rejects("x - -y", Errc::SyntaxError));    // unary minus only leads expr
}

TEST_CASE("parse/render round-trips on structured germs") {
  for (const std::string text :
       {"x^2 - y^2*z", "x^2 + y^2*z^2", "x^3 + y^3 + z^3",
        "x^2 + y^2 + z^2", "x + 2*y + 3*z", "x^4 - 2*x^2*y^3 + y^6"}) {
    auto p = parse_polynomial(text, xyz);
    auto q = parse_polynomial(render_polynomial(p, xyz), xyz);
    CHECK(p == q);
  }
}

TEST_CASE("calculus and substitution behave") {
  auto f = parse_polynomial("x^2 - y^2*z", xyz);
  CHECK(render_polynomial(f.differentiate(0), xyz) == "2*x");
  CHECK(render_polynomial(f.differentiate(1), xyz) == "-2*y*z");
  CHECK(render_polynomial(f.differentiate(2), xyz) == "-y^2");

  // Evaluate on the parametrisation of the singular axis: identically zero.
  auto x = Polynomial<Rational>::variable(3, 0);
  auto y = Polynomial<Rational>::variable(3, 1);
  auto z = Polynomial<Rational>::variable(3, 2);
  auto zero3 = Polynomial<Rational>(3);
  CHECK(f.substitute({zero3, zero3, z}).is_zero());

  // Translation moves the germ: f(x+1, y, z) has a constant-free expansion
  // shifted by the gradient.
  auto g = f.translated({Rational(1), Rational(0), Rational(0)});
  CHECK(g.constant_term() == 1);
  CHECK(f.evaluate({Rational(1), Rational(2), Rational(3)}) ==
        Rational(1) - Rational(12));
}

TEST_CASE("monomial orders: degrevlex, local, block") {
  auto drl = MonomialOrder::degrevlex();
  auto loc = MonomialOrder::negdegrevlex();
  Monomial x2 = {2, 0, 0}, xy_ = {1, 1, 0}, y2 = {0, 2, 0}, one = {0, 0, 0},
           z3 = {0, 0, 3};
  // global: higher degree wins; ties broken reverse-lexicographically
  CHECK(drl.cmp(z3, x2) > 0);
  CHECK(drl.cmp(x2, xy_) > 0);
  CHECK(drl.cmp(xy_, y2) > 0);
  CHECK(drl.cmp(x2, one) > 0);
  // local: LOWER degree is larger (units dominate)
  CHECK(loc.cmp(one, x2) > 0);
  CHECK(loc.cmp(x2, z3) > 0);
  CHECK_FALSE(loc.global());

  // block order with z in the leading block: any z beats everything without
  auto blk = MonomialOrder::block({0, 0, 1});
  Monomial z1 = {0, 0, 1};
  CHECK(blk.cmp(z1, x2) > 0);
  CHECK(blk.cmp(z3, z1) > 0);
  CHECK(blk.cmp(x2, xy_) > 0);  // within the tail block, degrevlex
}

TEST_CASE("random linear forms have full support and are seed-stable") {
  for (std::uint64_t seed : {1ull, 42ull, 1337ull, 9001ull}) {
    auto l = random_linear_form(4, seed);
    CHECK(l.total_degree() == 1);
    CHECK(l.term_count() == 4);  // every variable appears
    CHECK(l == random_linear_form(4, seed));
  }
  CHECK_FALSE(random_linear_form(3, 1) == random_linear_form(3, 2));
}

TEST_CASE("univariate division, gcd, squarefree") {
  using U = UniPoly<Rational>;
  U a({Rational(-1), Rational(0), Rational(1)});           // t^2 - 1
  U b({Rational(-1), Rational(1)});                        // t - 1
  auto [q, r] = divrem(a, b);
  CHECK(r.is_zero());
  CHECK(q == U({Rational(1), Rational(1)}));

  U c = a * b;  // (t-1)^2 (t+1)
  U g = gcd(c, c.derivative());
  CHECK(g.degree() == 1);  // the repeated factor
  U sf = squarefree_part(c);
  CHECK(sf.degree() == 2);
  CHECK(divrem(sf, b).second.is_zero());
}

TEST_CASE("quadratic extension arithmetic is a field") {
  auto mp = UniPoly<Rational>({Rational(-2), Rational(0), Rational(1)});
  auto fld = std::make_shared<NumberField>(mp, "r");
  A r = A::generator(fld);
  CHECK((r * r).is_rational());
  CHECK((r * r).rational_value() == 2);

  // inverses of generic elements
  A u = r + A(Rational(3));
  A inv = A(Rational(1)) / u;
  CHECK((u * inv).rational_value() == 1);

  // conjugation fixes rationals and negates the radical part
  A c = conjugate_in_field(r);
  CHECK((r + c).is_rational());
  CHECK((r + c).rational_value() == 0);
  CHECK((r * c).rational_value() == -2);

  // square roots: inside the field when possible, refused beyond
  auto s = sqrt_in_field(A(Rational(4)));
  REQUIRE(s.status == SquareStatus::Square);
  CHECK(s.root->rational_value() == 2);
  auto s2 = sqrt_in_field(A(Rational(2)));
  CHECK(s2.status == SquareStatus::NotSquare);  // over plain Q
  // 2 = r^2 IS a square inside Q(r)
  A two_in_field = r * r;
  auto s3 = sqrt_in_field(two_in_field + (r - r));  // same field tag as r
  CHECK(s3.status == SquareStatus::Square);
}

TEST_CASE("polynomials over the extension field") {
  auto mp = UniPoly<Rational>({Rational(-2), Rational(0), Rational(1)});
  auto fld = std::make_shared<NumberField>(mp, "r");
  A r = A::generator(fld);

  auto f = parse_polynomial("x^2 - 2*y^2", xy);
  auto fa = to_algebraic(f);
  // x^2 - 2 y^2 = (x - r y)(x + r y)
  auto x = Polynomial<A>::variable(2, 0);
  auto y = Polynomial<A>::variable(2, 1);
  auto prod = (x - r * y) * (x + r * y);
  CHECK(fa == prod);
  // evaluation at (r, 1) vanishes
  CHECK(fa.evaluate({r, A(1L)}) == A(0L));
}
