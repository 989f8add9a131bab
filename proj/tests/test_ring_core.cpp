#include <catch2/catch_amalgamated.hpp>

#include <cmreg/cmreg.hpp>

using namespace cmreg;

TEST_CASE("binomials use the truncated convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(2, -1) == 0);
  CHECK(binomial(Int(40), 20) == Int("137846528820"));
  CHECK(factorial(6) == 720);
}

TEST_CASE("rational polynomial arithmetic") {
  RatPoly x = RatPoly::x();
  RatPoly p = x * x + RatPoly::constant(2) * x; // X^2 + 2X
  CHECK(p.degree() == 2);
  CHECK(p.eval(3) == 15);
  CHECK(p.lc() == 1);
  CHECK((p - p).degree() == -1);
  CHECK(p * RatPoly::constant(Rat(1, 2)) == RatPoly::constant(Rat(1, 2)) * p);

  // C(X+1, 2) = X(X+1)/2
  RatPoly b = binomial_poly(x + RatPoly::constant(1), 2);
  CHECK(b.eval(3) == 6);
  CHECK(b.eval(0) == 0);
  CHECK(binomial_poly(x, 0) == RatPoly::constant(1));

  CHECK(is_integer(Rat(4, 2)));
  CHECK(!is_integer(Rat(1, 3)));
  CHECK(to_int(Rat(6, 2)) == 3);
}

TEST_CASE("monomial operations") {
  Monomial u({2, 1, 0}); // x^2 y
  Monomial v({0, 1, 1}); // y z
  CHECK(u.degree() == 3);
  CHECK(u.max_index() == 1);
  CHECK(Monomial::one(3).max_index() == -1);
  CHECK((u * v) == Monomial({2, 2, 1}));
  CHECK(u.lcm(v) == Monomial({2, 1, 1}));
  CHECK(u.gcd(v) == Monomial({0, 1, 0}));
  CHECK(!u.divides(v));
  CHECK(u.gcd(v).divides(u));
  CHECK(Monomial({2, 0, 0}).coprime(Monomial({0, 0, 3})));
  CHECK(u.swap_var(0, 2) == Monomial({1, 1, 1})); // one factor x moved to z
  CHECK(u.str({"x", "y", "z"}) == "x^2*y");
  CHECK(Monomial::one(3).str({"x", "y", "z"}) == "1");
}

TEST_CASE("term orders match the fixed conventions") {
  // variables are listed largest first: x > y > z
  Monomial y2({0, 2, 0}), xz({1, 0, 1}), x({1, 0, 0}), y({0, 1, 0});

  SECTION("degrevlex prefers y^2 over xz") {
    CHECK(cmp_monomials(y2, xz, TermOrder::degrevlex) > 0);
    CHECK(cmp_monomials(xz, y2, TermOrder::degrevlex) < 0);
    CHECK(cmp_monomials(y2, y2, TermOrder::degrevlex) == 0);
  }
  SECTION("lex prefers xz over y^2") {
    CHECK(cmp_monomials(xz, y2, TermOrder::lex) > 0);
    CHECK(cmp_monomials(x, y, TermOrder::lex) > 0);
  }
  SECTION("degree dominates in degrevlex") {
    CHECK(cmp_monomials(Monomial({0, 0, 3}), Monomial({2, 0, 0}), TermOrder::degrevlex) > 0);
  }
  SECTION("monomials_of_degree is complete and descending") {
    auto mons = monomials_of_degree(3, 2);
    REQUIRE(mons.size() == 6);
    CHECK(mons.front() == Monomial({2, 0, 0}));
    CHECK(mons.back() == Monomial({0, 0, 2}));
    for (std::size_t i = 0; i + 1 < mons.size(); ++i)
      CHECK(cmp_monomials(mons[i], mons[i + 1], TermOrder::lex) > 0);
  }
}

TEST_CASE("rings and fields") {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  CHECK(r->nvars() == 3);
  CHECK(r->dim_of_degree(2) == 6);
  CHECK(r->dim_of_degree(0) == 1);
  CHECK_THROWS_AS(make_ring({"x"}, 4), error);

  PrimeField f7(7);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.equal(f7.from_int(-1), 6));
  CHECK(f7.is_zero(f7.add(3, 4)));
  CHECK_THROWS_AS(PrimeField(6), error);

  Rationals q;
  CHECK(q.equal(q.div(Rat(1), Rat(3)), Rat(1, 3)));
}

TEST_CASE("polynomials over the rationals") {
  RingPtr r = make_ring({"x", "y"}, 0);
  Rationals q;
  auto mono = [&](int a, int b) { return Monomial({a, b}); };
  Poly<Rationals> x(r, q, TermOrder::degrevlex, {{Rat(1), mono(1, 0)}});
  Poly<Rationals> y(r, q, TermOrder::degrevlex, {{Rat(1), mono(0, 1)}});

  Poly<Rationals> s = x + y;
  Poly<Rationals> sq = s * s;
  CHECK(sq.degree() == 2);
  CHECK(sq.is_homogeneous());
  CHECK(!sq.is_monomial());
  CHECK((sq - x * x - y * y - x * y.scale(Rat(2))).is_zero());
  CHECK(sq.lm() == mono(2, 0));

  // terms merge and cancel
  CHECK((x - x).is_zero());
  CHECK((x * y + x * y).lc() == 2);
}

TEST_CASE("leading terms follow the requested order") {
  RingPtr r = make_ring({"x", "y", "z"}, 0);
  Rationals q;
  Poly<Rationals> f(r, q, TermOrder::degrevlex,
                    {{Rat(1), Monomial({0, 2, 0})}, {Rat(-1), Monomial({1, 0, 1})}});
  CHECK(f.lm() == Monomial({0, 2, 0}));
  CHECK(f.with_order(TermOrder::lex).lm() == Monomial({1, 0, 1}));
}

TEST_CASE("generic coordinate changes") {
  RingPtr r = make_ring({"x", "y"}, 0);
  Rationals q;
  Poly<Rationals> x2(r, q, TermOrder::degrevlex, {{Rat(1), Monomial({2, 0})}});

  Matrix<Rationals> swap{2, {Rat(0), Rat(1), Rat(1), Rat(0)}};
  CHECK(apply_linear_change(x2, swap).lm() == Monomial({0, 2}));

  Matrix<Rationals> shear{2, {Rat(1), Rat(1), Rat(0), Rat(1)}}; // x -> x + y
  Poly<Rationals> img = apply_linear_change(x2, shear);
  CHECK(img.degree() == 2);
  CHECK(img.is_homogeneous());
  CHECK(img.lc() == 1); // x^2 + 2xy + y^2

  Matrix<Rationals> sing{2, {Rat(1), Rat(1), Rat(1), Rat(1)}};
  CHECK(!is_invertible(sing, q));
  CHECK_THROWS_AS(apply_linear_change(x2, sing), error);
}

TEST_CASE("ideal construction validates generators") {
  RingPtr r = make_ring({"x", "y"}, 0);
  Rationals q;
  Poly<Rationals> bad(r, q, TermOrder::degrevlex,
                      {{Rat(1), Monomial({2, 0})}, {Rat(1), Monomial({1, 0})}});
  CHECK_THROWS_AS(Ideal<Rationals>::make(r, q, {bad}), error);

  Poly<Rationals> zero(r, q, TermOrder::degrevlex, {});
  auto ideal = Ideal<Rationals>::make(r, q, {zero});
  CHECK(ideal.gens.empty());
}

TEST_CASE("document parsing") {
  SECTION("ring, gens, metadata") {
    auto doc = parse_document("# comment\n"
                              "name: sample\n"
                              "ring: x, y, z1 ; char 7\n"
                              "gens: x^2 - 3*y*z1, 2*z1^2\n"
                              "expect: reg = 1\n"
                              "check: kleiman, cm-dim1\n");
    CHECK(doc.name == "sample");
    CHECK(doc.ring->vars == std::vector<std::string>{"x", "y", "z1"});
    CHECK(doc.ring->field.characteristic == 7);
    REQUIRE(doc.gens.size() == 2);
    CHECK(doc.gens[0].terms.size() == 2);
    CHECK(doc.expects == std::vector<std::pair<std::string, std::string>>{{"reg", "1"}});
    CHECK(doc.checks == std::vector<std::string>{"kleiman", "cm-dim1"});
  }
  SECTION("positions in errors") {
    try {
      parse_document("ring: x, y ; char 0\ngens: x^2 + q\n");
      FAIL("expected a parse error");
    } catch (const parse_error& e) {
      CHECK(e.line() == 2);
      CHECK(e.kind() == errc::parse);
    }
  }
  SECTION("inhomogeneous and constant generators are rejected") {
    CHECK_THROWS_AS(parse_document("ring: x ; char 0\ngens: x^2 + x\n"), error);
    CHECK_THROWS_AS(parse_document("ring: x ; char 0\ngens: 5\n"), error);
  }
  SECTION("duplicates and unknown keys") {
    CHECK_THROWS_AS(parse_document("ring: x, x ; char 0\n"), parse_error);
    CHECK_THROWS_AS(parse_document("ring: x ; char 0\nring: y ; char 0\n"), parse_error);
    CHECK_THROWS_AS(parse_document("rings: x ; char 0\n"), parse_error);
    CHECK_THROWS_AS(parse_document("gens: x\n"), parse_error);
  }
  SECTION("round trip through the canonical printer") {
    std::string text = "ring: x, y ; char 0\ngens: x^2 - y^2, x*y\n";
    auto doc = parse_document(text);
    auto doc2 = parse_document(document_str(doc));
    REQUIRE(doc2.gens.size() == doc.gens.size());
    Rationals q;
    for (std::size_t i = 0; i < doc.gens.size(); ++i) {
      auto a = instantiate(doc, doc.ring, q).gens;
      auto b = instantiate(doc2, doc2.ring, q).gens;
      CHECK(a[i] == b[i]);
    }
  }
  SECTION("instantiation over a prime field folds coefficients") {
    auto doc = parse_document("ring: x, y ; char 3\ngens: x^2 + 3*y^2\n");
    auto ideal = instantiate(doc, doc.ring, PrimeField(3));
    REQUIRE(ideal.gens.size() == 1);
    CHECK(ideal.gens[0].is_monomial()); // 3 y^2 vanishes mod 3
  }
}
