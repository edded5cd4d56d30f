#include <catch2/catch_amalgamated.hpp>

#include "qgw/finiteqg.hpp"
#include "test_support.hpp"

using namespace qgw;

namespace {

FiniteQuasigroup minus_group(int n) {  // (Z_n, -x-y), semisymmetric
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * n - a - b) % n);
  return validate(default_names(n), std::move(t));
}

FiniteQuasigroup random_quasigroup(int n, std::mt19937& rng) {
  return validate(default_names(n), random_latin_square(n, rng));
}

}  // namespace

TEST_CASE("validate groups and derive divisions") {
  FiniteQuasigroup q = cyclic_group(3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(q.rdiv[x][y] == ((x - y) % 3 + 3) % 3);  // x/y = x - y
      CHECK(q.ldiv[x][y] == ((y - x) % 3 + 3) % 3);  // x\y = y - x
    }
}

TEST_CASE("validate rejects non Latin tables") {
  CHECK_THROWS_WITH(validate({"0", "1"}, {{0, 1}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("row 1 repeats"));
  CHECK_THROWS_WITH(validate({"0", "1"}, {{0, 0}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("row 0 repeats"));
  CHECK_THROWS_AS(validate({"0", "1"}, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(validate({"0"}, {{4}}), ValidationError);
}

TEST_CASE("the empty quasigroup is valid") {
  FiniteQuasigroup q = validate({}, {});
  CHECK(q.order() == 0);
  for (const S3& g : S3::all()) CHECK(conjugate(q, g).order() == 0);
  CHECK(is_semisymmetric(q));
  CHECK(semisymmetrize(q).order() == 0);
}

TEST_CASE("conjugates of the cyclic group") {
  FiniteQuasigroup q = cyclic_group(3);
  FiniteQuasigroup r = conjugate(q, S3::parse("sts"));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(r.mul[x][y] == ((x - y) % 3 + 3) % 3);
  CHECK(conjugate(q, S3::identity()) == q);
  CHECK(conjugate(conjugate(q, S3::sigma()), S3::sigma()) == q);
}

TEST_CASE("conjugation properties on random squares") {
  std::mt19937 rng(505);
  for (int n : {1, 2, 3, 4, 5}) {
    FiniteQuasigroup q = random_quasigroup(n, rng);
    for (const S3& g : S3::all()) {
      FiniteQuasigroup c = conjugate(q, g);  // validates internally
      // opposite = left multiplication by sigma
      FiniteQuasigroup o = conjugate(q, S3::sigma() * g);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK(o.mul[x][y] == c.mul[y][x]);
      // conjugating the conjugate composes contravariantly: C_h(C_g(q)) picks
      // out the triple positions of h first, so it equals C_{hg}(q)
      for (const S3& h : S3::all()) CHECK(conjugate(c, h) == conjugate(q, h * g));
    }
    // (DL) and (DR) in the divisions
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(q.rdiv[x][q.ldiv[y][x]] == y);
        CHECK(q.ldiv[q.rdiv[x][y]][x] == y);
      }
  }
}

TEST_CASE("semisymmetry checks") {
  CHECK(is_semisymmetric(minus_group(3)));
  CHECK_FALSE(is_semisymmetric(cyclic_group(3)));
  CHECK(is_semisymmetric(cyclic_group(1)));
  CHECK(is_semisymmetric(cyclic_group(2)));  // -x-y = x+y mod 2
}

TEST_CASE("semisymmetrization of Z2 is componentwise sums") {
  FiniteQuasigroup q = cyclic_group(2);
  FiniteQuasigroup d = semisymmetrize(q);
  REQUIRE(d.order() == 8);
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int x3 = 0; x3 < 2; ++x3)
        for (int y1 = 0; y1 < 2; ++y1)
          for (int y2 = 0; y2 < 2; ++y2)
            for (int y3 = 0; y3 < 2; ++y3) {
              int got = d.mul[(x1 * 2 + x2) * 2 + x3][(y1 * 2 + y2) * 2 + y3];
              int want = (((x2 + y3) % 2) * 2 + (x3 + y1) % 2) * 2 + (x1 + y2) % 2;
              CHECK(got == want);
            }
  CHECK(d.elements[3] == "(0,1,1)");
}

TEST_CASE("semisymmetrize yields semisymmetric quasigroups") {
  for (const Table& t : all_latin_squares(3))
    CHECK(is_semisymmetric(semisymmetrize(validate(default_names(3), t))));
  std::mt19937 rng(808);
  for (int n : {4, 5, 6})
    for (int i = 0; i < 3; ++i)
      CHECK(is_semisymmetric(semisymmetrize(random_quasigroup(n, rng))));
}

TEST_CASE("unit and counit") {
  FiniteQuasigroup p = minus_group(3);
  CHECK(is_homomorphism(unit_homomorphism(p)));
  std::mt19937 rng(123);
  for (int n : {1, 2, 3, 4}) {
    FiniteQuasigroup q = random_quasigroup(n, rng);
    CHECK(is_homotopy(counit_homotopy(q)));
  }
  // the unit triple need not be a homomorphism without semisymmetry
  CHECK_FALSE(is_homomorphism(unit_homomorphism(cyclic_group(3))));
}

TEST_CASE("homotopies and homomorphisms") {
  FiniteQuasigroup q = cyclic_group(3);
  Homotopy id{q, q, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK(is_homotopy(id));
  CHECK(is_homomorphism(id));
  // a principal isotopy that is not a homomorphism
  Homotopy shift{q, q, {1, 2, 0}, {0, 1, 2}, {1, 2, 0}};
  CHECK(is_homotopy(shift));
  CHECK_FALSE(is_homomorphism(shift));
  Homotopy bad{q, q, {1, 2, 0}, {0, 1, 2}, {0, 1, 2}};
  CHECK_FALSE(is_homotopy(bad));
  Homotopy short_map{q, q, {0, 1}, {0, 1, 2}, {0, 1, 2}};
  CHECK_FALSE(is_homotopy(short_map));
}

TEST_CASE("the functor Delta sends homotopies to homomorphisms") {
  std::mt19937 rng(31415);
  for (int n : {2, 3, 4}) {
    FiniteQuasigroup q = random_quasigroup(n, rng);
    // build a random isotopy q -> q' by transport
    auto f1 = qgwtest::random_perm(n, rng);
    auto f2 = qgwtest::random_perm(n, rng);
    auto f3 = qgwtest::random_perm(n, rng);
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[f1[x]][f2[y]] = f3[q.mul[x][y]];
    FiniteQuasigroup q2 = validate(default_names(n), std::move(t));
    Homotopy h{q, q2, f1, f2, f3};
    REQUIRE(is_homotopy(h));
    CHECK(is_homomorphism(delta_of_homotopy(h)));
  }
}

TEST_CASE("binary operation monoid") {
  FiniteQuasigroup q = cyclic_group(3);
  BinaryOpTable eps = binop_identity(q);
  BinaryOpTable mu = binop_of(q, S3::identity());
  BinaryOpTable mu_t = binop_of(q, S3::tau());
  CHECK(binop_mul(eps, mu).table == mu.table);
  CHECK(binop_mul(mu, eps).table == mu.table);
  // mu * mu^t = epsilon: x \ (x.y) = y
  CHECK(binop_mul(mu, mu_t).table == eps.table);
  CHECK(binop_mul(mu_t, mu).table == eps.table);

  std::mt19937 rng(999);
  auto random_binop = [&] {
    BinaryOpTable b{q.elements, Table(3, std::vector<int>(3))};
    for (auto& row : b.table)
      for (int& v : row) v = std::uniform_int_distribution<int>(0, 2)(rng);
    return b;
  };
  for (int i = 0; i < 3; ++i) {
    BinaryOpTable a = random_binop(), b = random_binop(), c = random_binop();
    CHECK(binop_mul(binop_mul(a, b), c).table == binop_mul(a, binop_mul(b, c)).table);
  }
  BinaryOpTable other{{"x", "y", "z"}, eps.table};
  CHECK_THROWS_AS(binop_mul(eps, other), std::invalid_argument);
}

TEST_CASE("triality units") {
  CHECK(check_triality_units(cyclic_group(3)).ok);
  std::mt19937 rng(112);
  CHECK(check_triality_units(random_quasigroup(5, rng)).ok);
}

TEST_CASE("exhaustive small-order suite") {
  for (int n : {1, 2, 3}) {
    for (const Table& t : all_latin_squares(n)) {
      FiniteQuasigroup q = validate(default_names(n), t);
      for (const S3& g : S3::all()) (void)conjugate(q, g);
      CHECK(is_semisymmetric(semisymmetrize(q)));
      CHECK(is_homotopy(counit_homotopy(q)));
      CHECK(check_triality_units(q).ok);
    }
  }
  CHECK(all_latin_squares(4).size() == 576);
}

TEST_CASE("triality units hold on every quasigroup of order 5") {
  std::size_t count = 0;
  for (const Table& t : all_latin_squares(5)) {
    FiniteQuasigroup q = validate(default_names(5), t);
    if (!check_triality_units(q).ok) {
      FAIL("triality units fail on a square of order 5");
    }
    ++count;
  }
  CHECK(count == 161280);
}

TEST_CASE("term evaluation over a finite quasigroup") {
  FiniteQuasigroup q = cyclic_group(5);
  std::map<std::string, int> env{{"a", 2}, {"b", 4}};
  CHECK(eval(q, parse("a*b"), env) == 1);
  CHECK(eval(q, parse("a/b"), env) == 3);
  CHECK(eval(q, parse("a\\b"), env) == 2);
  CHECK(eval(q, parse("a o b"), env) == 1);
  CHECK(eval(q, parse("(a*b)/b"), env) == 2);
  CHECK_THROWS_AS(eval(q, parse("@e"), env), std::invalid_argument);
  CHECK_THROWS_AS(eval(q, parse("c"), env), std::invalid_argument);
}

TEST_CASE("representation equality implies equality in central quasigroups") {
  // affine quasigroup over Z7: x.y = 2x + 3y, a central quasigroup
  const int n = 7;
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (2 * x + 3 * y) % n;
  FiniteQuasigroup q = validate(default_names(n), std::move(t));
  qgwtest::TermGen gen(777);
  gen.idem_percent = 0;
  std::mt19937 rng(778);
  for (int trial = 0; trial < 200; ++trial) {
    TermPtr a = gen.term_up_to(5);
    TermPtr b = gen.equal_variant(a);
    REQUIRE(equal(a, b));
    std::map<std::string, int> env;
    for (const auto& e : raw_form(a)) env.emplace(e.gen, 0);
    for (const auto& e : raw_form(b)) env.emplace(e.gen, 0);
    for (auto& [k, v] : env) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    CHECK(eval(q, a, env) == eval(q, b, env));
  }
}
