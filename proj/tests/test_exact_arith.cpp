#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxcell/cyclotomic.hpp"
#include "coxcell/fields.hpp"
#include "coxcell/laurent.hpp"
#include "coxcell/rational.hpp"

using namespace coxcell;

namespace {

CycloNumber random_cyclo(long conductor, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> coeffs;
  for (long i = 0; i < euler_phi(conductor); ++i)
    coeffs.push_back(make_rational(num(rng), den(rng)));
  return CycloNumber(conductor, std::move(coeffs));
}

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(-5, 5), coeff(-9, 9);
  LaurentPoly p;
  for (int t = 0; t < 6; ++t) p.add_term(deg(rng), coeff(rng));
  return p;
}

}  // namespace

TEST_CASE("rational parse/format round trip") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2/1");
  CHECK(to_string(parse_rational("7")) == "7/1");
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("cyclotomic modulus base case and derived values") {
  // n = 1: x - 1.
  CHECK(cyclotomic_modulus(1) == IntPoly::monomial(1) - IntPoly(BigInt(1)));

  // Oracle for n = 4: divide x^4 - 1 by Phi_1 * Phi_2 directly.
  IntPoly x4m1 = IntPoly::monomial(4) - IntPoly(BigInt(1));
  IntPoly phi1 = IntPoly::monomial(1) - IntPoly(BigInt(1));
  IntPoly phi2 = IntPoly::monomial(1) + IntPoly(BigInt(1));
  IntPoly expected4 = x4m1.divide_exact(phi1 * phi2);
  CHECK(expected4 == IntPoly::monomial(2) + IntPoly(BigInt(1)));
  CHECK(cyclotomic_modulus(4) == expected4);

  // Oracle for n = 6: divide x^6 - 1 by Phi_1 Phi_2 Phi_3.
  IntPoly x6m1 = IntPoly::monomial(6) - IntPoly(BigInt(1));
  IntPoly phi3 = IntPoly::monomial(2) + IntPoly::monomial(1) + IntPoly(BigInt(1));
  IntPoly expected6 = x6m1.divide_exact(phi1 * phi2 * phi3);
  CHECK(expected6 ==
        IntPoly::monomial(2) - IntPoly::monomial(1) + IntPoly(BigInt(1)));
  CHECK(cyclotomic_modulus(6) == expected6);
}

TEST_CASE("cyclotomic moduli divide x^n - 1 with degree phi(n), n <= 24") {
  for (long n = 1; n <= 24; ++n) {
    const IntPoly& phi = cyclotomic_modulus(n);
    CHECK(phi.degree() == euler_phi(n));
    IntPoly xnm1 = IntPoly::monomial(n) - IntPoly(BigInt(1));
    IntPoly product(BigInt(1));
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) product = product * cyclotomic_modulus(d);
    CHECK(product == xnm1);  // exact division with zero remainder, all d | n
  }
}

TEST_CASE("field operations on roots of unity") {
  // zeta_4 * zeta_4 = -1 (reduction mod Phi_4 = x^2 + 1).
  auto z4 = CycloNumber::zeta(4);
  CHECK(z4 * z4 == CycloNumber::from_rational(Rational(-1), 4));

  // inverse(zeta_n) = zeta_n^{n-1}.
  for (long n : {3L, 4L, 5L, 8L, 12L})
    CHECK(CycloNumber::zeta(n).inverse() == CycloNumber::root_power(n, n - 1));

  // zeta_6 + zeta_6^5 = 1; oracle: x^5 mod Phi_6 = x^2 - x + 1 reduces to 1 - x.
  auto z6 = CycloNumber::zeta(6);
  auto z6_5 = CycloNumber::root_power(6, 5);
  CHECK(z6_5 == CycloNumber::one(6) - z6);
  CHECK(z6 + z6_5 == CycloNumber::one(6));

  CHECK_THROWS(CycloNumber::zero(4).inverse());
  CHECK_THROWS(z4 + z6);  // conductor mismatch is an error, not a promotion
}

TEST_CASE("field axioms on randomized triples, conductors {4,6,10,12}") {
  std::mt19937 rng(20240811);
  for (long n : {4L, 6L, 10L, 12L}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_cyclo(n, rng), b = random_cyclo(n, rng), c = random_cyclo(n, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber::one(n));
    }
  }
}

TEST_CASE("two_cos special values") {
  CHECK(two_cos(1, 2, 4) == CycloNumber::zero(4));                       // cos(pi/2) = 0
  CHECK(two_cos(1, 3, 6) == CycloNumber::one(6));                        // 2cos(pi/3) = 1
  CHECK(two_cos(0, 5, 10) == CycloNumber::from_rational(Rational(2), 10));
  CHECK_THROWS(two_cos(1, 5, 12));  // 10 does not divide 12

  // x = 2cos(pi/5) satisfies x^2 - x - 1 = 0 (golden ratio identity).
  auto x = two_cos(1, 5, 10);
  auto one = CycloNumber::one(10);
  CHECK(x * x - x - one == CycloNumber::zero(10));
}

TEST_CASE("two_cos satisfies the Chebyshev recursion c_{k+1} = c_1 c_k - c_{k-1}") {
  for (long m = 2; m <= 12; ++m) {
    long n = 2 * m;
    auto c1 = two_cos(1, m, n);
    auto prev = CycloNumber::from_rational(Rational(2), n);  // c_0 = 2
    auto cur = c1;
    for (long k = 1; k < m; ++k) {
      auto next = c1 * cur - prev;
      CHECK(next == two_cos(k + 1, m, n));
      prev = cur;
      cur = next;
    }
  }
}

TEST_CASE("cyclotomic promotion embeds compatibly") {
  // zeta_6 inside Q(zeta_12) is zeta_12^2.
  CHECK(CycloNumber::zeta(6).promoted(12) == CycloNumber::root_power(12, 2));
  // two_cos is stable under promotion.
  CHECK(two_cos(1, 3, 6).promoted(12) == two_cos(1, 3, 12));
  CHECK_THROWS(CycloNumber::zeta(4).promoted(6));
}

TEST_CASE("laurent polynomial basics") {
  auto v = LaurentPoly::monomial(1);
  auto vinv = LaurentPoly::monomial(-1);
  auto p = v - vinv;

  CHECK(p * v == LaurentPoly::monomial(2) - LaurentPoly(BigInt(1)));  // (v - v^-1) v = v^2 - 1
  CHECK(p.evaluate_at_one() == 0);
  CHECK((vinv * vinv * vinv + v).lowest_degree() == -3);
  CHECK(!LaurentPoly().lowest_degree().has_value());  // zero polynomial sentinel
  CHECK((p - p).is_zero());
  CHECK(p.mirrored() == -p);
}

TEST_CASE("evaluate_at_one is a ring homomorphism on random pairs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_laurent(rng), r = random_laurent(rng);
    CHECK((p + r).evaluate_at_one() == p.evaluate_at_one() + r.evaluate_at_one());
    CHECK((p * r).evaluate_at_one() == p.evaluate_at_one() * r.evaluate_at_one());
  }
}

TEST_CASE("scalar variant comparison across fields") {
  ExactScalar half = parse_rational("1/2");
  ExactScalar also_half = CycloNumber::from_rational(Rational(1, 2), 6);
  CHECK(scalar_equal(half, also_half));
  CHECK(!scalar_equal(half, ExactScalar(Rational(2))));
  CHECK(scalar_equal(ExactScalar(CycloNumber::zeta(6)),
                     ExactScalar(CycloNumber::root_power(12, 2))));
  CHECK(scalar_is_zero(ExactScalar(CycloNumber::zero(4))));
}
