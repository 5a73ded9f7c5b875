#include "toricham/error.hpp"
#include "toricham/rational.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace toricham;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3) / Rational(4));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3) / Rational(4));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/2/3", "/2", "2/", "1e3", "0x10", "3/-6"}) {
    try {
      (void)Rational::parse(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, PrintsReducedForm) {
  EXPECT_EQ((Rational(6) / Rational(-8)).str(), "-3/4");
  EXPECT_EQ((Rational(4) / Rational(2)).str(), "2");
  EXPECT_EQ(Rational().str(), "0");
  std::ostringstream os;
  os << Rational(Integer(15), Integer(28));
  EXPECT_EQ(os.str(), "15/28");
}

TEST(Rational, ZeroDenominatorThrows) {
  try {
    Rational(Integer(1), Integer(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, ArithmeticAndOrdering) {
  const Rational a = Rational::parse("2/3");
  const Rational b = Rational::parse("-5/7");
  EXPECT_EQ(a + b, Rational::parse("-1/21"));
  EXPECT_EQ(a - b, Rational::parse("29/21"));
  EXPECT_EQ(a * b, Rational::parse("-10/21"));
  EXPECT_EQ(a / b, Rational::parse("-14/15"));
  EXPECT_LT(b, a);
  EXPECT_EQ(abs(b), Rational::parse("5/7"));
  EXPECT_EQ(pow(a, 3), Rational::parse("8/27"));
  EXPECT_EQ(pow(a, 0), Rational(1));
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(-a, Rational::parse("-2/3"));
  EXPECT_EQ(a.sign(), 1);
  EXPECT_EQ(b.sign(), -1);
  EXPECT_TRUE(Rational(4).is_integer());
}

TEST(Rational, ResultsStayCanonical) {
  check::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = check::random_rational(rng, 50, 30);
    const Rational b = check::random_rational(rng, 50, 30);
    for (const Rational& r : {a + b, a - b, a * b}) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(r.denominator(), 0);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}

TEST(Rational, HandlesLargeValuesExactly) {
  Rational x = pow(Rational(Integer(10), Integer(3)), 40);
  EXPECT_EQ(x * pow(Rational(Integer(3), Integer(10)), 40), Rational(1));
  EXPECT_EQ(parse_integer("123456789012345678901234567890") + 1, Integer("123456789012345678901234567891"));
}
