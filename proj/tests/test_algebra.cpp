#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace qcpc;

namespace {

std::vector<std::uint64_t> members(const CyclotomicCoset& c) { return c.members; }

Polynomial rp(Field f, std::size_t len, std::mt19937_64& rng) { return random::random_poly(f, len, rng); }

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.size(), 7u);
  EXPECT_TRUE(f.is_prime_field());
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.neg(2), 5u);
  EXPECT_EQ(f.pow(3, -1), 5u);
  EXPECT_EQ(f.primitive_element().order(), 6u);
}

TEST(Field, Interning) {
  EXPECT_TRUE(Field::prime(5) == Field::prime(5));
  EXPECT_FALSE(Field::prime(5) == Field::prime(3));
  EXPECT_TRUE(extension_field(2, 4) == extension_field(2, 4));
}

TEST(Field, RejectsBadModulus) {
  EXPECT_THROW(Field::from_modulus(2, {1, 0, 1}), DomainError);  // (X+1)^2
  EXPECT_THROW(Field::prime(6), DomainError);
}

TEST(Field, MismatchedElementsThrow) {
  const Element a = Field::prime(3).one();
  const Element b = Field::prime(5).one();
  EXPECT_THROW(a + b, FieldMismatch);
}

TEST(Field, DefaultModulusOfGf4096) {
  EXPECT_EQ(default_modulus(2, 12), (std::vector<std::uint64_t>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}));
  const Field f = extension_field(2, 12);
  EXPECT_EQ(f.primitive_element().order(), 4095u);
}

TEST(Field, LowestIrreducible) {
  EXPECT_EQ(lowest_irreducible(2, 3), (std::vector<std::uint64_t>{1, 1, 0, 1}));
  EXPECT_EQ(lowest_irreducible(3, 2), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(Field, AxiomsHoldOnRandomElements) {
  std::mt19937_64 rng(11);
  const std::pair<std::uint64_t, std::uint32_t> shapes[] = {{2, 1}, {2, 5}, {3, 3}, {5, 2}, {2, 12}, {7, 1}};
  for (int t = 0; t < 200; ++t) {
    const auto [p, s] = shapes[t % std::size(shapes)];
    const Field f = extension_field(p, s);
    std::uniform_int_distribution<Value> d(0, f.size() - 1);
    const Element a(f, d(rng)), b(f, d(rng)), c(f, d(rng));
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * (b * c), (a * b) * c);
    ASSERT_EQ(a - a, f.zero());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), f.one());
      ASSERT_EQ(a.pow(static_cast<std::int64_t>(f.size() - 1)), f.one());
    }
    ASSERT_EQ(f.from_digits(a.digits()), a.value());
  }
}

TEST(Field, TableFreeMultiplicationAgrees) {
  const Field f = extension_field(3, 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Value> d(0, f.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const Value a = d(rng), b = d(rng);
    ASSERT_EQ(f.mul(a, b), f.core_ptr()->mul_generic(a, b));
  }
}

TEST(Galois, FieldExtendDegree) {
  EXPECT_EQ(field_extend(2, 5).degree(), 4u);
  EXPECT_EQ(field_extend(2, 105).degree(), 12u);
  EXPECT_EQ(field_extend(3, 7).degree(), 6u);
  EXPECT_EQ(field_extend(2, 1).degree(), 1u);
  EXPECT_THROW(field_extend(2, 6), DomainError);
}

TEST(Galois, MultiplicativeOrder) {
  EXPECT_EQ(multiplicative_order(2, 21), 6u);
  EXPECT_EQ(multiplicative_order(2, 105), 12u);
  EXPECT_EQ(multiplicative_order(3, 1), 1u);
}

TEST(Galois, RootOfUnityOrder) {
  const Field f = field_extend(2, 105);
  EXPECT_EQ(root_of_unity(f, 105).order(), 105u);
  EXPECT_EQ(root_of_unity(f, 21), f.primitive_element().pow(195));
  EXPECT_EQ(root_of_unity(f, 5), f.primitive_element().pow(819));
  EXPECT_EQ(root_of_unity(f, 21) * root_of_unity(f, 5), f.primitive_element().pow(1014));
}

TEST(Galois, CosetGenerationOrder) {
  EXPECT_EQ(members(cyclotomic_coset(9, 105, 2)),
            (std::vector<std::uint64_t>{9, 18, 36, 72, 39, 78, 51, 102, 99, 93, 81, 57}));
  EXPECT_EQ(members(cyclotomic_coset(0, 7, 2)), (std::vector<std::uint64_t>{0}));
}

TEST(Galois, CosetUnionOfFlagshipCode) {
  std::set<std::uint64_t> u;
  for (auto i : {1, 3, 7})
    for (auto x : cyclotomic_coset(i, 21, 2).members) u.insert(x);
  EXPECT_EQ(u, (std::set<std::uint64_t>{1, 2, 3, 4, 6, 7, 8, 11, 12, 14, 16}));
  EXPECT_EQ(members(cyclotomic_coset(9, 21, 2)), (std::vector<std::uint64_t>{9, 18, 15}));
}

TEST(Galois, CosetsPartition) {
  for (std::uint64_t m : {1, 7, 15, 21, 35, 105}) {
    std::size_t total = 0;
    for (const auto& c : cyclotomic_cosets(m, 2)) total += c.members.size();
    EXPECT_EQ(total, m);
  }
}

TEST(Galois, MinimalPolynomials) {
  const Field ext = field_extend(2, 21);
  const Element alpha = root_of_unity(ext, 21);
  const Field f2 = Field::prime(2);
  EXPECT_EQ(minimal_polynomial(alpha, 21, 0), Polynomial(f2, {1, 1}));
  EXPECT_EQ(minimal_polynomial(alpha, 21, 7), Polynomial(f2, {1, 1, 1}));
  EXPECT_EQ(minimal_polynomial(alpha, 21, 9).degree().value(), 3u);
  EXPECT_EQ(minimal_polynomial(alpha, 21, 1).degree().value(), 6u);
  EXPECT_EQ(root_exponents(minimal_polynomial(alpha, 21, 9), alpha, 21), (std::vector<std::uint64_t>{9, 15, 18}));
}

TEST(Galois, FactorsMultiplyToXm1) {
  for (std::uint64_t q : {2, 3, 5})
    for (std::size_t m : {1, 4, 7, 8, 11, 13}) {
      if (std::gcd<std::uint64_t>(q, m) != 1) continue;
      const Field f = Field::prime(q);
      Polynomial prod = Polynomial::constant(f, 1);
      for (const auto& p : xm1_factors(q, m)) prod *= p;
      EXPECT_EQ(prod, Polynomial::x_pow_minus_one(f, m)) << q << " " << m;
    }
}

TEST(Galois, SubfieldCoordinates) {
  const Field f = extension_field(2, 4);
  std::vector<Element> basis;
  for (std::uint32_t i = 0; i < 4; ++i) basis.push_back(f.element(Value{1} << i));
  const Element x = f.element(0b1011);
  EXPECT_EQ(subfield_coordinates(x, basis), (std::vector<Value>{1, 1, 0, 1}));
}

TEST(Polynomial, DegreeAndTrim) {
  const Field f = Field::prime(3);
  EXPECT_TRUE(Polynomial(f, {0, 0}).is_zero());
  EXPECT_TRUE(Polynomial(f).degree().is_neg_inf());
  EXPECT_EQ(Polynomial(f, {1, 2, 0}).degree().value(), 1u);
  EXPECT_EQ(Polynomial::x_pow_minus_one(f, 3), Polynomial(f, {2, 0, 0, 1}));
}

TEST(Polynomial, DivisionIdentity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const Field f = Field::prime(t % 2 ? 3 : 2);
    const Polynomial a = rp(f, 1 + rng() % 30, rng);
    Polynomial b = rp(f, 1 + rng() % 10, rng);
    if (b.is_zero()) b = Polynomial::constant(f, 1);
    const auto [q, r] = divmod(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_TRUE(r.is_zero() || r.degree() < b.degree());
  }
}

TEST(Polynomial, XgcdBezout) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 200; ++t) {
    const Field f = Field::prime(t % 2 ? 5 : 2);
    const Polynomial a = rp(f, rng() % 20, rng), b = rp(f, rng() % 20, rng);
    const auto x = xgcd(a, b);
    ASSERT_EQ(x.u * a + x.v * b, x.gcd);
    if (!x.gcd.is_zero()) {
      ASSERT_EQ(x.gcd.lead(), 1u);
      ASSERT_TRUE(divides(x.gcd, a) && divides(x.gcd, b));
    }
  }
}

TEST(Polynomial, ExactDivisionRejectsRemainder) {
  const Field f = Field::prime(2);
  EXPECT_THROW(exact_div(Polynomial(f, {1, 0, 1}), Polynomial(f, {1, 1, 1})), DomainError);
  EXPECT_THROW(divmod(Polynomial(f, {1}), Polynomial(f)), DomainError);
}

TEST(Polynomial, ModXm1Helpers) {
  const Field f = Field::prime(2);
  EXPECT_EQ(reduce_mod_xm1(Polynomial::monomial(f, 7), 5), Polynomial::monomial(f, 2));
  EXPECT_EQ(shift_mod_xm1(Polynomial(f, {1, 1}), -1, 5), Polynomial(f, {1, 0, 0, 0, 1}));
  EXPECT_EQ(substitute_power(Polynomial(f, {1, 1}), 3, 5), Polynomial(f, {1, 0, 0, 1}));
  EXPECT_EQ(substitute_power(Polynomial(f, {0, 1}), -1, 5), Polynomial::monomial(f, 4));
  EXPECT_EQ(mod_index(-25, 21), 17u);
}

TEST(Polynomial, SubstitutionIsARingMap) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    const Field f = Field::prime(t % 2 ? 3 : 2);
    const std::size_t m = 1 + rng() % 15;
    const auto e = static_cast<std::int64_t>(rng() % 40) - 20;
    const Polynomial a = rp(f, m, rng), b = rp(f, m, rng);
    ASSERT_EQ(substitute_power(mul_mod_xm1(a, b, m), e, m),
              mul_mod_xm1(substitute_power(a, e, m), substitute_power(b, e, m), m));
    ASSERT_EQ(substitute_power(a + b, e, m), substitute_power(a, e, m) + substitute_power(b, e, m));
  }
}

TEST(Polynomial, EvaluationIsARingMap) {
  std::mt19937_64 rng(24);
  const Field ext = extension_field(2, 6);
  const Field f2 = Field::prime(2);
  std::uniform_int_distribution<Value> d(0, ext.size() - 1);
  for (int t = 0; t < 150; ++t) {
    const Polynomial a = rp(f2, 12, rng), b = rp(f2, 9, rng);
    const Element x(ext, d(rng));
    ASSERT_EQ(evaluate(a * b, x), evaluate(a, x) * evaluate(b, x));
    ASSERT_EQ(evaluate(lift(a, ext), x), evaluate(a, x));
    ASSERT_EQ(restrict_to_prime(lift(a, ext)), a);
  }
}

TEST(Linalg, KernelAndSolve) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const Field f = Field::prime(t % 2 ? 3 : 2);
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = rng() % f.size();
    const auto ker = kernel_basis(a);
    ASSERT_EQ(ker.size() + rank(a), c);
    for (const auto& v : ker)
      for (std::size_t i = 0; i < r; ++i) {
        Value acc = 0;
        for (std::size_t j = 0; j < c; ++j) acc = f.add(acc, f.mul(a(i, j), v[j]));
        ASSERT_EQ(acc, 0u);
      }
    std::vector<Value> x(c), b(r, 0);
    for (auto& v : x) v = rng() % f.size();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b[i] = f.add(b[i], f.mul(a(i, j), x[j]));
    const auto sol = solve(a, b);
    ASSERT_NE(sol.status, Solution::Status::inconsistent);
    if (sol.status == Solution::Status::unique) {
      ASSERT_EQ(sol.x, x);
    }
  }
}

TEST(Linalg, InconsistentSystem) {
  const Field f = Field::prime(2);
  Matrix a(f, 2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  const std::vector<Value> b{0, 1};
  EXPECT_EQ(solve(a, b).status, Solution::Status::inconsistent);
}

TEST(PolyMatrix, RowOperations) {
  const Field f = Field::prime(2);
  const PolyMatrix m = PolyMatrix::from_rows(f, 2, {{Polynomial(f, {1, 1}), Polynomial(f, {1})},
                                                    {Polynomial(f), Polynomial(f, {0, 1})}});
  EXPECT_TRUE(m.is_upper_triangular());
  EXPECT_EQ(upper_det(m), Polynomial(f, {0, 1, 1}));
  const PolyMatrix s = apply_row_op(m, SwapRows{0, 1});
  EXPECT_FALSE(s.is_upper_triangular());
  EXPECT_EQ(apply_row_op(s, SwapRows{0, 1}), m);
  EXPECT_THROW(apply_row_op(m, ScaleRow{0, Polynomial(f, {0, 1})}), DomainError);
  const PolyMatrix added = apply_row_op(m, AddRowMultiple{0, 1, Polynomial(f, {1, 1})});
  EXPECT_EQ(added(0, 1), Polynomial(f, {1, 1, 1}));
  EXPECT_EQ(apply_row_op(m, DeleteRow{1}).rows(), 1u);
}
