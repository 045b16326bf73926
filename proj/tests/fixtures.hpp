#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcpc/json_io.hpp"
#include "qcpc/oracle.hpp"
#include "qcpc/qcpc.hpp"
#include "qcpc/random_codes.hpp"

namespace fixtures {

using namespace qcpc;

// The binary [2*21, 17, 8] 2-QC code A and the [5, 4, 2] parity code B.
struct Flagship {
  Field f2 = Field::prime(2);
  Field ext = field_extend(2, 105);
  Element alpha = root_of_unity(ext, 21);
  Element beta = root_of_unity(ext, 5);
  PolyMatrix ga{f2, 2, 2};
  PolyMatrix gb{f2, 1, 1};

  Flagship() {
    auto mp = [&](std::uint64_t i) { return minimal_polynomial(alpha, 21, i); };
    const Polynomial g00 = mp(1) * mp(3) * mp(7);
    ga(0, 0) = g00;
    ga(0, 1) = g00 * Polynomial(f2, {1, 0, 1});
    ga(1, 1) = g00 * mp(9);
    gb(0, 0) = minimal_polynomial(beta, 5, 0);
  }

  QuasiCyclicCode a() const { return QuasiCyclicCode::from_rgb(ga, 21); }
  QuasiCyclicCode b() const { return QuasiCyclicCode::from_rgb(gb, 5); }
  ProductSpec spec() const { return make_product_spec(2, 21, 1, 5); }
};

inline Polynomial from_exponents(Field f, std::initializer_list<std::size_t> exps) {
  Polynomial p(f);
  for (auto e : exps) p.set_coeff(e, 1);
  return p;
}

// Decoder setup for the flagship code at the searched certificate.
inline DecoderSetup flagship_setup() {
  const Flagship fx;
  const auto ctx = json_io::make_embedding_context(fx.a(), fx.b());
  const auto cert = search_bound_params(ctx.report, ctx.column, 106);
  return make_decoder_setup(fx.a(), ctx.column, *cert, ctx.alpha);
}

// Adds `count` random nonzero columns at distinct random positions.
inline std::vector<std::size_t> plant_bursts(const DecoderSetup& s, QcWord& r, std::size_t count,
                                             std::mt19937_64& rng) {
  const Field f = s.code.field();
  std::vector<std::size_t> pos(s.m_a());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(count);
  std::sort(pos.begin(), pos.end());
  std::uniform_int_distribution<Value> sym(0, f.size() - 1);
  for (auto p : pos) {
    std::vector<Value> col(s.ell(), 0);
    while (std::all_of(col.begin(), col.end(), [](Value v) { return v == 0; }))
      for (auto& v : col) v = sym(rng);
    for (std::size_t j = 0; j < s.ell(); ++j) r[j].set_coeff(p, f.add(r[j].coeff(p), col[j]));
  }
  return pos;
}

inline QcWord random_codeword(const QuasiCyclicCode& c, std::mt19937_64& rng) {
  std::vector<Polynomial> msg;
  for (auto k : c.row_dimensions()) msg.push_back(random::random_poly(c.field(), k, rng));
  return c.encode(msg);
}

inline QcWord zero_word(Field f, std::size_t ell) { return QcWord(ell, Polynomial(f)); }

// Random co-index coprime to q in [1, max].
inline std::size_t random_co_index(std::uint64_t q, std::size_t max, std::mt19937_64& rng) {
  while (true) {
    const std::size_t m = 1 + rng() % max;
    if (std::gcd<std::uint64_t>(m, q) == 1) return m;
  }
}

// Generator rows of arbitrary shape: more rows than columns, not reduced.
inline PolyMatrix random_generators(Field f, std::size_t ell, std::size_t m, std::mt19937_64& rng) {
  const std::size_t rows = 1 + rng() % (ell + 2);
  PolyMatrix g(f, 0, ell);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Polynomial> row;
    const Polynomial common = random::random_divisor(f, m, rng);
    for (std::size_t j = 0; j < ell; ++j)
      row.push_back(rng() % 4 == 0 ? Polynomial(f) : common * random::random_poly(f, m + 2, rng));
    g.append_row(row);
  }
  return g;
}

// Scalar span of all cyclic shifts of every generator row, computed without
// the reduction: rank equals the code dimension.
inline std::size_t brute_dimension(const PolyMatrix& g, std::size_t m) {
  const Field f = g.field();
  Matrix big(f, 0, g.cols() * m);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t s = 0; s < m; ++s) {
      QcWord w = g.row(i);
      for (auto& p : w) p = shift_mod_xm1(p, static_cast<std::int64_t>(s), m);
      big.append_row(flatten(w, m));
    }
  return rank(big);
}

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok && r_.failures++ == 0) r_.first_failure = what;
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

inline std::string describe(std::size_t m, std::uint64_t q, std::size_t t) {
  std::ostringstream s;
  s << "case " << t << " (q=" << q << ", m=" << m << ")";
  return s.str();
}

// Reduction post-conditions: C1-C4, same code as the input rows, and
// dimension equal to the brute scalar rank.
inline SuiteResult suite_rgb(std::size_t cases, std::uint64_t seed) {
  Suite s("rgb/pot post-conditions");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const Field f = Field::prime(q);
    const std::size_t ell = 1 + rng() % 3;
    const std::size_t m = random_co_index(q, 9, rng);
    const PolyMatrix g = random_generators(f, ell, m, rng);
    const QuasiCyclicCode c(g, m);
    const bool ok = satisfies_rgb_conditions(c.rgb(), m) && module_equal(g, c.rgb(), m) &&
                    brute_dimension(g, m) == c.dimension();
    s.check(ok, describe(m, q, t));
  }
  return s.result();
}

// Algebraic multiplicity equals geometric multiplicity at every exponent.
inline SuiteResult suite_multiplicity(std::size_t cases, std::uint64_t seed) {
  Suite s("algebraic = geometric multiplicity");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const Field f = Field::prime(q);
    const std::size_t ell = 1 + rng() % 3;
    const std::size_t m = random_co_index(q, 13, rng);
    const PolyMatrix g = random::random_rgb(f, ell, m, rng);
    const auto rep = analyze(g, root_of_unity(field_extend(q, m), m), m);
    bool ok = true;
    for (const auto& r : rep.records) ok &= r.algebraic == r.geometric && r.basis.size() == r.geometric;
    s.check(ok, describe(m, q, t));
  }
  return s.result();
}

// Random product instance whose components are both nonzero.
inline random::ProductInstance nontrivial_product(Field f, std::size_t la, std::size_t lb, std::size_t ma_max,
                                                  std::size_t mb_max, std::mt19937_64& rng, bool one_level = false) {
  for (;;) {
    auto inst = random::random_product(f, la, lb, ma_max, mb_max, rng, one_level);
    if (QuasiCyclicCode::from_rgb(inst.ga, inst.spec.m_a).dimension() > 0 &&
        QuasiCyclicCode::from_rgb(inst.gb, inst.spec.m_b).dimension() > 0)
      return inst;
  }
}

// Sum over r of |C^(r)| is m, and the sets agree with a direct spectral
// analysis of the product code at gamma = alpha beta.
inline SuiteResult suite_product_sets(std::size_t cases, std::uint64_t seed) {
  Suite s("product eigenvalue sets");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const Field f = Field::prime(q);
    const auto inst = nontrivial_product(f, 1 + rng() % 2, 1, 7, 5, rng);
    const auto& sp = inst.spec;
    const Field ext = field_extend(q, sp.m());
    const Element alpha = root_of_unity(ext, sp.m_a), beta = root_of_unity(ext, sp.m_b);
    const auto rep_a = analyze(inst.ga, alpha, sp.m_a);
    const auto defining = root_exponents(inst.gb(0, 0), beta, sp.m_b);
    const auto sets = product_eigen_sets(rep_a, {defining.begin(), defining.end()}, sp.m_a, sp.m_b);
    std::size_t total = 0;
    for (const auto& x : sets) total += x.size();
    bool ok = total == sp.m();
    const Element gamma = alpha * beta;
    const auto direct = analyze(unreduced_basis(sp, inst.ga, inst.gb).code().rgb(), gamma, sp.m());
    for (std::size_t r = 0; r < sets.size() && ok; ++r) {
      const auto e = direct.exponents_with(r);
      ok &= std::set<std::size_t>(e.begin(), e.end()) == sets[r];
    }
    s.check(ok, describe(sp.m(), q, t));
  }
  return s.result();
}

// Thm 2 style basis of a 2-QC x cyclic product spans the unreduced module
// and reduces to the same RGB/POT basis.
inline SuiteResult suite_pre_rgb(std::size_t cases, std::uint64_t seed) {
  Suite s("pre-rgb/pot kernel equivalence");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const auto inst = nontrivial_product(Field::prime(q), 2, 1, 7, 7, rng);
    const auto u = unreduced_basis(inst.spec, inst.ga, inst.gb);
    const auto p = pre_rgb_2qc(inst.spec, inst.ga, inst.gb);
    const bool ok = module_equal(u.generators(), p.generators(), inst.spec.m()) && u.code().rgb() == p.code().rgb();
    s.check(ok, describe(inst.spec.m(), q, t));
  }
  return s.result();
}

// S(c + e) = S(e) for random codewords c and error words e.
inline SuiteResult suite_syndrome(const DecoderSetup& setup, std::size_t cases, std::uint64_t seed) {
  Suite s("syndrome codeword invariance");
  std::mt19937_64 rng(seed);
  const Field f = setup.code.field();
  for (std::size_t t = 0; t < cases; ++t) {
    const QcWord c = random_codeword(setup.code, rng);
    QcWord e;
    for (std::size_t j = 0; j < setup.ell(); ++j) e.push_back(random::random_poly(f, setup.m_a(), rng));
    QcWord r = c;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] + e[j];
    s.check(syndrome(setup, r) == syndrome(setup, e) && syndrome(setup, c).is_zero(), "trial " + std::to_string(t));
  }
  return s.result();
}

// Lambda S = Omega mod X^{delta-1} on every decode, the output is a codeword
// or a failure, and planted patterns within tau give the product locator.
inline SuiteResult suite_key_equation(const DecoderSetup& setup, std::size_t cases, std::uint64_t seed) {
  Suite s("key equation identity");
  std::mt19937_64 rng(seed);
  const std::size_t len = setup.syndrome_length();
  const Field& ext = setup.alpha.field();
  for (std::size_t t = 0; t < cases; ++t) {
    const QcWord c = random_codeword(setup.code, rng);
    QcWord r = c;
    const std::size_t bursts = rng() % (setup.tau + 2);
    const auto pos = plant_bursts(setup, r, bursts, rng);
    const Polynomial syn = syndrome(setup, r);
    const auto key = solve_key_equation(syn, setup.certificate.delta);
    bool ok = true;
    if (key) {
      Polynomial lhs = key->locator * syn;
      Polynomial trunc(ext);
      for (std::size_t i = 0; i < len; ++i) trunc.set_coeff(i, lhs.coeff(i));
      ok &= trunc == key->evaluator && key->locator.coeff(0) == 1;
      ok &= 2 * key->locator.degree().value() <= len || bursts > setup.tau;
    }
    const auto res = decode(setup, r);
    ok &= !res.success || setup.code.contains(res.corrected);
    if (bursts <= setup.tau) {
      Polynomial expect = Polynomial::constant(ext, 1);
      for (auto i : pos)
        for (auto j : setup.support) {
          const Element root = setup.alpha.pow(static_cast<std::int64_t>(setup.certificate.z1 * i)) *
                               setup.column.beta.pow(static_cast<std::int64_t>(setup.certificate.z2 * j));
          expect *= Polynomial(ext, {1, ext.neg(root.value())});
        }
      ok &= key && key->locator == expect && res.success && res.corrected == c && res.positions == pos;
    }
    s.check(ok, "trial " + std::to_string(t) + " bursts " + std::to_string(bursts));
  }
  return s.result();
}

// mu is a bijection onto [0, n) and shifting A by l_A and B by l_B moves
// every position by l.
inline SuiteResult suite_index_map(std::size_t cases, std::uint64_t seed) {
  Suite s("index map bijectivity and shift law");
  std::mt19937_64 rng(seed);
  std::size_t t = 0;
  while (t < cases) {
    const std::size_t la = 1 + rng() % 4, lb = 1 + rng() % 4, ma = 1 + rng() % 9, mb = 1 + rng() % 9;
    if (std::gcd(la * ma, lb * mb) != 1) continue;
    const auto sp = make_product_spec(la, ma, lb, mb);
    std::vector<char> hit(sp.n(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < sp.n_b(); ++i)
      for (std::size_t j = 0; j < sp.n_a(); ++j) {
        const std::size_t mu = index_map(sp, i, j);
        ok &= !hit[mu];
        hit[mu] = 1;
        ok &= index_map(sp, (i + lb) % sp.n_b(), (j + la) % sp.n_a()) == (mu + sp.ell()) % sp.n();
      }
    s.check(ok, "shape " + std::to_string(la) + "," + std::to_string(ma) + "," + std::to_string(lb) + "," +
                    std::to_string(mb));
    ++t;
  }
  return s.result();
}

// Row space of A (x) B equals the span of the Kronecker products of scalar
// bases of A and B.
inline SuiteResult suite_kronecker(std::size_t cases, std::uint64_t seed) {
  Suite s("kronecker row-space cross-check");
  std::mt19937_64 rng(seed);
  std::size_t t = 0;
  while (t < cases) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const Field f = Field::prime(q);
    const std::size_t la = 1 + rng() % 2, lb = 1 + rng() % 2;
    if (std::gcd(la, lb) != 1) continue;
    const auto inst = nontrivial_product(f, la, lb, 5, 5, rng);
    const auto a = QuasiCyclicCode::from_rgb(inst.ga, inst.spec.m_a);
    const auto b = QuasiCyclicCode::from_rgb(inst.gb, inst.spec.m_b);
    const auto prod = unreduced_basis(inst.spec, inst.ga, inst.gb).code();
    s.check(kronecker_row_space_equal(inst.spec, a, b, prod) && prod.dimension() == a.dimension() * b.dimension(),
            describe(inst.spec.m(), q, t));
    ++t;
  }
  return s.result();
}

struct EquivalenceResult {
  std::size_t instances = 0, failures = 0, thm2 = 0, thm3 = 0, conjecture = 0;
  std::string first_failure;
};

// Every applicable specialised construction spans the same module as the
// unreduced basis, and the dimension is k_A k_B.
inline EquivalenceResult construction_equivalence(std::size_t cases, std::uint64_t seed) {
  static const std::pair<std::size_t, std::size_t> shapes[] = {{1, 1}, {2, 1}, {3, 1}, {1, 2},
                                                               {1, 3}, {2, 3}, {3, 2}};
  EquivalenceResult out;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < cases; ++t) {
    const std::uint64_t q = t % 2 ? 3 : 2;
    const Field f = Field::prime(q);
    const auto [la, lb] = shapes[rng() % std::size(shapes)];
    const bool one_level = lb == 1 && rng() % 3 == 0;
    const auto inst = nontrivial_product(f, la, lb, 7, 7, rng, one_level);
    const auto ka = QuasiCyclicCode::from_rgb(inst.ga, inst.spec.m_a).dimension();
    const auto kb = QuasiCyclicCode::from_rgb(inst.gb, inst.spec.m_b).dimension();
    const auto& sp = inst.spec;
    const auto u = unreduced_basis(sp, inst.ga, inst.gb);
    const PolyMatrix ug = u.generators();
    bool ok = u.code().dimension() == ka * kb;
    if (la == 2 && lb == 1) {
      ++out.thm2;
      ok &= module_equal(ug, pre_rgb_2qc(sp, inst.ga, inst.gb).generators(), sp.m());
    }
    if (lb == 1 && QuasiCyclicCode::from_rgb(inst.ga, sp.m_a).level() == 1) {
      ++out.thm3;
      ok &= module_equal(ug, rgb_1level(sp, inst.ga, inst.gb).generators(), sp.m());
    }
    ++out.conjecture;
    const auto conj = conjecture_basis(sp, inst.ga, inst.gb);
    ok &= conj.verified && module_equal(ug, conj.generators(), sp.m());
    ++out.instances;
    if (!ok && out.failures++ == 0) out.first_failure = describe(sp.m(), q, t);
  }
  return out;
}

}  // namespace fixtures

namespace fixtures {

// Exponents of the printed core entry of the 2-QC product before reduction
// and of the reduced off-diagonal entry.
inline const std::initializer_list<std::size_t> printed_gbar01 = {
    95, 92, 91, 90, 89, 86, 85, 84, 82, 80, 75, 72, 71, 69, 67, 62, 61, 59, 57, 52, 51,
    49, 47, 45, 30, 27, 26, 24, 22, 20, 15, 12, 11, 10, 9,  6,  5,  4,  2,  0};
inline const std::initializer_list<std::size_t> printed_g01 = {75, 72, 71, 69, 67, 62, 61, 59, 57, 55, 40, 37, 36,
                                                              35, 34, 31, 30, 29, 27, 25, 20, 17, 16, 14, 12, 10};
// Coset representatives listed for the first diagonal entry.
inline const std::initializer_list<std::uint64_t> printed_g00_cosets = {0, 1, 3, 5, 7, 9, 11, 15, 21, 25, 35, 45};

}  // namespace fixtures
