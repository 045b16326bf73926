// Builds the binary [2*21, 17] 2-QC code and the [5, 4] parity code, bounds the
// distance of the first via their product, and corrects three bursts.
#include <iostream>

#include "qcpc/json_io.hpp"
#include "qcpc/qcpc.hpp"

int main() {
  using namespace qcpc;
  const Field f2 = Field::prime(2);
  const Field ext = field_extend(2, 105);
  const Element alpha = root_of_unity(ext, 21), beta = root_of_unity(ext, 5);
  auto mp = [&](std::uint64_t i) { return minimal_polynomial(alpha, 21, i); };

  PolyMatrix ga(f2, 2, 2);
  ga(0, 0) = mp(1) * mp(3) * mp(7);
  ga(0, 1) = ga(0, 0) * Polynomial(f2, {1, 0, 1});
  ga(1, 1) = ga(0, 0) * mp(9);
  PolyMatrix gb(f2, 1, 1);
  gb(0, 0) = minimal_polynomial(beta, 5, 0);
  const auto a = QuasiCyclicCode::from_rgb(ga, 21);
  const auto b = QuasiCyclicCode::from_rgb(gb, 5);

  const auto product = pre_rgb_2qc(make_product_spec(2, 21, 1, 5), ga, gb).code();
  std::cout << "A: [" << a.length() << ", " << a.dimension() << "]  B: [" << b.length() << ", " << b.dimension()
            << "]  A(x)B: [" << product.length() << ", " << product.dimension() << "]\n";

  const auto ctx = json_io::make_embedding_context(a, b);
  const auto cert = search_bound_params(ctx.report, ctx.column, 106);
  std::cout << "d(A) >= " << cert->bound << " with delta = " << cert->delta << "\n";

  const auto setup = make_decoder_setup(a, ctx.column, *cert, ctx.alpha);
  QcWord r(2, Polynomial(f2));
  r[0].set_coeff(2, 1);
  r[0].set_coeff(9, 1);
  r[1].set_coeff(9, 1);
  r[1].set_coeff(17, 1);
  const auto out = decode(setup, r);
  std::cout << "decoding " << (out.success ? "succeeded" : "failed") << ", bursts at";
  for (auto p : out.positions) std::cout << ' ' << p;
  std::cout << "\n";
  return out.success ? 0 : 1;
}
