#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcpc/decoder.hpp"
#include "qcpc/galois.hpp"
#include "qcpc/product.hpp"
#include "qcpc/qcc.hpp"
#include "qcpc/spectral.hpp"

// JSON encodings. Keys are sorted (std::map-backed objects) so dumps are
// byte-stable. Polynomials over the prime field are ascending integer arrays;
// extension-field elements are ascending digit arrays.
namespace qcpc::json_io {

using nlohmann::json;

namespace detail {
inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return require(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}
}  // namespace detail

inline json field_to_json(const Field& f) {
  return json{{"p", f.characteristic()}, {"s", f.degree()}, {"modulus", f.modulus()}};
}

inline Field field_from_json(const json& j) {
  const auto p = detail::get<std::uint64_t>(j, "p");
  if (j.contains("modulus")) return Field::from_modulus(p, detail::get<std::vector<std::uint64_t>>(j, "modulus"));
  const auto s = j.contains("s") ? detail::get<std::uint32_t>(j, "s") : 1u;
  return extension_field(p, s);
}

inline json element_to_json(const Element& e) { return e.digits(); }

inline Element element_from_json(const Field& f, const json& j) {
  try {
    if (j.is_number_unsigned()) return f.element(j.get<Value>());
    const auto d = j.get<std::vector<std::uint64_t>>();
    return f.element(f.from_digits(d));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field element: ") + e.what());
  }
}

inline json poly_to_json(const Polynomial& p) { return p.coefficients(); }

inline Polynomial poly_from_json(const Field& f, const json& j) {
  try {
    auto c = j.get<std::vector<Value>>();
    for (auto& v : c)
      if (v >= f.size()) throw ParseError("coefficient out of range");
    return Polynomial(f, std::move(c));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad polynomial: ") + e.what());
  }
}

inline json rows_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(poly_to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline PolyMatrix rows_from_json(const Field& f, std::size_t ell, const json& j) {
  if (!j.is_array()) throw ParseError("rows must be an array");
  PolyMatrix m(f, 0, ell);
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != ell) throw ParseError("each row needs ell polynomials");
    std::vector<Polynomial> row;
    for (const auto& p : r) row.push_back(poly_from_json(f, p));
    m.append_row(row);
  }
  return m;
}

inline json code_to_json(const QuasiCyclicCode& c) {
  std::vector<std::size_t> diag;
  for (std::size_t j = 0; j < c.index(); ++j) diag.push_back(c.rgb()(j, j).degree().value());
  return json{{"q", c.field().size()},
              {"ell", c.index()},
              {"m", c.co_index()},
              {"rows", rows_to_json(c.rgb())},
              {"rgb_pot", true},
              {"dimension", c.dimension()},
              {"level", c.level()},
              {"diagonal_degrees", diag}};
}

inline QuasiCyclicCode code_from_json(const json& j) {
  const auto q = detail::get<std::uint64_t>(j, "q");
  const auto ell = detail::get<std::size_t>(j, "ell");
  const auto m = detail::get<std::size_t>(j, "m");
  if (!qcpc::detail::is_prime(q)) throw OutOfScope("only prime alphabets are supported");
  if (ell == 0 || m == 0) throw ParseError("ell and m must be positive");
  const Field f = Field::prime(q);
  const PolyMatrix rows = rows_from_json(f, ell, detail::require(j, "rows"));
  if (j.contains("rgb_pot") && j.at("rgb_pot").is_boolean() && j.at("rgb_pot").get<bool>())
    return QuasiCyclicCode::from_rgb(rows, m);
  return QuasiCyclicCode(rows, m);
}

inline json word_to_json(const QcWord& w) {
  json a = json::array();
  for (const auto& p : w) a.push_back(poly_to_json(p));
  return a;
}

inline QcWord word_from_json(const Field& f, const json& j, std::size_t ell) {
  const json& arr = j.is_object() ? detail::require(j, "received") : j;
  if (!arr.is_array() || arr.size() != ell) throw ParseError("word needs ell coefficient arrays");
  QcWord w;
  for (const auto& p : arr) w.push_back(poly_from_json(f, p));
  return w;
}

inline json distance_to_json(const ExtendedDistance& d) {
  return d.is_infinite() ? json("inf") : json(d.value());
}

inline json certificate_to_json(const BoundCertificate& c) {
  json space = json::array();
  for (const auto& v : c.eigenspace) {
    json vec = json::array();
    for (const auto& x : v) vec.push_back(element_to_json(x));
    space.push_back(std::move(vec));
  }
  json out{{"kind", c.kind == BoundKind::st ? "st" : "generalized"},
           {"f1", c.f1},
           {"z1", c.z1},
           {"delta", c.delta},
           {"D", c.D},
           {"indices", c.indices},
           {"eigenspace", space},
           {"d_ec", distance_to_json(c.d_ec)},
           {"bound", c.bound}};
  if (c.kind == BoundKind::generalized) {
    out["f2"] = c.f2;
    out["z2"] = c.z2;
    out["d_b"] = c.d_b;
  }
  return out;
}

struct CertificateParams {
  std::size_t f1 = 0, f2 = 0, z1 = 1, z2 = 1, delta = 2;
};

inline CertificateParams params_from_json(const json& j) {
  return {detail::get<std::size_t>(j, "f1"), detail::get<std::size_t>(j, "f2"), detail::get<std::size_t>(j, "z1"),
          detail::get<std::size_t>(j, "z2"), detail::get<std::size_t>(j, "delta")};
}

inline json params_to_json(const BoundCertificate& c) {
  return json{{"f1", c.f1}, {"f2", c.f2}, {"z1", c.z1}, {"z2", c.z2}, {"delta", c.delta}};
}

// Row code A, cyclic column code B and the shared splitting field.
struct EmbeddingContext {
  QuasiCyclicCode row;
  Field ext;
  Element alpha;
  SpectralReport report;
  ColumnCode column;
};

inline EmbeddingContext make_embedding_context(const QuasiCyclicCode& a, const QuasiCyclicCode& b,
                                               const OracleBudget& budget = {}, unsigned threads = 1) {
  if (!(a.field() == b.field())) throw FieldMismatch("row and column codes over different fields");
  if (b.index() != 1) throw DomainError("column code must be cyclic (ell = 1)");
  if (std::gcd(a.co_index(), b.co_index()) != 1) throw DomainError("co-indices must be coprime");
  const Field ext = field_extend(a.field().characteristic(), a.co_index() * b.co_index());
  const Element alpha = root_of_unity(ext, a.co_index());
  const Element beta = root_of_unity(ext, b.co_index());
  return {a, ext, alpha, analyze(a.rgb(), alpha, a.co_index(), threads), make_column_code(b, beta, budget)};
}

// Setup document: {"row": code, "col": code, "certificate": params}.
inline json setup_to_json(const QuasiCyclicCode& a, const QuasiCyclicCode& b, const BoundCertificate& c) {
  return json{{"row", code_to_json(a)}, {"col", code_to_json(b)}, {"certificate", params_to_json(c)}};
}

inline DecoderSetup setup_from_json(const json& j, const OracleBudget& budget = {}) {
  const auto a = code_from_json(detail::require(j, "row"));
  const auto b = code_from_json(detail::require(j, "col"));
  const auto p = params_from_json(detail::require(j, "certificate"));
  const auto ctx = make_embedding_context(a, b, budget);
  const auto cert = generalized_bound(ctx.report, ctx.column, p.f1, p.f2, p.z1, p.z2, p.delta);
  return make_decoder_setup(a, ctx.column, cert, ctx.alpha);
}

inline json decode_to_json(const DecodeResult& r) {
  json out{{"outcome", r.success ? "corrected" : "failure"}, {"positions", r.positions}, {"columns", r.columns}};
  if (r.success)
    out["corrected"] = word_to_json(r.corrected);
  else
    out["reason"] = r.reason;
  return out;
}

inline json basis_to_json(const ProductBasis& b) {
  return json{{"method", b.method},
              {"a", b.spec.a},
              {"b", b.spec.b},
              {"shifts", b.shifts},
              {"core", rows_to_json(b.core)},
              {"core_rgb", rows_to_json(b.core_code().rgb())},
              {"generators", rows_to_json(b.generators())},
              {"verified", b.verified}};
}

}  // namespace qcpc::json_io
