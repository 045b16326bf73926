#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcpc/json_io.hpp"
#include "qcpc/oracle.hpp"
#include "qcpc/qcpc.hpp"
#include "qcpc/random_codes.hpp"

namespace qcpc::cli {

using nlohmann::json;

enum ExitCode : int { ok = 0, usage = 1, construction_failure = 2, decode_failure = 3 };

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Globals {
  std::size_t budget_dim = 20;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  OracleBudget budget() const { return OracleBudget{budget_dim}; }
};

inline json error_object(const char* type, const std::string& msg) {
  return json{{"error", {{"type", type}, {"message", msg}}}};
}

}  // namespace detail

// Runs one command line; the JSON result goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-cyclic product codes: construction, spectral bounds and burst decoding", "qcpc"};
  app.require_subcommand(1);
  detail::Globals g;
  app.add_option("--budget-dim", g.budget_dim, "Enumerate at most 2^N codewords")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));

  json result;
  int status = ok;
  std::function<void()> action;

  // field
  std::uint64_t f_q = 2, f_n = 1;
  auto* field_cmd = app.add_subcommand("field", "Splitting field of X^n - 1 over F_q");
  field_cmd->add_option("--q", f_q, "Prime alphabet size")->required();
  field_cmd->add_option("--n", f_n, "Order of the wanted root of unity")->required();
  field_cmd->callback([&] {
    action = [&] {
      const Field f = field_extend(f_q, f_n);
      result = json{{"field", json_io::field_to_json(f)},
                    {"primitive", json_io::element_to_json(f.primitive_element())},
                    {"root", json_io::element_to_json(root_of_unity(f, f_n))},
                    {"n", f_n}};
    };
  });

  // code reduce | info
  std::string code_path;
  auto* code_cmd = app.add_subcommand("code", "Inspect a quasi-cyclic code");
  code_cmd->require_subcommand(1);
  auto* reduce_cmd = code_cmd->add_subcommand("reduce", "Reduce generator rows to the RGB/POT basis");
  reduce_cmd->add_option("--code", code_path, "Code JSON")->required();
  reduce_cmd->callback([&] {
    action = [&] { result = json_io::code_to_json(json_io::code_from_json(detail::read_json(code_path))); };
  });
  auto* info_cmd = code_cmd->add_subcommand("info", "Dimension, level and row dimensions");
  info_cmd->add_option("--code", code_path, "Code JSON")->required();
  info_cmd->callback([&] {
    action = [&] {
      const auto c = json_io::code_from_json(detail::read_json(code_path));
      result = json{{"code", json_io::code_to_json(c)},
                    {"length", c.length()},
                    {"dimension", c.dimension()},
                    {"level", c.level()},
                    {"row_dimensions", c.row_dimensions()}};
    };
  });

  // product build
  std::string row_path, col_path, method = "unreduced";
  std::optional<std::int64_t> bez_a, bez_b;
  auto* product_cmd = app.add_subcommand("product", "Product code constructions");
  product_cmd->require_subcommand(1);
  auto* build_cmd = product_cmd->add_subcommand("build", "Generator matrix of A (x) B");
  build_cmd->add_option("--row", row_path, "Row code A (JSON)")->required();
  build_cmd->add_option("--col", col_path, "Column code B (JSON)")->required();
  build_cmd->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"unreduced", "thm2", "thm3", "conjecture"}))
      ->capture_default_str();
  build_cmd->add_option("--a", bez_a, "Bezout coefficient of n_A");
  build_cmd->add_option("--b", bez_b, "Bezout coefficient of n_B");
  build_cmd->callback([&] {
    action = [&] {
      const auto a = json_io::code_from_json(detail::read_json(row_path));
      const auto b = json_io::code_from_json(detail::read_json(col_path));
      if (bez_a.has_value() != bez_b.has_value()) throw detail::UsageError("--a and --b must be given together");
      std::optional<std::pair<std::int64_t, std::int64_t>> ab;
      if (bez_a) ab = std::make_pair(*bez_a, *bez_b);
      const auto s = make_product_spec(a.index(), a.co_index(), b.index(), b.co_index(), ab);
      ProductBasis basis;
      if (method == "unreduced")
        basis = unreduced_basis(s, a.rgb(), b.rgb());
      else if (method == "thm2")
        basis = pre_rgb_2qc(s, a.rgb(), b.rgb());
      else if (method == "thm3")
        basis = rgb_1level(s, a.rgb(), b.rgb());
      else
        basis = conjecture_basis(s, a.rgb(), b.rgb());
      result = json_io::code_to_json(basis.code());
      result["construction"] = json_io::basis_to_json(basis);
      if (!basis.verified) status = construction_failure;
    };
  });

  // bound st | embed
  auto* bound_cmd = app.add_subcommand("bound", "Minimum distance bounds");
  bound_cmd->require_subcommand(1);
  std::optional<std::size_t> st_f, st_z, st_delta, delta_max, field_n;
  auto* st_cmd = bound_cmd->add_subcommand("st", "Spectral bound from consecutive eigenvalues");
  st_cmd->add_option("--code", code_path, "Code JSON")->required();
  st_cmd->add_option("--f", st_f, "First exponent");
  st_cmd->add_option("--z", st_z, "Exponent step");
  st_cmd->add_option("--delta", st_delta, "Designed distance");
  st_cmd->add_option("--delta-max", delta_max, "Largest delta tried when searching");
  st_cmd->add_option("--field-n", field_n,
                     "Take alpha in the splitting field of X^N - 1 (N a multiple of m); fixes the exponent labels");
  st_cmd->callback([&] {
    action = [&] {
      const auto c = json_io::code_from_json(detail::read_json(code_path));
      const std::size_t n = field_n.value_or(c.co_index());
      if (n % c.co_index() != 0) throw detail::UsageError("--field-n must be a multiple of m");
      const Field ext = field_extend(c.field().characteristic(), n);
      const auto rep = analyze(c.rgb(), root_of_unity(ext, c.co_index()), c.co_index(), g.threads);
      std::optional<BoundCertificate> cert;
      if (st_f || st_z || st_delta) {
        if (!st_f || !st_z || !st_delta) throw detail::UsageError("--f, --z and --delta must be given together");
        cert = st_bound(rep, *st_f, *st_z, *st_delta, c.field());
      } else {
        cert = search_st_params(rep, delta_max.value_or(c.co_index() + 1), g.threads);
        if (!cert) throw NoCertificate("no certificate with delta >= 3");
      }
      result = json{{"bound", cert->bound}, {"certificate", json_io::certificate_to_json(*cert)}};
    };
  });
  std::optional<std::size_t> e_f1, e_f2, e_z1, e_z2, e_delta;
  auto* embed_cmd = bound_cmd->add_subcommand("embed", "Bound on A by embedding it into A (x) B");
  embed_cmd->add_option("--row", row_path, "Row code A (JSON)")->required();
  embed_cmd->add_option("--col", col_path, "Cyclic column code B (JSON)")->required();
  embed_cmd->add_option("--delta-max", delta_max, "Largest delta tried when searching");
  embed_cmd->add_option("--f1", e_f1);
  embed_cmd->add_option("--f2", e_f2);
  embed_cmd->add_option("--z1", e_z1);
  embed_cmd->add_option("--z2", e_z2);
  embed_cmd->add_option("--delta", e_delta);
  embed_cmd->callback([&] {
    action = [&] {
      const auto a = json_io::code_from_json(detail::read_json(row_path));
      const auto b = json_io::code_from_json(detail::read_json(col_path));
      const auto ctx = json_io::make_embedding_context(a, b, g.budget(), g.threads);
      std::optional<BoundCertificate> cert;
      const int given = e_f1.has_value() + e_f2.has_value() + e_z1.has_value() + e_z2.has_value() + e_delta.has_value();
      if (given == 5) {
        cert = generalized_bound(ctx.report, ctx.column, *e_f1, *e_f2, *e_z1, *e_z2, *e_delta);
      } else if (given == 0) {
        cert = search_bound_params(ctx.report, ctx.column, delta_max.value_or(a.co_index() * b.co_index() + 1),
                                   g.threads);
        if (!cert) throw NoCertificate("no certificate with delta >= 3");
      } else {
        throw detail::UsageError("--f1, --f2, --z1, --z2 and --delta must be given together");
      }
      result = json{{"d_star", cert->bound},
                    {"certificate", json_io::certificate_to_json(*cert)},
                    {"setup", json_io::setup_to_json(a, b, *cert)}};
    };
  });

  // decode
  std::string setup_path, received_path;
  auto* decode_cmd = app.add_subcommand("decode", "Decode one received word");
  decode_cmd->add_option("--setup", setup_path, "Setup JSON (as emitted under \"setup\" by bound embed)")->required();
  decode_cmd->add_option("--received", received_path, "Received word JSON")->required();
  decode_cmd->callback([&] {
    action = [&] {
      json sj = detail::read_json(setup_path);
      if (sj.contains("setup")) sj = sj.at("setup");
      const auto setup = json_io::setup_from_json(sj, g.budget());
      const auto r = json_io::word_from_json(setup.code.field(), detail::read_json(received_path), setup.ell());
      const auto res = decode(setup, r);
      result = json_io::decode_to_json(res);
      if (!res.success) status = decode_failure;
    };
  });

  // simulate
  std::size_t bursts = 1, trials = 100;
  auto* sim_cmd = app.add_subcommand("simulate", "Random burst-error decoding trials");
  sim_cmd->add_option("--setup", setup_path, "Setup JSON")->required();
  sim_cmd->add_option("--bursts", bursts, "Number of bursts per trial")->required();
  sim_cmd->add_option("--trials", trials, "Number of trials")->capture_default_str();
  sim_cmd->callback([&] {
    action = [&] {
      json sj = detail::read_json(setup_path);
      if (sj.contains("setup")) sj = sj.at("setup");
      const auto setup = json_io::setup_from_json(sj, g.budget());
      if (bursts > setup.m_a()) throw detail::UsageError("more bursts than positions");
      const Field f = setup.code.field();
      std::mt19937_64 rng(g.seed);
      std::uniform_int_distribution<Value> sym(0, f.size() - 1);
      std::size_t successes = 0;
      json failures = json::array();
      for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Polynomial> msg;
        for (auto k : setup.code.row_dimensions()) msg.push_back(random::random_poly(f, k, rng));
        const QcWord c = setup.code.encode(msg);
        std::vector<std::size_t> pos(setup.m_a());
        for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
        std::shuffle(pos.begin(), pos.end(), rng);
        pos.resize(bursts);
        std::sort(pos.begin(), pos.end());
        QcWord r = c;
        json cols = json::array();
        for (auto p : pos) {
          std::vector<Value> col(setup.ell(), 0);
          while (std::all_of(col.begin(), col.end(), [](Value v) { return v == 0; }))
            for (auto& v : col) v = sym(rng);
          for (std::size_t j = 0; j < setup.ell(); ++j) r[j].set_coeff(p, f.add(r[j].coeff(p), col[j]));
          cols.push_back(col);
        }
        const auto res = decode(setup, r);
        if (res.success && res.corrected == c) {
          ++successes;
        } else if (failures.size() < 16) {
          failures.push_back(json{{"trial", t},
                                  {"positions", pos},
                                  {"columns", cols},
                                  {"reason", res.success ? "decoded to a different codeword" : res.reason}});
        }
      }
      result = json{{"bursts", bursts},
                    {"trials", trials},
                    {"successes", successes},
                    {"ratio", trials ? static_cast<double>(successes) / static_cast<double>(trials) : 1.0},
                    {"tau", setup.tau},
                    {"seed", g.seed},
                    {"failures", failures}};
    };
  });

  // mindist
  auto* mind_cmd = app.add_subcommand("mindist", "Brute-force minimum distance");
  mind_cmd->add_option("--code", code_path, "Code JSON")->required();
  mind_cmd->callback([&] {
    action = [&] {
      const auto c = json_io::code_from_json(detail::read_json(code_path));
      const auto d = brute_min_distance(c, g.budget(), g.threads);
      result = json{{"d", d}, {"dimension", c.dimension()}, {"length", c.length()}};
    };
  });

  // verify-conjecture
  std::size_t v_la = 2, v_lb = 1, v_ma = 7, v_mb = 5, v_trials = 50;
  std::uint64_t v_q = 2;
  auto* vc_cmd = app.add_subcommand("verify-conjecture", "Check the conjectured basis on random products");
  vc_cmd->add_option("--lA", v_la, "Index of A")->required();
  vc_cmd->add_option("--lB", v_lb, "Index of B")->required();
  vc_cmd->add_option("--mA-max", v_ma, "Largest co-index of A")->required();
  vc_cmd->add_option("--mB-max", v_mb, "Largest co-index of B")->required();
  vc_cmd->add_option("--q", v_q, "Prime alphabet size")->required();
  vc_cmd->add_option("--trials", v_trials, "Number of random instances")->capture_default_str();
  vc_cmd->callback([&] {
    action = [&] {
      if (!qcpc::detail::is_prime(v_q)) throw OutOfScope("only prime alphabets are supported");
      const Field f = Field::prime(v_q);
      std::mt19937_64 rng(g.seed);
      bool all = true;
      json failures = json::array();
      for (std::size_t t = 0; t < v_trials; ++t) {
        const auto inst = random::random_product(f, v_la, v_lb, v_ma, v_mb, rng);
        const auto basis = conjecture_basis(inst.spec, inst.ga, inst.gb);
        const auto ka = QuasiCyclicCode::from_rgb(inst.ga, inst.spec.m_a).dimension();
        const auto kb = QuasiCyclicCode::from_rgb(inst.gb, inst.spec.m_b).dimension();
        const bool dims = basis.code().dimension() == ka * kb;
        if (!basis.verified || !dims) {
          all = false;
          failures.push_back(json{{"trial", t},
                                  {"m_a", inst.spec.m_a},
                                  {"m_b", inst.spec.m_b},
                                  {"row", json_io::rows_to_json(inst.ga)},
                                  {"col", json_io::rows_to_json(inst.gb)},
                                  {"module_equal", basis.verified},
                                  {"dimension_ok", dims}});
        }
      }
      result = json{{"trials", v_trials}, {"verified", all}, {"seed", g.seed}, {"failures", failures}};
      if (!all) status = construction_failure;
    };
  });

  for (auto* sub : {field_cmd, code_cmd, reduce_cmd, info_cmd, product_cmd, build_cmd, bound_cmd, st_cmd, embed_cmd,
                    decode_cmd, sim_cmd, mind_cmd, vc_cmd})
    sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << detail::error_object("usage", e.what()).dump() << "\n";
    return usage;
  }

  try {
    if (action) action();
  } catch (const detail::UsageError& e) {
    err << detail::error_object("usage", e.what()).dump() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << detail::error_object("parse", e.what()).dump() << "\n";
    return usage;
  } catch (const BudgetExceeded& e) {
    err << detail::error_object("budget", e.what()).dump() << "\n";
    return construction_failure;
  } catch (const NoCertificate& e) {
    err << detail::error_object("no_certificate", e.what()).dump() << "\n";
    return construction_failure;
  } catch (const Error& e) {
    err << detail::error_object("construction", e.what()).dump() << "\n";
    return construction_failure;
  }
  out << result.dump(2) << "\n";
  return status;
}

}  // namespace qcpc::cli
