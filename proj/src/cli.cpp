#include "lagcorr/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lagcorr/corralg.hpp"
#include "lagcorr/error.hpp"
#include "lagcorr/fockring.hpp"
#include "lagcorr/gwdt.hpp"
#include "lagcorr/json_io.hpp"
#include "lagcorr/sampling.hpp"

#ifndef LAGCORR_DEFAULT_DATA_DIR
#define LAGCORR_DEFAULT_DATA_DIR "data"
#endif

namespace lagcorr {

namespace {

using json_io::Json;

enum class Format { json, csv, text };

struct RunConfig {
  Format format = Format::text;
  long n = 4;
  long order = -1;  // per-command default
  long terms = 10;
  std::uint64_t seed = 20240601;
  long count = 100;
  std::string table_path;
  bool derived = false;
  std::string series_kind;
  std::string fock_op;
  std::vector<std::string> inputs;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string q_power(long half_exponent) {
  if (half_exponent % 2 == 0) return "q^" + std::to_string(half_exponent / 2);
  return "q^(" + std::to_string(half_exponent) + "/2)";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_terms_csv(std::ostream& out, const std::map<long, GaussianRational>& terms) {
  out << "exponent,re,im\n";
  for (const auto& [e, c] : terms) out << e << "," << c.re().get_str() << "," << c.im().get_str() << "\n";
}

std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path candidate = fs::path(data_dir()) / path;
  if (!fs::path(path).is_absolute() && fs::exists(candidate)) return candidate.string();
  return path;
}

RelationTable load_table(const RunConfig& cfg, int n_max) {
  if (cfg.table_path.empty()) return RelationTable::standard(n_max, cfg.derived);
  return json_io::decode_table(json_io::read_file(resolve_input(cfg.table_path)));
}

int cmd_unitarity(const RunConfig& cfg, std::ostream& out) {
  const RelationTable table = load_table(cfg, static_cast<int>(cfg.n));
  bool all = true;
  Json reports = Json::array();
  if (cfg.format == Format::csv) out << "n,partitions,forward_ok,backward_ok,failing_blocks\n";
  for (int n = 0; n <= cfg.n; ++n) {
    const UnitarityReport r = verify_unitarity(n, table);
    all = all && r.ok();
    std::string failing;
    for (const auto& mu : r.failing_blocks) failing += (failing.empty() ? "" : " ") + mu.to_string();
    switch (cfg.format) {
      case Format::json:
        reports.push_back(json_io::encode(r));
        break;
      case Format::csv:
        out << n << "," << r.partitions_checked << "," << yes_no(r.forward_ok) << "," << yes_no(r.backward_ok) << ","
            << failing << "\n";
        break;
      case Format::text:
        out << "n=" << n << " partitions=" << r.partitions_checked << " forward=" << (r.forward_ok ? "ok" : "FAIL")
            << " backward=" << (r.backward_ok ? "ok" : "FAIL");
        if (!failing.empty()) out << " failing=" << failing;
        out << "\n";
        break;
    }
  }
  if (cfg.format == Format::json) print_json(out, Json{{"pass", all}, {"reports", reports}});
  if (cfg.format == Format::text) out << "unitarity: " << (all ? "pass" : "FAIL") << "\n";
  return all ? kExitOk : kExitVerificationFailed;
}

int series_qint(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw CLI::ValidationError("--n", "qint needs n >= 1");
  const long order = cfg.order < 0 ? 20 : cfg.order;
  const QInteger q = q_integer(cfg.n, order);
  const bool agree = q_substitute_hbar(q.laurent, order) == q.hbar;
  switch (cfg.format) {
    case Format::json:
      print_json(out, Json{{"kind", "qint"}, {"n", cfg.n}, {"laurent", json_io::encode(q.laurent)},
                           {"hbar", json_io::encode(q.hbar)}, {"substitution_agrees", agree}});
      break;
    case Format::csv:
      print_terms_csv(out, q.hbar.coeffs());
      break;
    case Format::text:
      out << "[" << cfg.n << "]_q = " << q.laurent.to_string() << "\n";
      out << "2 sin(" << cfg.n << "h/2) = " << q.hbar.to_string() << "\n";
      out << "substitution agrees: " << yes_no(agree) << "\n";
      break;
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

int series_wall(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw CLI::ValidationError("--n", "wall needs n >= 1");
  const long order = cfg.order < 0 ? 2 * cfg.n * cfg.terms : cfg.order;
  const WallInvariant w = wall_invariant(cfg.n, order);
  switch (cfg.format) {
    case Format::json:
      print_json(out, Json{{"kind", "wall"}, {"n", cfg.n}, {"label", w.label}, {"p", json_io::encode(w.p)},
                           {"series", json_io::encode(w.series)}, {"closed_form", json_io::encode(w.closed_form)}});
      break;
    case Format::csv:
      print_terms_csv(out, w.series.terms.terms());
      break;
    case Format::text:
      out << "wall n=" << cfg.n << " label " << w.label << "\n";
      out << "series: " << w.series.terms.to_string() << "+...\n";
      out << "closed form: " << w.closed_form.to_string() << "\n";
      break;
  }
  return kExitOk;
}

int series_multicover(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) throw CLI::ValidationError("--n", "multicover needs d >= 1");
  const long order = cfg.order < 0 ? 6 : cfg.order;
  const MulticoverSeries m = multicover_series(cfg.n, order, cfg.terms);
  const bool integral = m.q_series.terms.all_gaussian_integers();
  switch (cfg.format) {
    case Format::json:
      print_json(out, Json{{"kind", "multicover"},
                           {"d", m.d},
                           {"hbar", json_io::encode(m.hbar)},
                           {"closed_form", json_io::encode(m.closed_form)},
                           {"q_series", json_io::encode(m.q_series)},
                           {"sign", m.sign},
                           {"gaussian_integral", integral}});
      break;
    case Format::csv:
      print_terms_csv(out, m.q_series.terms.terms());
      break;
    case Format::text:
      out << "multicover d=" << m.d << "\n";
      out << "hbar: " << m.hbar.to_string() << "\n";
      out << "closed form: " << m.closed_form.to_string() << "\n";
      out << "q-series: " << m.q_series.terms.to_string() << "+...\n";
      out << "sign of q^" << m.d << " term: " << (m.sign > 0 ? "+" : "-") << "\n";
      out << "non-integral coefficients:";
      for (const auto& [e, c] : m.q_series.terms.terms()) {
        if (!c.is_gaussian_integer()) out << " " << q_power(e) << ":" << c.to_string();
      }
      out << "\n";
      out << "gaussian-integral: " << yes_no(integral) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const std::string path = resolve_input(cfg.inputs.at(0));
  const Json j = json_io::read_file(path);
  const QSeries s = json_io::decode_qseries(j.contains("series") ? j["series"] : Json());
  const ContactData p = j.contains("contact") ? json_io::decode_contact(j["contact"]) : ContactData();
  long max_deg = 0;
  if (j.contains("max_deg")) {
    if (!j["max_deg"].is_number_integer()) throw Error(ErrorCode::Parse, path + ": 'max_deg' must be an integer");
    max_deg = j["max_deg"].get<long>();
  } else {
    max_deg = std::max<long>(0, (s.known_span() - 2) / 2);
  }
  const IntegralityReport r = integrality_check(s, p, max_deg);
  switch (cfg.format) {
    case Format::json:
      print_json(out, json_io::encode(r));
      break;
    case Format::csv:
      out << "rational,symmetric,gaussian_integral,literal_symmetric\n"
          << yes_no(r.rational) << "," << yes_no(r.symmetric) << "," << yes_no(r.gaussian_integral) << ","
          << yes_no(r.literal_symmetric) << "\n";
      break;
    case Format::text:
      out << "phase: i^" << r.phase_exponent << " = " << r.phase.to_string() << "\n";
      out << "rational=" << yes_no(r.rational) << " symmetric=" << yes_no(r.symmetric)
          << " integral=" << yes_no(r.gaussian_integral) << "\n";
      out << "literal sign reading symmetric=" << yes_no(r.literal_symmetric) << "\n";
      if (r.reconstruction) out << "closed form: " << r.reconstruction->to_string() << "\n";
      break;
  }
  return r.rational && r.symmetric && r.gaussian_integral ? kExitOk : kExitVerificationFailed;
}

int max_n(const ObjectId& o) { return o.n; }

int cmd_star(const RunConfig& cfg, std::ostream& out) {
  const Corr a = json_io::decode_corr(json_io::read_file(resolve_input(cfg.inputs.at(0))));
  const Corr b = json_io::decode_corr(json_io::read_file(resolve_input(cfg.inputs.at(1))));
  const int n = std::max({max_n(a.domain()), max_n(a.codomain()), max_n(b.codomain())});
  const RelationTable table = load_table(cfg, n);
  const Corr c = normalize(star(a, b, table), table);
  if (cfg.format == Format::json) {
    print_json(out, json_io::encode(c));
  } else if (cfg.format == Format::csv) {
    out << "generator,re,im\n";
    for (const auto& [g, x] : c.terms()) out << g.to_string() << "," << x.re().get_str() << "," << x.im().get_str() << "\n";
  } else {
    out << c.domain().to_string() << " -> " << c.codomain().to_string() << ": " << c.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_fock(const RunConfig& cfg, std::ostream& out) {
  const FockElement a = json_io::decode_fock(json_io::read_file(resolve_input(cfg.inputs.at(0))));
  std::optional<FockElement> result;
  if (cfg.fock_op == "exp") {
    result = fock_exp(a);
  } else if (cfg.fock_op == "log") {
    result = fock_log(a);
  } else {
    if (cfg.inputs.size() < 2) throw CLI::ValidationError("fock mul", "needs two input files");
    result = fock_mul(a, json_io::decode_fock(json_io::read_file(resolve_input(cfg.inputs.at(1)))));
  }
  if (cfg.format == Format::text) {
    out << result->to_string();
  } else {
    print_json(out, json_io::encode(*result));
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  print_json(out, json_io::encode(RelationTable::standard(static_cast<int>(cfg.n), cfg.derived)));
  return kExitOk;
}

// Seeded randomized identities: sine-algebra Jacobi and log(exp eta) = eta.
int cmd_props(const RunConfig& cfg, std::ostream& out) {
  sampling::Rng rng(cfg.seed);
  long jacobi_fail = 0;
  long fock_fail = 0;
  for (long k = 0; k < cfg.count; ++k) {
    const IntVector n_level = sampling::vector(rng, 2, 3);
    const SineGenerator a = sampling::sine_generator(rng, 6, n_level);
    const SineGenerator b = sampling::sine_generator(rng, 6, n_level);
    const SineGenerator c = sampling::sine_generator(rng, 6, n_level);
    auto one = [](const SineGenerator& g) { return SineCombination{{g, QLaurent(1)}}; };
    SineCombination total;
    accumulate(total, sine_bracket(one(a), sine_bracket(b, c)));
    accumulate(total, sine_bracket(one(b), sine_bracket(c, a)));
    accumulate(total, sine_bracket(one(c), sine_bracket(a, b)));
    if (!total.empty()) ++jacobi_fail;

    const FockElement eta = sampling::eta(rng, 5, 10, 4);
    if (!(fock_log(fock_exp(eta)) == eta)) ++fock_fail;
  }
  const bool ok = jacobi_fail == 0 && fock_fail == 0;
  if (cfg.format == Format::json) {
    print_json(out, Json{{"seed", cfg.seed}, {"count", cfg.count}, {"jacobi_failures", jacobi_fail},
                         {"fock_failures", fock_fail}, {"pass", ok}});
  } else {
    out << "seed=" << cfg.seed << " count=" << cfg.count << " jacobi_failures=" << jacobi_fail
        << " fock_failures=" << fock_fail << "\n";
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("LAGCORR_DATA_DIR"); env && *env) return env;
  return LAGCORR_DEFAULT_DATA_DIR;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus of lagrangian correspondences and GW/DT series"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats))->capture_default_str();

  auto* unitarity = app.add_subcommand("unitarity", "Check L L^dagger and L^dagger L for all n <= --n");
  unitarity->add_option("--n", cfg.n, "Largest n")->check(CLI::NonNegativeNumber)->capture_default_str();
  unitarity->add_option("--table", cfg.table_path, "Relation table JSON");
  unitarity->add_flag("--derived", cfg.derived, "Include rules derived by associativity");

  auto* series = app.add_subcommand("series", "Print [n]_q, wall or multiple-cover series");
  series->add_option("kind", cfg.series_kind, "qint | wall | multicover")
      ->required()
      ->check(CLI::IsMember({"qint", "wall", "multicover"}));
  series->add_option("--n", cfg.n, "n, or d for multicover")->check(CLI::PositiveNumber);
  series->add_option("--order", cfg.order, "hbar order (qint, multicover) or largest half-exponent (wall)")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--terms", cfg.terms, "Number of q-series terms")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Integrality check of a series file");
  check->add_option("file", cfg.inputs, "Series + contact JSON")->required()->expected(1);

  auto* star_cmd = app.add_subcommand("star", "Compose two correspondence elements (A then B)");
  star_cmd->add_option("files", cfg.inputs, "A.json B.json")->required()->expected(2);
  star_cmd->add_option("--table", cfg.table_path, "Relation table JSON");
  star_cmd->add_flag("--derived", cfg.derived, "Include rules derived by associativity");

  auto* fock = app.add_subcommand("fock", "exp, log or mul on Fock-ring elements");
  fock->add_option("op", cfg.fock_op, "exp | log | mul")->required()->check(CLI::IsMember({"exp", "log", "mul"}));
  fock->add_option("files", cfg.inputs, "Input JSON file(s)")->required()->expected(1, 2);

  auto* table = app.add_subcommand("table", "Dump the standard relation table as JSON");
  table->add_option("--n", cfg.n, "Largest n")->check(CLI::NonNegativeNumber);
  table->add_flag("--derived", cfg.derived, "Include rules derived by associativity");

  auto* props = app.add_subcommand("props", "Seeded randomized identity checks");
  props->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  props->add_option("--count", cfg.count, "Number of samples")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*unitarity) return cmd_unitarity(cfg, out);
    if (*series) {
      if (cfg.series_kind == "qint") return series_qint(cfg, out);
      if (cfg.series_kind == "wall") return series_wall(cfg, out);
      return series_multicover(cfg, out);
    }
    if (*check) return cmd_check(cfg, out);
    if (*star_cmd) return cmd_star(cfg, out);
    if (*fock) return cmd_fock(cfg, out);
    if (*table) return cmd_table(cfg, out);
    if (*props) return cmd_props(cfg, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace lagcorr
