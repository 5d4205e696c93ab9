#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symcert/cyclic_cover.hpp"
#include "symcert/errors.hpp"
#include "symcert/lefschetz.hpp"
#include "symcert/serialization.hpp"
#include "symcert/spread.hpp"
#include "symcert/symplectic.hpp"

namespace symcert::cli {
namespace {

using symcert::json::Json;

enum class Format { kJson, kCsv, kText };

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::optional<Format> format;

  std::string matrix_path;
  std::size_t k = 0;

  std::string degree_range = "2..10";
  bool torelli = false;

  std::optional<std::uint64_t> genus;
  std::string config_path;

  std::string genus_range = "1150..1160";
  std::uint64_t int_sum = 576;
  unsigned offset = 3;

  unsigned orbit_n = 4;
  unsigned orbit_k = 2;
  std::string vector_path;
};

struct Result {
  std::string body;
  int code = kOk;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

std::uint64_t parse_natural(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 18) {
    throw ParseError(std::string(what) + ": expected a natural number, got '" + text + "'");
  }
  return std::stoull(text);
}

// Accepts "A..B" or a single "A".
Range parse_range(const std::string& text, const char* what) {
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_natural(text, what);
  } else {
    r.lo = parse_natural(text.substr(0, dots), what);
    r.hi = parse_natural(text.substr(dots + 2), what);
  }
  if (r.lo > r.hi) throw ParseError(std::string(what) + ": empty range '" + text + "'");
  if (r.hi - r.lo > 1000000) throw ParseError(std::string(what) + ": range too long");
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scalar_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// Renders a header object plus a list of flat records. JSON keeps the
// records under `key`; CSV and text carry the header as comment lines.
std::string render(const Json& header, const std::vector<Json>& records, const std::string& key,
                   Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::kJson: {
      Json doc = header;
      if (key == "certificate" && records.size() == 1) {
        doc[key] = records.front();
      } else {
        doc[key] = records;
      }
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      for (const auto& [k, v] : header.items()) os << "# " << k << ": " << scalar_string(v) << '\n';
      if (records.empty()) break;
      bool first = true;
      for (const auto& [k, v] : records.front().items()) {
        os << (first ? "" : ",") << csv_field(k);
        first = false;
      }
      os << '\n';
      for (const auto& rec : records) {
        first = true;
        for (const auto& [k, v] : rec.items()) {
          os << (first ? "" : ",") << csv_field(scalar_string(v));
          first = false;
        }
        os << '\n';
      }
      break;
    }
    case Format::kText: {
      for (const auto& [k, v] : header.items()) os << "# " << k << ": " << scalar_string(v) << '\n';
      for (const auto& rec : records) {
        os << '\n';
        for (const auto& [k, v] : rec.items()) os << k << " = " << scalar_string(v) << '\n';
      }
      break;
    }
  }
  return os.str();
}

Json header_for(const char* command, const RunConfig& cfg) {
  return Json{{"command", command}, {"seed", cfg.seed}};
}

Result cmd_witness(const RunConfig& cfg, Format format) {
  const IntMatrix m = json::parse_matrix(read_file(cfg.matrix_path));
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw ShapeError("witness: matrix must be square of even positive size");
  }
  Json header = header_for("witness", cfg);
  header["genus"] = m.rows() / 2;
  header["k"] = cfg.k;
  try {
    const LowerBoundCert cert = lower_bound_certificate(m, cfg.k);
    if (const std::string bad = cert.invariant_failure(); !bad.empty()) {
      throw InvariantViolation("witness: " + bad);
    }
    header["status"] = "certificate";
    return {render(header, {json::to_json(cert)}, "certificate", format), kOk};
  } catch (const FallbackRegime& e) {
    header["status"] = "fallback";
    header["note"] = e.what();
    return {render(header, {}, "certificate", format), kFallback};
  }
}

Result cmd_cover(const RunConfig& cfg, Format format) {
  const Range r = parse_range(cfg.degree_range, "--degree-range");
  if (r.lo < 2) throw PreconditionError("cover: degrees must be at least 2");
  if (r.hi > 4096) throw PreconditionError("cover: degrees above 4096 are not supported");

  Json header = header_for("cover", cfg);
  header["variant"] = cfg.torelli ? "torelli" : "lifted";
  std::vector<Json> records;
  bool all_pass = true;
  for (std::uint64_t d = r.lo; d <= r.hi; ++d) {
    const CoverModel cover = build_cover_space(d);
    const IntMatrix map = cfg.torelli ? build_torelli_variant(d) : build_paper_map(d);
    const std::size_t m = m_value(map, cover.form);
    const std::size_t expected = cfg.torelli ? 2 * d + 2 : 2 * d + 1;
    const ObstructionOutcome ob = normal_generation_obstruction(map, d, cover.form);
    const bool pass = m == expected && ob.cert.has_value();
    all_pass = all_pass && pass;
    records.push_back(Json{{"d", d},
                           {"cover_genus", cover.cover_genus()},
                           {"m_value", m},
                           {"m_expected", expected},
                           {"identity_mod_d", ob.cert.has_value()},
                           {"pass", pass}});
  }
  if (!all_pass) header["status"] = "failed";
  header["depends_on"] = "Sp reduction surjectivity (cited)";
  return {render(header, records, "records", format), all_pass ? kOk : kInvariantViolation};
}

Result cmd_paper_example(const RunConfig& cfg, Format format) {
  const IntersectionTable table = cfg.config_path.empty()
                                      ? default_intersection_table()
                                      : load_intersection_table(cfg.config_path);
  const PaperExampleNumbers n = paper_example_numbers(table);
  const std::uint64_t numer = 2 * n.int_sum;
  const std::uint64_t shift = 3 + n.int_sum;

  if (cfg.genus) {
    const Rational q = linearized_bound(*cfg.genus, n.int_sum, 3);
    if (format == Format::kText) return {q.get_str() + "\n", kOk};
    Json header = header_for("paper-example", cfg);
    header["genus"] = *cfg.genus;
    header["bound"] = q.get_str();
    if (format == Format::kJson) return {header.dump(2) + "\n", kOk};
    return {render(header, {}, "records", format), kOk};
  }

  const std::string statement =
      "if every non-Torelli pseudo-Anosov f in Mod(S_g) with l_C(f) < C/g normally generates "
      "Mod(S_g) for large g, then C <= " +
      std::to_string(numer);
  const std::string asserted =
      "i(T_lambda beta, alpha) = i(lambda, beta) i(lambda, alpha) is taken as asserted "
      "(requires i(alpha, beta) = 0)";

  if (format != Format::kText) {
    Json header = header_for("paper-example", cfg);
    Json rec{{"i(xi, beta)", n.i_xi_beta},
             {"i(xi, alpha)", n.i_xi_alpha},
             {"i(lambda, beta)", n.i_lambda_beta},
             {"i(lambda, alpha)", n.i_lambda_alpha},
             {"i(phi.alpha, alpha)", n.i_phialpha_alpha},
             {"i(phi.beta, alpha)", n.i_phibeta_alpha},
             {"S", n.int_sum},
             {"bound", std::to_string(numer) + "/(g-" + std::to_string(shift) + ")"},
             {"valid_for", "g > " + std::to_string(shift)},
             {"statement", statement},
             {"asserted", asserted}};
    return {render(header, {rec}, "certificate", format), kOk};
  }

  std::ostringstream os;
  os << "# seed: " << cfg.seed << '\n'
     << "lambda = T_xi(beta)\n"
     << "phi = T_lambda T_beta^-1\n"
     << "i(xi, beta) = " << n.i_xi_beta << '\n'
     << "i(xi, alpha) = " << n.i_xi_alpha << '\n'
     << "i(lambda, beta) = i(xi, beta)^2\n"
     << "i(lambda, beta) = " << n.i_lambda_beta << '\n'
     << "i(lambda, alpha) = i(xi, beta) i(xi, alpha)\n"
     << "i(lambda, alpha) = " << n.i_lambda_alpha << '\n'
     << "i(phi.alpha, alpha) = i(lambda, alpha)^2\n"
     << "i(phi.alpha, alpha) = " << n.i_phialpha_alpha << '\n'
     << "i(phi.beta, alpha) = i(lambda, beta) i(lambda, alpha)\n"
     << "i(phi.beta, alpha) = " << n.i_phibeta_alpha << '\n'
     << "S = i(phi.alpha, alpha) + i(phi.beta, alpha) = " << n.int_sum << '\n'
     << "bound(g) = 2S/(g-3-S)\n"
     << "bound(g) = " << numer << "/(g-" << shift << ") for g > " << shift << '\n'
     << "note: " << asserted << '\n'
     << "statement: " << statement << '\n';
  return {os.str(), kOk};
}

Result cmd_spread(const RunConfig& cfg, Format format) {
  const Range r = parse_range(cfg.genus_range, "--genus-range");
  if (cfg.offset != 2 && cfg.offset != 3) throw PreconditionError("--offset must be 2 or 3");
  if (cfg.int_sum == 0) throw PreconditionError("--int-sum must be positive");

  Json header = header_for("spread", cfg);
  header["int_sum"] = cfg.int_sum;
  header["offset"] = cfg.offset;
  std::vector<Json> records;
  bool unavailable = false;
  for (std::uint64_t g = r.lo; g <= r.hi; ++g) {
    const auto b = upper_bound_eq2(g, cfg.int_sum, cfg.offset);
    if (!b) {
      unavailable = true;
      records.push_back(Json{{"g", g},
                             {"n_star", nullptr},
                             {"bound", "unavailable"},
                             {"linearized", nullptr},
                             {"automaton_width", nullptr},
                             {"automaton_misses_block", nullptr}});
      continue;
    }
    Json lin = nullptr;
    if (g > cfg.offset + cfg.int_sum) {
      const Rational l = linearized_bound(g, cfg.int_sum, cfg.offset);
      if (b->bound > l) {
        throw InvariantViolation("spread: floor bound exceeds linearized bound at g = " +
                                 std::to_string(g));
      }
      lin = l.get_str();
    }
    if (!b->automaton_misses_block) {
      throw InvariantViolation("spread: automaton saturated before n_star at g = " +
                               std::to_string(g));
    }
    records.push_back(Json{{"g", g},
                           {"n_star", b->n_star},
                           {"bound", b->bound.get_str()},
                           {"linearized", lin},
                           {"automaton_width", b->automaton_width},
                           {"automaton_misses_block", b->automaton_misses_block}});
  }
  return {render(header, records, "records", format), unavailable ? kFallback : kOk};
}

Result cmd_orbit_sum(const RunConfig& cfg, Format format) {
  if (cfg.orbit_n > 16) throw PreconditionError("orbit-sum: n above 16 is not supported");
  IntMatrix a;
  IntVector c;
  if (cfg.matrix_path.empty()) {
    const std::size_t dim = std::size_t{1} << cfg.orbit_n;
    a = IntMatrix::cyclic_shift(dim);
    c = unit_vector(dim, 0);
  } else {
    a = json::parse_matrix(read_file(cfg.matrix_path));
    if (cfg.vector_path.empty()) throw ParseError("orbit-sum: --vector is required with --matrix");
    c = json::vector_from_json(json::parse(read_file(cfg.vector_path)));
  }
  const OrbitSumResult res = orbit_sum_subspace(a, c, cfg.orbit_n, cfg.orbit_k);
  Json header = header_for("orbit-sum", cfg);
  header["n"] = cfg.orbit_n;
  header["k"] = cfg.orbit_k;
  return {render(header, {json::to_json(res)}, "certificate", format), kOk};
}

Result cmd_surjectivity(const RunConfig& cfg, Format format) {
  const SurjectivityReport rep = sp2_mod2_surjectivity_sanity();
  const bool ok = rep.surjective && rep.classes_found == 6;
  return {render(header_for("surjectivity-sanity", cfg), {json::to_json(rep)}, "certificate",
                 format),
          ok ? kOk : kInvariantViolation};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format_name;

  CLI::App app{"symcert: exact certificates for homology actions of mapping classes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Seed recorded in every output")->capture_default_str();
  app.add_option("--output", cfg.output, "Write output to PATH instead of stdout");
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* witness = app.add_subcommand("witness", "Lefschetz lower-bound certificate for a matrix");
  witness->add_option("--matrix", cfg.matrix_path, "JSON matrix file")->required();
  witness->add_option("--k", cfg.k, "Required rank of the fixed sublattice")->required();

  auto* cover = app.add_subcommand("cover", "Cyclic-cover lift checks per degree");
  cover->add_option("--degree-range", cfg.degree_range, "Degrees A..B")->capture_default_str();
  cover->add_flag("--torelli-variant", cfg.torelli, "Use the Torelli variant");

  auto* paper = app.add_subcommand("paper-example", "Worked intersection-number chain");
  paper->add_option("--genus", cfg.genus, "Evaluate the bound at this genus");
  paper->add_option("--config", cfg.config_path, "Intersection table (TOML)");

  auto* spread = app.add_subcommand("spread", "Spread bound table");
  spread->add_option("--genus-range", cfg.genus_range, "Genera A..B")->capture_default_str();
  spread->add_option("--int-sum", cfg.int_sum, "Intersection sum S")->capture_default_str();
  spread->add_option("--offset", cfg.offset, "Genus offset")
      ->check(CLI::IsMember({2u, 3u}))
      ->capture_default_str();

  auto* orbit = app.add_subcommand("orbit-sum", "Orbit-sum subspace dimension");
  orbit->add_option("--n", cfg.orbit_n, "Orbit exponent n")->capture_default_str();
  orbit->add_option("--k", cfg.orbit_k, "Subsum exponent k")->capture_default_str();
  orbit->add_option("--matrix", cfg.matrix_path, "JSON matrix file (default: shift on 2^n)");
  orbit->add_option("--vector", cfg.vector_path, "JSON vector file");

  auto* surj = app.add_subcommand("surjectivity-sanity", "Sp(2, Z) -> Sp(2, Z/2) check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (!format_name.empty()) {
    cfg.format = format_name == "json" ? Format::kJson
                 : format_name == "csv" ? Format::kCsv
                                        : Format::kText;
  }

  Result result;
  try {
    if (witness->parsed()) {
      result = cmd_witness(cfg, cfg.format.value_or(Format::kJson));
    } else if (cover->parsed()) {
      result = cmd_cover(cfg, cfg.format.value_or(Format::kJson));
    } else if (paper->parsed()) {
      result = cmd_paper_example(cfg, cfg.format.value_or(Format::kText));
    } else if (spread->parsed()) {
      result = cmd_spread(cfg, cfg.format.value_or(Format::kCsv));
    } else if (orbit->parsed()) {
      result = cmd_orbit_sum(cfg, cfg.format.value_or(Format::kJson));
    } else if (surj->parsed()) {
      result = cmd_surjectivity(cfg, cfg.format.value_or(Format::kJson));
    }
  } catch (const FallbackRegime& e) {
    err << "fallback: " << e.what() << '\n';
    return kFallback;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariantViolation;
  }

  if (cfg.output.empty()) {
    out << result.body;
  } else {
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    file << result.body;
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kInputError;
    }
  }
  return result.code;
}

}  // namespace symcert::cli
