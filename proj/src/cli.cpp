#include "gf2fourier/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "gf2fourier/constructions.hpp"
#include "gf2fourier/fourier.hpp"
#include "gf2fourier/lrank.hpp"
#include "gf2fourier/poly_text.hpp"
#include "gf2fourier/verify.hpp"

namespace gf2f {

namespace {

using nlohmann::ordered_json;

// Options shared by every subcommand that needs a polynomial.
struct PolyInput {
  int n = 0;
  std::string poly;
  std::string construct;
  std::optional<double> lower_density;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "number of variables")->required();
    cmd->add_option("--poly", poly, "polynomial text, e.g. \"x1*x2 + x3\"");
    cmd->add_option("--construct", construct,
                    "built-in family NAME:D with NAME one of complete, "
                    "disjoint, gip, grid");
    cmd->add_option("--lower-density", lower_density,
                    "with --construct: add a pseudorandom lower part of this "
                    "density in [0,1]");
    cmd->add_option("--seed", seed, "seed for the pseudorandom lower part");
  }

  Gf2Poly resolve() const {
    if (poly.empty() == construct.empty())
      throw std::domain_error("exactly one of --poly or --construct is required");
    if (!poly.empty()) {
      if (lower_density)
        throw std::domain_error("--lower-density applies only to --construct");
      return parse_poly(poly, n);
    }
    auto colon = construct.find(':');
    if (colon == std::string::npos || colon + 1 == construct.size())
      throw std::domain_error("--construct expects NAME:D, e.g. complete:2");
    std::string name = construct.substr(0, colon);
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(construct.substr(colon + 1), &used);
      if (used != construct.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::domain_error("--construct parameter must be an integer");
    }
    Gf2Poly f = name == "complete"  ? complete_uniform(d, n)
                : name == "disjoint" ? disjoint_blocks(d, n)
                : name == "gip"      ? disjoint_blocks(d, n)
                : name == "grid"     ? grid_lines(d, n)
                                     : throw std::domain_error(
                                           "unknown construction '" + name + "'");
    if (lower_density) {
      if (d < 1)
        throw std::domain_error("no lower part exists below degree 1");
      f = f + random_lower_part(d, n, *lower_density, seed);
    }
    return f;
  }
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_spectrum(const Spectrum& s, const std::string& format,
                   std::ostream& out) {
  if (format == "csv") {
    out << "mask,coefficient\n";
    for (std::size_t a = 0; a < s.size(); ++a)
      out << a << "," << s.coeff(static_cast<Mask>(a)).to_string() << "\n";
    return;
  }
  ordered_json j = ordered_json::object();
  for (std::size_t a = 0; a < s.size(); ++a)
    j[std::to_string(a)] = s.coeff(static_cast<Mask>(a)).to_string();
  out << j.dump() << "\n";
}

ordered_json witness_json(const LinearSystem& sys) {
  ordered_json rows = ordered_json::array();
  for (Mask f : sys.forms()) {
    ordered_json vars = ordered_json::array();
    for (int i = 0; i < sys.n_vars(); ++i)
      if (f >> i & 1) vars.push_back(i + 1);
    rows.push_back(std::move(vars));
  }
  return rows;
}

std::string witness_text(const LinearSystem& sys) {
  std::string out;
  for (int r = 0; r < sys.size(); ++r) {
    if (r) out += "|";
    bool first = true;
    for (int i = 0; i < sys.n_vars(); ++i)
      if (sys.forms()[r] >> i & 1) {
        if (!first) out += "+";
        out += "x" + std::to_string(i + 1);
        first = false;
      }
  }
  return out;
}

int cmd_spectrum(const PolyInput& in, const std::string& method,
                 const std::string& format, std::ostream& out) {
  Gf2Poly f = in.resolve();
  Spectrum s = method == "covers" ? spectrum_covers(f) : spectrum_wht(f);
  emit_spectrum(s, format, out);
  return 0;
}

int cmd_sparsity(const PolyInput& in, const std::string& format,
                 std::ostream& out) {
  Spectrum s = spectrum_wht(in.resolve());
  long pm = sparsity(s), s01 = sparsity01(s);
  if (format == "csv")
    out << "spar_pm,spar\n" << pm << "," << s01 << "\n";
  else
    out << ordered_json{{"spar_pm", pm}, {"spar", s01}}.dump() << "\n";
  return 0;
}

int cmd_granularity(const PolyInput& in, const std::string& format,
                    std::ostream& out) {
  long g = granularity(spectrum_wht(in.resolve()));
  if (format == "csv")
    out << "gran_pm\n" << g << "\n";
  else
    out << ordered_json{{"gran_pm", g}}.dump() << "\n";
  return 0;
}

int cmd_covers(const PolyInput& in, const std::string& format,
               std::ostream& out) {
  CoverTable table = cover_table(in.resolve());
  std::size_t size = std::size_t{1} << table.n_vars();
  if (format == "csv") {
    out << "mask,acc,weight\n";
    for (std::size_t t = 0; t < size; ++t)
      out << t << "," << table.acc(static_cast<Mask>(t)).str() << ","
          << table.weight(static_cast<Mask>(t)).to_string() << "\n";
    return 0;
  }
  ordered_json acc = ordered_json::object();
  ordered_json weights = ordered_json::object();
  for (std::size_t t = 0; t < size; ++t) {
    acc[std::to_string(t)] = table.acc(static_cast<Mask>(t)).str();
    weights[std::to_string(t)] = table.weight(static_cast<Mask>(t)).to_string();
  }
  out << ordered_json{{"acc", std::move(acc)}, {"weights", std::move(weights)}}.dump()
      << "\n";
  return 0;
}

int cmd_lrank(const PolyInput& in, int r_max, const std::string& format,
              std::ostream& out) {
  Gf2Poly f = in.resolve();
  int limit = r_max > 0 ? r_max : f.n_vars();
  auto w = linear_rank_witness(f, limit);
  if (format == "csv") {
    out << "lrank,witness\n";
    if (w)
      out << w->rank << "," << csv_escape(witness_text(w->system)) << "\n";
    else
      out << "not_found,\n";
    return 0;
  }
  ordered_json j;
  if (w)
    j = ordered_json{{"lrank", w->rank}, {"witness", witness_json(w->system)}};
  else
    j = ordered_json{{"lrank", nullptr}, {"witness", nullptr}};
  out << j.dump() << "\n";
  return 0;
}

int cmd_construct(const PolyInput& in, const std::string& format,
                  std::ostream& out) {
  Gf2Poly f = in.resolve();
  std::string text = poly_to_string(f);
  if (format == "csv") {
    out << "n,degree,monomial_count,poly\n"
        << f.n_vars() << "," << f.degree() << "," << f.monomials().size() << ","
        << csv_escape(text) << "\n";
  } else {
    out << ordered_json{{"n", f.n_vars()},
                        {"degree", f.degree()},
                        {"monomial_count", f.monomials().size()},
                        {"poly", text}}
               .dump()
        << "\n";
  }
  return 0;
}

struct VerifyOpts {
  std::string suite;
  int n_max = 6;
  int d = -1;
  int n = -1;
  int trials = 50;
  std::uint64_t seed = 0;
  bool timings = false;
};

std::vector<Report> run_suite(const VerifyOpts& o) {
  auto pick = [](int v, int dflt) { return v >= 0 ? v : dflt; };
  if (o.suite == "symlrank") return verify_complete_lrank(o.n_max);
  if (o.suite == "complete")
    return verify_complete_sparsity(pick(o.d, 2), pick(o.n, 6), o.trials, o.seed);
  if (o.suite == "disjoint")
    return verify_disjoint_sparsity(pick(o.d, 2), pick(o.n, 6), o.trials, o.seed);
  if (o.suite == "grid")
    return verify_grid_sparsity(pick(o.d, 3), pick(o.n, 9), o.trials, o.seed);
  if (o.suite == "granularity")
    return verify_granularity_bound(pick(o.d, 2), pick(o.n, 8), o.trials, o.seed);
  if (o.suite == "preliminaries")
    return verify_preliminaries(pick(o.n, 8), o.trials, o.seed);
  if (o.suite == "all") {
    std::vector<Report> all;
    auto take = [&all](std::vector<Report> r) {
      all.insert(all.end(), std::make_move_iterator(r.begin()),
                 std::make_move_iterator(r.end()));
    };
    take(verify_complete_lrank(6));
    take(verify_complete_sparsity(2, 6, o.trials, o.seed));
    take(verify_complete_sparsity(4, 8, o.trials, o.seed));
    take(verify_disjoint_sparsity(2, 6, o.trials, o.seed));
    take(verify_disjoint_sparsity(3, 9, o.trials, o.seed));
    take(verify_grid_sparsity(3, 9, o.trials, o.seed));
    take(verify_grid_sparsity(3, 18, 0, o.seed));
    take(verify_grid_sparsity(5, 25, 0, o.seed));
    take(verify_granularity_bound(2, 8, o.trials, o.seed));
    take(verify_granularity_bound(3, 9, o.trials, o.seed));
    take(verify_granularity_bound(4, 8, o.trials, o.seed));
    take(verify_preliminaries(8, o.trials, o.seed));
    return all;
  }
  throw std::domain_error("unknown suite '" + o.suite +
                          "'; expected symlrank, complete, disjoint, grid, "
                          "granularity, preliminaries, or all");
}

int cmd_verify(const VerifyOpts& o, const std::string& format,
               std::ostream& out) {
  std::vector<Report> reports = run_suite(o);
  if (format == "csv") {
    out << "claim,params,expected,observed,pass\n";
    for (const Report& r : reports) {
      std::string params;
      for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += ";";
        params += k + "=" + std::to_string(v);
      }
      out << csv_escape(r.claim) << "," << csv_escape(params) << ","
          << csv_escape(r.expected) << "," << csv_escape(r.observed) << ","
          << (r.pass ? "true" : "false") << "\n";
    }
  } else {
    out << reports_to_json(reports, o.timings).dump() << "\n";
  }
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Fourier analysis of multilinear polynomials over GF(2)"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string method = "wht";
  int r_max = -1;

  PolyInput spectrum_in, sparsity_in, granularity_in, covers_in, lrank_in,
      construct_in;

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "exact Fourier spectrum of the +/-1 version");
  spectrum_in.attach(spectrum);
  spectrum->add_option("--method", method, "wht or covers")
      ->check(CLI::IsMember({"wht", "covers"}));
  spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sparsity_cmd =
      app.add_subcommand("sparsity", "nonzero Fourier coefficient counts");
  sparsity_in.attach(sparsity_cmd);
  sparsity_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* granularity_cmd = app.add_subcommand(
      "granularity", "largest coefficient granularity of the +/-1 spectrum");
  granularity_in.attach(granularity_cmd);
  granularity_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* covers = app.add_subcommand(
      "covers", "signed cover accumulator table and weight function");
  covers_in.attach(covers);
  covers->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* lrank = app.add_subcommand(
      "lrank", "fewest linear constraints that lower the degree");
  lrank_in.attach(lrank);
  lrank->add_option("--r-max", r_max, "largest rank to try (default n)");
  lrank->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* construct = app.add_subcommand(
      "construct", "materialize a built-in polynomial family");
  construct_in.attach(construct);
  construct->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand("verify", "replay verification suites");
  verify->add_option("--suite", vo.suite,
                     "symlrank, complete, disjoint, grid, granularity, "
                     "preliminaries, or all")
      ->required();
  verify->add_option("--n-max", vo.n_max, "symlrank sweep limit");
  verify->add_option("--d", vo.d, "suite degree parameter");
  verify->add_option("--n", vo.n, "suite variable count");
  verify->add_option("--trials", vo.trials, "random trials per suite");
  verify->add_option("--seed", vo.seed, "base seed for random trials");
  verify->add_flag("--timings", vo.timings, "include runtime_ms in JSON output");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gf2f");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_in, method, format, out);
    if (sparsity_cmd->parsed()) return cmd_sparsity(sparsity_in, format, out);
    if (granularity_cmd->parsed())
      return cmd_granularity(granularity_in, format, out);
    if (covers->parsed()) return cmd_covers(covers_in, format, out);
    if (lrank->parsed()) return cmd_lrank(lrank_in, r_max, format, out);
    if (construct->parsed()) return cmd_construct(construct_in, format, out);
    if (verify->parsed()) return cmd_verify(vo, format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace gf2f
