#include "spinpoly/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "spinpoly/hilb2_expr.hpp"
#include "spinpoly/output.hpp"

namespace spinpoly {

namespace {

// Writes text to path, or to out when path is empty.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << text;
  if (!f) {
    err << "error: write to '" << path << "' failed\n";
    return false;
  }
  return true;
}

std::vector<ClosedFormReport> reports_for(const SurfaceParams& s, std::int64_t n_max) {
  const StrataTable table(s);
  std::vector<ClosedFormReport> out;
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back(closed_form_check(n, table));
  return out;
}

// Flat "key=value" lines; blank lines and lines starting with '#' are skipped.
// Each pair becomes "--key value" (underscores read as dashes); a value with
// spaces supplies several arguments.
std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read config file '" + path + "'");
  std::vector<std::string> args;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(first, eq - first);
    key.erase(key.find_last_not_of(" \t") + 1);
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
    args.push_back("--" + key);
    std::istringstream values(line.substr(eq + 1));
    std::string v;
    while (values >> v) args.push_back(v);
  }
  return args;
}

// Moves "--config PATH" out of args and splices the file's arguments in right
// after the subcommand name, so flags given on the command line come later
// and win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty() || args.size() < 2) return args;
  const auto extra = config_arguments(path);
  args.insert(args.begin() + 2, extra.begin(), extra.end());
  return args;
}

}  // namespace

int cmd_invariants(const InvariantsOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.format != "json" && opt.format != "csv") {
    err << "error: unknown format '" << opt.format << "'\n";
    return kExitUsage;
  }
  if (opt.n_max < 1) {
    err << "error: --n-max must be at least 1\n";
    return kExitUsage;
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> requested;
  if (opt.sweep) {
    if (opt.sweep->first < 1 || opt.sweep->second < 1) {
      err << "error: sweep ranges must be nonempty\n";
      return kExitUsage;
    }
    for (std::int64_t p = 1; p <= opt.sweep->first; ++p)
      for (std::int64_t q = 1; q <= opt.sweep->second; ++q) requested.emplace_back(p, q);
  } else {
    requested.emplace_back(opt.p, opt.q);
  }

  std::vector<SurfaceParams> surfaces;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  nlohmann::json skipped = nlohmann::json::array();
  for (auto [p, q] : requested) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) {
      const std::string why = (p < 1 || q < 1) ? "not positive" : "not coprime";
      err << "notice: skipping (p,q)=(" << p << "," << q << "): " << why << '\n';
      skipped.push_back({{"p", p}, {"q", q}, {"reason", why}});
      continue;
    }
    const SurfaceParams s(p, q);
    if (seen.insert({s.p(), s.q()}).second) surfaces.push_back(s);
  }

  // Parallel over surfaces, merged in request order.
  std::vector<std::vector<ClosedFormReport>> parts(surfaces.size());
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < surfaces.size(); i += workers) parts[i] = reports_for(surfaces[i], opt.n_max);
    }));
  for (auto& j : jobs) j.get();

  std::vector<ClosedFormReport> all;
  bool ok = true;
  for (const auto& part : parts)
    for (const auto& r : part) {
      ok = ok && r.ok();
      all.push_back(r);
    }
  const Table table = invariants_table(all);

  std::string text;
  if (opt.format == "csv") {
    text = to_csv(table);
  } else {
    nlohmann::json meta = {{"p", opt.sweep ? nlohmann::json(nullptr) : nlohmann::json(opt.p)},
                           {"q", opt.sweep ? nlohmann::json(nullptr) : nlohmann::json(opt.q)},
                           {"n_max", opt.n_max},
                           {"seed", nullptr},
                           {"skipped", skipped}};
    if (opt.sweep) meta["sweep"] = {opt.sweep->first, opt.sweep->second};
    const nlohmann::json doc = {{"meta", meta}, {"rows", rows_to_json(table)}, {"ledger", nlohmann::json::array()}};
    text = doc.dump(2) + "\n";
  }
  if (!emit(text, opt.out, out, err)) return kExitUsage;
  if (!ok) err << "error: closed-form mismatch\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  VerifyConfig cfg;
  if (opt.depth == "fast")
    cfg.depth = VerifyDepth::Fast;
  else if (opt.depth == "full")
    cfg.depth = VerifyDepth::Full;
  else {
    err << "error: unknown depth '" << opt.depth << "'\n";
    return kExitUsage;
  }
  if (opt.format != "text" && opt.format != "json") {
    err << "error: unknown format '" << opt.format << "'\n";
    return kExitUsage;
  }
  cfg.seed = opt.seed;
  const VerifyReport rep = run_verify(cfg);
  const std::string text = opt.format == "json" ? verify_to_json(rep).dump(2) + "\n" : verify_to_text(rep);
  if (!emit(text, opt.out, out, err)) return kExitUsage;
  return rep.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_walls(const WallsOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.format != "text" && opt.format != "json" && opt.format != "csv")
      throw std::invalid_argument("unknown format '" + opt.format + "'");
    if (opt.n < 1) throw std::invalid_argument("--n must be at least 1");
    const SurfaceParams s(opt.p, opt.q);
    const auto dc = distinguished_classes(s);
    const LatticeClass c1 = dc.c1(opt.n);
    const PeriodPoint w0(parse_lattice_class(opt.w0)), w1(parse_lattice_class(opt.w1));
    const auto walls = walls_on_segment(w0, w1, c1);
    const Table t = walls_table(walls, c1, dc.K_S);
    if (opt.format == "json") {
      const nlohmann::json meta = {{"p", s.p()}, {"q", s.q()}, {"n", opt.n}, {"c1", c1.to_string()},
                                   {"w0", w0.omega().to_string()}, {"w1", w1.omega().to_string()}};
      out << nlohmann::json({{"meta", meta}, {"rows", rows_to_json(t)}, {"ledger", nlohmann::json::array()}}).dump(2)
          << '\n';
    } else if (opt.format == "csv") {
      out << to_csv(t);
    } else {
      for (const auto& row : t.rows) {
        out << "zeta=" << std::get<std::string>(row[0]) << " zeta^2=" << std::get<std::int64_t>(row[1]);
        if (const auto* m = std::get_if<std::string>(&row[2]))
          out << " M=" << *m << " effective=" << (std::get<bool>(row[3]) ? "true" : "false");
        out << '\n';
      }
    }
    return kExitOk;
  } catch (const EndpointOnWall& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_hilb2(const Hilb2Options& opt, std::ostream& out, std::ostream& err) {
  try {
    Hilb2Context ctx{SurfaceParams(opt.p, opt.q)};
    for (const auto& d : opt.definitions) {
      try {
        ctx.define(d);
      } catch (const Hilb2ParseError& e) {
        err << "error in definition '" << d << "': " << e.what() << '\n'
            << "  " << d << '\n'
            << "  " << std::string(e.position(), ' ') << "^\n";
        return kExitUsage;
      }
    }
    out << to_string(ctx.evaluate(opt.expression)) << '\n';
    return kExitOk;
  } catch (const Hilb2ParseError& e) {
    err << "error: " << e.what() << '\n'
        << "  " << opt.expression << '\n'
        << "  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  static constexpr const char* kConfigHelp = "flat key=value file mirroring the flags; flags override it";
  CLI::App app{"Spin polynomial invariants of Dolgachev surfaces: exact coefficients, checks and walls"};
  app.require_subcommand(1);

  InvariantsOptions inv;
  std::vector<std::int64_t> sweep;
  auto* c_inv = app.add_subcommand("invariants", "a(n), b(n) from the strata against their closed forms");
  std::string config_path;  // consumed by expand_config before parsing
  c_inv->add_option("--config", config_path, kConfigHelp);
  c_inv->add_option("--p", inv.p, "first multiplicity")->capture_default_str();
  c_inv->add_option("--q", inv.q, "second multiplicity")->capture_default_str();
  c_inv->add_option("--n-max", inv.n_max, "largest n")->capture_default_str();
  c_inv->add_option("--sweep", sweep, "sweep 1..PMAX x 1..QMAX")->expected(2);
  c_inv->add_option("--format", inv.format, "json or csv")->capture_default_str();
  c_inv->add_option("--out", inv.out, "output path (default: stdout)");

  VerifyOptions ver;
  auto* c_ver = app.add_subcommand("verify", "run every identity check and print the errata ledger");
  c_ver->add_option("--config", config_path, kConfigHelp);
  c_ver->add_option("--depth", ver.depth, "fast (p,q <= 15, n <= 200) or full (p,q <= 25, n <= 1000)")
      ->capture_default_str();
  c_ver->add_option("--seed", ver.seed, "seed for sampled checks")->capture_default_str();
  c_ver->add_option("--format", ver.format, "text or json")->capture_default_str();
  c_ver->add_option("--out", ver.out, "output path (default: stdout)");

  WallsOptions wal;
  auto* c_wal = app.add_subcommand("walls", "walls crossed by a segment of periods for c1 = K_S + 2nk");
  c_wal->add_option("--config", config_path, kConfigHelp);
  c_wal->add_option("--n", wal.n, "n in c1 = K_S + 2nk")->capture_default_str();
  c_wal->add_option("--w0", wal.w0, "start period \"c0,...,c9\"")->required();
  c_wal->add_option("--w1", wal.w1, "end period \"c0,...,c9\"")->required();
  c_wal->add_option("--p", wal.p, "first multiplicity")->capture_default_str();
  c_wal->add_option("--q", wal.q, "second multiplicity")->capture_default_str();
  c_wal->add_option("--format", wal.format, "text, json or csv")->capture_default_str();

  Hilb2Options hil;
  auto* c_hil = app.add_subcommand("hilb2", "evaluate a four-fold product of divisors on Hilb^2(S)");
  c_hil->add_option("--config", config_path, kConfigHelp);
  c_hil->add_option("expression", hil.expression, "e.g. \"A.B.T.T\"")->required();
  c_hil->add_option("--let", hil.definitions, "NAME=divisor, repeatable; later definitions win")
      ->expected(1)
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  c_hil->add_option("--p", hil.p, "first multiplicity")->capture_default_str();
  c_hil->add_option("--q", hil.q, "second multiplicity")->capture_default_str();

  for (auto* sub : {c_inv, c_ver, c_wal, c_hil})
    for (auto* o : sub->get_options())
      if (o->get_expected_max() <= 2 && o->get_name() != "--let") o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config(std::move(args));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);  // --help, scoped to the selected subcommand
      return kExitOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }
  if (c_inv->parsed()) {
    if (!sweep.empty()) inv.sweep = std::pair{sweep[0], sweep[1]};
    return cmd_invariants(inv, out, err);
  }
  if (c_ver->parsed()) return cmd_verify(ver, out, err);
  if (c_wal->parsed()) return cmd_walls(wal, out, err);
  return cmd_hilb2(hil, out, err);
}

}  // namespace spinpoly
