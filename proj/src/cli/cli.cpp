#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "besselxi/besselhyp.hpp"
#include "besselxi/cli.hpp"
#include "besselxi/complexfn.hpp"
#include "besselxi/series.hpp"

namespace besselxi::cli {

namespace {

constexpr const char* kGrammar = R"(usage:
  besselxi eval <fn> --<param> <value> ...
      Xi --y | xi --s | zeta --s | gamma --z | j0 --x | j1 --x | i0 --x
      1f1 --a --w [--b 1] | psi --y [--convention pi|plain]
      h1 --y --r --t [--imag-r 0|1] | u --r --t [--kappa 1]
      muntz --y --r --t [--imag-r 0|1]
      complex arguments are written like 0.5+14.13i
  besselxi verify <check_id|all> [--mode exact|calibrate] [--tol T] [--grid SPEC]
      [--format human|json|csv] [--out PATH] [--timing] [--jobs N]
      [--real-r | --no-real-r] [--<param> v1,v2,...]
      SPEC is "name=v1,v2;name2=v3"; --<param> replaces one grid axis.
      Defaults: format human, mode and tol per check, jobs 0 (one per core),
      real-r mode of thm_1_2 included for "all" only.
  besselxi scan xi-zeros --y-max Y [--step 0.05]
  besselxi heat --r R --t T [--kappa 1] [--residual]
  --config PATH reads "key = value" lines as flags for the verb; command
  line flags win.
exit codes: 0 pass, 1 check failed, 2 usage or domain error, 3 numerical
non-convergence or output failure.
)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config line without key: " + line);
    if (value == "false") continue;
    tokens.push_back("--" + key);
    if (value != "true") tokens.push_back(value);
  }
  return tokens;
}

// Pulls --config out and splices the file's flags in right after the verb.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a path");
      from_file = read_config(args[++i]);
    } else if (args[i].rfind("--config=", 0) == 0) {
      from_file = read_config(args[i].substr(9));
    } else {
      rest.push_back(args[i]);
    }
  }
  if (from_file.empty() || rest.empty()) return rest;
  std::vector<std::string> out{rest[0]};
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("bad number for " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError("bad number for " + what + ": '" + s + "'");
  return v;
}

// "a", "bi", "a+bi", "a-bi", "i".
Complex parse_complex(const std::string& s, const std::string& what) {
  if (s.empty()) throw UsageError("empty value for " + what);
  if (s.back() != 'i') return {parse_double(s, what), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t, what);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, split), what), imag_part(body.substr(split))};
}

std::string format_value(Complex v, bool complex_result) {
  char buf[96];
  if (complex_result && v.imag() != 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", v.real());
  }
  return buf;
}

// --name value pairs plus bare tokens, in order.
struct LooseArgs {
  std::vector<std::string> bare;
  std::map<std::string, std::string> named;
};

LooseArgs split_loose(const std::vector<std::string>& args) {
  LooseArgs la;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.size() > 2) {
      const auto eq = a.find('=');
      if (eq != std::string::npos) {
        la.named[a.substr(2, eq - 2)] = a.substr(eq + 1);
      } else {
        if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
        la.named[a.substr(2)] = args[++i];
      }
    } else {
      la.bare.push_back(a);
    }
  }
  return la;
}

class EvalParams {
 public:
  explicit EvalParams(std::map<std::string, std::string> named) : named_(std::move(named)) {}

  double real(const std::string& name) { return parse_double(take(name), "--" + name); }
  double real_or(const std::string& name, double fallback) {
    return named_.count(name) ? real(name) : fallback;
  }
  Complex complex(const std::string& name) { return parse_complex(take(name), "--" + name); }
  std::string text_or(const std::string& name, const std::string& fallback) {
    return named_.count(name) ? take(name) : fallback;
  }
  void finish() const {
    if (!named_.empty()) throw UsageError("unknown parameter --" + named_.begin()->first);
  }

 private:
  std::string take(const std::string& name) {
    auto it = named_.find(name);
    if (it == named_.end()) throw UsageError("missing --" + name);
    std::string v = it->second;
    named_.erase(it);
    return v;
  }
  std::map<std::string, std::string> named_;
};

BesselScale scale_from(double r, double imag_flag) {
  return imag_flag != 0.0 ? BesselScale::imaginary(r) : BesselScale::real(r);
}

int run_eval(const std::vector<std::string>& args, std::ostream& out) {
  LooseArgs la = split_loose(args);
  if (la.bare.size() != 1) throw UsageError("eval needs exactly one function name");
  const std::string fn = la.bare[0];
  EvalParams p(std::move(la.named));
  Complex value;
  bool complex_result = false;
  if (fn == "Xi") {
    value = Xi(p.real("y"));
  } else if (fn == "xi") {
    value = xi_completed(p.complex("s"));
    complex_result = true;
  } else if (fn == "zeta") {
    value = zeta(p.complex("s"));
    complex_result = true;
  } else if (fn == "gamma") {
    value = complex_gamma(p.complex("z"));
    complex_result = true;
  } else if (fn == "j0" || fn == "j1") {
    value = bessel_j(fn == "j0" ? BesselOrder::zero : BesselOrder::one, p.real("x"));
  } else if (fn == "i0") {
    value = bessel_i0(p.real("x"));
  } else if (fn == "1f1") {
    const Complex a = p.complex("a");
    const Complex w = p.complex("w");
    const double b = p.real_or("b", 1.0);
    value = b == 1.0 ? kummer_1f1({a, w}) : kummer_1f1_general(a, b, w);
    complex_result = true;
  } else if (fn == "psi") {
    const double y = p.real("y");
    const std::string conv = p.text_or("convention", "pi");
    if (conv != "pi" && conv != "plain") throw UsageError("--convention must be pi or plain");
    value = theta_psi(y, conv == "pi" ? ThetaConvention::pi : ThetaConvention::plain).value;
  } else if (fn == "h1") {
    const double y = p.real("y");
    PhysParams pp;
    const double r = p.real("r");
    pp.t = p.real("t");
    pp.r = scale_from(r, p.real_or("imag-r", 0.0));
    value = h1(y, pp).value;
  } else if (fn == "u") {
    const double r = p.real("r");
    const double t = p.real("t");
    value = heat_u(r, t, p.real_or("kappa", 1.0)).value;
  } else if (fn == "muntz") {
    const double y = p.real("y");
    const double r = p.real("r");
    const double t = p.real("t");
    const MuntzTransform m = muntz_g1(scale_from(r, p.real_or("imag-r", 0.0)), t);
    value = m(y);
  } else {
    throw UsageError("unknown function '" + fn + "'");
  }
  p.finish();
  out << format_value(value, complex_result) << "\n";
  if (!out.flush()) throw SinkError("failed writing value");
  return 0;
}

// Writes through a temporary next to the target, then renames.
template <class Writer>
void write_atomically(const std::string& path, Writer&& write) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw SinkError("cannot open " + tmp.string());
    write(f);
    f.close();
    if (!f) throw SinkError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw SinkError("cannot rename onto " + path);
  }
}

std::vector<double> parse_value_list(const std::string& s, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_double(trim(item), what));
  if (v.empty()) throw UsageError("empty value list for " + what);
  return v;
}

// Later occurrences win so command-line flags override config values.
void take_last(CLI::App& app) { app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast); }

// Runs CLI11 on tokens; returns a help exit code when help was requested.
std::optional<int> parse_options(CLI::App& app, const std::vector<std::string>& tokens, std::ostream& out) {
  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n" << kGrammar;
    return 0;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return std::nullopt;
}

int run_verify(const std::vector<std::string>& args, std::ostream& out) {
  static const std::set<std::string> with_value = {"mode", "tol", "grid", "format", "out", "jobs"};
  static const std::set<std::string> flags = {"timing", "real-r", "no-real-r", "help"};
  std::vector<std::string> known;
  std::vector<std::string> bare;
  verify::GridOverrides axis_overrides;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-h") {
      known.push_back(a);
      continue;
    }
    if (a.rfind("--", 0) != 0 || a.size() <= 2) {
      bare.push_back(a);
      continue;
    }
    const auto eq = a.find('=');
    const std::string name = a.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
    if (with_value.count(name) || flags.count(name)) {
      known.push_back(a);
      if (with_value.count(name) && eq == std::string::npos) {
        if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
        known.push_back(args[++i]);
      }
      continue;
    }
    std::string value;
    if (eq != std::string::npos) {
      value = a.substr(eq + 1);
    } else {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      value = args[++i];
    }
    auto list = parse_value_list(value, a);
    auto it = std::find_if(axis_overrides.begin(), axis_overrides.end(),
                           [&](const auto& o) { return o.first == name; });
    if (it != axis_overrides.end()) {
      it->second = std::move(list);
    } else {
      axis_overrides.emplace_back(name, std::move(list));
    }
  }

  CLI::App app("Run one identity check or the whole suite", "besselxi verify");
  take_last(app);
  std::string mode_s, grid_s, format_s = "human", out_path;
  std::optional<double> tol;
  int jobs = 0;
  bool timing = false, real_r = false, no_real_r = false;
  app.add_option("--mode", mode_s, "exact or calibrate (default: per check)");
  app.add_option("--tol", tol, "tolerance (default: per check)");
  app.add_option("--grid", grid_s, "grid override, \"name=v1,v2;name2=v3\"");
  app.add_option("--format", format_s, "human, json or csv")->capture_default_str();
  app.add_option("--out", out_path, "write the report to PATH (atomic rename)");
  app.add_option("--jobs", jobs, "worker threads, 0 = one per core")->capture_default_str();
  app.add_flag("--timing", timing, "record wall_ms (otherwise 0)");
  app.add_flag("--real-r", real_r, "add the real-r report of thm_1_2");
  app.add_flag("--no-real-r", no_real_r, "omit the real-r report of thm_1_2");
  if (auto help = parse_options(app, known, out)) return *help;

  if (bare.size() != 1) throw UsageError("verify needs exactly one check id or 'all'");
  verify::SuiteConfig config;
  const bool all = bare[0] == "all";
  if (!all) {
    const auto id = verify::parse_check_id(bare[0]);
    if (!id) throw UsageError("unknown check '" + bare[0] + "'");
    config.checks = {*id};
  }
  if (!mode_s.empty()) {
    config.mode = verify::parse_mode(mode_s);
    if (!config.mode) throw UsageError("--mode must be exact or calibrate");
  }
  const auto fmt = parse_format(format_s);
  if (!fmt) throw UsageError("--format must be human, json or csv");
  if (tol && !(*tol > 0.0)) throw UsageError("--tol must be positive");
  if (jobs < 0) throw UsageError("--jobs must be >= 0");
  config.tol = tol;
  config.jobs = jobs;
  config.record_timing = timing;
  config.include_thm12_real_r = no_real_r ? false : (real_r || all);
  if (!grid_s.empty()) {
    try {
      config.grid = verify::parse_grid_spec(grid_s);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  for (auto& o : axis_overrides) config.grid.push_back(std::move(o));

  const verify::SuiteReport suite = verify::run_suite(config);
  auto write = [&](std::ostream& sink) {
    if (!all && suite.reports.size() == 1) {
      emit_report(suite.reports.front(), *fmt, sink);
      if (*fmt == OutputFormat::human) {
        for (const auto& f : suite.failures) sink << "error: " << f.message << "\n";
        emit_errata(suite.errata, sink);
        sink.flush();
        if (!sink) throw SinkError("failed writing report");
      }
    } else {
      emit_suite(suite, *fmt, sink);
    }
  };
  if (out_path.empty()) {
    write(out);
  } else {
    write_atomically(out_path, write);
  }
  return all ? suite_exit_code(suite) : single_exit_code(suite);
}

int run_scan(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app("Bracket sign changes of Xi on (0, y_max]", "besselxi scan");
  take_last(app);
  std::string target;
  double y_max = 0.0;
  double step = 0.05;
  app.add_option("target", target, "xi-zeros")->required();
  app.add_option("--y-max", y_max, "upper end of the scan")->required();
  app.add_option("--step", step, "scan step")->capture_default_str();
  if (auto help = parse_options(app, args, out)) return *help;
  if (target != "xi-zeros") throw UsageError("scan target must be xi-zeros");
  if (!(y_max > 0.0) || !(step > 0.0)) throw UsageError("--y-max and --step must be positive");
  const auto brackets = scan_xi_zeros(y_max, step);
  out << "index,y_lower,y_upper,y_mid\n";
  char buf[128];
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i + 1, brackets[i].lower, brackets[i].upper,
                  brackets[i].mid());
    out << buf;
  }
  if (!out.flush()) throw SinkError("failed writing scan");
  return 0;
}

int run_heat(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app("Evaluate the radial heat solution u(r, t)", "besselxi heat");
  take_last(app);
  double r = 0.0, t = 0.0, kappa = 1.0;
  bool residual = false;
  app.add_option("--r", r, "radius")->required();
  app.add_option("--t", t, "time")->required();
  app.add_option("--kappa", kappa, "diffusivity")->capture_default_str();
  app.add_flag("--residual", residual, "also print |kappa Laplacian(u) - u_t| by finite differences");
  if (auto help = parse_options(app, args, out)) return *help;
  char buf[96];
  std::snprintf(buf, sizeof buf, "u %.17g\n", heat_u(r, t, kappa).value);
  out << buf;
  if (residual) {
    verify::CheckRequest req;
    req.id = verify::CheckId::heat_pde;
    req.grid = {{"r", {r}}, {"t", {t}}, {"kappa", {kappa}}};
    const verify::CheckOutcome o = verify::run_check(req);
    std::snprintf(buf, sizeof buf, "residual %.17g\n", o.report.abs_diff);
    out << buf;
  }
  if (!out.flush()) throw SinkError("failed writing heat value");
  return 0;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> argv = expand_config(args);
    if (argv.empty()) throw UsageError("missing verb");
    const std::string& verb = argv[0];
    const std::vector<std::string> rest(argv.begin() + 1, argv.end());
    if (verb == "-h" || verb == "--help" || verb == "help") {
      out << kGrammar;
      return 0;
    }
    if (verb == "eval") return run_eval(rest, out);
    if (verb == "verify") return run_verify(rest, out);
    if (verb == "scan") return run_scan(rest, out);
    if (verb == "heat") return run_heat(rest, out);
    throw UsageError("unknown verb '" + verb + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kGrammar;
    return 2;
  } catch (const SinkError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace besselxi::cli
