#include "cmo/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmo/analytic.hpp"
#include "cmo/criteria.hpp"
#include "cmo/errors.hpp"
#include "cmo/format.hpp"
#include "cmo/inversion.hpp"
#include "cmo/prime_table.hpp"
#include "cmo/sequence.hpp"
#include "cmo/sequence_cache.hpp"
#include "cmo/window.hpp"
#include "cmo/zerofinder.hpp"

namespace cmo::cli {
namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != end) throw InvalidSpec("not a number: '" + s + "'");
  return v;
}

std::uint64_t to_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != end) throw InvalidSpec("not an integer: '" + s + "'");
  return v;
}

// "re" or "re,im"
cplx to_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {to_double(parts[0]), 0.0};
  if (parts.size() == 2) return {to_double(parts[0]), to_double(parts[1])};
  throw InvalidSpec("not a complex number: '" + s + "'");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// "p:re,im; p:re,im"
json map_json(const std::string& s) {
  json arr = json::array();
  for (const auto& item : split(s, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidSpec("table entry needs key:value, got '" + item + "'");
    arr.push_back(json::array({to_u64(trim(item.substr(0, colon))), complex_json(to_complex(trim(item.substr(colon + 1))))}));
  }
  return arr;
}

PrimeValueSpec zero_spec(std::uint64_t q, std::uint64_t index, const std::string& which) {
  const std::uint64_t k = which == "first" ? 1 : to_u64(which);
  if (k == 0) throw InvalidSpec("zero rank starts at 1");
  const auto chi = make_character(q, index);
  std::uint64_t found = 0;
  for (double lo = 0.0; lo < kZeroSearchMaxAbsT; lo += 10.0) {
    const auto res = locate_zeros(chi, lo, std::min(lo + 10.0, kZeroSearchMaxAbsT));
    for (const auto& z : res.zeros)
      if (++found == k) return cmo_from_zero(chi, z.rho);
  }
  throw NumericError("fewer than " + std::to_string(k) + " zeros found with 0 <= t <= 50");
}

std::vector<std::uint64_t> resolve_checkpoints(const std::string& text, std::uint64_t limit, unsigned first = 2) {
  std::vector<std::uint64_t> out;
  if (text == "decades") {
    out = decade_checkpoints(limit, first);
    if (out.empty() || out.back() != limit) out.push_back(limit);
    return out;
  }
  try {
    for (const auto& part : split(text, ',')) out.push_back(to_u64(part));
  } catch (const InvalidSpec& e) {
    throw UsageError(std::string("--checkpoints: ") + e.what());
  }
  return out;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {
    std::string dir = cfg.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("CMO_CACHE_DIR")) dir = env;
    if (!dir.empty()) cache_.emplace(dir);
  }

  std::string execute() {
    const auto& c = cfg_.command;
    if (c == "sieve") return sieve();
    if (c == "sum") return sum();
    if (c == "criterion") return criterion();
    if (c == "zeros") return zeros();
    if (c == "verify-inversion") return inversion();
    if (c == "window-sum") return window();
    if (c == "abel-scan") return abel();
    if (c == "euler-product") return euler();
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  const PrimeTable& table(std::uint64_t limit) {
    limit = std::max<std::uint64_t>(limit, 2);
    if (!table_ || table_->limit() < limit) table_.emplace(limit);
    return *table_;
  }

  Sequence sequence(const PrimeValueSpec& spec, std::uint64_t n) {
    if (cache_)
      if (auto s = cache_->load(spec, n)) return std::move(*s);
    Sequence s = build_sequence(spec, n, table(n));
    if (cache_) cache_->store(s);
    return s;
  }

  bool want_json(bool default_json) const {
    if (cfg_.format.empty()) return default_json;
    if (cfg_.format == "json") return true;
    if (cfg_.format == "csv") return false;
    throw UsageError("--format must be csv or json");
  }

  std::string sieve() {
    const auto& t = table(cfg_.n);
    const auto xs = resolve_checkpoints(cfg_.checkpoints, cfg_.n, 1);
    if (want_json(false)) {
      json counts = json::array();
      for (auto x : xs) counts.push_back({{"x", x}, {"pi", t.prime_count(x)}});
      return json{{"limit", t.limit()}, {"memory_bytes", t.memory_bytes()}, {"counts", counts}}.dump(2) + "\n";
    }
    std::string out = "x,pi\n";
    for (auto x : xs) out += std::to_string(x) + "," + std::to_string(t.prime_count(x)) + "\n";
    return out;
  }

  Weight weight() const {
    if (cfg_.weight == "1") return Weight::one;
    if (cfg_.weight == "1/n") return Weight::inverse_n;
    throw UsageError("--weight must be 1 or 1/n");
  }

  std::string sum() {
    const auto spec = parse_spec(cfg_.spec);
    const Weight w = weight();
    const auto seq = sequence(spec, cfg_.n);
    const auto xs = resolve_checkpoints(cfg_.checkpoints, cfg_.n);
    const auto rep = partial_sums(seq, w, xs);
    if (want_json(false)) {
      json sums = json::array();
      for (const auto& z : rep.sums) sums.push_back(complex_json(z));
      return json{{"spec", to_json(spec)}, {"weight", cfg_.weight}, {"x", rep.checkpoints}, {"sums", sums}}.dump(2) +
             "\n";
    }
    std::string out = "x,re,im\n";
    for (std::size_t i = 0; i < rep.sums.size(); ++i)
      out += std::to_string(rep.checkpoints[i]) + "," + format_double(rep.sums[i].real()) + "," +
             format_double(rep.sums[i].imag()) + "\n";
    return out;
  }

  std::string criterion() {
    const auto spec = parse_spec(cfg_.spec);
    const auto& w = cfg_.which;
    CriterionReport rep;
    if (w == "thm2") {
      const auto seq = sequence(spec, cfg_.n);
      rep = thm2_diagnostics(seq, table(cfg_.n));
    } else if (w == "thm6" || w == "thm7" || w == "thm8" || w == "thm9") {
      const auto xs = resolve_checkpoints(cfg_.checkpoints, cfg_.pmax);
      const auto& t = table(cfg_.pmax);
      if (w == "thm6") rep = thm6_sum(spec, cfg_.pmax, xs, t);
      if (w == "thm7") rep = thm7_criterion(spec, TauGrid::with_defaults(cfg_.taus), cfg_.pmax, xs, t);
      if (w == "thm8") rep = thm8_criterion(spec, cfg_.pmax, xs, t);
      if (w == "thm9") rep = thm9_density(spec, xs, t, cfg_.margin);
    } else if (w == "thm9p") {
      const auto Ps = resolve_checkpoints(cfg_.checkpoints, cfg_.pmax, 3);
      rep = thm9p_scan(spec, Ps, cfg_.quad_tol, table(cfg_.pmax));
    } else {
      throw UsageError("--which must be one of thm2, thm6, thm7, thm8, thm9, thm9p");
    }
    for (const auto& msg : rep.warnings) err_ << "warning: " << msg << "\n";
    return want_json(true) ? rep.to_json().dump(2) + "\n" : rep.to_csv();
  }

  std::string zeros() {
    const auto chi = make_character(cfg_.q, cfg_.index);
    const auto res = locate_zeros(chi, cfg_.t_min, cfg_.t_max, cfg_.zero_tol);
    for (const auto& f : res.failures)
      err_ << "warning: " << f.reason << " in [" << f.rect.sigma_min << ", " << f.rect.sigma_max << "] x ["
           << f.rect.t_min << ", " << f.rect.t_max << "]\n";
    return zeros_to_json(res.zeros).dump(2) + "\n";
  }

  std::string inversion() {
    const auto spec = parse_spec(cfg_.spec);
    const auto f = sequence(spec, cfg_.n);
    const auto g = dirichlet_convolve(f, constant_one(cfg_.n), cfg_.n);
    const auto xs = resolve_checkpoints(cfg_.checkpoints, cfg_.n, 0);
    const auto model = InversionModel::zero(cfg_.tau);
    ResidualReport rep;
    if (cfg_.which.empty() || cfg_.which == "thm10")
      rep = verify_thm10(f, g, model, xs);
    else if (cfg_.which == "thm11")
      rep = verify_thm11(f, g, model, xs);
    else
      throw UsageError("--which must be thm10 or thm11");
    return want_json(false) ? rep.to_json().dump(2) + "\n" : rep.to_csv();
  }

  BoundaryModel boundary_model() const {
    if (cfg_.model == "liouville") return BoundaryModel::liouville;
    if (cfg_.model == "mobius") return BoundaryModel::mobius;
    throw UsageError("--model must be liouville or mobius");
  }

  std::string window() {
    const BoundaryModel m = boundary_model();
    const WindowParams p{cfg_.x, cfg_.a};
    validate(p);
    const double T = cfg_.T ? *cfg_.T : window_required_T(m, p, cfg_.window_tol);
    const auto r = window_sum(m, p, T, cfg_.window_tol);
    return json{{"model", cfg_.model},
                {"x", p.x},
                {"a", p.a},
                {"T", r.T},
                {"tol", cfg_.window_tol},
                {"value", r.value},
                {"imag_residue", r.imag_residue},
                {"tail_bound", r.tail_bound},
                {"evaluations", r.evaluations},
                {"refinements", r.refinements}}
                   .dump(2) +
           "\n";
  }

  std::string abel() {
    const auto spec = parse_spec(cfg_.spec);
    const auto seq = sequence(spec, cfg_.n);
    const auto pts = abel_limit_scan(seq, cfg_.sigmas, cfg_.n);
    if (want_json(false)) {
      json arr = json::array();
      for (const auto& p : pts)
        arr.push_back({{"sigma", p.sigma},
                       {"series", complex_json(p.series)},
                       {"closed_form", p.closed_form ? complex_json(*p.closed_form) : json(nullptr)}});
      return arr.dump(2) + "\n";
    }
    std::string out = "sigma,re,im,closed_re,closed_im\n";
    for (const auto& p : pts) {
      out += format_double(p.sigma) + "," + format_double(p.series.real()) + "," + format_double(p.series.imag()) + ",";
      if (p.closed_form) out += format_double(p.closed_form->real()) + "," + format_double(p.closed_form->imag());
      else out += ",";
      out += "\n";
    }
    return out;
  }

  std::string euler() {
    const auto spec = parse_spec(cfg_.spec);
    cplx s;
    try {
      s = to_complex(cfg_.s);
    } catch (const InvalidSpec& e) {
      throw UsageError(std::string("--s: ") + e.what());
    }
    std::vector<std::string> warnings;
    const auto v = euler_product(spec, s, cfg_.pmax, table(cfg_.pmax), &warnings);
    for (const auto& msg : warnings) err_ << "warning: " << msg << "\n";
    return json{{"spec", to_json(spec)}, {"s", complex_json(s)}, {"P", cfg_.pmax}, {"value", complex_json(v)},
                {"warnings", warnings}}
               .dump(2) +
           "\n";
  }

  const RunConfig& cfg_;
  std::ostream& err_;
  std::optional<SequenceCache> cache_;
  std::optional<PrimeTable> table_;
};

struct Parser {
  RunConfig cfg;
  double T = 0.0;
  bool print_config = false;
  CLI::App app{"Laboratory for completely multiplicative functions with zero sum", "cmo"};

  Parser() {
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    auto spec_opt = [&](CLI::App* sub) {
      sub->add_option("--spec", cfg.spec, "Spec shorthand or spec file")->capture_default_str();
    };
    auto common = [&](CLI::App* sub) {
      sub->add_option("--out", cfg.out, "Output file (default stdout)");
      sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
      sub->add_option("--cache-dir", cfg.cache_dir, "Sequence cache directory (default $CMO_CACHE_DIR)");
      sub->add_flag("--print-config", print_config, "Print the canonical run configuration and exit");
    };

    auto* sieve = app.add_subcommand("sieve", "Prime counts from the linear sieve");
    sieve->add_option("--n", cfg.n, "Sieve limit")->capture_default_str();
    sieve->add_option("--checkpoints", cfg.checkpoints, "decades or a comma list")->capture_default_str();
    common(sieve);

    auto* sum = app.add_subcommand("sum", "Checkpointed partial sums of a sequence");
    spec_opt(sum);
    sum->add_option("--weight", cfg.weight, "1 or 1/n")->capture_default_str();
    sum->add_option("--n", cfg.n, "Sequence length")->capture_default_str();
    sum->add_option("--checkpoints", cfg.checkpoints, "decades or a comma list")->capture_default_str();
    common(sum);

    auto* crit = app.add_subcommand("criterion", "Evaluate one criterion");
    crit->add_option("--which", cfg.which, "thm2, thm6, thm7, thm8, thm9, thm9p")->required();
    spec_opt(crit);
    crit->add_option("--n", cfg.n, "Sequence length for thm2")->capture_default_str();
    crit->add_option("--pmax", cfg.pmax, "Prime bound")->capture_default_str();
    crit->add_option("--checkpoints", cfg.checkpoints, "decades or a comma list")->capture_default_str();
    crit->add_option("--taus", cfg.taus, "Extra tau values for thm7")->delimiter(',');
    crit->add_option("--margin", cfg.margin, "thm9 margin")->capture_default_str();
    crit->add_option("--quad-tol", cfg.quad_tol, "thm9p quadrature tolerance")->capture_default_str();
    common(crit);

    auto* zeros = app.add_subcommand("zeros", "Zeros of L(s, chi) in the critical strip");
    zeros->add_option("--q", cfg.q, "Modulus")->capture_default_str();
    zeros->add_option("--index", cfg.index, "Character index")->capture_default_str();
    zeros->add_option("--tmin", cfg.t_min, "Lower height")->capture_default_str();
    zeros->add_option("--tmax", cfg.t_max, "Upper height")->capture_default_str();
    zeros->add_option("--tol", cfg.zero_tol, "Rectangle size tolerance")->capture_default_str();
    common(zeros);

    auto* inv = app.add_subcommand("verify-inversion", "Residuals of the inversion asymptotics, g = f * 1");
    inv->add_option("--which", cfg.which, "thm10 or thm11");
    spec_opt(inv);
    inv->add_option("--n", cfg.n, "Sequence length")->capture_default_str();
    inv->add_option("--tau", cfg.tau, "Twist tau")->capture_default_str();
    inv->add_option("--checkpoints", cfg.checkpoints, "decades or a comma list")->capture_default_str();
    common(inv);

    auto* win = app.add_subcommand("window-sum", "Windowed sum via the boundary integral");
    win->add_option("--model", cfg.model, "liouville or mobius")->capture_default_str();
    win->add_option("--x", cfg.x, "Window half-width x")->capture_default_str();
    win->add_option("--a", cfg.a, "Window smoothing a")->capture_default_str();
    win->add_option("--T", T, "Integration cutoff (default: smallest T meeting tol)");
    win->add_option("--tol", cfg.window_tol, "Tolerance")->capture_default_str();
    common(win);

    auto* abel = app.add_subcommand("abel-scan", "F(sigma) for sigma > 1 by truncated series");
    spec_opt(abel);
    abel->add_option("--sigmas", cfg.sigmas, "Comma list of sigma > 1")->delimiter(',');
    abel->add_option("--n", cfg.n, "Series length")->capture_default_str();
    common(abel);

    auto* euler = app.add_subcommand("euler-product", "Truncated Euler product");
    spec_opt(euler);
    euler->add_option("--s", cfg.s, "re or re,im")->capture_default_str();
    euler->add_option("--pmax", cfg.pmax, "Prime bound")->capture_default_str();
    common(euler);
  }

  void parse(std::span<const std::string> args) {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (app.get_subcommand("window-sum")->count("--T")) cfg.T = T;
  }
};

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json RunConfig::to_json() const {
  return {{"command", command},   {"spec", spec},         {"weight", weight},     {"n", n},
          {"pmax", pmax},         {"checkpoints", checkpoints}, {"which", which}, {"taus", taus},
          {"tau", tau},           {"margin", margin},     {"quad_tol", quad_tol}, {"sigmas", sigmas},
          {"s", s},               {"q", q},               {"index", index},       {"t_min", t_min},
          {"t_max", t_max},       {"zero_tol", zero_tol}, {"model", model},       {"x", x},
          {"a", a},               {"T", opt_json(T)},     {"window_tol", window_tol}, {"format", format},
          {"out", out},           {"cache_dir", cache_dir}};
}

RunConfig RunConfig::from_json(const json& j) {
  RunConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  try {
    get("command", c.command);
    get("spec", c.spec);
    get("weight", c.weight);
    get("n", c.n);
    get("pmax", c.pmax);
    get("checkpoints", c.checkpoints);
    get("which", c.which);
    get("taus", c.taus);
    get("tau", c.tau);
    get("margin", c.margin);
    get("quad_tol", c.quad_tol);
    get("sigmas", c.sigmas);
    get("s", c.s);
    get("q", c.q);
    get("index", c.index);
    get("t_min", c.t_min);
    get("t_max", c.t_max);
    get("zero_tol", c.zero_tol);
    get("model", c.model);
    get("x", c.x);
    get("a", c.a);
    if (j.contains("T") && !j.at("T").is_null()) c.T = j.at("T").get<double>();
    get("window_tol", c.window_tol);
    get("format", c.format);
    get("out", c.out);
    get("cache_dir", c.cache_dir);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed run config: ") + e.what());
  }
  return c;
}

PrimeValueSpec parse_spec(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) throw InvalidSpec("empty spec");

  if (std::filesystem::exists(text) && std::filesystem::is_regular_file(text)) {
    std::ifstream in(text, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    if (std::filesystem::path(text).extension() == ".json") {
      try {
        return spec_from_json(json::parse(buf.str()));
      } catch (const json::parse_error& e) {
        throw InvalidSpec(std::string("spec file is not valid JSON: ") + e.what());
      }
    }
    return parse_spec_kv(buf.str());
  }

  bool over_n = false;
  if (text.size() > 2 && text.ends_with("/n")) {
    over_n = true;
    text.resize(text.size() - 2);
  }
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  PrimeValueSpec s;
  if (parts.size() == 1 && head == "liouville") {
    s = PrimeValueSpec::liouville();
  } else if (parts.size() == 1 && head == "mobius") {
    s = PrimeValueSpec::mobius();
  } else if (parts.size() == 1 && head == "unit") {
    s = PrimeValueSpec::unit();
  } else if (head == "const" && parts.size() == 2) {
    s = PrimeValueSpec::constant(to_complex(parts[1]));
  } else if (head == "char" && parts.size() == 3) {
    s = PrimeValueSpec::character(to_u64(parts[1]), to_u64(parts[2]));
    PrimeValues check(s);
  } else if (head == "zero" && parts.size() == 4) {
    s = zero_spec(to_u64(parts[1]), to_u64(parts[2]), parts[3]);
  } else if (head == "random") {
    if (parts.size() != 2 || parts[1].empty()) throw InvalidSpec("random specs need an explicit seed: random:SEED");
    s = PrimeValueSpec::random_unit_circle(to_u64(parts[1]));
  } else {
    throw InvalidSpec("unknown spec '" + raw + "' (not a shorthand or an existing file)");
  }
  if (over_n) s = s.with_shift(s.shift + 1.0);
  return s;
}

PrimeValueSpec parse_spec_kv(const std::string& text) {
  json j = json::object();
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidSpec("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind" || key == "name" || key == "mode") {
      j[key] = value;
    } else if (key == "q" || key == "index" || key == "seed") {
      j[key] = to_u64(value);
    } else if (key == "c" || key == "rho" || key == "shift" || key == "fallback") {
      j[key] = complex_json(to_complex(value));
    } else if (key == "entries" || key == "delta") {
      j[key] = map_json(value);
    } else if (key == "base") {
      j[key] = to_json(parse_spec(value));
    } else {
      throw InvalidSpec("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  auto s = spec_from_json(j);
  PrimeValues check(s);
  return s;
}

RunConfig parse_args(std::span<const std::string> args) {
  Parser p;
  try {
    p.parse(args);
  } catch (const CLI::CallForHelp&) {
    return {};
  } catch (const CLI::CallForAllHelp&) {
    return {};
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n\n" + p.app.help());
  }
  return p.cfg;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Parser p;
  try {
    p.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << p.app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << p.app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << p.app.help();
    return 1;
  }
  const RunConfig& cfg = p.cfg;
  if (p.print_config) {
    out << cfg.to_json().dump(2) << "\n";
    return 0;
  }
  try {
    Runner runner(cfg, err);
    const std::string payload = runner.execute();
    if (cfg.out.empty()) {
      out << payload;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      f << payload;
      if (!f) throw NumericError("could not write " + cfg.out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const TailBoundError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cmo::cli
