#include "cli.hpp"

#include "modulus_cache.hpp"
#include "quintic/certify.hpp"
#include "quintic/errors.hpp"
#include "quintic/examples.hpp"
#include "quintic/kernel.hpp"
#include "quintic/ladder.hpp"
#include "quintic/modular.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

namespace quintic::cli {
namespace {

using nlohmann::json;

constexpr int kResidualDigits = 6;

struct Options {
  int prec = 512;
  int tol_exp = 120;
  bool json = false;
  std::string cache_path;
  int digits = 50;
};

/// Shared state for one invocation.
struct Session {
  Options opt;
  PrecisionContext ctx;
  ModulusCache cache;
  std::ostream& out;
  std::ostream& err;

  std::string num(const BigReal& x) const { return x.to_decimal(opt.digits); }
  static std::string small(const BigReal& x) { return x.to_scientific(kResidualDigits); }

  json header(const char* command, const Rational& r) const {
    return {{"command", command},
            {"r", {{"num", r.num()}, {"den", r.den()}}},
            {"precision_bits", ctx.precision_bits()},
            {"tol_exp", ctx.tol_exp()}};
  }

  void emit(const json& doc) const { out << doc.dump(2) << '\n'; }
};

/// Solved modulus, consulting the cache first. A cached value whose
/// defining residual no longer passes is ignored.
SingularModulusRecord solve_cached(Session& s, const Rational& r, bool* from_cache = nullptr) {
  if (from_cache) *from_cache = false;
  if (auto k = s.cache.lookup(r, s.ctx.working_bits())) {
    const BigReal k_comp = sqrt((1 - *k) * (1 + *k));
    const BigReal K_k = elliptic_K_from_complement(k_comp, s.ctx);
    const BigReal K_comp = elliptic_K_from_complement(*k, s.ctx);
    BigReal residual = abs(K_comp / K_k - r.sqrt_value(s.ctx.working_bits()));
    if (residual < s.ctx.tolerance()) {
      if (from_cache) *from_cache = true;
      return SingularModulusRecord{r, *k, k_comp, nome(r, s.ctx), K_k, K_comp, std::move(residual)};
    }
    s.err << "warning: cached k for r=" << r.to_string() << " fails the defining equation; re-solving\n";
  }
  SingularModulusRecord rec = solve_singular_modulus(r, s.ctx);
  s.cache.store(r, rec.k);
  return rec;
}

int cmd_kr(Session& s, const std::string& r_text) {
  const Rational r = Rational::parse(r_text);
  bool cached = false;
  const SingularModulusRecord m = solve_cached(s, r, &cached);
  if (s.opt.json) {
    json doc = s.header("kr", r);
    doc["modulus"] = {{"k", s.num(m.k)},           {"k_comp", s.num(m.k_comp)}, {"q", s.num(m.q)},
                      {"K", s.num(m.K_k)},         {"K_comp", s.num(m.K_kcomp)}, {"residual", s.small(m.residual)},
                      {"from_cache", cached}};
    s.emit(doc);
  } else {
    s.out << "r        = " << r.to_string() << '\n'
          << "k        = " << s.num(m.k) << '\n'
          << "k'       = " << s.num(m.k_comp) << '\n'
          << "q        = " << s.num(m.q) << '\n'
          << "K(k)     = " << s.num(m.K_k) << '\n'
          << "K(k')    = " << s.num(m.K_kcomp) << '\n'
          << "residual = " << s.small(m.residual) << (cached ? "  (cached)" : "") << '\n';
  }
  return kOk;
}

json trace_json(const Session& s, const LadderTrace& t) {
  json levels = json::array();
  for (const LadderStep& st : t.steps) {
    levels.push_back({{"level", st.level},
                      {"r", {{"num", st.r.num()}, {"den", st.r.den()}}},
                      {"argument", s.num(st.argument)},
                      {"p", s.num(st.p_value)},
                      {"kkprime", s.num(st.kkprime)},
                      {"k", s.num(st.k)},
                      {"oracle_k", s.num(st.oracle_k)},
                      {"residual", s.small(st.oracle_residual)},
                      {"certified", st.certified}});
  }
  return {{"n", t.n}, {"levels", levels}, {"all_certified", t.all_certified()}};
}

void print_trace(const Session& s, const LadderTrace& t) {
  for (const LadderStep& st : t.steps) {
    s.out << "level " << st.level << "  r = " << st.r.to_string() << '\n'
          << "  x        = " << s.num(st.argument) << '\n'
          << "  P(x)     = " << s.num(st.p_value) << '\n'
          << "  k k'     = " << s.num(st.kkprime) << '\n'
          << "  k        = " << s.num(st.k) << '\n'
          << "  |k - direct solve| = " << s.small(st.oracle_residual)
          << (st.certified ? "  certified" : "  NOT CERTIFIED") << '\n';
  }
}

struct Seeds {
  BigReal k_r0;
  BigReal k_low;
  std::string source;
};

Seeds ladder_seeds(Session& s, const Rational& r0, const std::string& seed_k, const std::string& seed_k25) {
  auto seed = [&](const std::string& text, const Rational& r) {
    if (!text.empty()) {
      try {
        return s.ctx.parse(text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    return solve_cached(s, r).k;
  };
  const bool overridden = !seed_k.empty() || !seed_k25.empty();
  return Seeds{seed(seed_k, r0), seed(seed_k25, r0 / Rational(25)), overridden ? "override" : "solved"};
}

int cmd_ladder(Session& s, const std::string& r_text, int n, const std::string& seed_k, const std::string& seed_k25,
               bool csv) {
  const Rational r0 = Rational::parse(r_text);
  if (n < 1) throw UsageError("--n must be at least 1");
  const Seeds seeds = ladder_seeds(s, r0, seed_k, seed_k25);

  auto render = [&](const LadderTrace& t) {
    if (csv) {
      s.out << "r,k,residual\n";
      for (const LadderStep& st : t.steps) {
        s.out << st.r.to_string() << ',' << s.num(st.k) << ',' << s.small(st.oracle_residual) << '\n';
      }
    } else if (s.opt.json) {
      json doc = s.header("ladder", r0);
      doc["ladder"] = trace_json(s, t);
      doc["ladder"]["seeds"] = {{"k_r0", s.num(seeds.k_r0)}, {"k_r0_over_25", s.num(seeds.k_low)},
                                {"source", seeds.source}};
      s.emit(doc);
    } else {
      s.out << "r0 = " << r0.to_string() << "  n = " << n << "  seeds " << seeds.source << '\n'
            << "k_r0      = " << s.num(seeds.k_r0) << '\n'
            << "k_r0/25   = " << s.num(seeds.k_low) << '\n';
      print_trace(s, t);
    }
  };

  try {
    const LadderTrace t = ladder(r0, seeds.k_r0, seeds.k_low, n, s.ctx);
    render(t);
  } catch (const LadderCertificationError& e) {
    render(e.trace);
    throw;
  }
  return kOk;
}

int cmd_rrcf(Session& s, const std::string& r_text) {
  const Rational r = Rational::parse(r_text);
  const BigReal a = a_from_eta(r, s.ctx);
  const BigReal closed = rrcf_from_a(a, s.ctx);
  const BigReal truncated = rrcf_converged(nome(r, s.ctx), s.ctx);
  const BigReal diff = abs(closed - truncated);
  const bool agree = diff < s.ctx.tolerance();
  if (s.opt.json) {
    json doc = s.header("rrcf", r);
    doc["rrcf"] = {{"closed_form", s.num(closed)},
                   {"continued_fraction", s.num(truncated)},
                   {"difference", s.small(diff)},
                   {"a", s.num(a)},
                   {"agree", agree}};
    s.emit(doc);
  } else {
    s.out << "r                  = " << r.to_string() << '\n'
          << "a_r                = " << s.num(a) << '\n'
          << "closed form        = " << s.num(closed) << '\n'
          << "continued fraction = " << s.num(truncated) << '\n'
          << "difference         = " << s.small(diff) << '\n';
  }
  return agree ? kOk : kCertification;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw) {
  std::vector<std::string> ids;
  for (const auto& chunk : raw) {
    std::size_t start = 0;
    while (start <= chunk.size()) {
      const std::size_t comma = std::min(chunk.find(',', start), chunk.size());
      if (comma > start) ids.push_back(chunk.substr(start, comma - start));
      start = comma + 1;
    }
  }
  return ids;
}

int cmd_verify(Session& s, const std::string& r_text, const std::vector<std::string>& raw_ids) {
  const Rational r = Rational::parse(r_text);
  std::optional<std::vector<std::string>> ids;
  if (!raw_ids.empty()) ids = split_ids(raw_ids);
  const IdentityReport report = run_suite(r, ids, s.ctx);
  if (s.opt.json) {
    json doc = s.header("verify", r);
    doc["report"] = to_json(report);
    s.emit(doc);
  } else {
    std::size_t passed = 0;
    for (const ReportEntry& e : report.entries) {
      passed += e.pass;
      s.out << (e.pass ? "PASS  " : "FAIL  ") << e.id << "  " << e.point << "  residual " << e.residual << "  "
            << e.elapsed_ms << " ms" << (e.note.empty() ? "" : "  [" + e.note + "]") << '\n';
    }
    s.out << passed << "/" << report.entries.size() << " identities pass at " << s.ctx.precision_bits()
          << " bits, tolerance 1e-" << s.ctx.tol_exp() << '\n';
  }
  return report.all_pass() ? kOk : kCertification;
}

int cmd_audit(Session& s) {
  const auto checks = audit_examples(s.ctx);
  bool canonical_ok = true;
  json rows = json::array();
  for (const ExampleCheck& c : checks) {
    canonical_ok = canonical_ok && c.canonical_certified;
    rows.push_back({{"name", c.name},
                    {"r", {{"num", c.r.num()}, {"den", c.r.den()}}},
                    {"direct_solve", s.num(c.oracle_k)},
                    {"canonical", s.num(c.canonical_k)},
                    {"canonical_residual", s.small(c.canonical_residual)},
                    {"canonical_certified", c.canonical_certified},
                    {"verbatim_form", c.verbatim_form},
                    {"verbatim", s.num(c.verbatim_k)},
                    {"verbatim_residual", s.small(c.verbatim_residual)},
                    {"verbatim_holds", c.verbatim_holds}});
  }
  if (s.opt.json) {
    s.emit({{"command", "audit"},
            {"precision_bits", s.ctx.precision_bits()},
            {"tol_exp", s.ctx.tol_exp()},
            {"audit", rows}});
  } else {
    for (const ExampleCheck& c : checks) {
      s.out << c.name << '\n'
            << "  direct solve  " << s.num(c.oracle_k) << '\n'
            << "  canonical     " << s.num(c.canonical_k) << "  |diff| " << s.small(c.canonical_residual)
            << (c.canonical_certified ? "  certified" : "  NOT CERTIFIED") << '\n'
            << "  " << c.verbatim_form << '\n'
            << "                " << s.num(c.verbatim_k) << "  |diff| " << s.small(c.verbatim_residual)
            << (c.verbatim_holds ? "  holds" : "  does not hold") << '\n';
    }
  }
  return canonical_ok ? kOk : kCertification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular moduli k_r and their degree-5 ladder, with certified residuals", "quintic"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--prec", opt.prec, "Precision in bits")->capture_default_str();
  app.add_option("--tol-exp", opt.tol_exp, "Accept residuals below 10^-N")->capture_default_str();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--cache", opt.cache_path, "Modulus cache file");
  app.add_option("--digits", opt.digits, "Significant digits printed")
      ->capture_default_str()
      ->check(CLI::Range(1, 100000));

  std::string r_text;
  auto* kr = app.add_subcommand("kr", "Singular modulus k_r");
  kr->add_option("--r", r_text, "r as p/q or integer")->required();

  std::string r0_text;
  int n = 1;
  std::string seed_k;
  std::string seed_k25;
  bool csv = false;
  auto* lad = app.add_subcommand("ladder", "k_{25^j r0}, j = 1..n, each checked against a direct solve");
  lad->add_option("--r0", r0_text, "Starting r")->required();
  lad->add_option("--n", n, "Number of ascents")->capture_default_str();
  lad->add_option("--seed-k", seed_k, "Decimal k_r0 instead of solving");
  lad->add_option("--seed-k25", seed_k25, "Decimal k_{r0/25} instead of solving");
  lad->add_flag("--csv", csv, "CSV rows r,k,residual");

  auto* table = app.add_subcommand("table", "Ladder levels as CSV");
  table->add_option("--r0", r0_text, "Starting r")->required();
  table->add_option("--n", n, "Number of ascents")->capture_default_str();

  auto* rr = app.add_subcommand("rrcf", "Continued fraction R(e^-pi sqrt r) two ways");
  rr->add_option("--r", r_text, "r as p/q or integer")->required();

  std::vector<std::string> ids;
  auto* ver = app.add_subcommand("verify", "Evaluate the identity registry at r");
  ver->add_option("--r", r_text, "r as p/q or integer")->required();
  ver->add_option("--ids", ids, "Comma-separated subset of identity ids")->delimiter(',');

  auto* aud = app.add_subcommand("audit", "Worked ascents in canonical and shorthand form");

  for (CLI::App* sub : {kr, lad, table, rr, ver, aud}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session s{opt, PrecisionContext(opt.prec, opt.tol_exp), {}, out, err};
    if (!opt.cache_path.empty()) s.cache = ModulusCache::load(opt.cache_path, err);
    int code = kOk;
    try {
      if (kr->parsed()) code = cmd_kr(s, r_text);
      if (lad->parsed()) code = cmd_ladder(s, r0_text, n, seed_k, seed_k25, csv);
      if (table->parsed()) code = cmd_ladder(s, r0_text, n, "", "", true);
      if (rr->parsed()) code = cmd_rrcf(s, r_text);
      if (ver->parsed()) code = cmd_verify(s, r_text, ids);
      if (aud->parsed()) code = cmd_audit(s);
    } catch (...) {
      s.cache.flush();
      throw;
    }
    s.cache.flush();
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    if (!e.bracket_lo.empty()) err << "  bracket [" << e.bracket_lo << ", " << e.bracket_hi << "]\n";
    return kConvergence;
  } catch (const LadderCertificationError& e) {
    err << "certification failure: " << e.what() << '\n';
    return kCertification;
  } catch (const BranchError& e) {
    err << "branch error: " << e.what() << '\n';
    for (const auto& c : e.candidates) err << "  candidate " << c.value << "  residual " << c.residual << '\n';
    return kCertification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCertification;
  }
}

}  // namespace quintic::cli
