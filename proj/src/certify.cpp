#include "quintic/certify.hpp"

#include "quintic/errors.hpp"
#include "quintic/kernel.hpp"
#include "quintic/ladder.hpp"
#include "quintic/modular.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace quintic {
namespace {

constexpr int kResidualDigits = 20;

using Check = std::function<IdentityCheck(const Rational&, const PrecisionContext&)>;

std::string point_of(const Rational& r) { return "r=" + r.to_string(); }

IdentityCheck plain(const char* id, const Rational& r, BigReal residual, std::string note = "") {
  return IdentityCheck{id, point_of(r), std::move(residual), std::move(note)};
}

IdentityCheck eta_quotient(const Rational& r, const PrecisionContext& ctx) {
  const BigReal q = nome(r, ctx);
  const BigReal R5 = pow(rrcf_converged(q, ctx), 5);
  return plain("eq5-eta-quotient", r, abs(1 / R5 - 11 - R5 - a_from_eta(r, ctx)));
}

IdentityCheck eta8(const Rational& r, const PrecisionContext& ctx) {
  const auto m = solve_singular_modulus(r, ctx);
  const BigReal pi = ctx.pi();
  const BigReal rhs = root(pow(ctx.num(2), 8), 3) / pow(pi, 4) / root(m.q, 3) * cbrt(m.k * m.k) *
                      root(pow(m.k_comp, 8), 3) * pow(m.K_k, 4);
  return plain("eq6-eta8", r, abs(pow(eta_f(m.q, ctx), 8) - rhs));
}

IdentityCheck eta2(const Rational& r, const PrecisionContext& ctx) {
  const auto m = solve_singular_modulus(r, ctx);
  const BigReal rhs = 2 * m.k * m.k_comp * pow(m.K_k, 3) / (pow(ctx.pi(), 3) * sqrt(m.q));
  return plain("eq7-eta2", r, abs(pow(eta_f(m.q * m.q, ctx), 6) - rhs));
}

IdentityCheck multiplier(const Rational& r, const PrecisionContext& ctx) {
  const auto at_r = solve_singular_modulus(r, ctx);
  const auto at_25r = solve_singular_modulus(r * Rational(25), ctx);
  const BigReal m5 = multiplier_M5(at_r, at_25r).m5;
  // K at 25r from the eta product, so the check does not reuse the AGM value
  // that defines m5.
  const BigReal q = at_25r.q;
  const BigReal K_eta =
      cbrt(pow(ctx.pi(), 3) * sqrt(q) * pow(eta_f(q * q, ctx), 6) / (2 * at_25r.k * at_25r.k_comp));
  return plain("eq10-multiplier", r, abs(m5 * at_r.K_k - K_eta), "K[25r] from the eta product");
}

IdentityCheck m5_poly(const Rational& r, const PrecisionContext& ctx) {
  return plain("eq11-m5-poly", r, multiplier_M5(r, ctx).poly_residual);
}

Check thm22_part(std::size_t index) {
  return [index](const Rational& r, const PrecisionContext& ctx) {
    return verify_thm22(r, ctx).fragment(r).at(index);
  };
}

IdentityCheck v_descent(const Rational& r, const PrecisionContext& ctx) {
  const BigReal v = rrcf_converged(nome(r, ctx), ctx);
  const BigReal v_low = rrcf_converged(nome(r / Rational(25), ctx), ctx);
  const BigReal rhs = v * (1 - 2 * v + 4 * pow(v, 2) - 3 * pow(v, 3) + pow(v, 4)) /
                      (1 + 3 * v + 4 * pow(v, 2) + 2 * pow(v, 3) + pow(v, 4));
  return plain("eq19-v-descent", r, abs(pow(v_low, 5) - rhs));
}

IdentityCheck q_descent(const Rational& r, const PrecisionContext& ctx) {
  return plain("eq24-q-descent", r, abs(descend_a(a_from_eta(r, ctx), ctx) - a_from_eta(r / Rational(25), ctx)));
}

IdentityCheck u_defining(const Rational& r, const PrecisionContext& ctx) {
  const BigReal A = root(a_from_eta(r * Rational(4), ctx), 6);
  const UMapResult forward = u_map(A, ctx);
  const BigReal Y = g_invariant(r * Rational(25), ctx).g / g_invariant(r, ctx).g;
  const BigReal backward = abs(u_relation(u_star(Y, ctx), Y));
  std::string note = "U(A) " + forward.defining_residual.to_scientific(3) + "; U*(G ratio) " +
                     backward.to_scientific(3);
  if (!forward.radical_agrees) note += "; radical form off by " + forward.radical_discrepancy.to_scientific(3);
  return plain("eq26-u-defining", r, max(forward.defining_residual, backward), note);
}

IdentityCheck thm31(const Rational& r, const PrecisionContext& ctx) {
  return verify_thm31(r, ctx).fragment(r).front();
}

IdentityCheck g_definition(const Rational& r, const PrecisionContext& ctx) {
  const BigReal q = nome(r, ctx);
  const BigReal f1 = eta_f(q, ctx);
  const BigReal f2 = eta_f(q * q, ctx);
  const BigReal f4 = eta_f(pow(q, 4), ctx);
  const BigReal via_eta = f2 * f2 / (f1 * f4 * root(ctx.num(2), 4) * root(q, 24));
  return plain("eq31-g-def", r, abs(g_invariant(r, ctx).g - via_eta), "G against its q-product");
}

IdentityCheck reciprocal(const Rational& r, const PrecisionContext& ctx) {
  const auto at_r = solve_singular_modulus(r, ctx);
  const auto at_inv = solve_singular_modulus(r.reciprocal(), ctx);
  const BigReal swap = abs(at_inv.k - at_r.k_comp);
  // K evaluated on k_1/r itself rather than on a stored complement.
  const BigReal ratio = elliptic_K(at_r.k, ctx) / elliptic_K(at_inv.k, ctx);
  const BigReal defining = abs(ratio - r.reciprocal().sqrt_value(ctx.working_bits()));
  return plain("k-reciprocal", r, max(swap, defining),
               "swap " + swap.to_scientific(3) + "; K ratio " + defining.to_scientific(3));
}

struct Registered {
  const char* id;
  Check check;
};

const std::vector<Registered>& registered() {
  static const std::vector<Registered> table = {
      {"eq5-eta-quotient", eta_quotient}, {"eq6-eta8", eta8},
      {"eq7-eta2", eta2},                 {"eq10-multiplier", multiplier},
      {"eq11-m5-poly", m5_poly},          {"eq13-thm22", thm22_part(0)},
      {"eq14-w-poly", thm22_part(1)},     {"eq15-depressed", thm22_part(2)},
      {"eq19-v-descent", v_descent},      {"eq24-q-descent", q_descent},
      {"eq26-u-defining", u_defining},    {"eq29-thm31", thm31},
      {"eq30-thm32", verify_thm32},       {"eq31-g-def", g_definition},
      {"eq34-thm33", verify_thm33},       {"k-reciprocal", reciprocal},
  };
  return table;
}

std::string registry_listing() {
  std::string out;
  for (const auto& id : identity_registry()) out += (out.empty() ? "" : ", ") + id;
  return out;
}

}  // namespace

bool IdentityReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.pass; });
}

const ReportEntry* IdentityReport::find(const std::string& id) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.id == id; });
  return it == entries.end() ? nullptr : &*it;
}

const std::vector<std::string>& identity_registry() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& reg : registered()) out.emplace_back(reg.id);
    return out;
  }();
  return ids;
}

IdentityReport run_suite(const Rational& r, const std::optional<std::vector<std::string>>& ids,
                         const PrecisionContext& ctx) {
  const auto& known = identity_registry();
  if (ids) {
    for (const auto& id : *ids) {
      if (std::find(known.begin(), known.end(), id) == known.end()) {
        throw UsageError("unknown identity '" + id + "'; registry: " + registry_listing());
      }
    }
  }
  const bool everything = !ids || ids->empty();

  IdentityReport report{r, ctx.precision_bits(), ctx.tol_exp(), {}};
  const BigReal tol = ctx.tolerance();
  for (const auto& reg : registered()) {
    if (!everything && std::find(ids->begin(), ids->end(), reg.id) == ids->end()) continue;
    const auto start = std::chrono::steady_clock::now();
    const IdentityCheck check = reg.check(r, ctx);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report.entries.push_back(ReportEntry{check.id, check.point, check.residual.to_scientific(kResidualDigits),
                                         check.residual < tol, static_cast<long>(elapsed.count()), check.note});
  }
  return report;
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"id", e.id},
                       {"point", e.point},
                       {"residual", e.residual},
                       {"pass", e.pass},
                       {"elapsed_ms", e.elapsed_ms},
                       {"note", e.note}});
  }
  return {{"r", {{"num", report.r.num()}, {"den", report.r.den()}}},
          {"precision_bits", report.precision_bits},
          {"tol_exp", report.tol_exp},
          {"all_pass", report.all_pass()},
          {"entries", entries}};
}

IdentityReport report_from_json(const nlohmann::json& doc) {
  try {
    IdentityReport report{Rational(doc.at("r").at("num").get<std::int64_t>(), doc.at("r").at("den").get<std::int64_t>()),
                          doc.at("precision_bits").get<int>(), doc.at("tol_exp").get<int>(), {}};
    for (const auto& e : doc.at("entries")) {
      report.entries.push_back(ReportEntry{e.at("id").get<std::string>(), e.at("point").get<std::string>(),
                                           e.at("residual").get<std::string>(), e.at("pass").get<bool>(),
                                           e.at("elapsed_ms").get<long>(), e.value("note", std::string())});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed identity report: ") + e.what());
  }
}

}  // namespace quintic
