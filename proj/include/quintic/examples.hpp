#pragma once

#include "quintic/bigreal.hpp"
#include "quintic/precision.hpp"
#include "quintic/rational.hpp"

#include <string>
#include <vector>

namespace quintic {

// Radical closed forms for the singular moduli used as ladder seeds.
BigReal closed_form_k1(const PrecisionContext& ctx);
BigReal closed_form_k5(const PrecisionContext& ctx);
BigReal closed_form_k_one_fifth(const PrecisionContext& ctx);
BigReal closed_form_k25(const PrecisionContext& ctx);

/// One worked ascent, evaluated both through the canonical kk' P^12 step and
/// through its shorthand form, each compared against a direct solve.
struct ExampleCheck {
  std::string name;
  std::string verbatim_form;
  Rational r;
  BigReal oracle_k;
  BigReal canonical_k;
  BigReal verbatim_k;
  BigReal canonical_residual;
  BigReal verbatim_residual;
  bool canonical_certified;
  bool verbatim_holds;
};

/// k_125 from (k_5, k_1/5) and k_625 from (k_25, k_1).
std::vector<ExampleCheck> audit_examples(const PrecisionContext& ctx);

}  // namespace quintic
