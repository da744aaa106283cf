#include "rinf/budget.hpp"

#include <cstdlib>
#include <string>

namespace rinf {

namespace {

template <typename T>
void override_from_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    value = static_cast<T>(std::stoull(raw));
  } catch (const std::exception&) {
    // unparsable overrides are ignored, the default stays in force
  }
}

}  // namespace

Budgets Budgets::from_env() {
  Budgets b;
  override_from_env("RINF_BUDGET_SYM_POWER_DIM", b.sym_power_dim);
  override_from_env("RINF_BUDGET_RESULTANT_DEGREE", b.resultant_degree);
  override_from_env("RINF_BUDGET_BASIS_DIM", b.basis_dim);
  override_from_env("RINF_BUDGET_LIE_WORD_SPACE", b.lie_word_space);
  override_from_env("RINF_BUDGET_VERIFY_DIM", b.verify_dim);
  override_from_env("RINF_BUDGET_THETA_CAP", b.theta_cap);
  override_from_env("RINF_BUDGET_RECURSION_DEPTH", b.recursion_depth);
  override_from_env("RINF_BUDGET_MODEL_SIZE", b.model_size);
  override_from_env("RINF_BUDGET_BURNSIDE_SIZE", b.burnside_size);
  override_from_env("RINF_BUDGET_WORD_LETTERS", b.word_letters);
  return b;
}

const Budgets& Budgets::defaults() {
  static const Budgets instance = from_env();
  return instance;
}

}  // namespace rinf
