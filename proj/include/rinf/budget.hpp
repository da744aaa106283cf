#pragma once

#include <cstddef>
#include <cstdint>

namespace rinf {

/// Size limits shared by every module. Defaults can be overridden through the
/// environment (RINF_BUDGET_<NAME>, e.g. RINF_BUDGET_SYM_POWER_DIM=8000).
struct Budgets {
  std::size_t sym_power_dim = 5000;
  std::size_t resultant_degree = 20000;
  std::size_t basis_dim = 100000;
  // r^i associative words touched when expanding Lyndon brackets.
  std::size_t lie_word_space = std::size_t{1} << 22;
  // largest graded piece on which classify re-checks its verdict.
  std::size_t verify_dim = 1000;
  std::uint64_t theta_cap = 100000;
  std::size_t recursion_depth = 10000;
  std::size_t model_size = 1000000;
  std::size_t burnside_size = 10000;
  std::size_t word_letters = 4096;

  static Budgets from_env();
  /// Process-wide defaults, read from the environment once.
  static const Budgets& defaults();
};

}  // namespace rinf
