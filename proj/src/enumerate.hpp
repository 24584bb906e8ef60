#pragma once

#include <cstdint>
#include <span>

namespace tvprod::detail {

/// 2^log2_budget, validating the exponent.
std::uint64_t checked_budget(int log2_budget);

/// Sum over the joint support of |prod_k P_k(w_k) - prod_k Q_k(w_k)|.
/// `total` must equal the product of the table sizes.
double enumerate_abs_difference(std::span<const std::span<const double>> p_tables,
                                std::span<const std::span<const double>> q_tables,
                                std::uint64_t total, unsigned workers);

}  // namespace tvprod::detail
