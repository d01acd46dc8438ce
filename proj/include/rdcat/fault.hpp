#pragma once

#include <array>
#include <string_view>

namespace rdcat {

/// Deliberate combinator defects used to show that the axiom checker is not
/// vacuous. Production code always runs with Fault::none.
enum class Fault {
  none,
  chain_drops_base_term,         // <pi0, <pi0 f, pi1>> loses its pi0 f term
  exchange_swaps_splits,         // ex pairs A with D instead of C where types allow
  ctx_dagger_drops_injection,    // (iota0 x 1) replaced by (0 x 1)
  mat_reverse_transposed_block,  // covector block anti-transposed instead of transposed
  partial_drops_scale,           // d/dx x^k loses its factor k
};

inline constexpr std::array<Fault, 5> all_faults = {
    Fault::chain_drops_base_term, Fault::exchange_swaps_splits, Fault::ctx_dagger_drops_injection,
    Fault::mat_reverse_transposed_block, Fault::partial_drops_scale};

constexpr std::string_view fault_name(Fault f) {
  switch (f) {
    case Fault::none: return "none";
    case Fault::chain_drops_base_term: return "chain-drops-base-term";
    case Fault::exchange_swaps_splits: return "exchange-swaps-splits";
    case Fault::ctx_dagger_drops_injection: return "ctx-dagger-drops-injection";
    case Fault::mat_reverse_transposed_block: return "mat-reverse-transposed-block";
    case Fault::partial_drops_scale: return "partial-drops-scale";
  }
  return "unknown";
}

}  // namespace rdcat
