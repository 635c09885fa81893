#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dcn/graph.hpp"

namespace dcn {

struct DCellParams {
  std::size_t m = 0;
  std::size_t n = 2;
};

inline constexpr std::size_t kDefaultVertexCap = 100000;

/// t_{m,n}: server count of D(m,n). Throws RangeError for n < 2 and
/// BudgetError on 64-bit overflow, naming the level where it happened.
std::uint64_t t_size(std::size_t m, std::size_t n);

/// t_{0,n} ... t_{m,n}.
std::vector<std::uint64_t> t_table(std::size_t m, std::size_t n);

/// Digits x_m ... x_0, most significant first.
using DCellLabel = std::vector<std::uint64_t>;

std::string format_dcell_label(const DCellLabel& digits);
/// Parses "x_m. ... .x_0" and checks every digit against its radix.
DCellLabel parse_dcell_label(std::string_view text, const DCellParams& p);

/// Position of a label in mixed-radix order (x_0 varies fastest within the
/// lowest level, x_m is the top-level copy index).
std::uint64_t dcell_index(const DCellLabel& digits, const DCellParams& p);
DCellLabel dcell_label(std::uint64_t index, const DCellParams& p);

/// D(m,n). Vertex ids follow dcell_index. Throws BudgetError if the server
/// count exceeds `vertex_cap`.
Graph build_dcell(std::size_t m, std::size_t n, std::size_t vertex_cap = kDefaultVertexCap);

/// Neighbour of `label` in another top-level copy. Throws RangeError for m = 0.
DCellLabel outside_neighbor(const DCellLabel& label, const DCellParams& p);

/// Whether t_{m,n} >= (n + 1/2)^(2^m) - 1/2 holds, in exact rationals.
bool dcell_growth_bound_holds(std::size_t m, std::size_t n);

}  // namespace dcn
