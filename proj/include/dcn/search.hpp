#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcn/cuts.hpp"
#include "dcn/graph.hpp"
#include "dcn/shapes.hpp"

namespace dcn {

/// Largest graph the bitset search kernel accepts.
inline constexpr std::size_t kMaxSearchOrder = 512;

struct SearchBudget {
  std::size_t max_members = 64;
  std::uint64_t max_candidates = 2'000'000;
  std::uint64_t max_checks = 100'000'000;
  double time_cap = 600.0;  // seconds
  unsigned jobs = 0;        // 0 = hardware concurrency
};

enum class SearchStatus { yes, no, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t candidates = 0;  // distinct vertex sets among shape copies
  std::uint64_t checks = 0;      // subsets examined
  double seconds = 0.0;
};

struct ExistsResult {
  SearchStatus status = SearchStatus::no;
  StructureCut witness;  // set when status == yes
  /// Every member count <= proven_none has been ruled out exhaustively.
  std::size_t proven_none = 0;
  std::string reason;  // why the budget tripped
  SearchStats stats;
};

/// Is there a cut of at most `size_bound` copies of `shape`? Copies with the
/// same vertex set are searched once. Throws InvalidArgument if g is
/// disconnected and BudgetError if g exceeds kMaxSearchOrder vertices.
ExistsResult exists_cut_of_size(const Graph& g, const ShapeSpec& shape, CutMode mode, std::size_t size_bound,
                                const SearchBudget& budget);

struct MinCutResult {
  /// True when `value` is the exact minimum.
  bool certified = false;
  /// The minimum if certified, else the smallest size not yet ruled out.
  std::size_t value = 0;
  /// No cut of this shape exists at any size.
  bool impossible = false;
  StructureCut witness;
  std::string reason;
  SearchStats stats;
};

/// Smallest cut size, found by trying 1, 2, ... . The witness is re-checked
/// with verify_cut before it is returned.
MinCutResult min_structure_cut(const Graph& g, const ShapeSpec& shape, CutMode mode, const SearchBudget& budget);

struct ExtraResult {
  bool certified = false;
  /// The minimum if certified, else the smallest size not yet ruled out.
  std::size_t value = 0;
  /// No qualifying vertex set exists.
  bool impossible = false;
  std::vector<VertexId> witness;
  std::string reason;
  SearchStats stats;
};

/// Smallest S with g - S disconnected and every component of size > h.
ExtraResult g_extra_connectivity(const Graph& g, std::size_t h, const SearchBudget& budget);

}  // namespace dcn
