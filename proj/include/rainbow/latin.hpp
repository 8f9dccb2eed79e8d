#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/multigraph.hpp"

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;

/// m x m array of symbols 0..m-1, row-major.
class LatinSquare {
 public:
  /// Throws InvalidLatinSquare unless every row and column is a permutation.
  LatinSquare(int side, std::vector<Color> cells);
  explicit LatinSquare(const std::vector<std::vector<Color>>& rows);

  /// cell[i][j] = (j - i) mod m, the rotation square.
  static LatinSquare cyclic(int side);

  int side() const noexcept { return side_; }
  Color at(int row, int col) const { return cells_[static_cast<std::size_t>(row * side_ + col)]; }
  std::span<const Color> cells() const noexcept { return cells_; }
  std::vector<std::vector<Color>> rows() const;

  static bool is_latin(int side, std::span<const Color> cells);

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int side_;
  std::vector<Color> cells_;
};

class ZeroOneMatrix {
 public:
  ZeroOneMatrix(int side, std::vector<std::uint8_t> cells);
  static ZeroOneMatrix from_row_masks(int side, std::span<const std::uint32_t> rows);

  int side() const noexcept { return side_; }
  bool at(int row, int col) const { return cells_[static_cast<std::size_t>(row * side_ + col)] != 0; }
  std::vector<std::uint32_t> row_masks() const;
  int zero_count() const;

 private:
  int side_;
  std::vector<std::uint8_t> cells_;
};

inline constexpr int kMaxPermanentSide = 20;
inline constexpr int kMaxLatinSide = 7;
inline constexpr int kMaxOmegaN = kMaxLatinSide + 1;
inline constexpr int kMaxPermanentRouteSide = 4;
inline constexpr int kMaxPermanentRouteSideLong = 5;

/// Ryser inclusion-exclusion over column subsets. Throws OutOfSupportedRange
/// for side > 20.
BigInt permanent(const ZeroOneMatrix& a);

/// Reduced squares (first row and column in natural order), side m <= 7.
std::uint64_t count_reduced_latin_squares(int m);
std::uint64_t count_reduced_latin_squares_serial(int m);

/// L_m = m! (m-1)! R_m. Throws OutOfSupportedRange outside 1..7.
BigInt count_latin_squares(int m);

/// Omega(n) = L_{n-1} / (n-1)!, with Omega(1) = Omega(2) = 1. n in 1..8.
BigInt count_omega(int n);

struct PermanentRouteOptions {
  /// Permit m = 5 (2^25 matrices).
  bool allow_long = false;
};

/// Sum over all m x m 0-1 matrices A of (-1)^zeros(A) C(per A, m). Equals
/// L_m / m!, hence Omega(m + 1).
BigInt signed_permanent_sum(int m, PermanentRouteOptions opts = {});
BigInt signed_permanent_sum_serial(int m, PermanentRouteOptions opts = {});

/// L_m = m! * signed_permanent_sum(m).
BigInt count_latin_via_permanent(int m, PermanentRouteOptions opts = {});

/// Omega(n) from the permanent sum directly (n - 1 = m).
BigInt omega_via_permanent(int n, PermanentRouteOptions opts = {});

BigInt factorial(int n);

/// Maps each edge id to a matrix column ("slot"); -1 for edges without one.
using SlotIndexing = std::vector<int>;

/// Columns are the leaves in ascending vertex order (center skipped).
SlotIndexing same_center_slots(const StarConfiguration& cfg);

/// Row i, column j = color of part i's edge in slot j. Throws
/// NotMatrixEncodable when a part misses a slot or uses one twice, or when
/// the result is not Latin.
LatinSquare rainbow_matrix_of(const ColoredMultigraph& g, const RainbowCollection& coll, const SlotIndexing& slots);

}  // namespace rainbow
