#include "rainbow/latin.hpp"

#include <bit>
#include <stdexcept>

#include <omp.h>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

void require_side(int m, int lo, int hi, const char* what) {
  if (m < lo || m > hi)
    throw OutOfSupportedRange(std::string(what) + ": side " + std::to_string(m) + " outside supported range [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Backtracking over the free cells of a reduced square: rows 1..m-1,
// columns 1..m-1, with symbol-usage bitmasks per row and column.
class ReducedSquareCounter {
 public:
  explicit ReducedSquareCounter(int m) : m_(m), full_((1u << m) - 1) {
    for (int i = 0; i < m; ++i) {
      row_used_[i] = (1u << i);       // column 0 holds symbol i
      col_used_[i] = (1u << i);       // row 0 holds symbol i
    }
    row_used_[0] = full_;
  }

  std::uint64_t count_from(int cell) {
    const int free = m_ - 1;
    if (cell == free * free) return 1;
    const int r = 1 + cell / free;
    const int c = 1 + cell % free;
    std::uint64_t total = 0;
    std::uint32_t options = full_ & ~(row_used_[r] | col_used_[c]);
    while (options) {
      const std::uint32_t bit = options & (~options + 1);
      options ^= bit;
      row_used_[r] |= bit;
      col_used_[c] |= bit;
      total += count_from(cell + 1);
      row_used_[r] ^= bit;
      col_used_[c] ^= bit;
    }
    return total;
  }

  // All fillings of row 1, as per-cell symbol bits.
  void row_one_prefixes(int c, std::vector<std::uint32_t>& current, std::vector<std::vector<std::uint32_t>>& out) {
    if (c == m_) {
      out.push_back(current);
      return;
    }
    std::uint32_t options = full_ & ~(row_used_[1] | col_used_[c]);
    while (options) {
      const std::uint32_t bit = options & (~options + 1);
      options ^= bit;
      place(1, c, bit);
      current.push_back(bit);
      row_one_prefixes(c + 1, current, out);
      current.pop_back();
      place(1, c, bit);
    }
  }

  void place(int r, int c, std::uint32_t bit) {
    row_used_[r] ^= bit;
    col_used_[c] ^= bit;
  }

 private:
  int m_;
  std::uint32_t full_;
  std::uint32_t row_used_[kMaxLatinSide + 1] = {};
  std::uint32_t col_used_[kMaxLatinSide + 1] = {};
};

std::uint64_t small_binomial(std::uint64_t n, int k) {
  if (k < 0 || n < static_cast<std::uint64_t>(k)) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - static_cast<std::uint64_t>(k) + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Ryser over row bitmasks; exact in int64 for the sides the permanent route
// admits (m <= 5).
std::int64_t small_permanent(const std::uint32_t* rows, int m) {
  std::int64_t total = 0;
  const std::uint32_t subsets = 1u << m;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    std::int64_t prod = 1;
    for (int i = 0; i < m && prod != 0; ++i) prod *= std::popcount(rows[i] & s);
    total += ((m - std::popcount(s)) & 1) ? -prod : prod;
  }
  return total;
}

std::int64_t signed_term(std::uint64_t code, int m) {
  const std::uint32_t row_mask = (1u << m) - 1;
  std::uint32_t rows[kMaxPermanentRouteSideLong];
  for (int i = 0; i < m; ++i) rows[i] = static_cast<std::uint32_t>(code >> (i * m)) & row_mask;
  const auto per = small_permanent(rows, m);
  const int zeros = m * m - std::popcount(code);
  const auto b = static_cast<std::int64_t>(small_binomial(static_cast<std::uint64_t>(per), m));
  return (zeros & 1) ? -b : b;
}

void require_permanent_route(int m, PermanentRouteOptions opts) {
  require_side(m, 1, opts.allow_long ? kMaxPermanentRouteSideLong : kMaxPermanentRouteSide, "permanent route");
}

}  // namespace

LatinSquare::LatinSquare(int side, std::vector<Color> cells) : side_(side), cells_(std::move(cells)) {
  if (side < 1 || cells_.size() != static_cast<std::size_t>(side) * static_cast<std::size_t>(side))
    throw InvalidLatinSquare("square data does not match side " + std::to_string(side));
  if (!is_latin(side_, cells_)) throw InvalidLatinSquare("rows and columns must be permutations of 0.." + std::to_string(side - 1));
}

LatinSquare::LatinSquare(const std::vector<std::vector<Color>>& rows)
    : LatinSquare(static_cast<int>(rows.size()), [&] {
        std::vector<Color> flat;
        for (const auto& r : rows) {
          if (r.size() != rows.size()) throw InvalidLatinSquare("square is not square");
          flat.insert(flat.end(), r.begin(), r.end());
        }
        return flat;
      }()) {}

LatinSquare LatinSquare::cyclic(int side) {
  std::vector<Color> cells;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) cells.push_back(((j - i) % side + side) % side);
  return LatinSquare(side, std::move(cells));
}

std::vector<std::vector<Color>> LatinSquare::rows() const {
  std::vector<std::vector<Color>> out;
  for (int i = 0; i < side_; ++i) out.emplace_back(cells_.begin() + i * side_, cells_.begin() + (i + 1) * side_);
  return out;
}

bool LatinSquare::is_latin(int side, std::span<const Color> cells) {
  if (side < 1 || cells.size() != static_cast<std::size_t>(side) * static_cast<std::size_t>(side)) return false;
  std::vector<char> row_seen(cells.size(), 0);
  std::vector<char> col_seen(cells.size(), 0);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Color x = cells[static_cast<std::size_t>(i * side + j)];
      if (x < 0 || x >= side) return false;
      if (row_seen[i * side + x]++ || col_seen[j * side + x]++) return false;
    }
  }
  return true;
}

ZeroOneMatrix::ZeroOneMatrix(int side, std::vector<std::uint8_t> cells) : side_(side), cells_(std::move(cells)) {
  if (side < 0 || cells_.size() != static_cast<std::size_t>(side) * static_cast<std::size_t>(side))
    throw std::invalid_argument("matrix data does not match side " + std::to_string(side));
  for (auto& x : cells_)
    if (x > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
}

ZeroOneMatrix ZeroOneMatrix::from_row_masks(int side, std::span<const std::uint32_t> rows) {
  std::vector<std::uint8_t> cells;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) cells.push_back(static_cast<std::uint8_t>((rows[i] >> j) & 1u));
  return ZeroOneMatrix(side, std::move(cells));
}

std::vector<std::uint32_t> ZeroOneMatrix::row_masks() const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(side_), 0);
  for (int i = 0; i < side_; ++i)
    for (int j = 0; j < side_; ++j)
      if (at(i, j)) out[i] |= 1u << j;
  return out;
}

int ZeroOneMatrix::zero_count() const {
  int z = 0;
  for (auto x : cells_) z += x == 0;
  return z;
}

__extension__ using Int128 = __int128;
__extension__ using UInt128 = unsigned __int128;

BigInt permanent(const ZeroOneMatrix& a) {
  const int m = a.side();
  require_side(m, 0, kMaxPermanentSide, "permanent");
  if (m == 0) return 1;
  const auto rows = a.row_masks();
  // Gray-code walk over column subsets keeps the row sums incremental.
  std::vector<int> row_sum(static_cast<std::size_t>(m), 0);
  Int128 total = 0;
  std::uint32_t subset = 0;
  const std::uint32_t count = 1u << m;
  for (std::uint32_t k = 1; k < count; ++k) {
    const int col = std::countr_zero(k);
    const std::uint32_t bit = 1u << col;
    subset ^= bit;
    const int delta = (subset & bit) ? 1 : -1;
    Int128 prod = 1;
    for (int i = 0; i < m; ++i) {
      if (rows[i] & bit) row_sum[i] += delta;
      prod *= row_sum[i];
    }
    total += ((m - std::popcount(subset)) & 1) ? -prod : prod;
  }
  // cpp_int has no 128-bit constructor; split into two 64-bit halves.
  const bool negative = total < 0;
  const UInt128 mag = negative ? static_cast<UInt128>(-total) : static_cast<UInt128>(total);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

std::uint64_t count_reduced_latin_squares_serial(int m) {
  require_side(m, 1, kMaxLatinSide, "reduced Latin squares");
  if (m <= 2) return 1;
  ReducedSquareCounter counter(m);
  return counter.count_from(0);
}

std::uint64_t count_reduced_latin_squares(int m) {
  require_side(m, 1, kMaxLatinSide, "reduced Latin squares");
  if (m <= 3) return count_reduced_latin_squares_serial(m);

  ReducedSquareCounter seed(m);
  std::vector<std::vector<std::uint32_t>> prefixes;
  std::vector<std::uint32_t> current;
  seed.row_one_prefixes(1, current, prefixes);

  const int free = m - 1;
  const auto tasks = static_cast<std::int64_t>(prefixes.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (std::int64_t t = 0; t < tasks; ++t) {
    ReducedSquareCounter counter(m);
    const auto& row = prefixes[static_cast<std::size_t>(t)];
    for (int c = 1; c < m; ++c) counter.place(1, c, row[static_cast<std::size_t>(c - 1)]);
    total += counter.count_from(free);
  }
  return total;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt count_latin_squares(int m) {
  require_side(m, 1, kMaxLatinSide, "Latin squares");
  return factorial(m) * factorial(m - 1) * BigInt(count_reduced_latin_squares(m));
}

BigInt count_omega(int n) {
  if (n < 1 || n > kMaxOmegaN)
    throw OutOfSupportedRange("Omega(" + std::to_string(n) + ") outside supported range [1, " +
                              std::to_string(kMaxOmegaN) + "]");
  if (n == 1) return 1;  // L_0 = 1 and 0! = 1
  const BigInt latin = count_latin_squares(n - 1);
  const BigInt rows = factorial(n - 1);
  if (latin % rows != 0) throw std::logic_error("L_{n-1} not divisible by (n-1)!");
  return latin / rows;
}

BigInt signed_permanent_sum_serial(int m, PermanentRouteOptions opts) {
  require_permanent_route(m, opts);
  const std::uint64_t count = std::uint64_t{1} << (m * m);
  std::int64_t total = 0;
  for (std::uint64_t code = 0; code < count; ++code) total += signed_term(code, m);
  return total;
}

BigInt signed_permanent_sum(int m, PermanentRouteOptions opts) {
  require_permanent_route(m, opts);
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << (m * m));
  std::int64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t code = 0; code < count; ++code) total += signed_term(static_cast<std::uint64_t>(code), m);
  return total;
}

BigInt count_latin_via_permanent(int m, PermanentRouteOptions opts) {
  return factorial(m) * signed_permanent_sum(m, opts);
}

BigInt omega_via_permanent(int n, PermanentRouteOptions opts) {
  if (n == 1) return 1;
  return signed_permanent_sum(n - 1, opts);
}

SlotIndexing same_center_slots(const StarConfiguration& cfg) {
  if (!cfg.centers_all_equal()) throw NotMatrixEncodable("stars do not share one center; no leaf slots");
  const Vertex center = cfg.center(0);
  SlotIndexing slots(static_cast<std::size_t>(cfg.graph().edge_count()), -1);
  for (const auto& e : cfg.graph().edges()) {
    const Vertex leaf = e.other(center);
    slots[e.id] = leaf < center ? leaf : leaf - 1;
  }
  return slots;
}

LatinSquare rainbow_matrix_of(const ColoredMultigraph& g, const RainbowCollection& coll, const SlotIndexing& slots) {
  const int m = static_cast<int>(coll.parts.size());
  if (m == 0) throw NotMatrixEncodable("empty collection");
  std::vector<Color> cells(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const auto& part = coll.parts[static_cast<std::size_t>(i)];
    if (static_cast<int>(part.edges.size()) != m)
      throw NotMatrixEncodable("part " + std::to_string(i) + " has " + std::to_string(part.edges.size()) + " edges");
    for (EdgeId id : part.edges) {
      const int s = (id >= 0 && static_cast<std::size_t>(id) < slots.size()) ? slots[id] : -1;
      if (s < 0 || s >= m) throw NotMatrixEncodable("edge " + std::to_string(id) + " has no slot");
      auto& cell = cells[static_cast<std::size_t>(i * m + s)];
      if (cell != -1) throw NotMatrixEncodable("part " + std::to_string(i) + " fills slot " + std::to_string(s) + " twice");
      cell = g.edge(id).color;
    }
  }
  if (!LatinSquare::is_latin(m, cells)) throw NotMatrixEncodable("rainbow matrix is not a Latin square");
  return LatinSquare(m, std::move(cells));
}

}  // namespace rainbow
