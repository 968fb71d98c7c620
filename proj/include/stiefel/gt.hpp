#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stiefel/exact.hpp"
#include "stiefel/weights.hpp"

namespace stiefel {

/// How a box is bounded by the row directly above it. Every box is bounded
/// above by its north-west neighbour; the lower bound depends on the
/// north-east neighbour:
///   Neighbor     NW >= x >= NE
///   AbsNeighbor  NW >= x >= |NE|   (NE is the signed last box of an even row)
///   Mirror       NW >= x >= -NW    (no NE neighbour)
enum class LowerBound { Neighbor, AbsNeighbor, Mirror };

struct BoxRule {
  LowerBound kind;
  int north_west;  ///< box index in the row above
  int north_east;  ///< box index in the row above, -1 for Mirror
};

/// Staircase diagram of shape (SO(m), SO(n)): one row per group size
/// i = n, n-1, ..., m, the row of SO(i) holding floor(i/2) boxes.
/// Row 0 is the top row (SO(n)).
class GTShape {
 public:
  GTShape(int n, int m);

  int top_group() const { return n_; }
  int bottom_group() const { return m_; }
  int row_count() const { return n_ - m_ + 1; }
  int group(int row) const { return n_ - row; }
  int boxes(int row) const { return group(row) / 2; }

  /// Bounding rule for `box` of `row`, row >= 1. Derived from which
  /// neighbours exist in the row above and the parity of that row's group.
  BoxRule rule(int row, int box) const;

  /// Boxes whose label is zero in every real filling, given a generic top
  /// row and the all-zero bottom row. Indexed [row][box].
  std::vector<std::vector<bool>> forced_zero() const;

  /// Number of labels strictly between top and bottom row not forced to 0.
  int free_label_count() const;

 private:
  int n_;
  int m_;
};

/// An integer filling: rows[0] is the top weight, rows.back() the bottom
/// row (all zeros).
struct GTFilling {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> rows;

  /// Checks every interlacing inequality, the fixed zero bottom row, and
  /// that only last boxes of even-group rows carry negative labels.
  bool is_valid() const;

  /// Rows separated by " / ", e.g. "(6,2,2) / (5,2,-1) / ... / (0)".
  std::string to_string() const;

  friend bool operator==(const GTFilling&, const GTFilling&) = default;
};

using FillingVisitor = std::function<void(const GTFilling&)>;

/// Visits every integer filling of shape (SO(m), SO(n)) with top row
/// `lambda` and zero bottom row. Order: top-down, leftmost box first,
/// ascending labels (lexicographic on the rows).
void for_each_filling(int n, const Partition& lambda, int m, const FillingVisitor& visit);

std::vector<GTFilling> enumerate_fillings(int n, const Partition& lambda, int m);

/// dim [V_lambda]^{SO(m)}: number of fillings, counted by dynamic
/// programming over the intermediate weights of each row.
BigInt count_invariants(int n, const Partition& lambda, int m);

/// dim V_lambda = count_invariants(n, lambda, 1).
BigInt dim_irrep(int n, const Partition& lambda);

/// Dominant weights of SO(n-1) occurring in V_lambda restricted from SO(n).
std::vector<Partition> branch_once(int n, const Partition& lambda);

/// Dimension of GT^{SO(n)}_{SO(n-k)}(lambda) for generic lambda, n <= 2k-1.
/// The closed formula is checked against free_label_count() of the shape.
int gt_polytope_dim(int k, int n);

}  // namespace stiefel
