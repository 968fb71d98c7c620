#include "stiefel/gt.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>

#include "stiefel/errors.hpp"

namespace stiefel {

GTShape::GTShape(int n, int m) : n_(n), m_(m) {
  if (m < 0 || m > n) {
    throw DomainError("GT shape needs 0 <= m <= n, got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
  }
}

BoxRule GTShape::rule(int row, int box) const {
  const int above = row - 1;
  const int above_boxes = boxes(above);
  if (box + 1 < above_boxes) {
    const bool ne_is_signed = group(above) % 2 == 0 && box + 1 == above_boxes - 1;
    return {ne_is_signed ? LowerBound::AbsNeighbor : LowerBound::Neighbor, box, box + 1};
  }
  return {LowerBound::Mirror, box, -1};
}

std::vector<std::vector<bool>> GTShape::forced_zero() const {
  const int rows = row_count();
  std::vector<std::vector<bool>> nonneg(rows), nonpos(rows);
  for (int i = 0; i < rows; ++i) {
    nonneg[i].assign(boxes(i), false);
    nonpos[i].assign(boxes(i), false);
  }
  nonneg[rows - 1].assign(boxes(rows - 1), true);
  nonpos[rows - 1].assign(boxes(rows - 1), true);

  // a >= b  : b >= 0 => a >= 0,   a <= 0 => b <= 0
  // a >= |b|: a >= 0,             a <= 0 => b == 0
  bool changed = true;
  auto set = [&changed](std::vector<bool>::reference flag) {
    if (!flag) {
      flag = true;
      changed = true;
    }
  };
  auto geq = [&](int ra, int a, int rb, int b) {
    if (nonneg[rb][b]) set(nonneg[ra][a]);
    if (nonpos[ra][a]) set(nonpos[rb][b]);
  };
  auto geq_abs = [&](int ra, int a, int rb, int b) {
    set(nonneg[ra][a]);
    if (nonpos[ra][a]) {
      set(nonneg[rb][b]);
      set(nonpos[rb][b]);
    }
  };
  while (changed) {
    changed = false;
    for (int row = 1; row < rows; ++row) {
      for (int box = 0; box < boxes(row); ++box) {
        const BoxRule r = rule(row, box);
        switch (r.kind) {
          case LowerBound::Neighbor:
            geq(row - 1, r.north_west, row, box);
            geq(row, box, row - 1, r.north_east);
            break;
          case LowerBound::AbsNeighbor:
            geq(row - 1, r.north_west, row, box);
            geq_abs(row, box, row - 1, r.north_east);
            break;
          case LowerBound::Mirror:
            geq_abs(row - 1, r.north_west, row, box);
            break;
        }
      }
    }
  }

  std::vector<std::vector<bool>> zero(rows);
  for (int i = 0; i < rows; ++i) {
    zero[i].resize(boxes(i));
    for (int b = 0; b < boxes(i); ++b) zero[i][b] = nonneg[i][b] && nonpos[i][b];
  }
  return zero;
}

int GTShape::free_label_count() const {
  const auto zero = forced_zero();
  int count = 0;
  for (int row = 1; row + 1 < row_count(); ++row) {
    for (bool z : zero[row]) count += z ? 0 : 1;
  }
  return count;
}

namespace {

using Row = std::vector<int>;

struct Interval {
  int lo;
  int hi;
};

Interval box_interval(const BoxRule& r, const Row& above) {
  const int upper = above[r.north_west];
  switch (r.kind) {
    case LowerBound::Neighbor:
      return {above[r.north_east], upper};
    case LowerBound::AbsNeighbor:
      return {std::abs(above[r.north_east]), upper};
    case LowerBound::Mirror:
      break;
  }
  return {-upper, upper};
}

void validate(int n, const Partition& lambda, int m) {
  if (m < 0 || m > n) {
    throw DomainError("need 0 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
  require_dominant_weight(n, lambda);
}

class FillingWalker {
 public:
  FillingWalker(const GTShape& shape, const FillingVisitor& visit) : shape_(shape), visit_(visit) {
    filling_.n = shape.top_group();
    filling_.m = shape.bottom_group();
    filling_.rows.resize(shape.row_count());
  }

  void run(const Row& top) {
    filling_.rows[0] = top;
    descend(1);
  }

 private:
  void descend(int row) {
    if (row == shape_.row_count()) {
      visit_(filling_);
      return;
    }
    const Row& above = filling_.rows[row - 1];
    const int count = shape_.boxes(row);
    std::vector<Interval> ranges(count);
    for (int b = 0; b < count; ++b) ranges[b] = box_interval(shape_.rule(row, b), above);
    Row& current = filling_.rows[row];
    current.assign(count, 0);
    if (row + 1 == shape_.row_count()) {
      for (const auto& iv : ranges) {
        if (iv.lo > 0 || iv.hi < 0) return;
      }
      descend(row + 1);
      return;
    }
    choose(row, 0, ranges);
  }

  void choose(int row, int box, const std::vector<Interval>& ranges) {
    Row& current = filling_.rows[row];
    if (box == static_cast<int>(ranges.size())) {
      descend(row + 1);
      return;
    }
    const bool may_be_negative = shape_.group(row) % 2 == 0 && box + 1 == shape_.boxes(row);
    for (int v = ranges[box].lo; v <= ranges[box].hi; ++v) {
      if (v < 0 && !may_be_negative) {
        throw ConsistencyError("negative label outside the last box of an even row");
      }
      current[box] = v;
      choose(row, box + 1, ranges);
    }
  }

  const GTShape& shape_;
  const FillingVisitor& visit_;
  GTFilling filling_;
};

using RowCounts = std::map<Row, BigInt>;

constexpr std::int64_t kMaxDenseCells = 64'000'000;

// Counts of rows one step down: result[l] = sum of upper[u] over all u that
// interlace with l. Given l, the admissible u form a box, so a summed-area
// table over the upper rows answers each l with 2^s lookups.
RowCounts branch_counts(const GTShape& shape, int upper_row, const RowCounts& upper) {
  const int lower_row = upper_row + 1;
  const int s = shape.boxes(upper_row);
  const int t = shape.boxes(lower_row);
  const bool is_bottom = lower_row + 1 == shape.row_count();
  RowCounts result;
  if (upper.empty()) return result;

  if (t == 0) {
    BigInt total = 0;
    for (const auto& [row, c] : upper) total += c;
    if (total != 0) result.emplace(Row{}, total);
    return result;
  }

  std::vector<int> lo(s, INT_MAX), hi(s, INT_MIN);
  for (const auto& [row, c] : upper) {
    for (int j = 0; j < s; ++j) {
      lo[j] = std::min(lo[j], row[j]);
      hi[j] = std::max(hi[j], row[j]);
    }
  }
  std::vector<std::int64_t> stride(s);
  std::int64_t cells = 1;
  for (int j = s - 1; j >= 0; --j) {
    stride[j] = cells;
    cells *= hi[j] - lo[j] + 1;
    if (cells > kMaxDenseCells) {
      throw SizeError("row state space too large for dense branching table");
    }
  }

  std::vector<BigInt> table(cells);
  for (const auto& [row, c] : upper) {
    std::int64_t idx = 0;
    for (int j = 0; j < s; ++j) idx += (row[j] - lo[j]) * stride[j];
    table[idx] = c;
  }
  for (int j = 0; j < s; ++j) {
    const std::int64_t extent = hi[j] - lo[j] + 1;
    for (std::int64_t idx = 0; idx < cells; ++idx) {
      if ((idx / stride[j]) % extent != 0) table[idx] += table[idx - stride[j]];
    }
  }

  std::vector<BoxRule> rules(t);
  for (int b = 0; b < t; ++b) rules[b] = shape.rule(lower_row, b);

  std::vector<int> box_lo(s), box_hi(s);
  auto query = [&](const Row& l) -> BigInt {
    std::fill(box_lo.begin(), box_lo.end(), INT_MIN);
    std::fill(box_hi.begin(), box_hi.end(), INT_MAX);
    for (int b = 0; b < t; ++b) {
      const BoxRule& r = rules[b];
      const int nw = r.north_west;
      if (r.kind == LowerBound::Mirror) {
        box_lo[nw] = std::max(box_lo[nw], std::abs(l[b]));
      } else {
        box_lo[nw] = std::max(box_lo[nw], l[b]);
        box_hi[r.north_east] = std::min(box_hi[r.north_east], l[b]);
        if (r.kind == LowerBound::AbsNeighbor) {
          box_lo[r.north_east] = std::max(box_lo[r.north_east], -l[b]);
        }
      }
    }
    for (int j = 0; j < s; ++j) {
      box_lo[j] = std::max(box_lo[j], lo[j]);
      box_hi[j] = std::min(box_hi[j], hi[j]);
      if (box_lo[j] > box_hi[j]) return 0;
    }
    BigInt sum = 0;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
      std::int64_t idx = 0;
      bool outside = false;
      for (int j = 0; j < s; ++j) {
        int coord = box_hi[j];
        if (mask & (1u << j)) {
          coord = box_lo[j] - 1;
          if (coord < lo[j]) {
            outside = true;
            break;
          }
        }
        idx += (coord - lo[j]) * stride[j];
      }
      if (outside) continue;
      if (std::popcount(mask) % 2 == 0) {
        sum += table[idx];
      } else {
        sum -= table[idx];
      }
    }
    return sum;
  };

  if (is_bottom) {
    const Row zeros(t, 0);
    BigInt c = query(zeros);
    if (c != 0) result.emplace(zeros, c);
    return result;
  }

  std::vector<int> cand_lo(t), cand_hi(t);
  for (int b = 0; b < t; ++b) {
    const BoxRule& r = rules[b];
    cand_hi[b] = hi[r.north_west];
    switch (r.kind) {
      case LowerBound::Neighbor:
        cand_lo[b] = lo[r.north_east];
        break;
      case LowerBound::AbsNeighbor: {
        const int a = lo[r.north_east], z = hi[r.north_east];
        cand_lo[b] = (a <= 0 && z >= 0) ? 0 : std::min(std::abs(a), std::abs(z));
        break;
      }
      case LowerBound::Mirror:
        cand_lo[b] = -hi[r.north_west];
        break;
    }
    if (cand_lo[b] > cand_hi[b]) return result;
  }

  Row l = cand_lo;
  while (true) {
    BigInt c = query(l);
    if (c != 0) result.emplace_hint(result.end(), l, std::move(c));
    int b = t - 1;
    while (b >= 0 && l[b] == cand_hi[b]) {
      l[b] = cand_lo[b];
      --b;
    }
    if (b < 0) break;
    ++l[b];
  }
  return result;
}

}  // namespace

bool GTFilling::is_valid() const {
  if (m < 0 || m > n) return false;
  const GTShape shape(n, m);
  if (static_cast<int>(rows.size()) != shape.row_count()) return false;
  for (int row = 0; row < shape.row_count(); ++row) {
    if (static_cast<int>(rows[row].size()) != shape.boxes(row)) return false;
  }
  if (!is_dominant_weight(n, Partition(rows[0]))) return false;
  for (int v : rows.back()) {
    if (v != 0) return false;
  }
  for (int row = 1; row < shape.row_count(); ++row) {
    for (int b = 0; b < shape.boxes(row); ++b) {
      const Interval iv = box_interval(shape.rule(row, b), rows[row - 1]);
      const int v = rows[row][b];
      if (v < iv.lo || v > iv.hi) return false;
      const bool may_be_negative = shape.group(row) % 2 == 0 && b + 1 == shape.boxes(row);
      if (v < 0 && !may_be_negative) return false;
    }
  }
  return true;
}

std::string GTFilling::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) s += " / ";
    s += Partition(rows[i]).to_string();
  }
  return s;
}

void for_each_filling(int n, const Partition& lambda, int m, const FillingVisitor& visit) {
  validate(n, lambda, m);
  const GTShape shape(n, m);
  if (shape.row_count() == 1) {
    if (lambda.is_zero()) visit(GTFilling{n, m, {lambda.parts()}});
    return;
  }
  FillingWalker walker(shape, visit);
  walker.run(lambda.parts());
}

std::vector<GTFilling> enumerate_fillings(int n, const Partition& lambda, int m) {
  std::vector<GTFilling> out;
  for_each_filling(n, lambda, m, [&out](const GTFilling& f) { out.push_back(f); });
  return out;
}

BigInt count_invariants(int n, const Partition& lambda, int m) {
  validate(n, lambda, m);
  const GTShape shape(n, m);
  if (shape.row_count() == 1) return lambda.is_zero() ? 1 : 0;
  RowCounts counts{{lambda.parts(), BigInt(1)}};
  for (int row = 0; row + 1 < shape.row_count(); ++row) {
    counts = branch_counts(shape, row, counts);
  }
  if (counts.empty()) return 0;
  return counts.begin()->second;
}

BigInt dim_irrep(int n, const Partition& lambda) {
  if (n < 1) {
    throw DomainError("dim_irrep needs n >= 1, got " + std::to_string(n));
  }
  return count_invariants(n, lambda, 1);
}

std::vector<Partition> branch_once(int n, const Partition& lambda) {
  require_dominant_weight(n, lambda);
  if (n < 1) {
    throw DomainError("branch_once needs n >= 1");
  }
  const GTShape shape(n, n - 1);
  const int t = shape.boxes(1);
  std::vector<Interval> ranges(t);
  for (int b = 0; b < t; ++b) ranges[b] = box_interval(shape.rule(1, b), lambda.parts());
  std::vector<Partition> out;
  Row mu(t);
  std::function<void(int)> pick = [&](int b) {
    if (b == t) {
      out.emplace_back(mu);
      return;
    }
    for (int v = ranges[b].lo; v <= ranges[b].hi; ++v) {
      mu[b] = v;
      pick(b + 1);
    }
  };
  pick(0);
  return out;
}

int gt_polytope_dim(int k, int n) {
  if (k < 1 || n < k || n > 2 * k - 1) {
    throw DomainError("GT polytope dimension needs 1 <= k <= n <= 2k-1, got k=" +
                      std::to_string(k) + ", n=" + std::to_string(n));
  }
  const int r = n / 2;
  const int formula = n % 2 == 0 ? r * (2 * k - r) - k * (k + 1) / 2
                                 : r * (2 * k - r - 1) - k * (k - 1) / 2;
  const int counted = GTShape(n, n - k).free_label_count();
  if (formula != counted) {
    throw ConsistencyError("GT polytope dimension: formula gives " + std::to_string(formula) +
                           ", box count gives " + std::to_string(counted));
  }
  return formula;
}

}  // namespace stiefel
