#include "quandlekit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "quandlekit/errors.hpp"

namespace quandlekit {

Quandle canonical_form(Quandle const& q) {
  std::size_t const n = q.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> table(n * n);
  do {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[perm[x] * n + perm[y]] = static_cast<std::uint16_t>(perm[q.at0(x, y)]);
      }
    }
    if (best.empty() || table < best) {
      best = table;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows[x][y] = static_cast<Point>(best[x * n + y]) + 1;
    }
  }
  return Quandle::from_table(rows);
}

namespace {

using Column = std::vector<std::uint16_t>;

class ColumnSearch {
 public:
  explicit ColumnSearch(std::size_t n) : n_(n) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint16_t> others;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != j) {
          others.push_back(static_cast<std::uint16_t>(x));
        }
      }
      std::vector<Column> list;
      do {
        Column c(n);
        c[j] = static_cast<std::uint16_t>(j);
        for (std::size_t k = 0, x = 0; x < n; ++x) {
          if (x != j) {
            c[x] = others[k++];
          }
        }
        list.push_back(std::move(c));
      } while (std::next_permutation(others.begin(), others.end()));
      candidates_.push_back(std::move(list));
    }
  }

  std::vector<std::vector<Column>> run() {
    std::vector<Column> cols(n_);
    descend(cols);
    return found_;
  }

 private:
  // Forces R_{R_z(y)} = R_z R_y R_z⁻¹ for every pair of assigned columns.
  bool propagate(std::vector<Column>& cols) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t y = 0; y < n_; ++y) {
        if (cols[y].empty()) {
          continue;
        }
        for (std::size_t z = 0; z < n_; ++z) {
          if (cols[z].empty()) {
            continue;
          }
          Column c(n_);
          for (std::size_t x = 0; x < n_; ++x) {
            c[cols[z][x]] = cols[z][cols[y][x]];
          }
          std::size_t const key = cols[z][y];
          if (cols[key].empty()) {
            cols[key] = std::move(c);
            changed = true;
          } else if (cols[key] != c) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void descend(std::vector<Column> const& cols) {
    auto it = std::find_if(cols.begin(), cols.end(),
                           [](Column const& c) { return c.empty(); });
    if (it == cols.end()) {
      found_.push_back(cols);
      return;
    }
    std::size_t const j = static_cast<std::size_t>(it - cols.begin());
    for (auto const& c : candidates_[j]) {
      std::vector<Column> next = cols;
      next[j] = c;
      if (propagate(next)) {
        descend(next);
      }
    }
  }

  std::size_t n_;
  std::vector<std::vector<Column>> candidates_;
  std::vector<std::vector<Column>> found_;
};

}  // namespace

std::vector<Quandle> brute_force_enumerate(std::size_t n,
                                           std::size_t max_order) {
  if (n == 0) {
    throw InvalidArgument("order must be positive");
  }
  if (n > max_order) {
    throw BoundExceeded("brute-force enumeration of order " + std::to_string(n)
                        + " exceeds the bound " + std::to_string(max_order));
  }
  std::vector<Quandle> labelled;
  for (auto const& cols : ColumnSearch(n).run()) {
    std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        rows[x][y] = static_cast<Point>(cols[y][x]) + 1;
      }
    }
    labelled.push_back(Quandle::from_table(rows));
  }
  std::vector<Quandle> out;
  if (n <= 4) {
    std::set<Quandle> seen;
    for (auto const& q : labelled) {
      seen.insert(canonical_form(q));
    }
    out.assign(seen.begin(), seen.end());
  } else {
    std::vector<std::pair<QuandleInvariants, Quandle>> reps;
    for (auto const& q : labelled) {
      QuandleInvariants inv = invariants(q);
      bool duplicate = false;
      for (auto const& [rinv, r] : reps) {
        if (rinv == inv && find_isomorphism(q, r)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        reps.emplace_back(std::move(inv), q);
      }
    }
    for (auto& [inv, q] : reps) {
      out.push_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace quandlekit
