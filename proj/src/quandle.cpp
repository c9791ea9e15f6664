#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <numeric>

#include "quandlekit/errors.hpp"

namespace quandlekit {

namespace {

std::string triple(std::size_t x, std::size_t y, std::size_t z) {
  return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ","
         + std::to_string(z + 1) + ")";
}

void check_point(std::size_t n, Point x) {
  if (x < 1 || x > n) {
    throw InvalidArgument("point " + std::to_string(x) + " out of range 1.."
                          + std::to_string(n));
  }
}

}  // namespace

Quandle Quandle::from_table(std::vector<std::vector<Point>> const& rows) {
  std::size_t const n = rows.size();
  if (n == 0) {
    throw InvalidArgument("a quandle needs at least one element");
  }
  if (n > Permutation::max_degree) {
    throw InvalidArgument("order " + std::to_string(n) + " too large");
  }
  Quandle q;
  q.n_ = n;
  q.table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      throw InvalidArgument("row " + std::to_string(x + 1) + " has "
                            + std::to_string(rows[x].size())
                            + " entries, expected " + std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      Point const v = rows[x][y];
      if (v < 1 || v > n) {
        throw InvalidArgument("entry " + std::to_string(v) + " at ("
                              + std::to_string(x + 1) + ","
                              + std::to_string(y + 1) + ") out of range 1.."
                              + std::to_string(n));
      }
      q.table_[x * n + y] = static_cast<std::uint16_t>(v - 1);
    }
  }
  q.validate();
  return q;
}

Quandle Quandle::from_columns(std::vector<Permutation> const& columns) {
  std::size_t const n = columns.size();
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t y = 0; y < n; ++y) {
    if (columns[y].degree() != n) {
      throw InvalidArgument("column " + std::to_string(y + 1) + " has degree "
                            + std::to_string(columns[y].degree())
                            + ", expected " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
      rows[x][y] = static_cast<Point>(columns[y].image0(x)) + 1;
    }
  }
  return from_table(rows);
}

void Quandle::validate() const {
  std::size_t const n = n_;
  for (std::size_t x = 0; x < n; ++x) {
    if (at0(x, x) != x) {
      throw AxiomViolation("idempotence fails at x = " + std::to_string(x + 1)
                           + ": x ▷ x = " + std::to_string(at0(x, x) + 1));
    }
  }
  std::vector<std::int64_t> seen(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t x = 0; x < n; ++x) {
      auto const v = at0(x, y);
      if (seen[v] >= 0) {
        throw AxiomViolation(
            "right translation R_" + std::to_string(y + 1)
            + " is not a bijection: " + std::to_string(seen[v] + 1) + " and "
            + std::to_string(x + 1) + " both map to " + std::to_string(v + 1));
      }
      seen[v] = static_cast<std::int64_t>(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto const xy = at0(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        if (at0(xy, z) != at0(at0(x, z), at0(y, z))) {
          throw AxiomViolation("right distributivity fails at (x,y,z) = "
                               + triple(x, y, z));
        }
      }
    }
  }
}

Point Quandle::operator()(Point x, Point y) const {
  check_point(n_, x);
  check_point(n_, y);
  return static_cast<Point>(at0(x - 1, y - 1)) + 1;
}

Point Quandle::left_divide(Point x, Point y) const {
  check_point(n_, x);
  check_point(n_, y);
  for (std::size_t z = 0; z < n_; ++z) {
    if (at0(z, y - 1) == x - 1) {
      return static_cast<Point>(z) + 1;
    }
  }
  throw Error("unreachable: column is not a bijection");
}

std::vector<std::vector<Point>> Quandle::rows() const {
  std::vector<std::vector<Point>> out(n_, std::vector<Point>(n_));
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = 0; y < n_; ++y) {
      out[x][y] = static_cast<Point>(at0(x, y)) + 1;
    }
  }
  return out;
}

Permutation Quandle::right_translation(Point y) const {
  check_point(n_, y);
  std::vector<Permutation::value_type> raw(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    raw[x] = at0(x, y - 1);
  }
  return Permutation::from_raw(std::move(raw));
}

std::vector<Permutation> Quandle::right_translations() const {
  std::vector<Permutation> out;
  out.reserve(n_);
  for (Point y = 1; y <= n_; ++y) {
    out.push_back(right_translation(y));
  }
  return out;
}

Quandle trivial_quandle(std::size_t n) {
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(rows[x].begin(), rows[x].end(), static_cast<Point>(x + 1));
  }
  return Quandle::from_table(rows);
}

Quandle dihedral_quandle(std::size_t n) {
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows[x][y] = static_cast<Point>((2 * y + n - x) % n + 1);
    }
  }
  return Quandle::from_table(rows);
}

Quandle relabel(Quandle const& q, Permutation const& f) {
  std::size_t const n = q.order();
  if (f.degree() != n) {
    throw InvalidArgument("relabelling has degree " + std::to_string(f.degree())
                          + ", expected " + std::to_string(n));
  }
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      rows[f.image0(x)][f.image0(y)] = static_cast<Point>(f.image0(q.at0(x, y))) + 1;
    }
  }
  return Quandle::from_table(rows);
}

PermGroup inner_group(Quandle const& q) {
  return PermGroup(q.right_translations());
}

PermGroup displacement_group(Quandle const& q) {
  auto const r = q.right_translations();
  Permutation const r1_inv = inverse(r[0]);
  std::vector<Permutation> gens;
  for (std::size_t y = 1; y < r.size(); ++y) {
    Permutation g = compose(r1_inv, r[y]);
    if (!g.is_identity()) {
      gens.push_back(std::move(g));
    }
  }
  if (gens.empty()) {
    return PermGroup::trivial(q.order());
  }
  return PermGroup(std::move(gens));
}

bool is_connected(Quandle const& q) {
  return is_transitive(inner_group(q));
}

bool is_faithful(Quandle const& q) {
  auto r = q.right_translations();
  std::sort(r.begin(), r.end());
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool is_latin(Quandle const& q) {
  std::size_t const n = q.order();
  std::vector<bool> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t y = 0; y < n; ++y) {
      auto const v = q.at0(x, y);
      if (seen[v]) {
        return false;
      }
      seen[v] = true;
    }
  }
  return true;
}

Congruence::Congruence(std::vector<std::size_t> class_of)
    : class_of_(std::move(class_of)) {
  std::vector<std::size_t> ids;
  std::vector<std::size_t> renamed(class_of_.size());
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    auto it = std::find(ids.begin(), ids.end(), class_of_[x]);
    if (it == ids.end()) {
      ids.push_back(class_of_[x]);
      renamed[x] = ids.size() - 1;
    } else {
      renamed[x] = static_cast<std::size_t>(it - ids.begin());
    }
  }
  class_of_ = std::move(renamed);
  count_ = ids.size();
}

std::vector<std::vector<Point>> Congruence::classes() const {
  std::vector<std::vector<Point>> out(count_);
  for (std::size_t x = 0; x < class_of_.size(); ++x) {
    out[class_of_[x]].push_back(static_cast<Point>(x + 1));
  }
  return out;
}

bool Congruence::is_compatible_with(Quandle const& q) const {
  std::size_t const n = q.order();
  if (n != order()) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_of_[i] != class_of_[j]) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (class_of_[q.at0(i, k)] != class_of_[q.at0(j, k)]
            || class_of_[q.at0(k, i)] != class_of_[q.at0(k, j)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

class Closure {
 public:
  explicit Closure(Quandle const& q) : q_(q), parent_(q.order()) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  void merge(std::size_t a, std::size_t b) {
    if (unite(a, b)) {
      queue_.emplace_back(a, b);
    }
  }

  // Stops early once everything has collapsed.
  void run() {
    std::size_t const n = q_.order();
    while (!queue_.empty() && classes_ > 1) {
      auto const [a, b] = queue_.back();
      queue_.pop_back();
      for (std::size_t k = 0; k < n; ++k) {
        if (unite(q_.at0(a, k), q_.at0(b, k))) {
          queue_.emplace_back(q_.at0(a, k), q_.at0(b, k));
        }
        if (unite(q_.at0(k, a), q_.at0(k, b))) {
          queue_.emplace_back(q_.at0(k, a), q_.at0(k, b));
        }
      }
    }
  }

  std::size_t class_count() const noexcept { return classes_; }

  Congruence result() {
    std::vector<std::size_t> ids(parent_.size());
    for (std::size_t x = 0; x < ids.size(); ++x) {
      ids[x] = find(x);
    }
    return Congruence(std::move(ids));
  }

 private:
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    parent_[std::max(a, b)] = std::min(a, b);
    --classes_;
    return true;
  }

  Quandle const& q_;
  std::vector<std::size_t> parent_;
  std::size_t classes_ = parent_.size();
  std::vector<std::pair<std::size_t, std::size_t>> queue_;
};

}  // namespace

Congruence congruence_closure(
    Quandle const& q, std::vector<std::pair<Point, Point>> const& pairs) {
  Closure c(q);
  for (auto const& [a, b] : pairs) {
    check_point(q.order(), a);
    check_point(q.order(), b);
    c.merge(a - 1, b - 1);
  }
  c.run();
  return c.result();
}

bool is_simple(Quandle const& q) {
  std::size_t const n = q.order();
  if (n <= 1) {
    return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Closure c(q);
      c.merge(a, b);
      c.run();
      if (c.class_count() != 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_primitive_quandle(Quandle const& q) {
  return is_primitive(inner_group(q));
}

bool is_quasiprimitive_quandle(Quandle const& q) {
  return is_faithful(q) && is_quasiprimitive(inner_group(q));
}

}  // namespace quandlekit
