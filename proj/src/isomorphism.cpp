#include <algorithm>

#include "quandlekit/errors.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit {

std::vector<Point> quandle_generators(Quandle const& q) {
  std::size_t const n = q.order();
  std::vector<bool> in(n, false);
  std::vector<std::size_t> members;
  std::vector<Point> gens;
  auto add = [&](std::size_t x) {
    in[x] = true;
    members.push_back(x);
  };
  std::size_t next = 0;
  while (members.size() < n) {
    while (in[next]) {
      ++next;
    }
    gens.push_back(static_cast<Point>(next + 1));
    std::size_t processed = members.size();
    add(next);
    // Each new member is combined with every member before it (both orders).
    for (; processed < members.size(); ++processed) {
      std::size_t const a = members[processed];
      for (std::size_t k = 0; k <= processed; ++k) {
        std::size_t const b = members[k];
        for (std::size_t c : {std::size_t{q.at0(a, b)}, std::size_t{q.at0(b, a)}}) {
          if (!in[c]) {
            add(c);
          }
        }
      }
    }
  }
  return gens;
}

namespace {

std::vector<std::vector<std::size_t>> column_types(Quandle const& q) {
  std::vector<std::vector<std::size_t>> out;
  for (auto const& r : q.right_translations()) {
    out.push_back(r.cycle_type());
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(Quandle const& a, Quandle const& b)
      : a_(a), b_(b), n_(a.order()), f_(n_, -1), used_(n_, false) {
    auto ta = column_types(a);
    auto tb = column_types(b);
    // Compare cycle types through shared ids.
    std::vector<std::vector<std::size_t>> ids;
    auto id_of = [&](std::vector<std::size_t> const& t) {
      auto it = std::find(ids.begin(), ids.end(), t);
      if (it == ids.end()) {
        ids.push_back(t);
        return ids.size() - 1;
      }
      return static_cast<std::size_t>(it - ids.begin());
    };
    for (auto const& t : ta) {
      type_a_.push_back(id_of(t));
    }
    for (auto const& t : tb) {
      type_b_.push_back(id_of(t));
    }
    gens_ = quandle_generators(a);
  }

  std::optional<Permutation> run() {
    if (!search(0)) {
      return std::nullopt;
    }
    std::vector<Point> images(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      images[x] = static_cast<Point>(f_[x] + 1);
    }
    return Permutation::from_images(images);
  }

 private:
  bool search(std::size_t i) {
    while (i < gens_.size() && f_[gens_[i] - 1] >= 0) {
      ++i;
    }
    if (i == gens_.size()) {
      return mapped_.size() == n_;
    }
    std::size_t const g = gens_[i] - 1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || type_a_[g] != type_b_[c]) {
        continue;
      }
      std::size_t const mark = mapped_.size();
      if (assign(g, c) && propagate(mark) && search(i + 1)) {
        return true;
      }
      undo(mark);
    }
    return false;
  }

  bool assign(std::size_t x, std::size_t y) {
    if (used_[y] || type_a_[x] != type_b_[y]) {
      return false;
    }
    f_[x] = static_cast<std::int64_t>(y);
    used_[y] = true;
    mapped_.push_back(x);
    return true;
  }

  // Closes the partial map under f(x ▷ y) = f(x) ▷ f(y).
  bool propagate(std::size_t from) {
    for (std::size_t k = from; k < mapped_.size(); ++k) {
      std::size_t const p = mapped_[k];
      for (std::size_t j = 0; j <= k; ++j) {
        std::size_t const r = mapped_[j];
        if (!check(p, r) || !check(r, p)) {
          return false;
        }
      }
    }
    return true;
  }

  bool check(std::size_t x, std::size_t y) {
    std::size_t const xy = a_.at0(x, y);
    std::size_t const image = b_.at0(static_cast<std::size_t>(f_[x]),
                                     static_cast<std::size_t>(f_[y]));
    if (f_[xy] >= 0) {
      return static_cast<std::size_t>(f_[xy]) == image;
    }
    return assign(xy, image);
  }

  void undo(std::size_t mark) {
    while (mapped_.size() > mark) {
      std::size_t const x = mapped_.back();
      mapped_.pop_back();
      used_[static_cast<std::size_t>(f_[x])] = false;
      f_[x] = -1;
    }
  }

  Quandle const& a_;
  Quandle const& b_;
  std::size_t n_;
  std::vector<std::int64_t> f_;
  std::vector<bool> used_;
  std::vector<std::size_t> mapped_;
  std::vector<std::size_t> type_a_;
  std::vector<std::size_t> type_b_;
  std::vector<Point> gens_;
};

}  // namespace

QuandleInvariants invariants(Quandle const& q) {
  QuandleInvariants inv;
  inv.order = q.order();
  PermGroup const inn = inner_group(q);
  inv.inner_order = inn.order();
  inv.displacement_order = displacement_group(q).order();
  inv.connected = is_transitive(inn);
  inv.column_types = column_types(q);
  std::sort(inv.column_types.begin(), inv.column_types.end());
  return inv;
}

std::optional<Permutation> find_isomorphism(Quandle const& a,
                                            Quandle const& b) {
  if (a.order() != b.order()) {
    return std::nullopt;
  }
  return IsoSearch(a, b).run();
}

std::optional<Permutation> are_isomorphic(Quandle const& a, Quandle const& b) {
  if (a.order() != b.order() || invariants(a) != invariants(b)) {
    return std::nullopt;
  }
  return find_isomorphism(a, b);
}

}  // namespace quandlekit
