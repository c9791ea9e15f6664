#include "quandlekit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "quandlekit/errors.hpp"

namespace quandlekit {

using Level = PermGroup::Level;

// Incremental deterministic Schreier-Sims.
class ChainBuilder {
 public:
  explicit ChainBuilder(std::size_t degree) : degree_(degree) {}

  void add_base_point(std::uint16_t b) {
    Level level;
    level.base = b;
    levels_.push_back(std::move(level));
    rebuild_orbit(levels_.size() - 1);
  }

  // Adds g and restores the chain invariants. Returns false when g was
  // already a member.
  bool add_generator(Permutation const& g) {
    auto [residue, j] = sift(g, 0);
    if (residue.is_identity()) {
      return false;
    }
    if (j == levels_.size()) {
      append_level_for(residue);
    }
    for (std::size_t l = 0; l <= j; ++l) {
      levels_[l].strong.push_back(residue);
      rebuild_orbit(l);
    }
    schreier_sims(j);
    return true;
  }

  void set_target_order(Order const& order) { target_ = order; }

  bool reached_target() const { return target_ && current_order() == *target_; }

  Order current_order() const {
    Order o = 1;
    for (auto const& l : levels_) {
      o *= l.orbit.size();
    }
    return o;
  }

  std::vector<Level> take_levels() { return std::move(levels_); }

 private:
  std::pair<Permutation, std::size_t> sift(Permutation g,
                                           std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      auto const& level = levels_[i];
      std::int32_t const pos = level.position[g.image0(level.base)];
      if (pos < 0) {
        return {std::move(g), i};
      }
      g = compose(g, level.transversal_inv[static_cast<std::size_t>(pos)]);
    }
    return {std::move(g), levels_.size()};
  }

  void append_level_for(Permutation const& residue) {
    // The residue fixes every base point, so its first moved point is new.
    Point const b = residue.first_moved();
    add_base_point(static_cast<std::uint16_t>(b - 1));
  }

  void rebuild_orbit(std::size_t i) {
    Level& level = levels_[i];
    level.orbit.assign(1, level.base);
    level.position.assign(degree_, -1);
    level.position[level.base] = 0;
    level.transversal.assign(1, Permutation(degree_));
    level.transversal_inv.assign(1, Permutation(degree_));
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (auto const& s : level.strong) {
        auto const y = s.image0(level.orbit[k]);
        if (level.position[y] < 0) {
          level.position[y] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(y);
          level.transversal.push_back(compose(level.transversal[k], s));
          level.transversal_inv.push_back(inverse(level.transversal.back()));
        }
      }
    }
  }

  // Levels above `start` are complete for the groups their strong generators
  // generate.
  void schreier_sims(std::size_t start) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
    while (i >= 0) {
      if (reached_target()) {
        return;
      }
      auto const li = static_cast<std::size_t>(i);
      bool complete = true;
      for (std::size_t k = 0; complete && k < levels_[li].orbit.size(); ++k) {
        for (std::size_t s = 0; s < levels_[li].strong.size(); ++s) {
          Level const& level = levels_[li];
          Permutation const ux = compose(level.transversal[k], level.strong[s]);
          auto const y = level.strong[s].image0(level.orbit[k]);
          auto const pos = static_cast<std::size_t>(level.position[y]);
          if (ux == level.transversal[pos]) {
            continue;
          }
          auto [residue, j] = sift(compose(ux, level.transversal_inv[pos]), li + 1);
          if (residue.is_identity()) {
            continue;
          }
          if (j == levels_.size()) {
            append_level_for(residue);
          }
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels_[l].strong.push_back(residue);
            rebuild_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(j);
          complete = false;
          break;
        }
      }
      if (complete) {
        --i;
      }
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
  std::optional<Order> target_;

  friend class PermGroup;
};

namespace {

void check_degree(std::size_t expected, Permutation const& p) {
  if (p.degree() != expected) {
    throw InvalidArgument("degree mismatch: expected "
                          + std::to_string(expected) + ", got "
                          + std::to_string(p.degree()));
  }
}

void check_point(std::size_t degree, Point x) {
  if (x < 1 || x > degree) {
    throw InvalidArgument("point " + std::to_string(x) + " out of range 1.."
                          + std::to_string(degree));
  }
}

}  // namespace

PermGroup PermGroup::with_base_prefix(std::vector<Permutation> generators,
                                      std::vector<Point> const& prefix,
                                      std::optional<Order> const& known_order) {
  if (generators.empty()) {
    throw InvalidArgument("a group needs at least one generator");
  }
  std::size_t const n = generators.front().degree();
  if (n == 0) {
    throw InvalidArgument("degree must be positive");
  }
  for (auto const& g : generators) {
    check_degree(n, g);
  }
  ChainBuilder builder(n);
  for (Point b : prefix) {
    check_point(n, b);
    builder.add_base_point(static_cast<std::uint16_t>(b - 1));
  }
  if (known_order) {
    builder.set_target_order(*known_order);
  }
  for (auto const& g : generators) {
    if (builder.reached_target()) {
      break;
    }
    builder.add_generator(g);
  }
  PermGroup G;
  G.degree_ = n;
  G.generators_ = std::move(generators);
  G.order_ = builder.current_order();
  G.levels_ = builder.take_levels();
  return G;
}

PermGroup::PermGroup(std::vector<Permutation> generators)
    : PermGroup(with_base_prefix(std::move(generators), {})) {}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup({Permutation(degree)});
}

std::uint64_t PermGroup::order_u64() const {
  if (order_ > std::numeric_limits<std::uint64_t>::max()) {
    throw BoundExceeded("group order " + order_.str() + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(order_);
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (auto const& l : levels_) {
    out.push_back(static_cast<Point>(l.base) + 1);
  }
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (auto const& l : levels_) {
    out.push_back(l.orbit.size());
  }
  return out;
}

std::vector<Permutation> const& PermGroup::strong_generators(
    std::size_t level) const {
  return levels_.at(level).strong;
}

bool PermGroup::contains(Permutation const& p) const {
  check_degree(degree_, p);
  Permutation g = p;
  for (auto const& level : levels_) {
    std::int32_t const pos = level.position[g.image0(level.base)];
    if (pos < 0) {
      return false;
    }
    g = compose(g, level.transversal_inv[static_cast<std::size_t>(pos)]);
  }
  return g.is_identity();
}

bool PermGroup::contains_all(std::vector<Permutation> const& ps) const {
  return std::all_of(ps.begin(), ps.end(),
                     [this](Permutation const& p) { return contains(p); });
}

std::uint64_t PermGroup::element_index(Permutation const& g) const {
  check_degree(degree_, g);
  // Track only the images of base points while sifting.
  std::size_t const k = levels_.size();
  std::vector<std::uint16_t> images(k);
  for (std::size_t i = 0; i < k; ++i) {
    images[i] = g.image0(levels_[i].base);
  }
  std::uint64_t index = 0;
  std::uint64_t radix = 1;
  for (std::size_t i = 0; i < k; ++i) {
    auto const& level = levels_[i];
    std::int32_t const pos = level.position[images[i]];
    if (pos < 0) {
      throw InvalidArgument("permutation is not a group element");
    }
    auto const& uinv = level.transversal_inv[static_cast<std::size_t>(pos)];
    for (std::size_t j = i + 1; j < k; ++j) {
      images[j] = uinv.image0(images[j]);
    }
    index += radix * static_cast<std::uint64_t>(pos);
    radix *= level.orbit.size();
  }
  return index;
}

Permutation PermGroup::element_at(std::uint64_t index) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    digits[i] = index % levels_[i].orbit.size();
    index /= levels_[i].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    g = compose(g, levels_[i].transversal[digits[i]]);
  }
  return g;
}

void PermGroup::for_each_element(
    std::function<void(Permutation const&)> const& f,
    std::uint64_t bound) const {
  if (order_ > bound) {
    throw BoundExceeded("group of order " + order_.str()
                        + " exceeds the enumeration bound "
                        + std::to_string(bound));
  }
  std::size_t const k = levels_.size();
  if (k == 0) {
    f(Permutation(degree_));
    return;
  }
  // partial[i] = u_{k-1} * ... * u_i for the current digits.
  std::vector<std::size_t> digits(k, 0);
  std::vector<Permutation> partial(k + 1, Permutation(degree_));
  for (std::size_t i = k; i-- > 0;) {
    partial[i] = compose(partial[i + 1], levels_[i].transversal[0]);
  }
  while (true) {
    f(partial[0]);
    std::size_t i = 0;
    while (i < k && ++digits[i] == levels_[i].orbit.size()) {
      digits[i] = 0;
      ++i;
    }
    if (i == k) {
      return;
    }
    for (std::size_t j = i + 1; j-- > 0;) {
      partial[j] = compose(partial[j + 1], levels_[j].transversal[digits[j]]);
    }
  }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t bound) const {
  std::vector<Permutation> out;
  for_each_element([&](Permutation const& g) { out.push_back(g); }, bound);
  return out;
}

bool operator==(PermGroup const& a, PermGroup const& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_
         && a.contains_all(b.generators_);
}

bool is_subgroup(PermGroup const& H, PermGroup const& G) {
  return H.degree() == G.degree() && G.contains_all(H.generators());
}

bool is_normal(PermGroup const& G, PermGroup const& H) {
  if (!is_subgroup(H, G)) {
    return false;
  }
  for (auto const& h : H.generators()) {
    for (auto const& g : G.generators()) {
      if (!H.contains(conjugate(h, g))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::optional<Permutation>> orbit_transversal(PermGroup const& G,
                                                          Point point) {
  check_point(G.degree(), point);
  std::vector<std::optional<Permutation>> u(G.degree());
  u[point - 1] = Permutation(G.degree());
  std::vector<Point> queue{point};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const& s : G.generators()) {
      Point const y = s(queue[k]);
      if (!u[y - 1]) {
        u[y - 1] = compose(*u[queue[k] - 1], s);
        queue.push_back(y);
      }
    }
  }
  return u;
}

std::vector<Point> orbit(PermGroup const& G, Point point) {
  check_point(G.degree(), point);
  std::vector<bool> seen(G.degree(), false);
  std::vector<Point> queue{point};
  seen[point - 1] = true;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const& s : G.generators()) {
      Point const y = s(queue[k]);
      if (!seen[y - 1]) {
        seen[y - 1] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<Point>> orbits(PermGroup const& G) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(G.degree(), false);
  for (Point x = 1; x <= G.degree(); ++x) {
    if (!seen[x - 1]) {
      auto o = orbit(G, x);
      for (Point y : o) {
        seen[y - 1] = true;
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

PermGroup stabilizer(PermGroup const& G, Point point) {
  check_point(G.degree(), point);
  PermGroup chain = (!G.levels_.empty() && G.levels_[0].base == point - 1)
                        ? G
                        : PermGroup::with_base_prefix(G.generators(), {point},
                                                      G.order());
  PermGroup S;
  S.degree_ = G.degree();
  S.levels_.assign(chain.levels_.begin() + 1, chain.levels_.end());
  S.order_ = 1;
  for (auto const& l : S.levels_) {
    S.order_ *= l.orbit.size();
  }
  S.generators_ = S.levels_.empty() ? std::vector<Permutation>{}
                                    : S.levels_.front().strong;
  if (S.generators_.empty()) {
    S.generators_.emplace_back(G.degree());
  }
  return S;
}

PermGroup normal_closure(PermGroup const& G,
                         std::vector<Permutation> const& seeds) {
  for (auto const& s : seeds) {
    check_degree(G.degree(), s);
    if (!G.contains(s)) {
      throw InvalidArgument("normal closure seed " + s.to_cycles()
                            + " is not in the group");
    }
  }
  ChainBuilder builder(G.degree());
  builder.set_target_order(G.order());
  std::vector<Permutation> gens;
  for (auto const& s : seeds) {
    if (builder.add_generator(s)) {
      gens.push_back(s);
    }
  }
  for (std::size_t k = 0; k < gens.size() && !builder.reached_target(); ++k) {
    for (auto const& g : G.generators()) {
      Permutation c = conjugate(gens[k], g);
      if (builder.add_generator(c)) {
        gens.push_back(std::move(c));
        if (builder.reached_target()) {
          break;
        }
      }
    }
  }
  if (gens.empty()) {
    return PermGroup::trivial(G.degree());
  }
  if (builder.reached_target()) {
    return G;
  }
  return PermGroup(std::move(gens));
}

PermGroup derived_subgroup(PermGroup const& G) {
  auto const& gens = G.generators();
  std::vector<Permutation> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) {
        seeds.push_back(std::move(c));
      }
    }
  }
  return normal_closure(G, seeds);
}

namespace {

// Backtrack search for the centre along G's chain. On each G-orbit a central
// element is a G-equivariant map, fixed by the image of one representative,
// so only those images are tried.
class CenterSearch {
 public:
  CenterSearch(PermGroup const& G, std::uint64_t bound)
      : G_(G), n_(G.degree()), bound_(bound) {
    // Orbits with transversals from a representative.
    orbit_of_.assign(n_, -1);
    for (Point x = 1; x <= n_; ++x) {
      if (orbit_of_[x - 1] >= 0) {
        continue;
      }
      auto u = orbit_transversal(G, x);
      std::vector<std::uint16_t> points;
      std::vector<Permutation> to_point;
      for (std::size_t y = 0; y < n_; ++y) {
        if (u[y]) {
          orbit_of_[y] = static_cast<std::int32_t>(orbit_points_.size());
          points.push_back(static_cast<std::uint16_t>(y));
          to_point.push_back(*u[y]);
        }
      }
      orbit_points_.push_back(std::move(points));
      orbit_maps_.push_back(std::move(to_point));
    }
    candidates_.resize(orbit_points_.size());
    computed_.assign(orbit_points_.size(), false);
  }

  std::vector<Permutation> run() {
    chosen_.assign(orbit_points_.size(), -1);
    image_.assign(n_, 0);
    std::vector<std::size_t> digits;
    descend(0, Permutation(n_), digits);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  // Equivariant maps on orbit o, each given as images of the orbit points.
  std::vector<std::vector<std::uint16_t>> const& candidates(std::size_t o) {
    if (computed_[o]) {
      return candidates_[o];
    }
    computed_[o] = true;
    auto const& points = orbit_points_[o];
    auto const& maps = orbit_maps_[o];
    // A central element may carry this orbit onto another one of equal size.
    for (std::size_t c = 0; c < n_; ++c) {
      if (orbit_points_[static_cast<std::size_t>(orbit_of_[c])].size()
          != points.size()) {
        continue;
      }
      std::vector<std::uint16_t> z(n_, 0);
      for (std::size_t k = 0; k < points.size(); ++k) {
        z[points[k]] = maps[k].image0(static_cast<std::uint16_t>(c));
      }
      bool ok = true;
      for (std::size_t k = 0; ok && k < points.size(); ++k) {
        for (auto const& s : G_.generators()) {
          if (z[s.image0(points[k])] != s.image0(z[points[k]])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        candidates_[o].push_back(std::move(z));
      }
    }
    return candidates_[o];
  }

  void count_node() {
    if (++nodes_ > bound_) {
      throw BoundExceeded("centre search exceeds the bound "
                          + std::to_string(bound_));
    }
  }

  // `residual` is the inverse of the transversal product chosen so far; the
  // sifted image of base point i is residual(image(base_i)).
  void descend(std::size_t level, Permutation const& residual,
               std::vector<std::size_t>& digits) {
    count_node();
    auto const& levels = G_.levels();
    if (level == levels.size()) {
      emit(digits);
      return;
    }
    auto const& L = levels[level];
    auto const o = static_cast<std::size_t>(orbit_of_[L.base]);
    auto try_image = [&]() {
      auto const y = residual.image0(image_[L.base]);
      std::int32_t const pos = L.position[y];
      if (pos < 0) {
        return;
      }
      digits.push_back(static_cast<std::size_t>(pos));
      descend(level + 1,
              compose(residual,
                      L.transversal_inv[static_cast<std::size_t>(pos)]),
              digits);
      digits.pop_back();
    };
    if (chosen_[o] >= 0) {
      try_image();
      return;
    }
    auto const& cands = candidates(o);
    for (std::size_t c = 0; c < cands.size(); ++c) {
      chosen_[o] = static_cast<std::int32_t>(c);
      for (auto p : orbit_points_[o]) {
        image_[p] = cands[c][p];
      }
      try_image();
    }
    chosen_[o] = -1;
  }

  void emit(std::vector<std::size_t> const& digits) {
    auto const& levels = G_.levels();
    Permutation g(n_);
    for (std::size_t i = levels.size(); i-- > 0;) {
      g = compose(g, levels[i].transversal[digits[i]]);
    }
    for (auto const& s : G_.generators()) {
      if (compose(g, s) != compose(s, g)) {
        return;
      }
    }
    found_.push_back(std::move(g));
  }

  PermGroup const& G_;
  std::size_t n_;
  std::uint64_t bound_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int32_t> orbit_of_;
  std::vector<std::vector<std::uint16_t>> orbit_points_;
  std::vector<std::vector<Permutation>> orbit_maps_;
  std::vector<std::vector<std::vector<std::uint16_t>>> candidates_;
  std::vector<bool> computed_;
  std::vector<std::int32_t> chosen_;
  std::vector<std::uint16_t> image_;
  std::vector<Permutation> found_;
};

}  // namespace

std::vector<Permutation> center_elements(PermGroup const& G,
                                         std::uint64_t bound) {
  if (G.is_trivial()) {
    return {Permutation(G.degree())};
  }
  return CenterSearch(G, bound).run();
}

PermGroup center(PermGroup const& G, std::uint64_t bound) {
  auto elements = center_elements(G, bound);
  std::vector<Permutation> gens;
  for (auto& z : elements) {
    if (!z.is_identity()) {
      gens.push_back(std::move(z));
    }
  }
  if (gens.empty()) {
    return PermGroup::trivial(G.degree());
  }
  return PermGroup(std::move(gens));
}

std::vector<Permutation> conjugacy_class(PermGroup const& G,
                                         Permutation const& g,
                                         std::uint64_t bound) {
  check_degree(G.degree(), g);
  if (!G.contains(g)) {
    throw InvalidArgument(g.to_cycles() + " is not in the group");
  }
  std::unordered_set<Permutation> seen{g};
  std::vector<Permutation> queue{g};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const& s : G.generators()) {
      Permutation c = conjugate(queue[k], s);
      if (seen.insert(c).second) {
        queue.push_back(std::move(c));
        if (queue.size() > bound) {
          throw BoundExceeded("conjugacy class exceeds the bound "
                              + std::to_string(bound));
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Permutation> class_representatives(PermGroup const& N,
                                               PermGroup const& G,
                                               std::uint64_t bound) {
  if (N.order() > bound) {
    throw BoundExceeded("class enumeration over " + N.order().str()
                        + " elements exceeds the bound "
                        + std::to_string(bound));
  }
  std::uint64_t const size = N.order_u64();
  std::vector<bool> visited(size, false);
  std::vector<Permutation> reps;
  std::vector<Permutation> queue;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (visited[idx]) {
      continue;
    }
    visited[idx] = true;
    queue.assign(1, N.element_at(idx));
    Permutation least = queue.front();
    while (!queue.empty()) {
      Permutation x = std::move(queue.back());
      queue.pop_back();
      if (x < least) {
        least = x;
      }
      for (auto const& s : G.generators()) {
        Permutation c = conjugate(x, s);
        std::uint64_t const ci = N.element_index(c);
        if (!visited[ci]) {
          visited[ci] = true;
          queue.push_back(std::move(c));
        }
      }
    }
    reps.push_back(std::move(least));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

bool is_transitive(PermGroup const& G) {
  return orbit(G, 1).size() == G.degree();
}

BlockSystem::BlockSystem(std::size_t degree,
                         std::vector<std::vector<Point>> classes)
    : degree_(degree), class_index_(degree, SIZE_MAX) {
  for (auto& c : classes) {
    if (c.empty()) {
      throw InvalidArgument("block system has an empty class");
    }
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Point x : classes[i]) {
      check_point(degree, x);
      if (class_index_[x - 1] != SIZE_MAX) {
        throw InvalidArgument("point " + std::to_string(x)
                              + " lies in two classes");
      }
      class_index_[x - 1] = i;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (class_index_[x] == SIZE_MAX) {
      throw InvalidArgument("point " + std::to_string(x + 1)
                            + " lies in no class");
    }
  }
  classes_ = std::move(classes);
}

std::string BlockSystem::to_string() const {
  std::string out;
  for (auto const& c : classes_) {
    out += '{';
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += (i ? "," : "") + std::to_string(c[i]);
    }
    out += '}';
  }
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Keeps the smaller root.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

// Atkinson's closure: merge, then propagate merges along every generator.
BlockSystem block_closure(PermGroup const& G, std::vector<Point> const& seeds) {
  std::size_t const n = G.degree();
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    if (uf.unite(seeds[0] - 1, seeds[i] - 1)) {
      queue.emplace_back(seeds[0] - 1, seeds[i] - 1);
    }
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto const [a, b] = queue[k];
    for (auto const& s : G.generators()) {
      std::size_t const sa = s.image0(a);
      std::size_t const sb = s.image0(b);
      if (uf.unite(sa, sb)) {
        queue.emplace_back(sa, sb);
      }
    }
  }
  std::vector<std::vector<Point>> classes;
  std::vector<std::int64_t> slot(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t const r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(
        static_cast<Point>(x + 1));
  }
  return BlockSystem(n, std::move(classes));
}

}  // namespace

BlockSystem minimal_block_system(PermGroup const& G, Point a, Point b) {
  check_point(G.degree(), a);
  check_point(G.degree(), b);
  if (a == b) {
    throw InvalidArgument("minimal block system needs two distinct points");
  }
  return block_closure(G, {a, b});
}

BlockSystem minimal_block_system(PermGroup const& G,
                                 std::vector<Point> const& seeds) {
  for (Point x : seeds) {
    check_point(G.degree(), x);
  }
  return block_closure(G, seeds);
}

std::vector<BlockSystem> block_systems(PermGroup const& G) {
  std::size_t const n = G.degree();
  std::set<std::vector<Point>> seen;
  std::vector<BlockSystem> out;
  std::deque<std::vector<Point>> queue;
  auto consider = [&](std::vector<Point> const& seeds) {
    BlockSystem sys = block_closure(G, seeds);
    if (sys.classes().size() == 1) {
      return;
    }
    auto const& block = sys.classes()[sys.class_of(1)];
    if (seen.insert(block).second) {
      queue.push_back(block);
      out.push_back(std::move(sys));
    }
  };
  for (Point b = 2; b <= n; ++b) {
    consider({1, b});
  }
  while (!queue.empty()) {
    std::vector<Point> block = std::move(queue.front());
    queue.pop_front();
    std::vector<bool> in(n + 1, false);
    for (Point x : block) {
      in[x] = true;
    }
    for (Point c = 2; c <= n; ++c) {
      if (!in[c]) {
        std::vector<Point> seeds = block;
        seeds.push_back(c);
        consider(seeds);
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](BlockSystem const& a, BlockSystem const& b) {
                     return a.classes().size() > b.classes().size();
                   });
  return out;
}

PermGroup action_on_blocks(PermGroup const& G, BlockSystem const& blocks) {
  std::size_t const m = blocks.classes().size();
  std::vector<Permutation> gens;
  for (auto const& s : G.generators()) {
    std::vector<Point> images(m);
    for (std::size_t i = 0; i < m; ++i) {
      Point const x = blocks.classes()[i].front();
      images[i] = static_cast<Point>(blocks.class_of(s(x)) + 1);
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(std::move(gens));
}

bool is_primitive(PermGroup const& G) {
  std::size_t const n = G.degree();
  if (n == 1) {
    return true;
  }
  if (!is_transitive(G)) {
    return false;
  }
  for (Point b = 2; b <= n; ++b) {
    if (minimal_block_system(G, 1, b).classes().size() != 1) {
      return false;
    }
  }
  return true;
}

std::optional<BlockSystem> quasiprimitivity_witness(PermGroup const& G) {
  for (auto const& sys : block_systems(G)) {
    if (sys.is_trivial()) {
      continue;
    }
    if (action_on_blocks(G, sys).order() != G.order()) {
      return sys;
    }
  }
  return std::nullopt;
}

bool is_quasiprimitive(PermGroup const& G) {
  if (G.degree() == 1) {
    return true;
  }
  if (!is_transitive(G)) {
    return false;
  }
  return !quasiprimitivity_witness(G).has_value();
}

Permutation canonical_coset_representative(PermGroup const& H,
                                           Permutation const& g) {
  Permutation current = g;
  for (auto const& level : H.levels()) {
    std::size_t best = 0;
    auto best_image = current.image0(level.orbit[0]);
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      auto const img = current.image0(level.orbit[k]);
      if (img < best_image) {
        best_image = img;
        best = k;
      }
    }
    current = compose(level.transversal[best], current);
  }
  return current;
}

CosetAction coset_action(PermGroup const& G, PermGroup const& H,
                         std::uint64_t bound) {
  if (!is_subgroup(H, G)) {
    throw InvalidArgument("coset action needs a subgroup");
  }
  Order const index = G.order() / H.order();
  if (index > bound) {
    throw BoundExceeded("index " + index.str() + " exceeds the bound "
                        + std::to_string(bound));
  }
  std::size_t const m = static_cast<std::size_t>(index);
  if (m > Permutation::max_degree) {
    throw BoundExceeded("index " + index.str() + " too large for a permutation");
  }
  std::unordered_map<Permutation, std::size_t> label;
  std::vector<Permutation> reps;
  Permutation const id(G.degree());
  label.emplace(canonical_coset_representative(H, id), 0);
  reps.push_back(id);
  std::vector<std::vector<Point>> images(G.generators().size(),
                                         std::vector<Point>(m, 0));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (std::size_t s = 0; s < G.generators().size(); ++s) {
      Permutation const next = compose(reps[k], G.generators()[s]);
      Permutation canon = canonical_coset_representative(H, next);
      auto [it, inserted] = label.emplace(std::move(canon), reps.size());
      if (inserted) {
        reps.push_back(next);
      }
      images[s][k] = static_cast<Point>(it->second + 1);
    }
  }
  std::vector<Permutation> gens;
  for (auto const& img : images) {
    gens.push_back(Permutation::from_images(img));
  }
  PermGroup image(std::move(gens));
  bool const faithful = image.order() == G.order();
  return CosetAction{std::move(image), faithful, std::move(reps)};
}

bool quotient_is_cyclic(PermGroup const& G, PermGroup const& N) {
  if (!is_normal(G, N)) {
    throw InvalidArgument("quotient needs a normal subgroup");
  }
  Order const index = G.order() / N.order();
  if (index > 1024) {
    throw BoundExceeded("quotient of order " + index.str()
                        + " exceeds the coset bound 1024");
  }
  std::size_t const m = static_cast<std::size_t>(index);
  if (m == 1) {
    return true;
  }
  CosetAction cosets = coset_action(G, N, 1024);
  for (auto const& r : cosets.representatives) {
    std::size_t k = 1;
    Permutation x = r;
    while (!N.contains(x)) {
      x = compose(x, r);
      ++k;
    }
    if (k == m) {
      return true;
    }
  }
  return false;
}

}  // namespace quandlekit
