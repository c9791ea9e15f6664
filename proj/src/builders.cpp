#include "quandlekit/builders.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "quandlekit/errors.hpp"

namespace quandlekit::builders {

namespace {

std::string cycle_text(std::size_t from, std::size_t to) {
  std::string s = "(";
  for (std::size_t i = from; i <= to; ++i) {
    s += std::to_string(i);
    s += i < to ? "," : ")";
  }
  return s;
}

}  // namespace

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n <= 1) {
    return {Permutation(n == 0 ? 1 : n)};
  }
  if (n == 2) {
    return {Permutation::from_cycles(2, "(1,2)")};
  }
  return {Permutation::from_cycles(n, "(1,2)"),
          Permutation::from_cycles(n, cycle_text(1, n))};
}

std::vector<Permutation> alternating_generators(std::size_t n) {
  if (n <= 2) {
    return {Permutation(n == 0 ? 1 : n)};
  }
  if (n == 3) {
    return {Permutation::from_cycles(3, "(1,2,3)")};
  }
  return {Permutation::from_cycles(n, "(1,2,3)"),
          Permutation::from_cycles(n, n % 2 ? cycle_text(1, n) : cycle_text(2, n))};
}

std::vector<Permutation> action_on_set_orbit(std::vector<Permutation> const& gens,
                                             std::vector<Point> const& seed) {
  std::vector<Point> start = seed;
  std::sort(start.begin(), start.end());
  return orbit_action<std::vector<Point>>(
      {start}, gens.size(), [&](std::vector<Point> const& s, std::size_t i) {
        std::vector<Point> image;
        image.reserve(s.size());
        for (Point x : s) {
          image.push_back(gens[i](x));
        }
        std::sort(image.begin(), image.end());
        return image;
      });
}

std::vector<Permutation> action_on_pairs(std::vector<Permutation> const& gens) {
  return action_on_set_orbit(gens, {1, 2});
}

std::vector<Permutation> action_on_conjugates(PermGroup const& G,
                                              Permutation const& x) {
  auto const& gens = G.generators();
  return orbit_action<Permutation>(
      {x}, gens.size(), [&](Permutation const& y, std::size_t i) {
        return conjugate(y, gens[i]);
      });
}

namespace {

// Least generator of <x>, which identifies the subgroup.
Permutation cyclic_key(Permutation const& x) {
  std::uint64_t const m = x.order();
  Permutation best = x;
  Permutation y = x;
  for (std::uint64_t j = 2; j < m; ++j) {
    y = compose(y, x);
    if (std::gcd(j, m) == 1 && y < best) {
      best = y;
    }
  }
  return best;
}

}  // namespace

std::vector<Permutation> action_on_cyclic_subgroups(PermGroup const& G,
                                                    Permutation const& x) {
  auto const& gens = G.generators();
  return orbit_action<Permutation>(
      {cyclic_key(x)}, gens.size(), [&](Permutation const& y, std::size_t i) {
        return cyclic_key(conjugate(y, gens[i]));
      });
}

std::vector<Permutation> reduce_generators(std::vector<Permutation> const& gens) {
  Order const target = PermGroup(gens).order();
  std::vector<Permutation> kept;
  Order current = 1;
  for (auto const& g : gens) {
    if (g.is_identity()) {
      continue;
    }
    if (!kept.empty() && PermGroup(kept).contains(g)) {
      continue;
    }
    kept.push_back(g);
    current = PermGroup(kept).order();
    if (current == target) {
      break;
    }
  }
  if (kept.empty()) {
    kept.push_back(gens.front());
  }
  return kept;
}

Permutation find_element(PermGroup const& G,
                         std::function<bool(Permutation const&)> const& pred) {
  std::optional<Permutation> found;
  struct Stop {};
  try {
    G.for_each_element(
        [&](Permutation const& g) {
          if (pred(g)) {
            found = g;
            throw Stop{};
          }
        },
        UINT64_MAX);
  } catch (Stop const&) {
  }
  if (!found) {
    throw InvalidArgument("no group element with the requested property");
  }
  return *found;
}

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  if (q < 2) {
    throw InvalidArgument("field order must be at least 2");
  }
  p_ = 2;
  while (q % p_ != 0) {
    ++p_;
  }
  e_ = 0;
  for (std::uint32_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) {
      throw InvalidArgument(std::to_string(q) + " is not a prime power");
    }
    ++e_;
  }
  add_.resize(q * q);
  neg_.resize(q);
  auto digits = [&](std::uint32_t a) {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto number = [&](std::vector<std::uint32_t> const& d) {
    std::uint32_t a = 0;
    for (std::uint32_t i = e_; i-- > 0;) {
      a = a * p_ + d[i];
    }
    return a;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> dn(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
      dn[i] = (p_ - da[i]) % p_;
    }
    neg_[a] = number(dn);
    for (std::uint32_t b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> ds(e_);
      for (std::uint32_t i = 0; i < e_; ++i) {
        ds[i] = (da[i] + db[i]) % p_;
      }
      add_[a * q + b] = number(ds);
    }
  }
  // Try monic polynomials x^e + c(x) in order until the product table is a
  // field.
  std::uint32_t const candidates = e_ == 1 ? 1 : q;
  for (std::uint32_t c = 0; c < candidates; ++c) {
    auto const low = digits(c);
    mul_.assign(q * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      auto da = digits(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<std::uint32_t> prod(2 * e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) {
          for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
          }
        }
        // x^e = -c(x).
        for (std::uint32_t k = 2 * e_ - 1; k >= e_ && k > 0; --k) {
          std::uint32_t const top = prod[k];
          if (top == 0) {
            continue;
          }
          prod[k] = 0;
          for (std::uint32_t i = 0; i < e_; ++i) {
            prod[k - e_ + i] = (prod[k - e_ + i] + top * (p_ - low[i])) % p_;
          }
        }
        prod.resize(e_);
        mul_[a * q + b] = number(prod);
      }
    }
    bool field = true;
    for (std::uint32_t a = 1; a < q && field; ++a) {
      bool has_inverse = false;
      for (std::uint32_t b = 1; b < q; ++b) {
        if (mul_[a * q + b] == 1) {
          has_inverse = true;
          break;
        }
      }
      field = has_inverse;
    }
    if (field) {
      break;
    }
  }
  for (std::uint32_t a = 2; a < q; ++a) {
    std::uint32_t x = a;
    std::uint32_t k = 1;
    while (x != 1) {
      x = mul(x, a);
      ++k;
    }
    if (k == q - 1) {
      primitive_ = a;
      break;
    }
  }
  if (q == 2) {
    primitive_ = 1;
  }
}

std::uint32_t FiniteField::power(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = mul(r, a);
  }
  return r;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) {
    throw InvalidArgument("zero has no inverse");
  }
  return power(a, q_ - 2);
}

std::uint32_t FiniteField::frobenius(std::uint32_t a) const {
  return power(a, p_);
}

std::vector<std::uint32_t> FiniteField::prime_field_basis() const {
  std::vector<std::uint32_t> out;
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out.push_back(x);
    x *= p_;
  }
  return out;
}

Vec normalize(FiniteField const& F, Vec v) {
  auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t a) { return a != 0; });
  if (it == v.end()) {
    throw InvalidArgument("zero vector has no projective point");
  }
  std::uint32_t const s = F.inv(*it);
  for (auto& a : v) {
    a = F.mul(a, s);
  }
  return v;
}

std::vector<Vec> projective_points(FiniteField const& F, std::size_t dim) {
  std::vector<Vec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= F.order();
  }
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(dim);
    std::uint64_t r = code;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(r % F.order());
      r /= F.order();
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t a) { return a != 0; });
    if (*it == 1) {
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> projective_action(FiniteField const& F,
                                           std::vector<Vec> const& points,
                                           std::vector<VectorMap> const& maps) {
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    index.emplace(points[i], i);
  }
  std::vector<Permutation> out;
  for (auto const& f : maps) {
    std::vector<Point> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto it = index.find(normalize(F, f(points[i])));
      if (it == index.end()) {
        throw InvalidArgument("map does not preserve the point set");
      }
      images[i] = static_cast<Point>(it->second + 1);
    }
    out.push_back(Permutation::from_images(images));
  }
  return out;
}

VectorMap linear_map(FiniteField const& F, std::vector<Vec> const& M) {
  return [&F, M](Vec const& v) {
    Vec out(M[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = F.add(out[j], F.mul(v[i], M[i][j]));
      }
    }
    return out;
  };
}

VectorMap frobenius_map(FiniteField const& F) {
  return [&F](Vec const& v) {
    Vec out = v;
    for (auto& a : out) {
      a = F.frobenius(a);
    }
    return out;
  };
}

std::vector<VectorMap> sl_generators(FiniteField const& F, std::size_t dim) {
  std::vector<VectorMap> out;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) {
        continue;
      }
      for (auto a : F.prime_field_basis()) {
        std::vector<Vec> M(dim, Vec(dim, 0));
        for (std::size_t k = 0; k < dim; ++k) {
          M[k][k] = 1;
        }
        M[i][j] = a;
        out.push_back(linear_map(F, M));
      }
    }
  }
  return out;
}

VectorMap diagonal_primitive(FiniteField const& F, std::size_t dim) {
  std::vector<Vec> M(dim, Vec(dim, 0));
  for (std::size_t k = 0; k < dim; ++k) {
    M[k][k] = 1;
  }
  M[0][0] = F.primitive_element();
  return linear_map(F, M);
}

std::uint32_t symplectic_form(FiniteField const& F, Vec const& x, Vec const& y) {
  std::size_t const m = x.size() / 2;
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < m; ++i) {
    s = F.add(s, F.sub(F.mul(x[i], y[i + m]), F.mul(x[i + m], y[i])));
  }
  return s;
}

VectorMap symplectic_transvection(FiniteField const& F, Vec const& v) {
  return [&F, v](Vec const& x) {
    std::uint32_t const c = symplectic_form(F, x, v);
    Vec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = F.add(out[i], F.mul(c, v[i]));
    }
    return out;
  };
}

FiniteField const& field(std::uint32_t q) {
  static std::map<std::uint32_t, std::unique_ptr<FiniteField>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[q];
  if (!slot) {
    slot = std::make_unique<FiniteField>(q);
  }
  return *slot;
}

namespace {

NamedGroup line_group(std::string name, std::uint32_t q, bool diagonal,
                      bool frobenius, bool twisted = false) {
  FiniteField const& F = field(q);
  auto maps = sl_generators(F, 2);
  if (diagonal) {
    maps.push_back(diagonal_primitive(F, 2));
  }
  if (frobenius) {
    maps.push_back(frobenius_map(F));
  }
  if (twisted) {
    VectorMap d = diagonal_primitive(F, 2);
    VectorMap fr = frobenius_map(F);
    maps.push_back([d, fr](Vec const& v) { return d(fr(v)); });
  }
  auto gens = reduce_generators(projective_action(F, projective_points(F, 2), maps));
  Order order = PermGroup(gens).order();
  return NamedGroup{std::move(name), std::move(gens), std::move(order)};
}

}  // namespace

NamedGroup psl2(std::uint32_t q) {
  return line_group("PSL(2," + std::to_string(q) + ")", q, false, false);
}
NamedGroup pgl2(std::uint32_t q) {
  return line_group("PGL(2," + std::to_string(q) + ")", q, true, false);
}
NamedGroup psigmal2(std::uint32_t q) {
  return line_group("PSigmaL(2," + std::to_string(q) + ")", q, false, true);
}
NamedGroup pgammal2(std::uint32_t q) {
  return line_group("PGammaL(2," + std::to_string(q) + ")", q, true, true);
}
NamedGroup m10() { return line_group("M10", 9, false, false, true); }

}  // namespace quandlekit::builders
