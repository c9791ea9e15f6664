#include "quandlekit/construct.hpp"

#include <algorithm>
#include <unordered_map>

#include "quandlekit/errors.hpp"

namespace quandlekit {

Envelope make_envelope(PermGroup group, Point base_point, Permutation rho) {
  std::size_t const n = group.degree();
  if (base_point < 1 || base_point > n) {
    throw InvalidArgument("base point " + std::to_string(base_point)
                          + " out of range 1.." + std::to_string(n));
  }
  if (rho.degree() != n) {
    throw InvalidArgument("rho has degree " + std::to_string(rho.degree())
                          + ", expected " + std::to_string(n));
  }
  if (!is_transitive(group)) {
    throw InvalidArgument("envelope group is not transitive");
  }
  if (rho(base_point) != base_point || !group.contains(rho)) {
    throw InvalidArgument("rho " + rho.to_cycles()
                          + " is not in the stabilizer of "
                          + std::to_string(base_point));
  }
  PermGroup const stab = stabilizer(group, base_point);
  for (auto const& s : stab.generators()) {
    if (compose(s, rho) != compose(rho, s)) {
      throw InvalidArgument("rho " + rho.to_cycles()
                            + " is not central in the stabilizer: it does not "
                              "commute with "
                            + s.to_cycles());
    }
  }
  bool const generates = normal_closure(group, {rho}).order() == group.order();
  return Envelope{std::move(group), base_point, std::move(rho), generates};
}

Quandle pq(Envelope const& env, std::vector<Permutation> const& transversal) {
  if (!env.class_generates) {
    throw InvalidArgument("folder is not an envelope: the class of "
                          + env.rho.to_cycles() + " does not generate the group");
  }
  std::size_t const n = env.group.degree();
  if (transversal.size() != n) {
    throw InvalidArgument("transversal needs one element per point");
  }
  std::vector<Permutation> columns;
  columns.reserve(n);
  for (Point y = 1; y <= n; ++y) {
    Permutation const& a = transversal[y - 1];
    if (a.degree() != n || a(env.base_point) != y) {
      throw InvalidArgument("transversal element " + std::to_string(y)
                            + " does not map the base point to "
                            + std::to_string(y));
    }
    columns.push_back(conjugate(env.rho, a));
  }
  return Quandle::from_columns(columns);
}

Quandle pq(Envelope const& env) {
  PermGroup const chain = PermGroup::with_base_prefix(
      env.group.generators(), {env.base_point}, env.group.order());
  auto const& level = chain.levels().front();
  std::vector<Permutation> transversal(env.group.degree());
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    transversal[level.orbit[k]] = level.transversal[k];
  }
  return pq(env, transversal);
}

Envelope pe(Quandle const& q, Point e) {
  if (e < 1 || e > q.order()) {
    throw InvalidArgument("base point " + std::to_string(e) + " out of range");
  }
  PermGroup inn = inner_group(q);
  if (!is_transitive(inn)) {
    throw InvalidArgument("quandle is not connected");
  }
  return make_envelope(std::move(inn), e, q.right_translation(e));
}

ConjQuandle conj_quandle(PermGroup const& G, Permutation const& g,
                         std::uint64_t bound) {
  std::vector<Permutation> elements = conjugacy_class(G, g, bound);
  std::size_t const m = elements.size();
  if (m > Permutation::max_degree) {
    throw BoundExceeded("class of size " + std::to_string(m) + " too large");
  }
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    index.emplace(elements[i], i);
  }
  std::vector<std::vector<Point>> rows(m, std::vector<Point>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      rows[a][b] = static_cast<Point>(
          index.at(conjugate(elements[a], elements[b])) + 1);
    }
  }
  return ConjQuandle{Quandle::from_table(rows), std::move(elements)};
}

Quandle coset_quandle(Envelope const& env, std::uint64_t bound) {
  if (!env.class_generates) {
    throw InvalidArgument("folder is not an envelope: the class of "
                          + env.rho.to_cycles() + " does not generate the group");
  }
  std::vector<Permutation> const all = env.group.elements(bound);
  std::vector<Permutation> const sub
      = stabilizer(env.group, env.base_point).elements(bound);
  std::unordered_map<Permutation, std::size_t> coset_of;
  std::vector<Permutation> least;
  for (auto const& g : all) {
    if (coset_of.count(g)) {
      continue;
    }
    Permutation m = g;
    for (auto const& k : sub) {
      Permutation kg = compose(k, g);
      if (kg < m) {
        m = kg;
      }
      coset_of.emplace(std::move(kg), least.size());
    }
    least.push_back(std::move(m));
  }
  std::size_t const n = least.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return least[a] < least[b]; });
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) {
    label[order[i]] = i;
  }
  Permutation const rho_inv = inverse(env.rho);
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  for (std::size_t a = 0; a < n; ++a) {
    Permutation const& g = least[order[a]];
    Permutation const rho_inv_g = compose(rho_inv, g);
    for (std::size_t b = 0; b < n; ++b) {
      Permutation const& h = least[order[b]];
      Permutation const w
          = compose(compose(rho_inv_g, inverse(h)), compose(env.rho, h));
      rows[a][b] = static_cast<Point>(label[coset_of.at(w)] + 1);
    }
  }
  return Quandle::from_table(rows);
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1u) {
      result = result * base % p;
    }
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_mod(Matrix m, std::uint32_t p) {
  std::size_t rank = 0;
  std::size_t const rows = m.size();
  std::size_t const cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    std::swap(m[pivot], m[rank]);
    std::uint64_t const inv = inverse_mod(m[rank][c], p);
    for (auto& v : m[rank]) {
      v = static_cast<std::uint32_t>(v * inv % p);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][c] != 0) {
        std::uint64_t const f = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) {
          m[r][j] = static_cast<std::uint32_t>(
              (m[r][j] + (p - f) * m[rank][j]) % p);
        }
      }
    }
    ++rank;
  }
  return rank;
}

void check_matrix(std::uint32_t p, std::size_t k, Matrix const& psi) {
  if (!is_prime(p)) {
    throw InvalidArgument(std::to_string(p) + " is not prime");
  }
  if (k == 0) {
    throw InvalidArgument("dimension must be positive");
  }
  if (psi.size() != k) {
    throw InvalidArgument("matrix must be " + std::to_string(k) + "x"
                          + std::to_string(k));
  }
  for (auto const& row : psi) {
    if (row.size() != k) {
      throw InvalidArgument("matrix must be " + std::to_string(k) + "x"
                            + std::to_string(k));
    }
    for (auto v : row) {
      if (v >= p) {
        throw InvalidArgument("matrix entry " + std::to_string(v)
                              + " out of range 0.." + std::to_string(p - 1));
      }
    }
  }
}

std::vector<std::uint32_t> apply(Matrix const& psi, std::vector<std::uint32_t> const& v,
                                 std::uint32_t p) {
  std::vector<std::uint32_t> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      s += static_cast<std::uint64_t>(psi[i][j]) * v[j];
    }
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  return out;
}

std::vector<std::uint32_t> digits_of(std::size_t index, std::uint32_t p,
                                     std::size_t k) {
  std::vector<std::uint32_t> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

std::size_t index_of(std::vector<std::uint32_t> const& v, std::uint32_t p) {
  std::size_t index = 0;
  for (auto d : v) {
    index = index * p + d;
  }
  return index;
}

std::size_t checked_power(std::uint32_t p, std::size_t k, std::size_t limit) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    size *= p;
    if (size > limit) {
      throw BoundExceeded(std::to_string(p) + "^" + std::to_string(k)
                          + " exceeds " + std::to_string(limit));
    }
  }
  return size;
}

}  // namespace

Quandle affine_quandle(std::uint32_t p, std::size_t k, Matrix const& psi) {
  check_matrix(p, k, psi);
  if (rank_mod(psi, p) != k) {
    throw InvalidArgument("psi is singular mod " + std::to_string(p));
  }
  Matrix shifted = psi;
  for (std::size_t i = 0; i < k; ++i) {
    shifted[i][i] = (shifted[i][i] + p - 1) % p;
  }
  if (rank_mod(shifted, p) != k) {
    throw InvalidArgument("psi fixes a nonzero vector");
  }
  std::size_t const n = checked_power(p, k, Permutation::max_degree);
  std::vector<std::vector<std::uint32_t>> vec(n);
  std::vector<std::vector<std::uint32_t>> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    vec[i] = digits_of(i, p, k);
    image[i] = apply(psi, vec[i], p);
  }
  // psi(x - y) + y = psi(x) - psi(y) + y.
  std::vector<std::vector<Point>> rows(n, std::vector<Point>(n));
  std::vector<std::uint32_t> w(k);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < k; ++i) {
        w[i] = (image[x][i] + p - image[y][i] + vec[y][i]) % p;
      }
      rows[x][y] = static_cast<Point>(index_of(w, p) + 1);
    }
  }
  return Quandle::from_table(rows);
}

bool is_irreducible(std::uint32_t p, std::size_t k, Matrix const& psi) {
  check_matrix(p, k, psi);
  if (k > 8) {
    throw BoundExceeded("dimension " + std::to_string(k) + " exceeds 8");
  }
  std::size_t const n = checked_power(p, k, 65536);
  if (k == 1) {
    return psi[0][0] != 0;
  }
  for (std::size_t i = 1; i < n; ++i) {
    Matrix krylov;
    std::vector<std::uint32_t> v = digits_of(i, p, k);
    for (std::size_t j = 0; j < k; ++j) {
      krylov.push_back(v);
      v = apply(psi, v, p);
    }
    if (rank_mod(krylov, p) != k) {
      return false;
    }
  }
  return true;
}

Envelope transport(Envelope const& env, Permutation const& phi) {
  if (phi.degree() != env.group.degree()) {
    throw InvalidArgument("phi has the wrong degree");
  }
  if (phi(env.base_point) != env.base_point) {
    throw InvalidArgument("phi moves the base point");
  }
  std::vector<Permutation> gens;
  for (auto const& g : env.group.generators()) {
    gens.push_back(conjugate(g, phi));
  }
  return make_envelope(PermGroup(std::move(gens)), env.base_point,
                       conjugate(env.rho, phi));
}

}  // namespace quandlekit
