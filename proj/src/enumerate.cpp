#include "quandlekit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "quandlekit/errors.hpp"

namespace quandlekit {

std::string to_string(Mode mode) {
  return mode == Mode::primitive ? "primitive" : "quasiprimitive";
}

Mode parse_mode(std::string_view text) {
  if (text == "primitive") {
    return Mode::primitive;
  }
  if (text == "quasiprimitive") {
    return Mode::quasiprimitive;
  }
  throw InvalidArgument("unknown mode '" + std::string(text)
                        + "' (expected primitive or quasiprimitive)");
}

std::vector<Permutation> xi_set(PermGroup const& G, Point e,
                                std::uint64_t bound) {
  if (!is_transitive(G)) {
    throw InvalidArgument("xi set needs a transitive group");
  }
  std::vector<Permutation> out;
  for (auto& z : center_elements(stabilizer(G, e), bound)) {
    if (!z.is_identity() && normal_closure(G, {z}).order() == G.order()) {
      out.push_back(std::move(z));
    }
  }
  return out;
}

bool check_inner_conditions(PermGroup const& G, std::uint64_t bound) {
  if (center_elements(G, bound).size() != 1) {
    return false;
  }
  PermGroup const D = derived_subgroup(G);
  if (D.is_trivial() || !quotient_is_cyclic(G, D)) {
    return false;
  }
  for (auto const& g : class_representatives(D, G, bound)) {
    if (!g.is_identity() && normal_closure(G, {g}).order() != D.order()) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<std::pair<std::uint32_t, std::size_t>> prime_power(
    std::size_t n) {
  if (n < 2) {
    return std::nullopt;
  }
  std::uint32_t p = 2;
  while (static_cast<std::size_t>(p) * p <= n && n % p != 0) {
    ++p;
  }
  if (n % p != 0) {
    p = static_cast<std::uint32_t>(n);
  }
  std::size_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) {
    return std::nullopt;
  }
  return std::make_pair(p, k);
}

// Companion matrix of x^k + c_{k-1} x^{k-1} + ... + c_0.
Matrix companion(std::vector<std::uint32_t> const& c, std::uint32_t p) {
  std::size_t const k = c.size();
  Matrix m(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 1; i < k; ++i) {
    m[i][i - 1] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    m[i][k - 1] = (p - c[i]) % p;
  }
  return m;
}

}  // namespace

AffineClassification classify_affine(Quandle const& q, bool simple) {
  AffineClassification out;
  std::size_t const n = q.order();
  if (!simple || n <= 2) {
    return out;
  }
  out.classified = true;
  auto const pk = prime_power(n);
  if (!pk) {
    return out;
  }
  out.affine = true;
  out.p = pk->first;
  out.k = pk->second;
  if (n > 64) {
    return out;
  }
  std::uint32_t const p = out.p;
  std::size_t const k = out.k;
  QuandleInvariants const inv = invariants(q);
  std::vector<std::uint32_t> c(k, 0);
  std::size_t const total = n;  // p^k coefficient vectors
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (c[0] == 0) {
      continue;  // singular
    }
    Matrix const psi = companion(c, p);
    if (!is_irreducible(p, k, psi)) {
      continue;
    }
    if (k == 1 && psi[0][0] == 1) {
      continue;  // fixes everything
    }
    Quandle const candidate = affine_quandle(p, k, psi);
    if (invariants(candidate) == inv && find_isomorphism(q, candidate)) {
      out.witness = psi;
      return out;
    }
  }
  return out;
}

std::vector<std::size_t> iso_class_representatives(
    std::vector<Quandle> const& quandles) {
  std::vector<QuandleInvariants> inv;
  inv.reserve(quandles.size());
  for (auto const& q : quandles) {
    inv.push_back(invariants(q));
  }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < quandles.size(); ++i) {
    bool duplicate = false;
    for (std::size_t r : reps) {
      if (inv[r] == inv[i] && find_isomorphism(quandles[i], quandles[r])) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      reps.push_back(i);
    }
  }
  return reps;
}

std::vector<Quandle> filter_up_to_iso(std::vector<Quandle> const& quandles) {
  std::vector<Quandle> sorted = quandles;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Quandle> out;
  for (std::size_t i : iso_class_representatives(sorted)) {
    out.push_back(sorted[i]);
  }
  return out;
}

namespace {

struct Candidate {
  Quandle quandle;
  Permutation rho;
  std::string rho_text;
  QuandleInvariants inv;
};

struct GroupTask {
  CatalogRecord const* record = nullptr;
  GroupSummary summary;
  bool primitive = false;
  bool quasiprimitive = false;
  std::vector<Candidate> kept;
  std::vector<std::string> failures;
};

Order factorial(std::size_t n) {
  Order f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

// An isomorphism f between the quandles of rho and
// rho' over the same G conjugates G onto itself and rho into the class of
// rho'.
std::optional<std::string> cross_check(PermGroup const& G, Candidate const& a,
                                       Candidate const& b,
                                       Permutation const& f) {
  for (auto const& g : G.generators()) {
    if (!G.contains(conjugate(g, f))) {
      return "isomorphism " + f.to_cycles() + " does not normalize the group";
    }
  }
  Permutation const image = conjugate(a.rho, f);
  if (!G.contains(image)) {
    return "image of " + a.rho_text + " leaves the group";
  }
  Point const y = f(1);
  if (image != b.quandle.right_translation(y)) {
    return "image of " + a.rho_text + " is not conjugate to " + b.rho_text;
  }
  return std::nullopt;
}

void run_group(GroupTask& task, std::size_t n, Mode mode,
               EnumerationOptions const& options) {
  CatalogRecord const& record = *task.record;
  if (options.verify_flags) {
    verify_record(record);
  }
  PermGroup const G = record.group();
  task.summary.order = G.order();
  if (n > 4) {
    Order const nf = factorial(n);
    if (G.order() == nf || 2 * G.order() == nf) {
      task.summary.skipped = "symmetric or alternating";
      return;
    }
  }
  PermGroup const D = derived_subgroup(G);
  if (!quotient_is_cyclic(G, D)) {
    task.summary.skipped = "G/G' not cyclic";
    return;
  }
  auto const xi = xi_set(G, 1, options.bound);
  task.summary.xi = xi.size();
  task.primitive = is_primitive(G);
  task.quasiprimitive = is_quasiprimitive(G);
  std::vector<Candidate> all;
  for (auto const& rho : xi) {
    Envelope env = make_envelope(G, 1, rho);
    Quandle q = pq(env);
    if (mode == Mode::quasiprimitive && !is_faithful(q)) {
      ++task.summary.unfaithful;
      continue;
    }
    QuandleInvariants inv = invariants(q);
    all.push_back(Candidate{std::move(q), rho, rho.to_cycles(), std::move(inv)});
  }
  std::sort(all.begin(), all.end(), [](Candidate const& a, Candidate const& b) {
    return a.rho_text < b.rho_text;
  });
  for (auto& c : all) {
    bool duplicate = false;
    for (auto const& r : task.kept) {
      if (r.inv != c.inv) {
        continue;
      }
      if (auto f = find_isomorphism(c.quandle, r.quandle)) {
        duplicate = true;
        if (auto failure = cross_check(G, c, r, *f)) {
          task.failures.push_back(record.label + ": " + *failure);
        }
        break;
      }
    }
    if (!duplicate) {
      task.kept.push_back(std::move(c));
    }
  }
  task.summary.kept = task.kept.size();
}

}  // namespace

EnumerationResult enumerate_degree(std::size_t n,
                                   std::vector<CatalogRecord> const& catalog,
                                   Mode mode,
                                   EnumerationOptions const& options) {
  EnumerationResult result;
  result.degree = n;
  result.mode = mode;
  result.catalog_digest = catalog_digest(catalog);
  if (n <= 2) {
    return result;
  }
  std::string const flag = to_string(mode);
  std::vector<GroupTask> tasks;
  for (auto const& record : catalog) {
    if (record.degree == n && record.has_flag(flag)) {
      GroupTask t;
      t.record = &record;
      t.summary.label = record.label;
      tasks.push_back(std::move(t));
    }
  }
  std::sort(tasks.begin(), tasks.end(), [](GroupTask const& a, GroupTask const& b) {
    return a.record->label < b.record->label;
  });

  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        run_group(tasks[i], n, mode, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned const jobs = std::max(1u, std::min<unsigned>(
      options.jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (auto const& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }

  std::vector<std::pair<GroupTask const*, Candidate const*>> survivors;
  for (auto const& task : tasks) {
    result.groups.push_back(task.summary);
    result.unfaithful += task.summary.unfaithful;
    result.cross_check_failures.insert(result.cross_check_failures.end(),
                                       task.failures.begin(), task.failures.end());
    if (!task.summary.skipped.empty()) {
      continue;
    }
    result.raw += task.summary.xi;
    for (auto const& c : task.kept) {
      bool duplicate = false;
      for (auto const& [t, r] : survivors) {
        if (r->inv == c.inv && find_isomorphism(c.quandle, r->quandle)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) {
        survivors.emplace_back(&task, &c);
      }
    }
  }
  for (auto const& [task, c] : survivors) {
    EnumerationEntry e{c->quandle,
                       task->record->label,
                       c->rho_text,
                       c->inv.inner_order,
                       c->inv.displacement_order};
    e.simple = is_simple(c->quandle);
    e.primitive = task->primitive;
    e.quasiprimitive = task->quasiprimitive && is_faithful(c->quandle);
    e.affine = classify_affine(c->quandle, e.simple).affine;
    if (options.non_affine_only && e.affine) {
      ++result.affine_omitted;
      continue;
    }
    result.entries.push_back(std::move(e));
  }
  result.filtered = result.entries.size();
  return result;
}

}  // namespace quandlekit
