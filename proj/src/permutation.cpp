#include "quandlekit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "quandlekit/errors.hpp"

namespace quandlekit {

Permutation::Permutation(std::size_t degree) {
  if (degree > max_degree) {
    throw InvalidArgument("degree " + std::to_string(degree) + " too large");
  }
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), value_type{0});
}

Permutation Permutation::from_images(std::vector<Point> const& images) {
  std::size_t const n = images.size();
  if (n > max_degree) {
    throw InvalidArgument("degree " + std::to_string(n) + " too large");
  }
  std::vector<value_type> raw(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    Point const y = images[i];
    if (y < 1 || y > n) {
      throw InvalidArgument("image " + std::to_string(y) + " of point "
                            + std::to_string(i + 1) + " out of range 1.."
                            + std::to_string(n));
    }
    if (seen[y - 1]) {
      throw InvalidArgument("image " + std::to_string(y)
                            + " occurs twice; not a bijection");
    }
    seen[y - 1] = true;
    raw[i] = static_cast<value_type>(y - 1);
  }
  return from_raw(std::move(raw));
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size()
         && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

Point read_point(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (value > Permutation::max_degree) {
      throw InvalidArgument("point out of range in \"" + std::string(text)
                            + "\"");
    }
    ++pos;
  }
  if (pos == start) {
    throw InvalidArgument("expected a point at offset " + std::to_string(start)
                          + " in \"" + std::string(text) + "\"");
  }
  return static_cast<Point>(value);
}

}  // namespace

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) {
    throw InvalidArgument("empty cycle notation");
  }
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InvalidArgument("expected '(' at offset " + std::to_string(pos)
                            + " in \"" + std::string(text) + "\"");
    }
    ++pos;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()"
      skip_spaces(text, pos);
      continue;
    }
    std::vector<Point> cycle;
    while (true) {
      Point x = read_point(text, pos);
      if (x < 1 || x > degree) {
        throw InvalidArgument("point " + std::to_string(x)
                              + " out of range 1.." + std::to_string(degree));
      }
      if (used[x - 1]) {
        throw InvalidArgument("point " + std::to_string(x)
                              + " appears twice in \"" + std::string(text)
                              + "\"");
      }
      used[x - 1] = true;
      cycle.push_back(x);
      if (pos >= text.size()) {
        throw InvalidArgument("unterminated cycle in \"" + std::string(text)
                              + "\"");
      }
      if (text[pos] == ',') {
        ++pos;
        skip_spaces(text, pos);
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw InvalidArgument("unexpected character '" + std::string(1, text[pos])
                            + "' in \"" + std::string(text) + "\"");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      result.images_[cycle[i] - 1]
          = static_cast<value_type>(cycle[(i + 1) % cycle.size()] - 1);
    }
    skip_spaces(text, pos);
  }
  return result;
}

Point Permutation::operator()(Point x) const {
  if (x < 1 || x > images_.size()) {
    throw InvalidArgument("point " + std::to_string(x) + " out of range 1.."
                          + std::to_string(images_.size()));
  }
  return static_cast<Point>(images_[x - 1]) + 1;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[i] = static_cast<Point>(images_[i]) + 1;
  }
  return out;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(j + 1);
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) {
    std::uint64_t const g = std::gcd(result, static_cast<std::uint64_t>(len));
    std::uint64_t const factor = len / g;
    if (result > UINT64_MAX / factor) {
      throw BoundExceeded("permutation order exceeds 64 bits");
    }
    result *= factor;
  }
  return result;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return static_cast<Point>(i + 1);
    }
  }
  return 0;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(p.degree())
                          + " vs " + std::to_string(q.degree()));
  }
  std::vector<Permutation::value_type> raw(p.degree());
  auto const a = p.raw();
  auto const b = q.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = b[a[i]];
  }
  return Permutation::from_raw(std::move(raw));
}

Permutation inverse(Permutation const& p) {
  std::vector<Permutation::value_type> raw(p.degree());
  auto const a = p.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[a[i]] = static_cast<Permutation::value_type>(i);
  }
  return Permutation::from_raw(std::move(raw));
}

Permutation conjugate(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree())
                          + " vs " + std::to_string(b.degree()));
  }
  // x -> b(a(b^-1(x))): the image of b(i) is b(a(i)).
  std::vector<Permutation::value_type> raw(a.degree());
  auto const ra = a.raw();
  auto const rb = b.raw();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[rb[i]] = rb[ra[i]];
  }
  return Permutation::from_raw(std::move(raw));
}

Permutation commutator(Permutation const& a, Permutation const& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Permutation power(Permutation const& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Permutation result(p.degree());
  while (e > 0) {
    if (e & 1u) {
      result = compose(result, base);
    }
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t hash_value(Permutation const& p) noexcept {
  // FNV-1a over the image bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : p.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace quandlekit
