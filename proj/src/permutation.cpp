#include "permspec/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permspec/errors.hpp"

namespace permspec::permutations {

Permutation::Permutation(std::vector<std::int64_t> image) : image_(std::move(image)) {
  if (image_.empty()) throw Error("permutation needs at least one point");
  std::vector<bool> seen(image_.size(), false);
  for (std::int64_t v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw Error("image array is not a bijection of {0..n-1}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::int64_t n) {
  std::vector<std::int64_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw DimensionMismatchError("composing permutations of different sizes");
  std::vector<std::int64_t> image(image_.size());
  for (std::int64_t i = 0; i < size(); ++i) image[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::int64_t> image(image_.size());
  for (std::int64_t i = 0; i < size(); ++i) image[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::power(std::int64_t k) const {
  std::vector<std::int64_t> image(image_.size());
  std::vector<bool> visited(image_.size(), false);
  std::vector<std::int64_t> cycle;
  for (std::int64_t start = 0; start < size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    cycle.clear();
    for (std::int64_t x = start; !visited[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    auto len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = ((k % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j)
      image[static_cast<std::size_t>(cycle[static_cast<std::size_t>(j)])] =
          cycle[static_cast<std::size_t>((j + shift) % len)];
  }
  return Permutation(std::move(image));
}

CycleType cycle_type(const Permutation& p) {
  CycleType t{p.size(), {}};
  std::vector<bool> visited(static_cast<std::size_t>(p.size()), false);
  for (std::int64_t start = 0; start < p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::int64_t len = 0;
    for (std::int64_t x = start; !visited[static_cast<std::size_t>(x)]; x = p(x)) {
      visited[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    ++t.counts[len];
  }
  return t;
}

CycleDensities densities_of(const CycleType& t) {
  CycleDensities d;
  for (const auto& [len, mult] : t.counts) d.values[len] = Rational(len * mult, t.n);
  d.c_inf = Rational(0);
  return d;
}

Rational trace_power(const CycleType& t, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("trace power index must be >= 1");
  Rational sum(0);
  for (const auto& [len, mult] : t.counts)
    if (k % len == 0) sum += Rational(len * mult, t.n);
  return sum;
}

namespace {

// Writes one cycle of length `len` on the block [start, start+len).
void lay_cycle(std::vector<std::int64_t>& image, std::int64_t start, std::int64_t len) {
  for (std::int64_t j = 0; j < len; ++j)
    image[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
}

}  // namespace

ConstructionResult construct_permutation(const CycleDensities& target, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("construction needs n >= 1");
  Rational total(0);
  for (const auto& [i, c] : target.values) {
    if (i < 1) throw InvalidDensitiesError("cycle length must be positive");
    if (c < Rational(0))
      throw InvalidDensitiesError("negative density at i=" + std::to_string(i));
    total += c;
  }
  if (total > Rational(1)) throw InvalidDensitiesError("densities sum past 1");

  std::vector<std::int64_t> image(static_cast<std::size_t>(n));
  std::map<std::int64_t, std::int64_t> cycle_counts;
  std::int64_t used = 0;
  for (const auto& [i, c] : target.values) {
    std::int64_t k = (c * Rational(n) / Rational(i)).floor();  // cycles of length i
    cycle_counts[i] = k;
    for (std::int64_t j = 0; j < k; ++j) {
      lay_cycle(image, used, i);
      used += i;
    }
  }

  std::int64_t leftover = n - used;
  if (leftover > 0) lay_cycle(image, used, leftover);

  ConstructionResult result{Permutation(std::move(image)), std::move(cycle_counts),
                            leftover, false, {}};
  result.leftover_collision =
      leftover > 0 && target.values.count(leftover) > 0;
  result.achieved = densities_of(cycle_type(result.permutation));
  return result;
}

Permutation random_permutation(std::int64_t n, Rng& rng) {
  std::vector<std::int64_t> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  for (std::int64_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::int64_t>(rng.uniform_index(static_cast<std::uint64_t>(i + 1)));
    std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(image));
}

Permutation random_permutation_with_type(const CycleType& t, Rng& rng) {
  std::int64_t covered = 0;
  for (const auto& [len, mult] : t.counts) {
    if (len < 1 || mult < 1) throw Error("invalid cycle type");
    covered += len * mult;
  }
  if (covered != t.n) throw Error("cycle type does not cover n points");

  std::vector<std::int64_t> image(static_cast<std::size_t>(t.n));
  std::int64_t used = 0;
  for (const auto& [len, mult] : t.counts)
    for (std::int64_t j = 0; j < mult; ++j) {
      lay_cycle(image, used, len);
      used += len;
    }
  Permutation blocks(std::move(image));
  Permutation relabel = random_permutation(t.n, rng);
  return relabel.compose(blocks).compose(relabel.inverse());
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream os;
  for (std::int64_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p(i);
  }
  return os.str();
}

Permutation parse_permutation(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::int64_t> image;
  std::int64_t v;
  while (is >> v) image.push_back(v);
  if (!is.eof()) throw ParseError("permutation line has non-integer tokens");
  if (image.empty()) throw ParseError("empty permutation line");
  try {
    return Permutation(std::move(image));
  } catch (const Error& e) {
    throw ParseError(std::string("bad permutation line: ") + e.what());
  }
}

}  // namespace permspec::permutations
