#include "polyforge/permutation.hpp"

#include <numeric>
#include <sstream>

#include "polyforge/errors.hpp"

namespace polyforge {

Permutation::Permutation(std::uint32_t degree) {
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw InvalidArgumentError("image list is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw InvalidArgumentError("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation Permutation::pow(std::uint64_t e) const {
  Permutation acc(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::uint32_t x = static_cast<std::uint32_t>(i);
    while (!seen[x]) {
      seen[x] = true;
      x = images_[x];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::int64_t Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<std::int64_t>(i);
  return -1;
}

std::string serialize_permutation(const Permutation& p) {
  std::ostringstream out;
  out << "p:";
  for (std::uint32_t v : p.images()) out << ' ' << v;
  return out.str();
}

}  // namespace polyforge
