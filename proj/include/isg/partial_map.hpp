#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "isg/element_set.hpp"

namespace isg {

/// A partial map on 0..n-1, stored as an image per point (kUndefined when the
/// point is outside the domain). Composition follows function notation:
/// (f * g)(x) = f(g(x)), on the largest domain where that makes sense.
class PartialMap {
 public:
  static constexpr std::int32_t kUndefined = -1;

  PartialMap() = default;
  explicit PartialMap(std::size_t n) : images_(n, kUndefined) {}
  explicit PartialMap(std::vector<std::int32_t> images) : images_(std::move(images)) {}

  static PartialMap identity_on(const ElementSet& domain);

  std::size_t space_size() const noexcept { return images_.size(); }
  bool defined(std::size_t x) const { return images_[x] != kUndefined; }
  std::int32_t operator()(std::size_t x) const { return images_[x]; }
  void set(std::size_t x, std::int32_t y) { images_[x] = y; }
  const std::vector<std::int32_t>& images() const noexcept { return images_; }

  ElementSet domain() const;
  ElementSet image() const;
  bool is_injective() const;
  /// Identity on its domain.
  bool is_partial_identity() const;
  PartialMap inverse() const;

  friend PartialMap compose(const PartialMap& f, const PartialMap& g);
  friend bool operator==(const PartialMap&, const PartialMap&) = default;
  friend bool operator<(const PartialMap& a, const PartialMap& b) { return a.images_ < b.images_; }

  /// "{0:1,2:0}" with optional point names.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<std::int32_t> images_;
};

PartialMap compose(const PartialMap& f, const PartialMap& g);

}  // namespace isg
