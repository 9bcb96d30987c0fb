#include "isg/partial_map.hpp"

#include <sstream>

namespace isg {

PartialMap PartialMap::identity_on(const ElementSet& domain) {
  PartialMap f(domain.universe());
  for (Index x : domain.to_vector()) f.set(x, static_cast<std::int32_t>(x));
  return f;
}

ElementSet PartialMap::domain() const {
  ElementSet d(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kUndefined) d.insert(x);
  return d;
}

ElementSet PartialMap::image() const {
  ElementSet r(images_.size());
  for (auto y : images_)
    if (y != kUndefined) r.insert(static_cast<std::size_t>(y));
  return r;
}

bool PartialMap::is_injective() const {
  std::vector<unsigned char> hit(images_.size(), 0);
  for (auto y : images_) {
    if (y == kUndefined) continue;
    if (hit[static_cast<std::size_t>(y)]) return false;
    hit[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

bool PartialMap::is_partial_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kUndefined && images_[x] != static_cast<std::int32_t>(x)) return false;
  return true;
}

PartialMap PartialMap::inverse() const {
  PartialMap g(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != kUndefined) g.images_[static_cast<std::size_t>(images_[x])] = static_cast<std::int32_t>(x);
  return g;
}

PartialMap compose(const PartialMap& f, const PartialMap& g) {
  PartialMap h(g.images_.size());
  for (std::size_t x = 0; x < g.images_.size(); ++x) {
    const auto y = g.images_[x];
    if (y != PartialMap::kUndefined) h.images_[x] = f.images_[static_cast<std::size_t>(y)];
  }
  return h;
}

std::string PartialMap::to_string(const std::vector<std::string>& names) const {
  auto name = [&](std::size_t x) { return names.empty() ? std::to_string(x) : names[x]; };
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] == kUndefined) continue;
    if (!first) out << ',';
    first = false;
    out << name(x) << ':' << name(static_cast<std::size_t>(images_[x]));
  }
  out << '}';
  return out.str();
}

}  // namespace isg
