#include "oa/roles.hpp"

#include <algorithm>
#include <stdexcept>

#include "oa/errors.hpp"

namespace oa {

VertexRange RoleMap::append(std::string name, std::size_t count) {
  if (index_.count(name)) throw PreconditionError("duplicate role block '" + name + "'");
  VertexRange range{static_cast<Vertex>(order_), count};
  index_.emplace(name, blocks_.size());
  blocks_.push_back({std::move(name), range.first, count});
  order_ += count;
  return range;
}

bool RoleMap::has(std::string_view name) const { return index_.count(std::string(name)) > 0; }

VertexRange RoleMap::operator[](std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("no role block named '" + std::string(name) + "'");
  const Block& b = blocks_[it->second];
  return {b.first, b.count};
}

Vertex RoleMap::vertex(std::string_view name) const {
  VertexRange r = (*this)[name];
  if (r.count != 1) throw std::out_of_range("role block '" + std::string(name) + "' is not a single vertex");
  return r.first;
}

const RoleMap::Block& RoleMap::block_of(Vertex v) const {
  if (v >= order_) throw std::out_of_range("vertex " + std::to_string(v) + " has no role");
  // Blocks are appended in identifier order; empty blocks never match.
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), v,
                             [](Vertex x, const Block& b) { return x < b.first; });
  while (it != blocks_.begin()) {
    --it;
    if (it->count > 0 && v - it->first < it->count) return *it;
  }
  throw std::out_of_range("vertex " + std::to_string(v) + " has no role");
}

std::string RoleMap::role(Vertex v) const {
  const Block& b = block_of(v);
  if (b.count == 1) return b.name;
  return b.name + "[" + std::to_string(v - b.first + 1) + "]";
}

bool RoleMap::operator==(const RoleMap& other) const {
  if (order_ != other.order_ || blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].name != other.blocks_[i].name || blocks_[i].first != other.blocks_[i].first ||
        blocks_[i].count != other.blocks_[i].count)
      return false;
  return true;
}

}  // namespace oa
