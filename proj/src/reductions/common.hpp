#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oa/errors.hpp"
#include "oa/reductions.hpp"

namespace oa::detail {

// Resolves the free "pick `count` members of this block" choices.
class Chooser {
 public:
  explicit Chooser(const ReductionOptions& opts) {
    if (opts.seed) rng_.emplace(*opts.seed);
  }

  std::vector<Vertex> pick(VertexRange from, std::size_t count) {
    if (count > from.count)
      throw PreconditionError("cannot choose " + std::to_string(count) + " of " + std::to_string(from.count) +
                              " vertices");
    std::vector<Vertex> out;
    out.reserve(count);
    if (!rng_) {
      for (std::size_t i = 0; i < count; ++i) out.push_back(from[i]);
      return out;
    }
    std::vector<Vertex> all(from.count);
    for (std::size_t i = 0; i < from.count; ++i) all[i] = from[i];
    std::sample(all.begin(), all.end(), std::back_inserter(out), count, *rng_);
    return out;
  }

 private:
  std::optional<std::mt19937_64> rng_;
};

inline void check_order(std::size_t order, const ReductionOptions& opts, const char* what) {
  if (order > opts.max_vertices)
    throw DeskScaleError(std::string(what) + " would have " + std::to_string(order) + " vertices (limit " +
                         std::to_string(opts.max_vertices) + ")");
}

inline ParameterRecord record(std::string reduction, std::string name, std::string formula,
                              std::vector<std::pair<std::string, long long>> inputs, long long value) {
  return ParameterRecord{std::move(reduction), std::move(name), std::move(formula), std::move(inputs), value};
}

inline void add_star(GraphBuilder& b, Vertex center, VertexRange leaves) {
  for (std::size_t i = 0; i < leaves.count; ++i) b.add_edge(center, leaves[i]);
}

inline void add_join(GraphBuilder& b, VertexRange left, VertexRange right) {
  for (std::size_t i = 0; i < left.count; ++i)
    for (std::size_t j = 0; j < right.count; ++j) b.add_edge(left[i], right[j]);
}

inline void add_clique(GraphBuilder& b, VertexRange block) {
  for (std::size_t i = 0; i < block.count; ++i)
    for (std::size_t j = i + 1; j < block.count; ++j) b.add_edge(block[i], block[j]);
}

/// Copies the input roles and keeps the input graph as identifiers 0..n-1.
inline ReducedInstance extend(const ReducedInstance& in, std::string reduction) {
  ReducedInstance out;
  out.roles = in.roles;
  out.source_order = in.instance.graph.order();
  out.modulator = in.modulator;
  out.provenance.reduction = std::move(reduction);
  out.provenance.parameters = in.provenance.parameters;
  out.instance.exact = in.instance.exact;
  return out;
}

std::string stage_digest(const ReducedInstance& in);

}  // namespace oa::detail
