#pragma once

#include "reconf/graph.hpp"

#include <cstddef>
#include <vector>

namespace reconf {

/// Ordered partition of the vertex set into buckets.
struct BucketArrangement {
    std::vector<std::vector<VertexId>> buckets;

    std::size_t max_bucket_size() const;
};

/// True iff each edge lies inside one bucket or spans two consecutive ones.
/// Throws ValidationError when `a` does not partition V(g).
bool verify_bucket_arrangement(const Graph& g, const BucketArrangement& a);

/// Max edge stretch |f(u) - f(v)| of an injective layout. Throws on
/// non-injective or incomplete layouts.
std::size_t bandwidth_of_layout(const Graph& g, const std::vector<std::size_t>& position);

/// Bucket-by-bucket layout (positions 1, 2, ... in bucket order, vertices
/// within a bucket in listed order).
std::vector<std::size_t> bucket_layout(const Graph& g, const BucketArrangement& a);

} // namespace reconf
