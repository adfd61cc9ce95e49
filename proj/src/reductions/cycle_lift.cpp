#include "reconf/adapters.hpp"
#include "reconf/error.hpp"
#include "reconf/reductions.hpp"

namespace reconf {

Digraph directed_cycle(std::size_t len)
{
    Digraph d;
    for (std::size_t i = 0; i < len; ++i)
        d.add_vertex("c" + std::to_string(i));
    for (std::size_t i = 0; i < len; ++i)
        d.add_arc(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % len));
    return d;
}

Graph undirected_cycle(std::size_t len)
{
    return underlying_graph(directed_cycle(len));
}

Configuration lift_cycle_coloring(const Configuration& alpha)
{
    Configuration out(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        out[i] = static_cast<std::uint32_t>(3 * alpha[i] + i % 3);
    return out;
}

Configuration unlift_cycle_coloring(const Configuration& lifted)
{
    Configuration out(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (lifted[i] % 3 != i % 3)
            throw DecodeError("lifted coloring breaks the frozen 3-coloring at vertex " + std::to_string(i));
        out[i] = lifted[i] / 3;
    }
    return out;
}

CycleLiftInstance lift_cycle(const Digraph& h, std::size_t cycle_len, const Configuration& alpha,
                             const Configuration& beta)
{
    if (cycle_len < 3 || cycle_len % 3 != 0)
        throw DomainError("cycle length must be a positive multiple of 3");
    const auto cycle = directed_cycle(cycle_len);
    if (!is_h_coloring(cycle, h, alpha) || !is_h_coloring(cycle, h, beta))
        throw ValidationError("colorings must be H-colorings of the directed cycle");
    CycleLiftInstance inst;
    inst.base = h;
    for (VertexId a = 0; a < h.num_vertices(); ++a)
        for (int i = 0; i < 3; ++i)
            inst.lifted.add_vertex("(" + h.name(a) + "," + std::to_string(i) + ")");
    for (auto [a, b] : h.arcs())
        for (std::uint32_t i = 0; i < 3; ++i)
            inst.lifted.add_edge(3 * a + i, 3 * b + (i + 1) % 3);
    inst.cycle = underlying_graph(cycle);
    inst.coloring_a = lift_cycle_coloring(alpha);
    inst.coloring_b = lift_cycle_coloring(beta);
    return inst;
}

ConfigurationSpace instance_space(const CycleLiftInstance& inst)
{
    return h_coloring_space(symmetric_digraph(inst.cycle), symmetric_digraph(inst.lifted), inst.coloring_a,
                            inst.coloring_b);
}

} // namespace reconf
