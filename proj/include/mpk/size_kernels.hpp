#pragma once

#include <mpk/graph.hpp>
#include <mpk/monopolar_kernel.hpp>
#include <mpk/pattern.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mpk {

inline constexpr int max_forbidden_order = 5;

struct SetFamily {
    int universe = 0;
    int d = 0;
    std::vector<VertexSet> sets;
};

struct Sunflower {
    VertexSet core;
    std::vector<std::size_t> members;
};

// Multiplication that sticks at UINT64_MAX instead of wrapping.
auto saturating_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t;

// d! (k+1)^d
auto sunflower_bound(int d, int k) -> std::uint64_t;

// A sunflower with the requested number of petals inside an inclusion-free
// family; guaranteed to exist once the family exceeds d! (petals-1)^d.
auto find_sunflower(const std::vector<VertexSet> & sets, int petals) -> std::optional<Sunflower>;

struct SunflowerReduction {
    SetFamily family;
    bool forced_no = false;
};

auto sunflower_reduce(const SetFamily & f, int k) -> SunflowerReduction;

auto enumerate_forbidden_sets(const Graph & g, const std::vector<Graph> & patterns) -> SetFamily;

struct BSizeKernelResult : KernelResult {
    bool forced_no = false;
    std::vector<Vertex> to_original;
};

auto b_size_kernel_bound(int d, int k) -> std::uint64_t;

auto kernelize_by_b_size(const Graph & g, int k, const std::vector<Graph> & forbidden) -> BSizeKernelResult;

struct P3Packing {
    std::vector<VertexSet> triples;
    VertexSet v_p;
};

auto greedy_p3_packing(const Graph & g) -> P3Packing;

enum class PackingClass { heavy, nonheavy_fixed, nonfixed };

struct LabelState {
    std::vector<VertexSet> clusters;                         // of G - V(P), ordered by lowest id
    std::vector<int> cluster_of;                             // -1 on packing vertices
    std::vector<std::optional<PackingClass>> classification; // set on packing vertices only
    std::vector<char> important;

    auto important_set() const -> VertexSet;
};

auto classify_and_label(const Graph & g, const P3Packing & p, int k, int delta) -> LabelState;

auto important_bound(int k, int delta) -> std::uint64_t;
auto cluster_delta_bound(int k, int delta) -> std::uint64_t;

struct ClusterDeltaKernelResult : KernelResult {
    P3Packing packing;
    LabelState labels;
    std::vector<std::string> phases;
    std::vector<Vertex> to_original;
};

auto kernelize_cluster_delta(const Graph & g, int k, int delta) -> ClusterDeltaKernelResult;

}
