#pragma once

#include <mpk/graph.hpp>
#include <mpk/pattern.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace mpk {

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InconsistentSeed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MonopolarPartition {
    VertexSet a;
    VertexSet b;
};

struct ClusterPiPartition {
    VertexSet a;
    VertexSet b;
    int d = 0;
};

enum class Label : std::uint8_t { free, a, b };

class PartialAssignment {
public:
    PartialAssignment() = default;
    explicit PartialAssignment(int n) : labels_(n, Label::free) {}

    auto order() const -> int { return static_cast<int>(labels_.size()); }
    auto operator[](Vertex v) const -> Label { return labels_[v]; }
    // Throws InconsistentSeed on an out-of-range id or a conflicting label.
    void seed(Vertex v, Label l);
    auto free_count() const -> int;

private:
    std::vector<Label> labels_;
};

// Lines "A <id>" / "B <id>"; '#' comments allowed.
auto parse_seed(std::string_view text, int n) -> PartialAssignment;

inline constexpr int bruteforce_max_n = 20;
inline constexpr int propagation_max_free = 40;

// Independent B sets are tried in increasing binary order (bit v = vertex v).
auto solve_monopolar_bruteforce(const Graph & g, int k, int max_n = bruteforce_max_n)
    -> std::optional<MonopolarPartition>;

// Calls visit on every valid partition; stop early by returning false.
void for_each_monopolar_partition(const Graph & g, int k,
        const std::function<bool(const MonopolarPartition &)> & visit, int max_n = bruteforce_max_n);

struct SolverOptions {
    int max_free = propagation_max_free;
};

struct SolverStats {
    std::uint64_t nodes = 0;
};

auto solve_cluster_pi(const Graph & g, int d, const PiSpec & pi, const PartialAssignment & seed,
        SolverOptions options = {}, SolverStats * stats = nullptr) -> std::optional<ClusterPiPartition>;

auto validate_monopolar(const Graph & g, const MonopolarPartition & p, int k) -> Verdict;

// d < 0 means no cluster-count limit.
auto validate_cluster_pi(const Graph & g, const ClusterPiPartition & p, const PiSpec & pi) -> Verdict;

// Exhaustive search over B with |B| <= k such that G[A] is in pi_a and G[B] in pi_b.
auto solve_bounded_b_bruteforce(const Graph & g, int k, const PiSpec & pi_a, const PiSpec & pi_b)
    -> std::optional<VertexSet>;

auto format_partition(const VertexSet & a, const VertexSet & b) -> std::string;

}
