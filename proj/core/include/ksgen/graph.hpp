#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ksgen/error.hpp"

namespace ksgen {

/// Labeled undirected graph. Vertices carry 1-based labels 1..n; the
/// adjacency relation is symmetric and loop-free. Instances are cheap
/// value types and immutable for all practical purposes once built, so
/// they can be shared freely between threads.
class Graph {
public:
    explicit Graph(int n);

    int order() const noexcept { return n_; }

    bool has_edge(int i, int j) const;
    void set_edge(int i, int j, bool present = true);

    int degree(int v) const;
    int edge_count() const;

    /// All edges (i, j) with i < j, in column-major order: sorted by j,
    /// then by i. This is the order edge variables are numbered in.
    std::vector<std::pair<int, int>> edges() const;

    /// Adjacency row of vertex v as a bitmask over labels 1..64
    /// (bit k-1 set iff v ~ k). Only valid for order() <= 64.
    std::uint64_t row64(int v) const;

    /// Column-major upper-triangle adjacency bits: entry t corresponds to
    /// the pair EdgeVarMap::pair_of(t + 1). Lexicographic comparison of
    /// these strings (0 < 1) is the ordering used by the lex canonizer.
    std::vector<std::uint8_t> adjacency_bits() const;

    /// One line per vertex: "v: u1 u2 ..." with neighbors ascending.
    std::string adjacency_list() const;

    bool operator==(const Graph&) const = default;

private:
    int index(int i, int j) const;
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint8_t> adj_; // row-major n*n, symmetric, zero diagonal
};

/// Bijection on {1..n}. image(i) is the label vertex i is mapped to.
class Permutation {
public:
    explicit Permutation(int n); // identity

    /// Builds from a 1-based image vector; throws unless it is a bijection.
    static Permutation from_image(std::vector<int> image);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i - 1]; }

    Permutation inverse() const;

    /// Composition: (this->then(q))(i) == q(this(i)).
    Permutation then(const Permutation& q) const;

    const std::vector<int>& image() const noexcept { return image_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// Induced subgraph on labels {1..k}.
Graph prefix(const Graph& g, int k);

/// Relabeled copy: adj'(p(i), p(j)) = adj(i, j).
Graph apply_perm(const Graph& g, const Permutation& p);

/// Copy of g with vertex v removed; labels above v shift down by one.
Graph delete_vertex(const Graph& g, int v);

/// Maps unordered vertex pairs to contiguous variable indices 1..C(n,2).
/// The ordering is column-major -- var(i, j) = (j-1)(j-2)/2 + i for
/// i < j -- so that the pairs within {1..k} occupy exactly the first
/// C(k,2) indices for every k (prefix contiguity).
class EdgeVarMap {
public:
    explicit EdgeVarMap(int n);

    int order() const noexcept { return n_; }
    int var_count() const noexcept { return n_ * (n_ - 1) / 2; }

    int var(int i, int j) const;
    std::pair<int, int> pair_of(int var) const;

private:
    int n_;
};

/// graph6 text form (canonical short/long encodings per the public format).
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& text);

/// One graph6 string per line; '#' comments and blank lines are skipped.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

} // namespace ksgen
