#include "ksgen/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ksgen {

Graph::Graph(int n) : n_(n) {
    if (n < 1)
        throw ArgumentError("graph order must be >= 1, got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

int Graph::index(int i, int j) const { return (i - 1) * n_ + (j - 1); }

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n_));
}

bool Graph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return false;
    return adj_[index(i, j)] != 0;
}

void Graph::set_edge(int i, int j, bool present) {
    check_vertex(i);
    check_vertex(j);
    if (i == j)
        throw ArgumentError("self-loops are not representable");
    adj_[index(i, j)] = present ? 1 : 0;
    adj_[index(j, i)] = present ? 1 : 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        d += adj_[index(v, u)];
    return d;
}

int Graph::edge_count() const {
    int total = std::accumulate(adj_.begin(), adj_.end(), 0);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 2; j <= n_; ++j)
        for (int i = 1; i < j; ++i)
            if (adj_[index(i, j)]) out.emplace_back(i, j);
    return out;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    if (n_ > 64)
        throw ArgumentError("row64 requires order <= 64");
    std::uint64_t row = 0;
    for (int u = 1; u <= n_; ++u)
        if (adj_[index(v, u)]) row |= std::uint64_t{1} << (u - 1);
    return row;
}

std::vector<std::uint8_t> Graph::adjacency_bits() const {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 2; j <= n_; ++j)
        for (int i = 1; i < j; ++i)
            bits.push_back(adj_[index(i, j)]);
    return bits;
}

std::string Graph::adjacency_list() const {
    std::ostringstream out;
    for (int v = 1; v <= n_; ++v) {
        out << v << ':';
        for (int u = 1; u <= n_; ++u)
            if (adj_[index(v, u)]) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

Permutation::Permutation(int n) {
    if (n < 1)
        throw ArgumentError("permutation size must be >= 1");
    image_.resize(n);
    std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_image(std::vector<int> image) {
    const int n = static_cast<int>(image.size());
    if (n < 1)
        throw ArgumentError("permutation image must be nonempty");
    std::vector<std::uint8_t> seen(n + 1, 0);
    for (int v : image) {
        if (v < 1 || v > n || seen[v])
            throw ArgumentError("image is not a bijection on 1.." + std::to_string(n));
        seen[v] = 1;
    }
    Permutation p(n);
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 1; i <= size(); ++i)
        inv[image_[i - 1] - 1] = i;
    Permutation p(size());
    p.image_ = std::move(inv);
    return p;
}

Permutation Permutation::then(const Permutation& q) const {
    if (q.size() != size())
        throw ArgumentError("composing permutations of different sizes");
    std::vector<int> img(image_.size());
    for (int i = 1; i <= size(); ++i)
        img[i - 1] = q(image_[i - 1]);
    Permutation p(size());
    p.image_ = std::move(img);
    return p;
}

Graph prefix(const Graph& g, int k) {
    if (k < 1 || k > g.order())
        throw ArgumentError("prefix size " + std::to_string(k) + " out of range 1.." +
                            std::to_string(g.order()));
    Graph h(k);
    for (int j = 2; j <= k; ++j)
        for (int i = 1; i < j; ++i)
            if (g.has_edge(i, j)) h.set_edge(i, j);
    return h;
}

Graph apply_perm(const Graph& g, const Permutation& p) {
    if (p.size() != g.order())
        throw ArgumentError("permutation size does not match graph order");
    Graph h(g.order());
    for (int j = 2; j <= g.order(); ++j)
        for (int i = 1; i < j; ++i)
            if (g.has_edge(i, j)) h.set_edge(p(i), p(j));
    return h;
}

Graph delete_vertex(const Graph& g, int v) {
    if (g.order() < 2)
        throw ArgumentError("cannot delete the last vertex");
    if (v < 1 || v > g.order())
        throw ArgumentError("vertex out of range");
    Graph h(g.order() - 1);
    auto shift = [v](int u) { return u < v ? u : u - 1; };
    for (int j = 2; j <= g.order(); ++j) {
        if (j == v) continue;
        for (int i = 1; i < j; ++i) {
            if (i == v) continue;
            if (g.has_edge(i, j)) h.set_edge(shift(i), shift(j));
        }
    }
    return h;
}

EdgeVarMap::EdgeVarMap(int n) : n_(n) {
    if (n < 1)
        throw ArgumentError("edge map order must be >= 1");
}

int EdgeVarMap::var(int i, int j) const {
    if (i >= j)
        throw ArgumentError("edge_var requires i < j");
    if (i < 1 || j > n_)
        throw ArgumentError("edge_var pair out of range");
    return (j - 1) * (j - 2) / 2 + i;
}

std::pair<int, int> EdgeVarMap::pair_of(int var) const {
    if (var < 1 || var > var_count())
        throw ArgumentError("edge variable out of range");
    // Largest j with (j-1)(j-2)/2 < var.
    int j = static_cast<int>((1.0 + std::sqrt(8.0 * (var - 1) + 1.0)) / 2.0) + 1;
    while ((j - 1) * (j - 2) / 2 >= var) --j;
    while (j * (j - 1) / 2 < var) ++j;
    int i = var - (j - 1) * (j - 2) / 2;
    return {i, j};
}

namespace {

void append_bits_graph6(std::string& out, const std::vector<std::uint8_t>& bits) {
    int acc = 0, nbits = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++nbits == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) {
        acc <<= (6 - nbits);
        out.push_back(static_cast<char>(acc + 63));
    }
}

} // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw ArgumentError("graph too large for graph6 encoding");
    }
    append_bits_graph6(out, g.adjacency_bits());
    return out;
}

Graph decode_graph6(const std::string& text) {
    std::size_t pos = 0;
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) {
        s = s.substr(10);
    }
    if (s.empty())
        throw ParseError("empty graph6 string", 0);

    long n;
    if (s[pos] == 126) {
        if (s.size() < 4)
            throw ParseError("truncated graph6 order", s.size());
        if (s[1] == 126)
            throw ParseError("graph6 orders above 258047 unsupported", 1);
        n = 0;
        for (int k = 1; k <= 3; ++k) {
            int c = static_cast<unsigned char>(s[k]) - 63;
            if (c < 0 || c > 63)
                throw ParseError("invalid graph6 byte", k);
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        int c = static_cast<unsigned char>(s[pos]) - 63;
        if (c < 0 || c > 62)
            throw ParseError("invalid graph6 order byte", pos);
        n = c;
        pos = 1;
    }
    if (n < 1)
        throw ParseError("graph6 order must be >= 1", 0);

    const long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != nbytes)
        throw ParseError("graph6 body has wrong length", s.size());

    Graph g(static_cast<int>(n));
    long t = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        int c = static_cast<unsigned char>(s[pos + k]) - 63;
        if (c < 0 || c > 63)
            throw ParseError("invalid graph6 byte", pos + k);
        for (int b = 5; b >= 0; --b) {
            if (t >= nbits) {
                if ((c >> b) & 1)
                    throw ParseError("nonzero padding bit", pos + k);
                continue;
            }
            if ((c >> b) & 1) {
                EdgeVarMap m(static_cast<int>(n));
                auto [i, j] = m.pair_of(static_cast<int>(t) + 1);
                g.set_edge(i, j);
            }
            ++t;
        }
    }
    return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ArgumentError("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out)
        throw ArgumentError("cannot open file for writing: " + path);
    for (const auto& g : graphs)
        out << encode_graph6(g) << '\n';
}

} // namespace ksgen
