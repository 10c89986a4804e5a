#include "maxcon/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace maxcon {

Graph parse_edge_list(std::istream& in) {
    int n = -1, m = -1;
    if (!(in >> n >> m)) throw ValidationError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw ValidationError("edge list: negative header values");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw ValidationError("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
        if (u > v) std::swap(u, v);  // accept either endpoint order
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (size_t j = 0; j < 6; ++j) {
            value <<= 1;
            if (i + j < bits.size() && bits[i + j]) value |= 1;
        }
        out.push_back(static_cast<char>(value + 63));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        std::vector<bool> nbits(18);
        for (int i = 0; i < 18; ++i) nbits[i] = (n >> (17 - i)) & 1;
        append_bits(out, nbits);
    } else {
        throw ScaleError("graph6: vertex count too large");
    }
    // upper triangle, column major: bit (i, j) for j = 2..n, i = 1..j-1
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_bits(out, bits);
    return out;
}

Graph decode_graph6(const std::string& line) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw ValidationError("graph6: truncated input");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw ValidationError("graph6: byte out of range");
        return c - 63;
    };
    long long n = 0;
    int first = next();
    if (first == 63) {  // '~'
        if (pos < line.size() && line[pos] == '~')
            throw ScaleError("graph6: 8-byte vertex counts unsupported");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    } else {
        n = first;
    }
    Graph g(static_cast<int>(n));
    long long need = n * (n - 1) / 2;
    int have = 0, buffer = 0;
    int i = 1, j = 2;
    for (long long b = 0; b < need; ++b) {
        if (have == 0) {
            buffer = next();
            have = 6;
        }
        bool bit = (buffer >> (have - 1)) & 1;
        --have;
        if (bit) g.add_edge(i, j);
        if (++i == j) {
            i = 1;
            ++j;
        }
    }
    if (pos != line.size()) throw ValidationError("graph6: trailing bytes after the bit field");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file '" + path + "'");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        std::string line;
        if (!std::getline(in, line) || line.empty())
            throw ValidationError("graph6 file '" + path + "' is empty");
        return decode_graph6(line);
    }
    return parse_edge_list(in);
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write graph file '" + path + "'");
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
        out << encode_graph6(g) << '\n';
    } else {
        out << write_edge_list(g);
    }
}

}  // namespace maxcon
