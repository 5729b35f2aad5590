#include "pentacover/graph6.hpp"

#include <algorithm>
#include <fstream>

namespace pentacover {

namespace {

constexpr long long kMaxN = 258047; // 3-byte N(n) is plenty at desk scale

void append_size(std::string& s, long long n) {
    if (n <= 62) {
        s.push_back(static_cast<char>(n + 63));
    } else if (n <= kMaxN) {
        s.push_back(126);
        s.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        s.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        s.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw format_error("graph too large for this writer");
    }
}

long long parse_size(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw format_error("truncated size header");
    unsigned char c = s[pos];
    if (c == 126) {
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126)
            throw format_error("8-byte size header not supported");
        if (pos + 3 >= s.size()) throw format_error("truncated size header");
        long long n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char b = s[pos + i];
            if (b < 63 || b > 126) throw format_error("invalid size byte");
            n = (n << 6) | (b - 63);
        }
        pos += 4;
        return n;
    }
    if (c < 63 || c > 126) throw format_error("invalid size byte");
    pos += 1;
    return c - 63;
}

class BitWriter {
public:
    void push(int bit) {
        cur_ = (cur_ << 1) | (bit & 1);
        if (++fill_ == 6) {
            out_.push_back(static_cast<char>(cur_ + 63));
            cur_ = 0;
            fill_ = 0;
        }
    }
    void push_bits(long long value, int width) {
        for (int i = width - 1; i >= 0; --i) push(static_cast<int>((value >> i) & 1));
    }
    int partial_bits() const { return fill_; }
    void pad(int bit) {
        while (fill_ != 0) push(bit);
    }
    std::string take() { return std::move(out_); }

private:
    std::string out_;
    int cur_ = 0;
    int fill_ = 0;
};

class BitReader {
public:
    BitReader(const std::string& s, size_t pos) : s_(s), pos_(pos) {}
    long long bits_left() const {
        return static_cast<long long>(s_.size() - pos_) * 6 + fill_;
    }
    int next() {
        if (fill_ == 0) {
            if (pos_ >= s_.size()) throw format_error("bit stream exhausted");
            unsigned char c = s_[pos_++];
            if (c < 63 || c > 126) throw format_error("invalid data byte");
            cur_ = c - 63;
            fill_ = 6;
        }
        --fill_;
        return (cur_ >> fill_) & 1;
    }
    long long next_bits(int width) {
        long long v = 0;
        for (int i = 0; i < width; ++i) v = (v << 1) | next();
        return v;
    }

private:
    const std::string& s_;
    size_t pos_;
    int cur_ = 0;
    int fill_ = 0;
};

int bits_for(long long x) { // bit length, at least 1
    int k = 1;
    while ((1LL << k) - 1 < x) ++k;
    return x <= 1 ? 1 : k;
}

} // namespace

std::string to_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    append_size(out, n);
    BitWriter w;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) w.push(g.adjacent(i, j) ? 1 : 0);
    w.pad(0);
    out += w.take();
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    long long n = parse_size(s, pos);
    BitReader r(s, pos);
    long long need = n * (n - 1) / 2;
    if (r.bits_left() < need || r.bits_left() >= need + 6)
        throw format_error("graph6 data length mismatch for n = " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (r.next()) edges.emplace_back(i, j);
    return Graph(static_cast<int>(n), edges);
}

std::string to_sparse6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out = ":";
    append_size(out, n);
    int k = bits_for(n - 1);

    auto edges = g.edges(); // (min, max) pairs
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) {
                  return std::make_pair(a.second, a.first) < std::make_pair(b.second, b.first);
              });

    BitWriter w;
    long long v = 0;
    for (auto [u, x] : edges) { // x = max endpoint
        if (x == v) {
            w.push(0);
            w.push_bits(u, k);
        } else if (x == v + 1) {
            v = x;
            w.push(1);
            w.push_bits(u, k);
        } else {
            v = x;
            w.push(1);
            w.push_bits(x, k);
            w.push(0);
            w.push_bits(u, k);
        }
    }

    // Pad with 1s; when n is a power of two, a full spurious pair could
    // decode as a loop at n-1 if v = n-2, so the first pad bit is 0 then.
    int partial = w.partial_bits();
    int padding = partial == 0 ? 0 : 6 - partial;
    if ((n & (n - 1)) == 0 && n >= 2 && padding >= k + 1 && v == n - 2) w.push(0);
    w.pad(1);
    out += w.take();
    return out;
}

Graph from_sparse6(const std::string& s) {
    if (s.empty() || s[0] != ':') throw format_error("sparse6 must start with ':'");
    size_t pos = 1;
    long long n = parse_size(s, pos);
    int k = bits_for(n - 1);
    BitReader r(s, pos);
    std::vector<std::pair<int, int>> edges;
    long long v = 0;
    while (r.bits_left() >= 1 + k) {
        int b = r.next();
        long long x = r.next_bits(k);
        if (b) ++v;
        if (v >= n) break;
        if (x > v) {
            if (x >= n) break;
            v = x;
        } else if (x == v) {
            throw format_error("sparse6: loop rejected");
        } else {
            edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_string(const std::string& raw) {
    std::string s = raw;
    auto strip_prefix = [&](const std::string& p) {
        if (s.rfind(p, 0) == 0) s = s.substr(p.size());
    };
    strip_prefix(">>graph6<<");
    strip_prefix(">>sparse6<<");
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw format_error("empty graph string");
    return s[0] == ':' ? from_sparse6(s) : from_graph6(s);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw format_error("cannot open " + path);
    std::string line;
    std::getline(in, line);
    return read_graph_string(line);
}

void write_graph_file(const std::string& path, const Graph& g, const std::string& format) {
    std::string data;
    if (format == "graph6")
        data = to_graph6(g);
    else if (format == "sparse6")
        data = to_sparse6(g);
    else
        throw format_error("unknown format '" + format + "' (expected graph6 or sparse6)");
    std::ofstream out(path);
    if (!out) throw format_error("cannot write " + path);
    out << data << '\n';
}

} // namespace pentacover
