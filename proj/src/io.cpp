#include "walklen/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace walklen {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_value(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "inf" || t == "+inf" || t == "infinity") return kInf;
    if (t == "-inf" || t == "-infinity") return -kInf;
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw IoError("cannot parse number: '" + token + "'");
    }
    if (used != t.size()) throw IoError("cannot parse number: '" + token + "'");
    return v;
}

void write_matrix_csv(std::ostream& os, const std::vector<std::vector<double>>& m) {
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << format_value(row[j]);
        }
        os << '\n';
    }
}

std::vector<std::vector<double>> read_matrix_csv(std::istream& is) {
    std::vector<std::vector<double>> m;
    std::string line;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const auto& tok : split(line, ',')) row.push_back(parse_value(tok));
        m.push_back(std::move(row));
    }
    for (const auto& row : m)
        if (row.size() != m.size()) throw IoError("matrix CSV is not square");
    return m;
}

void write_graph_csv(std::ostream& os, const WeightedDigraph& g) {
    const int n = g.size();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = g(u, v);
    write_matrix_csv(os, m);
}

namespace {

const std::string kEdgeListHeader = "source,target,weight";

} // namespace

WeightedDigraph read_edge_list_csv(std::istream& is, std::vector<std::string>* names) {
    std::string line;
    if (!std::getline(is, line) || lower(trim(line)) != kEdgeListHeader)
        throw IoError("edge list CSV must start with header `source,target,weight`");

    std::unordered_map<std::string, int> index;
    std::vector<std::string> order;
    std::vector<std::tuple<int, int, double>> edges;
    const auto vertex = [&](const std::string& name) {
        const auto [it, inserted] = index.emplace(name, static_cast<int>(order.size()));
        if (inserted) order.push_back(name);
        return it->second;
    };
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3) throw IoError("edge list row needs 3 fields: '" + line + "'");
        const int u = vertex(trim(parts[0]));
        const int v = vertex(trim(parts[1]));
        edges.emplace_back(u, v, parse_value(parts[2]));
    }
    WeightedDigraph g(static_cast<int>(order.size()));
    for (const auto& [u, v, w] : edges)
        if (u != v || w != 0.0) g.set(u, v, w);
    if (names) *names = order;
    return g;
}

WeightedDigraph read_graph_csv(std::istream& is) {
    std::string first;
    if (!std::getline(is, first)) throw IoError("empty graph input");
    if (lower(trim(first)) == kEdgeListHeader) {
        std::stringstream rest;
        rest << first << '\n' << is.rdbuf();
        return read_edge_list_csv(rest);
    }
    std::stringstream rest;
    rest << first << '\n' << is.rdbuf();
    const auto m = read_matrix_csv(rest);
    const int n = static_cast<int>(m.size());
    WeightedDigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            g.set(u, v, m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    return g;
}

WeightedDigraph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open file: " + path);
    return read_graph_csv(f);
}

void write_filtration_csv(std::ostream& os, const FilteredComplex& fc) {
    os << "dim,vertices,value\n";
    for (const auto& cell : fc.cells) {
        os << cell.simplex.dim() << ',';
        for (int i = 0; i < cell.simplex.n_vertices; ++i) {
            if (i) os << ';';
            os << cell.simplex[i];
        }
        os << ',' << format_value(cell.value) << '\n';
    }
}

bool looks_like_filtration_csv(const std::string& first_line) {
    return lower(trim(first_line)) == "dim,vertices,value";
}

FilteredComplex read_filtration_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || !looks_like_filtration_csv(line))
        throw IoError("filtration CSV must start with header `dim,vertices,value`");
    FilteredComplex fc;
    std::uint32_t max_vertex = 0;
    std::vector<std::vector<std::uint32_t>> simplices;
    std::vector<double> values;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3) throw IoError("filtration row needs 3 fields: '" + line + "'");
        std::vector<std::uint32_t> verts;
        for (const auto& tok : split(parts[1], ';')) {
            const double v = parse_value(tok);
            if (v < 0 || v != std::floor(v)) throw IoError("bad vertex index: '" + tok + "'");
            verts.push_back(static_cast<std::uint32_t>(v));
        }
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw IoError("simplex has repeated vertices: '" + line + "'");
        if (verts.size() > Simplex::kMaxVertices) throw IoError("simplex has too many vertices: '" + line + "'");
        if (verts.back() > 1'000'000) throw IoError("vertex index out of range: '" + line + "'");
        const int dim = static_cast<int>(parse_value(parts[0]));
        if (dim != static_cast<int>(verts.size()) - 1)
            throw IoError("dimension does not match vertex count: '" + line + "'");
        max_vertex = std::max(max_vertex, verts.back());
        fc.max_dim = std::max(fc.max_dim, dim);
        simplices.push_back(std::move(verts));
        values.push_back(parse_value(parts[2]));
    }
    fc.n_vertices = static_cast<int>(max_vertex) + 1;
    const BinomialTable binom(fc.n_vertices, fc.max_dim + 2);
    std::set<std::pair<int, std::uint64_t>> seen;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        FilteredComplex::Cell cell;
        cell.simplex.n_vertices = static_cast<std::uint8_t>(simplices[i].size());
        std::copy(simplices[i].begin(), simplices[i].end(), cell.simplex.v.begin());
        cell.value = values[i];
        cell.colex_rank = colex_rank(simplices[i], binom);
        if (!seen.insert({cell.simplex.dim(), cell.colex_rank}).second)
            throw IoError("filtration CSV repeats a simplex");
        fc.cells.push_back(cell);
    }
    return fc;
}

void write_diagram_csv(std::ostream& os, const PersistenceDiagram& dgm) {
    os << "dim,birth,death\n";
    for (const auto& p : dgm.points)
        os << p.dim << ',' << format_value(p.birth) << ',' << format_value(p.death) << '\n';
}

PersistenceDiagram read_diagram_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || lower(trim(line)) != "dim,birth,death")
        throw IoError("diagram CSV must start with header `dim,birth,death`");
    PersistenceDiagram dgm;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3) throw IoError("diagram row needs 3 fields: '" + line + "'");
        const double birth = parse_value(parts[1]);
        const double death = parse_value(parts[2]);
        if (!std::isfinite(birth) || death < birth) throw IoError("bad diagram point: '" + line + "'");
        dgm.points.push_back({static_cast<int>(parse_value(parts[0])), birth, death});
    }
    return dgm;
}

PersistenceDiagram read_diagram_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open file: " + path);
    return read_diagram_csv(f);
}

void write_linkage_csv(std::ostream& os, const std::vector<LinkageMerge>& merges) {
    os << "step,cluster_a,cluster_b,distance\n";
    for (const auto& m : merges)
        os << m.step << ',' << m.cluster_a << ',' << m.cluster_b << ',' << format_value(m.distance) << '\n';
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write file: " + path);
    f << content;
}

} // namespace walklen
