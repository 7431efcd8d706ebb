#include "ccf/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

long long to_ll(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw ParseError("bad " + what + ": '" + tok + "'");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + tok + "'");
    }
}

}  // namespace

Instance read_instance(std::istream& in) {
    std::string line;
    bool have_header = false;
    long long n = 0, m = 0, cap = 0;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;  // blank line
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_header) throw ParseError("line " + std::to_string(lineno) + ": duplicate header");
            std::string fmt, a, b, c, extra;
            if (!(ls >> fmt >> a >> b >> c) || fmt != "ccf" || (ls >> extra))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed header, expected 'p ccf <n> <m> <C>'");
            n = to_ll(a, "vertex count");
            m = to_ll(b, "edge count");
            cap = to_ll(c, "capacity");
            if (n < 0) throw ParseError("negative vertex count");
            if (m < 0) throw ParseError("negative edge count");
            if (cap < 1) throw ParseError("capacity must be >= 1");
            have_header = true;
            edges.reserve(static_cast<size_t>(m));
        } else if (kind == "e") {
            if (!have_header)
                throw ParseError("line " + std::to_string(lineno) + ": edge before header");
            std::string a, b, c, extra;
            if (!(ls >> a >> b >> c) || (ls >> extra))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": malformed edge, expected 'e <u> <v> <w>'");
            long long u = to_ll(a, "vertex"), v = to_ll(b, "vertex"), w = to_ll(c, "weight");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
            if (w < 0) throw ParseError("line " + std::to_string(lineno) + ": negative weight");
            edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown line kind '" + kind + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'p ccf' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    try {
        return Instance{WeightedGraph(static_cast<int>(n), std::move(edges)),
                        static_cast<int>(cap)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());  // duplicate edge
    }
}

Instance read_instance_string(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_instance(in);
}

std::string write_instance(const Instance& inst, const std::vector<std::string>& comments) {
    std::ostringstream out;
    out << "p ccf " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' '
        << inst.capacity << '\n';
    for (const std::string& c : comments) out << "c " << c << '\n';
    for (const Edge& e : inst.graph.edges()) out << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

std::string write_result(const SolveResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : r.partition.normalized().coalitions) cs.push_back(c);
    j["coalitions"] = std::move(cs);
    j["solver"] = r.solver;
    j["elapsed_ms"] = r.elapsed.count();
    return j.dump();
}

CPartition read_partition_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad partition JSON: ") + e.what());
    }
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coalitions")) throw ParseError("partition object lacks 'coalitions'");
        arr = &j["coalitions"];
    }
    if (!arr->is_array()) throw ParseError("partition must be an array of arrays");
    CPartition p;
    for (const auto& c : *arr) {
        if (!c.is_array()) throw ParseError("coalition must be an array");
        std::vector<int> members;
        for (const auto& v : c) {
            if (!v.is_number_integer()) throw ParseError("coalition member must be an integer");
            members.push_back(v.get<int>());
        }
        p.coalitions.push_back(std::move(members));
    }
    return p;
}

CPartition read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_partition_string(ss.str());
}

}  // namespace ccf
