#include "uberhom/io.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace uberhom {

namespace {

std::size_t read_count(const Json& j) {
    if (!j.contains("vertex_count") || !j["vertex_count"].is_number_integer())
        throw InputError("\"vertex_count\" must be an integer");
    const auto m = j["vertex_count"].get<long long>();
    if (m < 0 || static_cast<unsigned long long>(m) > kMaxVertices)
        throw InputError("\"vertex_count\" must lie in [0, " + std::to_string(kMaxVertices) + "]");
    return static_cast<std::size_t>(m);
}

VertexId read_vertex(const Json& v, std::size_t m) {
    if (!v.is_number_integer()) throw InputError("vertex ids must be integers");
    const auto id = v.get<long long>();
    if (id < 0 || static_cast<unsigned long long>(id) >= m)
        throw InputError("vertex id " + std::to_string(id) + " out of range");
    return static_cast<VertexId>(id);
}

Json torsion_json(const std::vector<mpz_class>& torsion) {
    Json t = Json::array();
    for (const auto& d : torsion) {
        if (d.fits_slong_p()) t.push_back(d.get_si());
        else t.push_back(d.get_str());
    }
    return t;
}

std::string pad(const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

}  // namespace

Input parse_input(const Json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    const std::size_t m = read_count(j);
    Input in;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
        std::vector<Edge> edges;
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex ids");
            edges.emplace_back(read_vertex(e[0], m), read_vertex(e[1], m));
        }
        in.graph = Graph::from_edges(m, edges);
        in.complex = graph_complex(in.graph);
        in.is_graph = true;
        return in;
    }
    if (!j.contains("facets") || !j["facets"].is_array()) throw InputError("expected \"facets\" or \"edges\"");
    std::vector<std::vector<VertexId>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array() || f.empty()) throw InputError("each facet must be a non-empty array of vertex ids");
        std::vector<VertexId> face;
        for (const auto& v : f) face.push_back(read_vertex(v, m));
        facets.push_back(std::move(face));
    }
    in.complex = SimplicialComplex::from_facets(m, facets);
    if (j.contains("labels")) {
        const auto& l = j["labels"];
        if (!l.is_array() || l.size() != m) throw InputError("\"labels\" must list one string per vertex");
        std::vector<std::string> labels;
        for (const auto& s : l) {
            if (!s.is_string()) throw InputError("labels must be strings");
            labels.push_back(s.get<std::string>());
        }
        in.complex = in.complex.with_labels(std::move(labels));
    }
    in.graph = one_skeleton(in.complex);
    return in;
}

Input parse_input_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input(j);
}

Input read_input(std::istream& in) {
    return parse_input_text(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

Json complex_to_json(const SimplicialComplex& x) {
    Json j;
    j["vertex_count"] = x.vertex_count();
    Json facets = Json::array();
    for (Simplex s : x.facets()) facets.push_back(s.vertices());
    j["facets"] = facets;
    if (!x.labels().empty()) j["labels"] = x.labels();
    return j;
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertex_count"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

void put_coefficients(Json& j, const Coefficients& c) {
    if (const auto* p = std::get_if<PrimeField>(&c); p && p->characteristic() != 2) {
        j["coefficients"] = "Fp";
        j["prime"] = p->characteristic();
        return;
    }
    j["coefficients"] = coefficient_name(c);
}

Json group_entry(std::vector<int> degree, std::size_t rank, const std::vector<mpz_class>& torsion) {
    Json g;
    g["degree"] = degree;
    g["rank"] = rank;
    g["torsion"] = torsion_json(torsion);
    return g;
}

Json homology_json(const Coefficients& c, const std::vector<AbelianGroup>& groups, bool reduced) {
    Json j;
    put_coefficients(j, c);
    j["grading"] = "(i)";
    j["reduced"] = reduced;
    Json g = Json::array();
    // reduced lists start at degree -1
    const int shift = reduced ? -1 : 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        g.push_back(group_entry({static_cast<int>(i) + shift}, groups[i].free_rank, groups[i].torsion));
    j["groups"] = g;
    return j;
}

Json bigraded_json(const Coefficients& c, const BigradedDims& dims) {
    Json j;
    put_coefficients(j, c);
    j["grading"] = "(j,i)";
    Json g = Json::array();
    for (const auto& [k, d] : dims.dims) g.push_back(group_entry({k.first, k.second}, d));
    j["groups"] = g;
    return j;
}

Json trigraded_json(const TrigradedDims& dims) {
    Json j;
    put_coefficients(j, Coefficients{PrimeField(2)});
    j["grading"] = "(j,k,i)";
    Json g = Json::array();
    for (const auto& [k, d] : dims.dims) g.push_back(group_entry({std::get<0>(k), std::get<1>(k), std::get<2>(k)}, d));
    j["groups"] = g;
    return j;
}

Json bold_json(const Coefficients& c, const std::vector<AbelianGroup>& groups) {
    Json j;
    put_coefficients(j, c);
    j["grading"] = "(j)";
    Json g = Json::array();
    for (std::size_t i = 0; i < groups.size(); ++i)
        g.push_back(group_entry({static_cast<int>(i)}, groups[i].free_rank, groups[i].torsion));
    j["groups"] = g;
    j["euler_characteristic"] = euler_characteristic(groups);
    return j;
}

template <Field F>
Json page_json(const Page<F>& page, const F& field, int converged_at) {
    Json j;
    j["page"] = page.r;
    Json cells = Json::array();
    for (int p = page.p_min; p <= page.p_max; ++p)
        for (int q = 0; q <= page.q_max; ++q) cells.push_back({{"p", p}, {"q", q}, {"dim", page.dim(p, q)}});
    j["cells"] = cells;
    Json diffs = Json::array();
    for (const auto& [src, d] : page.differentials) {
        if (d.rows() == 0 || d.cols() == 0) continue;
        diffs.push_back({{"from", {src.first, src.second}},
                         {"to", {src.first - page.r, src.second + page.r - 1}},
                         {"rank", rank(field, d)}});
    }
    j["differentials"] = diffs;
    j["converged_at"] = converged_at;
    return j;
}

template Json page_json(const Page<PrimeField>&, const PrimeField&, int);
template Json page_json(const Page<RationalField>&, const RationalField&, int);

Json report_json(const Report& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["subject"] = r.subject;
    j["outcome"] = to_string(r.outcome);
    if (!r.reason.empty()) j["reason"] = r.reason;
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
    j["checks"] = checks;
    return j;
}

std::string homology_table(const std::vector<AbelianGroup>& groups, bool reduced) {
    std::ostringstream out;
    const int shift = reduced ? -1 : 0;
    for (std::size_t i = 0; i < groups.size(); ++i)
        out << (reduced ? "~H_" : "H_") << static_cast<int>(i) + shift << " = " << to_string(groups[i]) << "\n";
    return out.str();
}

std::string bigraded_table(const BigradedDims& dims, std::size_t vertex_count, int top_degree) {
    const int m = static_cast<int>(vertex_count);
    std::size_t width = 3;
    for (const auto& [k, d] : dims.dims) width = std::max(width, std::to_string(d).size() + 1);
    std::ostringstream out;
    for (int i = top_degree; i >= 0; --i) {
        out << pad("i=" + std::to_string(i), 5) << " |";
        for (int j = 0; j <= m; ++j) out << pad(std::to_string(dims.at(j, i)), width);
        out << "\n";
    }
    out << "      +" << std::string(width * static_cast<std::size_t>(m + 1), '-') << "\n       ";
    for (int j = 0; j <= m; ++j) out << pad(std::to_string(j), width);
    out << "  j\n";
    return out.str();
}

std::string bold_table(const std::vector<AbelianGroup>& groups) {
    std::ostringstream out;
    for (std::size_t j = 0; j < groups.size(); ++j) out << "H^" << j << " = " << to_string(groups[j]) << "\n";
    out << "chi = " << euler_characteristic(groups) << "\n";
    return out.str();
}

template <Field F>
std::string page_table(const Page<F>& page, const F& field) {
    std::size_t width = 4;
    for (int p = page.p_min; p <= page.p_max; ++p) {
        width = std::max(width, std::to_string(p).size() + 1);
        for (int q = 0; q <= page.q_max; ++q) width = std::max(width, std::to_string(page.dim(p, q)).size() + 1);
    }
    const std::size_t cols = static_cast<std::size_t>(std::max(page.p_max - page.p_min + 1, 0));
    std::ostringstream out;
    out << "E^" << page.r << "\n";
    for (int q = page.q_max; q >= 0; --q) {
        out << pad(std::to_string(q), 3) << " |";
        for (int p = page.p_min; p <= page.p_max; ++p) out << pad(std::to_string(page.dim(p, q)), width);
        out << "\n";
    }
    out << "    +" << std::string(width * cols, '-') << "\n     ";
    for (int p = page.p_min; p <= page.p_max; ++p) out << pad(std::to_string(p), width);
    out << "  p\n";
    for (const auto& [src, d] : page.differentials) {
        if (d.rows() == 0 || d.cols() == 0) continue;
        out << "d^" << page.r << " (" << src.first << "," << src.second << ") -> (" << src.first - page.r << ","
            << src.second + page.r - 1 << ") rank " << rank(field, d) << "\n";
    }
    return out.str();
}

template std::string page_table(const Page<PrimeField>&, const PrimeField&);
template std::string page_table(const Page<RationalField>&, const RationalField&);

std::string report_table(const Report& r) {
    std::ostringstream out;
    out << to_string(r.outcome) << "  " << r.theorem;
    if (!r.subject.empty()) out << "  " << r.subject;
    if (!r.reason.empty()) out << "  (" << r.reason << ")";
    out << "\n";
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.label.size());
    for (const auto& c : r.checks)
        out << "  " << (c.ok ? "ok  " : "BAD ") << c.label << std::string(width - c.label.size(), ' ')
            << "  expected " << c.expected << ", got " << c.actual << "\n";
    return out.str();
}

}  // namespace uberhom
