#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "uberhom/chain_complex.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/field.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/mvss.hpp"
#include "uberhom/uber.hpp"
#include "uberhom/verify.hpp"

namespace uberhom {

using Json = nlohmann::ordered_json;

/// Either input format; a graph also carries its 1-dimensional complex.
struct Input {
    SimplicialComplex complex;
    Graph graph;
    bool is_graph = false;
};

/// {"vertex_count", "facets", "labels"?} or {"vertex_count", "edges"}.
/// Throws InputError on anything malformed.
Input parse_input(const Json& j);
Input parse_input_text(const std::string& text);
Input read_input(std::istream& in);

Json complex_to_json(const SimplicialComplex& x);
Json graph_to_json(const Graph& g);

/// "coefficients" plus "prime" when the field is F_p with p odd.
void put_coefficients(Json& j, const Coefficients& c);

/// {"degree": [...], "rank": r, "torsion": [...]}
Json group_entry(std::vector<int> degree, std::size_t rank, const std::vector<mpz_class>& torsion = {});

Json homology_json(const Coefficients& c, const std::vector<AbelianGroup>& groups, bool reduced);
Json bigraded_json(const Coefficients& c, const BigradedDims& dims);
Json trigraded_json(const TrigradedDims& dims);
Json bold_json(const Coefficients& c, const std::vector<AbelianGroup>& groups);

template <Field F>
Json page_json(const Page<F>& page, const F& field, int converged_at);

Json report_json(const Report& r);

std::string homology_table(const std::vector<AbelianGroup>& groups, bool reduced);
/// Rows i from the top down, columns j = 0..m.
std::string bigraded_table(const BigradedDims& dims, std::size_t vertex_count, int top_degree);
std::string bold_table(const std::vector<AbelianGroup>& groups);
/// The E^r grid with q rows from the top down and p columns, as in the usual
/// spectral sequence pictures.
template <Field F>
std::string page_table(const Page<F>& page, const F& field);
std::string report_table(const Report& r);

}  // namespace uberhom
