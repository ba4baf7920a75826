#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uberhom/complex.hpp"
#include "uberhom/field.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/mvss.hpp"
#include "uberhom/options.hpp"
#include "uberhom/uber.hpp"

namespace uberhom {

enum class Outcome { pass, fail, skip };

std::string to_string(Outcome o);

/// One compared quantity, e.g. a bidegree.
struct Check {
    std::string label;
    std::string expected;
    std::string actual;
    bool ok = true;
};

struct Report {
    std::string theorem;
    std::string subject;
    Outcome outcome = Outcome::pass;
    /// Why a hypothesis failed, or a short note.
    std::string reason;
    std::vector<Check> checks;

    /// pass iff every check holds; keeps skip.
    void settle();
};

enum class Theorem { identification, abutment, euler, cone, suspension, trianglefree, categorification };

Theorem parse_theorem(const std::string& name);
std::string to_string(Theorem t);

/// Shared hypotheses for the anti-star statements: connected, not a full simplex.
/// Returns an empty string when they hold.
std::string anti_star_hypotheses(const SimplicialComplex& x);

/// E2_{m-j-1, i} of the augmented anti-star sequence against B^j_i, every bidegree.
Report verify_identification(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts = {});

/// rank of d2 : B^j_i -> B^{j+2}_{i+1} read off the augmented sequence, keyed by (j, i).
template <Field F>
std::map<std::pair<int, int>, std::size_t> delta2_on_uber(const SpectralSequence<F>& ss, std::size_t vertex_count);

/// Unaugmented E-infinity totals against Betti numbers; augmented E-infinity is zero.
Report verify_abutment(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts = {});

/// (-1)^{m-1} D_c(G)(-1) = chi(X) - 1 when the anti-star cover is 1-Leray.
Report verify_euler(const SimplicialComplex& x, const ComputeOptions& opts = {});

/// B of Cone(X) against B of X.
Report verify_cone(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts = {});

/// The suspension formula at q = 0 and q > 1.
Report verify_suspension(const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts = {});

/// H^j(G) against B^{j+2}_1(G) for a connected triangle-free graph, over Q.
Report verify_trianglefree(const Graph& g, const ComputeOptions& opts = {});

/// chi of bold homology over Q against D_c(G)(-1).
Report verify_categorification(const Graph& g, const ComputeOptions& opts = {});

/// Dispatch on the theorem; graph theorems use the 1-skeleton.
Report verify(Theorem t, const SimplicialComplex& x, const FieldCoefficients& field, const ComputeOptions& opts = {});

}  // namespace uberhom
