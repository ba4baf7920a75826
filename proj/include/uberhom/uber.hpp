#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "uberhom/chain_complex.hpp"
#include "uberhom/complex.hpp"
#include "uberhom/graph.hpp"
#include "uberhom/options.hpp"

namespace uberhom {

/// A 0/1 vertex colouring, stored as the set of 1-coloured (black) vertices.
using Bicolouring = VertexMask;

inline int level(Bicolouring e) { return std::popcount(e); }
/// Number of 0-coloured vertices of the simplex.
inline int weight(Simplex s, Bicolouring e) { return std::popcount(s.bits() & ~e); }

enum class SignConvention {
    /// Edge S -> S+v carries (-1)^{#(S below v)}.
    standard,
    /// Edge S -> S+v carries (-1)^{#(S above v)}.
    alternate,
};

int cube_sign(Bicolouring from, VertexId flipped, SignConvention convention = SignConvention::standard);
/// Every square face of the m-cube has an odd number of negative edges.
bool squares_anticommute(std::size_t m, SignConvention convention);

/// Finitely supported dimension table keyed by (j, i); zeros are not stored.
struct BigradedDims {
    std::map<std::pair<int, int>, std::size_t> dims;

    std::size_t at(int j, int i) const {
        auto it = dims.find({j, i});
        return it == dims.end() ? 0 : it->second;
    }
    void set(int j, int i, std::size_t d) {
        if (d) dims[{j, i}] = d;
        else dims.erase({j, i});
    }
    bool is_zero() const { return dims.empty(); }
    friend bool operator==(const BigradedDims&, const BigradedDims&) = default;
};

/// Finitely supported dimension table keyed by (j, k, i).
struct TrigradedDims {
    std::map<std::tuple<int, int, int>, std::size_t> dims;

    std::size_t at(int j, int k, int i) const {
        auto it = dims.find({j, k, i});
        return it == dims.end() ? 0 : it->second;
    }
    /// The k = 0 slice as a (j, i) table.
    BigradedDims weight_zero() const;
    friend bool operator==(const TrigradedDims&, const TrigradedDims&) = default;
};

/// Cochain complex over the Boolean cube with node S -> H_i(X_S; F).
/// Basis of degree j: the nodes of level j in increasing mask order, each
/// contributing its homology representatives.
template <Field F>
struct CubeComplex {
    F field;
    int homology_degree = 0;
    /// ranks[j] for j = 0..m.
    std::vector<std::size_t> ranks;
    /// d[j] : C^j -> C^{j+1}, a ranks[j+1] x ranks[j] matrix, j = 0..m-1.
    std::vector<Matrix<typename F::value_type>> d;
    /// For each j, (node, index within the node's basis) per basis vector.
    std::vector<std::vector<std::pair<Bicolouring, std::size_t>>> basis;
};

/// H_i(X_S) for every node S, reused across homology degrees.
template <Field F>
class CubeNodes {
public:
    CubeNodes(const SimplicialComplex& x, const F& field, const ComputeOptions& opts);

    std::size_t vertex_count() const noexcept { return m_; }
    const SimplexTable& table(Bicolouring s) const { return nodes_.at(s).table; }
    /// nullptr when H_i(X_S) has no chains in degree i.
    const HomologyBasis<F>* homology(Bicolouring s, int i) const;
    std::size_t dimension(Bicolouring s, int i) const;
    int top_degree() const noexcept { return top_; }

private:
    struct Node {
        SimplexTable table;
        std::vector<HomologyBasis<F>> by_degree;
    };
    std::size_t m_;
    int top_;
    std::vector<Node> nodes_;
};

template <Field F>
CubeComplex<F> zero_degree_uber_complex(const CubeNodes<F>& nodes, const F& field, int i, const ComputeOptions& opts,
                                        SignConvention convention = SignConvention::standard);

/// B-double-dot^j_i(X; F) for all (j, i) by Boolean-poset homology.
/// Throws SizeGuardExceeded above the guard (default 16 vertices).
template <Field F>
BigradedDims zero_degree_uber(const SimplicialComplex& x, const F& field, const ComputeOptions& opts = {},
                              SignConvention convention = SignConvention::standard);

BigradedDims zero_degree_uber(const SimplicialComplex& x, const FieldCoefficients& coeff,
                              const ComputeOptions& opts = {});

/// Cohomology dimensions of a cochain complex given by consecutive maps.
template <Field F>
std::vector<std::size_t> cochain_cohomology_dims(const F& field, const std::vector<std::size_t>& ranks,
                                                 const std::vector<Matrix<typename F::value_type>>& d);

/// Weight-k part of (C(X), d_h) over Z2: rank(i) counts i-simplices of weight k,
/// listed in table order by horizontal_simplices.
ChainComplex<PrimeField> horizontal_chain_complex(const SimplexTable& table, Bicolouring e, int k);
std::vector<Simplex> horizontal_simplices(const SimplexTable& table, Bicolouring e, int k, int dim);

/// dim H^h_{i,k}(X, e) over Z2, keyed by (i, k).
std::map<std::pair<int, int>, std::size_t> horizontal_homology(const SimplicialComplex& x, Bicolouring e);

/// The full triply graded uber complex over Z2, split into one cochain complex
/// per (k, i) block.
struct UberComplex {
    std::size_t vertex_count = 0;
    struct Block {
        std::vector<std::size_t> ranks;                       // j = 0..m
        std::vector<Matrix<PrimeField::value_type>> d;        // j -> j+1
    };
    std::map<std::pair<int, int>, Block> blocks;  // keyed by (k, i)
};

UberComplex uber_complex(const SimplicialComplex& x, const ComputeOptions& opts = {});
TrigradedDims uberhomology(const UberComplex& c);
TrigradedDims uberhomology(const SimplicialComplex& x, const ComputeOptions& opts = {});

/// Bold homology: the i = 0 row with node S -> free module on the connected
/// components of G[S]. Over Z the torsion is reported from Smith forms.
/// Entry j of the result is H^j for j = 0..m.
std::vector<AbelianGroup> bold_homology(const Graph& g, const Coefficients& coeff, const ComputeOptions& opts = {},
                                        SignConvention convention = SignConvention::standard);
std::vector<AbelianGroup> bold_homology(const SimplicialComplex& x, const Coefficients& coeff,
                                        const ComputeOptions& opts = {});

/// sum_j (-1)^j rank H^j.
long euler_characteristic(const std::vector<AbelianGroup>& graded);

struct BoldEulerReport {
    long bold_euler = 0;
    std::int64_t domination_at_minus_one = 0;
    bool agrees = false;
};

BoldEulerReport bold_euler_report(const Graph& g, const ComputeOptions& opts = {});

extern template class CubeNodes<PrimeField>;
extern template class CubeNodes<RationalField>;

}  // namespace uberhom
