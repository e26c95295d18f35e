#pragma once

#include "webcat/eval.hpp"

#include <optional>

namespace webcat {

/// All tuples (A,B,C,D) indexing basis webs of Hom(a, b), in a fixed
/// lexicographic order on (A, B, D, C).
std::vector<ChiTuple> enumerate_chi(const std::vector<int>& a, const std::vector<int>& b);

/// |chi(a, b)|, the dimension of Hom(a, b).
long hom_dim(const std::vector<int>& a, const std::vector<int>& b);

/// The diagrammatic basis of Hom(a, b): tuples plus their canonical webs.
struct HomBasis {
    std::vector<int> dom, cod;
    std::vector<ChiTuple> tuples;
    std::vector<TermPtr> terms;
};

HomBasis hom_basis(const std::vector<int>& a, const std::vector<int>& b);

/// Rank over Q of a family of maps with a common boundary, via fraction-free
/// elimination on the integer matrix obtained by clearing denominators row-wise.
long gram_rank(const std::vector<LinearMap>& maps);

struct Decomposition {
    std::vector<Scalar> coefficients;  // one per chi tuple, in enumeration order
    bool residual_zero = true;
};

/// Coefficients of m in the basis webs of Hom(dom, cod), computed at the
/// faithful n. Oriented inputs are transported to all-upward boundaries first.
/// Throws std::runtime_error on an inconsistent system (internal bug by the
/// basis theorem).
Decomposition decompose(const Morphism& m);

}  // namespace webcat
