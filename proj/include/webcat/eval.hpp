#pragma once

#include "webcat/build.hpp"
#include "webcat/linmap.hpp"

#include <string>

namespace webcat {

/// Image of one generator under the evaluation functor for V_n.
LinearMap eval_generator(const Generator& g, int n);

/// Applies a term to a single domain basis monomial (column push).
Vector apply_term(const TermPtr& t, const Monomial& m, int n);

/// Exact matrix of a morphism on the enumerated bases.
LinearMap eval(const Morphism& m, int n);

struct EquivarianceReport {
    bool ok = true;
    std::string witness;  // first violating (x, monomial) pair, if any
};

/// Checks f(x.m) = (-1)^{|x||f|} x.f(m) over the whole p(n) basis and the
/// whole domain basis. The map must be parity homogeneous.
EquivarianceReport check_equivariance(const LinearMap& L);

/// n = ceil(weight/2): the smallest n at which evaluation is injective on
/// Hom(a, b), per the faithfulness theorems.
int faithful_n(const ObjectWord& dom, const ObjectWord& cod);

/// Exact equality of two morphisms, decided by evaluation at the faithful n.
bool morphisms_equal(const Morphism& lhs, const Morphism& rhs);

/// Canonical matrix dump: header plus one line per nonzero entry.
std::string dump_map(const LinearMap& L);

/// Basis size cap, from WEBCAT_MAX_DIM (default 200000 monomials).
long max_dim_cap();

}  // namespace webcat
