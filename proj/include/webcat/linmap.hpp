#pragma once

#include "webcat/space.hpp"

#include <map>

namespace webcat {

/// Exact sparse linear map between enumerated monomial bases, stored as a
/// column map (absent columns are zero).
struct LinearMap {
    ObjectWord dom, cod;
    int n = 1;
    int parity = 0;  // -1 when inhomogeneous

    std::map<Monomial, Vector> cols;

    bool is_zero() const;
    /// Image of a basis monomial (zero vector when absent).
    const Vector& column(const Monomial& m) const;
    void add_entry(const Monomial& from, const Monomial& to, const Scalar& c);

    LinearMap& operator+=(const LinearMap& o);
    LinearMap scaled(const Scalar& c) const;
    bool operator==(const LinearMap& o) const;

    static LinearMap identity(const ObjectWord& w, int n);
};

/// f o g, plain matrix composition; parities add.
LinearMap super_compose(const LinearMap& f, const LinearMap& g);

/// f (x) g with the Koszul rule (f(x)g)(x(x)y) = (-1)^{|g||x|} f(x)(x)g(y).
LinearMap super_tensor(const LinearMap& f, const LinearMap& g);

/// Applies f to a vector.
Vector apply_map(const LinearMap& f, const Vector& v);

}  // namespace webcat
