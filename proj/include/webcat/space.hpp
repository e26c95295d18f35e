#pragma once

#include "webcat/scalar.hpp"
#include "webcat/term.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace webcat {

/// Basis indices of V_n are the nonzero integers i with |i| <= n, ordered
/// 1 < 2 < ... < n < -1 < -2 < ... < -n. Negative indices are odd.
inline bool index_odd(int i) { return i < 0; }
inline bool index_less(int i, int j) {
    if ((i > 0) != (j > 0)) return i > 0;
    return (i > 0) ? i < j : -i < -j;
}

/// A normalized basis monomial of a tensor product of symmetric powers:
/// one sorted index sequence per tensor slot. Slot weights and dual flags
/// live in the ambient ObjectWord (oriented words: negative label = dual slot).
struct Monomial {
    std::vector<std::vector<int>> slots;

    int parity() const;
    bool operator==(const Monomial& o) const { return slots == o.slots; }
    bool operator<(const Monomial& o) const;

    /// Slots joined by " (x) "; "v[i]..." per slot, "v*[...]" for dual slots,
    /// "1" for an empty slot. Dual flags are read off the ambient word.
    std::string str(const ObjectWord& ambient) const;
};

/// Finite linear combination of monomials in one ambient space.
struct Vector {
    std::map<Monomial, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Monomial& m, const Scalar& c);
    Vector& operator+=(const Vector& o);
    Vector scaled(const Scalar& c) const;
    bool operator==(const Vector& o) const { return terms == o.terms; }
};

/// Sorts one slot's index word into normal order. Returns the sign, or
/// nullopt when an odd index repeats (the monomial is zero).
/// Throws when an index is 0 or out of range for n.
std::optional<int> normalize_slot(std::vector<int>& indices, int n);

/// Normalizes a whole (possibly unsorted) per-slot index assignment.
/// Returns nullopt for zero.
std::optional<std::pair<Monomial, int>> normalize_word(
    const std::vector<std::vector<int>>& slots, int n);

/// Number of basis monomials of S^a(V_n).
long slot_dimension(int a, int n);

/// All normalized monomials of S^a(V_n) in lexicographic order.
std::vector<std::vector<int>> enumerate_slot_basis(int a, int n);

/// Deterministic basis of the full word space (first slot slowest).
/// Dual slots carry the same index sets as primal ones.
/// Throws std::runtime_error when the total size exceeds max_dim (if > 0).
std::vector<Monomial> enumerate_basis(const ObjectWord& word, int n, long max_dim = 0);

long basis_dimension(const ObjectWord& word, int n);

/// Homogeneous element of p(n) in the block matrix form
/// [[A, B], [C, -A^t]] with B symmetric and C skew-symmetric.
struct PnElement {
    int n = 0;
    int parity = 0;  // 0: B=C=0, 1: A=0
    std::vector<std::vector<Scalar>> A, B, C;
    std::string name;

    static PnElement make_even(int n, int i, int j);       // A = e_ij
    static PnElement make_odd_b(int n, int i, int j);      // B = e_ij + e_ji (i<=j)
    static PnElement make_odd_c(int n, int i, int j);      // C = e_ij - e_ji (i<j)

    /// Action on a single basis vector v_i of V_n.
    Vector act_index(int idx) const;
};

/// The 2n^2 standard homogeneous basis elements of p(n).
std::vector<PnElement> pn_basis(int n);

/// Action of x on a vector in the word space (Leibniz across slots and
/// within symmetric powers; contragredient action on dual slots).
Vector pn_act(const PnElement& x, const Vector& v, const ObjectWord& word, int n);

}  // namespace webcat
