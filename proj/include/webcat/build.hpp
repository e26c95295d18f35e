#pragma once

#include "webcat/term.hpp"

#include <vector>

namespace webcat {

/// Index data of a basis web: caps among domain strands (A), cups among
/// codomain strands (B), through strands (C), and antenna marks (D).
struct ChiTuple {
    std::vector<std::vector<int>> A;  // t x t, 0/1, symmetric, zero diagonal
    std::vector<std::vector<int>> B;  // u x u, 0/1, symmetric, zero diagonal
    std::vector<std::vector<int>> C;  // t x u, nonnegative
    std::vector<int> D;               // length t, 0/1
    std::vector<int> dom;             // a
    std::vector<int> cod;             // b

    bool operator==(const ChiTuple& o) const {
        return A == o.A && B == o.B && C == o.C && D == o.D && dom == o.dom && cod == o.cod;
    }
    bool operator<(const ChiTuple& o) const;
    /// Checks the row and column sum constraints.
    bool valid() const;
    int parity() const;  // (#A-pairs + #B-pairs + sum D) mod 2
    std::string str() const;
};

// -- gl-Web constructions ----------------------------------------------------

/// Left-to-right rung of size s on a two-strand word (a,b).
TermPtr rung_lr(int a, int b, int s);
/// Right-to-left rung of size r on (a,b).
TermPtr rung_rl(int a, int b, int r);

/// The crossing as a sum of rung ladders (first form of its definition).
Morphism crossing_expand(int a, int b);

/// Left-nested multiple split k -> (a_1,...,a_m); zero parts are dropped.
TermPtr multi_split(const std::vector<int>& parts);
TermPtr multi_merge(const std::vector<int>& parts);

// -- p-Web constructions -----------------------------------------------------

/// Split off a 2-strand and kill it with the antenna: a -> a-2.
/// Zero (null) for a < 2.
TermPtr green_dot(int a);

/// (1/2) merge_{1,1} o cup, the reflection of the antenna.
Morphism co_antenna();

/// Thick cap (a,b) -> (a-1,b-1): split one off each strand, cap the middle.
TermPtr thick_cap(int a, int b);
/// Thick cup (a,b) -> (a+1,b+1).
TermPtr thick_cup(int a, int b);

/// Generators of the m-strand subcategory; `word` is the domain object.
/// All return formal sums so that the negative-label rule can collapse them.
Morphism pwebm_e(int t, int r, int s, const std::vector<int>& word);
Morphism pwebm_f(int t, int r, int s, const std::vector<int>& word);
Morphism pwebm_b(int r, int s, const std::vector<int>& word);
Morphism pwebm_c(int r, int s, const std::vector<int>& word);  // r > s allowed
Morphism pwebm_b_single(int u, const std::vector<int>& word);

/// Canonical basis web of a chi tuple. Throws if the tuple is invalid.
TermPtr xi_term(const ChiTuple& chi);

// -- explosion / contraction --------------------------------------------------

TermPtr y_full(const std::vector<int>& word);  // tensor of full multi-splits
TermPtr z_full(const std::vector<int>& word);  // tensor of full multi-merges
Morphism explosion(const Morphism& f);
Morphism contraction(const Morphism& g, const std::vector<int>& dom_word,
                     const std::vector<int>& cod_word);

// -- category changing functors ----------------------------------------------

/// F': marked Brauer -> p-Web on thin strands.
Morphism brauer_embed(const Morphism& m);
/// iota-up: p-Web -> p-Web with all strands oriented upward.
Morphism to_oriented(const Morphism& m);
/// Horizontal reflection with the sign (-1)^{k(k-1)/2}, k = number of odd
/// generators of each diagram.
Morphism refl(const Morphism& m);

// -- oriented helpers ----------------------------------------------------------

TermPtr gen_upsplit(int a, int b);
TermPtr gen_upmerge(int a, int b);
TermPtr gen_lcap(int a);
TermPtr gen_lcup(int a);
TermPtr gen_tagin();
TermPtr gen_tagout();
TermPtr gen_rcross(int a, int b);
TermPtr gen_rcap(int a);
TermPtr gen_rcup(int a);
TermPtr gen_ucap();
TermPtr gen_ucup();
TermPtr gen_lcross(int a, int b);
TermPtr gen_dcross(int a, int b);
TermPtr gen_dsplit(int a, int b);
TermPtr gen_dmerge(int a, int b);
TermPtr gen_ucross(int a, int b);

/// Crossing of two oriented strands given by signed labels; picks the
/// up/right/left/down kind accordingly.
TermPtr oriented_crossing(int x, int y);

/// Crossing of two strands of any one flavor (dispatches on the word flavor).
TermPtr flavored_crossing(Flavor f, int x, int y);

/// Defining composites of the derived oriented generators (used as test
/// oracles for the direct evaluation formulas).
TermPtr rcap_composite(int a);
TermPtr rcup_composite(int a);
TermPtr ucap_composite();
TermPtr ucup_composite();
TermPtr lcross_composite(int a, int b);
TermPtr dcross_composite(int a, int b);
TermPtr dsplit_composite(int a, int b);
TermPtr dmerge_composite(int a, int b);
Morphism up_antenna();

/// (1/2) ucap o usplit(1,1), the oriented green dot 2 -> 0 is up_antenna;
/// tag expressed through marked cap/cup, as in the tag-to-cup/cap identity.
Morphism tagin_composite();
Morphism tagout_composite();

/// Identity-routing crossing network realizing a position permutation:
/// strand at position i of `word` moves to position perm[i].
TermPtr permutation_network(const ObjectWord& word, const std::vector<int>& perm);

/// Transports an oriented morphism to an all-upward one by sorting the
/// boundary with crossings and bending residual strands with caps/cups.
/// Returns the transported morphism; the resulting boundary is all-up.
Morphism mix_to_up(const Morphism& m);

}  // namespace webcat
