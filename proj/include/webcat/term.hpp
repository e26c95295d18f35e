#pragma once

#include "webcat/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace webcat {

enum class Flavor { Plain, Oriented, Brauer };

std::string flavor_name(Flavor f);

/// Boundary word of a web. Plain/Brauer labels are >= 1; oriented labels are
/// signed (+a for an upward strand of thickness a, -a for a downward one).
/// Zero labels are never stored.
struct ObjectWord {
    Flavor flavor = Flavor::Plain;
    std::vector<int> labels;

    ObjectWord() = default;
    ObjectWord(Flavor f, std::vector<int> ls);

    size_t size() const { return labels.size(); }
    long total_weight() const;  // sum of |labels|

    bool operator==(const ObjectWord& o) const {
        return flavor == o.flavor && labels == o.labels;
    }
    bool operator!=(const ObjectWord& o) const { return !(*this == o); }

    std::string str() const;
    static ObjectWord concat(const ObjectWord& a, const ObjectWord& b);
};

enum class GenKind {
    Split, Merge, Cap, Cup, Antenna, Id, Crossing,
    UpSplit, UpMerge, LeftCap, LeftCup, TagIn, TagOut,
    RightCrossing, RightCap, RightCup, UpCap, UpCup,
    LeftCrossing, DownCrossing, DownSplit, DownMerge,
    BrauerTwist, BrauerCap, BrauerCup,
};

struct Generator {
    GenKind kind;
    int a = 0;
    int b = 0;
    /// Only meaningful for Id and Crossing, whose words exist in several flavors.
    Flavor flavor = Flavor::Plain;

    bool operator==(const Generator& o) const {
        return kind == o.kind && a == o.a && b == o.b && flavor == o.flavor;
    }
};

/// True when the generator would carry a negative strand label, which makes
/// any diagram containing it the zero morphism.
bool generator_is_zero(const Generator& g);
ObjectWord generator_dom(const Generator& g);
ObjectWord generator_cod(const Generator& g);
int generator_parity(const Generator& g);
Flavor generator_flavor(const Generator& g);
std::string generator_str(const Generator& g);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// A single web diagram: a composition/tensor tree over generators.
/// Terms are immutable; a null TermPtr denotes the zero diagram.
class Term {
public:
    enum class Node { Gen, Compose, Tensor };

    Node node;
    Generator gen{};        // Node::Gen
    TermPtr first, second;  // Compose: first = top, second = bottom; Tensor: left, right

    ObjectWord dom, cod;
    int parity = 0;
    std::string key;  // canonical textual form; structural identity

    static TermPtr make(const Generator& g);
    /// top after bottom; requires cod(bottom) == dom(top).
    static TermPtr compose(const TermPtr& top, const TermPtr& bottom);
    /// left beside right; requires matching flavors.
    static TermPtr tensor(const TermPtr& left, const TermPtr& right);
    /// Identity of a whole word (empty diagram on the unit object).
    static TermPtr identity(const ObjectWord& w);

private:
    Term() = default;
};

/// A finite scalar-weighted formal sum of terms sharing dom and cod.
class Morphism {
public:
    Morphism() = default;
    /// Zero morphism with the given boundary.
    Morphism(ObjectWord dom, ObjectWord cod);
    /// Single term with coefficient one; t may be null only with explicit boundary ctor.
    Morphism(const TermPtr& t);  // NOLINT: implicit by design
    Morphism(const Scalar& c, const TermPtr& t);

    const ObjectWord& dom() const { return dom_; }
    const ObjectWord& cod() const { return cod_; }
    Flavor flavor() const { return dom_.flavor; }
    bool is_zero() const { return combo_.empty(); }
    size_t term_count() const { return combo_.size(); }

    /// Present iff every term has the same parity (vacuously the zero map's is unset).
    /// -1 encodes "mixed or unknown".
    int parity_or(int fallback) const;

    void add(const Scalar& c, const TermPtr& t);
    Morphism& operator+=(const Morphism& o);
    Morphism& operator-=(const Morphism& o);
    Morphism operator-() const;
    Morphism scaled(const Scalar& c) const;

    friend Morphism operator+(Morphism a, const Morphism& b) { a += b; return a; }
    friend Morphism operator-(Morphism a, const Morphism& b) { a -= b; return a; }

    const std::map<std::string, std::pair<TermPtr, Scalar>>& terms() const { return combo_; }

    std::string str() const;

    static Morphism compose(const Morphism& top, const Morphism& bottom);
    static Morphism tensor(const Morphism& left, const Morphism& right);

private:
    ObjectWord dom_, cod_;
    bool boundary_set_ = false;
    std::map<std::string, std::pair<TermPtr, Scalar>> combo_;

    void adopt_boundary(const TermPtr& t);
};

// Convenience builders.
TermPtr gen_split(int a, int b);
TermPtr gen_merge(int a, int b);
TermPtr gen_cap();
TermPtr gen_cup();
TermPtr gen_antenna();
TermPtr gen_id(int a);                 // plain
TermPtr gen_oriented_id(int signed_a); // oriented, signed label
TermPtr gen_crossing(int a, int b);    // plain
Morphism word_identity(const ObjectWord& w);

}  // namespace webcat
