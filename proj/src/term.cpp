#include "webcat/term.hpp"

#include <sstream>
#include <stdexcept>

namespace webcat {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Plain: return "pweb";
        case Flavor::Oriented: return "oriented";
        case Flavor::Brauer: return "brauer";
    }
    return "?";
}

ObjectWord::ObjectWord(Flavor f, std::vector<int> ls) : flavor(f) {
    labels.reserve(ls.size());
    for (int v : ls) {
        if (v == 0) continue;  // zero-labeled strands are deleted
        if (f != Flavor::Oriented && v < 0)
            throw std::invalid_argument("ObjectWord: negative label in unoriented word");
        if (f == Flavor::Brauer && v != 1)
            throw std::invalid_argument("ObjectWord: brauer words admit only label 1");
        labels.push_back(v);
    }
}

long ObjectWord::total_weight() const {
    long w = 0;
    for (int v : labels) w += v < 0 ? -v : v;
    return w;
}

std::string ObjectWord::str() const {
    std::string out = "(";
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(labels[i]);
    }
    out += ")";
    return out;
}

ObjectWord ObjectWord::concat(const ObjectWord& a, const ObjectWord& b) {
    if (a.labels.empty()) return b;
    if (b.labels.empty()) return a;
    if (a.flavor != b.flavor)
        throw std::invalid_argument("ObjectWord: flavor mismatch in tensor");
    ObjectWord out = a;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    return out;
}

bool generator_is_zero(const Generator& g) {
    switch (g.kind) {
        case GenKind::Split: case GenKind::Merge:
        case GenKind::Crossing: case GenKind::UpSplit: case GenKind::UpMerge:
        case GenKind::RightCrossing: case GenKind::LeftCrossing:
        case GenKind::DownCrossing: case GenKind::DownSplit: case GenKind::DownMerge:
            return g.a < 0 || g.b < 0;
        case GenKind::Id:
            return g.flavor != Flavor::Oriented && g.a < 0;
        case GenKind::LeftCap: case GenKind::LeftCup:
        case GenKind::RightCap: case GenKind::RightCup:
            return g.a < 0;
        default:
            return false;
    }
}

namespace {
ObjectWord plain(std::vector<int> ls) { return ObjectWord(Flavor::Plain, std::move(ls)); }
ObjectWord orient(std::vector<int> ls) { return ObjectWord(Flavor::Oriented, std::move(ls)); }
ObjectWord brauer(std::vector<int> ls) { return ObjectWord(Flavor::Brauer, std::move(ls)); }
}  // namespace

ObjectWord generator_dom(const Generator& g) {
    switch (g.kind) {
        case GenKind::Split: return plain({g.a + g.b});
        case GenKind::Merge: return plain({g.a, g.b});
        case GenKind::Cap: return plain({1, 1});
        case GenKind::Cup: return plain({});
        case GenKind::Antenna: return plain({2});
        case GenKind::Id:
            if (g.flavor == Flavor::Oriented) return orient({g.a});
            if (g.flavor == Flavor::Brauer) return brauer({g.a});
            return plain({g.a});
        case GenKind::Crossing:
            if (g.flavor == Flavor::Oriented) return orient({g.a, g.b});
            return plain({g.a, g.b});
        case GenKind::UpSplit: return orient({g.a + g.b});
        case GenKind::UpMerge: return orient({g.a, g.b});
        case GenKind::LeftCap: return orient({-g.a, g.a});
        case GenKind::LeftCup: return orient({});
        case GenKind::TagIn: return orient({1});
        case GenKind::TagOut: return orient({-1});
        case GenKind::RightCrossing: return orient({g.a, -g.b});
        case GenKind::RightCap: return orient({g.a, -g.a});
        case GenKind::RightCup: return orient({});
        case GenKind::UpCap: return orient({1, 1});
        case GenKind::UpCup: return orient({});
        case GenKind::LeftCrossing: return orient({-g.a, g.b});
        case GenKind::DownCrossing: return orient({-g.a, -g.b});
        case GenKind::DownSplit: return orient({-g.a, -g.b});
        case GenKind::DownMerge: return orient({-(g.a + g.b)});
        case GenKind::BrauerTwist: return brauer({1, 1});
        case GenKind::BrauerCap: return brauer({1, 1});
        case GenKind::BrauerCup: return brauer({});
    }
    throw std::logic_error("generator_dom: unknown kind");
}

ObjectWord generator_cod(const Generator& g) {
    switch (g.kind) {
        case GenKind::Split: return plain({g.a, g.b});
        case GenKind::Merge: return plain({g.a + g.b});
        case GenKind::Cap: return plain({});
        case GenKind::Cup: return plain({1, 1});
        case GenKind::Antenna: return plain({});
        case GenKind::Id: return generator_dom(g);
        case GenKind::Crossing:
            if (g.flavor == Flavor::Oriented) return orient({g.b, g.a});
            return plain({g.b, g.a});
        case GenKind::UpSplit: return orient({g.a, g.b});
        case GenKind::UpMerge: return orient({g.a + g.b});
        case GenKind::LeftCap: return orient({});
        case GenKind::LeftCup: return orient({g.a, -g.a});
        case GenKind::TagIn: return orient({-1});
        case GenKind::TagOut: return orient({1});
        case GenKind::RightCrossing: return orient({-g.b, g.a});
        case GenKind::RightCap: return orient({});
        case GenKind::RightCup: return orient({-g.a, g.a});
        case GenKind::UpCap: return orient({});
        case GenKind::UpCup: return orient({1, 1});
        case GenKind::LeftCrossing: return orient({g.b, -g.a});
        case GenKind::DownCrossing: return orient({-g.b, -g.a});
        case GenKind::DownSplit: return orient({-(g.a + g.b)});
        case GenKind::DownMerge: return orient({-g.a, -g.b});
        case GenKind::BrauerTwist: return brauer({1, 1});
        case GenKind::BrauerCap: return brauer({});
        case GenKind::BrauerCup: return brauer({1, 1});
    }
    throw std::logic_error("generator_cod: unknown kind");
}

int generator_parity(const Generator& g) {
    switch (g.kind) {
        case GenKind::Cap: case GenKind::Cup: case GenKind::Antenna:
        case GenKind::TagIn: case GenKind::TagOut:
        case GenKind::UpCap: case GenKind::UpCup:
        case GenKind::BrauerCap: case GenKind::BrauerCup:
            return 1;
        default:
            return 0;
    }
}

Flavor generator_flavor(const Generator& g) { return generator_dom(g).flavor; }

std::string generator_str(const Generator& g) {
    auto two = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
    };
    auto one = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(g.a) + ")";
    };
    switch (g.kind) {
        case GenKind::Split: return two("split");
        case GenKind::Merge: return two("merge");
        case GenKind::Cap: return "cap";
        case GenKind::Cup: return "cup";
        case GenKind::Antenna: return "ant";
        case GenKind::Id:
            if (g.flavor == Flavor::Oriented)
                return (g.a >= 0 ? "uid(" + std::to_string(g.a) : "did(" + std::to_string(-g.a)) + ")";
            return one("id");
        case GenKind::Crossing:
            if (g.flavor == Flavor::Oriented) return two("ux");
            return two("x");
        case GenKind::UpSplit: return two("split");
        case GenKind::UpMerge: return two("merge");
        case GenKind::LeftCap: return one("lcap");
        case GenKind::LeftCup: return one("lcup");
        case GenKind::TagIn: return "tagin";
        case GenKind::TagOut: return "tagout";
        case GenKind::RightCrossing: return two("rx");
        case GenKind::RightCap: return one("rcap");
        case GenKind::RightCup: return one("rcup");
        case GenKind::UpCap: return "cap";
        case GenKind::UpCup: return "cup";
        case GenKind::LeftCrossing: return two("lx");
        case GenKind::DownCrossing: return two("dx");
        case GenKind::DownSplit: return two("dsplit");
        case GenKind::DownMerge: return two("dmerge");
        case GenKind::BrauerTwist: return "x(1,1)";
        case GenKind::BrauerCap: return "cap";
        case GenKind::BrauerCup: return "cup";
    }
    return "?";
}

TermPtr Term::make(const Generator& g) {
    if (generator_is_zero(g)) return nullptr;
    auto t = std::shared_ptr<Term>(new Term());
    t->node = Node::Gen;
    t->gen = g;
    t->dom = generator_dom(g);
    t->cod = generator_cod(g);
    t->parity = generator_parity(g);
    t->key = generator_str(g);
    return t;
}

TermPtr Term::compose(const TermPtr& top, const TermPtr& bottom) {
    if (!top || !bottom) return nullptr;
    if (bottom->cod != top->dom)
        throw std::invalid_argument("compose: boundary mismatch, cod(bottom)=" +
                                    bottom->cod.str() + " vs dom(top)=" + top->dom.str());
    auto t = std::shared_ptr<Term>(new Term());
    t->node = Node::Compose;
    t->first = top;
    t->second = bottom;
    t->dom = bottom->dom;
    t->cod = top->cod;
    t->parity = (top->parity + bottom->parity) & 1;
    t->key = "(" + bottom->key + ";" + top->key + ")";
    return t;
}

TermPtr Term::tensor(const TermPtr& left, const TermPtr& right) {
    if (!left || !right) return nullptr;
    auto t = std::shared_ptr<Term>(new Term());
    t->node = Node::Tensor;
    t->first = left;
    t->second = right;
    t->dom = ObjectWord::concat(left->dom, right->dom);
    t->cod = ObjectWord::concat(left->cod, right->cod);
    t->parity = (left->parity + right->parity) & 1;
    t->key = "(" + left->key + "*" + right->key + ")";
    return t;
}

TermPtr Term::identity(const ObjectWord& w) {
    if (w.labels.empty()) {
        Generator g{GenKind::Id, 0, 0};
        g.flavor = w.flavor;
        auto t = std::shared_ptr<Term>(new Term());
        t->node = Node::Gen;
        t->gen = g;
        t->dom = w;
        t->cod = w;
        t->parity = 0;
        t->key = "id(0)";
        return t;
    }
    TermPtr out;
    for (int v : w.labels) {
        Generator g{GenKind::Id, v, 0};
        g.flavor = w.flavor;
        TermPtr part = make(g);
        out = out ? tensor(out, part) : part;
    }
    return out;
}

Morphism::Morphism(ObjectWord dom, ObjectWord cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), boundary_set_(true) {}

Morphism::Morphism(const TermPtr& t) { add(Scalar(1), t); }

Morphism::Morphism(const Scalar& c, const TermPtr& t) { add(c, t); }

void Morphism::adopt_boundary(const TermPtr& t) {
    if (!boundary_set_) {
        dom_ = t->dom;
        cod_ = t->cod;
        boundary_set_ = true;
    } else if (t->dom != dom_ || t->cod != cod_) {
        throw std::invalid_argument("Morphism: term boundary " + t->dom.str() + "->" +
                                    t->cod.str() + " differs from " + dom_.str() + "->" +
                                    cod_.str());
    }
}

void Morphism::add(const Scalar& c, const TermPtr& t) {
    if (!t || c.is_zero()) return;
    adopt_boundary(t);
    auto it = combo_.find(t->key);
    if (it == combo_.end()) {
        combo_.emplace(t->key, std::make_pair(t, c));
    } else {
        it->second.second += c;
        if (it->second.second.is_zero()) combo_.erase(it);
    }
}

Morphism& Morphism::operator+=(const Morphism& o) {
    for (const auto& [k, tc] : o.combo_) add(tc.second, tc.first);
    if (!boundary_set_ && o.boundary_set_) {
        dom_ = o.dom_;
        cod_ = o.cod_;
        boundary_set_ = true;
    }
    return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
    for (const auto& [k, tc] : o.combo_) add(-tc.second, tc.first);
    if (!boundary_set_ && o.boundary_set_) {
        dom_ = o.dom_;
        cod_ = o.cod_;
        boundary_set_ = true;
    }
    return *this;
}

Morphism Morphism::operator-() const { return scaled(Scalar(-1)); }

Morphism Morphism::scaled(const Scalar& c) const {
    Morphism out(dom_, cod_);
    if (c.is_zero()) return out;
    for (const auto& [k, tc] : combo_) out.add(c * tc.second, tc.first);
    return out;
}

int Morphism::parity_or(int fallback) const {
    int p = -1;
    for (const auto& [k, tc] : combo_) {
        if (p == -1) p = tc.first->parity;
        else if (p != tc.first->parity) return -1;
    }
    return p == -1 ? fallback : p;
}

std::string Morphism::str() const {
    if (combo_.empty()) return "0";
    std::string out;
    for (const auto& [k, tc] : combo_) {
        if (!out.empty()) out += " + ";
        if (!tc.second.is_one()) out += tc.second.str() + " : ";
        out += k;
    }
    return out;
}

Morphism Morphism::compose(const Morphism& top, const Morphism& bottom) {
    if (top.is_zero() || bottom.is_zero()) return Morphism(bottom.dom(), top.cod());
    if (bottom.cod() != top.dom())
        throw std::invalid_argument("compose: boundary mismatch, cod(bottom)=" +
                                    bottom.cod().str() + " vs dom(top)=" + top.dom().str());
    Morphism out(bottom.dom(), top.cod());
    for (const auto& [k1, tc1] : top.combo_)
        for (const auto& [k2, tc2] : bottom.combo_)
            out.add(tc1.second * tc2.second, Term::compose(tc1.first, tc2.first));
    return out;
}

Morphism Morphism::tensor(const Morphism& left, const Morphism& right) {
    Morphism out(ObjectWord::concat(left.dom(), right.dom()),
                 ObjectWord::concat(left.cod(), right.cod()));
    for (const auto& [k1, tc1] : left.combo_)
        for (const auto& [k2, tc2] : right.combo_)
            out.add(tc1.second * tc2.second, Term::tensor(tc1.first, tc2.first));
    return out;
}

TermPtr gen_split(int a, int b) { return Term::make({GenKind::Split, a, b}); }
TermPtr gen_merge(int a, int b) { return Term::make({GenKind::Merge, a, b}); }
TermPtr gen_cap() { return Term::make({GenKind::Cap}); }
TermPtr gen_cup() { return Term::make({GenKind::Cup}); }
TermPtr gen_antenna() { return Term::make({GenKind::Antenna}); }

TermPtr gen_id(int a) { return Term::make({GenKind::Id, a, 0}); }

TermPtr gen_oriented_id(int signed_a) {
    Generator g{GenKind::Id, signed_a, 0};
    g.flavor = Flavor::Oriented;
    if (signed_a == 0) return Term::identity(ObjectWord(Flavor::Oriented, {}));
    return Term::make(g);
}

TermPtr gen_crossing(int a, int b) { return Term::make({GenKind::Crossing, a, b}); }

Morphism word_identity(const ObjectWord& w) { return Morphism(Term::identity(w)); }

}  // namespace webcat
