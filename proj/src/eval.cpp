#include "webcat/eval.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace webcat {

namespace {

int slot_parity(const std::vector<int>& slot) {
    int p = 0;
    for (int i : slot)
        if (i < 0) p ^= 1;
    return p;
}

Monomial unit_monomial() { return Monomial{}; }

Vector unit_vector() {
    Vector v;
    v.add(unit_monomial(), Scalar(1));
    return v;
}

/// spl^{a,b}: all ordered-position splittings T|U with the inverted odd-odd
/// pair count as sign.
Vector apply_split(int a, int b, const Monomial& m) {
    Vector out;
    if (a + b == 0) return unit_vector();
    const std::vector<int>& w = m.slots.at(0);
    int total = a + b;
    std::vector<int> comb(a);
    for (int i = 0; i < a; ++i) comb[i] = i;
    auto emit = [&]() {
        std::vector<char> in_t(total, 0);
        for (int i : comb) in_t[i] = 1;
        std::vector<int> xt, xu;
        for (int i = 0; i < total; ++i) (in_t[i] ? xt : xu).push_back(w[i]);
        int eps = 0;
        for (int t = 0; t < total; ++t) {
            if (!in_t[t] || w[t] >= 0) continue;
            for (int u = 0; u < t; ++u)
                if (!in_t[u] && w[u] < 0) eps ^= 1;
        }
        Monomial r;
        if (a > 0) r.slots.push_back(std::move(xt));
        if (b > 0) r.slots.push_back(std::move(xu));
        out.add(r, Scalar(eps ? -1 : 1));
    };
    if (a == 0 || b == 0) {
        Monomial r;
        r.slots.push_back(w);
        out.add(r, Scalar(1));
        return out;
    }
    while (true) {
        emit();
        int i = a - 1;
        while (i >= 0 && comb[i] == total - a + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < a; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

Vector apply_merge(int a, int b, const Monomial& m, int n) {
    Vector out;
    if (a + b == 0) return unit_vector();
    std::vector<int> word;
    for (const auto& slot : m.slots) word.insert(word.end(), slot.begin(), slot.end());
    auto norm = normalize_slot(word, n);
    if (!norm) return out;
    Monomial r;
    r.slots.push_back(std::move(word));
    out.add(r, Scalar(*norm));
    return out;
}

Vector apply_cap(const Monomial& m) {
    Vector out;
    int i = m.slots.at(0).at(0), j = m.slots.at(1).at(0);
    if (i == -j) out.add(unit_monomial(), Scalar(1));
    return out;
}

Vector apply_cup(int n) {
    Vector out;
    for (int i = 1; i <= n; ++i) {
        Monomial p;
        p.slots = {{i}, {-i}};
        out.add(p, Scalar(1));
        Monomial q;
        q.slots = {{-i}, {i}};
        out.add(q, Scalar(-1));
    }
    return out;
}

Vector apply_antenna(const Monomial& m) {
    Vector out;
    const auto& slot = m.slots.at(0);
    if (slot.at(0) == -slot.at(1)) out.add(unit_monomial(), Scalar(1));
    return out;
}

Vector apply_swap(const Monomial& m) {
    Vector out;
    if (m.slots.size() != 2) {  // a zero label: nothing crosses
        out.add(m, Scalar(1));
        return out;
    }
    int sign = (slot_parity(m.slots[0]) && slot_parity(m.slots[1])) ? -1 : 1;
    Monomial r;
    r.slots = {m.slots[1], m.slots[0]};
    out.add(r, Scalar(sign));
    return out;
}

Vector apply_left_cap(const Monomial& m) {
    Vector out;
    if (m.slots.size() != 2) {  // label 0: identity of the unit
        out.add(unit_monomial(), Scalar(1));
        return out;
    }
    if (m.slots[0] == m.slots[1]) out.add(unit_monomial(), Scalar(1));
    return out;
}

Vector apply_left_cup(int a, int n) {
    Vector out;
    if (a == 0) return unit_vector();
    for (const auto& w : enumerate_slot_basis(a, n)) {
        Monomial m;
        m.slots = {w, w};
        out.add(m, Scalar(1));
    }
    return out;
}

Vector apply_right_cap(const Monomial& m) {
    Vector out;
    if (m.slots.size() != 2) {
        out.add(unit_monomial(), Scalar(1));
        return out;
    }
    if (m.slots[0] == m.slots[1])
        out.add(unit_monomial(), Scalar(slot_parity(m.slots[0]) ? -1 : 1));
    return out;
}

Vector apply_right_cup(int a, int n) {
    Vector out;
    if (a == 0) return unit_vector();
    for (const auto& w : enumerate_slot_basis(a, n)) {
        Monomial m;
        m.slots = {w, w};
        out.add(m, Scalar(slot_parity(w) ? -1 : 1));
    }
    return out;
}

Vector apply_tag_in(const Monomial& m) {
    Vector out;
    Monomial r;
    r.slots = {{-m.slots.at(0).at(0)}};
    out.add(r, Scalar(1));
    return out;
}

Vector apply_tag_out(const Monomial& m) {
    Vector out;
    Monomial r;
    r.slots = {{-m.slots.at(0).at(0)}};
    out.add(r, Scalar(1));
    return out;
}

Vector apply_generator(const Generator& g, const Monomial& m, int n) {
    switch (g.kind) {
        case GenKind::Id: {
            Vector out;
            out.add(m, Scalar(1));
            return out;
        }
        case GenKind::Split: case GenKind::UpSplit:
            return apply_split(g.a, g.b, m);
        case GenKind::Merge: case GenKind::UpMerge:
            return apply_merge(g.a, g.b, m, n);
        case GenKind::Cap: case GenKind::UpCap: case GenKind::BrauerCap:
            return apply_cap(m);
        case GenKind::Cup: case GenKind::UpCup: case GenKind::BrauerCup:
            return apply_cup(n);
        case GenKind::Antenna:
            return apply_antenna(m);
        case GenKind::Crossing: case GenKind::RightCrossing:
        case GenKind::LeftCrossing: case GenKind::DownCrossing:
        case GenKind::BrauerTwist:
            return apply_swap(m);
        case GenKind::LeftCap: return apply_left_cap(m);
        case GenKind::LeftCup: return apply_left_cup(g.a, n);
        case GenKind::RightCap: return apply_right_cap(m);
        case GenKind::RightCup: return apply_right_cup(g.a, n);
        case GenKind::TagIn: return apply_tag_in(m);
        case GenKind::TagOut: return apply_tag_out(m);
        case GenKind::DownSplit: return apply_term(dsplit_composite(g.a, g.b), m, n);
        case GenKind::DownMerge: return apply_term(dmerge_composite(g.a, g.b), m, n);
    }
    throw std::logic_error("apply_generator: unknown kind");
}

}  // namespace

Vector apply_term(const TermPtr& t, const Monomial& m, int n) {
    if (!t) return Vector{};
    switch (t->node) {
        case Term::Node::Gen:
            return apply_generator(t->gen, m, n);
        case Term::Node::Compose: {
            Vector mid = apply_term(t->second, m, n);
            Vector out;
            for (const auto& [mm, c] : mid.terms) {
                Vector up = apply_term(t->first, mm, n);
                for (const auto& [m2, c2] : up.terms) out.add(m2, c * c2);
            }
            return out;
        }
        case Term::Node::Tensor: {
            size_t k = t->first->dom.size();
            Monomial x, y;
            x.slots.assign(m.slots.begin(), m.slots.begin() + k);
            y.slots.assign(m.slots.begin() + k, m.slots.end());
            int sign = 1;
            if (t->second->parity == 1 && x.parity() == 1) sign = -1;
            Vector vl = apply_term(t->first, x, n);
            Vector vr = apply_term(t->second, y, n);
            Vector out;
            for (const auto& [ml, cl] : vl.terms)
                for (const auto& [mr, cr] : vr.terms) {
                    Monomial joined = ml;
                    joined.slots.insert(joined.slots.end(), mr.slots.begin(),
                                        mr.slots.end());
                    out.add(joined, cl * cr * Scalar(sign));
                }
            return out;
        }
    }
    throw std::logic_error("apply_term: bad node");
}

long max_dim_cap() {
    static long cap = [] {
        const char* env = std::getenv("WEBCAT_MAX_DIM");
        if (!env) return 200000L;
        long v = std::atol(env);
        return v > 0 ? v : 200000L;
    }();
    return cap;
}

LinearMap eval(const Morphism& m, int n) {
    LinearMap out;
    out.dom = m.dom();
    out.cod = m.cod();
    out.n = n;
    out.parity = m.parity_or(0);
    for (const auto& dm : enumerate_basis(m.dom(), n, max_dim_cap())) {
        Vector img;
        for (const auto& [k, tc] : m.terms()) {
            Vector v = apply_term(tc.first, dm, n);
            for (const auto& [mm, c] : v.terms) img.add(mm, c * tc.second);
        }
        if (!img.is_zero()) out.cols.emplace(dm, std::move(img));
    }
    return out;
}

LinearMap eval_generator(const Generator& g, int n) {
    struct Key {
        GenKind kind;
        int a, b, n;
        Flavor flavor;
        bool operator<(const Key& o) const {
            if (kind != o.kind) return kind < o.kind;
            if (a != o.a) return a < o.a;
            if (b != o.b) return b < o.b;
            if (n != o.n) return n < o.n;
            return flavor < o.flavor;
        }
    };
    static std::map<Key, LinearMap> cache;
    static std::mutex mu;
    Key key{g.kind, g.a, g.b, n, g.flavor};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TermPtr t = Term::make(g);
    LinearMap out;
    if (!t) {
        out.dom = ObjectWord(generator_flavor(g), {});
        out.cod = out.dom;
        out.n = n;
        out.parity = generator_parity(g);
    } else {
        out = eval(Morphism(t), n);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, out);
    return out;
}

int faithful_n(const ObjectWord& dom, const ObjectWord& cod) {
    long w = dom.total_weight() + cod.total_weight();
    long n = (w + 1) / 2;
    return static_cast<int>(n < 1 ? 1 : n);
}

bool morphisms_equal(const Morphism& lhs, const Morphism& rhs) {
    if (lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod())
        throw std::invalid_argument("morphisms_equal: boundary mismatch " + lhs.dom().str() +
                                    "->" + lhs.cod().str() + " vs " + rhs.dom().str() + "->" +
                                    rhs.cod().str());
    Morphism diff = lhs - rhs;
    if (diff.is_zero()) return true;
    int n = faithful_n(lhs.dom(), lhs.cod());
    return eval(diff, n).is_zero();
}

EquivarianceReport check_equivariance(const LinearMap& L) {
    EquivarianceReport rep;
    if (L.parity < 0) {
        rep.ok = false;
        rep.witness = "map is not parity homogeneous";
        return rep;
    }
    auto dom_basis = enumerate_basis(L.dom, L.n, max_dim_cap());
    for (const auto& x : pn_basis(L.n)) {
        for (const auto& m : dom_basis) {
            Vector vm;
            vm.add(m, Scalar(1));
            Vector lhs = apply_map(L, pn_act(x, vm, L.dom, L.n));
            Vector rhs = pn_act(x, L.column(m), L.cod, L.n);
            if (x.parity && L.parity) rhs = rhs.scaled(Scalar(-1));
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.witness = "x=" + x.name + " m=" + m.str(L.dom);
                return rep;
            }
        }
    }
    return rep;
}

std::string dump_map(const LinearMap& L) {
    std::ostringstream os;
    os << "dom=" << L.dom.str() << " cod=" << L.cod.str() << " n=" << L.n
       << " parity=" << L.parity << "\n";
    for (const auto& [m, v] : L.cols) {
        for (const auto& [m2, c] : v.terms)
            os << m.str(L.dom) << " -> " << c.str() << " " << m2.str(L.cod) << "\n";
    }
    return os.str();
}

}  // namespace webcat
