#include "webcat/linmap.hpp"

#include <stdexcept>

namespace webcat {

namespace {
const Vector kZeroVector{};

Monomial concat_mono(const Monomial& x, const Monomial& y) {
    Monomial out = x;
    out.slots.insert(out.slots.end(), y.slots.begin(), y.slots.end());
    return out;
}

std::pair<Monomial, Monomial> split_mono(const Monomial& m, size_t left_slots) {
    Monomial x, y;
    x.slots.assign(m.slots.begin(), m.slots.begin() + left_slots);
    y.slots.assign(m.slots.begin() + left_slots, m.slots.end());
    return {std::move(x), std::move(y)};
}
}  // namespace

bool LinearMap::is_zero() const {
    for (const auto& [m, v] : cols)
        if (!v.is_zero()) return false;
    return true;
}

const Vector& LinearMap::column(const Monomial& m) const {
    auto it = cols.find(m);
    return it == cols.end() ? kZeroVector : it->second;
}

void LinearMap::add_entry(const Monomial& from, const Monomial& to, const Scalar& c) {
    if (c.is_zero()) return;
    cols[from].add(to, c);
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
    if (dom != o.dom || cod != o.cod)
        throw std::invalid_argument("LinearMap: boundary mismatch in sum");
    if (parity != o.parity) parity = -1;
    for (const auto& [m, v] : o.cols) cols[m] += v;
    for (auto it = cols.begin(); it != cols.end();)
        it = it->second.is_zero() ? cols.erase(it) : std::next(it);
    return *this;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
    LinearMap out;
    out.dom = dom;
    out.cod = cod;
    out.n = n;
    out.parity = parity;
    if (c.is_zero()) return out;
    for (const auto& [m, v] : cols) out.cols.emplace(m, v.scaled(c));
    return out;
}

bool LinearMap::operator==(const LinearMap& o) const {
    if (dom != o.dom || cod != o.cod || n != o.n) return false;
    auto nonzero = [](const std::map<Monomial, Vector>& cs) {
        std::map<Monomial, Vector> out;
        for (const auto& [m, v] : cs)
            if (!v.is_zero()) out.emplace(m, v);
        return out;
    };
    return nonzero(cols) == nonzero(o.cols);
}

LinearMap LinearMap::identity(const ObjectWord& w, int n) {
    LinearMap out;
    out.dom = w;
    out.cod = w;
    out.n = n;
    out.parity = 0;
    for (const auto& m : enumerate_basis(w, n)) {
        Vector v;
        v.add(m, Scalar(1));
        out.cols.emplace(m, std::move(v));
    }
    return out;
}

Vector apply_map(const LinearMap& f, const Vector& v) {
    Vector out;
    for (const auto& [m, c] : v.terms) {
        const Vector& img = f.column(m);
        for (const auto& [m2, c2] : img.terms) out.add(m2, c * c2);
    }
    return out;
}

LinearMap super_compose(const LinearMap& f, const LinearMap& g) {
    if (g.cod != f.dom)
        throw std::invalid_argument("super_compose: cod(g)=" + g.cod.str() +
                                    " does not match dom(f)=" + f.dom.str());
    LinearMap out;
    out.dom = g.dom;
    out.cod = f.cod;
    out.n = f.n;
    out.parity = (f.parity < 0 || g.parity < 0) ? -1 : ((f.parity + g.parity) & 1);
    for (const auto& [m, v] : g.cols) {
        Vector img = apply_map(f, v);
        if (!img.is_zero()) out.cols.emplace(m, std::move(img));
    }
    return out;
}

LinearMap super_tensor(const LinearMap& f, const LinearMap& g) {
    if (f.n != g.n) throw std::invalid_argument("super_tensor: mismatched n");
    LinearMap out;
    out.dom = ObjectWord::concat(f.dom, g.dom);
    out.cod = ObjectWord::concat(f.cod, g.cod);
    out.n = f.n;
    out.parity = (f.parity < 0 || g.parity < 0) ? -1 : ((f.parity + g.parity) & 1);
    bool g_odd = g.parity == 1;
    if (g.parity < 0)
        throw std::invalid_argument("super_tensor: right factor must be parity homogeneous");
    for (const auto& [mx, vx] : f.cols) {
        int sign = (g_odd && mx.parity()) ? -1 : 1;
        for (const auto& [my, vy] : g.cols) {
            Vector img;
            for (const auto& [tx, cx] : vx.terms)
                for (const auto& [ty, cy] : vy.terms)
                    img.add(concat_mono(tx, ty), cx * cy * Scalar(sign));
            if (!img.is_zero()) out.cols.emplace(concat_mono(mx, my), std::move(img));
        }
    }
    return out;
}

}  // namespace webcat
