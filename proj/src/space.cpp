#include "webcat/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace webcat {

int Monomial::parity() const {
    int p = 0;
    for (const auto& slot : slots)
        for (int i : slot)
            if (i < 0) p ^= 1;
    return p;
}

bool Monomial::operator<(const Monomial& o) const {
    if (slots.size() != o.slots.size()) return slots.size() < o.slots.size();
    for (size_t s = 0; s < slots.size(); ++s) {
        const auto& a = slots[s];
        const auto& b = o.slots[s];
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k] != b[k]) return index_less(a[k], b[k]);
        }
    }
    return false;
}

std::string Monomial::str(const ObjectWord& ambient) const {
    std::string out;
    for (size_t s = 0; s < slots.size(); ++s) {
        if (s) out += " (x) ";
        bool dual = s < ambient.labels.size() && ambient.labels[s] < 0;
        if (slots[s].empty()) {
            out += "1";
            continue;
        }
        for (int i : slots[s]) {
            out += dual ? "v*[" : "v[";
            out += std::to_string(i);
            out += "]";
        }
    }
    if (slots.empty()) out = "1";
    return out;
}

void Vector::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Vector& Vector::operator+=(const Vector& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
    return *this;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector out;
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : terms) out.terms.emplace(m, cc * c);
    return out;
}

std::optional<int> normalize_slot(std::vector<int>& indices, int n) {
    for (int i : indices) {
        if (i == 0 || i > n || i < -n)
            throw std::invalid_argument("normalize_slot: index out of range for n=" +
                                        std::to_string(n));
    }
    int sign = 1;
    // Bubble sort; each adjacent odd-odd transposition flips the sign.
    for (size_t pass = 1; pass < indices.size(); ++pass) {
        for (size_t k = 0; k + pass <= indices.size() - 1 && k + 1 < indices.size(); ++k) {
            if (index_less(indices[k + 1], indices[k])) {
                if (indices[k] < 0 && indices[k + 1] < 0) sign = -sign;
                std::swap(indices[k], indices[k + 1]);
            }
        }
    }
    for (size_t k = 0; k + 1 < indices.size(); ++k)
        if (indices[k] < 0 && indices[k] == indices[k + 1]) return std::nullopt;
    return sign;
}

std::optional<std::pair<Monomial, int>> normalize_word(
    const std::vector<std::vector<int>>& slots, int n) {
    Monomial m;
    m.slots = slots;
    int sign = 1;
    for (auto& slot : m.slots) {
        auto s = normalize_slot(slot, n);
        if (!s) return std::nullopt;
        sign *= *s;
    }
    return std::make_pair(std::move(m), sign);
}

long slot_dimension(int a, int n) {
    if (a < 0) return 0;
    Scalar total(0);
    for (int j = 0; j <= std::min(a, n); ++j)
        total += binom(n, j) * binom(n + a - j - 1, a - j);
    return static_cast<long>(total.numerator());
}

namespace {
int rank_to_index(int r, int n) { return r < n ? r + 1 : -(r - n + 1); }

void gen_slot(int a, int n, int min_rank, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
    if (a == 0) {
        out.push_back(cur);
        return;
    }
    for (int r = min_rank; r < 2 * n; ++r) {
        int idx = rank_to_index(r, n);
        cur.push_back(idx);
        gen_slot(a - 1, n, idx < 0 ? r + 1 : r, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> enumerate_slot_basis(int a, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_slot(a, n, 0, cur, out);
    return out;
}

long basis_dimension(const ObjectWord& word, int n) {
    long d = 1;
    for (int lbl : word.labels) d *= slot_dimension(lbl < 0 ? -lbl : lbl, n);
    return d;
}

std::vector<Monomial> enumerate_basis(const ObjectWord& word, int n, long max_dim) {
    long total = basis_dimension(word, n);
    if (max_dim > 0 && total > max_dim)
        throw std::runtime_error("enumerate_basis: dimension " + std::to_string(total) +
                                 " exceeds the cap of " + std::to_string(max_dim) +
                                 " monomials (see WEBCAT_MAX_DIM)");
    std::vector<std::vector<std::vector<int>>> per_slot;
    per_slot.reserve(word.labels.size());
    for (int lbl : word.labels)
        per_slot.push_back(enumerate_slot_basis(lbl < 0 ? -lbl : lbl, n));
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(total));
    Monomial cur;
    cur.slots.resize(per_slot.size());
    std::vector<size_t> idx(per_slot.size(), 0);
    if (per_slot.empty()) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        for (size_t s = 0; s < per_slot.size(); ++s) cur.slots[s] = per_slot[s][idx[s]];
        out.push_back(cur);
        size_t s = per_slot.size();
        while (s > 0) {
            --s;
            if (++idx[s] < per_slot[s].size()) break;
            idx[s] = 0;
            if (s == 0) return out;
        }
    }
}

PnElement PnElement::make_even(int n, int i, int j) {
    PnElement x;
    x.n = n;
    x.parity = 0;
    x.A.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.B.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.C.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.A[i][j] = Scalar(1);
    x.name = "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    return x;
}

PnElement PnElement::make_odd_b(int n, int i, int j) {
    PnElement x;
    x.n = n;
    x.parity = 1;
    x.A.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.B.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.C.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.B[i][j] = Scalar(1);
    x.B[j][i] = Scalar(1);
    if (i == j) x.B[i][j] = Scalar(1);
    x.name = "b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    return x;
}

PnElement PnElement::make_odd_c(int n, int i, int j) {
    PnElement x;
    x.n = n;
    x.parity = 1;
    x.A.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.B.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.C.assign(n, std::vector<Scalar>(n, Scalar(0)));
    x.C[i][j] = Scalar(1);
    x.C[j][i] = Scalar(-1);
    x.name = "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    return x;
}

Vector PnElement::act_index(int idx) const {
    Vector out;
    Monomial m;
    m.slots.resize(1);
    if (idx > 0) {
        int j = idx - 1;
        for (int i = 0; i < n; ++i) {
            if (!A[i][j].is_zero()) {
                m.slots[0] = {i + 1};
                out.add(m, A[i][j]);
            }
            if (!C[i][j].is_zero()) {
                m.slots[0] = {-(i + 1)};
                out.add(m, C[i][j]);
            }
        }
    } else {
        int j = -idx - 1;
        for (int i = 0; i < n; ++i) {
            if (!B[i][j].is_zero()) {
                m.slots[0] = {i + 1};
                out.add(m, B[i][j]);
            }
            if (!A[j][i].is_zero()) {
                m.slots[0] = {-(i + 1)};
                out.add(m, -A[j][i]);
            }
        }
    }
    return out;
}

std::vector<PnElement> pn_basis(int n) {
    if (n < 1) throw std::invalid_argument("pn_basis: n must be >= 1");
    std::vector<PnElement> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(PnElement::make_even(n, i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) out.push_back(PnElement::make_odd_b(n, i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(PnElement::make_odd_c(n, i, j));
    return out;
}

namespace {

/// x acting on one primal symmetric-power slot (derivation with Koszul signs).
Vector slot_act_primal(const PnElement& x, const std::vector<int>& slot, int n) {
    Vector out;
    int pre_parity = 0;
    for (size_t q = 0; q < slot.size(); ++q) {
        Vector imgs = x.act_index(slot[q]);
        int sign0 = (x.parity && (pre_parity & 1)) ? -1 : 1;
        for (const auto& [im, c] : imgs.terms) {
            std::vector<int> word = slot;
            word[q] = im.slots[0][0];
            std::vector<int> sorted = word;
            auto s = normalize_slot(sorted, n);
            if (!s) continue;
            Monomial m;
            m.slots.push_back(std::move(sorted));
            out.add(m, c * Scalar(sign0 * *s));
        }
        if (slot[q] < 0) pre_parity ^= 1;
    }
    return out;
}

int slot_par(const std::vector<int>& slot) {
    int p = 0;
    for (int i : slot)
        if (i < 0) p ^= 1;
    return p;
}

/// x acting on one dual slot basis vector (m*), expressed in the dual basis:
/// x.(m*) = -(-1)^{|x||m|} sum_{m'} <coeff of m in x.m'> (m')*.
Vector slot_act_dual(const PnElement& x, const std::vector<int>& slot, int a, int n) {
    Vector out;
    Monomial target;
    target.slots.push_back(slot);
    int msign = (x.parity && (slot_par(slot) & 1)) ? 1 : -1;  // -(-1)^{|x||m|}
    for (const auto& cand : enumerate_slot_basis(a, n)) {
        Vector img = slot_act_primal(x, cand, n);
        auto it = img.terms.find(target);
        if (it == img.terms.end()) continue;
        Monomial m;
        m.slots.push_back(cand);
        out.add(m, it->second * Scalar(msign));
    }
    return out;
}

}  // namespace

Vector pn_act(const PnElement& x, const Vector& v, const ObjectWord& word, int n) {
    Vector out;
    for (const auto& [mono, coeff] : v.terms) {
        int pre_parity = 0;
        for (size_t p = 0; p < mono.slots.size(); ++p) {
            bool dual = p < word.labels.size() && word.labels[p] < 0;
            int a = p < word.labels.size() ? std::abs(word.labels[p])
                                           : static_cast<int>(mono.slots[p].size());
            Vector slot_img = dual ? slot_act_dual(x, mono.slots[p], a, n)
                                   : slot_act_primal(x, mono.slots[p], n);
            int sign0 = (x.parity && (pre_parity & 1)) ? -1 : 1;
            for (const auto& [sm, sc] : slot_img.terms) {
                Monomial m = mono;
                m.slots[p] = sm.slots[0];
                out.add(m, coeff * sc * Scalar(sign0));
            }
            pre_parity ^= slot_par(mono.slots[p]);
        }
    }
    return out;
}

}  // namespace webcat
