#include "webcat/build.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace webcat {

bool ChiTuple::operator<(const ChiTuple& o) const {
    if (dom != o.dom) return dom < o.dom;
    if (cod != o.cod) return cod < o.cod;
    if (A != o.A) return A < o.A;
    if (B != o.B) return B < o.B;
    if (D != o.D) return D < o.D;
    return C < o.C;
}

bool ChiTuple::valid() const {
    size_t t = dom.size(), u = cod.size();
    if (A.size() != t || B.size() != u || C.size() != t || D.size() != t) return false;
    for (size_t i = 0; i < t; ++i) {
        if (A[i].size() != t || C[i].size() != u) return false;
        if (A[i][i] != 0) return false;
        for (size_t j = 0; j < t; ++j)
            if (A[i][j] != A[j][i] || A[i][j] < 0 || A[i][j] > 1) return false;
        for (size_t j = 0; j < u; ++j)
            if (C[i][j] < 0) return false;
        if (D[i] < 0 || D[i] > 1) return false;
        long row = 2L * D[i];
        for (size_t j = 0; j < t; ++j) row += A[i][j];
        for (size_t j = 0; j < u; ++j) row += C[i][j];
        if (row != dom[i]) return false;
    }
    for (size_t j = 0; j < u; ++j) {
        if (B[j].size() != u || B[j][j] != 0) return false;
        long col = 0;
        for (size_t i = 0; i < u; ++i) {
            if (B[i][j] != B[j][i] || B[i][j] < 0 || B[i][j] > 1) return false;
            col += B[i][j];
        }
        for (size_t i = 0; i < t; ++i) col += C[i][j];
        if (col != cod[j]) return false;
    }
    return true;
}

int ChiTuple::parity() const {
    int k = 0;
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j) k += A[i][j];
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j) k += B[i][j];
    for (int d : D) k += d;
    return k & 1;
}

std::string ChiTuple::str() const {
    auto mat = [](const std::vector<std::vector<int>>& m) {
        std::string out = "[";
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) out += "; ";
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) out += " ";
                out += std::to_string(m[i][j]);
            }
        }
        return out + "]";
    };
    std::string out = "A=" + mat(A) + " B=" + mat(B) + " C=" + mat(C) + " D=[";
    for (size_t i = 0; i < D.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(D[i]);
    }
    return out + "]";
}

namespace {

TermPtr multi_id(Flavor f, const std::vector<int>& labels) {
    return Term::identity(ObjectWord(f, labels));
}

/// Builds layered diagrams over a tracked strand word. A failed build
/// (negative label inside some generator) poisons the assembler.
class Assembler {
public:
    Assembler(Flavor f, std::vector<int> labels) : flavor_(f) {
        for (int v : labels)
            if (v != 0) labels_.push_back(v);
    }

    bool failed() const { return failed_; }
    const std::vector<int>& labels() const { return labels_; }

    /// Applies `op` to the strands [pos, pos+arity); op->dom must match them.
    void apply(size_t pos, size_t arity, const TermPtr& op) {
        if (failed_) return;
        if (!op) {
            failed_ = true;
            return;
        }
        std::vector<int> prefix(labels_.begin(), labels_.begin() + pos);
        std::vector<int> suffix(labels_.begin() + pos + arity, labels_.end());
        TermPtr layer = op;
        if (!prefix.empty()) layer = Term::tensor(multi_id(flavor_, prefix), layer);
        if (!suffix.empty()) layer = Term::tensor(layer, multi_id(flavor_, suffix));
        term_ = term_ ? Term::compose(layer, term_) : layer;
        std::vector<int> out = prefix;
        for (int v : op->cod.labels) out.push_back(v);
        for (int v : suffix) out.push_back(v);
        labels_ = std::move(out);
    }

    /// Finished term; identity of the initial word when nothing was applied.
    TermPtr term() const {
        if (failed_) return nullptr;
        return term_ ? term_ : multi_id(flavor_, labels_);
    }

private:
    Flavor flavor_;
    std::vector<int> labels_;
    TermPtr term_;
    bool failed_ = false;
};

}  // namespace

TermPtr rung_lr(int a, int b, int s) {
    TermPtr bottom = Term::tensor(gen_split(a - s, s), gen_id(b));
    TermPtr top = Term::tensor(gen_id(a - s), gen_merge(s, b));
    return Term::compose(top, bottom);
}

TermPtr rung_rl(int a, int b, int r) {
    TermPtr bottom = Term::tensor(gen_id(a), gen_split(r, b - r));
    TermPtr top = Term::tensor(gen_merge(a, r), gen_id(b - r));
    return Term::compose(top, bottom);
}

Morphism crossing_expand(int a, int b) {
    Morphism out(ObjectWord(Flavor::Plain, {a, b}), ObjectWord(Flavor::Plain, {b, a}));
    for (int s = std::max(0, a - b); s <= a; ++s) {
        int r = s - (a - b);
        if (r < 0) continue;
        TermPtr bottom = rung_lr(a, b, s);
        TermPtr top = rung_rl(a - s, b + s, r);
        int sign = ((a - s) & 1) ? -1 : 1;
        out.add(Scalar(sign), Term::compose(top, bottom));
    }
    return out;
}

TermPtr multi_split(const std::vector<int>& parts) {
    std::vector<int> ps;
    for (int v : parts) {
        if (v < 0) return nullptr;
        if (v > 0) ps.push_back(v);
    }
    if (ps.empty()) return Term::identity(ObjectWord(Flavor::Plain, {}));
    if (ps.size() == 1) return gen_id(ps[0]);
    int rest = std::accumulate(ps.begin() + 1, ps.end(), 0);
    std::vector<int> tail(ps.begin() + 1, ps.end());
    TermPtr bottom = gen_split(ps[0], rest);
    TermPtr top = Term::tensor(gen_id(ps[0]), multi_split(tail));
    return Term::compose(top, bottom);
}

TermPtr multi_merge(const std::vector<int>& parts) {
    std::vector<int> ps;
    for (int v : parts) {
        if (v < 0) return nullptr;
        if (v > 0) ps.push_back(v);
    }
    if (ps.empty()) return Term::identity(ObjectWord(Flavor::Plain, {}));
    if (ps.size() == 1) return gen_id(ps[0]);
    int rest = std::accumulate(ps.begin() + 1, ps.end(), 0);
    std::vector<int> tail(ps.begin() + 1, ps.end());
    TermPtr bottom = Term::tensor(gen_id(ps[0]), multi_merge(tail));
    TermPtr top = gen_merge(ps[0], rest);
    return Term::compose(top, bottom);
}

TermPtr green_dot(int a) {
    if (a < 2) return nullptr;
    if (a == 2) return gen_antenna();
    TermPtr bottom = gen_split(a - 2, 2);
    TermPtr top = Term::tensor(gen_id(a - 2), gen_antenna());
    return Term::compose(top, bottom);
}

Morphism co_antenna() {
    return Morphism(Scalar(1, 2), Term::compose(gen_merge(1, 1), gen_cup()));
}

TermPtr thick_cap(int a, int b) {
    if (a < 1 || b < 1) return nullptr;
    TermPtr bottom = Term::tensor(gen_split(a - 1, 1), gen_split(1, b - 1));
    TermPtr mid = Term::tensor(Term::tensor(gen_id(a - 1), gen_cap()), gen_id(b - 1));
    return Term::compose(mid, bottom);
}

TermPtr thick_cup(int a, int b) {
    TermPtr bottom = Term::tensor(Term::tensor(gen_id(a), gen_cup()), gen_id(b));
    TermPtr top = Term::tensor(gen_merge(a, 1), gen_merge(1, b));
    return Term::compose(top, bottom);
}

namespace {

// Real (nonzero) position of logical slot k (0-based) of a word with zeros.
size_t real_pos(const std::vector<int>& word, int k) {
    size_t p = 0;
    for (int i = 0; i < k; ++i)
        if (word[i] != 0) ++p;
    return p;
}

Morphism zero_on(const std::vector<int>& word) {
    ObjectWord w(Flavor::Plain, word);
    return Morphism(w, w);
}

}  // namespace

Morphism pwebm_e(int t, int r, int s, const std::vector<int>& word) {
    int m = static_cast<int>(word.size());
    if (!(1 <= r && r < s && s <= m)) throw std::invalid_argument("pwebm_e: need 1 <= r < s <= m");
    if (t == 0) return Morphism(Term::identity(ObjectWord(Flavor::Plain, word)));
    if (word[s - 1] - t < 0) return zero_on(word);
    Assembler asm_(Flavor::Plain, word);
    size_t ps = real_pos(word, s - 1);
    asm_.apply(ps, word[s - 1] ? 1 : 0, gen_split(t, word[s - 1] - t));
    // Move the t-strand left across the intermediate slots.
    size_t cur = ps;  // position of the t-strand (split puts it first)
    size_t target = real_pos(word, r - 1) + (word[r - 1] ? 1 : 0);
    while (cur > target) {
        int left = asm_.labels()[cur - 1];
        asm_.apply(cur - 1, 2, gen_crossing(left, t));
        --cur;
    }
    asm_.apply(target - (word[r - 1] ? 1 : 0), word[r - 1] ? 2 : 1,
               gen_merge(word[r - 1], t));
    TermPtr out = asm_.term();
    return out ? Morphism(out) : zero_on(word);
}

Morphism pwebm_f(int t, int r, int s, const std::vector<int>& word) {
    int m = static_cast<int>(word.size());
    if (!(1 <= r && r < s && s <= m)) throw std::invalid_argument("pwebm_f: need 1 <= r < s <= m");
    if (t == 0) return Morphism(Term::identity(ObjectWord(Flavor::Plain, word)));
    int ar = word[r - 1], as = word[s - 1];
    if (ar - t < 0) return zero_on(word);
    Assembler asm_(Flavor::Plain, word);
    size_t pr = real_pos(word, r - 1);
    size_t ps0 = real_pos(word, s - 1);
    asm_.apply(pr, 1, gen_split(ar - t, t));
    size_t cur = pr + (ar - t > 0 ? 1 : 0);
    size_t fin = cur + (ps0 - pr - 1);  // past the strands between slots r and s
    while (cur < fin) {
        asm_.apply(cur, 2, gen_crossing(t, asm_.labels()[cur + 1]));
        ++cur;
    }
    asm_.apply(fin, as > 0 ? 2 : 1, gen_merge(t, as));
    TermPtr out = asm_.term();
    return out ? Morphism(out) : zero_on(word);
}

Morphism pwebm_b(int r, int s, const std::vector<int>& word) {
    int m = static_cast<int>(word.size());
    if (!(1 <= r && r < s && s <= m)) throw std::invalid_argument("pwebm_b: need 1 <= r < s <= m");
    if (word[r - 1] < 1 || word[s - 1] < 1) return zero_on(word);
    Assembler asm_(Flavor::Plain, word);
    size_t pr = real_pos(word, r - 1);
    asm_.apply(pr, 1, gen_split(word[r - 1] - 1, 1));
    size_t one_r = pr + (word[r - 1] - 1 ? 1 : 0);
    size_t ps = real_pos(word, s - 1) + (word[r - 1] - 1 ? 1 : 0);
    asm_.apply(ps, 1, gen_split(1, word[s - 1] - 1));
    size_t cur = ps;  // the 1 split off slot s
    while (cur > one_r + 1) {
        int left = asm_.labels()[cur - 1];
        asm_.apply(cur - 1, 2, gen_crossing(left, 1));
        --cur;
    }
    asm_.apply(one_r, 2, gen_cap());
    TermPtr out = asm_.term();
    return out ? Morphism(out) : zero_on(word);
}

Morphism pwebm_c(int r, int s, const std::vector<int>& word) {
    if (r > s) return pwebm_c(s, r, word).scaled(Scalar(-1));
    int m = static_cast<int>(word.size());
    if (!(1 <= r && r < s && s <= m)) throw std::invalid_argument("pwebm_c: need 1 <= r < s <= m");
    Assembler asm_(Flavor::Plain, word);
    size_t pr = real_pos(word, r - 1);
    size_t after_r = pr + (word[r - 1] ? 1 : 0);
    asm_.apply(after_r, 0, gen_cup());
    size_t cur = after_r + 1;  // right cup leg
    size_t ps = real_pos(word, s - 1) + 2;
    while (cur + 1 < ps) {
        int right = asm_.labels()[cur + 1];
        asm_.apply(cur, 2, gen_crossing(1, right));
        ++cur;
    }
    asm_.apply(after_r - (word[r - 1] ? 1 : 0), word[r - 1] ? 2 : 1,
               gen_merge(word[r - 1], 1));
    // After the left merge the word shrank by one (or stayed, if slot r was 0).
    size_t leg2 = cur - (word[r - 1] ? 1 : 0);
    asm_.apply(leg2, word[s - 1] ? 2 : 1, gen_merge(1, word[s - 1]));
    TermPtr out = asm_.term();
    return out ? Morphism(out) : zero_on(word);
}

Morphism pwebm_b_single(int u, const std::vector<int>& word) {
    int m = static_cast<int>(word.size());
    if (!(1 <= u && u <= m)) throw std::invalid_argument("pwebm_b_single: slot out of range");
    if (word[u - 1] < 2) return zero_on(word);
    Assembler asm_(Flavor::Plain, word);
    asm_.apply(real_pos(word, u - 1), 1, green_dot(word[u - 1]));
    TermPtr out = asm_.term();
    return out ? Morphism(out) : zero_on(word);
}

namespace {

struct StrandTag {
    int group;  // top group j for B/C strands; bottom row i for A strands
    int type;   // 0 = B, 1 = C (top ordering); A strands use type 2
    int other;
    bool operator<(const StrandTag& o) const {
        if (group != o.group) return group < o.group;
        if (type != o.type) return type < o.type;
        return other < o.other;
    }
    bool operator==(const StrandTag& o) const {
        return group == o.group && type == o.type && other == o.other;
    }
};

}  // namespace

TermPtr xi_term(const ChiTuple& chi) {
    if (!chi.valid()) throw std::invalid_argument("xi_term: invalid chi tuple " + chi.str());
    int t = static_cast<int>(chi.dom.size());
    int u = static_cast<int>(chi.cod.size());

    Assembler asm_(Flavor::Plain, chi.dom);
    std::vector<StrandTag> tags;  // parallel to asm_.labels()

    // Bottom row: one antenna mark plus one multiple split per domain strand.
    {
        size_t pos = 0;
        for (int i = 0; i < t; ++i) {
            if (chi.dom[i] == 0) continue;
            if (chi.D[i]) asm_.apply(pos, 1, green_dot(chi.dom[i]));
            std::vector<int> parts;
            for (int j = 0; j < t; ++j) parts.push_back(chi.A[i][j]);
            for (int j = 0; j < u; ++j) parts.push_back(chi.C[i][j]);
            int total = chi.dom[i] - 2 * chi.D[i];
            size_t arity = total > 0 ? 1 : 0;
            asm_.apply(pos, arity, multi_split(parts));
            for (int j = 0; j < t; ++j)
                if (chi.A[i][j] > 0) tags.push_back({i, 2, j});
            for (int j = 0; j < u; ++j)
                if (chi.C[i][j] > 0) tags.push_back({j, 1, i});
            pos = tags.size();
        }
    }

    auto find_tag = [&](const StrandTag& tg) {
        for (size_t k = 0; k < tags.size(); ++k)
            if (tags[k] == tg) return k;
        throw std::logic_error("xi_term: strand bookkeeping error");
    };
    auto move_left = [&](size_t from, size_t to) {
        for (size_t k = from; k > to; --k) {
            asm_.apply(k - 1, 2, Term::make({GenKind::Crossing, asm_.labels()[k - 1],
                                             asm_.labels()[k]}));
            std::swap(tags[k - 1], tags[k]);
        }
    };

    // Caps for the A-pairs, in lexicographic order.
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            if (!chi.A[i][j]) continue;
            size_t p = find_tag({i, 2, j});
            size_t q = find_tag({j, 2, i});
            if (q < p) std::swap(p, q);
            move_left(q, p + 1);
            asm_.apply(p, 2, gen_cap());
            tags.erase(tags.begin() + p, tags.begin() + p + 2);
        }
    }

    // Route the through strands into top order by a positional sort.
    for (size_t p = 0; p < tags.size(); ++p) {
        size_t best = p;
        for (size_t q = p + 1; q < tags.size(); ++q)
            if (tags[q] < tags[best]) best = q;
        move_left(best, p);
    }

    // Cups for the B-pairs; each leg lands at its final slot.
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) {
            if (!chi.B[i][j]) continue;
            StrandTag leg1{i, 0, j};  // group i, merged as B_{ji}
            StrandTag leg2{j, 0, i};
            size_t p = 0;
            while (p < tags.size() && tags[p] < leg1) ++p;
            asm_.apply(p, 0, gen_cup());
            tags.insert(tags.begin() + p, {leg1, leg2});
            size_t cur = p + 1;
            while (cur + 1 < tags.size() && tags[cur + 1] < leg2) {
                asm_.apply(cur, 2, Term::make({GenKind::Crossing, 1,
                                               asm_.labels()[cur + 1]}));
                std::swap(tags[cur], tags[cur + 1]);
                ++cur;
            }
        }
    }

    // Top row of multiple merges.
    {
        size_t pos = 0;
        for (int j = 0; j < u; ++j) {
            if (chi.cod[j] == 0) continue;
            std::vector<int> parts;
            size_t arity = 0;
            for (int i = 0; i < u; ++i) {
                parts.push_back(chi.B[i][j]);
                if (chi.B[i][j] > 0) ++arity;
            }
            for (int i = 0; i < t; ++i) {
                parts.push_back(chi.C[i][j]);
                if (chi.C[i][j] > 0) ++arity;
            }
            asm_.apply(pos, arity, multi_merge(parts));
            pos += 1;
        }
    }

    TermPtr out = asm_.term();
    if (!out) throw std::logic_error("xi_term: construction collapsed to zero");
    if (out->cod != ObjectWord(Flavor::Plain, chi.cod))
        throw std::logic_error("xi_term: boundary mismatch for " + chi.str());
    return out;
}

TermPtr y_full(const std::vector<int>& word) {
    TermPtr out;
    for (int a : word) {
        if (a == 0) continue;
        TermPtr part = multi_split(std::vector<int>(a, 1));
        out = out ? Term::tensor(out, part) : part;
    }
    return out ? out : Term::identity(ObjectWord(Flavor::Plain, {}));
}

TermPtr z_full(const std::vector<int>& word) {
    TermPtr out;
    for (int a : word) {
        if (a == 0) continue;
        TermPtr part = multi_merge(std::vector<int>(a, 1));
        out = out ? Term::tensor(out, part) : part;
    }
    return out ? out : Term::identity(ObjectWord(Flavor::Plain, {}));
}

Morphism explosion(const Morphism& f) {
    Morphism yb(y_full(f.cod().labels));
    Morphism za(z_full(f.dom().labels));
    return Morphism::compose(yb, Morphism::compose(f, za));
}

Morphism contraction(const Morphism& g, const std::vector<int>& dom_word,
                     const std::vector<int>& cod_word) {
    Morphism zb(z_full(cod_word));
    Morphism ya(y_full(dom_word));
    return Morphism::compose(zb, Morphism::compose(g, ya));
}

// Generator wrappers ---------------------------------------------------------

TermPtr gen_upsplit(int a, int b) { return Term::make({GenKind::UpSplit, a, b}); }
TermPtr gen_upmerge(int a, int b) { return Term::make({GenKind::UpMerge, a, b}); }
TermPtr gen_lcap(int a) { return Term::make({GenKind::LeftCap, a, 0}); }
TermPtr gen_lcup(int a) { return Term::make({GenKind::LeftCup, a, 0}); }
TermPtr gen_tagin() { return Term::make({GenKind::TagIn}); }
TermPtr gen_tagout() { return Term::make({GenKind::TagOut}); }
TermPtr gen_rcross(int a, int b) { return Term::make({GenKind::RightCrossing, a, b}); }
TermPtr gen_rcap(int a) { return Term::make({GenKind::RightCap, a, 0}); }
TermPtr gen_rcup(int a) { return Term::make({GenKind::RightCup, a, 0}); }
TermPtr gen_ucap() { return Term::make({GenKind::UpCap}); }
TermPtr gen_ucup() { return Term::make({GenKind::UpCup}); }
TermPtr gen_lcross(int a, int b) { return Term::make({GenKind::LeftCrossing, a, b}); }
TermPtr gen_dcross(int a, int b) { return Term::make({GenKind::DownCrossing, a, b}); }
TermPtr gen_dsplit(int a, int b) { return Term::make({GenKind::DownSplit, a, b}); }
TermPtr gen_dmerge(int a, int b) { return Term::make({GenKind::DownMerge, a, b}); }

TermPtr gen_ucross(int a, int b) {
    Generator g{GenKind::Crossing, a, b};
    g.flavor = Flavor::Oriented;
    return Term::make(g);
}

TermPtr oriented_crossing(int x, int y) {
    if (x >= 0 && y >= 0) return gen_ucross(x, y);
    if (x >= 0 && y < 0) return gen_rcross(x, -y);
    if (x < 0 && y >= 0) return gen_lcross(-x, y);
    return gen_dcross(-x, -y);
}

TermPtr flavored_crossing(Flavor f, int x, int y) {
    switch (f) {
        case Flavor::Plain: return gen_crossing(x, y);
        case Flavor::Oriented: return oriented_crossing(x, y);
        case Flavor::Brauer: return Term::make({GenKind::BrauerTwist});
    }
    return nullptr;
}

// Defining composites of the derived oriented pieces --------------------------

TermPtr ucap_composite() {
    return Term::compose(gen_lcap(1), Term::tensor(gen_tagin(), gen_oriented_id(1)));
}

TermPtr ucup_composite() {
    return Term::compose(Term::tensor(gen_oriented_id(1), gen_tagout()), gen_lcup(1));
}

TermPtr rcap_composite(int a) { return Term::compose(gen_lcap(a), gen_rcross(a, a)); }

TermPtr rcup_composite(int a) { return Term::compose(gen_rcross(a, a), gen_lcup(a)); }

TermPtr lcross_composite(int a, int b) {
    TermPtr s1 = Term::tensor(Term::tensor(gen_oriented_id(-a), gen_oriented_id(b)), gen_lcup(a));
    TermPtr s2 = Term::tensor(Term::tensor(gen_oriented_id(-a), gen_ucross(b, a)),
                              gen_oriented_id(-a));
    TermPtr s3 = Term::tensor(Term::tensor(gen_lcap(a), gen_oriented_id(b)), gen_oriented_id(-a));
    return Term::compose(s3, Term::compose(s2, s1));
}

TermPtr dcross_composite(int a, int b) {
    if (a < 0 || b < 0) return nullptr;
    if (a == 0 || b == 0)
        return Term::identity(ObjectWord(Flavor::Oriented, {-a, -b}));
    Assembler asm_(Flavor::Oriented, {-a, -b});
    asm_.apply(2, 0, gen_lcup(a));
    asm_.apply(3, 0, gen_lcup(b));
    asm_.apply(2, 2, gen_ucross(a, b));
    asm_.apply(1, 2, gen_lcap(b));
    asm_.apply(0, 2, gen_lcap(a));
    return asm_.term();
}

TermPtr dsplit_composite(int a, int b) {
    if (a < 0 || b < 0) return nullptr;
    Assembler asm_(Flavor::Oriented, {-a, -b});
    size_t k = asm_.labels().size();
    asm_.apply(k, 0, gen_lcup(a + b));
    if (a + b > 0) {
        asm_.apply(k, 1, gen_upsplit(b, a));
        if (b > 0) asm_.apply(a ? 1 : 0, 2, gen_lcap(b));
        if (a > 0) asm_.apply(0, 2, gen_lcap(a));
    }
    return asm_.term();
}

TermPtr dmerge_composite(int a, int b) {
    if (a < 0 || b < 0) return nullptr;
    Assembler asm_(Flavor::Oriented, {-(a + b)});
    if (a + b == 0) return asm_.term();
    asm_.apply(1, 0, gen_lcup(b));
    asm_.apply(1 + (b ? 1 : 0), 0, gen_lcup(a));
    asm_.apply(1, (a ? 1 : 0) + (b ? 1 : 0), gen_upmerge(b, a));
    asm_.apply(0, 2, gen_lcap(a + b));
    return asm_.term();
}

Morphism up_antenna() {
    return Morphism(Scalar(1, 2), Term::compose(gen_ucap(), gen_upsplit(1, 1)));
}

Morphism tagin_composite() {
    TermPtr t = Term::compose(Term::tensor(gen_ucap(), gen_oriented_id(-1)),
                              Term::tensor(gen_oriented_id(1), gen_lcup(1)));
    return Morphism(t);
}

Morphism tagout_composite() {
    TermPtr t = Term::compose(Term::tensor(gen_lcap(1), gen_oriented_id(1)),
                              Term::tensor(gen_oriented_id(-1), gen_ucup()));
    return Morphism(t);
}

TermPtr permutation_network(const ObjectWord& word, const std::vector<int>& perm) {
    Assembler asm_(word.flavor, word.labels);
    std::vector<int> target(perm);
    for (size_t p = 0; p < target.size(); ++p) {
        size_t best = p;
        for (size_t q = p + 1; q < target.size(); ++q)
            if (target[q] < target[best]) best = q;
        for (size_t k = best; k > p; --k) {
            asm_.apply(k - 1, 2, flavored_crossing(word.flavor, asm_.labels()[k - 1],
                                                   asm_.labels()[k]));
            std::swap(target[k - 1], target[k]);
        }
    }
    return asm_.term();
}

// Functors on terms -----------------------------------------------------------

namespace {

Morphism term_functor(const TermPtr& t,
                      Morphism (*gen_map)(const Generator&)) {
    switch (t->node) {
        case Term::Node::Gen:
            return gen_map(t->gen);
        case Term::Node::Compose:
            return Morphism::compose(term_functor(t->first, gen_map),
                                     term_functor(t->second, gen_map));
        case Term::Node::Tensor:
            return Morphism::tensor(term_functor(t->first, gen_map),
                                    term_functor(t->second, gen_map));
    }
    throw std::logic_error("term_functor: bad node");
}

Morphism brauer_gen_map(const Generator& g) {
    switch (g.kind) {
        case GenKind::BrauerTwist: return Morphism(gen_crossing(1, 1));
        case GenKind::BrauerCap: return Morphism(gen_cap());
        case GenKind::BrauerCup: return Morphism(gen_cup());
        case GenKind::Id: {
            if (g.a == 0) return Morphism(Term::identity(ObjectWord(Flavor::Plain, {})));
            return Morphism(gen_id(1));
        }
        default:
            throw std::invalid_argument("brauer_embed: non-Brauer generator " +
                                        generator_str(g));
    }
}

Morphism oriented_gen_map(const Generator& g) {
    switch (g.kind) {
        case GenKind::Split: return Morphism(gen_upsplit(g.a, g.b));
        case GenKind::Merge: return Morphism(gen_upmerge(g.a, g.b));
        case GenKind::Cap: return Morphism(gen_ucap());
        case GenKind::Cup: return Morphism(gen_ucup());
        case GenKind::Antenna: return up_antenna();
        case GenKind::Id: return Morphism(gen_oriented_id(g.a));
        case GenKind::Crossing: return Morphism(gen_ucross(g.a, g.b));
        default:
            throw std::invalid_argument("to_oriented: generator " + generator_str(g) +
                                        " is not a plain web generator");
    }
}

/// Mirror image of one generator, as a morphism (the antenna reflects to a
/// scalar multiple of a composite).
Morphism mirror_gen(const Generator& g) {
    Generator out = g;
    switch (g.kind) {
        case GenKind::Split: out.kind = GenKind::Merge; break;
        case GenKind::Merge: out.kind = GenKind::Split; break;
        case GenKind::Cap: out.kind = GenKind::Cup; break;
        case GenKind::Cup: out.kind = GenKind::Cap; break;
        case GenKind::Antenna: return co_antenna();
        case GenKind::Id:
            if (g.flavor == Flavor::Oriented) out.a = -g.a;
            break;
        case GenKind::Crossing: std::swap(out.a, out.b); break;
        case GenKind::UpSplit: out.kind = GenKind::DownSplit; break;
        case GenKind::UpMerge: out.kind = GenKind::DownMerge; break;
        case GenKind::DownSplit: out.kind = GenKind::UpSplit; break;
        case GenKind::DownMerge: out.kind = GenKind::UpMerge; break;
        case GenKind::LeftCap: out.kind = GenKind::LeftCup; break;
        case GenKind::LeftCup: out.kind = GenKind::LeftCap; break;
        case GenKind::RightCap: out.kind = GenKind::RightCup; break;
        case GenKind::RightCup: out.kind = GenKind::RightCap; break;
        case GenKind::UpCap: out.kind = GenKind::UpCup; break;
        case GenKind::UpCup: out.kind = GenKind::UpCap; break;
        case GenKind::TagIn: case GenKind::TagOut: break;
        case GenKind::RightCrossing: std::swap(out.a, out.b); break;
        case GenKind::LeftCrossing: std::swap(out.a, out.b); break;
        case GenKind::BrauerTwist: break;
        case GenKind::BrauerCap: out.kind = GenKind::BrauerCup; break;
        case GenKind::BrauerCup: out.kind = GenKind::BrauerCap; break;
        case GenKind::DownCrossing: {
            Generator up{GenKind::Crossing, g.b, g.a};
            up.flavor = Flavor::Oriented;
            return Morphism(Term::make(up));
        }
    }
    if (g.kind == GenKind::Crossing && g.flavor == Flavor::Oriented) {
        // Upward crossing reflects to the downward one with swapped labels.
        return Morphism(gen_dcross(g.b, g.a));
    }
    return Morphism(Term::make(out));
}

Morphism mirror_term(const TermPtr& t, int& odd_count) {
    switch (t->node) {
        case Term::Node::Gen:
            odd_count += generator_parity(t->gen);
            return mirror_gen(t->gen);
        case Term::Node::Compose: {
            Morphism top = mirror_term(t->second, odd_count);
            Morphism bottom = mirror_term(t->first, odd_count);
            return Morphism::compose(top, bottom);
        }
        case Term::Node::Tensor: {
            Morphism left = mirror_term(t->first, odd_count);
            Morphism right = mirror_term(t->second, odd_count);
            return Morphism::tensor(left, right);
        }
    }
    throw std::logic_error("mirror_term: bad node");
}

}  // namespace

Morphism brauer_embed(const Morphism& m) {
    Morphism out(ObjectWord(Flavor::Plain, m.dom().labels),
                 ObjectWord(Flavor::Plain, m.cod().labels));
    for (const auto& [k, tc] : m.terms())
        out += term_functor(tc.first, brauer_gen_map).scaled(tc.second);
    return out;
}

Morphism to_oriented(const Morphism& m) {
    Morphism out(ObjectWord(Flavor::Oriented, m.dom().labels),
                 ObjectWord(Flavor::Oriented, m.cod().labels));
    for (const auto& [k, tc] : m.terms())
        out += term_functor(tc.first, oriented_gen_map).scaled(tc.second);
    return out;
}

namespace {
ObjectWord refl_word(const ObjectWord& w) {
    if (w.flavor != Flavor::Oriented) return w;
    std::vector<int> ls;
    for (int v : w.labels) ls.push_back(-v);
    return ObjectWord(Flavor::Oriented, ls);
}
}  // namespace

Morphism refl(const Morphism& m) {
    Morphism out(refl_word(m.cod()), refl_word(m.dom()));
    for (const auto& [k, tc] : m.terms()) {
        int odd = 0;
        Morphism mt = mirror_term(tc.first, odd);
        int e = (odd * (odd - 1) / 2) % 2;
        out += mt.scaled(e ? -tc.second : tc.second);
    }
    return out;
}

Morphism mix_to_up(const Morphism& m) {
    if (m.flavor() != Flavor::Oriented)
        throw std::invalid_argument("mix_to_up: expected an oriented morphism");
    const auto& a = m.dom().labels;
    const auto& b = m.cod().labels;

    // Sort the domain with downs first, the codomain with ups first.
    std::vector<size_t> sd, td;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0) sd.push_back(i);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) sd.push_back(i);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] > 0) td.push_back(i);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0) td.push_back(i);

    std::vector<int> sorted_dom, sorted_cod;
    for (size_t i : sd) sorted_dom.push_back(a[i]);
    for (size_t i : td) sorted_cod.push_back(b[i]);

    std::vector<int> perm_n(a.size());
    for (size_t k = 0; k < sd.size(); ++k) perm_n[k] = static_cast<int>(sd[k]);
    Morphism f = Morphism::compose(
        m, Morphism(permutation_network(ObjectWord(Flavor::Oriented, sorted_dom), perm_n)));

    std::vector<int> perm_m(b.size());
    for (size_t k = 0; k < td.size(); ++k) perm_m[td[k]] = static_cast<int>(k);
    f = Morphism::compose(Morphism(permutation_network(m.cod(), perm_m)), f);

    // Peel leading downward domain strands into upward codomain strands.
    while (!f.dom().labels.empty() && f.dom().labels[0] < 0) {
        int x = -f.dom().labels[0];
        std::vector<int> rest(f.dom().labels.begin() + 1, f.dom().labels.end());
        Morphism cup(Term::tensor(gen_lcup(x),
                                  Term::identity(ObjectWord(Flavor::Oriented, rest))));
        Morphism wrapped = Morphism::tensor(Morphism(gen_oriented_id(x)), f);
        f = Morphism::compose(wrapped, cup);
    }
    // Peel trailing downward codomain strands into upward domain strands.
    while (!f.cod().labels.empty() && f.cod().labels.back() < 0) {
        int y = -f.cod().labels.back();
        std::vector<int> stuff(f.cod().labels.begin(), f.cod().labels.end() - 1);
        Morphism cap(Term::tensor(Term::identity(ObjectWord(Flavor::Oriented, stuff)),
                                  gen_lcap(y)));
        Morphism wrapped = Morphism::tensor(f, Morphism(gen_oriented_id(y)));
        f = Morphism::compose(cap, wrapped);
    }
    return f;
}

}  // namespace webcat
