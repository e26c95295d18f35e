#include "webcat/relations.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace webcat {

namespace {

ObjectWord pw(std::vector<int> ls) { return ObjectWord(Flavor::Plain, std::move(ls)); }
ObjectWord ow(std::vector<int> ls) { return ObjectWord(Flavor::Oriented, std::move(ls)); }

Morphism mid(const ObjectWord& w) { return Morphism(Term::identity(w)); }

/// id (x) op (x) id over the logical word `lg` (zero labels allowed), with op
/// consuming the `arity` logical strands starting at `pos`.
Morphism slot_op(Flavor f, const std::vector<int>& lg, size_t pos, size_t arity,
                 const Morphism& op) {
    if (pos + arity > lg.size())
        throw std::logic_error("slot_op: logical position out of range");
    if (op.is_zero()) return Morphism(ObjectWord(f, {}), ObjectWord(f, {}));
    std::vector<int> pre(lg.begin(), lg.begin() + pos);
    std::vector<int> suf(lg.begin() + pos + arity, lg.end());
    ObjectWord prew(f, pre), sufw(f, suf);
    Morphism out = op;
    if (!prew.labels.empty()) out = Morphism::tensor(mid(prew), out);
    if (!sufw.labels.empty()) out = Morphism::tensor(out, mid(sufw));
    return out;
}

Morphism mterm(const TermPtr& t) { return t ? Morphism(t) : Morphism(pw({}), pw({})); }

std::string pstr(std::initializer_list<int> vals) {
    std::string out;
    for (int v : vals) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

std::string wstr(const std::vector<int>& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i]);
    }
    return out + ")";
}

void push(std::vector<RelationInstance>& out, const std::string& suite,
          const std::string& name, const std::string& params, Morphism lhs, Morphism rhs,
          RelationInstance::Mode mode = RelationInstance::Mode::Equal) {
    RelationInstance inst;
    inst.suite = suite;
    inst.name = name;
    inst.params = params;
    inst.lhs = std::move(lhs);
    inst.rhs = std::move(rhs);
    inst.mode = mode;
    out.push_back(std::move(inst));
}

// ---------------------------------------------------------------- glweb ----

void gen_glweb(std::vector<RelationInstance>& out, int K, int R) {
    const char* S = "glweb";
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            for (int c = 0; c <= K; ++c) {
                // Web-associativity, split and merge forms.
                Morphism ls = Morphism::compose(
                    mterm(Term::tensor(gen_id(a), gen_split(b, c))), mterm(gen_split(a, b + c)));
                Morphism rs = Morphism::compose(
                    mterm(Term::tensor(gen_split(a, b), gen_id(c))), mterm(gen_split(a + b, c)));
                push(out, S, "AssocRel-split", pstr({a, b, c}), ls, rs);
                Morphism lm = Morphism::compose(
                    mterm(gen_merge(a, b + c)), mterm(Term::tensor(gen_id(a), gen_merge(b, c))));
                Morphism rm = Morphism::compose(
                    mterm(gen_merge(a + b, c)), mterm(Term::tensor(gen_merge(a, b), gen_id(c))));
                push(out, S, "AssocRel-merge", pstr({a, b, c}), lm, rm);
            }
            // Knothole.
            push(out, S, "KnotholeRel", pstr({a, b}),
                 Morphism::compose(mterm(gen_merge(a, b)), mterm(gen_split(a, b))),
                 mid(pw({a + b})).scaled(binom(a + b, a)));
            // Rung swap.
            for (int s = 0; s <= R; ++s)
                for (int r = 0; r <= R; ++r) {
                    if (a - s < 0 || b + s - r < 0 || a - s + r < 0 || b - r + s < 0) continue;
                    Morphism lhs = Morphism::compose(mterm(rung_rl(a - s, b + s, r)),
                                                     mterm(rung_lr(a, b, s)));
                    Morphism rhs(pw({a, b}), pw({a - s + r, b + s - r}));
                    for (int t = 0; t <= std::min(r, s); ++t) {
                        TermPtr bot = rung_rl(a, b, r - t);
                        if (!bot) continue;
                        TermPtr top = rung_lr(a + r - t, b - r + t, s - t);
                        TermPtr both = Term::compose(top, bot);
                        if (!both) continue;
                        rhs.add(binom(a - b + r - s, t), both);
                    }
                    push(out, S, "DiagSwitchRel", pstr({a, b, s, r}), lhs, rhs);
                }
            // Crossing absorption.
            push(out, S, "CrossAbsorb-merge", pstr({a, b}),
                 Morphism::compose(mterm(gen_merge(b, a)), mterm(gen_crossing(a, b))),
                 mterm(gen_merge(a, b)));
            push(out, S, "CrossAbsorb-split", pstr({a, b}),
                 Morphism::compose(mterm(gen_crossing(b, a)), mterm(gen_split(b, a))),
                 mterm(gen_split(a, b)));
            // Double crossing.
            push(out, S, "BraidThm-B1-double", pstr({a, b}),
                 Morphism::compose(mterm(gen_crossing(b, a)), mterm(gen_crossing(a, b))),
                 mid(pw({a, b})));
        }
    // Coxeter relation for rungs on three strands.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int c = 0; c <= K; ++c)
                for (int s = 0; s <= R; ++s)
                    for (int sp = 0; sp <= R; ++sp)
                        for (int spp = 0; spp <= R; ++spp) {
                            // Left side: rung s (1->2), rung s' (2->3), rung s'' (1->2).
                            if (a - s < 0 || b + s - sp < 0 || a - s - spp < 0 ||
                                b + s - sp + spp < 0 || c + sp < 0)
                                continue;
                            std::vector<int> w0{a, b, c};
                            Morphism lhs =
                                slot_op(Flavor::Plain, w0, 0, 2, mterm(rung_lr(a, b, s)));
                            std::vector<int> w1{a - s, b + s, c};
                            lhs = Morphism::compose(
                                slot_op(Flavor::Plain, w1, 1, 2, mterm(rung_lr(b + s, c, sp))), lhs);
                            std::vector<int> w2{a - s, b + s - sp, c + sp};
                            lhs = Morphism::compose(
                                slot_op(Flavor::Plain, w2, 0, 2, mterm(rung_lr(a - s, b + s - sp, spp))), lhs);
                            Morphism rhs(pw(w0), pw({a - s - spp, b + s - sp + spp, c + sp}));
                            for (int t = 0; t <= std::min(spp, sp); ++t) {
                                // rung (s''-t) on (2,3); rung (s+s'') on (1,2);
                                // rung (s'-s''+t) on (2,3).
                                if (b - spp + t < 0 || a - s - spp < 0) continue;
                                Morphism m1 = slot_op(Flavor::Plain, w0, 1, 2, mterm(rung_lr(b, c, spp - t)));
                                std::vector<int> v1{a, b - spp + t, c + spp - t};
                                Morphism m2 = slot_op(
                                    Flavor::Plain, v1, 0, 2, mterm(rung_lr(a, b - spp + t, s + spp)));
                                std::vector<int> v2{a - s - spp, b + s + t, c + spp - t};
                                Morphism m3 = slot_op(
                                    Flavor::Plain, v2, 1, 2,
                                    mterm(rung_lr(b + s + t, c + spp - t, sp - spp + t)));
                                Morphism term =
                                    Morphism::compose(m3, Morphism::compose(m2, m1));
                                rhs += term.scaled(binom(s - sp + spp, t));
                            }
                            push(out, S, "CoxeterWeb", pstr({a, b, c, s, sp, spp}), lhs, rhs);
                            push(out, S, "CoxeterWeb-mirror", pstr({a, b, c, s, sp, spp}),
                                 refl(lhs), refl(rhs));
                        }
    // Braid relation and crossing naturality.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int c = 0; c <= K; ++c) {
                std::vector<int> w0{a, b, c};
                Morphism l = slot_op(Flavor::Plain, w0, 1, 2, mterm(gen_crossing(b, c)));
                l = Morphism::compose(slot_op(Flavor::Plain, {a, c, b}, 0, 2, mterm(gen_crossing(a, c))), l);
                l = Morphism::compose(slot_op(Flavor::Plain, {c, a, b}, 1, 2, mterm(gen_crossing(a, b))), l);
                Morphism r = slot_op(Flavor::Plain, w0, 0, 2, mterm(gen_crossing(a, b)));
                r = Morphism::compose(slot_op(Flavor::Plain, {b, a, c}, 1, 2, mterm(gen_crossing(a, c))), r);
                r = Morphism::compose(slot_op(Flavor::Plain, {b, c, a}, 0, 2, mterm(gen_crossing(b, c))), r);
                push(out, S, "BraidThm-B1-braid", pstr({a, b, c}), l, r);

                // (B3): merges slide through crossings, both chiralities.
                Morphism l3 = slot_op(Flavor::Plain, {c, a, b}, 0, 2, mterm(gen_crossing(c, a)));
                l3 = Morphism::compose(slot_op(Flavor::Plain, {a, c, b}, 1, 2, mterm(gen_crossing(c, b))), l3);
                l3 = Morphism::compose(slot_op(Flavor::Plain, {a, b, c}, 0, 2, mterm(gen_merge(a, b))), l3);
                Morphism r3 = slot_op(Flavor::Plain, {c, a, b}, 1, 2, mterm(gen_merge(a, b)));
                r3 = Morphism::compose(mterm(gen_crossing(c, a + b)), r3);
                push(out, S, "BraidThm-B3-right", pstr({a, b, c}), l3, r3);

                Morphism l3m = slot_op(Flavor::Plain, {a, b, c}, 1, 2, mterm(gen_crossing(b, c)));
                l3m = Morphism::compose(slot_op(Flavor::Plain, {a, c, b}, 0, 2, mterm(gen_crossing(a, c))),
                                        l3m);
                l3m = Morphism::compose(slot_op(Flavor::Plain, {c, a, b}, 1, 2, mterm(gen_merge(a, b))), l3m);
                Morphism r3m = slot_op(Flavor::Plain, {a, b, c}, 0, 2, mterm(gen_merge(a, b)));
                r3m = Morphism::compose(mterm(gen_crossing(a + b, c)), r3m);
                push(out, S, "BraidThm-B3-left", pstr({a, b, c}), l3m, r3m);

                // (B4): splits slide through crossings.
                Morphism l4 = slot_op(Flavor::Plain, {a + b, c}, 0, 1, mterm(gen_split(a, b)));
                l4 = Morphism::compose(slot_op(Flavor::Plain, {a, b, c}, 1, 2, mterm(gen_crossing(b, c))), l4);
                l4 = Morphism::compose(slot_op(Flavor::Plain, {a, c, b}, 0, 2, mterm(gen_crossing(a, c))), l4);
                Morphism r4 = mterm(gen_crossing(a + b, c));
                r4 = Morphism::compose(slot_op(Flavor::Plain, {c, a + b}, 1, 1, mterm(gen_split(a, b))), r4);
                push(out, S, "BraidThm-B4-right", pstr({a, b, c}), l4, r4);

                Morphism l4m = slot_op(Flavor::Plain, {c, a + b}, 1, 1, mterm(gen_split(a, b)));
                l4m = Morphism::compose(slot_op(Flavor::Plain, {c, a, b}, 0, 2, mterm(gen_crossing(c, a))),
                                        l4m);
                l4m = Morphism::compose(slot_op(Flavor::Plain, {a, c, b}, 1, 2, mterm(gen_crossing(c, b))),
                                        l4m);
                Morphism r4m = mterm(gen_crossing(c, a + b));
                r4m = Morphism::compose(slot_op(Flavor::Plain, {a + b, c}, 0, 1, mterm(gen_split(a, b))),
                                        r4m);
                push(out, S, "BraidThm-B4-left", pstr({a, b, c}), l4m, r4m);
            }
    // Rungs-to-crossing identity.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int c = 0; c <= a + b; ++c) {
                int d = a + b - c;
                Morphism lhs = Morphism::compose(mterm(gen_split(c, d)), mterm(gen_merge(a, b)));
                Morphism rhs(pw({a, b}), pw({c, d}));
                for (int t = 0; t <= std::min(a, d); ++t) {
                    if (c - a + t < 0) continue;
                    TermPtr bot = Term::tensor(gen_split(a - t, t), gen_split(c - a + t, d - t));
                    Morphism m(bot);
                    std::vector<int> midw{a - t, t, c - a + t, d - t};
                    m = Morphism::compose(
                        slot_op(Flavor::Plain, midw, 1, 2, mterm(gen_crossing(t, c - a + t))),
                        m);
                    Morphism tops(Term::tensor(gen_merge(a - t, c - a + t), gen_merge(t, d - t)));
                    m = Morphism::compose(tops, m);
                    rhs += m;
                }
                push(out, S, "RungsToCross", pstr({a, b, c}), lhs, rhs);
            }
}

// ----------------------------------------------------------------- pweb ----

void gen_pweb(std::vector<RelationInstance>& out, int K, int R) {
    const char* S = "pweb";
    // Straightening.
    push(out, S, "StraightRel-left", "",
         Morphism::compose(mterm(Term::tensor(gen_id(1), gen_cap())),
                           mterm(Term::tensor(gen_cup(), gen_id(1)))),
         mid(pw({1})));
    push(out, S, "StraightRel-right", "",
         Morphism::compose(mterm(Term::tensor(gen_cap(), gen_id(1))),
                           mterm(Term::tensor(gen_id(1), gen_cup()))),
         mid(pw({1})).scaled(Scalar(-1)));
    // Antenna retraction.
    push(out, S, "AntRel", "",
         Morphism::compose(mterm(gen_antenna()), mterm(gen_merge(1, 1))), mterm(gen_cap()));
    // tau on thin strands.
    {
        Morphism rhs = Morphism::compose(mterm(gen_split(1, 1)), mterm(gen_merge(1, 1)));
        rhs -= mid(pw({1, 1}));
        push(out, S, "tswaprel", "", mterm(gen_crossing(1, 1)), rhs);
    }
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            for (int r = 0; r <= R; ++r) {
                // Cap/rung swap, leftward rung.
                if (a - r - 1 >= 0 && b + r - 1 >= 0) {
                    Morphism lhs = Morphism::compose(mterm(thick_cap(a - r, b + r)),
                                                     mterm(rung_lr(a, b, r)));
                    Morphism rhs = Morphism::compose(mterm(rung_lr(a - 1, b - 1, r)),
                                                     mterm(thick_cap(a, b)));
                    Morphism dot = mterm(Term::tensor(green_dot(a), gen_id(b)));
                    rhs += Morphism::compose(mterm(rung_lr(a - 2, b, r - 1)), dot)
                               .scaled(Scalar(2));
                    push(out, S, "CapDiagSwitchRel1", pstr({a, b, r}), lhs, rhs);
                }
                // Cap/rung swap, rightward rung.
                if (a + r - 1 >= 0 && b - r - 1 >= 0) {
                    Morphism lhs = Morphism::compose(mterm(thick_cap(a + r, b - r)),
                                                     mterm(rung_rl(a, b, r)));
                    Morphism rhs = Morphism::compose(mterm(rung_rl(a - 1, b - 1, r)),
                                                     mterm(thick_cap(a, b)));
                    Morphism dot = mterm(Term::tensor(gen_id(a), green_dot(b)));
                    rhs += Morphism::compose(mterm(rung_rl(a, b - 2, r - 1)), dot)
                               .scaled(Scalar(2));
                    push(out, S, "CapDiagSwitchRel2", pstr({a, b, r}), lhs, rhs);
                }
                // Cup/rung swaps.
                if (a - r >= 0) {
                    Morphism lhs = Morphism::compose(mterm(rung_lr(a + 1, b + 1, r)),
                                                     mterm(thick_cup(a, b)));
                    Morphism rhs = Morphism::compose(mterm(thick_cup(a - r, b + r)),
                                                     mterm(rung_lr(a, b, r)));
                    push(out, S, "CupDiagSwitchRel1", pstr({a, b, r}), lhs, rhs);
                }
                if (b - r >= 0) {
                    Morphism lhs = Morphism::compose(mterm(rung_rl(a + 1, b + 1, r)),
                                                     mterm(thick_cup(a, b)));
                    Morphism rhs = Morphism::compose(mterm(thick_cup(a + r, b - r)),
                                                     mterm(rung_rl(a, b, r)));
                    push(out, S, "CupDiagSwitchRel2", pstr({a, b, r}), lhs, rhs);
                }
            }
            // BCswap.
            {
                Morphism lhs = Morphism::compose(mterm(thick_cap(a + 1, b + 1)),
                                                 mterm(thick_cup(a, b)));
                Morphism second(pw({a, b}), pw({a, b}));
                if (a >= 1 && b >= 1)
                    second = Morphism::compose(mterm(thick_cup(a - 1, b - 1)),
                                               mterm(thick_cap(a, b)));
                lhs += second;
                push(out, S, "BCswap", pstr({a, b}), lhs, mid(pw({a, b})).scaled(Scalar(a - b)));
            }
        }
    // Dot switch.
    for (int a = 2; a <= std::max(2, K); ++a) {
        Morphism lhs = Morphism::compose(mterm(Term::tensor(gen_antenna(), gen_id(a - 2))),
                                         mterm(gen_split(2, a - 2)));
        Morphism rhs = Morphism::compose(mterm(Term::tensor(gen_id(a - 2), gen_antenna())),
                                         mterm(gen_split(a - 2, 2)));
        push(out, S, "DotSwitch", pstr({a}), lhs, rhs);
    }
    // Lemma: dot after a thin merge.
    for (int a = 2; a <= std::max(2, K); ++a) {
        Morphism lhs =
            Morphism::compose(mterm(green_dot(a + 1)), mterm(gen_merge(a, 1)));
        Morphism rhs = mterm(thick_cap(a, 1));
        rhs += Morphism::compose(mterm(gen_merge(a - 2, 1)),
                                 mterm(Term::tensor(green_dot(a), gen_id(1))));
        push(out, S, "Lem21Dot-right", pstr({a}), lhs, rhs);

        Morphism lhs2 =
            Morphism::compose(mterm(green_dot(a + 1)), mterm(gen_merge(1, a)));
        Morphism rhs2 = mterm(thick_cap(1, a));
        rhs2 += Morphism::compose(mterm(gen_merge(1, a - 2)),
                                  mterm(Term::tensor(gen_id(1), green_dot(a))));
        push(out, S, "Lem21Dot-left", pstr({a}), lhs2, rhs2);
    }
    // Caps and cups pass through crossings (B5).
    for (int a = 0; a <= K; ++a) {
        Morphism l1 = slot_op(Flavor::Plain, {1, a, 1}, 0, 2, mterm(gen_crossing(1, a)));
        l1 = Morphism::compose(slot_op(Flavor::Plain, {a, 1, 1}, 1, 2, mterm(gen_cap())), l1);
        Morphism r1 = slot_op(Flavor::Plain, {1, a, 1}, 1, 2, mterm(gen_crossing(a, 1)));
        r1 = Morphism::compose(slot_op(Flavor::Plain, {1, 1, a}, 0, 2, mterm(gen_cap())), r1);
        push(out, S, "BraidThmP-B5-cap", pstr({a}), l1, r1);

        Morphism l2 = slot_op(Flavor::Plain, {a}, 1, 0, mterm(gen_cup()));
        l2 = Morphism::compose(slot_op(Flavor::Plain, {a, 1, 1}, 0, 2, mterm(gen_crossing(a, 1))), l2);
        Morphism r2 = slot_op(Flavor::Plain, {a}, 0, 0, mterm(gen_cup()));
        r2 = Morphism::compose(slot_op(Flavor::Plain, {1, 1, a}, 1, 2, mterm(gen_crossing(1, a))), r2);
        push(out, S, "BraidThmP-B5-cup", pstr({a}), l2, r2);

        // Green dots pass through crossings.
        Morphism dl = Morphism::compose(slot_op(Flavor::Plain, {a, 2}, 1, 1, mterm(gen_antenna())),
                                        mterm(gen_crossing(2, a)));
        push(out, S, "DotThruCross-left", pstr({a}),
             dl, mterm(Term::tensor(gen_antenna(), gen_id(a))));
        Morphism dr = Morphism::compose(slot_op(Flavor::Plain, {2, a}, 0, 1, mterm(gen_antenna())),
                                        mterm(gen_crossing(a, 2)));
        push(out, S, "DotThruCross-right", pstr({a}),
             dr, mterm(Term::tensor(gen_id(a), gen_antenna())));
    }
    // Marked bubbles.
    push(out, S, "TwistMarkBubble-cup", "",
         Morphism::compose(mterm(gen_crossing(1, 1)), mterm(gen_cup())),
         mterm(gen_cup()).scaled(Scalar(-1)));
    push(out, S, "TwistMarkBubble-cap", "",
         Morphism::compose(mterm(gen_cap()), mterm(gen_crossing(1, 1))), mterm(gen_cap()));
    push(out, S, "TwistMarkBubble-bubble", "",
         Morphism::compose(mterm(gen_cap()), mterm(gen_cup())), Morphism(pw({}), pw({})));
    // BCE.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int c = 0; c <= K; ++c) {
                std::vector<int> w0{a, b, c};
                if (c >= 1) {
                    Morphism t1 = slot_op(Flavor::Plain, w0, 0, 2, mterm(thick_cup(a, b)));
                    t1 = Morphism::compose(
                        slot_op(Flavor::Plain, {a + 1, b + 1, c}, 1, 2, mterm(thick_cap(b + 1, c))), t1);
                    Morphism t2(pw(w0), pw({a + 1, b, c - 1}));
                    if (b >= 1 && c >= 1) {
                        t2 = slot_op(Flavor::Plain, w0, 1, 2, mterm(thick_cap(b, c)));
                        t2 = Morphism::compose(
                            slot_op(Flavor::Plain, {a, b - 1, c - 1}, 0, 2, mterm(thick_cup(a, b - 1))), t2);
                    }
                    Morphism r1 = slot_op(Flavor::Plain, w0, 1, 2, mterm(rung_rl(b, c, 1)));
                    r1 = Morphism::compose(
                        slot_op(Flavor::Plain, {a, b + 1, c - 1}, 0, 2, mterm(rung_rl(a, b + 1, 1))), r1);
                    Morphism r2(pw(w0), pw({a + 1, b, c - 1}));
                    if (b >= 1) {
                        r2 = slot_op(Flavor::Plain, w0, 0, 2, mterm(rung_rl(a, b, 1)));
                        r2 = Morphism::compose(
                            slot_op(Flavor::Plain, {a + 1, b - 1, c}, 1, 2, mterm(rung_rl(b - 1, c, 1))),
                            r2);
                    }
                    push(out, S, "BCE-right", pstr({a, b, c}), t1 + t2, r1 - r2);
                }
                if (a >= 1) {
                    Morphism t1 = slot_op(Flavor::Plain, w0, 1, 2, mterm(thick_cup(b, c)));
                    t1 = Morphism::compose(
                        slot_op(Flavor::Plain, {a, b + 1, c + 1}, 0, 2, mterm(thick_cap(a, b + 1))), t1);
                    Morphism t2(pw(w0), pw({a - 1, b, c + 1}));
                    if (a >= 1 && b >= 1) {
                        t2 = slot_op(Flavor::Plain, w0, 0, 2, mterm(thick_cap(a, b)));
                        t2 = Morphism::compose(
                            slot_op(Flavor::Plain, {a - 1, b - 1, c}, 1, 2, mterm(thick_cup(b - 1, c))), t2);
                    }
                    Morphism r1(pw(w0), pw({a - 1, b, c + 1}));
                    if (b >= 1) {
                        r1 = slot_op(Flavor::Plain, w0, 1, 2, mterm(rung_lr(b, c, 1)));
                        r1 = Morphism::compose(
                            slot_op(Flavor::Plain, {a, b - 1, c + 1}, 0, 2, mterm(rung_lr(a, b - 1, 1))),
                            r1);
                    }
                    Morphism r2 = slot_op(Flavor::Plain, w0, 0, 2, mterm(rung_lr(a, b, 1)));
                    r2 = Morphism::compose(
                        slot_op(Flavor::Plain, {a - 1, b + 1, c}, 1, 2, mterm(rung_lr(b + 1, c, 1))), r2);
                    push(out, S, "BCE-left", pstr({a, b, c}), t1 + t2, r1 - r2);
                }
            }
    // Zero morphisms.
    {
        Morphism z1 = mterm(Term::tensor(gen_split(1, 1), gen_split(1, 1)));
        z1 = Morphism::compose(slot_op(Flavor::Plain, {1, 1, 1, 1}, 1, 2, mterm(gen_cap())), z1);
        z1 = Morphism::compose(mterm(gen_cap()), z1);
        push(out, S, "ZeroLem-caps", "", z1, Morphism(pw({2, 2}), pw({})));

        Morphism z2 = mterm(gen_cup());
        z2 = Morphism::compose(slot_op(Flavor::Plain, {1, 1}, 1, 0, mterm(gen_cup())), z2);
        z2 = Morphism::compose(mterm(Term::tensor(gen_merge(1, 1), gen_merge(1, 1))), z2);
        push(out, S, "ZeroLem-cups", "", z2, Morphism(pw({}), pw({2, 2})));

        Morphism z3 = Morphism::compose(
            mterm(Term::tensor(gen_antenna(), gen_antenna())), mterm(gen_split(2, 2)));
        push(out, S, "ZeroLem-dots", "", z3, Morphism(pw({4}), pw({})));
    }
}

// ---------------------------------------------------------------- pwebm ----

struct PwGen {
    std::string label;
    int parity;
    std::function<Morphism(const std::vector<int>&)> on;
    std::function<std::vector<int>(std::vector<int>)> shift;
};

PwGen pw_e(int i) {
    return {"e" + std::to_string(i), 0,
            [i](const std::vector<int>& w) { return pwebm_e(1, i, i + 1, w); },
            [i](std::vector<int> w) {
                w[i - 1] += 1;
                w[i] -= 1;
                return w;
            }};
}

PwGen pw_f(int i) {
    return {"f" + std::to_string(i), 0,
            [i](const std::vector<int>& w) { return pwebm_f(1, i, i + 1, w); },
            [i](std::vector<int> w) {
                w[i - 1] -= 1;
                w[i] += 1;
                return w;
            }};
}

PwGen pw_b(int i) {
    return {"b" + std::to_string(i), 1,
            [i](const std::vector<int>& w) { return pwebm_b(i, i + 1, w); },
            [i](std::vector<int> w) {
                w[i - 1] -= 1;
                w[i] -= 1;
                return w;
            }};
}

PwGen pw_c(int i) {
    return {"c" + std::to_string(i), 1,
            [i](const std::vector<int>& w) { return pwebm_c(i, i + 1, w); },
            [i](std::vector<int> w) {
                w[i - 1] += 1;
                w[i] += 1;
                return w;
            }};
}

bool word_ok(const std::vector<int>& w) {
    return std::all_of(w.begin(), w.end(), [](int v) { return v >= 0; });
}

/// chain.front() is applied first.
Morphism apply_chain(const std::vector<PwGen>& chain, const std::vector<int>& word) {
    std::vector<int> cur = word;
    Morphism acc = mid(pw(word));
    for (const auto& g : chain) {
        if (!word_ok(cur)) return Morphism(pw(word), pw(word));
        Morphism step = g.on(cur);
        cur = g.shift(cur);
        if (step.is_zero()) {
            if (word_ok(cur)) return Morphism(pw(word), pw(cur));
            return Morphism(pw(word), pw(word));
        }
        acc = Morphism::compose(step, acc);
    }
    return acc;
}

Morphism super_bracket(const PwGen& x, const PwGen& y, const std::vector<int>& word) {
    Morphism xy = apply_chain({y, x}, word);
    Morphism yx = apply_chain({x, y}, word);
    int sign = (x.parity && y.parity) ? 1 : -1;  // minus (-1)^{|x||y|}
    return xy + yx.scaled(Scalar(sign));
}

/// [x, y] as a PwGen-like pair for nesting (materializes both orders).
PwGen bracket_gen(const PwGen& x, const PwGen& y) {
    PwGen out;
    out.label = "[" + x.label + "," + y.label + "]";
    out.parity = (x.parity + y.parity) & 1;
    out.on = [x, y](const std::vector<int>& w) { return super_bracket(x, y, w); };
    out.shift = [x, y](std::vector<int> w) { return x.shift(y.shift(std::move(w))); };
    return out;
}

void gen_pwebm(std::vector<RelationInstance>& out, int K, int /*R*/) {
    const char* S = "pwebm";
    for (int m = 2; m <= 3; ++m) {
        std::vector<std::vector<int>> words;
        std::vector<int> w(m, 0);
        std::function<void(int)> rec = [&](int p) {
            if (p == m) {
                words.push_back(w);
                return;
            }
            for (int v = 0; v <= K; ++v) {
                w[p] = v;
                rec(p + 1);
            }
        };
        rec(0);
        for (const auto& a : words) {
            std::string base = wstr(a);
            auto wid = [&]() { return mid(pw(a)); };
            for (int i = 1; i < m; ++i) {
                for (int j = 1; j < m; ++j) {
                    // ef0.
                    Morphism lhs = super_bracket(pw_e(i), pw_f(j), a);
                    Morphism rhs =
                        (i == j) ? wid().scaled(Scalar(a[i - 1] - a[i]))
                                 : Morphism(pw(a), pw(a));
                    push(out, S, "ef0", base + " i=" + std::to_string(i) +
                                             " j=" + std::to_string(j),
                         lhs, rhs);
                    if (j != i + 1 && j != i - 1 && i != j) {
                        push(out, S, "ser1", base + pstr({i, j}),
                             super_bracket(pw_e(i), pw_e(j), a), Morphism(pw(a), pw(a)));
                        push(out, S, "ser3", base + pstr({i, j}),
                             super_bracket(pw_f(i), pw_f(j), a), Morphism(pw(a), pw(a)));
                    }
                    if (j == i + 1 || j == i - 1) {
                        push(out, S, "ser2", base + pstr({i, j}),
                             super_bracket(pw_e(i), bracket_gen(pw_e(i), pw_e(j)), a),
                             Morphism(pw(a), pw(a)));
                        push(out, S, "ser4", base + pstr({i, j}),
                             super_bracket(pw_f(i), bracket_gen(pw_f(i), pw_f(j)), a),
                             Morphism(pw(a), pw(a)));
                    }
                    // bbrel / ccrel.
                    push(out, S, "bbrel", base + pstr({i, j}),
                         super_bracket(pw_b(i), pw_b(j), a), Morphism(pw(a), pw(a)));
                    push(out, S, "ccrel", base + pstr({i, j}),
                         super_bracket(pw_c(i), pw_c(j), a), Morphism(pw(a), pw(a)));
                    // bcswaprel.
                    {
                        Morphism l = super_bracket(pw_b(i), pw_c(j), a);
                        Morphism r(pw(a), pw(a));
                        if (j == i) {
                            r = wid().scaled(Scalar(a[i - 1] - a[i]));
                        } else if (j == i - 1 && i - 1 >= 1) {
                            r = super_bracket(pw_e(i - 1), pw_e(i), a);
                        } else if (j == i + 1 && i + 2 <= m) {
                            r = super_bracket(pw_f(i), pw_f(i + 1), a);
                        }
                        push(out, S, "bcswaprel", base + pstr({i, j}), l, r);
                    }
                    // beswapeasy / bfswapeasy / ce1 / cf1.
                    if (j != i && j != i + 1)
                        push(out, S, "beswapeasy", base + pstr({i, j}),
                             super_bracket(pw_b(i), pw_e(j), a), Morphism(pw(a), pw(a)));
                    if (j != i && j != i - 1)
                        push(out, S, "bfswapeasy", base + pstr({i, j}),
                             super_bracket(pw_b(i), pw_f(j), a), Morphism(pw(a), pw(a)));
                    if (j != i - 1)
                        push(out, S, "ce1", base + pstr({i, j}),
                             super_bracket(pw_e(j), pw_c(i), a), Morphism(pw(a), pw(a)));
                    if (j != i + 1)
                        push(out, S, "cf1", base + pstr({i, j}),
                             super_bracket(pw_f(j), pw_c(i), a), Morphism(pw(a), pw(a)));
                    // bee1rel.
                    {
                        Morphism l =
                            super_bracket(bracket_gen(pw_b(i), pw_e(i)), pw_e(j), a);
                        Morphism r(pw(a), pw(a));
                        if (j == i + 1 && i + 2 <= m)
                            r = pwebm_b(i + 1, i + 2, a).scaled(Scalar(2));
                        if (j != i + 1 || i + 2 <= m)
                            push(out, S, "bee1rel", base + pstr({i, j}), l, r);
                    }
                    // cee2rel, with the reversed-leg cup.
                    {
                        PwGen crev{"crev" + std::to_string(i), 1,
                                   [i](const std::vector<int>& ww) {
                                       return pwebm_c(i + 1, i, ww);
                                   },
                                   [i](std::vector<int> ww) {
                                       ww[i - 1] += 1;
                                       ww[i] += 1;
                                       return ww;
                                   }};
                        Morphism l = super_bracket(bracket_gen(crev, pw_e(i)), pw_e(j), a);
                        if (j == i + 1 && i + 2 <= m) {
                            push(out, S, "cee2rel", base + pstr({i, j}), l,
                                 pwebm_c(i, i + 1, a));
                        } else if (j != i + 1 && j != i - 1) {
                            push(out, S, "cee2rel", base + pstr({i, j}), l,
                                 Morphism(pw(a), pw(a)));
                        }
                    }
                }
                // be1rel.
                {
                    Morphism l = super_bracket(pw_b(i), pw_e(i), a);
                    push(out, S, "be1rel-e", base + pstr({i}), l,
                         pwebm_b_single(i + 1, a).scaled(Scalar(2)));
                    if (i + 2 <= m) {
                        Morphism l2 = super_bracket(pw_b(i + 1), pw_f(i + 1), a);
                        push(out, S, "be1rel-f", base + pstr({i}), l2,
                             pwebm_b_single(i + 1, a).scaled(Scalar(2)));
                    }
                }
                // be2rel / ec1rel.
                if (i + 2 <= m) {
                    push(out, S, "be2rel-e", base + pstr({i}),
                         super_bracket(pw_b(i), pw_e(i + 1), a), pwebm_b(i, i + 2, a));
                    push(out, S, "be2rel-f", base + pstr({i}),
                         super_bracket(pw_b(i + 1), pw_f(i), a), pwebm_b(i, i + 2, a));
                    push(out, S, "ec1rel-e", base + pstr({i}),
                         super_bracket(pw_e(i), pw_c(i + 1), a), pwebm_c(i, i + 2, a));
                    push(out, S, "ec1rel-f", base + pstr({i}),
                         super_bracket(pw_f(i + 1), pw_c(i), a), pwebm_c(i, i + 2, a));
                }
            }
            // bef1rel / bff1rel on the first two strands.
            {
                Morphism l =
                    super_bracket(bracket_gen(pw_b(1), pw_e(1)), pw_f(1), a);
                push(out, S, "bef1rel", base, l, pwebm_b(1, 2, a).scaled(Scalar(2)));
                for (int j = 1; j < m; ++j)
                    push(out, S, "bff1rel", base + pstr({j}),
                         super_bracket(bracket_gen(pw_b(1), pw_f(1)), pw_f(j), a),
                         Morphism(pw(a), pw(a)));
            }
        }
    }
}

// -------------------------------------------------------------- oriented ----

void gen_oriented(std::vector<RelationInstance>& out, int K, int R) {
    const char* S = "oriented";
    auto oid = [](int x) { return Morphism(gen_oriented_id(x)); };
    auto sigma = [](int x, int y) { return mterm(oriented_crossing(x, y)); };

    // Leftward straightening.
    for (int a = 0; a <= K; ++a) {
        Morphism l1 = Morphism::compose(
            slot_op(Flavor::Oriented, {a, -a, a}, 1, 2, mterm(gen_lcap(a))),
            slot_op(Flavor::Oriented, {a}, 0, 0, mterm(gen_lcup(a))));
        push(out, S, "OrStraightRel-up", pstr({a}), l1, oid(a));
        Morphism l2 = Morphism::compose(
            slot_op(Flavor::Oriented, {-a, a, -a}, 0, 2, mterm(gen_lcap(a))),
            slot_op(Flavor::Oriented, {-a}, 1, 0, mterm(gen_lcup(a))));
        push(out, S, "OrStraightRel-down", pstr({a}), l2, oid(-a));
    }
    // Left/right crossing inversion.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            push(out, S, "LRCrossRel-1", pstr({a, b}),
                 Morphism::compose(mterm(gen_rcross(b, a)), mterm(gen_lcross(a, b))),
                 mid(ow({-a, b})));
            push(out, S, "LRCrossRel-2", pstr({a, b}),
                 Morphism::compose(mterm(gen_lcross(b, a)), mterm(gen_rcross(a, b))),
                 mid(ow({a, -b})));
        }
    // Bubble annihilation.
    for (int a = 1; a <= K; ++a)
        push(out, S, "BubbleRel", pstr({a}),
             Morphism::compose(mterm(gen_rcap(a)), mterm(gen_lcup(a))),
             Morphism(ow({}), ow({})));
    // Up-arrow defining relations.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            for (int c = 0; c <= K; ++c) {
                Morphism ls = Morphism::compose(
                    mterm(Term::tensor(gen_oriented_id(a), gen_upsplit(b, c))),
                    mterm(gen_upsplit(a, b + c)));
                Morphism rs = Morphism::compose(
                    mterm(Term::tensor(gen_upsplit(a, b), gen_oriented_id(c))),
                    mterm(gen_upsplit(a + b, c)));
                push(out, S, "AssocRel-up", pstr({a, b, c}), ls, rs);
            }
            for (int r = 0; r <= R && r <= b; ++r) {
                // Up-oriented cup/rung swap (rightward rung), with marked cups.
                auto uthick_cup = [](int x, int y) {
                    TermPtr bot = Term::tensor(
                        Term::tensor(gen_oriented_id(x), gen_ucup()), gen_oriented_id(y));
                    TermPtr top = Term::tensor(gen_upmerge(x, 1), gen_upmerge(1, y));
                    return Term::compose(top, bot);
                };
                auto urung_rl = [](int x, int y, int rr) {
                    TermPtr bot = Term::tensor(gen_oriented_id(x), gen_upsplit(rr, y - rr));
                    TermPtr top = Term::tensor(gen_upmerge(x, rr), gen_oriented_id(y - rr));
                    return Term::compose(top, bot);
                };
                Morphism lhs = Morphism::compose(mterm(urung_rl(a + 1, b + 1, r)),
                                                 mterm(uthick_cup(a, b)));
                Morphism rhs = Morphism::compose(mterm(uthick_cup(a + r, b - r)),
                                                 mterm(urung_rl(a, b, r)));
                push(out, S, "CupDiagSwitchRel2-up", pstr({a, b, r}), lhs, rhs);
            }
        }
    // O1: double crossings and braid moves, all orientations.
    std::vector<int> signs = {1, -1};
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b)
            for (int sa : signs)
                for (int sb : signs) {
                    int x = sa * a, y = sb * b;
                    push(out, S, "O1-double", pstr({x, y}),
                         Morphism::compose(sigma(y, x), sigma(x, y)), mid(ow({x, y})));
                }
    for (int a = 1; a <= std::min(K, 2); ++a)
        for (int b = 1; b <= std::min(K, 2); ++b)
            for (int c = 1; c <= std::min(K, 2); ++c)
                for (int sa : signs)
                    for (int sb : signs)
                        for (int sc : signs) {
                            int x = sa * a, y = sb * b, z = sc * c;
                            std::vector<int> w0{x, y, z};
                            Morphism l = slot_op(Flavor::Oriented, w0, 1, 2, sigma(y, z));
                            l = Morphism::compose(slot_op(Flavor::Oriented, {x, z, y}, 0, 2, sigma(x, z)), l);
                            l = Morphism::compose(slot_op(Flavor::Oriented, {z, x, y}, 1, 2, sigma(x, y)), l);
                            Morphism r = slot_op(Flavor::Oriented, w0, 0, 2, sigma(x, y));
                            r = Morphism::compose(slot_op(Flavor::Oriented, {y, x, z}, 1, 2, sigma(x, z)), r);
                            r = Morphism::compose(slot_op(Flavor::Oriented, {y, z, x}, 0, 2, sigma(y, z)), r);
                            push(out, S, "O1-braid", pstr({x, y, z}), l, r);
                        }
    // O2: crossings absorbed by merges/splits (up and down).
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            push(out, S, "O2-up-merge", pstr({a, b}),
                 Morphism::compose(mterm(gen_upmerge(b, a)), mterm(gen_ucross(a, b))),
                 mterm(gen_upmerge(a, b)));
            push(out, S, "O2-up-split", pstr({a, b}),
                 Morphism::compose(mterm(gen_ucross(b, a)), mterm(gen_upsplit(b, a))),
                 mterm(gen_upsplit(a, b)));
            push(out, S, "O2-down-split", pstr({a, b}),
                 Morphism::compose(mterm(gen_dsplit(b, a)), mterm(gen_dcross(a, b))),
                 mterm(gen_dsplit(a, b)));
            push(out, S, "O2-down-merge", pstr({a, b}),
                 Morphism::compose(mterm(gen_dcross(b, a)), mterm(gen_dmerge(b, a))),
                 mterm(gen_dmerge(a, b)));
        }
    // O3/O4: crossing naturality for merges and splits, X of either orientation.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            for (int c = 1; c <= K; ++c)
                for (int sc : signs) {
                    int X = sc * c;
                    {
                        std::vector<int> w0{X, a, b};
                        Morphism l = slot_op(Flavor::Oriented, w0, 0, 2, sigma(X, a));
                        l = Morphism::compose(slot_op(Flavor::Oriented, {a, X, b}, 1, 2, sigma(X, b)), l);
                        l = Morphism::compose(
                            slot_op(Flavor::Oriented, {a, b, X}, 0, 2, mterm(gen_upmerge(a, b))), l);
                        Morphism r = slot_op(Flavor::Oriented, w0, 1, 2, mterm(gen_upmerge(a, b)));
                        r = Morphism::compose(sigma(X, a + b), r);
                        push(out, S, "O3-right", pstr({a, b, X}), l, r);
                    }
                    {
                        std::vector<int> w0{a, b, X};
                        Morphism l = slot_op(Flavor::Oriented, w0, 1, 2, sigma(b, X));
                        l = Morphism::compose(slot_op(Flavor::Oriented, {a, X, b}, 0, 2, sigma(a, X)), l);
                        l = Morphism::compose(
                            slot_op(Flavor::Oriented, {X, a, b}, 1, 2, mterm(gen_upmerge(a, b))), l);
                        Morphism r = slot_op(Flavor::Oriented, w0, 0, 2, mterm(gen_upmerge(a, b)));
                        r = Morphism::compose(sigma(a + b, X), r);
                        push(out, S, "O3-left", pstr({a, b, X}), l, r);
                    }
                    {
                        std::vector<int> w0{a + b, X};
                        Morphism l = slot_op(Flavor::Oriented, w0, 0, 1, mterm(gen_upsplit(a, b)));
                        l = Morphism::compose(slot_op(Flavor::Oriented, {a, b, X}, 1, 2, sigma(b, X)), l);
                        l = Morphism::compose(slot_op(Flavor::Oriented, {a, X, b}, 0, 2, sigma(a, X)), l);
                        Morphism r = sigma(a + b, X);
                        r = Morphism::compose(
                            slot_op(Flavor::Oriented, {X, a + b}, 1, 1, mterm(gen_upsplit(a, b))), r);
                        push(out, S, "O4-right", pstr({a, b, X}), l, r);
                    }
                    {
                        std::vector<int> w0{X, a + b};
                        Morphism l = slot_op(Flavor::Oriented, w0, 1, 1, mterm(gen_upsplit(a, b)));
                        l = Morphism::compose(slot_op(Flavor::Oriented, {X, a, b}, 0, 2, sigma(X, a)), l);
                        l = Morphism::compose(slot_op(Flavor::Oriented, {a, X, b}, 1, 2, sigma(X, b)), l);
                        Morphism r = sigma(X, a + b);
                        r = Morphism::compose(
                            slot_op(Flavor::Oriented, {a + b, X}, 0, 1, mterm(gen_upsplit(a, b))), r);
                        push(out, S, "O4-left", pstr({a, b, X}), l, r);
                    }
                }
    // O5: unmarked caps and cups slide through crossings.
    for (int b = 1; b <= K; ++b)
        for (int c = 1; c <= K; ++c)
            for (int sc : signs) {
                int X = sc * c;
                struct CapKind {
                    const char* tag;
                    int l1, l2;  // leg orientations for label b
                    TermPtr cap, cup;
                };
                std::vector<CapKind> kinds = {
                    {"l", -b, b, gen_lcap(b), gen_lcup(b)},
                    {"r", b, -b, gen_rcap(b), gen_rcup(b)},
                };
                for (auto& kd : kinds) {
                    // Cap slide: dom (l1, X, l2) -> (X).
                    std::vector<int> w0{kd.l1, X, kd.l2};
                    Morphism l = slot_op(Flavor::Oriented, w0, 0, 2, sigma(kd.l1, X));
                    l = Morphism::compose(
                        slot_op(Flavor::Oriented, {X, kd.l1, kd.l2}, 1, 2, mterm(kd.cap)), l);
                    Morphism r = slot_op(Flavor::Oriented, w0, 1, 2, sigma(X, kd.l2));
                    r = Morphism::compose(
                        slot_op(Flavor::Oriented, {kd.l1, kd.l2, X}, 0, 2, mterm(kd.cap)), r);
                    push(out, S, std::string("O5-cap-") + kd.tag, pstr({b, X}), l, r);
                    // Cup slide: dom (X) -> (cup-left, X, cup-right).
                    int c1 = (kd.tag[0] == 'l') ? b : -b;
                    int c2 = (kd.tag[0] == 'l') ? -b : b;
                    Morphism lc = slot_op(Flavor::Oriented, {X}, 1, 0, mterm(kd.cup));
                    lc = Morphism::compose(slot_op(Flavor::Oriented, {X, c1, c2}, 0, 2, sigma(X, c1)), lc);
                    Morphism rc = slot_op(Flavor::Oriented, {X}, 0, 0, mterm(kd.cup));
                    rc = Morphism::compose(slot_op(Flavor::Oriented, {c1, c2, X}, 1, 2, sigma(X, c2)), rc);
                    push(out, S, std::string("O5-cup-") + kd.tag, pstr({b, X}), lc, rc);
                }
            }
    // O6: right cap/cup through the crossing definition; closed bubbles.
    for (int a = 0; a <= K; ++a) {
        push(out, S, "O6-rcap", pstr({a}), mterm(gen_rcap(a)), mterm(rcap_composite(a)));
        push(out, S, "O6-rcup", pstr({a}), mterm(gen_rcup(a)), mterm(rcup_composite(a)));
    }
    // O8/O9: pitchfork relations for oriented caps and cups.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b) {
            {
                std::vector<int> w0{-(a + b), a, b};
                Morphism l = slot_op(Flavor::Oriented, w0, 1, 2, mterm(gen_upmerge(a, b)));
                l = Morphism::compose(mterm(gen_lcap(a + b)), l);
                Morphism r = slot_op(Flavor::Oriented, w0, 0, 1, mterm(gen_dmerge(b, a)));
                r = Morphism::compose(slot_op(Flavor::Oriented, {-b, -a, a, b}, 1, 2, mterm(gen_lcap(a))), r);
                r = Morphism::compose(mterm(gen_lcap(b)), r);
                push(out, S, "O8-left", pstr({a, b}), l, r);
            }
            {
                std::vector<int> w0{a, b, -(a + b)};
                Morphism l = slot_op(Flavor::Oriented, w0, 0, 2, mterm(gen_upmerge(a, b)));
                l = Morphism::compose(mterm(gen_rcap(a + b)), l);
                Morphism r = slot_op(Flavor::Oriented, w0, 2, 1, mterm(gen_dmerge(b, a)));
                r = Morphism::compose(slot_op(Flavor::Oriented, {a, b, -b, -a}, 1, 2, mterm(gen_rcap(b))), r);
                r = Morphism::compose(mterm(gen_rcap(a)), r);
                push(out, S, "O8-right", pstr({a, b}), l, r);
            }
            {
                Morphism l = mterm(gen_lcup(a + b));
                l = Morphism::compose(
                    slot_op(Flavor::Oriented, {a + b, -(a + b)}, 1, 1, mterm(gen_dmerge(a, b))), l);
                l = Morphism::compose(
                    slot_op(Flavor::Oriented, {a + b, -a, -b}, 0, 1, mterm(gen_upsplit(a, b))), l);
                Morphism rr = Morphism::compose(
                    slot_op(Flavor::Oriented, {b, a, -a, -b}, 0, 2, mterm(gen_upmerge(b, a))),
                    Morphism::compose(slot_op(Flavor::Oriented, {b, -b}, 1, 0, mterm(gen_lcup(a))),
                                      mterm(gen_lcup(b))));
                push(out, S, "O9-left", pstr({a, b}), l, rr);
            }
            {
                Morphism l = mterm(gen_rcup(a + b));
                l = Morphism::compose(
                    slot_op(Flavor::Oriented, {-(a + b), a + b}, 0, 1, mterm(gen_dmerge(a, b))), l);
                l = Morphism::compose(
                    slot_op(Flavor::Oriented, {-a, -b, a + b}, 2, 1, mterm(gen_upsplit(a, b))), l);
                Morphism r = mterm(gen_rcup(a));
                r = Morphism::compose(slot_op(Flavor::Oriented, {-a, a}, 1, 0, mterm(gen_rcup(b))), r);
                r = Morphism::compose(
                    slot_op(Flavor::Oriented, {-a, -b, b, a}, 2, 2, mterm(gen_upmerge(b, a))), r);
                push(out, S, "O9-right", pstr({a, b}), l, r);
            }
        }
    // O10-O14 and the tag-to-cup/cap identity.
    {
        Morphism l = Morphism::compose(mterm(gen_lcap(1)),
                                       mterm(Term::tensor(gen_tagin(), gen_oriented_id(1))));
        Morphism r = Morphism::compose(mterm(gen_rcap(1)),
                                       mterm(Term::tensor(gen_oriented_id(1), gen_tagin())));
        push(out, S, "O10-cap", "", l, r);
        Morphism lc = Morphism::compose(mterm(Term::tensor(gen_tagin(), gen_oriented_id(-1))),
                                        mterm(gen_lcup(1)));
        Morphism rc = Morphism::compose(mterm(Term::tensor(gen_oriented_id(-1), gen_tagin())),
                                        mterm(gen_rcup(1)));
        push(out, S, "O10-cup", "", lc, rc);

        Morphism l1 = Morphism::compose(mterm(gen_rcap(1)),
                                        mterm(Term::tensor(gen_tagout(), gen_oriented_id(-1))));
        Morphism r1 = Morphism::compose(mterm(gen_lcap(1)),
                                        mterm(Term::tensor(gen_oriented_id(-1), gen_tagout())));
        push(out, S, "O11-cap", "", l1, r1.scaled(Scalar(-1)));
        Morphism l2 = Morphism::compose(mterm(Term::tensor(gen_tagout(), gen_oriented_id(1))),
                                        mterm(gen_rcup(1)));
        Morphism r2 = Morphism::compose(mterm(Term::tensor(gen_oriented_id(1), gen_tagout())),
                                        mterm(gen_lcup(1)));
        push(out, S, "O11-cup", "", l2, r2.scaled(Scalar(-1)));
    }
    for (int c = 1; c <= K; ++c)
        for (int sc : signs) {
            int X = sc * c;
            Morphism l = Morphism::compose(
                sigma(-1, X), slot_op(Flavor::Oriented, {1, X}, 0, 1, mterm(gen_tagin())));
            Morphism r = Morphism::compose(
                slot_op(Flavor::Oriented, {X, 1}, 1, 1, mterm(gen_tagin())), sigma(1, X));
            push(out, S, "O12-left", pstr({X}), l, r);
            Morphism lm = Morphism::compose(
                sigma(X, -1), slot_op(Flavor::Oriented, {X, 1}, 1, 1, mterm(gen_tagin())));
            Morphism rm = Morphism::compose(
                slot_op(Flavor::Oriented, {1, X}, 0, 1, mterm(gen_tagin())), sigma(X, 1));
            push(out, S, "O12-right", pstr({X}), lm, rm);

            Morphism l3 = Morphism::compose(
                sigma(1, X), slot_op(Flavor::Oriented, {-1, X}, 0, 1, mterm(gen_tagout())));
            Morphism r3 = Morphism::compose(
                slot_op(Flavor::Oriented, {X, -1}, 1, 1, mterm(gen_tagout())), sigma(-1, X));
            push(out, S, "O13-left", pstr({X}), l3, r3);
            Morphism l4 = Morphism::compose(
                sigma(X, 1), slot_op(Flavor::Oriented, {X, -1}, 1, 1, mterm(gen_tagout())));
            Morphism r4 = Morphism::compose(
                slot_op(Flavor::Oriented, {-1, X}, 0, 1, mterm(gen_tagout())), sigma(X, -1));
            push(out, S, "O13-right", pstr({X}), l4, r4);
        }
    push(out, "oriented", "O14-updown", "",
         Morphism::compose(mterm(gen_tagout()), mterm(gen_tagin())),
         Morphism(gen_oriented_id(1)));
    push(out, "oriented", "O14-downup", "",
         Morphism::compose(mterm(gen_tagin()), mterm(gen_tagout())),
         Morphism(gen_oriented_id(-1)));
    push(out, "oriented", "TagToCupCap-in", "", Morphism(gen_tagin()), tagin_composite());
    push(out, "oriented", "TagToCupCap-out", "", Morphism(gen_tagout()), tagout_composite());
}

// --------------------------------------------------------------- brauer ----

void gen_brauer(std::vector<RelationInstance>& out) {
    const char* S = "brauer";
    auto bid = [](int k) {
        return mid(ObjectWord(Flavor::Brauer, std::vector<int>(k, 1)));
    };
    TermPtr tw = Term::make({GenKind::BrauerTwist});
    TermPtr cap = Term::make({GenKind::BrauerCap});
    TermPtr cup = Term::make({GenKind::BrauerCup});
    ObjectWord b1(Flavor::Brauer, {1});
    ObjectWord b2(Flavor::Brauer, {1, 1});
    ObjectWord b3(Flavor::Brauer, {1, 1, 1});
    Morphism one(Term::identity(b1));
    push(out, S, "MBstraight-left", "",
         Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(cap)),
                           slot_op(Flavor::Brauer, {1}, 0, 0, Morphism(cup))),
         one);
    push(out, S, "MBstraight-right", "",
         Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(cap)),
                           slot_op(Flavor::Brauer, {1}, 1, 0, Morphism(cup))),
         one.scaled(Scalar(-1)));
    push(out, S, "MBcox-double", "", Morphism::compose(Morphism(tw), Morphism(tw)), bid(2));
    {
        Morphism l = slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(tw));
        l = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(tw)), l);
        l = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(tw)), l);
        Morphism r = slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(tw));
        r = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(tw)), r);
        r = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(tw)), r);
        push(out, S, "MBcox-braid", "", l, r);
    }
    {
        Morphism l = slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(tw));
        l = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(cap)), l);
        Morphism r = slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(tw));
        r = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(cap)), r);
        push(out, S, "MBpitch-cap", "", l, r);
        Morphism lc = slot_op(Flavor::Brauer, {1}, 1, 0, Morphism(cup));
        lc = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 0, 2, Morphism(tw)), lc);
        Morphism rc = slot_op(Flavor::Brauer, {1}, 0, 0, Morphism(cup));
        rc = Morphism::compose(slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(tw)), rc);
        push(out, S, "MBpitch-cup", "", lc, rc);
    }
    push(out, S, "MBcupcapcross-cup", "",
         Morphism::compose(Morphism(tw), Morphism(cup)), Morphism(cup).scaled(Scalar(-1)));
    push(out, S, "MBcupcapcross-cap", "",
         Morphism::compose(Morphism(cap), Morphism(tw)), Morphism(cap));
    push(out, S, "MBbubble", "", Morphism::compose(Morphism(cap), Morphism(cup)),
         Morphism(ObjectWord(Flavor::Brauer, {}), ObjectWord(Flavor::Brauer, {})));
}

// ------------------------------------------------------------ functorial ----

void gen_functorial(std::vector<RelationInstance>& out, int K, int /*R*/) {
    const char* S = "functorial";
    // Crossings evaluate like their rung-ladder expansion.
    for (int a = 0; a <= K; ++a)
        for (int b = 0; b <= K; ++b)
            push(out, S, "CrossTwist", pstr({a, b}), mterm(gen_crossing(a, b)),
                 crossing_expand(a, b));
    // z_k y_k = k! id.
    for (int k = 1; k <= std::max(1, K); ++k) {
        std::vector<int> w{k};
        push(out, S, "Lemzy", pstr({k}),
             Morphism::compose(Morphism(z_full(w)), Morphism(y_full(w))),
             mid(pw(w)).scaled(factorial(k)));
    }
    // con(exp(f)) = a! b! f on small basis webs.
    {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
            {{2}, {2}}, {{1, 1}, {2}}, {{2, 1}, {1}}, {{3}, {1, 2}}};
        for (const auto& [a, b] : pairs) {
            HomBasis basis = hom_basis(a, b);
            for (size_t i = 0; i < basis.terms.size() && i < 2; ++i) {
                Morphism f(basis.terms[i]);
                Scalar fac(1);
                for (int v : a) fac *= factorial(v);
                for (int v : b) fac *= factorial(v);
                push(out, S, "conexp",
                     wstr(a) + "->" + wstr(b) + " #" + std::to_string(i),
                     contraction(explosion(f), a, b), f.scaled(fac));
            }
        }
    }
    // The marked Brauer functor agrees with evaluation through the embedding.
    {
        TermPtr tw = Term::make({GenKind::BrauerTwist});
        TermPtr cap = Term::make({GenKind::BrauerCap});
        TermPtr cup = Term::make({GenKind::BrauerCup});
        std::vector<std::pair<std::string, Morphism>> samples;
        samples.emplace_back("twist", Morphism(tw));
        samples.emplace_back("cap", Morphism(cap));
        samples.emplace_back("cup", Morphism(cup));
        samples.emplace_back("cap-after-twist",
                             Morphism::compose(Morphism(cap), Morphism(tw)));
        samples.emplace_back(
            "zigzag", Morphism::compose(
                          slot_op(Flavor::Brauer, {1, 1, 1}, 1, 2, Morphism(cap)),
                          slot_op(Flavor::Brauer, {1}, 0, 0, Morphism(cup))));
        for (auto& [nm, m] : samples)
            push(out, S, "comdiag", nm, m, brauer_embed(m),
                 RelationInstance::Mode::MatrixEqual);
    }
    // iota-up compatibility: plain webs evaluate like their oriented images.
    {
        std::vector<std::pair<std::string, Morphism>> samples;
        samples.emplace_back("split21", mterm(gen_split(2, 1)));
        samples.emplace_back("merge12", mterm(gen_merge(1, 2)));
        samples.emplace_back("cap", mterm(gen_cap()));
        samples.emplace_back("cup", mterm(gen_cup()));
        samples.emplace_back("antenna", mterm(gen_antenna()));
        samples.emplace_back("greendot3", mterm(green_dot(3)));
        samples.emplace_back("x21", mterm(gen_crossing(2, 1)));
        for (auto& [nm, m] : samples)
            push(out, S, "UpFun", nm, m, to_oriented(m), RelationInstance::Mode::MatrixEqual);
    }
    // Direct formulas for derived oriented generators match their composites.
    for (int a = 0; a <= K; ++a) {
        push(out, S, "rcap-def", pstr({a}), mterm(gen_rcap(a)), mterm(rcap_composite(a)));
        push(out, S, "rcup-def", pstr({a}), mterm(gen_rcup(a)), mterm(rcup_composite(a)));
        for (int b = 0; b <= K; ++b) {
            push(out, S, "lcross-def", pstr({a, b}), mterm(gen_lcross(a, b)),
                 mterm(lcross_composite(a, b)));
            push(out, S, "dcross-def", pstr({a, b}), mterm(gen_dcross(a, b)),
                 mterm(dcross_composite(a, b)));
        }
    }
    push(out, S, "ucap-def", "", mterm(gen_ucap()), mterm(ucap_composite()));
    push(out, S, "ucup-def", "", mterm(gen_ucup()), mterm(ucup_composite()));
    // Equivariance of every generator image.
    {
        int L = std::min(K, 3);
        std::vector<std::pair<std::string, Morphism>> gens;
        for (int a = 0; a <= L; ++a)
            for (int b = 0; b <= L; ++b) {
                gens.emplace_back("split" + pstr({a, b}), mterm(gen_split(a, b)));
                gens.emplace_back("merge" + pstr({a, b}), mterm(gen_merge(a, b)));
                gens.emplace_back("x" + pstr({a, b}), mterm(gen_crossing(a, b)));
            }
        gens.emplace_back("cap", mterm(gen_cap()));
        gens.emplace_back("cup", mterm(gen_cup()));
        gens.emplace_back("antenna", mterm(gen_antenna()));
        for (int a = 0; a <= L; ++a) {
            gens.emplace_back("lcap" + pstr({a}), mterm(gen_lcap(a)));
            gens.emplace_back("lcup" + pstr({a}), mterm(gen_lcup(a)));
            gens.emplace_back("rcap" + pstr({a}), mterm(gen_rcap(a)));
            gens.emplace_back("rcup" + pstr({a}), mterm(gen_rcup(a)));
        }
        gens.emplace_back("tagin", Morphism(gen_tagin()));
        gens.emplace_back("tagout", Morphism(gen_tagout()));
        for (auto& [nm, m] : gens)
            push(out, S, "equivariance", nm, m, Morphism(m),
                 RelationInstance::Mode::Equivariance);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"glweb", "pweb", "pwebm",
                                                   "oriented", "brauer", "functorial"};
    return names;
}

std::vector<RelationInstance> generate_suite(const std::string& suite, int K, int R) {
    std::vector<RelationInstance> out;
    if (suite == "glweb") gen_glweb(out, K, R);
    else if (suite == "pweb") gen_pweb(out, K, R);
    else if (suite == "pwebm") gen_pwebm(out, K, R);
    else if (suite == "oriented") gen_oriented(out, K, R);
    else if (suite == "brauer") gen_brauer(out);
    else if (suite == "functorial") gen_functorial(out, K, R);
    else throw std::invalid_argument("generate_suite: unknown suite '" + suite + "'");
    return out;
}

int default_instance_n(const RelationInstance& inst) {
    long w = inst.lhs.dom().total_weight() + inst.lhs.cod().total_weight();
    int nf = static_cast<int>(std::max<long>(3, (w + 1) / 2));
    long dims = basis_dimension(inst.lhs.dom(), nf) + basis_dimension(inst.lhs.cod(), nf);
    if (dims <= max_dim_cap() && nf <= 5) return nf;
    return 3;
}

CheckResult check_instance(const RelationInstance& inst, int n) {
    CheckResult res;
    try {
        if (inst.mode == RelationInstance::Mode::Equivariance) {
            LinearMap L = eval(inst.lhs, n);
            auto rep = check_equivariance(L);
            if (!rep.ok) {
                res.ok = false;
                res.message = "equivariance violated at " + rep.witness;
            }
            return res;
        }
        if (inst.lhs.is_zero() && inst.rhs.is_zero()) return res;
        if (inst.lhs.is_zero() || inst.rhs.is_zero()) {
            const Morphism& other = inst.lhs.is_zero() ? inst.rhs : inst.lhs;
            if (!eval(other, n).is_zero()) {
                res.ok = false;
                res.message = "one side vanishes by the label convention, the other does not";
            }
            return res;
        }
        LinearMap L = eval(inst.lhs, n);
        LinearMap Rm = eval(inst.rhs, n);
        bool equal;
        if (inst.mode == RelationInstance::Mode::MatrixEqual) {
            equal = L.cols == Rm.cols;
            if (!equal) {
                // Normalize away explicit zero columns before giving up.
                auto strip = [](const LinearMap& f) {
                    std::map<Monomial, Vector> cs;
                    for (const auto& [m, v] : f.cols)
                        if (!v.is_zero()) cs.emplace(m, v);
                    return cs;
                };
                equal = strip(L) == strip(Rm);
            }
        } else {
            if (L.dom != Rm.dom || L.cod != Rm.cod) {
                res.ok = false;
                res.message = "boundary mismatch: " + L.dom.str() + "->" + L.cod.str() +
                              " vs " + Rm.dom.str() + "->" + Rm.cod.str();
                return res;
            }
            equal = L == Rm;
        }
        if (!equal) {
            res.ok = false;
            // Find the first differing entry.
            for (const auto& m : enumerate_basis(L.dom, n, max_dim_cap())) {
                const Vector& lv = L.column(m);
                const Vector& rv = Rm.column(m);
                if (lv == rv) continue;
                for (const auto& [m2, c] : lv.terms) {
                    auto it = rv.terms.find(m2);
                    Scalar rc = it == rv.terms.end() ? Scalar(0) : it->second;
                    if (!(c == rc)) {
                        res.message = "first difference at " + m.str(L.dom) + " -> " +
                                      m2.str(L.cod) + ": " + c.str() + " vs " + rc.str();
                        return res;
                    }
                }
                for (const auto& [m2, c] : rv.terms) {
                    if (!lv.terms.count(m2)) {
                        res.message = "first difference at " + m.str(L.dom) + " -> " +
                                      m2.str(L.cod) + ": 0 vs " + c.str();
                        return res;
                    }
                }
            }
            res.message = "matrices differ";
        }
    } catch (const std::exception& e) {
        res.ok = false;
        res.message = std::string("error: ") + e.what();
    }
    return res;
}

SuiteReport run_suite(const std::vector<RelationInstance>& instances,
                      std::optional<int> n_override, unsigned threads) {
    SuiteReport rep;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    std::vector<CheckResult> results(instances.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) break;
            int n = n_override ? *n_override : default_instance_n(instances[i]);
            results[i] = check_instance(instances[i], n);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (size_t i = 0; i < instances.size(); ++i) {
        if (results[i].ok) {
            ++rep.passed;
        } else {
            rep.failures.push_back(instances[i].name + " " + instances[i].params + ": " +
                                   results[i].message);
        }
    }
    return rep;
}

}  // namespace webcat
