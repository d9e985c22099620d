#include "spinid/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spinid {

DivisionResult divide_multi(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("divide_multi: zero divisor");
        if (!(d.ring() == f.ring()) && d.ring()->vars != f.ring()->vars)
            throw std::invalid_argument("divide_multi: ring mismatch");
    }
    DivisionResult res;
    res.quotients.assign(divisors.size(), MultiPoly(f.ring()));
    res.remainder = MultiPoly(f.ring());
    MultiPoly p = f;
    std::vector<Term> rem_terms;
    while (!p.is_zero()) {
        bool divided = false;
        const Term& lt = p.leading_term();
        for (size_t i = 0; i < divisors.size(); ++i) {
            const Term& dt = divisors[i].leading_term();
            if (mono_divides(dt.mono, lt.mono)) {
                Term q{mono_div(lt.mono, dt.mono), lt.coeff / dt.coeff};
                res.quotients[i] += MultiPoly::from_terms(f.ring(), {q});
                p -= divisors[i].term_multiplied(q);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem_terms.push_back(lt);
            p -= MultiPoly::from_terms(f.ring(), {lt});
        }
    }
    res.remainder = MultiPoly::from_terms(f.ring(), std::move(rem_terms));
    return res;
}

/// Reduction-only division (no quotient bookkeeping).
static MultiPoly reduce_by(const MultiPoly& f, const std::vector<MultiPoly>& divisors) {
    MultiPoly p = f;
    std::vector<Term> rem_terms;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool divided = false;
        for (const auto& d : divisors) {
            const Term& dt = d.leading_term();
            if (mono_divides(dt.mono, lt.mono)) {
                Term q{mono_div(lt.mono, dt.mono), lt.coeff / dt.coeff};
                p -= d.term_multiplied(q);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem_terms.push_back(lt);
            p -= MultiPoly::from_terms(p.ring(), {lt});
        }
    }
    return MultiPoly::from_terms(f.ring(), std::move(rem_terms));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Term tf{mono_div(l, f.leading_monomial()), Rational(1) / f.leading_coeff()};
    Term tg{mono_div(l, g.leading_monomial()), Rational(1) / g.leading_coeff()};
    return f.term_multiplied(tf) - g.term_multiplied(tg);
}

namespace {

struct Pair {
    size_t i, j;
    Monomial lcm;
    uint64_t deg;
};

void push_pairs(std::vector<Pair>& pairs, const std::vector<MultiPoly>& g, size_t fresh) {
    for (size_t i = 0; i < fresh; ++i) {
        Monomial l = mono_lcm(g[i].leading_monomial(), g[fresh].leading_monomial());
        pairs.push_back({i, fresh, l, l.degree()});
    }
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
    std::vector<MultiPoly> g;
    RingPtr ring;
    for (const auto& f : ideal.generators) {
        if (f.is_zero()) continue;
        if (!ring) ring = f.ring();
        g.push_back(f.monic());
    }
    if (g.empty()) throw std::invalid_argument("buchberger: no nonzero generators");
    // canonical input order for reproducibility
    std::sort(g.begin(), g.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        int c = ring->order.compare(a.leading_monomial(), b.leading_monomial());
        if (c != 0) return c > 0;
        return a.terms().size() < b.terms().size();
    });
    g.erase(std::unique(g.begin(), g.end(),
                        [](const MultiPoly& a, const MultiPoly& b) { return a == b; }),
            g.end());

    std::vector<Pair> pairs;
    for (size_t j = 1; j < g.size(); ++j) push_pairs(pairs, g, j);

    uint64_t reductions = 0;
    while (!pairs.empty()) {
        // normal selection: lowest lcm degree, ties by the monomial order then indices
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.deg != b.deg) {
                if (a.deg < b.deg) best = k;
            } else {
                int c = ring->order.compare(a.lcm, b.lcm);
                if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
            }
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        // first Buchberger criterion: coprime leading monomials
        if (mono_coprime(g[p.i].leading_monomial(), g[p.j].leading_monomial())) continue;
        if (++reductions > opts.iteration_cap) throw ResourceCapError(reductions);
        MultiPoly s = s_polynomial(g[p.i], g[p.j]);
        MultiPoly r = reduce_by(s, g);
        if (!r.is_zero()) {
            g.push_back(r.monic());
            push_pairs(pairs, g, g.size() - 1);
        }
    }
    GroebnerBasis out;
    out.elements = std::move(g);
    out.ring = ring;
    out.reduced = false;
    return out;
}

GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
    std::vector<MultiPoly> g;
    for (const auto& f : gb.elements)
        if (!f.is_zero()) g.push_back(f.monic());
    // minimal: drop any element whose LM is divisible by another element's LM
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j) continue;
            if (mono_divides(g[j].leading_monomial(), g[i].leading_monomial())) {
                // break ties between equal LMs: keep the first
                if (g[i].leading_monomial() == g[j].leading_monomial())
                    drop = j < i;
                else
                    drop = true;
            }
        }
        if (!drop) minimal.push_back(g[i]);
    }
    // inter-reduce: each element's tail reduced modulo the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MultiPoly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MultiPoly r = others.empty() ? minimal[i] : reduce_by(minimal[i], others);
            r = r.monic();
            if (!(r == minimal[i])) {
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return gb.ring->order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    GroebnerBasis out;
    out.elements = std::move(minimal);
    out.ring = gb.ring;
    out.reduced = true;
    return out;
}

GroebnerBasis reduced_groebner(const Ideal& ideal, const BuchbergerOptions& opts) {
    return reduce_basis(buchberger(ideal, opts));
}

std::optional<UniPoly> elimination_generator(const Ideal& ideal, size_t keep,
                                             const BuchbergerOptions& opts) {
    if (ideal.generators.empty()) throw std::invalid_argument("empty ideal");
    RingPtr ring = ideal.generators.front().ring();
    size_t n = ring->arity();
    if (keep >= n) throw std::invalid_argument("elimination variable out of range");
    // lex order with `keep` least significant, others in current precedence
    std::vector<uint32_t> prec;
    for (uint32_t slot : ring->order.precedence)
        if (slot != keep) prec.push_back(slot);
    prec.push_back(static_cast<uint32_t>(keep));
    RingPtr elim_ring = reorder_ring(ring, prec);
    Ideal reordered;
    for (const auto& f : ideal.generators)
        if (!f.is_zero()) reordered.generators.push_back(f.with_ring(elim_ring));
    GroebnerBasis gb = reduced_groebner(reordered, opts);
    // the reduced basis holds at most one element of k[keep]
    for (const auto& g : gb.elements) {
        bool univ = true;
        for (size_t s = 0; s < n && univ; ++s)
            if (s != keep && g.contains_var(s)) univ = false;
        if (!univ) continue;
        std::vector<Rational> coeffs(g.degree_in(keep) + 1, Rational(0));
        for (const auto& t : g.terms()) coeffs[t.mono.exp[keep]] = t.coeff;
        return UniPoly(std::move(coeffs)).monic();
    }
    return std::nullopt;
}

Ideal radical_zero_dim(const Ideal& ideal, const BuchbergerOptions& opts) {
    if (ideal.generators.empty()) throw std::invalid_argument("empty ideal");
    RingPtr ring = ideal.generators.front().ring();
    Ideal out = ideal;
    for (size_t j = 0; j < ring->arity(); ++j) {
        auto h = elimination_generator(ideal, j, opts);
        if (!h) throw PositiveDimensionalError(ring->vars[j]);
        UniPoly phi = squarefree_part(*h);
        // embed phi(z_j) back into the multivariate ring
        std::vector<Term> terms;
        for (size_t k = 0; k < phi.coeffs().size(); ++k) {
            if (phi.coeffs()[k] == 0) continue;
            Monomial m(ring->arity());
            m.exp[j] = static_cast<uint32_t>(k);
            terms.push_back({std::move(m), phi.coeffs()[k]});
        }
        out.generators.push_back(MultiPoly::from_terms(ring, std::move(terms)));
    }
    return out;
}

namespace {

/// g as univariate in `slot` if it involves no other variable.
std::optional<UniPoly> as_univariate(const MultiPoly& g, size_t slot) {
    for (size_t s = 0; s < g.ring()->arity(); ++s)
        if (s != slot && g.contains_var(s)) return std::nullopt;
    std::vector<Rational> coeffs(g.degree_in(slot) + 1, Rational(0));
    for (const auto& t : g.terms()) coeffs[t.mono.exp[slot]] = t.coeff;
    return UniPoly(std::move(coeffs));
}

}  // namespace

ShapeClass classify_shape(const GroebnerBasis& gb) {
    if (!gb.reduced) throw std::invalid_argument("classify_shape: basis not reduced");
    const auto& g = gb.elements;
    const RingPtr& ring = gb.ring;
    size_t n = ring->arity();
    if (g.size() == 1 && g[0].is_constant() && !g[0].is_zero()) return ShapeNoSolution{};

    // Maximal: exactly {z_j - c_j} for every j
    if (g.size() == n) {
        std::vector<Rational> point(n);
        std::vector<bool> seen(n, false);
        bool maximal = true;
        for (const auto& e : g) {
            if (e.total_degree() != 1 || e.terms().size() > 2) { maximal = false; break; }
            // monic linear in exactly one variable with constant tail
            const Monomial& lm = e.leading_monomial();
            size_t slot = n;
            for (size_t s_ = 0; s_ < n; ++s_)
                if (lm.exp[s_] == 1) { slot = s_; break; }
            if (slot == n || seen[slot]) { maximal = false; break; }
            Rational c(0);
            bool clean = true;
            for (const auto& t : e.terms()) {
                if (t.mono == lm) continue;
                if (!t.mono.is_one()) { clean = false; break; }
                c = -t.coeff;
            }
            if (!clean) { maximal = false; break; }
            seen[slot] = true;
            point[slot] = c;
        }
        if (maximal) {
            bool all = true;
            for (bool b : seen) all = all && b;
            if (all) return ShapeMaximal{std::move(point)};
        }
    }

    // ShapeLemma: univariate z_least^alpha + q(z_least), plus z_j + q_j(z_least)
    size_t least = ring->order.precedence.back();
    if (g.size() == n) {
        ShapeLemma sl;
        sl.shape_slot = least;
        sl.coord.assign(n, std::nullopt);
        bool ok = true;
        for (const auto& e : g) {
            auto u = as_univariate(e, least);
            if (u) {
                if (!sl.shape_poly.is_zero()) { ok = false; break; }
                sl.shape_poly = u->monic();
                continue;
            }
            // expect z_j + q_j(least)
            const Monomial& lm = e.leading_monomial();
            size_t slot = n;
            for (size_t s_ = 0; s_ < n; ++s_)
                if (lm.exp[s_]) { slot = s_; break; }
            // leading monomial must be exactly z_slot^1
            if (lm.degree() != 1 || slot == n || slot == least || sl.coord[slot]) {
                ok = false;
                break;
            }
            // remaining terms must be univariate in `least`
            MultiPoly tail = e - MultiPoly::variable(gb.ring, slot);
            auto q = as_univariate(tail, least);
            if (!q) { ok = false; break; }
            sl.coord[slot] = *q;
        }
        if (ok && !sl.shape_poly.is_zero()) {
            int alpha = sl.shape_poly.degree();
            bool degs = alpha >= 1;
            for (const auto& q : sl.coord)
                if (q && q->degree() >= alpha) degs = false;
            if (degs) {
                size_t assigned = 0;
                for (const auto& q : sl.coord)
                    if (q) ++assigned;
                if (assigned == n - 1) return sl;
            }
        }
    }

    // Triangular: finite staircase; every variable has a pure-power leading monomial
    std::vector<bool> pure(n, false);
    for (const auto& e : g) {
        const Monomial& lm = e.leading_monomial();
        size_t nz = 0, slot = 0;
        for (size_t s_ = 0; s_ < n; ++s_)
            if (lm.exp[s_]) { ++nz; slot = s_; }
        if (nz == 1) pure[slot] = true;
    }
    bool zerodim = true;
    for (bool b : pure) zerodim = zerodim && b;
    if (zerodim) return ShapeTriangular{};
    return ShapeOther{};
}

namespace {

/// Coordinate value of -q(root) certified over the root's interval; refines
/// the root until the sign is determined or the value is proven exactly zero.
RealCoordinate back_substitute(const UniPoly& shape, RootInterval root, const UniPoly& q,
                               const Rational& width) {
    UniPoly mq = -q;
    if (root.lo == root.hi) {
        Rational v = mq.eval(root.lo);
        return {v, v};
    }
    // exact zero iff the root is shared with q
    UniPoly g = uni_gcd(shape, q);
    if (g.degree() >= 1 && sturm_count(g, Bound::at(root.lo), Bound::at(root.hi)) == 1)
        return {Rational(0), Rational(0)};
    for (int round = 0; round < 200; ++round) {
        auto [lo, hi] = interval_eval(mq, root.lo, root.hi);
        if ((sign(lo) == sign(hi) && sign(lo) != 0 && hi - lo <= width) ||
            (lo == hi))
            return {lo, hi};
        root = refine_root(shape, root, root.width() / 16);
        if (root.lo == root.hi) {
            Rational v = mq.eval(root.lo);
            return {v, v};
        }
    }
    throw AlgebraError("back substitution failed to certify a coordinate");
}

}  // namespace

std::vector<RealSolution> enumerate_real_solutions(const ShapeLemma& shape,
                                                   const RingPtr& ring,
                                                   const Rational& width) {
    std::vector<RealSolution> out;
    UniPoly sf = squarefree_part(shape.shape_poly);
    auto roots = isolate_real_roots(sf, width);
    for (auto& r : roots) {
        RealSolution sol;
        sol.coords.resize(ring->arity());
        for (size_t s_ = 0; s_ < ring->arity(); ++s_) {
            if (s_ == shape.shape_slot) {
                sol.coords[s_] = {r.lo, r.hi};
            } else {
                if (!shape.coord[s_]) throw AlgebraError("shape lemma missing coordinate");
                sol.coords[s_] = back_substitute(sf, r, *shape.coord[s_], width);
            }
        }
        // the shape variable's own interval sign: refine across zero if needed
        auto& sc = sol.coords[shape.shape_slot];
        if (!sc.exact() && sign(sc.lo) != sign(sc.hi)) {
            if (sf.eval(Rational(0)) == 0 &&
                sturm_count(sf, Bound::at(sc.lo), Bound::at(sc.hi)) == 1 &&
                sc.lo < 0 && sc.hi >= 0) {
                // the isolated root could be exactly zero
                RootInterval iv{sc.lo, sc.hi};
                iv = refine_root(sf, iv, width / 1024);
                if (iv.lo == iv.hi) {
                    sc = {iv.lo, iv.hi};
                } else if (sign(iv.lo) == sign(iv.hi)) {
                    sc = {iv.lo, iv.hi};
                } else {
                    sc = {Rational(0), Rational(0)};
                }
            } else {
                RootInterval iv{sc.lo, sc.hi};
                while (sign(iv.lo) != sign(iv.hi) && !(iv.lo == iv.hi))
                    iv = refine_root(sf, iv, iv.width() / 16);
                sc = {iv.lo, iv.hi};
            }
        }
        out.push_back(std::move(sol));
    }
    return out;
}

int certified_sign(const RealCoordinate& c) {
    if (c.exact()) return sign(c.lo);
    if (c.lo > 0) return 1;
    if (c.hi < 0) return -1;
    throw AlgebraError("coordinate sign not certified");
}

}  // namespace spinid
