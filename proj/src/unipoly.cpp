#include "spinid/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spinid {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    if (s == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coeff());
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || i == 0) os << to_string(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
    const Rational& lb = b.leading_coeff();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / lb;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = uni_gcd(p, p.derivative());
    auto [q, r] = uni_divmod(p, g);
    if (!r.is_zero()) throw std::logic_error("squarefree_part: non-exact division");
    return q.monic();
}

SturmSequence SturmSequence::build(const UniPoly& p) {
    SturmSequence s;
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero polynomial");
    s.polys.push_back(p);
    if (p.degree() == 0) return s;
    s.polys.push_back(p.derivative());
    while (s.polys.back().degree() > 0) {
        auto [q, r] = uni_divmod(s.polys[s.polys.size() - 2], s.polys.back());
        if (r.is_zero()) break;  // non-squarefree input; chain ends at the gcd
        s.polys.push_back(-r);
    }
    return s;
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(polys.size());
    for (const auto& p : polys) signs.push_back(p.is_zero() ? 0 : sign(p.eval(x)));
    return count_variations(signs);
}

int SturmSequence::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : polys) {
        if (p.is_zero()) { signs.push_back(0); continue; }
        int s = sign(p.leading_coeff());
        if (p.degree() % 2) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmSequence::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : polys)
        signs.push_back(p.is_zero() ? 0 : sign(p.leading_coeff()));
    return count_variations(signs);
}

int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.degree() == 0) return 0;
    SturmSequence s = SturmSequence::build(p);
    int vlo = lo.infinite ? s.variations_at_neg_inf() : s.variations_at(lo.value);
    int vhi = hi.infinite ? s.variations_at_pos_inf() : s.variations_at(hi.value);
    return vlo - vhi;
}

Rational root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(0);
    Rational maxr(0);
    const Rational& lead = p.leading_coeff();
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = rat_abs(p.coeffs()[i] / lead);
        if (r > maxr) maxr = r;
    }
    return maxr + 1;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
    // exact-root fast path
    if (iv.lo == iv.hi) return iv;
    SturmSequence s = SturmSequence::build(p);
    while (iv.width() > width) {
        Rational mid = iv.mid();
        if (p.eval(mid) == 0) { iv.lo = iv.hi = mid; return iv; }
        int c = s.variations_at(iv.lo) - s.variations_at(mid);
        if (c > 0)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    UniPoly q = squarefree_part(p);
    if (q.degree() == 0) return {};
    SturmSequence s = SturmSequence::build(q);
    Rational b = root_bound(q);
    struct Piece { Rational lo, hi; int count; };
    std::vector<Piece> stack;
    std::vector<RootInterval> exact;
    int total = s.variations_at(-b) - s.variations_at(b);
    if (q.eval(-b) == 0) throw std::logic_error("root bound not strict");
    if (total > 0) stack.push_back({-b, b, total});
    std::vector<RootInterval> out;
    while (!stack.empty()) {
        Piece pc = stack.back();
        stack.pop_back();
        if (pc.count == 1 && pc.hi - pc.lo <= width) {
            out.push_back(refine_root(q, {pc.lo, pc.hi}, width));
            continue;
        }
        Rational mid = (pc.lo + pc.hi) / 2;
        if (q.eval(mid) == 0) {
            out.push_back({mid, mid});
            // split around the exact root, shrinking the excluded band until
            // it contains no other root
            Rational eps = (pc.hi - pc.lo) / 4;
            Rational lm, rm;
            while (true) {
                lm = mid - eps;
                rm = mid + eps;
                if (q.eval(lm) != 0 && q.eval(rm) != 0 &&
                    s.variations_at(lm) - s.variations_at(rm) == 1)
                    break;
                eps /= 2;
            }
            int cl = s.variations_at(pc.lo) - s.variations_at(lm);
            int cr = s.variations_at(rm) - s.variations_at(pc.hi);
            if (cl > 0) stack.push_back({pc.lo, lm, cl});
            if (cr > 0) stack.push_back({rm, pc.hi, cr});
            continue;
        }
        int cl = s.variations_at(pc.lo) - s.variations_at(mid);
        int cr = pc.count - cl;
        if (pc.count == 1) {
            // just refining
            if (cl == 1)
                stack.push_back({pc.lo, mid, 1});
            else
                stack.push_back({mid, pc.hi, 1});
            continue;
        }
        if (cl > 0) stack.push_back({pc.lo, mid, cl});
        if (cr > 0) stack.push_back({mid, pc.hi, cr});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

std::pair<Rational, Rational> interval_eval(const UniPoly& p, const Rational& lo,
                                            const Rational& hi) {
    // Horner with interval arithmetic
    Rational alo(0), ahi(0);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        // [alo,ahi] * [lo,hi]
        Rational c1 = alo * lo, c2 = alo * hi, c3 = ahi * lo, c4 = ahi * hi;
        Rational mn = std::min(std::min(c1, c2), std::min(c3, c4));
        Rational mx = std::max(std::max(c1, c2), std::max(c3, c4));
        alo = mn + p.coeffs()[i];
        ahi = mx + p.coeffs()[i];
    }
    return {alo, ahi};
}

}  // namespace spinid
