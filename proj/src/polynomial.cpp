#include "spinid/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spinid {

Rational rationalize(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // continued-fraction convergents p/q until the denominator cap
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e18) break;
        mpz_class a(static_cast<unsigned long>(fl));
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > mpz_class(max_den)) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) {  // first coefficient already exceeded the cap
        p1 = mpz_class(static_cast<long>(std::llround(v)));
        q1 = 1;
    }
    Rational r(neg ? mpz_class(-p1) : p1, q1);
    r.canonicalize();
    return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (size_t i = 0; i < a.arity(); ++i) r.exp[i] = a.exp[i] + b.exp[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.arity(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(b.arity());
    for (size_t i = 0; i < b.arity(); ++i) r.exp[i] = b.exp[i] - a.exp[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (size_t i = 0; i < a.arity(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.arity(); ++i)
        if (a.exp[i] && b.exp[i]) return false;
    return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    for (uint32_t slot : precedence) {
        if (a.exp[slot] != b.exp[slot]) return a.exp[slot] > b.exp[slot] ? 1 : -1;
    }
    return 0;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    std::vector<uint32_t> prec(vars.size());
    for (size_t i = 0; i < prec.size(); ++i) prec[i] = static_cast<uint32_t>(i);
    return make_ring(std::move(vars), std::move(prec));
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<uint32_t> precedence) {
    if (vars.size() != precedence.size())
        throw std::invalid_argument("ring: precedence size mismatch");
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    r->order.precedence = std::move(precedence);
    return r;
}

RingPtr reorder_ring(const RingPtr& ring, std::vector<uint32_t> precedence) {
    return make_ring(ring->vars, std::move(precedence));
}

MultiPoly::MultiPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
    if (c != 0) terms_.push_back({Monomial(ring_->arity()), c});
}

MultiPoly MultiPoly::variable(const RingPtr& ring, size_t slot, uint32_t power) {
    MultiPoly p(ring);
    Monomial m(ring->arity());
    m.exp[slot] = power;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

MultiPoly MultiPoly::constant(const RingPtr& ring, const Rational& c) {
    return MultiPoly(ring, c);
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

uint64_t MultiPoly::total_degree() const {
    uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

uint32_t MultiPoly::degree_in(size_t slot) const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exp[slot]);
    return d;
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (ring_ == o.ring_) return;
    if (ring_ && o.ring_ && ring_->vars == o.ring_->vars &&
        ring_->order.precedence == o.ring_->order.precedence)
        return;
    throw std::invalid_argument("polynomial ring mismatch");
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
        return ring_->order.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    MultiPoly p(ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(o);
    // merge of two sorted term lists
    MultiPoly r(ring_ ? ring_ : o.ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    const auto& ord = r.ring_->order;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prods.push_back({mono_mul(a.mono, b.mono), a.coeff * b.coeff});
    return from_terms(r.ring_, std::move(prods));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

MultiPoly MultiPoly::term_multiplied(const Term& t) const {
    MultiPoly r(ring_);
    if (t.coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& a : terms_) r.terms_.push_back({mono_mul(a.mono, t.mono), a.coeff * t.coeff});
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coeff());
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
    if (values.size() != ring_->arity())
        throw std::invalid_argument("evaluate: wrong value count");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational m = t.coeff;
        for (size_t i = 0; i < values.size(); ++i)
            if (t.mono.exp[i]) m *= rat_pow(values[i], t.mono.exp[i]);
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const RingPtr& target,
                                const std::vector<MultiPoly>& images) const {
    if (images.size() != ring_->arity())
        throw std::invalid_argument("substitute: wrong image count");
    MultiPoly acc(target);
    for (const auto& t : terms_) {
        MultiPoly m = MultiPoly::constant(target, t.coeff);
        for (size_t i = 0; i < images.size(); ++i)
            for (uint32_t e = 0; e < t.mono.exp[i]; ++e) m *= images[i];
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::with_ring(const RingPtr& target) const {
    if (target->vars != ring_->vars)
        throw std::invalid_argument("with_ring: variable mismatch");
    MultiPoly r(target);
    r.terms_ = terms_;
    r.normalize();
    return r;
}

bool MultiPoly::even_only_in(size_t slot) const {
    for (const auto& t : terms_)
        if (t.mono.exp[slot] % 2) return false;
    return true;
}

bool MultiPoly::contains_var(size_t slot) const {
    for (const auto& t : terms_)
        if (t.mono.exp[slot]) return true;
    return false;
}

MultiPoly MultiPoly::derivative(size_t slot) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (!t.mono.exp[slot]) continue;
        Term d{t.mono, t.coeff * Rational(static_cast<long>(t.mono.exp[slot]))};
        d.mono.exp[slot] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit = (c == 1);
        if (!unit || t.mono.is_one()) os << to_string(c);
        bool any = !unit && !t.mono.is_one();
        if (any) os << " * ";
        bool firstv = true;
        for (size_t i = 0; i < t.mono.arity(); ++i) {
            if (!t.mono.exp[i]) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << ring_->vars[i];
            if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
        }
    }
    return os.str();
}

}  // namespace spinid
