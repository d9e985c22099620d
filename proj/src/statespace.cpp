#include "spinid/statespace.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinid {

SymbolicSystem build_system(const ModelSpec& model, Axis measured, Axis prepared) {
    auto terms = model.terms();
    size_t n_sites = terms.front().word.num_sites();
    PauliString prep_word = PauliString::single(n_sites, 1, prepared);
    PauliString meas_word = PauliString::single(n_sites, 1, measured);

    SymbolicSystem sys;
    sys.observable = measured;
    sys.basis = accessible_set(terms, {prep_word});
    sys.n = sys.basis.dim();

    auto params = model.parameters();
    std::vector<std::string> names;
    for (const auto& p : params) names.push_back(p.name);
    sys.theta_ring = make_ring(names);

    sys.a_sym.assign(sys.n, std::vector<MultiPoly>(sys.n, MultiPoly(sys.theta_ring)));
    for (const auto& e : structure_constants(terms, sys.basis)) {
        MultiPoly theta = MultiPoly::variable(sys.theta_ring, e.m);
        sys.a_sym[e.k][e.l] += theta.scaled(e.value);
    }

    // probe prepared in the +1 eigenstate of `prepared`, chain maximally
    // mixed: x_k(0) = NTr(rho0 O_k) = 1 exactly at the prepared member
    sys.x0.assign(sys.n, Rational(0));
    sys.c_row.assign(sys.n, Rational(0));
    int pidx = sys.basis.index_of(prep_word);
    if (pidx < 0) throw std::logic_error("prepared observable missing from accessible set");
    int midx = sys.basis.index_of(meas_word);
    if (midx < 0)
        throw std::invalid_argument("measured observable " + meas_word.str() +
                                    " is outside the accessible set of " + prep_word.str());
    sys.x0[static_cast<size_t>(pidx)] = 1;
    sys.c_row[static_cast<size_t>(midx)] = 1;
    return sys;
}

TransferFunctionSym transfer_function(const SymbolicSystem& sys) {
    size_t n = sys.n;
    if (n == 0) throw std::invalid_argument("transfer_function: empty system");
    const RingPtr& ring = sys.theta_ring;
    auto zero = [&] { return MultiPoly(ring); };
    auto one = [&] { return MultiPoly::constant(ring, Rational(1)); };

    using Mat = std::vector<std::vector<MultiPoly>>;
    auto matmul = [&](const Mat& a, const Mat& b) {
        Mat r(n, std::vector<MultiPoly>(n, zero()));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (a[i][k].is_zero()) continue;
                for (size_t j = 0; j < n; ++j) {
                    if (b[k][j].is_zero()) continue;
                    r[i][j] += a[i][k] * b[k][j];
                }
            }
        return r;
    };

    // Faddeev-LeVerrier: B0 = I, c_n = 1;
    //   M = A*B_{k-1}; c_{n-k} = -tr(M)/k; B_k = M + c_{n-k} I
    // charpoly = sum c_k s^k, adj(sI - A) = sum B_k s^{n-1-k}
    std::vector<MultiPoly> c(n + 1, zero());
    c[n] = one();
    Mat b(n, std::vector<MultiPoly>(n, zero()));
    for (size_t i = 0; i < n; ++i) b[i][i] = one();

    TransferFunctionSym t;
    t.theta_ring = ring;
    t.num.assign(n, zero());
    t.den.assign(n + 1, zero());

    // accumulate numerator contribution of B_k at s^{n-1-k}
    auto add_num = [&](const Mat& bk, size_t k) {
        MultiPoly acc = zero();
        for (size_t i = 0; i < n; ++i) {
            if (sys.c_row[i] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (sys.x0[j] == 0) continue;
                acc += bk[i][j].scaled(sys.c_row[i] * sys.x0[j]);
            }
        }
        t.num[n - 1 - k] += acc;
    };
    add_num(b, 0);

    for (size_t k = 1; k <= n; ++k) {
        Mat m = matmul(sys.a_sym, b);
        MultiPoly tr = zero();
        for (size_t i = 0; i < n; ++i) tr += m[i][i];
        c[n - k] = tr.scaled(Rational(-1, static_cast<long>(k)));
        if (k < n) {
            b = std::move(m);
            for (size_t i = 0; i < n; ++i) b[i][i] += c[n - k];
            add_num(b, k);
        }
    }
    t.den = std::move(c);
    return t;
}

TransferFunctionSym sum_transfer(const std::vector<TransferFunctionSym>& parts) {
    if (parts.empty()) throw std::invalid_argument("sum_transfer: no parts");
    TransferFunctionSym out = parts.front();
    for (size_t p = 1; p < parts.size(); ++p) {
        const auto& t = parts[p];
        if (t.den.size() != out.den.size())
            throw std::invalid_argument("sum_transfer: order mismatch");
        for (size_t i = 0; i < t.den.size(); ++i)
            if (!(t.den[i] == out.den[i]))
                throw std::invalid_argument("sum_transfer: system matrices differ");
        for (size_t i = 0; i < t.num.size(); ++i) out.num[i] += t.num[i];
    }
    return out;
}

PolySystem extract_poly_system(const TransferFunctionSym& t) {
    const RingPtr& tr = t.theta_ring;
    size_t m = tr->arity();

    // Step 1: parameters appearing only with even exponents become z = theta^2
    std::vector<bool> used(m, false), even(m, true);
    auto scan = [&](const MultiPoly& p) {
        for (size_t s = 0; s < m; ++s) {
            if (p.contains_var(s)) used[s] = true;
            if (!p.even_only_in(s)) even[s] = false;
        }
    };
    for (const auto& p : t.num) scan(p);
    for (const auto& p : t.den) scan(p);

    PolySystem sys;
    std::vector<std::string> znames;
    std::vector<int> slot_of_theta(m, -1);  // theta slot -> z slot
    for (size_t s = 0; s < m; ++s) {
        if (!used[s]) continue;  // a parameter absent from T(s) gets no variable
        slot_of_theta[s] = static_cast<int>(sys.subs.size());
        znames.push_back("z" + std::to_string(sys.subs.size() + 1));
        sys.subs.push_back({s, even[s]});
    }
    sys.z_ring = make_ring(znames);

    // theta^2 -> z (or theta -> z) is not a polynomial substitution, so each
    // coefficient is rewritten monomial by monomial.
    auto rewrite = [&](const MultiPoly& p) {
        std::vector<Term> terms;
        for (const auto& tm : p.terms()) {
            Monomial zm(sys.z_ring->arity());
            for (size_t s = 0; s < m; ++s) {
                uint32_t e = tm.mono.exp[s];
                if (!e) continue;
                int zs = slot_of_theta[s];
                if (zs < 0) throw std::logic_error("unused variable with nonzero exponent");
                if (sys.subs[static_cast<size_t>(zs)].squared) {
                    if (e % 2) throw std::logic_error("odd exponent in even-only variable");
                    zm.exp[static_cast<size_t>(zs)] = e / 2;
                } else {
                    zm.exp[static_cast<size_t>(zs)] = e;
                }
            }
            terms.push_back({std::move(zm), tm.coeff});
        }
        return MultiPoly::from_terms(sys.z_ring, std::move(terms));
    };

    auto harvest = [&](const std::vector<MultiPoly>& coeffs, bool in_num) {
        for (size_t k = 0; k < coeffs.size(); ++k) {
            const MultiPoly& cp = coeffs[k];
            if (cp.is_zero() || cp.is_constant()) continue;  // no information
            sys.lhs.push_back(rewrite(cp));
            sys.positions.push_back({in_num, k});
        }
    };
    harvest(t.num, true);
    harvest(t.den, false);
    for (size_t k = 0; k < sys.lhs.size(); ++k)
        sys.v_names.push_back("v" + std::to_string(k + 1));
    return sys;
}

std::vector<Rational> evaluate_v(const PolySystem& sys, const TransferFunctionSym& t,
                                 const std::vector<Rational>& theta) {
    std::vector<Rational> out;
    out.reserve(sys.lhs.size());
    for (size_t i = 0; i < sys.lhs.size(); ++i) {
        const auto& pos = sys.positions[i];
        const MultiPoly& cp = pos.in_num ? t.num[pos.power] : t.den[pos.power];
        out.push_back(cp.evaluate(theta));
    }
    return out;
}

std::vector<Rational> theta_to_z(const PolySystem& sys, const std::vector<Rational>& theta) {
    std::vector<Rational> z(sys.subs.size());
    for (size_t s = 0; s < sys.subs.size(); ++s) {
        const Rational& th = theta[sys.subs[s].theta_index];
        z[s] = sys.subs[s].squared ? Rational(th * th) : th;
    }
    return z;
}

}  // namespace spinid
