#include "mspotty/enumerators.hpp"

#include <algorithm>
#include <functional>

#include "mspotty/errors.hpp"

namespace mspotty {

namespace {

Monomial z_pow(uint64_t e) {
    if (e == 0) return {};
    return {{Var::z(), static_cast<uint32_t>(e)}};
}

Monomial xyz_pow(uint64_t xe, uint64_t ye, uint64_t ze) {
    Monomial m;
    if (ze) m.emplace_back(Var::z(), static_cast<uint32_t>(ze));
    if (xe) m.emplace_back(Var::x(), static_cast<uint32_t>(xe));
    if (ye) m.emplace_back(Var::y(), static_cast<uint32_t>(ye));
    std::sort(m.begin(), m.end());
    return m;
}

void check_params(const SpottyParams& params, uint32_t b) {
    if (params.b != b) throw DomainError("spotty byte length does not match the code");
    if (params.t < 1 || params.t > params.b) throw DomainError("need 1 <= t <= b");
}

}  // namespace

// ---- kernels ---------------------------------------------------------------

const MultiPoly& KernelCache::theta(uint32_t j, uint32_t b, uint64_t ell, uint32_t t) {
    if (j > b) throw DomainError("theta kernel needs 0 <= j <= b");
    std::lock_guard lock(mu_);
    const Key4 key{j, b, ell, t};
    if (auto it = theta_.find(key); it != theta_.end()) return it->second;

    MultiPoly p;
    for (uint32_t j1 = 0; j1 <= j; ++j1) {
        for (uint32_t j2 = 0; j2 + j <= b; ++j2) {
            BigInt coef = binomial(j, j1) * binomial(b - j, j2) * ipow(BigInt(ell) - 1, j2);
            if (j1 & 1) coef = -coef;
            p.add_term(z_pow(ceil_div(j1 + j2, t)), std::move(coef));
        }
    }
    return theta_.emplace(key, std::move(p)).first->second;
}

const MultiPoly& KernelCache::g_kernel(uint32_t wu, uint32_t wv, uint32_t overlap, uint32_t b,
                                       uint64_t ell, uint32_t t) {
    if (wu > b || wv > b) throw DomainError("g kernel needs byte weights within 0..b");
    if (overlap > std::min(wu, wv) || wu + wv > b + overlap)
        throw DomainError("g kernel overlap out of range");
    std::lock_guard lock(mu_);
    const Key6 key{wu, wv, overlap, b, ell, t};
    if (auto it = g_.find(key); it != g_.end()) return it->second;

    // Positions split into four classes by the (u', v') zero pattern; the
    // summed byte w is classified by how many nonzero entries it puts into
    // each class: a1 in both-nonzero, a2 in v'-only, a3 in u'-only, a4 in
    // both-zero. Character sums contribute -1 per nonzero w entry against a
    // nonzero u' position and ell-1 per free nonzero entry.
    const uint32_t c11 = overlap, c01 = wv - overlap, c10 = wu - overlap;
    const uint32_t c00 = b + overlap - wu - wv;
    MultiPoly p;
    for (uint32_t a1 = 0; a1 <= c11; ++a1) {
        for (uint32_t a2 = 0; a2 <= c01; ++a2) {
            for (uint32_t a3 = 0; a3 <= c10; ++a3) {
                for (uint32_t a4 = 0; a4 <= c00; ++a4) {
                    const uint32_t wgt = a1 + a2 + a3 + a4;  // weight of w
                    BigInt coef = binomial(c11, a1) * binomial(c01, a2) * binomial(c10, a3) *
                                  binomial(c00, a4) * ipow(BigInt(ell) - 1, a2 + a4);
                    if ((a1 + a3) & 1) coef = -coef;
                    const uint32_t f01 = wv - a1 - a2;   // w zero, v' nonzero
                    const uint32_t f10 = wgt - a1 - a2;  // w nonzero, v' zero
                    const uint32_t f11 = a1 + a2;
                    const uint64_t xe = f01 / t + ceil_case(f01 % t + f11 % t, t);
                    const uint64_t ye = f10 / t + ceil_case(f10 % t + f11 % t, t);
                    p.add_term(xyz_pow(xe, ye, f11 / t), std::move(coef));
                }
            }
        }
    }
    return g_.emplace(key, std::move(p)).first->second;
}

const MultiPoly& KernelCache::h_kernel(uint32_t wu, uint32_t wv, uint32_t overlap, uint32_t b,
                                       uint64_t ell, uint32_t t) {
    if (wu > b || wv > b) throw DomainError("h kernel needs byte weights within 0..b");
    if (overlap > std::min(wu, wv) || wu + wv > b + overlap)
        throw DomainError("h kernel overlap out of range");
    std::lock_guard lock(mu_);
    const Key6 key{wu, wv, overlap, b, ell, t};
    if (auto it = h_.find(key); it != h_.end()) return it->second;

    // Double character sum over byte pairs (w, w'). Positions carry a type
    // (u' nonzero?, w nonzero?, w' nonzero?, v' nonzero?); the (u', v')
    // pattern fixes four classes and within each class every position picks
    // one of the four (w, w') patterns. phi counts nonzero w against nonzero
    // u' plus nonzero w' against nonzero v'.
    struct ClassSplit {
        uint32_t cells[4];  // counts for (w,w') = 00, 01, 10, 11
        BigInt ways;        // multinomial
    };
    const uint32_t sizes[4] = {overlap, wu - overlap, wv - overlap, b + overlap - wu - wv};
    const bool u_nonzero[4] = {true, true, false, false};
    const bool v_nonzero[4] = {true, false, true, false};

    std::array<std::vector<ClassSplit>, 4> splits;
    for (int cls = 0; cls < 4; ++cls) {
        const uint32_t s = sizes[cls];
        for (uint32_t c01 = 0; c01 <= s; ++c01)
            for (uint32_t c10 = 0; c01 + c10 <= s; ++c10)
                for (uint32_t c11 = 0; c01 + c10 + c11 <= s; ++c11) {
                    const uint32_t c00 = s - c01 - c10 - c11;
                    BigInt ways = factorial(s) / (factorial(c00) * factorial(c01) *
                                                  factorial(c10) * factorial(c11));
                    splits[cls].push_back({{c00, c01, c10, c11}, std::move(ways)});
                }
    }

    MultiPoly p;
    for (const auto& s0 : splits[0]) {
        for (const auto& s1 : splits[1]) {
            for (const auto& s2 : splits[2]) {
                for (const auto& s3 : splits[3]) {
                    const ClassSplit* cs[4] = {&s0, &s1, &s2, &s3};
                    uint32_t wp = 0, wq = 0, psi = 0, phi = 0;
                    BigInt coef = 1;
                    for (int cls = 0; cls < 4; ++cls) {
                        const auto& cells = cs[cls]->cells;
                        const uint32_t w_nz = cells[2] + cells[3];   // w nonzero
                        const uint32_t wp_nz = cells[1] + cells[3];  // w' nonzero
                        wp += w_nz;
                        wq += wp_nz;
                        psi += cells[3];
                        if (u_nonzero[cls]) phi += w_nz;
                        if (v_nonzero[cls]) phi += wp_nz;
                        coef *= cs[cls]->ways;
                    }
                    coef *= ipow(BigInt(ell) - 1, wp + wq - phi);
                    if (phi & 1) coef = -coef;
                    const uint32_t f01 = wq - psi, f10 = wp - psi, f11 = psi;
                    const uint64_t xe = f01 / t + ceil_case(f01 % t + f11 % t, t);
                    const uint64_t ye = f10 / t + ceil_case(f10 % t + f11 % t, t);
                    p.add_term(xyz_pow(xe, ye, f11 / t), std::move(coef));
                }
            }
        }
    }
    return h_.emplace(key, std::move(p)).first->second;
}

BigInt krawtchouk(uint32_t p, uint32_t j, uint32_t b, uint64_t ell) {
    BigInt sum = 0;
    for (uint32_t a = 0; a <= p; ++a) {
        BigInt term = binomial(j, a) * binomial(b - j, int64_t(p) - int64_t(a)) *
                      ipow(BigInt(ell) - 1, p - a);
        sum += (a & 1) ? -term : term;
    }
    return sum;
}

const MultiPoly& KernelCache::split_kernel(uint32_t j, uint32_t b, uint64_t ell, uint32_t t) {
    if (j > b) throw DomainError("split kernel needs 0 <= j <= b");
    std::lock_guard lock(mu_);
    const Key4 key{j, b, ell, t};
    if (auto it = split_.find(key); it != split_.end()) return it->second;

    MultiPoly poly;
    const uint64_t cap = ceil_div(b, t);
    for (uint32_t p = 0; p <= b; ++p) {
        Monomial m;
        const uint64_t ye = ceil_div(p, t);
        if (cap - ye) m.emplace_back(Var::x(), static_cast<uint32_t>(cap - ye));
        if (ye) m.emplace_back(Var::y(), static_cast<uint32_t>(ye));
        poly.add_term(std::move(m), krawtchouk(p, j, b, ell));
    }
    return split_.emplace(key, std::move(poly)).first->second;
}

namespace {

// One matrix row of the Lee kernel sum: all ways to spread the row total over
// the ring elements, with the multinomial coefficients collected over columns
// that share a character sign and a Lee weight. row_terms[c] = (sign exponent,
// Lee weight, number of columns); out[w] accumulates the signed count at raw
// Lee weight w.
struct LeeRowClass {
    uint32_t sign;
    uint32_t lee;
    uint64_t columns;
};

void lee_row_compositions(const std::vector<LeeRowClass>& classes, size_t idx, uint32_t left,
                          const BigInt& ways, uint32_t sign_par, uint64_t raw,
                          std::vector<BigInt>& out) {
    if (idx == classes.size()) {
        if (left == 0) {
            if (sign_par & 1)
                out[raw] -= ways;
            else
                out[raw] += ways;
        }
        return;
    }
    const LeeRowClass& cls = classes[idx];
    BigInt b_ways = ways;  // ways * C(left, s) * columns^s built incrementally
    for (uint32_t s = 0; s <= left; ++s) {
        if (s > 0) {
            b_ways *= left - s + 1;
            b_ways /= s;
            b_ways *= cls.columns;
        }
        lee_row_compositions(classes, idx + 1, left - s, b_ways, sign_par + s * cls.sign,
                             raw + uint64_t(s) * cls.lee, out);
    }
}

}  // namespace

const MultiPoly& KernelCache::lee_kernel(const std::vector<uint32_t>& composition,
                                         const Ring& ring, uint32_t t) {
    if (!ring.is_rk()) throw UnsupportedError("Lee kernel is defined on R_k only");
    const uint64_t ell = ring.size();
    if (composition.size() != ell) throw DomainError("composition must have one entry per element");
    std::lock_guard lock(mu_);
    const LeeKey key{composition, ring.describe(), t};
    if (auto it = lee_.find(key); it != lee_.end()) return it->second;

    // Sum over matrices (s_pq) with row sums j_p: multinomial coefficient
    // times chi(sum r_p r_q s_pq) times z^{ceil(sum w_L(r_q) s_pq / t)}.
    // chi is +-1 on R_k, so coefficients stay integral. Terms are collected
    // row by row: columns with equal sign and Lee weight contribute
    // identically, and rows couple only through the final ceiling.
    const uint32_t wmax = 1u << ring.spec().e;
    std::vector<std::pair<uint32_t, uint32_t>> rows;  // (element, row total)
    for (uint32_t p = 0; p < ell; ++p)
        if (composition[p] > 0) rows.emplace_back(p, composition[p]);

    std::vector<BigInt> acc{BigInt(1)};
    for (const auto& [p, jp] : rows) {
        const RowKey row_key{ring.describe(), p, jp};
        auto row_it = lee_rows_.find(row_key);
        if (row_it == lee_rows_.end()) {
            std::map<std::pair<uint32_t, uint32_t>, uint64_t> buckets;  // (sign, lee) -> columns
            for (uint32_t q = 0; q < ell; ++q) {
                const uint32_t sign =
                    ring.char_exponent(ring.mul(static_cast<Elem>(p), static_cast<Elem>(q)));
                ++buckets[{sign, ring.lee_weight(static_cast<Elem>(q))}];
            }
            std::vector<LeeRowClass> classes;
            for (const auto& [sw, count] : buckets)
                classes.push_back({sw.first, sw.second, count});
            std::vector<BigInt> row(uint64_t(jp) * wmax + 1);
            lee_row_compositions(classes, 0, jp, BigInt(1), 0, 0, row);
            row_it = lee_rows_.emplace(row_key, std::move(row)).first;
        }
        const std::vector<BigInt>& row = row_it->second;
        std::vector<BigInt> next(acc.size() + row.size() - 1);
        for (size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) next[i + j] += acc[i] * row[j];
        }
        acc = std::move(next);
    }

    MultiPoly poly;
    for (uint64_t w = 0; w < acc.size(); ++w)
        if (acc[w] != 0) poly.add_term(z_pow(ceil_div(w, t)), acc[w]);
    return lee_.emplace(key, std::move(poly)).first->second;
}

void KernelCache::inject_theta(uint32_t j, uint32_t b, uint64_t ell, uint32_t t, MultiPoly poly) {
    std::lock_guard lock(mu_);
    theta_[Key4{j, b, ell, t}] = std::move(poly);
}

// ---- direct enumerators ------------------------------------------------------

MultiPoly hamming_enumerator(const LinearCode& code, const SpottyParams& params) {
    check_params(params, code.byte_len());
    MultiPoly p;
    for (const auto& w : code.codewords())
        p.add_term(z_pow(m_spotty_hamming_weight(w, params)), 1);
    return p;
}

MultiPoly joint_enumerator(const LinearCode& c, const LinearCode& d, const SpottyParams& params,
                           uint64_t pair_budget) {
    if (c.ring().spec() != d.ring().spec() || c.length() != d.length() ||
        c.byte_len() != d.byte_len())
        throw DomainError("joint enumerator needs codes over the same ring and geometry");
    check_params(params, c.byte_len());
    const BigInt pairs = BigInt(c.size()) * d.size();
    if (pairs > pair_budget)
        throw BudgetError("joint enumeration over " + pairs.str() + " pairs exceeds the budget",
                          pairs.str());
    MultiPoly p;
    for (const auto& u : c.codewords()) {
        for (const auto& v : d.codewords()) {
            const JklValues s = jkl(u, v, params);
            p.add_term(xyz_pow(s.j, s.k, s.l), 1);
        }
    }
    return p;
}

MultiPoly split_enumerator(const LinearCode& code, const SpottyParams& params) {
    check_params(params, code.byte_len());
    const uint32_t n = code.byte_count(), b = code.byte_len();
    const uint64_t cap = ceil_div(b, params.t);
    MultiPoly p;
    for (const auto& w : code.codewords()) {
        Monomial m;
        for (uint32_t i = 0; i < n; ++i) {
            const uint64_t wm = ceil_div(hamming_weight(std::span(w).subspan(i * b, b)), params.t);
            if (cap - wm) m.emplace_back(Var::xi(i + 1), static_cast<uint32_t>(cap - wm));
            if (wm) m.emplace_back(Var::yi(i + 1), static_cast<uint32_t>(wm));
        }
        p.add_term(std::move(m), 1);
    }
    return p;
}

MultiPoly lee_enumerator(const LinearCode& code, const SpottyParams& params) {
    if (!code.ring().is_rk()) throw UnsupportedError("Lee enumerator is defined on R_k only");
    check_params(params, code.byte_len());
    MultiPoly p;
    for (const auto& w : code.codewords())
        p.add_term(z_pow(m_spotty_lee_weight(code.ring(), w, params)), 1);
    return p;
}

// ---- transforms ---------------------------------------------------------------

MultiPoly macwilliams_hamming(const AlphaDistribution& dist, const BigInt& code_size,
                              uint64_t ell, const SpottyParams& params, KernelCache& cache) {
    if (BigInt(dist.total()) != code_size)
        throw DomainError("alpha distribution total does not match the code size");
    const uint32_t b = dist.b;
    check_params(params, b);
    MultiPoly sum;
    for (const auto& [alpha, count] : dist.counts) {
        MultiPoly prod = MultiPoly::constant(1);
        for (uint32_t j = 0; j <= b; ++j)
            for (uint32_t rep = 0; rep < alpha[j]; ++rep)
                prod = prod * cache.theta(j, b, ell, params.t);
        sum += prod.scaled(count);
    }
    return sum.divided_exact(code_size);
}

MultiPoly joint_macwilliams(JointDual which, const JointStats& stats, const BigInt& size_c,
                            const BigInt& size_d, uint64_t ell, const SpottyParams& params,
                            KernelCache& cache) {
    const uint32_t b = stats.b, n = stats.n;
    check_params(params, b);
    if (BigInt(stats.total()) != size_c * size_d)
        throw DomainError("joint statistics total does not match |C| * |D|");
    MultiPoly sum;
    for (const auto& [key, count] : stats.counts) {
        const auto& [j, k, delta] = key;
        MultiPoly prod = MultiPoly::constant(1);
        for (uint32_t i = 0; i < n; ++i) {
            switch (which) {
                case JointDual::DualFirst:
                    prod = prod * cache.g_kernel(j[i], k[i], delta[i], b, ell, params.t);
                    break;
                case JointDual::DualSecond: {
                    // the character hits the second code; swap the x/y roles
                    MultiPoly g = cache.g_kernel(k[i], j[i], delta[i], b, ell, params.t);
                    prod = prod * g.evaluate({{Var::x(), Var::y()}, {Var::y(), Var::x()}});
                    break;
                }
                case JointDual::DualBoth:
                    prod = prod * cache.h_kernel(j[i], k[i], delta[i], b, ell, params.t);
                    break;
            }
        }
        sum += prod.scaled(count);
    }
    switch (which) {
        case JointDual::DualFirst: return sum.divided_exact(size_c);
        case JointDual::DualSecond: return sum.divided_exact(size_d);
        case JointDual::DualBoth: return sum.divided_exact(size_c * size_d);
    }
    throw DomainError("unreachable");
}

MultiPoly split_macwilliams(const ProfileDistribution& dist, const BigInt& code_size,
                            uint64_t ell, const SpottyParams& params, KernelCache& cache) {
    if (BigInt(dist.total()) != code_size)
        throw DomainError("profile distribution total does not match the code size");
    const uint32_t b = dist.b, n = dist.n;
    check_params(params, b);
    MultiPoly sum;
    for (const auto& [profile, count] : dist.counts) {
        MultiPoly prod = MultiPoly::constant(1);
        for (uint32_t i = 0; i < n; ++i) {
            const MultiPoly& g = cache.split_kernel(profile[i], b, ell, params.t);
            prod = prod * g.evaluate({{Var::x(), Var::xi(i + 1)}, {Var::y(), Var::yi(i + 1)}});
        }
        sum += prod.scaled(count);
    }
    return sum.divided_exact(code_size);
}

MultiPoly lee_macwilliams(const CompositionDistribution& dist, const BigInt& code_size,
                          const Ring& ring, const SpottyParams& params, KernelCache& cache) {
    if (!ring.is_rk()) throw UnsupportedError("Lee transform is defined on R_k only");
    if (BigInt(dist.total()) != code_size)
        throw DomainError("composition distribution total does not match the code size");
    check_params(params, dist.b);
    MultiPoly sum;
    for (const auto& [comp, count] : dist.counts) {
        MultiPoly prod = MultiPoly::constant(1);
        for (const auto& byte_comp : comp) prod = prod * cache.lee_kernel(byte_comp, ring, params.t);
        sum += prod.scaled(count);
    }
    return sum.divided_exact(code_size);
}

// ---- combinators ------------------------------------------------------------------

LinearCode combine(CombineKind kind, const LinearCode& c, const LinearCode& d, uint64_t budget) {
    if (c.ring().spec() != d.ring().spec() || c.byte_len() != d.byte_len())
        throw DomainError("combine needs codes over the same ring and byte length");
    const BigInt pairs = BigInt(c.size()) * d.size();
    if (pairs > budget)
        throw BudgetError("combining " + pairs.str() + " codeword pairs exceeds the budget",
                          pairs.str());
    const uint32_t b = c.byte_len();
    const uint32_t nc = c.byte_count(), nd = d.byte_count();

    std::vector<LinearCode::Word> words;
    words.reserve(static_cast<size_t>(c.size() * d.size()));
    if (kind == CombineKind::DirectSum) {
        for (const auto& u : c.codewords()) {
            for (const auto& v : d.codewords()) {
                LinearCode::Word w;
                w.reserve(u.size() + v.size());
                w.insert(w.end(), u.begin(), u.end());
                w.insert(w.end(), v.begin(), v.end());
                words.push_back(std::move(w));
            }
        }
    } else {
        if (nc != nd || nc % 2 != 0)
            throw DomainError("parallel concatenation needs equal even byte counts");
        const size_t half = size_t(nc / 2) * b;
        for (const auto& u : c.codewords()) {
            for (const auto& v : d.codewords()) {
                LinearCode::Word w;
                w.reserve(2 * u.size());
                w.insert(w.end(), u.begin(), u.begin() + half);
                w.insert(w.end(), v.begin(), v.begin() + half);
                w.insert(w.end(), u.begin() + half, u.end());
                w.insert(w.end(), v.begin() + half, v.end());
                words.push_back(std::move(w));
            }
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return LinearCode::from_parts(c.ring_ptr(), b, nc + nd, {}, std::move(words));
}

}  // namespace mspotty
