#include "mspotty/ring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace mspotty {

namespace {

constexpr uint64_t kTableLimit = 256;  // build ell x ell tables up to this size

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// digits of `idx` in base p, little-endian, exactly e of them
void to_digits(uint64_t idx, uint64_t p, uint32_t e, uint32_t* out) {
    for (uint32_t i = 0; i < e; ++i) {
        out[i] = static_cast<uint32_t>(idx % p);
        idx /= p;
    }
}

uint64_t from_digits(const uint32_t* d, uint64_t p, uint32_t e) {
    uint64_t idx = 0;
    for (uint32_t i = e; i-- > 0;) idx = idx * p + d[i];
    return idx;
}

uint64_t parse_uint(std::string_view s) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("expected an unsigned integer, got '" + std::string(s) + "'");
    return v;
}

}  // namespace

Ring::Ring(const RingSpec& spec) : spec_(spec) {
    switch (spec.family) {
        case RingFamily::IntegersMod:
            if (spec.p < 2) throw ConfigError("Z_ell needs ell >= 2");
            if (spec.p > (1ull << 31)) throw ConfigError("Z_ell modulus too large");
            ell_ = spec.p;
            m_ = spec.p;
            break;
        case RingFamily::PrimeField:
            if (!is_prime(spec.p)) throw ConfigError("prime field modulus must be prime");
            if (spec.p > (1ull << 31)) throw ConfigError("prime field modulus too large");
            ell_ = spec.p;
            m_ = spec.p;
            break;
        case RingFamily::ChainRing: {
            if (!is_prime(spec.p)) throw ConfigError("chain ring base must be prime");
            if (spec.e < 1) throw ConfigError("chain ring length must be >= 1");
            uint64_t ell = 1;
            for (uint32_t i = 0; i < spec.e; ++i) {
                ell *= spec.p;
                if (ell > (1ull << 31)) throw ConfigError("chain ring too large");
            }
            ell_ = ell;
            m_ = spec.p;
            chain_e_ = spec.e;
            break;
        }
        case RingFamily::Rk:
            if (spec.e < 1 || spec.e > 4) throw ConfigError("R_k supports 1 <= k <= 4");
            rk_monomials_ = 1u << spec.e;
            ell_ = 1ull << rk_monomials_;
            m_ = 2;
            break;
    }

    if (is_rk()) {
        lee_tab_.resize(ell_);
        for (uint64_t a = 0; a < ell_; ++a)
            lee_tab_[a] = static_cast<uint8_t>(std::popcount(gray_bits(static_cast<Elem>(a))));
    }

    if (ell_ <= kTableLimit) {
        has_tables_ = false;  // fill through the closed forms below
        std::vector<Elem> add(ell_ * ell_), mul(ell_ * ell_), negt(ell_);
        for (uint64_t a = 0; a < ell_; ++a) {
            negt[a] = neg(static_cast<Elem>(a));
            for (uint64_t b = 0; b < ell_; ++b) {
                add[a * ell_ + b] = this->add(static_cast<Elem>(a), static_cast<Elem>(b));
                mul[a * ell_ + b] = this->mul(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
        add_tab_ = std::move(add);
        mul_tab_ = std::move(mul);
        neg_tab_ = std::move(negt);
        has_tables_ = true;
    }
}

Elem Ring::add(Elem a, Elem b) const {
    check(a);
    check(b);
    if (has_tables_) return add_tab_[uint64_t(a) * ell_ + b];
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField:
            return static_cast<Elem>((uint64_t(a) + b) % ell_);
        case RingFamily::ChainRing: {
            uint32_t da[64], db[64];
            to_digits(a, spec_.p, chain_e_, da);
            to_digits(b, spec_.p, chain_e_, db);
            for (uint32_t i = 0; i < chain_e_; ++i) da[i] = (da[i] + db[i]) % spec_.p;
            return static_cast<Elem>(from_digits(da, spec_.p, chain_e_));
        }
        case RingFamily::Rk:
            return a ^ b;  // characteristic 2
    }
    return 0;
}

Elem Ring::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (has_tables_) return mul_tab_[uint64_t(a) * ell_ + b];
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField:
            return static_cast<Elem>((uint64_t(a) * b) % ell_);
        case RingFamily::ChainRing: {
            uint32_t da[64], db[64], dc[64] = {};
            to_digits(a, spec_.p, chain_e_, da);
            to_digits(b, spec_.p, chain_e_, db);
            for (uint32_t i = 0; i < chain_e_; ++i)
                for (uint32_t j = 0; i + j < chain_e_; ++j)
                    dc[i + j] = static_cast<uint32_t>((dc[i + j] + uint64_t(da[i]) * db[j]) % spec_.p);
            return static_cast<Elem>(from_digits(dc, spec_.p, chain_e_));
        }
        case RingFamily::Rk: {
            // u_A * u_B = u_{A u B} when A and B are disjoint, 0 otherwise
            Elem c = 0;
            for (uint32_t s = a; s;) {
                const uint32_t sm = s & (s - 1);
                const uint32_t ma = std::countr_zero(s ^ sm);  // monomial mask index
                for (uint32_t t = b; t;) {
                    const uint32_t tm = t & (t - 1);
                    const uint32_t mb = std::countr_zero(t ^ tm);
                    if ((ma & mb) == 0) c ^= 1u << (ma | mb);
                    t = tm;
                }
                s = sm;
            }
            return c;
        }
    }
    return 0;
}

Elem Ring::neg(Elem a) const {
    check(a);
    if (has_tables_) return neg_tab_[a];
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField:
            return a == 0 ? 0 : static_cast<Elem>(ell_ - a);
        case RingFamily::ChainRing: {
            uint32_t d[64];
            to_digits(a, spec_.p, chain_e_, d);
            for (uint32_t i = 0; i < chain_e_; ++i)
                d[i] = d[i] == 0 ? 0 : static_cast<uint32_t>(spec_.p - d[i]);
            return static_cast<Elem>(from_digits(d, spec_.p, chain_e_));
        }
        case RingFamily::Rk:
            return a;
    }
    return 0;
}

uint32_t Ring::char_exponent(Elem a) const {
    check(a);
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField:
            return a;
        case RingFamily::ChainRing: {
            // exponent of the top u-coefficient; the kernel of chi then
            // contains no nonzero ideal
            uint64_t top = a;
            for (uint32_t i = 0; i + 1 < chain_e_; ++i) top /= spec_.p;
            return static_cast<uint32_t>(top % spec_.p);
        }
        case RingFamily::Rk:
            return std::popcount(a) & 1;
    }
    return 0;
}

Elem Ring::inner_product(std::span<const Elem> u, std::span<const Elem> v) const {
    if (u.size() != v.size()) throw DomainError("inner product needs equal lengths");
    Elem s = 0;
    for (size_t i = 0; i < u.size(); ++i) s = add(s, mul(u[i], v[i]));
    return s;
}

namespace {

// gray(c + d*u_k) = gray(d) || gray(c + d); width = number of index bits
uint32_t gray_rec(uint32_t v, uint32_t width) {
    if (width == 1) return v & 1;
    const uint32_t half = width >> 1;
    const uint32_t c = v & ((1u << half) - 1);
    const uint32_t d = v >> half;
    return gray_rec(d, half) | (gray_rec(c ^ d, half) << half);
}

}  // namespace

uint32_t Ring::gray_bits(Elem a) const { return gray_rec(a, rk_monomials_); }

std::vector<uint8_t> Ring::gray_map(Elem a) const {
    if (!is_rk()) throw UnsupportedError("Gray map is defined on R_k only");
    check(a);
    const uint32_t bits = gray_bits(a);
    std::vector<uint8_t> out(rk_monomials_);
    for (uint32_t i = 0; i < rk_monomials_; ++i) out[i] = (bits >> i) & 1;
    return out;
}

uint32_t Ring::lee_weight(Elem a) const {
    if (!is_rk()) throw UnsupportedError("Lee weight is defined on R_k only");
    check(a);
    return lee_tab_[a];
}

// --- element literals ----------------------------------------------------

namespace {

std::vector<std::string_view> split_plus(std::string_view s) {
    std::vector<std::string_view> parts;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+') {
            if (i == start) throw ParseError("empty term in element literal");
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace

Elem Ring::parse_element(std::string_view text) const {
    if (text.empty()) throw ParseError("empty element literal");
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField: {
            uint64_t v = parse_uint(text);
            if (v >= ell_) throw ParseError("residue out of range for " + describe());
            return static_cast<Elem>(v);
        }
        case RingFamily::ChainRing: {
            // term := coeff | u | u<exp> | coeff u | coeff u<exp>
            std::vector<uint32_t> digits(chain_e_, 0);
            for (std::string_view term : split_plus(text)) {
                size_t upos = term.find('u');
                uint64_t coeff = 1;
                uint32_t exp = 0;
                if (upos == std::string_view::npos) {
                    coeff = parse_uint(term);
                } else {
                    if (upos > 0) coeff = parse_uint(term.substr(0, upos));
                    std::string_view rest = term.substr(upos + 1);
                    exp = rest.empty() ? 1 : static_cast<uint32_t>(parse_uint(rest));
                }
                if (exp >= chain_e_ && !(coeff == 0))
                    throw ParseError("u-power out of range in '" + std::string(term) + "'");
                if (coeff >= spec_.p) throw ParseError("coefficient out of range in chain ring literal");
                if (exp < chain_e_)
                    digits[exp] = static_cast<uint32_t>((digits[exp] + coeff) % spec_.p);
            }
            uint64_t idx = 0;
            for (uint32_t i = chain_e_; i-- > 0;) idx = idx * spec_.p + digits[i];
            return static_cast<Elem>(idx);
        }
        case RingFamily::Rk: {
            const uint32_t k = spec_.e;
            Elem acc = 0;
            if (text == "0") return 0;
            for (std::string_view term : split_plus(text)) {
                uint32_t mask = 0;  // variable bitmask of the monomial
                if (term == "0") continue;
                if (term == "1") {
                    acc ^= 1u;
                    continue;
                }
                if (k <= 2 && term == "u") {
                    acc ^= 1u << 1;
                    continue;
                }
                if (k == 2 && term == "v") {
                    acc ^= 1u << 2;
                    continue;
                }
                if (k == 2 && term == "uv") {
                    acc ^= 1u << 3;
                    continue;
                }
                size_t i = 0;
                while (i < term.size()) {
                    if (term[i] != 'u') throw ParseError("bad monomial '" + std::string(term) + "'");
                    ++i;
                    size_t j = i;
                    while (j < term.size() && term[j] >= '0' && term[j] <= '9') ++j;
                    if (j == i) throw ParseError("variable index missing in '" + std::string(term) + "'");
                    uint64_t vi = parse_uint(term.substr(i, j - i));
                    if (vi < 1 || vi > k) throw ParseError("variable index out of range in '" + std::string(term) + "'");
                    uint32_t bit = 1u << (vi - 1);
                    if (mask & bit) throw ParseError("repeated variable in '" + std::string(term) + "'");
                    mask |= bit;
                    i = j;
                }
                acc ^= 1u << mask;
            }
            return acc;
        }
    }
    throw ParseError("unreachable");
}

std::string Ring::to_string(Elem a) const {
    check(a);
    switch (spec_.family) {
        case RingFamily::IntegersMod:
        case RingFamily::PrimeField:
            return std::to_string(a);
        case RingFamily::ChainRing: {
            uint32_t d[64];
            to_digits(a, spec_.p, chain_e_, d);
            std::string out;
            for (uint32_t i = 0; i < chain_e_; ++i) {
                if (d[i] == 0) continue;
                if (!out.empty()) out += '+';
                if (i == 0) {
                    out += std::to_string(d[i]);
                } else {
                    if (d[i] != 1) out += std::to_string(d[i]);
                    out += 'u';
                    if (i > 1) out += std::to_string(i);
                }
            }
            return out.empty() ? "0" : out;
        }
        case RingFamily::Rk: {
            if (a == 0) return "0";
            const uint32_t k = spec_.e;
            std::string out;
            for (uint32_t mask = 0; mask < rk_monomials_; ++mask) {
                if (!((a >> mask) & 1)) continue;
                if (!out.empty()) out += '+';
                if (mask == 0) {
                    out += '1';
                } else if (k <= 2) {
                    if (mask & 1) out += 'u';
                    if (mask & 2) out += 'v';
                } else {
                    for (uint32_t v = 0; v < k; ++v)
                        if ((mask >> v) & 1) out += "u" + std::to_string(v + 1);
                }
            }
            return out;
        }
    }
    return {};
}

std::string Ring::describe() const {
    std::ostringstream os;
    switch (spec_.family) {
        case RingFamily::IntegersMod: os << "zmod " << spec_.p; break;
        case RingFamily::PrimeField: os << "gf " << spec_.p; break;
        case RingFamily::ChainRing: os << "chain " << spec_.p << " " << spec_.e; break;
        case RingFamily::Rk: os << "rk " << spec_.e; break;
    }
    return os.str();
}

std::shared_ptr<const Ring> make_ring(const RingSpec& spec) {
    return std::make_shared<const Ring>(spec);
}

RingSpec parse_ring_spec(std::span<const std::string> tokens) {
    if (tokens.empty()) throw ParseError("missing ring family");
    const std::string& fam = tokens[0];
    auto need = [&](size_t n) {
        if (tokens.size() != n + 1)
            throw ParseError("ring family '" + fam + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (fam == "zmod") {
        need(1);
        return RingSpec::integers_mod(parse_uint(tokens[1]));
    }
    if (fam == "gf") {
        need(1);
        return RingSpec::prime_field(parse_uint(tokens[1]));
    }
    if (fam == "chain") {
        need(2);
        return RingSpec::chain_ring(parse_uint(tokens[1]), static_cast<uint32_t>(parse_uint(tokens[2])));
    }
    if (fam == "rk") {
        need(1);
        return RingSpec::rk(static_cast<uint32_t>(parse_uint(tokens[1])));
    }
    throw ParseError("unknown ring family '" + fam + "' (expected zmod, gf, chain or rk)");
}

}  // namespace mspotty
