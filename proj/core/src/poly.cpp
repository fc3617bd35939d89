#include "mspotty/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "mspotty/errors.hpp"

namespace mspotty {

std::string Var::name() const {
    if (code == 0) return "z";
    if (code == 1) return "x";
    if (code == 2) return "y";
    const uint32_t i = (code - 1) / 2;
    return (code % 2 ? "x" : "y") + std::to_string(i);
}

std::optional<Var> Var::parse(std::string_view s) {
    if (s == "z") return Var::z();
    if (s == "x") return Var::x();
    if (s == "y") return Var::y();
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
        uint32_t i = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), i);
        if (ec == std::errc() && ptr == s.data() + s.size() && i >= 1)
            return s[0] == 'x' ? Var::xi(i) : Var::yi(i);
    }
    return std::nullopt;
}

uint64_t total_degree(const Monomial& m) {
    uint64_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // walk both sorted exponent lists; at the first differing variable the
    // monomial with the higher exponent comes first
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const uint32_t ca = i < a.size() ? a[i].first.code : UINT32_MAX;
        const uint32_t cb = j < b.size() ? b[j].first.code : UINT32_MAX;
        if (ca < cb) return true;   // a has positive exponent where b has 0
        if (cb < ca) return false;
        if (ca == UINT32_MAX) break;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return false;
}

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    p.add_term({}, std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(Var v, uint32_t exp) {
    MultiPoly p;
    if (exp == 0) return constant(1);
    p.add_term({{v, exp}}, 1);
    return p;
}

uint64_t MultiPoly::degree() const {
    uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

BigInt MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(Monomial m, BigInt c) {
    if (c == 0) return;
    std::sort(m.begin(), m.end());
    // try_emplace leaves c untouched when the monomial already exists
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
                    m.push_back(ma[i++]);
                } else if (i == ma.size() || mb[j].first < ma[i].first) {
                    m.push_back(mb[j++]);
                } else {
                    m.emplace_back(ma[i].first, ma[i].second + mb[j].second);
                    ++i;
                    ++j;
                }
            }
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
    MultiPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::divided_exact(const BigInt& d) const {
    if (d == 0) throw IntegralityError("division by zero");
    MultiPoly r;
    for (const auto& [m, k] : terms_) {
        BigInt q = k / d;
        if (q * d != k)
            throw IntegralityError("coefficient " + k.str() + " is not divisible by " + d.str());
        if (q != 0) r.terms_.emplace(m, std::move(q));
    }
    return r;
}

MultiPoly MultiPoly::evaluate(const Subst& assignment) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        BigInt coeff = c;
        Monomial out;
        bool vanished = false;
        for (const auto& [v, e] : m) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                out.emplace_back(v, e);
            } else if (std::holds_alternative<Var>(it->second)) {
                out.emplace_back(std::get<Var>(it->second), e);
            } else {
                const BigInt& val = std::get<BigInt>(it->second);
                if (val == 0) {
                    vanished = true;
                    break;
                }
                coeff *= ipow(val, e);
            }
        }
        if (vanished) continue;
        // renaming can merge variables: combine duplicate entries
        std::sort(out.begin(), out.end());
        Monomial merged;
        for (const auto& [v, e] : out) {
            if (!merged.empty() && merged.back().first == v)
                merged.back().second += e;
            else
                merged.emplace_back(v, e);
        }
        r.add_term(std::move(merged), std::move(coeff));
    }
    return r;
}

BigInt MultiPoly::value_at_ones() const {
    BigInt s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const BigInt mag = negative ? BigInt(-c) : c;
        if (m.empty()) {
            os << mag.str();
        } else {
            std::string vars;
            for (const auto& [v, e] : m) {
                if (!vars.empty()) vars += ' ';
                vars += v.name();
                if (e != 1) vars += "^" + std::to_string(e);
            }
            if (mag != 1) os << mag.str() << ' ';
            os << vars;
        }
    }
    return os.str();
}

namespace {

struct TextParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }

    BigInt parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("expected integer in polynomial text");
        return BigInt(std::string(s.substr(start, pos - start)));
    }

    std::optional<std::pair<Var, uint32_t>> parse_var_power() {
        skip_ws();
        if (pos >= s.size()) return std::nullopt;
        char c = s[pos];
        if (c != 'x' && c != 'y' && c != 'z') return std::nullopt;
        size_t start = pos++;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        auto v = Var::parse(s.substr(start, pos - start));
        if (!v) throw ParseError("unknown variable in polynomial text");
        uint32_t exp = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            BigInt e = parse_uint();
            exp = static_cast<uint32_t>(e);
        }
        return std::make_pair(*v, exp);
    }

    MultiPoly run() {
        MultiPoly p;
        bool negative = false;
        skip_ws();
        if (!done() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos;
        }
        while (true) {
            skip_ws();
            if (done()) throw ParseError("dangling sign in polynomial text");
            BigInt coeff = 1;
            bool saw_any = false;
            if (peek() >= '0' && peek() <= '9') {
                coeff = parse_uint();
                saw_any = true;
            }
            Monomial m;
            while (auto vp = parse_var_power()) {
                saw_any = true;
                m.push_back(*vp);
            }
            if (!saw_any) throw ParseError("expected a term in polynomial text");
            p.add_term(std::move(m), negative ? -coeff : coeff);
            if (done()) break;
            char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected + or - in polynomial text");
            negative = op == '-';
            ++pos;
        }
        return p;
    }
};

}  // namespace

MultiPoly MultiPoly::parse_text(std::string_view text) {
    TextParser parser{text};
    if (parser.done()) throw ParseError("empty polynomial text");
    // "0" parses to the zero polynomial through the normal path (coeff 0)
    return parser.run();
}

std::string MultiPoly::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : m) exps[v.name()] = e;
        arr.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return arr.dump();
}

MultiPoly MultiPoly::from_json_string(std::string_view json) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("polynomial JSON must be an array of terms");
    MultiPoly p;
    for (const auto& term : arr) {
        if (!term.contains("coeff") || !term.contains("exps"))
            throw ParseError("polynomial JSON term needs 'coeff' and 'exps'");
        BigInt c(term["coeff"].get<std::string>());
        Monomial m;
        for (const auto& [name, e] : term["exps"].items()) {
            auto v = Var::parse(name);
            if (!v) throw ParseError("unknown variable '" + name + "' in polynomial JSON");
            uint32_t exp = e.get<uint32_t>();
            if (exp > 0) m.emplace_back(*v, exp);
        }
        p.add_term(std::move(m), std::move(c));
    }
    return p;
}

}  // namespace mspotty
