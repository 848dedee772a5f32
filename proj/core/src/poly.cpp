#include "virg/poly.hpp"

#include "virg/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace virg {

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::degree() const {
    unsigned total = 0;
    for (auto e : exp) {
        total += e;
    }
    return total;
}

bool Monomial::is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](std::uint16_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (exp[i] > other.exp[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        out.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
    }
    return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial out;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        out.exp[i] = static_cast<std::uint16_t>(other.exp[i] - exp[i]);
    }
    return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) {
        return da < db ? -1 : 1;
    }
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (a.exp[i] != b.exp[i]) {
            return a.exp[i] < b.exp[i] ? -1 : 1;
        }
    }
    return 0;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) {
    return grlex_compare(a.mono, b.mono) > 0;
}

} // namespace

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables) {
        throw DomainError("too many indeterminates (limit " + std::to_string(kMaxVariables) + ")");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw DomainError("duplicate indeterminate name '" + names_[i] + "'");
            }
        }
    }
}

Ring Ring::standard(const std::vector<std::string>& generator_names) {
    std::vector<std::string> names = generator_names;
    for (const char* extra : {"alpha", "beta", "c", "h"}) {
        names.emplace_back(extra);
    }
    return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Ring::intern(std::string_view name) {
    if (auto idx = index_of(name)) {
        return *idx;
    }
    if (names_.size() >= kMaxVariables) {
        throw DomainError("too many indeterminates (limit " + std::to_string(kMaxVariables) + ")");
    }
    names_.emplace_back(name);
    return names_.size() - 1;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& constant) {
    if (sgn(constant) != 0) {
        terms_.push_back(Term{Monomial{}, constant});
    }
}

Poly Poly::variable(std::size_t index) {
    if (index >= kMaxVariables) {
        throw DomainError("variable slot out of range");
    }
    Monomial m;
    m.exp[index] = 1;
    return Poly(std::vector<Term>{Term{m, Rational(1)}});
}

Poly Poly::monomial(const Monomial& mono, const Rational& coeff) {
    if (sgn(coeff) == 0) {
        return Poly();
    }
    return Poly(std::vector<Term>{Term{mono, coeff}});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), grlex_greater);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && sgn(out.back().coeff) == 0) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) {
        out.pop_back();
    }
    return Poly(std::move(out));
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) {
        return terms_.back().coeff;
    }
    return Rational(0);
}

unsigned Poly::total_degree() const {
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max<unsigned>(d, t.mono.exp[var]);
    }
    return d;
}

std::optional<std::size_t> Poly::max_variable() const {
    std::optional<std::size_t> best;
    for (const auto& t : terms_) {
        for (std::size_t i = kMaxVariables; i-- > 0;) {
            if (t.mono.exp[i] != 0) {
                if (!best || i > *best) {
                    best = i;
                }
                break;
            }
        }
    }
    return best;
}

Poly Poly::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.coeff = -t.coeff;
    }
    return Poly(std::move(out));
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size()) {
            cmp = -1;
        } else if (j == b.size()) {
            cmp = 1;
        } else {
            cmp = grlex_compare(a[i].mono, b[j].mono);
        }
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(b[j++]);
            if (subtract) {
                out.back().coeff = -out.back().coeff;
            }
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (sgn(c) != 0) {
                out.push_back(Term{a[i].mono, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly Poly::operator+(const Poly& rhs) const {
    return Poly(merge_add(terms_, rhs.terms_, false));
}

Poly Poly::operator-(const Poly& rhs) const {
    return Poly(merge_add(terms_, rhs.terms_, true));
}

Poly Poly::operator*(const Poly& rhs) const {
    if (terms_.empty() || rhs.terms_.empty()) {
        return Poly();
    }
    if (rhs.terms_.size() == 1) {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.push_back(Term{t.mono * rhs.terms_[0].mono, t.coeff * rhs.terms_[0].coeff});
        }
        return Poly(std::move(out));
    }
    if (terms_.size() == 1) {
        return rhs * *this;
    }
    std::vector<Term> all;
    all.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            all.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
        }
    }
    return from_terms(std::move(all));
}

Poly Poly::scaled(const Rational& factor) const {
    if (sgn(factor) == 0) {
        return Poly();
    }
    std::vector<Term> out = terms_;
    for (auto& t : out) {
        t.coeff *= factor;
    }
    return Poly(std::move(out));
}

Poly Poly::pow(unsigned exponent) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<Poly> Poly::try_div(const Poly& divisor) const {
    if (divisor.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    if (is_zero()) {
        return Poly();
    }
    if (divisor.is_constant()) {
        Rational inv = 1 / divisor.leading_coeff();
        return scaled(inv);
    }
    const Term& lead = divisor.leading_term();
    if (divisor.is_monomial()) {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!lead.mono.divides(t.mono)) {
                return std::nullopt;
            }
            out.push_back(Term{lead.mono.quotient_of(t.mono), t.coeff / lead.coeff});
        }
        return Poly(std::move(out));
    }
    std::vector<Term> quotient;
    Poly rem = *this;
    while (!rem.is_zero()) {
        const Term& top = rem.leading_term();
        if (!lead.mono.divides(top.mono) || top.mono.degree() < lead.mono.degree()) {
            return std::nullopt;
        }
        Term q{lead.mono.quotient_of(top.mono), top.coeff / lead.coeff};
        rem -= divisor * Poly::monomial(q.mono, q.coeff);
        quotient.push_back(std::move(q));
    }
    return from_terms(std::move(quotient));
}

Poly Poly::exact_div(const Poly& divisor) const {
    auto q = try_div(divisor);
    if (!q) {
        throw ArithmeticError("polynomial division is not exact");
    }
    return std::move(*q);
}

Poly Poly::monic() const {
    if (terms_.empty()) {
        return *this;
    }
    if (terms_.front().coeff == 1) {
        return *this;
    }
    return scaled(1 / terms_.front().coeff);
}

Poly Poly::substitute(std::size_t var, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt = t;
        const unsigned e = nt.mono.exp[var];
        nt.mono.exp[var] = 0;
        if (e > 0) {
            Rational p(1);
            for (unsigned k = 0; k < e; ++k) {
                p *= value;
            }
            nt.coeff *= p;
        }
        if (sgn(nt.coeff) != 0) {
            out.push_back(std::move(nt));
        }
    }
    return from_terms(std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational p = t.coeff;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            for (unsigned k = 0; k < t.mono.exp[i]; ++k) {
                if (i >= point.size()) {
                    throw DomainError("evaluation point is missing a coordinate");
                }
                p *= point[i];
            }
        }
        sum += p;
    }
    return sum;
}

std::string Poly::to_string(const Ring& ring) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rational& c = it->coeff;
        const bool negative = sgn(c) < 0;
        if (negative) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        const Rational magnitude = abs(c);
        const bool unit = it->mono.is_one();
        bool need_star = false;
        if (unit || magnitude != 1) {
            os << magnitude.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            const unsigned e = it->mono.exp[i];
            if (e == 0) {
                continue;
            }
            if (need_star) {
                os << '*';
            }
            os << (i < ring.size() ? ring.name(i) : "x" + std::to_string(i));
            if (e > 1) {
                os << '^' << e;
            }
            need_star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Univariate views and gcd

std::vector<Poly> coefficients_in(const Poly& p, std::size_t var) {
    const unsigned deg = p.degree_in(var);
    std::vector<std::vector<Term>> buckets(deg + 1);
    for (const auto& t : p.terms()) {
        Term nt = t;
        const unsigned e = nt.mono.exp[var];
        nt.mono.exp[var] = 0;
        buckets[e].push_back(std::move(nt));
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        out.push_back(Poly::from_terms(std::move(b)));
    }
    return out;
}

Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var) {
    std::vector<Term> all;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        for (const auto& t : coeffs[e].terms()) {
            Term nt = t;
            nt.mono.exp[var] = static_cast<std::uint16_t>(nt.mono.exp[var] + e);
            all.push_back(std::move(nt));
        }
    }
    return Poly::from_terms(std::move(all));
}

namespace {

using UniPoly = std::vector<Poly>;

void trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

Poly monomial_gcd(const Poly& mono, const Poly& other) {
    Monomial m = mono.leading_term().mono;
    for (const auto& t : other.terms()) {
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
        }
    }
    return Poly::monomial(m, Rational(1));
}

Poly content(const UniPoly& p) {
    Poly g;
    for (const auto& c : p) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) {
            break;
        }
    }
    return g;
}

UniPoly divide_all(const UniPoly& p, const Poly& divisor) {
    UniPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        out.push_back(c.exact_div(divisor));
    }
    return out;
}

// Scales p to integer coefficients with gcd 1 and positive leading coefficient.
UniPoly numeric_normalize(UniPoly p) {
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : p) {
        for (const auto& t : c.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
    }
    if (num_gcd == 0) {
        return p;
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (!p.empty() && p.back().leading_coeff() < 0) {
        factor = -factor;
    }
    if (factor == 1) {
        return p;
    }
    for (auto& c : p) {
        c = c.scaled(factor);
    }
    return p;
}

UniPoly primitive_part(const UniPoly& p) {
    Poly c = content(p);
    if (c.is_constant()) {
        return numeric_normalize(p);
    }
    return numeric_normalize(divide_all(p, c));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_remainder(UniPoly a, const UniPoly& b) {
    const std::size_t db = b.size() - 1;
    const Poly& lcb = b.back();
    int missing = static_cast<int>(a.size()) - static_cast<int>(db);
    trim(a);
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const Poly lca = a.back();
        for (auto& c : a) {
            c *= lcb;
        }
        for (std::size_t k = 0; k <= db; ++k) {
            a[k + shift] -= lca * b[k];
        }
        --missing;
        trim(a);
    }
    if (missing > 0) {
        Poly factor = lcb.pow(static_cast<unsigned>(missing));
        for (auto& c : a) {
            c *= factor;
        }
    }
    return a;
}

} // namespace

namespace {

std::array<bool, kMaxVariables> occurring(const Poly& p) {
    std::array<bool, kMaxVariables> out{};
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            out[i] = out[i] || t.mono.exp[i] != 0;
        }
    }
    return out;
}

// gcd of target with every coefficient of p in var.
Poly gcd_with_coefficients(const Poly& p, std::size_t var, Poly target) {
    for (const auto& c : coefficients_in(p, var)) {
        if (c.is_zero()) {
            continue;
        }
        target = gcd(target, c);
        if (target.is_constant()) {
            break;
        }
    }
    return target;
}

// Univariate image of p in var after substituting fixed integers for every other slot.
std::vector<Rational> univariate_image(const Poly& p, std::size_t var) {
    std::vector<Rational> out(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (i == var || t.mono.exp[i] == 0) {
                continue;
            }
            Rational base(static_cast<long>(7 + 13 * i + i * i));
            Rational pw = 1;
            for (unsigned e = 0; e < t.mono.exp[i]; ++e) {
                pw *= base;
            }
            v *= pw;
        }
        out[t.mono.exp[var]] += v;
    }
    return out;
}

// Degree of the gcd of two univariate polynomials over Q.
std::size_t univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim_q = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) {
            v.pop_back();
        }
    };
    trim_q(a);
    trim_q(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            const Rational f = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) {
                a[k + shift] -= f * b[k];
            }
            trim_q(a);
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

} // namespace

namespace {

// Heuristic gcd over Z: evaluate the main variable at a large integer, recurse,
// and rebuild by symmetric xi-adic expansion. Inputs and results have integer
// coefficients. Returns nullopt when the heuristic gives up.
Integer max_norm(const Poly& p) {
    Integer m = 0;
    for (const auto& t : p.terms()) {
        Integer v = abs(t.coeff.get_num());
        if (v > m) {
            m = v;
        }
    }
    return m;
}

Integer integer_content(const Poly& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    return g;
}

Poly evaluate_at(const Poly& p, std::size_t var, const Integer& xi) {
    std::vector<Term> out;
    out.reserve(p.size());
    std::vector<Integer> powers{Integer(1)};
    for (const auto& t : p.terms()) {
        const unsigned e = t.mono.exp[var];
        while (powers.size() <= e) {
            powers.push_back(powers.back() * xi);
        }
        Term nt = t;
        nt.mono.exp[var] = 0;
        nt.coeff *= powers[e];
        out.push_back(std::move(nt));
    }
    return Poly::from_terms(std::move(out));
}

Poly interpolate(Poly h, std::size_t var, const Integer& xi) {
    const Integer half = xi / 2;
    std::vector<Term> out;
    std::uint16_t power = 0;
    while (!h.is_zero()) {
        std::vector<Term> digit;
        for (const auto& t : h.terms()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
            if (r > half) {
                r -= xi;
            }
            if (r != 0) {
                digit.push_back(Term{t.mono, Rational(r)});
            }
        }
        Poly d = Poly::from_terms(digit);
        h = (h - d).scaled(Rational(Integer(1), xi));
        for (auto& t : digit) {
            t.mono.exp[var] = static_cast<std::uint16_t>(t.mono.exp[var] + power);
            out.push_back(std::move(t));
        }
        ++power;
        if (power > 4096) {
            break;
        }
    }
    return Poly::from_terms(std::move(out));
}

Poly integer_primitive(const Poly& p) {
    if (p.is_zero()) {
        return p;
    }
    Integer c = integer_content(p);
    if (p.leading_coeff() < 0) {
        c = -c;
    }
    Rational inv(Integer(1), c);
    inv.canonicalize();
    return c == 1 ? p : p.scaled(inv);
}

std::optional<Poly> heuristic_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) {
        return g.is_zero() ? g : integer_primitive(g).scaled(Rational(integer_content(g)));
    }
    if (g.is_zero()) {
        return integer_primitive(f).scaled(Rational(integer_content(f)));
    }
    const Integer cf = integer_content(f);
    const Integer cg = integer_content(g);
    Integer common;
    mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    if (f.is_constant() || g.is_constant()) {
        return Poly(Rational(common));
    }
    const Poly ff = f.scaled(Rational(Integer(1), common));
    const Poly gg = g.scaled(Rational(Integer(1), common));
    const std::size_t var = std::max(ff.max_variable().value_or(0), gg.max_variable().value_or(0));

    const Integer nf = max_norm(ff);
    const Integer ng = max_norm(gg);
    const Integer bound = std::min(nf, ng);
    Integer xi = 2 * bound + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 4000) {
            return std::nullopt;
        }
        const Poly ef = evaluate_at(ff, var, xi);
        const Poly eg = evaluate_at(gg, var, xi);
        if (!ef.is_zero() && !eg.is_zero()) {
            if (auto h = heuristic_gcd(ef, eg)) {
                const Poly cand = integer_primitive(interpolate(*h, var, xi));
                if (!cand.is_zero() && ff.try_div(cand) && gg.try_div(cand)) {
                    return cand.scaled(Rational(common));
                }
            }
        }
        // Next evaluation point, growing roughly like xi^(5/4).
        Integer root;
        mpz_root(root.get_mpz_t(), xi.get_mpz_t(), 4);
        xi = xi * root * 73794 / 27011 + 1;
    }
    return std::nullopt;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return Poly(Rational(1));
    }
    if (a.is_monomial()) {
        return monomial_gcd(a, b);
    }
    if (b.is_monomial()) {
        return monomial_gcd(b, a);
    }
    if (a == b) {
        return a.monic();
    }
    {
        const UniPoly pa = numeric_normalize(UniPoly{a});
        const UniPoly pb = numeric_normalize(UniPoly{b});
        if (auto h = heuristic_gcd(pa.front(), pb.front())) {
            return h->monic();
        }
    }
    const auto in_a = occurring(a);
    const auto in_b = occurring(b);
    // A variable missing from one side cannot occur in the gcd.
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (in_a[i] && !in_b[i]) {
            return gcd_with_coefficients(a, i, b);
        }
        if (in_b[i] && !in_a[i]) {
            return gcd_with_coefficients(b, i, a);
        }
    }
    std::size_t var = kMaxVariables;
    unsigned best = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
        if (!in_a[i]) {
            continue;
        }
        const unsigned d = std::max(a.degree_in(i), b.degree_in(i));
        if (var == kMaxVariables || d < best) {
            var = i;
            best = d;
        }
    }
    UniPoly ua = coefficients_in(a, var);
    UniPoly ub = coefficients_in(b, var);
    const Poly ca = content(ua);
    const Poly cb = content(ub);
    const Poly common = gcd(ca, cb);
    ua = numeric_normalize(divide_all(ua, ca));
    ub = numeric_normalize(divide_all(ub, cb));
    // When the leading coefficients survive evaluation, the image gcd bounds the degree in var.
    const auto ia = univariate_image(from_coefficients(ua, var), var);
    const auto ib = univariate_image(from_coefficients(ub, var), var);
    if (ia.back() != 0 && ib.back() != 0 && univariate_gcd_degree(ia, ib) == 0) {
        return common;
    }
    if (ua.size() < ub.size()) {
        std::swap(ua, ub);
    }
    while (true) {
        UniPoly r = pseudo_remainder(ua, ub);
        if (r.empty()) {
            break;
        }
        if (r.size() == 1) {
            return common;
        }
        ua = std::move(ub);
        ub = primitive_part(r);
    }
    Poly g = from_coefficients(primitive_part(ub), var);
    return (common * g).monic();
}

std::size_t hash_value(const Poly& p) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& t : p.terms()) {
        for (auto e : t.mono.exp) {
            mix(e);
        }
        mix(static_cast<std::size_t>(mpz_get_si(t.coeff.get_num_mpz_t())));
        mix(static_cast<std::size_t>(mpz_get_si(t.coeff.get_den_mpz_t())));
    }
    return h;
}

} // namespace virg
