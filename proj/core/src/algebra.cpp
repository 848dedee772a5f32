#include "virg/algebra.hpp"

#include "virg/error.hpp"
#include "virg/parse.hpp"

#include <deque>
#include <sstream>

namespace virg {

AlgebraElement AlgebraElement::d(const GroupElement& x, const Scalar& coeff) {
    AlgebraElement a;
    a.add_d(x, coeff);
    return a;
}

AlgebraElement AlgebraElement::central(const Scalar& coeff) {
    AlgebraElement a;
    a.c_coeff_ = coeff;
    return a;
}

void AlgebraElement::add_d(const GroupElement& x, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = d_terms_.try_emplace(x, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            d_terms_.erase(it);
        }
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    AlgebraElement out = *this;
    for (const auto& [x, s] : rhs.d_terms_) {
        out.add_d(x, s);
    }
    out.c_coeff_ += rhs.c_coeff_;
    return out;
}

AlgebraElement AlgebraElement::operator-() const {
    return scaled(Scalar(-1L));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    return *this + (-rhs);
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
    AlgebraElement out;
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [x, c] : d_terms_) {
        out.add_d(x, c * s);
    }
    out.c_coeff_ = c_coeff_ * s;
    return out;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Scalar& coeff, const std::string& symbol,
                 const Ring& ring) {
    std::string text = coeff.to_string(ring);
    const bool single_term = coeff.is_polynomial() && coeff.num().size() == 1;
    if (coeff.is_one()) {
        text.clear();
    } else if (coeff == Scalar(-1L)) {
        text = "-";
    } else if (!single_term) {
        text = "(" + text + ")*";
    } else {
        text += "*";
    }
    if (!first && (text.empty() || text.front() != '-')) {
        os << '+';
    }
    os << text << symbol;
    first = false;
}

} // namespace

std::string AlgebraElement::to_string(const Ring& ring) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : d_terms_) {
        append_term(os, first, c, "d" + x.to_string(), ring);
    }
    if (!c_coeff_.is_zero()) {
        append_term(os, first, c_coeff_, "C", ring);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Scalar VirasoroAlgebra::central_term(const GroupElement& x) const {
    const Scalar ix = group_.embed(x);
    return (ix * ix * ix - ix) / Scalar(12L);
}

AlgebraElement VirasoroAlgebra::bracket_basis(const GroupElement& x, const GroupElement& y) const {
    group_.check(x);
    group_.check(y);
    AlgebraElement out = AlgebraElement::d(x + y, group_.embed(y) - group_.embed(x));
    if ((x + y).is_zero()) {
        out += AlgebraElement::central(central_term(x));
    }
    return out;
}

AlgebraElement VirasoroAlgebra::bracket(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [x, cx] : a.d_terms()) {
        for (const auto& [y, cy] : b.d_terms()) {
            out += bracket_basis(x, y).scaled(cx * cy);
        }
    }
    return out;
}

Weight weight_of(const AlgebraElement& a, std::size_t rank) {
    const auto& terms = a.d_terms();
    if (terms.empty()) {
        return GroupElement::zero(rank);
    }
    if (terms.size() > 1) {
        return MixedWeight{};
    }
    const GroupElement& x = terms.begin()->first;
    if (!a.c_coeff().is_zero() && !x.is_zero()) {
        return MixedWeight{};
    }
    return x;
}

// ---------------------------------------------------------------------------

std::string EnvelopingMonomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        if (!first) {
            os << '*';
        }
        os << 'd' << f.to_string();
        first = false;
    }
    for (unsigned k = 0; k < c_power; ++k) {
        if (!first) {
            os << '*';
        }
        os << 'C';
        first = false;
    }
    if (first) {
        os << '1';
    }
    return os.str();
}

std::string to_string(const EnvelopingElement& e, const Ring& ring) {
    if (e.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : e) {
        append_term(os, first, coeff, mono.to_string(), ring);
    }
    return os.str();
}

namespace {

struct Word {
    std::vector<GroupElement> factors;
    unsigned c_power = 0;
};

void accumulate(EnvelopingElement& out, EnvelopingMonomial mono, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = out.try_emplace(std::move(mono), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            out.erase(it);
        }
    }
}

} // namespace

EnvelopingElement pbw_normalize(const VirasoroAlgebra& algebra, const std::vector<BasisSymbol>& word,
                                const TotalOrder& order, RewriteStrategy strategy) {
    Word start;
    for (const auto& sym : word) {
        if (sym.is_central) {
            ++start.c_power;
        } else {
            algebra.group().check(sym.index);
            start.factors.push_back(sym.index);
        }
    }
    EnvelopingElement out;
    std::deque<std::pair<Word, Scalar>> work;
    work.emplace_back(std::move(start), Scalar(1L));
    while (!work.empty()) {
        auto [w, coeff] = std::move(work.front());
        work.pop_front();
        // Locate an adjacent inversion according to the strategy.
        std::optional<std::size_t> at;
        const std::size_t n = w.factors.size();
        for (std::size_t s = 0; s + 1 < n; ++s) {
            const std::size_t i = strategy == RewriteStrategy::leftmost_inversion ? s : n - 2 - s;
            if (order.compare(w.factors[i], w.factors[i + 1]) > 0) {
                at = i;
                break;
            }
        }
        if (!at) {
            accumulate(out, EnvelopingMonomial{w.factors, w.c_power}, coeff);
            continue;
        }
        const std::size_t i = *at;
        const GroupElement x = w.factors[i];
        const GroupElement y = w.factors[i + 1];
        // d_x d_y = d_y d_x + [d_x, d_y]
        Word swapped = w;
        std::swap(swapped.factors[i], swapped.factors[i + 1]);
        work.emplace_back(std::move(swapped), coeff);

        const AlgebraElement br = algebra.bracket_basis(x, y);
        for (const auto& [z, cz] : br.d_terms()) {
            Word reduced;
            reduced.c_power = w.c_power;
            reduced.factors.assign(w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(i));
            reduced.factors.push_back(z);
            reduced.factors.insert(reduced.factors.end(),
                                   w.factors.begin() + static_cast<std::ptrdiff_t>(i + 2), w.factors.end());
            work.emplace_back(std::move(reduced), coeff * cz);
        }
        if (!br.c_coeff().is_zero()) {
            Word reduced;
            reduced.c_power = w.c_power + 1;
            reduced.factors.assign(w.factors.begin(), w.factors.begin() + static_cast<std::ptrdiff_t>(i));
            reduced.factors.insert(reduced.factors.end(),
                                   w.factors.begin() + static_cast<std::ptrdiff_t>(i + 2), w.factors.end());
            work.emplace_back(std::move(reduced), coeff * br.c_coeff());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

TriangularPart TriangularPart::plus(TotalOrder order) {
    TriangularPart p;
    p.selector_ = PartSelector::plus;
    p.order_ = std::move(order);
    return p;
}

TriangularPart TriangularPart::minus(TotalOrder order) {
    TriangularPart p;
    p.selector_ = PartSelector::minus;
    p.order_ = std::move(order);
    return p;
}

TriangularPart TriangularPart::plus_level(Splitting splitting) {
    TriangularPart p;
    p.selector_ = PartSelector::plus_level;
    p.splitting_ = std::move(splitting);
    return p;
}

TriangularPart TriangularPart::strict_plus_level(Splitting splitting) {
    TriangularPart p;
    p.selector_ = PartSelector::strict_plus_level;
    p.splitting_ = std::move(splitting);
    return p;
}

bool TriangularPart::contains(const GroupElement& x) const {
    switch (selector_) {
    case PartSelector::plus:
        return order_->is_positive(x);
    case PartSelector::minus:
        return order_->is_negative(x);
    case PartSelector::plus_level:
        return splitting_->decompose(x).k >= 0;
    case PartSelector::strict_plus_level:
        return splitting_->decompose(x).k >= 1;
    }
    return false;
}

bool part_membership(const GroupElement& x, const TriangularPart& part) {
    return part.contains(x);
}

// ---------------------------------------------------------------------------

namespace {

using ParsedValue = std::variant<Scalar, AlgebraElement>;

struct AlgebraParser {
    TokenCursor& cur;
    const Group& group;
    const Ring& ring;

    ParsedValue multiply(const ParsedValue& a, const ParsedValue& b) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            return std::get<Scalar>(a) * std::get<Scalar>(b);
        }
        if (std::holds_alternative<Scalar>(a)) {
            return std::get<AlgebraElement>(b).scaled(std::get<Scalar>(a));
        }
        if (std::holds_alternative<Scalar>(b)) {
            return std::get<AlgebraElement>(a).scaled(std::get<Scalar>(b));
        }
        cur.fail("product of two algebra elements is not an algebra element");
    }

    ParsedValue add(const ParsedValue& a, const ParsedValue& b, bool subtract) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            return subtract ? std::get<Scalar>(a) - std::get<Scalar>(b) : std::get<Scalar>(a) + std::get<Scalar>(b);
        }
        auto as_element = [this](const ParsedValue& v) -> AlgebraElement {
            if (std::holds_alternative<Scalar>(v)) {
                if (std::get<Scalar>(v).is_zero()) {
                    return AlgebraElement();
                }
                cur.fail("cannot add a scalar to an algebra element");
            }
            return std::get<AlgebraElement>(v);
        };
        const AlgebraElement lhs = as_element(a);
        const AlgebraElement rhs = as_element(b);
        return subtract ? lhs - rhs : lhs + rhs;
    }

    ParsedValue atom() {
        const Token& tok = cur.peek();
        if (tok.kind == TokenKind::identifier && tok.text == "d") {
            cur.next();
            GroupElement x(parse_integer_tuple(cur));
            if (x.rank() != group.rank()) {
                cur.fail("index " + x.to_string() + " does not match the group rank");
            }
            return AlgebraElement::d(x);
        }
        if (tok.kind == TokenKind::identifier && tok.text == "C") {
            cur.next();
            return AlgebraElement::central();
        }
        if (cur.accept('(')) {
            ParsedValue v = sum();
            cur.expect(')');
            return v;
        }
        if (tok.kind == TokenKind::number) {
            return Scalar(Rational(Integer(cur.next().text)));
        }
        if (tok.kind == TokenKind::identifier) {
            auto idx = ring.index_of(tok.text);
            if (!idx) {
                cur.fail("unknown symbol '" + tok.text + "'");
            }
            cur.next();
            return Scalar::variable(*idx);
        }
        cur.fail("expected d[...], C, a number, a symbol or '('");
    }

    ParsedValue power() {
        ParsedValue base = atom();
        if (cur.accept('^')) {
            if (!std::holds_alternative<Scalar>(base) || cur.peek().kind != TokenKind::number) {
                cur.fail("only scalars can be raised to integer powers");
            }
            const unsigned long e = std::stoul(cur.next().text);
            Scalar r(1L);
            for (unsigned long k = 0; k < e; ++k) {
                r *= std::get<Scalar>(base);
            }
            return r;
        }
        return base;
    }

    ParsedValue unary() {
        if (cur.accept('-')) {
            return multiply(Scalar(-1L), unary());
        }
        if (cur.accept('+')) {
            return unary();
        }
        return power();
    }

    ParsedValue product() {
        ParsedValue acc = unary();
        while (true) {
            if (cur.accept('*')) {
                acc = multiply(acc, unary());
            } else if (cur.accept('/')) {
                ParsedValue d = unary();
                if (!std::holds_alternative<Scalar>(d)) {
                    cur.fail("can only divide by scalars");
                }
                if (std::get<Scalar>(d).is_zero()) {
                    throw ArithmeticError("division by zero in expression");
                }
                acc = multiply(acc, std::get<Scalar>(d).inv());
            } else {
                return acc;
            }
        }
    }

    ParsedValue sum() {
        ParsedValue acc = product();
        while (true) {
            if (cur.accept('+')) {
                acc = add(acc, product(), false);
            } else if (cur.accept('-')) {
                acc = add(acc, product(), true);
            } else {
                return acc;
            }
        }
    }
};

} // namespace

AlgebraElement parse_algebra_element(std::string_view text, const Group& group, const Ring& ring) {
    TokenCursor cur(text, tokenize(text));
    if (cur.at_end()) {
        cur.fail("empty algebra element");
    }
    AlgebraParser parser{cur, group, ring};
    ParsedValue v = parser.sum();
    if (!cur.at_end()) {
        cur.fail("trailing input");
    }
    if (std::holds_alternative<Scalar>(v)) {
        if (std::get<Scalar>(v).is_zero()) {
            return AlgebraElement();
        }
        cur.fail("expected an algebra element, got a scalar");
    }
    return std::get<AlgebraElement>(v);
}

} // namespace virg
