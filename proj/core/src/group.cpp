#include "virg/group.hpp"

#include "virg/error.hpp"
#include "virg/linalg.hpp"

#include <numeric>
#include <sstream>

namespace virg {

GroupElement GroupElement::unit(std::size_t rank, std::size_t index) {
    GroupElement e = zero(rank);
    e.coords.at(index) = 1;
    return e;
}

bool GroupElement::is_zero() const {
    for (auto c : coords) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool GroupElement::is_primitive() const {
    std::int64_t g = 0;
    for (auto c : coords) {
        g = std::gcd(g, c);
    }
    return g == 1;
}

namespace {

void require_same_rank(const GroupElement& a, const GroupElement& b) {
    if (a.rank() != b.rank()) {
        throw DomainError("group elements of different rank");
    }
}

} // namespace

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
    require_same_rank(*this, rhs);
    GroupElement out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.coords[i] += rhs.coords[i];
    }
    return out;
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const {
    require_same_rank(*this, rhs);
    GroupElement out = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.coords[i] -= rhs.coords[i];
    }
    return out;
}

GroupElement GroupElement::operator-() const {
    GroupElement out = *this;
    for (auto& c : out.coords) {
        c = -c;
    }
    return out;
}

GroupElement GroupElement::operator*(std::int64_t k) const {
    GroupElement out = *this;
    for (auto& c : out.coords) {
        c *= k;
    }
    return out;
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << coords[i];
    }
    os << ']';
    return os.str();
}

std::int64_t dot(const GroupElement& a, const GroupElement& b) {
    require_same_rank(a, b);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        s += a.coords[i] * b.coords[i];
    }
    return s;
}

// ---------------------------------------------------------------------------

Group::Group(std::vector<std::string> generator_names) : names_(std::move(generator_names)) {
    if (names_.empty()) {
        throw DomainError("group rank must be at least 1");
    }
    // Ring construction validates distinctness and the slot limit.
    (void)Ring::standard(names_);
}

Group Group::with_rank(std::size_t rank) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= rank; ++i) {
        names.push_back("g" + std::to_string(i));
    }
    return Group(std::move(names));
}

void Group::check(const GroupElement& x) const {
    if (x.rank() != rank()) {
        throw DomainError("group element " + x.to_string() + " does not have rank " +
                          std::to_string(rank()));
    }
}

Scalar Group::embed(const GroupElement& x) const {
    check(x);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i] != 0) {
            Monomial m;
            m.exp[i] = 1;
            terms.push_back(Term{m, Rational(static_cast<long>(x.coords[i]))});
        }
    }
    return Scalar(Poly::from_terms(std::move(terms)));
}

// ---------------------------------------------------------------------------

TotalOrder::TotalOrder(std::vector<GroupElement> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) {
        return;
    }
    std::vector<std::vector<std::int64_t>> m;
    for (const auto& r : rows_) {
        if (r.rank() != rows_.size()) {
            throw DomainError("order matrix must be square");
        }
        m.push_back(r.coords);
    }
    if (integer_determinant(m) == 0) {
        throw DomainError("order matrix must be nonsingular");
    }
}

TotalOrder TotalOrder::lexicographic(std::size_t rank) {
    std::vector<GroupElement> rows;
    for (std::size_t i = 0; i < rank; ++i) {
        rows.push_back(GroupElement::unit(rank, i));
    }
    return TotalOrder(std::move(rows));
}

int TotalOrder::compare(const GroupElement& a, const GroupElement& b) const {
    require_same_rank(a, b);
    if (rows_.empty()) {
        return a < b ? -1 : (b < a ? 1 : 0);
    }
    const GroupElement diff = a - b;
    for (const auto& r : rows_) {
        const std::int64_t v = dot(r, diff);
        if (v != 0) {
            return v < 0 ? -1 : 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DomainError("determinant of a non-square matrix");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = Rational(static_cast<long>(rows[i][j]));
        }
    }
    const Rational det = bareiss_determinant(std::move(m));
    return mpz_get_si(det.get_num_mpz_t());
}

namespace {

std::vector<std::vector<std::int64_t>> basis_rows(const Splitting& s) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& g : s.g0_basis) {
        rows.push_back(g.coords);
    }
    rows.push_back(s.b.coords);
    return rows;
}

// Extended gcd with g >= 0: s*a + t*b = g.
std::int64_t extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    std::int64_t old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

} // namespace

std::int64_t Splitting::determinant() const {
    return integer_determinant(basis_rows(*this));
}

Splitting::Coordinates Splitting::decompose(const GroupElement& x) const {
    const std::size_t n = b.rank();
    if (x.rank() != n) {
        throw DomainError("group element " + x.to_string() + " has the wrong rank for this splitting");
    }
    // Solve R^T y = x where R has rows g0_basis..., b.
    const auto rows = basis_rows(*this);
    Matrix<Rational> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = Rational(static_cast<long>(rows[j][i]));
        }
        aug(i, n) = Rational(static_cast<long>(x.coords[i]));
    }
    const auto ech = reduced_row_echelon(std::move(aug));
    if (ech.rank() != n || ech.pivots.back() != n - 1) {
        throw GroupError("splitting basis is singular");
    }
    Coordinates out;
    for (std::size_t j = 0; j < n; ++j) {
        const Rational& v = ech.reduced(j, n);
        if (v.get_den() != 1) {
            throw GroupError("splitting basis is not unimodular");
        }
        const auto value = static_cast<std::int64_t>(mpz_get_si(v.get_num_mpz_t()));
        if (j + 1 < n) {
            out.g0.push_back(value);
        } else {
            out.k = value;
        }
    }
    return out;
}

GroupElement Splitting::compose(const std::vector<std::int64_t>& g0, std::int64_t k) const {
    if (g0.size() != g0_basis.size()) {
        throw DomainError("wrong number of G0 coordinates");
    }
    GroupElement x = b * k;
    for (std::size_t j = 0; j < g0.size(); ++j) {
        x = x + g0_basis[j] * g0[j];
    }
    return x;
}

std::optional<std::vector<std::int64_t>> coordinates_in_span(const std::vector<GroupElement>& basis,
                                                              const GroupElement& x) {
    const std::size_t n = x.rank();
    const std::size_t m = basis.size();
    Matrix<Rational> aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (basis[j].rank() != n) {
                throw DomainError("basis element has the wrong rank");
            }
            aug(i, j) = Rational(static_cast<long>(basis[j].coords[i]));
        }
        aug(i, m) = Rational(static_cast<long>(x.coords[i]));
    }
    const auto ech = reduced_row_echelon(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m) {
        return std::nullopt;
    }
    if (ech.rank() != m) {
        throw DomainError("basis is linearly dependent");
    }
    std::vector<std::int64_t> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Rational& v = ech.reduced(j, m);
        if (v.get_den() != 1) {
            return std::nullopt;
        }
        out[ech.pivots[j]] = static_cast<std::int64_t>(mpz_get_si(v.get_num_mpz_t()));
    }
    return out;
}

Splitting make_splitting(const Group& group, const GroupElement& b, std::vector<GroupElement> g0_basis) {
    group.check(b);
    if (g0_basis.size() + 1 != group.rank()) {
        throw GroupError("G0 basis must have rank(G) - 1 elements");
    }
    for (const auto& g : g0_basis) {
        group.check(g);
    }
    Splitting s{b, std::move(g0_basis)};
    const std::int64_t det = s.determinant();
    if (det != 1 && det != -1) {
        throw GroupError("G0 basis together with b is not a Z-basis (determinant " +
                         std::to_string(det) + ")");
    }
    return s;
}

Splitting split(const Group& group, const GroupElement& b) {
    group.check(b);
    if (b.is_zero()) {
        throw GroupError("b = 0 does not span a direct summand");
    }
    if (!b.is_primitive()) {
        throw GroupError("b = " + b.to_string() + " is not primitive; Z b is not a direct summand");
    }
    const std::size_t n = group.rank();
    // Prefer standard basis vectors: drop the last coordinate where b is a unit.
    for (std::size_t i = n; i-- > 0;) {
        if (b.coords[i] == 1 || b.coords[i] == -1) {
            std::vector<GroupElement> g0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    g0.push_back(GroupElement::unit(n, j));
                }
            }
            return make_splitting(group, b, std::move(g0));
        }
    }
    // General case: reduce b to e_0 with unimodular 2x2 steps while tracking the
    // inverse transform, whose first column is then b.
    std::vector<std::vector<std::int64_t>> basis(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
    }
    std::vector<std::int64_t> w = b.coords;
    for (std::size_t j = 1; j < n; ++j) {
        if (w[j] == 0) {
            continue;
        }
        std::int64_t s = 0;
        std::int64_t t = 0;
        const std::int64_t g = extended_gcd(w[0], w[j], s, t);
        const std::int64_t a0 = w[0] / g;
        const std::int64_t aj = w[j] / g;
        // columns (0, j) of basis <- basis * [[a0, -t], [aj, s]]
        for (std::size_t r = 0; r < n; ++r) {
            const std::int64_t c0 = basis[r][0];
            const std::int64_t cj = basis[r][j];
            basis[r][0] = c0 * a0 + cj * aj;
            basis[r][j] = -c0 * t + cj * s;
        }
        w[0] = g;
        w[j] = 0;
    }
    std::vector<GroupElement> g0;
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<std::int64_t> col(n);
        for (std::size_t r = 0; r < n; ++r) {
            col[r] = basis[r][j];
        }
        g0.emplace_back(std::move(col));
    }
    return make_splitting(group, b, std::move(g0));
}

} // namespace virg
