#include "virg/classical.hpp"

#include "virg/error.hpp"

#include <sstream>

namespace virg {

namespace {

void partitions_into(int n, int max_part, Partition& current, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        current.push_back(k);
        partitions_into(n - k, k, current, out);
        current.pop_back();
    }
}

void add_into(VermaVector& acc, const Partition& p, const Scalar& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = acc.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            acc.erase(it);
        }
    }
}

void require_rational(const Binding& b, const char* name) {
    if (b.kind() != Binding::Kind::rational) {
        throw DomainError(std::string(name) + " must be bound to a rational value");
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    Partition current;
    partitions_into(n, n, current, out);
    return out;
}

std::vector<std::int64_t> partition_counts(int L) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(std::max(L, 0)) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= L; ++n) {
        std::int64_t total = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            const int g2 = j * (3 * j + 1) / 2;
            if (g1 > n) {
                break;
            }
            const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                total += sign * p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    for (int k : p) {
        os << "d[" << -k << "]";
    }
    os << "v";
    return os.str();
}

TruncatedVermaModule::TruncatedVermaModule(Session session, int level_cap, Rational index_scale)
    : session_(std::move(session)), level_cap_(level_cap), scale_(std::move(index_scale)) {
    if (level_cap_ < 0) {
        throw DomainError("level cap must be nonnegative");
    }
    if (session_.group().rank() != 1) {
        throw DomainError("Verma modules are built over a rank-1 group");
    }
    if (sgn(scale_) == 0) {
        throw DomainError("index scale must be nonzero");
    }
    c_ = session_.c_value();
    h_ = session_.h_value();
    for (int n = 0; n <= level_cap_; ++n) {
        bases_.push_back(partitions(n));
    }
}

const std::vector<Partition>& TruncatedVermaModule::basis(int level) const {
    if (level < 0 || level > level_cap_) {
        throw DomainError("level " + std::to_string(level) + " outside the truncation");
    }
    return bases_[static_cast<std::size_t>(level)];
}

std::vector<std::int64_t> TruncatedVermaModule::dims() const {
    std::vector<std::int64_t> out;
    for (const auto& b : bases_) {
        out.push_back(static_cast<std::int64_t>(b.size()));
    }
    return out;
}

Scalar TruncatedVermaModule::weight(int level) const {
    return h_ - Scalar(scale_ * level);
}

VermaVector TruncatedVermaModule::act(int m, const Partition& word) const {
    VermaVector out;
    if (word.empty()) {
        if (m > 0) {
            return out;
        }
        if (m == 0) {
            add_into(out, word, h_);
            return out;
        }
        out.emplace(Partition{-m}, Scalar(1L));
        return out;
    }
    const int k1 = word.front();
    if (m < 0 && -m >= k1) {
        Partition p;
        p.reserve(word.size() + 1);
        p.push_back(-m);
        p.insert(p.end(), word.begin(), word.end());
        out.emplace(std::move(p), Scalar(1L));
        return out;
    }
    const Partition rest(word.begin() + 1, word.end());
    // d_m d_{-k1} R = d_{-k1} (d_m R) + [d_m, d_{-k1}] R
    for (const auto& [p, c] : act(m, rest)) {
        for (const auto& [q, c2] : act(-k1, p)) {
            add_into(out, q, c * c2);
        }
    }
    const Scalar coeff(scale_ * (-k1 - m));
    if (!coeff.is_zero()) {
        for (const auto& [p, c] : act(m - k1, rest)) {
            add_into(out, p, coeff * c);
        }
    }
    if (m == k1) {
        const Rational x = scale_ * m;
        const Scalar central = Scalar((x * x * x - x) / 12) * c_;
        if (!central.is_zero()) {
            add_into(out, rest, central);
        }
    }
    return out;
}

VermaVector TruncatedVermaModule::act(int m, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [p, c] : v) {
        for (const auto& [q, c2] : act(m, p)) {
            add_into(out, q, c * c2);
        }
    }
    return out;
}

VermaVector TruncatedVermaModule::act_central(const VermaVector& v) const {
    VermaVector out;
    for (const auto& [p, c] : v) {
        add_into(out, p, c * c_);
    }
    return out;
}

Matrix<Scalar> TruncatedVermaModule::raising_matrix(int k, int level) const {
    const auto& source = basis(level);
    const auto& target = basis(level - k);
    Matrix<Scalar> m(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        const VermaVector image = act(k, source[j]);
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (auto it = image.find(target[i]); it != image.end()) {
                m(i, j) = it->second;
            }
        }
    }
    return m;
}

std::vector<std::int64_t> verma_dims(const Session& session, int L) {
    return TruncatedVermaModule(session, L).dims();
}

Matrix<Scalar> gram_matrix(const TruncatedVermaModule& module, int n) {
    const auto& basis = module.basis(n);
    Matrix<Scalar> g(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const VermaVector wj{{basis[j], Scalar(1L)}};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            VermaVector v = wj;
            for (int k : basis[i]) {
                v = module.act(k, v);
            }
            if (auto it = v.find(Partition{}); it != v.end()) {
                g(i, j) = it->second;
            }
        }
    }
    return g;
}

namespace {

Matrix<Scalar> stacked_raising(const TruncatedVermaModule& module, int n, int max_k) {
    std::vector<Matrix<Scalar>> blocks;
    std::size_t rows = 0;
    for (int k = 1; k <= std::min(n, max_k); ++k) {
        blocks.push_back(module.raising_matrix(k, n));
        rows += blocks.back().rows();
    }
    Matrix<Scalar> m(rows, module.basis(n).size());
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                m(r0 + i, j) = b(i, j);
            }
        }
        r0 += b.rows();
    }
    return m;
}

std::optional<Poly> polynomial_determinant(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return std::nullopt;
    }
    Matrix<Poly> p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_polynomial()) {
                return std::nullopt;
            }
            p(i, j) = m(i, j).num();
        }
    }
    return bareiss_determinant(std::move(p));
}

constexpr std::size_t kGramDeterminantLimit = 12;

} // namespace

SingularVectorReport find_singular(const Session& session, int n, Rational index_scale) {
    if (n < 1) {
        throw DomainError("singular vectors live at levels n >= 1");
    }
    TruncatedVermaModule module(session, n, index_scale);
    SingularVectorReport report;
    report.level = n;
    const auto& basis = module.basis(n);
    for (const auto& v : kernel_basis(stacked_raising(module, n, n))) {
        VermaVector vec;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!v[j].is_zero()) {
                vec.emplace(basis[j], v[j]);
            }
        }
        report.kernel.push_back(std::move(vec));
    }
    report.raising_condition = polynomial_determinant(stacked_raising(module, n, 2));
    if (basis.size() <= kGramDeterminantLimit) {
        report.gram_condition = polynomial_determinant(gram_matrix(module, n));
    }
    return report;
}

std::vector<std::int64_t> quotient_dims_after_singular(const Session& session, int L, Rational index_scale) {
    require_rational(session.c(), "c");
    require_rational(session.h(), "h");
    TruncatedVermaModule module(session, L, index_scale);
    std::vector<std::pair<int, VermaVector>> singular;
    std::vector<std::int64_t> out{1};
    for (int n = 1; n <= L; ++n) {
        for (auto& v : find_singular(session, n, index_scale).kernel) {
            singular.emplace_back(n, std::move(v));
        }
        const auto& basis = module.basis(n);
        RowReducer<Scalar> span(basis.size());
        for (const auto& [m, s] : singular) {
            for (const auto& word : partitions(n - m)) {
                VermaVector v = s;
                for (auto it = word.rbegin(); it != word.rend(); ++it) {
                    v = module.act(-*it, v);
                }
                std::vector<Scalar> row(basis.size());
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    if (auto f = v.find(basis[j]); f != v.end()) {
                        row[j] = f->second;
                    }
                }
                span.insert(std::move(row));
            }
        }
        out.push_back(static_cast<std::int64_t>(basis.size() - span.rank()));
    }
    return out;
}

std::vector<std::int64_t> irreducible_dims(const Session& session, int L, Rational index_scale) {
    TruncatedVermaModule module(session, L, index_scale);
    std::vector<std::int64_t> out;
    for (int n = 0; n <= L; ++n) {
        out.push_back(static_cast<std::int64_t>(rank_of(gram_matrix(module, n))));
    }
    return out;
}

} // namespace virg
