#include "virg/induced.hpp"

#include "virg/error.hpp"
#include "virg/linalg.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_map>

namespace virg {

// ---------------------------------------------------------------------------
// Data types

InductionData::InductionData(Session s, Splitting sp)
    : session(std::move(s)), split(std::move(sp)), top(session, split.g0_basis) {
    if (split.b.rank() != session.group().rank()) {
        throw GroupError("splitting does not match the group rank");
    }
    const std::int64_t det = split.determinant();
    if (det != 1 && det != -1) {
        throw GroupError("splitting basis is not unimodular");
    }
    if (g0_rank() == 0 && top.subquotient_dim(GroupElement()) == 0) {
        throw DomainError("V'(alpha, beta, G0) is zero; induction needs a nontrivial top");
    }
}

InductionData InductionData::with_direction(Session s, const GroupElement& b) {
    Splitting sp = virg::split(s.group(), b);
    return InductionData(std::move(s), std::move(sp));
}

void Window::validate() const {
    if (level_cap < 0) {
        throw DomainError("window level cap must be nonnegative");
    }
    if (box_radius < 1) {
        throw DomainError("window box radius must be positive");
    }
    if (top_radius < 0) {
        throw DomainError("window top radius must be nonnegative");
    }
}

std::int64_t InducedMonomial::level() const {
    std::int64_t s = 0;
    for (const auto& f : factors) {
        s += f.k;
    }
    return s;
}

GroupElement InducedMonomial::weight() const {
    GroupElement w = top;
    for (const auto& f : factors) {
        w = w + f.x;
    }
    return w;
}

std::string InducedMonomial::to_string() const {
    std::ostringstream os;
    for (const auto& f : factors) {
        os << "d[" << f.x.to_string() << "-" << f.k << "b]";
    }
    os << "v" << top.to_string();
    return os.str();
}

const std::vector<InducedMonomial>& LevelBasis::at(int level, const GroupElement& x) const {
    static const std::vector<InducedMonomial> empty;
    auto it = blocks.find({level, x});
    return it == blocks.end() ? empty : it->second;
}

std::size_t LevelBasis::total_size() const {
    std::size_t n = 0;
    for (const auto& [key, monos] : blocks) {
        n += monos.size();
    }
    return n;
}

const DimEntry* QuotientDims::find(int level, const GroupElement& x) const {
    for (const auto& e : entries) {
        if (e.level == level && e.x == x) {
            return &e;
        }
    }
    return nullptr;
}

std::string to_string(RankMode mode) {
    return mode == RankMode::exact ? "exact" : "generic_point";
}

std::string to_string(SupportVerdict v) {
    switch (v) {
    case SupportVerdict::pattern_A:
        return "pattern_A";
    case SupportVerdict::pattern_B:
        return "pattern_B";
    case SupportVerdict::violation:
        return "violation";
    }
    return "?";
}

std::string to_string(StringVerdict v) {
    switch (v) {
    case StringVerdict::bounded:
        return "bounded";
    case StringVerdict::truncated_above:
        return "truncated_above";
    case StringVerdict::truncated_below:
        return "truncated_below";
    case StringVerdict::mixed:
        return "mixed";
    case StringVerdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::int64_t double_factorial_bound(int level) {
    std::int64_t out = 1;
    for (int j = 3; j <= 2 * level + 1; j += 2) {
        out *= j;
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Enumeration helpers

std::vector<GroupElement> box_points(std::size_t rank, int radius) {
    std::vector<GroupElement> out;
    GroupElement p(std::vector<std::int64_t>(rank, -radius));
    if (rank == 0) {
        out.push_back(p);
        return out;
    }
    while (true) {
        out.push_back(p);
        std::size_t i = rank;
        while (i > 0) {
            --i;
            if (p.coords[i] < radius) {
                ++p.coords[i];
                for (std::size_t j = i + 1; j < rank; ++j) {
                    p.coords[j] = -radius;
                }
                break;
            }
            if (i == 0) {
                return out;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Flat monomial encoding: [r, (k, x_1..x_m) * r, mu_1..mu_m]

using Code = std::vector<std::int32_t>;

struct CodeHash {
    std::size_t operator()(const Code& c) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : c) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::int32_t narrow(std::int64_t v) {
    if (v > INT32_MAX || v < INT32_MIN) {
        throw DomainError("induced-module index out of range");
    }
    return static_cast<std::int32_t>(v);
}

class Layout {
public:
    explicit Layout(std::size_t m) : m_(m) {}

    std::size_t m() const { return m_; }
    std::size_t count(const Code& c) const { return static_cast<std::size_t>(c[0]); }
    std::int32_t k(const Code& c, std::size_t i) const { return c[1 + i * (m_ + 1)]; }
    const std::int32_t* x(const Code& c, std::size_t i) const { return &c[2 + i * (m_ + 1)]; }
    const std::int32_t* mu(const Code& c) const { return &c[1 + count(c) * (m_ + 1)]; }

    Code top_only(const std::int32_t* mu) const {
        Code c(1 + m_);
        c[0] = 0;
        std::copy(mu, mu + m_, c.begin() + 1);
        return c;
    }

    // Compares factor (k, x) with factor i of c.
    int compare_factor(std::int32_t k, const std::int32_t* x, const Code& c, std::size_t i) const {
        if (k != this->k(c, i)) {
            return k < this->k(c, i) ? -1 : 1;
        }
        const std::int32_t* y = this->x(c, i);
        for (std::size_t j = 0; j < m_; ++j) {
            if (x[j] != y[j]) {
                return x[j] < y[j] ? -1 : 1;
            }
        }
        return 0;
    }

    Code prepend(std::int32_t k, const std::int32_t* x, const Code& c) const {
        Code out;
        out.reserve(c.size() + m_ + 1);
        out.push_back(c[0] + 1);
        out.push_back(k);
        out.insert(out.end(), x, x + m_);
        out.insert(out.end(), c.begin() + 1, c.end());
        return out;
    }

    Code tail(const Code& c) const {
        Code out;
        out.reserve(c.size() - m_ - 1);
        out.push_back(c[0] - 1);
        out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(2 + m_), c.end());
        return out;
    }

    Code encode(const InducedMonomial& mono) const {
        Code c;
        c.push_back(narrow(static_cast<std::int64_t>(mono.factors.size())));
        for (const auto& f : mono.factors) {
            c.push_back(narrow(f.k));
            for (auto v : f.x.coords) {
                c.push_back(narrow(v));
            }
        }
        for (auto v : mono.top.coords) {
            c.push_back(narrow(v));
        }
        return c;
    }

    InducedMonomial decode(const Code& c) const {
        InducedMonomial mono;
        for (std::size_t i = 0; i < count(c); ++i) {
            LoweringFactor f;
            f.k = k(c, i);
            f.x.coords.assign(x(c, i), x(c, i) + m_);
            mono.factors.push_back(std::move(f));
        }
        mono.top.coords.assign(mu(c), mu(c) + m_);
        return mono;
    }

    std::int64_t level(const Code& c) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < count(c); ++i) {
            s += k(c, i);
        }
        return s;
    }

    std::int64_t max_factor_coord(const Code& c) const {
        std::int64_t out = 0;
        for (std::size_t i = 0; i < count(c); ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                out = std::max<std::int64_t>(out, std::abs(x(c, i)[j]));
            }
        }
        return out;
    }

private:
    std::size_t m_;
};

// ---------------------------------------------------------------------------
// Coefficient fields

template <class K>
struct FieldValues {
    K alpha;
    K beta;
    std::vector<K> g0_iota;
    K b_iota;
};

FieldValues<Scalar> symbolic_values(const InductionData& data) {
    FieldValues<Scalar> f;
    f.alpha = data.session.alpha_value();
    f.beta = data.session.beta_value();
    for (const auto& e : data.split.g0_basis) {
        f.g0_iota.push_back(data.session.group().embed(e));
    }
    f.b_iota = data.session.group().embed(data.split.b);
    return f;
}

FieldValues<Poly> polynomial_values(const InductionData& data) {
    const FieldValues<Scalar> sym = symbolic_values(data);
    FieldValues<Poly> f;
    f.alpha = sym.alpha.num();
    f.beta = sym.beta.num();
    for (const auto& s : sym.g0_iota) {
        f.g0_iota.push_back(s.num());
    }
    f.b_iota = sym.b_iota.num();
    return f;
}

// Evaluates every symbol at a random integer point.
FieldValues<Rational> point_values(const InductionData& data, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(100003, 999999937);
    const Ring& ring = data.session.ring();
    std::vector<Rational> point(ring.size());
    for (auto& v : point) {
        v = Rational(dist(rng));
    }
    const FieldValues<Scalar> sym = symbolic_values(data);
    FieldValues<Rational> f;
    f.alpha = sym.alpha.evaluate(point);
    f.beta = sym.beta.evaluate(point);
    for (const auto& s : sym.g0_iota) {
        f.g0_iota.push_back(s.evaluate(point));
    }
    f.b_iota = sym.b_iota.evaluate(point);
    return f;
}

// ---------------------------------------------------------------------------
// Engine

template <class K>
class Engine {
public:
    using Vec = std::vector<std::pair<Code, K>>;

    Engine(const InductionData& data, FieldValues<K> values)
        : layout_(data.g0_rank()), values_(std::move(values)) {
        const auto desc = data.top.irreducible_subquotient();
        if (desc.excluded) {
            for (auto v : desc.excluded->coords) {
                excluded_.push_back(narrow(v));
            }
            has_excluded_ = true;
        }
    }

    const Layout& layout() const { return layout_; }

    bool in_top_support(const std::int32_t* mu) const {
        return !has_excluded_ || !std::equal(mu, mu + layout_.m(), excluded_.begin());
    }

    K iota0(const std::int32_t* u) const {
        K s{};
        for (std::size_t j = 0; j < layout_.m(); ++j) {
            if (u[j] != 0) {
                s += values_.g0_iota[j] * K(static_cast<long>(u[j]));
            }
        }
        return s;
    }

    K iota(std::int32_t k, const std::int32_t* u) const {
        K s = iota0(u);
        if (k != 0) {
            s += values_.b_iota * K(static_cast<long>(k));
        }
        return s;
    }

    // d_{u + k b} applied to a monomial of M.
    const Vec& act(std::int32_t k, const std::int32_t* u, const Code& mono) {
        Code key;
        key.reserve(1 + layout_.m() + mono.size());
        key.push_back(k);
        key.insert(key.end(), u, u + layout_.m());
        key.insert(key.end(), mono.begin(), mono.end());
        if (auto it = act_memo_.find(key); it != act_memo_.end()) {
            return it->second;
        }
        Vec result = compute_act(k, u, mono);
        return act_memo_.emplace(std::move(key), std::move(result)).first->second;
    }

    // Functionals: level-0 coefficient extraction, or parent o d_{y + k b}.
    struct Functional {
        int parent = -1;
        std::int32_t k = 0;
        std::vector<std::int32_t> y;
        std::vector<std::int32_t> weight;  // base only
    };

    int add_base(const std::vector<std::int32_t>& w) {
        functionals_.push_back(Functional{-1, 0, {}, w});
        return static_cast<int>(functionals_.size()) - 1;
    }

    int add_composite(int parent, std::int32_t k, const std::vector<std::int32_t>& y) {
        functionals_.push_back(Functional{parent, k, y, {}});
        return static_cast<int>(functionals_.size()) - 1;
    }

    void pop_functional() { functionals_.pop_back(); }

    K evaluate(int fid, const Code& mono) {
        const Functional& f = functionals_[static_cast<std::size_t>(fid)];
        if (f.parent < 0) {
            if (layout_.count(mono) != 0) {
                return K{};
            }
            return std::equal(f.weight.begin(), f.weight.end(), layout_.mu(mono)) ? K(1L) : K{};
        }
        Code key;
        key.reserve(1 + mono.size());
        key.push_back(fid);
        key.insert(key.end(), mono.begin(), mono.end());
        if (auto it = eval_memo_.find(key); it != eval_memo_.end()) {
            return it->second;
        }
        const int parent = f.parent;
        const std::int32_t k = f.k;
        const std::vector<std::int32_t> y = f.y;
        K total{};
        for (const auto& [m, c] : act(k, y.data(), mono)) {
            K v = evaluate(parent, m);
            if (!field_is_zero(v)) {
                total += c * v;
            }
        }
        eval_memo_.emplace(std::move(key), total);
        return total;
    }

private:
    void accumulate(std::unordered_map<Code, K, CodeHash>& acc, const Code& m, const K& c) {
        auto [it, inserted] = acc.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
        }
    }

    Vec finish(std::unordered_map<Code, K, CodeHash>& acc) {
        Vec out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc) {
            if (!field_is_zero(c)) {
                out.emplace_back(m, std::move(c));
            }
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    Vec compute_act(std::int32_t k, const std::int32_t* u, const Code& mono) {
        const std::size_t m = layout_.m();
        if (layout_.count(mono) == 0) {
            const std::int32_t* mu = layout_.mu(mono);
            if (k >= 1) {
                return {};
            }
            if (k == 0) {
                std::vector<std::int32_t> target(m);
                for (std::size_t j = 0; j < m; ++j) {
                    target[j] = narrow(static_cast<std::int64_t>(mu[j]) + u[j]);
                }
                if (!in_top_support(target.data())) {
                    return {};
                }
                K coeff = values_.alpha + iota0(mu) + iota0(u) * values_.beta;
                if (field_is_zero(coeff)) {
                    return {};
                }
                return {{layout_.top_only(target.data()), coeff}};
            }
            return {{layout_.prepend(-k, u, mono), K(1L)}};
        }
        if (k < 0 && layout_.compare_factor(-k, u, mono, 0) <= 0) {
            return {{layout_.prepend(-k, u, mono), K(1L)}};
        }
        // d_z f R = f (d_z R) + [d_z, f] R with f the first factor.
        const std::int32_t fk = -layout_.k(mono, 0);
        const std::vector<std::int32_t> fx(layout_.x(mono, 0), layout_.x(mono, 0) + m);
        const Code rest = layout_.tail(mono);
        std::unordered_map<Code, K, CodeHash> acc;

        const Vec inner = act(k, u, rest);  // copy: the memo may grow below
        for (const auto& [m1, c1] : inner) {
            for (const auto& [m2, c2] : act(fk, fx.data(), m1)) {
                accumulate(acc, m2, c1 * c2);
            }
        }
        const K bracket_coeff = iota(fk, fx.data()) - iota(k, u);
        if (!field_is_zero(bracket_coeff)) {
            std::vector<std::int32_t> sum(m);
            for (std::size_t j = 0; j < m; ++j) {
                sum[j] = narrow(static_cast<std::int64_t>(u[j]) + fx[j]);
            }
            const Vec tail_part = act(k + fk, sum.data(), rest);
            for (const auto& [m1, c1] : tail_part) {
                accumulate(acc, m1, bracket_coeff * c1);
            }
        }
        return finish(acc);
    }

    Layout layout_;
    FieldValues<K> values_;
    std::vector<std::int32_t> excluded_;
    bool has_excluded_ = false;
    std::unordered_map<Code, Vec, CodeHash> act_memo_;
    std::unordered_map<Code, K, CodeHash> eval_memo_;
    std::vector<Functional> functionals_;
};

std::vector<std::int32_t> to_code(const GroupElement& x) {
    std::vector<std::int32_t> out;
    for (auto v : x.coords) {
        out.push_back(narrow(v));
    }
    return out;
}

// Sorted factor lists of total level `level` drawn from the box.
void enumerate_factor_lists(const std::vector<GroupElement>& box, int level, std::int64_t min_k,
                            std::size_t min_index, std::vector<LoweringFactor>& current,
                            std::vector<std::vector<LoweringFactor>>& out) {
    if (level == 0) {
        out.push_back(current);
        return;
    }
    for (std::int64_t k = min_k; k <= level; ++k) {
        for (std::size_t i = (k == min_k ? min_index : 0); i < box.size(); ++i) {
            current.push_back(LoweringFactor{k, box[i]});
            enumerate_factor_lists(box, level - static_cast<int>(k), k, i, current, out);
            current.pop_back();
        }
    }
}

// Maximal independent functionals per (level, weight), computed lazily.
template <class K>
class QuotientSolver {
public:
    QuotientSolver(const InductionData& data, FieldValues<K> values, int box_radius)
        : data_(data), engine_(data, std::move(values)), box_radius_(box_radius),
          box_(box_points(data.g0_rank(), box_radius)) {}

    Engine<K>& engine() { return engine_; }

    const std::vector<int>& selected(int level, const GroupElement& w) {
        const auto key = std::make_pair(level, w);
        if (auto it = selected_.find(key); it != selected_.end()) {
            return it->second;
        }
        std::vector<int> chosen;
        if (level == 0) {
            if (data_.top.subquotient_dim(w) == 1) {
                chosen.push_back(engine_.add_base(to_code(w)));
            }
            return selected_.emplace(key, std::move(chosen)).first->second;
        }
        const auto monos = codes(level, w);
        typename ReducerFor<K>::type reducer(monos.size());
        for (int k = 1; k <= level && reducer.rank() < monos.size(); ++k) {
            for (const auto& y : box_) {
                if (reducer.rank() == monos.size()) {
                    break;
                }
                const std::vector<int> parents = selected(level - k, w + y);
                const auto ycode = to_code(y);
                for (int parent : parents) {
                    const int fid = engine_.add_composite(parent, k, ycode);
                    std::vector<K> row;
                    row.reserve(monos.size());
                    for (const auto& m : monos) {
                        row.push_back(engine_.evaluate(fid, m));
                    }
                    if (reducer.insert(std::move(row))) {
                        chosen.push_back(fid);
                    }
                    if (reducer.rank() == monos.size()) {
                        break;
                    }
                }
            }
        }
        return selected_.emplace(key, std::move(chosen)).first->second;
    }

    std::vector<Code> codes(int level, const GroupElement& w) const {
        std::vector<Code> out;
        for (const auto& mono : windowed_monomials(data_, level, w, box_radius_)) {
            out.push_back(engine_.layout().encode(mono));
        }
        return out;
    }

    // Candidate rows evaluated on the given monomials, for kernel computations.
    std::vector<std::vector<K>> candidate_rows(int level, const GroupElement& w, const std::vector<Code>& monos) {
        std::vector<std::vector<K>> rows;
        for (int k = 1; k <= level; ++k) {
            for (const auto& y : box_) {
                const std::vector<int> parents = selected(level - k, w + y);
                const auto ycode = to_code(y);
                for (int parent : parents) {
                    const int fid = engine_.add_composite(parent, k, ycode);
                    std::vector<K> row;
                    for (const auto& m : monos) {
                        row.push_back(engine_.evaluate(fid, m));
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
        return rows;
    }

private:
    const InductionData& data_;
    Engine<K> engine_;
    int box_radius_;
    std::vector<GroupElement> box_;
    std::map<std::pair<int, GroupElement>, std::vector<int>> selected_;
};

std::vector<GroupElement> report_rows(std::size_t rank, int top_radius) {
    return box_points(rank, top_radius);
}

template <class K>
std::vector<int> dims_at(const InductionData& data, FieldValues<K> values, const Window& window) {
    QuotientSolver<K> solver(data, std::move(values), window.box_radius);
    std::vector<int> out;
    for (int level = 0; level <= window.level_cap; ++level) {
        for (const auto& x : report_rows(data.g0_rank(), window.top_radius)) {
            out.push_back(static_cast<int>(solver.selected(level, x).size()));
        }
    }
    return out;
}

std::vector<int> dims_for_mode(const InductionData& data, const Window& window, const QuotientOptions& options) {
    if (options.mode == RankMode::exact) {
        return dims_at<Poly>(data, polynomial_values(data), window);
    }
    std::vector<int> best;
    for (int p = 0; p < std::max(1, options.points); ++p) {
        const auto dims = dims_at<Rational>(data, point_values(data, options.seed * 1000003ULL + p), window);
        if (best.empty()) {
            best = dims;
        } else {
            for (std::size_t i = 0; i < best.size(); ++i) {
                best[i] = std::max(best[i], dims[i]);
            }
        }
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// Public operations

std::vector<InducedMonomial> windowed_monomials(const InductionData& data, int level, const GroupElement& x,
                                                int box_radius) {
    if (x.rank() != data.g0_rank()) {
        throw GroupError("weight has rank " + std::to_string(x.rank()) + ", expected G0 rank " +
                         std::to_string(data.g0_rank()));
    }
    std::vector<InducedMonomial> out;
    if (level < 0) {
        return out;
    }
    if (level == 0) {
        if (data.top.subquotient_dim(x) == 1) {
            out.push_back(InducedMonomial{{}, x});
        }
        return out;
    }
    const auto box = box_points(data.g0_rank(), box_radius);
    std::vector<std::vector<LoweringFactor>> lists;
    std::vector<LoweringFactor> current;
    enumerate_factor_lists(box, level, 1, 0, current, lists);
    for (auto& factors : lists) {
        GroupElement mu = x;
        for (const auto& f : factors) {
            mu = mu - f.x;
        }
        if (data.top.subquotient_dim(mu) == 1) {
            out.push_back(InducedMonomial{std::move(factors), std::move(mu)});
        }
    }
    return out;
}

LevelBasis build_level_basis(const InductionData& data, const Window& window) {
    window.validate();
    LevelBasis basis;
    for (int level = 0; level <= window.level_cap; ++level) {
        for (const auto& x : report_rows(data.g0_rank(), window.top_radius)) {
            basis.blocks[{level, x}] = windowed_monomials(data, level, x, window.box_radius);
        }
    }
    return basis;
}

InducedAction act_on_induced(const AlgebraElement& a, const InducedVector& v, const InductionData& data,
                             const Window& window) {
    Engine<Scalar> engine(data, symbolic_values(data));
    const Layout& layout = engine.layout();
    std::map<Code, Scalar> acc;
    for (const auto& [z, coeff] : a.d_terms()) {
        const auto parts = data.split.decompose(z);
        const auto u = to_code(GroupElement(parts.g0));
        const std::int32_t k = narrow(parts.k);
        for (const auto& [mono, c] : v) {
            for (const auto& [m, c2] : engine.act(k, u.data(), layout.encode(mono))) {
                acc[m] += coeff * c * c2;
            }
        }
    }
    InducedAction out;
    for (const auto& [m, c] : acc) {
        if (c.is_zero()) {
            continue;
        }
        if (layout.max_factor_coord(m) > window.box_radius) {
            out.window_escape = true;
        }
        out.value.emplace(layout.decode(m), c);
    }
    return out;
}

InducedAction act_on_induced(const AlgebraElement& a, const InducedMonomial& m, const InductionData& data,
                             const Window& window) {
    return act_on_induced(a, InducedVector{{m, Scalar(1L)}}, data, window);
}

QuotientDims maximal_quotient_dims(const InductionData& data, const Window& window, const QuotientOptions& options) {
    window.validate();
    QuotientDims q;
    q.window = window;
    q.mode = options.mode;
    const auto rows = report_rows(data.g0_rank(), window.top_radius);
    const auto dims = dims_for_mode(data, window, options);
    std::vector<int> wider;
    if (options.check_stability) {
        Window w2 = window;
        w2.box_radius += 1;
        wider = dims_for_mode(data, w2, options);
    }
    std::size_t i = 0;
    for (int level = 0; level <= window.level_cap; ++level) {
        for (const auto& x : rows) {
            DimEntry e;
            e.level = level;
            e.x = x;
            e.dim = dims[i];
            e.stable = !options.check_stability || wider[i] == dims[i];
            q.entries.push_back(std::move(e));
            ++i;
        }
    }
    return q;
}

std::vector<InducedVector> windowed_kernel(const InductionData& data, int level, const GroupElement& x,
                                           int box_radius) {
    const auto monos = windowed_monomials(data, level, x, box_radius);
    if (monos.empty()) {
        return {};
    }
    QuotientSolver<Scalar> solver(data, symbolic_values(data), box_radius);
    const auto codes = solver.codes(level, x);
    const auto rows = solver.candidate_rows(level, x, codes);
    Matrix<Scalar> m(rows.size(), monos.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < monos.size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    std::vector<InducedVector> out;
    for (const auto& v : kernel_basis(m)) {
        InducedVector vec;
        for (std::size_t c = 0; c < monos.size(); ++c) {
            if (!v[c].is_zero()) {
                vec.emplace(monos[c], v[c]);
            }
        }
        out.push_back(std::move(vec));
    }
    return out;
}

SupportReport support_check(const QuotientDims& q, const InductionData& data) {
    SupportReport report;
    for (const auto& e : q.entries) {
        if (e.level < 0 && e.dim > 0) {
            report.verdict = SupportVerdict::violation;
            report.offending = e;
            return report;
        }
    }
    const auto x0 = data.top.alpha_in_lattice();
    if (x0) {
        // Weight 0 sits at level 0, x = -x0.
        const DimEntry* zero = q.find(0, -*x0);
        if (zero && zero->dim == 0) {
            report.verdict = SupportVerdict::pattern_B;
            return report;
        }
    }
    report.verdict = SupportVerdict::pattern_A;
    return report;
}

StringVerdict string_boundedness(const QuotientDims& q, const InductionData& data, const GroupElement& g) {
    if (!g.is_primitive()) {
        throw GroupError("string direction must be primitive");
    }
    const auto parts = data.split.decompose(g);
    const GroupElement u(parts.g0);
    const std::int64_t k = parts.k;

    bool any_stable = false;
    for (const auto& e : q.entries) {
        any_stable = any_stable || e.stable;
    }
    if (!any_stable) {
        return StringVerdict::inconclusive;
    }
    if (k == 0) {
        for (const auto& e : q.entries) {
            if (e.stable && e.dim > double_factorial_bound(e.level)) {
                return StringVerdict::mixed;
            }
        }
        return StringVerdict::bounded;
    }
    // Moving by +g changes the level by -k: levels below 0 carry nothing.
    bool above = false;
    bool below = false;
    for (const auto& e : q.entries) {
        if (!e.stable || e.dim == 0) {
            continue;
        }
        if (k > 0) {
            above = true;
        } else {
            below = true;
        }
    }
    if (above && below) {
        return StringVerdict::mixed;
    }
    if (above) {
        return StringVerdict::truncated_above;
    }
    if (below) {
        return StringVerdict::truncated_below;
    }
    return StringVerdict::inconclusive;
}

} // namespace virg
