#include "flagrep/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace flagrep {

namespace {

void require_same_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorCode::DimensionMismatch,
                    "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

IntMatrix chain(std::size_t n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 2;
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
    }
    return a;
}

// Bourbaki numbering, 0-based: 0-2-3-4-5(-6-7) with node 1 attached to 3.
IntMatrix type_e(std::size_t n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
    link(0, 2);
    link(1, 3);
    for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

Weight Weight::from_ints(std::span<const std::int64_t> coords) {
    std::vector<Rational> q;
    q.reserve(coords.size());
    for (auto c : coords) q.emplace_back(c);
    return Weight(std::move(q));
}

bool Weight::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

std::vector<std::int64_t> Weight::to_ints() const {
    std::vector<std::int64_t> out;
    out.reserve(coords_.size());
    for (const auto& q : coords_) {
        auto v = to_int64(q);
        if (!v) throw Error(ErrorCode::NonIntegerWeight, "weight coordinate " + to_string(q) + " is not an integer");
        out.push_back(*v);
    }
    return out;
}

Weight& Weight::operator+=(const Weight& other) {
    require_same_rank(rank(), other.rank());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    require_same_rank(rank(), other.rank());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

Weight operator-(Weight a) {
    for (auto& q : a.coords_) q = -q;
    return a;
}

Weight operator*(const Rational& s, Weight a) {
    for (auto& q : a.coords_) q *= s;
    return a;
}

bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? ", " : "") << to_string(w[i]);
    return os << ')';
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
    std::size_t h = w.rank();
    for (const auto& q : w.coords()) h ^= std::hash<Rational>{}(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

// ---------------------------------------------------------------------------
// CartanMatrix

CartanMatrix::CartanMatrix(IntMatrix entries, std::string label)
    : entries_(std::move(entries)), label_(std::move(label)) {
    const std::size_t n = entries_.rows();
    if (n == 0 || entries_.cols() != n) throw Error(ErrorCode::InvalidCartan, "Cartan matrix must be square and non-empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (entries_(i, i) != 2) throw Error(ErrorCode::InvalidCartan, "diagonal entries must equal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries_(i, j) > 0) throw Error(ErrorCode::InvalidCartan, "off-diagonal entries must be <= 0");
            if ((entries_(i, j) == 0) != (entries_(j, i) == 0))
                throw Error(ErrorCode::InvalidCartan, "A[i][j] = 0 must imply A[j][i] = 0");
        }
    }

    // A[i][j] d_j = A[j][i] d_i, propagated along the Dynkin diagram.
    std::vector<std::optional<Rational>> d(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (d[start]) continue;
        std::vector<std::size_t> component{start};
        d[start] = Rational(1);
        for (std::size_t k = 0; k < component.size(); ++k) {
            const std::size_t u = component[k];
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || entries_(u, v) == 0) continue;
                const Rational dv = *d[u] * make_rational(entries_(v, u), entries_(u, v));
                if (!d[v]) {
                    d[v] = dv;
                    component.push_back(v);
                } else if (*d[v] != dv) {
                    throw Error(ErrorCode::NotFiniteType, "Cartan matrix is not symmetrizable");
                }
            }
        }
        Rational smallest = *d[start];
        for (auto v : component) smallest = std::min(smallest, *d[v]);
        for (auto v : component) *d[v] /= smallest;
    }
    symmetrizer_.reserve(n);
    for (auto& x : d) symmetrizer_.push_back(*x);

    for (const auto& minor : leading_principal_minors(symmetrized()))
        if (minor <= 0) throw Error(ErrorCode::NotFiniteType, "symmetrized Cartan matrix is not positive definite");
}

RationalMatrix CartanMatrix::symmetrized() const {
    const std::size_t n = rank();
    RationalMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = Rational(entries_(i, j)) * symmetrizer_[j];
    return b;
}

CartanMatrix CartanMatrix::from_label(std::string_view label) {
    auto bad = [&] { return Error(ErrorCode::ParseError, "unknown type label '" + std::string(label) + "'"); };
    if (label.size() < 2) throw bad();
    const char family = label.front();
    std::size_t n = 0;
    const auto digits = label.substr(1);
    if (!std::isdigit(static_cast<unsigned char>(digits.front())) || digits.front() == '0') throw bad();
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw bad();

    IntMatrix a;
    switch (family) {
        case 'A':
            if (n < 1) throw bad();
            a = chain(n);
            break;
        case 'B':
            if (n < 2) throw bad();
            a = chain(n);
            a(n - 2, n - 1) = -2;
            break;
        case 'C':
            if (n < 2) throw bad();
            a = chain(n);
            a(n - 1, n - 2) = -2;
            break;
        case 'D':
            if (n < 3) throw bad();
            a = chain(n);
            a(n - 2, n - 1) = a(n - 1, n - 2) = 0;
            a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
            break;
        case 'E':
            if (n < 6 || n > 8) throw bad();
            a = type_e(n);
            break;
        case 'F':
            if (n != 4) throw bad();
            a = chain(4);
            a(1, 2) = -2;
            break;
        case 'G':
            if (n != 2) throw bad();
            a = chain(2);
            a(1, 0) = -3;
            break;
        default:
            throw bad();
    }
    return CartanMatrix(std::move(a), std::string(label));
}

CartanMatrix CartanMatrix::from_text(std::string_view text, std::string label) {
    std::vector<std::int64_t> values;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorCode::ParseError, "non-integer Cartan entry '" + token + "'");
        values.push_back(v);
    }
    std::size_t n = 0;
    while (n * n < values.size()) ++n;
    if (values.empty() || n * n != values.size())
        throw Error(ErrorCode::ParseError, "Cartan matrix text must hold a square number of integers");
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = values[i * n + j];
    return CartanMatrix(std::move(a), std::move(label));
}

CartanMatrix CartanMatrix::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read Cartan matrix file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

// ---------------------------------------------------------------------------
// RootSystem

std::int64_t Root::height() const {
    std::int64_t h = 0;
    for (auto c : simple_coords) h += c;
    return h;
}

RootSystem::RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
    const std::size_t n = rank();
    const auto& a = cartan_.entries();
    const auto& d = cartan_.symmetrizer();
    const RationalMatrix gram = cartan_.symmetrized();

    using Coords = std::vector<std::int64_t>;
    auto squared_length = [&](const Coords& beta) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (beta[i] != 0 && beta[j] != 0) s += Rational(beta[i] * beta[j]) * gram(i, j);
        return s;
    };

    // Closure of the simple roots under simple reflections
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
    const std::size_t stratum_cap = 4 * n * n;
    std::map<Rational, std::size_t> strata;
    std::map<Coords, bool> seen;
    std::deque<Coords> queue;
    auto visit = [&](Coords beta) {
        if (seen.contains(beta)) return;
        if (++strata[squared_length(beta)] > stratum_cap)
            throw Error(ErrorCode::NotFiniteType, "reflection closure exceeded the root count bound");
        seen.emplace(beta, true);
        queue.push_back(std::move(beta));
    };
    for (std::size_t i = 0; i < n; ++i) {
        Coords e(n, 0);
        e[i] = 1;
        visit(std::move(e));
    }
    while (!queue.empty()) {
        Coords beta = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t p = 0;
            for (std::size_t j = 0; j < n; ++j) p += beta[j] * a(j, i);
            if (p == 0) continue;
            Coords image = beta;
            image[i] -= p;
            visit(std::move(image));
        }
    }

    std::vector<Coords> positive;
    std::size_t negative_count = 0;
    for (const auto& [beta, _] : seen) {
        const bool pos = std::all_of(beta.begin(), beta.end(), [](auto c) { return c >= 0; });
        const bool neg = std::all_of(beta.begin(), beta.end(), [](auto c) { return c <= 0; });
        if (pos == neg) throw Error(ErrorCode::InternalError, "enumerated root with mixed-sign simple coordinates");
        if (pos)
            positive.push_back(beta);
        else
            ++negative_count;
    }
    if (negative_count != positive.size()) throw Error(ErrorCode::InternalError, "root system is not closed under negation");

    auto height = [](const Coords& c) {
        std::int64_t h = 0;
        for (auto x : c) h += x;
        return h;
    };
    std::sort(positive.begin(), positive.end(), [&](const Coords& x, const Coords& y) {
        const auto hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x > y;
    });

    auto make_root = [&](Coords beta, bool is_positive) {
        Root r;
        std::vector<Rational> w(n);
        for (std::size_t i = 0; i < n; ++i)
            if (beta[i] != 0)
                for (std::size_t j = 0; j < n; ++j) w[j] += Rational(beta[i] * a(i, j));
        r.weight_coords = Weight(std::move(w));
        const Rational half_length = squared_length(beta) / 2;
        r.coroot_coords.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c = Rational(beta[j]) * d[j] / half_length;
            auto ci = to_int64(c);
            if (!ci) throw Error(ErrorCode::InternalError, "coroot has non-integral simple-coroot coordinates");
            r.coroot_coords[j] = *ci;
        }
        r.simple_coords = std::move(beta);
        r.is_positive = is_positive;
        return r;
    };

    num_positive_ = positive.size();
    roots_.reserve(2 * num_positive_);
    for (const auto& beta : positive) roots_.push_back(make_root(beta, true));
    for (const auto& beta : positive) {
        Coords neg = beta;
        for (auto& c : neg) c = -c;
        if (!seen.contains(neg)) throw Error(ErrorCode::InternalError, "root system is not closed under negation");
        roots_.push_back(make_root(std::move(neg), false));
    }
    for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i].simple_coords, i);

    Weight twice_rho = Weight::zero(n);
    for (const auto& r : positive_roots()) twice_rho += r.weight_coords;
    rho_ = Rational(1, 2) * twice_rho;
    for (const auto& c : rho_.coords())
        if (c != 1) throw Error(ErrorCode::InternalError, "half-sum of positive roots is not the sum of fundamental weights");

    RationalMatrix a_rational(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a_rational(i, j) = Rational(a(i, j));
    auto inv = inverse(a_rational);
    if (!inv) throw Error(ErrorCode::NotFiniteType, "Cartan matrix is singular");
    inverse_cartan_ = std::move(*inv);

    // (omega_i, omega_k) = (A^{-1})[k][i] d_i.
    form_ = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) form_(i, k) = inverse_cartan_(k, i) * d[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (form_(i, k) != form_(k, i)) throw Error(ErrorCode::InternalError, "invariant form is not symmetric");
}

std::vector<std::size_t> RootSystem::positives() const {
    std::vector<std::size_t> idx(num_positive_);
    for (std::size_t i = 0; i < num_positive_; ++i) idx[i] = i;
    return idx;
}

const Root& RootSystem::simple_root(std::size_t i) const {
    if (i >= rank())
        throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i) + " out of range");
    return roots_[i];
}

std::size_t RootSystem::negation_index(std::size_t index) const {
    if (index >= roots_.size()) throw Error(ErrorCode::IndexOutOfRange, "root index out of range");
    return index < num_positive_ ? index + num_positive_ : index - num_positive_;
}

std::optional<std::size_t> RootSystem::find(std::span<const std::int64_t> simple_coords) const {
    auto it = index_.find(std::vector<std::int64_t>(simple_coords.begin(), simple_coords.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Rational> RootSystem::to_simple_coords(const Weight& w) const {
    require_same_rank(w.rank(), rank());
    const std::size_t n = rank();
    std::vector<Rational> s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (w[j] != 0) s[i] += w[j] * inverse_cartan_(j, i);
    return s;
}

RootSystem build_root_system(const CartanMatrix& cartan) { return RootSystem(cartan); }

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b) {
    require_same_rank(a.rank(), rs.rank());
    require_same_rank(b.rank(), rs.rank());
    const auto& g = rs.form();
    Rational s = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < rs.rank(); ++k)
            if (b[k] != 0) s += a[i] * g(i, k) * b[k];
    }
    return s;
}

Rational pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha) {
    require_same_rank(lambda.rank(), rs.rank());
    require_same_rank(alpha.coroot_coords.size(), rs.rank());
    Rational s = 0;
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (alpha.coroot_coords[j] != 0) s += alpha.coroot_coords[j] * lambda[j];
    return s;
}

SumClass classify_sum(const RootSystem& rs, const Root& alpha, const Root& beta) {
    require_same_rank(alpha.simple_coords.size(), rs.rank());
    require_same_rank(beta.simple_coords.size(), rs.rank());
    std::vector<std::int64_t> sum(rs.rank());
    bool zero = true;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = alpha.simple_coords[i] + beta.simple_coords[i];
        zero = zero && sum[i] == 0;
    }
    if (zero) return {SumKind::Zero, std::nullopt};
    if (auto idx = rs.find(sum)) return {SumKind::Root, idx};
    return {SumKind::NotARoot, std::nullopt};
}

}  // namespace flagrep
