#include "parhom/parity.hpp"

#include "parhom/errors.hpp"

namespace parhom {

GF2Matrix::GF2Matrix(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0) {}

GF2Matrix GF2Matrix::identity(int n) {
    GF2Matrix m(n);
    for (int v = 0; v < n; ++v) m.set(v, v, true);
    return m;
}

GF2Matrix GF2Matrix::adjacency(const Graph& g) {
    GF2Matrix m(g.order());
    for (auto [u, v] : g.edges()) {
        m.set(u, v, true);
        m.set(v, u, true);
    }
    return m;
}

void GF2Matrix::set(int r, int c, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    auto& word = bits_[index(r, c)];
    word = value ? (word | mask) : (word & ~mask);
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
    if (n_ != rhs.n_) throw PreconditionError("GF2Matrix dimension mismatch");
    GF2Matrix out(n_);
    const auto w = static_cast<std::size_t>(words_);
    for (int r = 0; r < n_; ++r) {
        std::uint64_t* dst = out.bits_.data() + static_cast<std::size_t>(r) * w;
        for (int c = 0; c < n_; ++c) {
            if (!get(r, c)) continue;
            const std::uint64_t* src = rhs.bits_.data() + static_cast<std::size_t>(c) * w;
            for (std::size_t k = 0; k < w; ++k) dst[k] ^= src[k];
        }
    }
    return out;
}

WalkParity::WalkParity(const Graph& g) : adjacency_(GF2Matrix::adjacency(g)) {}

const GF2Matrix& WalkParity::power(int k) const {
    if (k < 0) throw PreconditionError("negative walk length");
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(k); it != powers_.end()) return it->second;

    // Square-and-multiply over cached powers of two.
    GF2Matrix result = GF2Matrix::identity(adjacency_.dimension());
    GF2Matrix base = adjacency_;
    int bit = 1;
    for (int rest = k; rest > 0; rest >>= 1, bit <<= 1) {
        if (rest & 1) result = result * base;
        if (rest > 1) {
            auto it = powers_.find(bit << 1);
            if (it == powers_.end()) it = powers_.emplace(bit << 1, base * base).first;
            base = it->second;
        }
    }
    return powers_.emplace(k, std::move(result)).first->second;
}

bool WalkParity::operator()(int u, int v, int k) const { return power(k).get(u, v); }

bool walk_parity(const Graph& g, int u, int v, int k) { return WalkParity(g)(u, v, k); }

BigNat walk_count(const Graph& g, int u, int v, int k, int cap) {
    if (k < 0) throw PreconditionError("negative walk length");
    if (k > cap) throw BudgetError("walk length " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
    std::vector<BigNat> row(static_cast<std::size_t>(g.order())), next(row.size());
    row[static_cast<std::size_t>(u)] = 1;
    for (int step = 0; step < k; ++step) {
        for (auto& x : next) x = 0;
        for (int a = 0; a < g.order(); ++a) {
            const auto& here = row[static_cast<std::size_t>(a)];
            if (here.is_zero()) continue;
            for (int b : g.neighbors(a)) next[static_cast<std::size_t>(b)] += here;
        }
        row.swap(next);
    }
    return row[static_cast<std::size_t>(v)];
}

bool degree_parity(const Graph& g, int v) { return (g.degree(v) & 1) != 0; }

}  // namespace parhom
