#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parhom/graph.hpp"

namespace parhom {

using BigNat = boost::multiprecision::cpp_int;

/// Square matrix over GF(2), rows packed into 64-bit words.
class GF2Matrix {
public:
    GF2Matrix() = default;
    explicit GF2Matrix(int n);

    static GF2Matrix identity(int n);
    static GF2Matrix adjacency(const Graph& g);

    int dimension() const noexcept { return n_; }
    bool get(int r, int c) const {
        return (bits_[index(r, c)] >> (c & 63)) & 1U;
    }
    void set(int r, int c, bool value);

    GF2Matrix operator*(const GF2Matrix& rhs) const;
    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(words_) + static_cast<std::size_t>(c >> 6);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Parities of walk counts in a fixed graph. Powers of the adjacency matrix
/// are computed on demand and cached; lookups are safe from several threads.
class WalkParity {
public:
    explicit WalkParity(const Graph& g);

    bool operator()(int u, int v, int k) const;
    const GF2Matrix& power(int k) const;

private:
    GF2Matrix adjacency_;
    mutable std::mutex mutex_;
    mutable std::map<int, GF2Matrix> powers_;
};

inline constexpr int kDefaultWalkCountCap = 64;

bool walk_parity(const Graph& g, int u, int v, int k);

/// Exact number of k-walks from u to v. Throws BudgetError when k > cap.
BigNat walk_count(const Graph& g, int u, int v, int k, int cap = kDefaultWalkCountCap);

bool degree_parity(const Graph& g, int v);

}  // namespace parhom
