// GF(2) vectors and subspaces, bitmask-backed.
//
// Vectors are fixed-length bit vectors (coordinate i = coefficient of the
// i-th basis element). Subspaces keep a reduced row echelon basis so that
// equal subspaces compare equal structurally.

#ifndef SMALLCOVER_GF2_HPP
#define SMALLCOVER_GF2_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallcover {

/// Structured domain error; `kind` names the violated condition.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

/// Vector in (Z_2)^len, len <= 32.
struct Gf2Vec {
    std::uint32_t bits = 0;
    int len = 0;

    Gf2Vec() = default;
    Gf2Vec(std::uint32_t b, int n) : bits(b), len(n) {
        if (n < 0 || n > 32) throw DomainError("WrongLength", "vector length out of range");
        if (n < 32 && (b >> n) != 0) throw DomainError("WrongLength", "bits exceed length");
    }

    static Gf2Vec zero(int n) { return Gf2Vec(0, n); }
    static Gf2Vec unit(int i, int n) { return Gf2Vec(std::uint32_t{1} << i, n); }

    /// Parse "101" style strings; character j is the coordinate of e_{j+1}.
    static Gf2Vec parse(const std::string& s) {
        std::uint32_t b = 0;
        if (s.size() > 32) throw DomainError("WrongLength", "bit string too long");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b |= std::uint32_t{1} << i;
            else if (s[i] != '0')
                throw DomainError("WrongLength", "bit string must consist of 0/1: " + s);
        }
        return Gf2Vec(b, static_cast<int>(s.size()));
    }

    bool is_zero() const { return bits == 0; }
    bool get(int i) const { return (bits >> i) & 1u; }
    int weight() const { return std::popcount(bits); }

    Gf2Vec operator+(const Gf2Vec& o) const {
        if (len != o.len) throw DomainError("WrongLength", "adding vectors of different lengths");
        return Gf2Vec(bits ^ o.bits, len);
    }

    /// Standard bilinear form <a,b> = sum a_i b_i over GF(2).
    bool dot(const Gf2Vec& o) const {
        if (len != o.len) throw DomainError("WrongLength", "pairing vectors of different lengths");
        return std::popcount(bits & o.bits) & 1;
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(len), '0');
        for (int i = 0; i < len; ++i)
            if (get(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const Gf2Vec&, const Gf2Vec&) = default;
    friend auto operator<=>(const Gf2Vec& a, const Gf2Vec& b) {
        if (auto c = a.len <=> b.len; c != 0) return c;
        return a.bits <=> b.bits;
    }
};

/// Subspace of (Z_2)^len in reduced row echelon form. Echelon rows are kept
/// sorted by pivot, so two objects spanning the same subspace are equal.
class Gf2Subspace {
public:
    explicit Gf2Subspace(int len = 0) : len_(len) {}

    int ambient_len() const { return len_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    /// Insert a vector; returns true if it enlarged the span.
    bool insert(Gf2Vec v) {
        if (v.len != len_) throw DomainError("WrongLength", "inserting vector of wrong length");
        std::uint32_t x = reduce_bits(v.bits);
        if (x == 0) return false;
        int pivot = lowest_bit(x);
        auto it = rows_.begin();
        while (it != rows_.end() && lowest_bit(*it) < pivot) ++it;
        rows_.insert(it, x);
        // Re-reduce earlier rows against the new pivot.
        for (auto& r : rows_)
            if (r != x && ((r >> pivot) & 1u)) r ^= x;
        return true;
    }

    bool contains(const Gf2Vec& v) const {
        if (v.len != len_) throw DomainError("WrongLength", "membership test of wrong length");
        return reduce_bits(v.bits) == 0;
    }

    /// Canonical coset representative (residue after echelon reduction).
    Gf2Vec coset_rep(const Gf2Vec& v) const { return Gf2Vec(reduce_bits(v.bits), len_); }

    const std::vector<std::uint32_t>& rows() const { return rows_; }

    std::vector<Gf2Vec> basis() const {
        std::vector<Gf2Vec> out;
        out.reserve(rows_.size());
        for (auto r : rows_) out.emplace_back(r, len_);
        return out;
    }

    friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;

private:
    static int lowest_bit(std::uint32_t x) { return std::countr_zero(x); }

    std::uint32_t reduce_bits(std::uint32_t x) const {
        for (auto r : rows_) {
            int p = lowest_bit(r);
            if ((x >> p) & 1u) x ^= r;
        }
        return x;
    }

    int len_ = 0;
    std::vector<std::uint32_t> rows_;  // reduced echelon, sorted by pivot
};

inline Gf2Subspace span_of(const std::vector<Gf2Vec>& vs, int len) {
    Gf2Subspace s(len);
    for (const auto& v : vs) s.insert(v);
    return s;
}

inline int gf2_rank(const std::vector<Gf2Vec>& vs, int len) { return span_of(vs, len).dim(); }

/// Solve sum_i c_i cols[i] = target over GF(2). The columns must be linearly
/// independent; returns the coefficient vector c (length = cols.size()).
inline std::vector<bool> gf2_solve(const std::vector<Gf2Vec>& cols, const Gf2Vec& target) {
    const int k = static_cast<int>(cols.size());
    // Gaussian elimination on the augmented system, tracking column ops on
    // the identity to recover coefficients.
    std::vector<std::uint32_t> a(cols.size());
    std::vector<std::uint32_t> coeff(cols.size());
    for (int i = 0; i < k; ++i) {
        if (cols[static_cast<std::size_t>(i)].len != target.len)
            throw DomainError("WrongLength", "solve with mismatched lengths");
        a[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)].bits;
        coeff[static_cast<std::size_t>(i)] = std::uint32_t{1} << i;
    }
    std::uint32_t x = target.bits;
    std::uint32_t c = 0;
    std::vector<bool> used(cols.size(), false);
    for (int bit = 0; bit < target.len; ++bit) {
        int pivot = -1;
        for (int i = 0; i < k; ++i)
            if (!used[static_cast<std::size_t>(i)] && ((a[static_cast<std::size_t>(i)] >> bit) & 1u)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        used[static_cast<std::size_t>(pivot)] = true;
        for (int i = 0; i < k; ++i)
            if (i != pivot && ((a[static_cast<std::size_t>(i)] >> bit) & 1u)) {
                a[static_cast<std::size_t>(i)] ^= a[static_cast<std::size_t>(pivot)];
                coeff[static_cast<std::size_t>(i)] ^= coeff[static_cast<std::size_t>(pivot)];
            }
        if ((x >> bit) & 1u) {
            x ^= a[static_cast<std::size_t>(pivot)];
            c ^= coeff[static_cast<std::size_t>(pivot)];
        }
    }
    if (x != 0) throw DomainError("InternalInvariantViolation", "inconsistent GF(2) system");
    std::vector<bool> out(cols.size());
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = (c >> i) & 1u;
    return out;
}

}  // namespace smallcover

#endif  // SMALLCOVER_GF2_HPP
