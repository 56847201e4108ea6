#include "pcoh/fp.hpp"

#include "pcoh/error.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace pcoh {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Fp fp_inv(Fp a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw DomainError("fp_inv: zero has no inverse");
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Fp>(t);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (!is_prime(p)) throw InputError("FpMatrix: modulus must be prime");
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p,
                             const std::vector<std::vector<long long>>& rows,
                             std::size_t cols_if_empty) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? cols_if_empty : rows[0].size();
    FpMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InputError("FpMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            long long v = rows[i][j] % static_cast<long long>(p);
            if (v < 0) v += p;
            m.a_[i * c + j] = static_cast<Fp>(v);
        }
    }
    return m;
}

namespace {
void check_same_p(const FpMatrix& a, const FpMatrix& b, const char* where) {
    if (a.p() != b.p()) throw InputError(std::string(where) + ": mixed moduli");
}
} // namespace

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    check_same_p(*this, rhs, "FpMatrix::operator*");
    if (cols_ != rhs.rows_) throw InputError("FpMatrix::operator*: dimension mismatch");
    FpMatrix out(p_, rows_, rhs.cols_);
    const std::uint64_t p = p_;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t v = a_[i * cols_ + k];
            if (v == 0) continue;
            const Fp* src = rhs.a_.data() + k * rhs.cols_;
            Fp* dst = out.a_.data() + i * rhs.cols_;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                dst[j] = static_cast<Fp>((dst[j] + v * src[j]) % p);
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    check_same_p(*this, rhs, "FpMatrix::operator+");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("FpMatrix::operator+: dimension mismatch");
    FpMatrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + rhs.a_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    check_same_p(*this, rhs, "FpMatrix::operator-");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("FpMatrix::operator-: dimension mismatch");
    FpMatrix out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = (a_[i] + p_ - rhs.a_[i]) % p_;
    return out;
}

FpMatrix FpMatrix::scaled(Fp c) const {
    FpMatrix out(p_, rows_, cols_);
    std::uint64_t cc = c % p_;
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = static_cast<Fp>((cc * a_[i]) % p_);
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix out(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Fp v) { return v == 0; });
}

std::vector<Fp> FpMatrix::apply(std::span<const Fp> v) const {
    if (v.size() != cols_) throw InputError("FpMatrix::apply: dimension mismatch");
    std::vector<Fp> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const Fp* r = a_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<std::uint64_t>(r[j]) * v[j];
        out[i] = static_cast<Fp>(acc % p_);
    }
    return out;
}

void FpMatrix::set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    check_same_p(*this, b, "FpMatrix::set_block");
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw InputError("FpMatrix::set_block: block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        std::copy_n(b.a_.data() + i * b.cols_, b.cols_, a_.data() + (r0 + i) * cols_ + c0);
}

FpMatrix FpMatrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
    if (r0 + h > rows_ || c0 + w > cols_) throw InputError("FpMatrix::block: out of range");
    FpMatrix out(p_, h, w);
    for (std::size_t i = 0; i < h; ++i)
        std::copy_n(a_.data() + (r0 + i) * cols_ + c0, w, out.a_.data() + i * w);
    return out;
}

FpMatrix FpMatrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

std::uint64_t FpMatrix::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(p_);
    mix(rows_);
    mix(cols_);
    for (Fp v : a_) mix(v);
    return h;
}

FpMatrix stack_rows(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a, b, "stack_rows");
    if (a.cols() != b.cols()) throw InputError("stack_rows: width mismatch");
    FpMatrix out(a.p(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

namespace {

// Packed elimination over F_2.  Row-major bitset, 64 columns per word.
struct PackedF2 {
    std::size_t rows, cols, words;
    std::vector<std::uint64_t> bits;

    explicit PackedF2(const FpMatrix& m)
        : rows(m.rows()), cols(m.cols()), words((m.cols() + 63) / 64), bits(rows * words, 0) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (m(i, j)) bits[i * words + (j >> 6)] |= 1ull << (j & 63);
    }

    bool get(std::size_t i, std::size_t j) const {
        return (bits[i * words + (j >> 6)] >> (j & 63)) & 1;
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = bits.data() + dst * words;
        const std::uint64_t* s = bits.data() + src * words;
        for (std::size_t w = 0; w < words; ++w) d[w] ^= s[w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(bits.begin() + a * words, bits.begin() + (a + 1) * words,
                         bits.begin() + b * words);
    }
};

RrefResult rref_f2(const FpMatrix& m) {
    PackedF2 pk(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pk.cols && r < pk.rows; ++c) {
        std::size_t piv = r;
        while (piv < pk.rows && !pk.get(piv, c)) ++piv;
        if (piv == pk.rows) continue;
        pk.swap_rows(r, piv);
        for (std::size_t i = 0; i < pk.rows; ++i)
            if (i != r && pk.get(i, c)) pk.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    FpMatrix red(2, m.rows(), m.cols());
    for (std::size_t i = 0; i < pk.rows; ++i)
        for (std::size_t j = 0; j < pk.cols; ++j)
            if (pk.get(i, j)) red.set(i, j, 1);
    return {std::move(red), std::move(pivots), r};
}

std::size_t rank_f2(const FpMatrix& m) {
    PackedF2 pk(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < pk.cols && r < pk.rows; ++c) {
        std::size_t piv = r;
        while (piv < pk.rows && !pk.get(piv, c)) ++piv;
        if (piv == pk.rows) continue;
        pk.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < pk.rows; ++i)
            if (pk.get(i, c)) pk.xor_rows(i, r);
        ++r;
    }
    return r;
}

} // namespace

RrefResult rref(const FpMatrix& m) {
    if (m.p() == 2) return rref_f2(m);
    FpMatrix red = m;
    const std::uint32_t p = m.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && red(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            std::swap_ranges(red.row(r).begin(), red.row(r).end(), red.row(piv).begin());
        Fp inv = fp_inv(red(r, c), p);
        if (inv != 1) {
            auto row = red.row(r);
            for (auto& v : row) v = static_cast<Fp>((static_cast<std::uint64_t>(v) * inv) % p);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            std::uint64_t f = red(i, c);
            if (f == 0) continue;
            auto dst = red.row(i);
            auto src = red.row(r);
            for (std::size_t j = 0; j < m.cols(); ++j)
                dst[j] = static_cast<Fp>((dst[j] + (p - 1) * f % p * src[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(red), std::move(pivots), r};
}

std::size_t rank(const FpMatrix& m) {
    if (m.p() == 2) return rank_f2(m);
    return rref(m).rank;
}

FpMatrix kernel_basis(const FpMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::size_t dim = m.cols() - rr.rank;
    FpMatrix out(m.p(), dim, m.cols());
    std::size_t row = 0;
    const std::uint32_t p = m.p();
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out.set(row, f, 1);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            Fp v = rr.reduced(i, f);
            if (v) out.set(row, rr.pivots[i], p - v);
        }
        ++row;
    }
    return out;
}

std::optional<FpMatrix> solve_matrix(const FpMatrix& a, const FpMatrix& b) {
    check_same_p(a, b, "solve_matrix");
    if (a.rows() != b.rows()) throw InputError("solve_matrix: dimension mismatch");
    FpMatrix aug(a.p(), a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    RrefResult rr = rref(aug);
    // a pivot beyond a's columns witnesses inconsistency
    for (std::size_t c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    FpMatrix x(a.p(), a.cols(), b.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(rr.pivots[i], j, rr.reduced(i, a.cols() + j));
    return x;
}

std::optional<std::vector<Fp>> solve(const FpMatrix& a, std::span<const Fp> b) {
    if (b.size() != a.rows()) throw InputError("solve: dimension mismatch");
    FpMatrix bm(a.p(), a.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm.set(i, 0, b[i]);
    auto x = solve_matrix(a, bm);
    if (!x) return std::nullopt;
    std::vector<Fp> out(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) out[i] = (*x)(i, 0);
    return out;
}

FpMatrix row_space_basis(const FpMatrix& m) {
    RrefResult rr = rref(m);
    return rr.reduced.block(0, 0, rr.rank, m.cols());
}

std::vector<Fp> reduce_mod_rows(const FpMatrix& basis, std::span<const Fp> v) {
    if (v.size() != basis.cols() && basis.rows() > 0)
        throw InputError("reduce_mod_rows: dimension mismatch");
    std::vector<Fp> out(v.begin(), v.end());
    const std::uint32_t p = basis.p();
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        // pivot of row i = first nonzero column
        std::size_t c = 0;
        while (c < basis.cols() && basis(i, c) == 0) ++c;
        if (c == basis.cols()) continue;
        std::uint64_t f = out[c];
        if (f == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            out[j] = static_cast<Fp>((out[j] + (p - 1) * f % p * basis(i, j)) % p);
    }
    return out;
}

bool in_row_space(const FpMatrix& basis, std::span<const Fp> v) {
    auto r = reduce_mod_rows(basis, v);
    return std::all_of(r.begin(), r.end(), [](Fp x) { return x == 0; });
}

FpMatrix quotient_map(const FpMatrix& basis, std::size_t ambient_dim) {
    const std::uint32_t p = basis.p();
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (c < basis.cols() && basis(i, c) == 0) ++c;
        if (c == basis.cols()) throw InputError("quotient_map: zero row in basis");
        pivots.push_back(c);
    }
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    FpMatrix q(p, ambient_dim - basis.rows(), ambient_dim);
    std::size_t row = 0;
    for (std::size_t f = 0; f < ambient_dim; ++f) {
        if (is_pivot[f]) continue;
        q.set(row, f, 1);
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            Fp v = basis(i, f);
            if (v) q.set(row, pivots[i], p - v);
        }
        ++row;
    }
    return q;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
    return solve_matrix(m, FpMatrix::identity(m.p(), m.rows()));
}

RankAccumulator::RankAccumulator(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), words_((cols + 63) / 64), pivot_row_(cols, -1) {
    if (!is_prime(p)) throw InputError("RankAccumulator: modulus must be prime");
}

void RankAccumulator::add_row(const std::vector<std::pair<std::size_t, Fp>>& entries) {
    if (p_ == 2) {
        std::vector<std::uint64_t> row(words_, 0);
        for (auto [c, v] : entries)
            if (v % 2) row[c >> 6] ^= 1ull << (c & 63);
        for (std::size_t w = 0; w < words_; ++w) {
            while (row[w]) {
                std::size_t c = (w << 6) + static_cast<std::size_t>(std::countr_zero(row[w]));
                std::ptrdiff_t pr = pivot_row_[c];
                if (pr < 0) {
                    pivot_row_[c] = static_cast<std::ptrdiff_t>(rows_f2_.size());
                    rows_f2_.push_back(std::move(row));
                    ++rank_;
                    return;
                }
                const auto& stored = rows_f2_[static_cast<std::size_t>(pr)];
                for (std::size_t k = w; k < words_; ++k) row[k] ^= stored[k];
            }
        }
        return;
    }
    std::vector<Fp> row(cols_, 0);
    for (auto [c, v] : entries) row[c] = (row[c] + v) % p_;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        std::ptrdiff_t pr = pivot_row_[c];
        if (pr < 0) {
            Fp inv = fp_inv(row[c], p_);
            if (inv != 1)
                for (std::size_t j = c; j < cols_; ++j)
                    row[j] = static_cast<Fp>((static_cast<std::uint64_t>(row[j]) * inv) % p_);
            pivot_row_[c] = static_cast<std::ptrdiff_t>(rows_fp_.size());
            rows_fp_.push_back(std::move(row));
            ++rank_;
            return;
        }
        const auto& stored = rows_fp_[static_cast<std::size_t>(pr)];
        std::uint64_t f = p_ - row[c];
        for (std::size_t j = c; j < cols_; ++j)
            row[j] = static_cast<Fp>((row[j] + f * stored[j]) % p_);
    }
}

Zp2Scalar::Zp2Scalar(std::uint32_t p_, std::int64_t v) : p(p_) {
    std::int64_t m = static_cast<std::int64_t>(p_) * p_;
    v %= m;
    if (v < 0) v += m;
    value = static_cast<std::uint32_t>(v);
}

Zp2Scalar Zp2Scalar::operator+(const Zp2Scalar& o) const {
    return Zp2Scalar(p, static_cast<std::int64_t>(value) + o.value);
}
Zp2Scalar Zp2Scalar::operator-(const Zp2Scalar& o) const {
    return Zp2Scalar(p, static_cast<std::int64_t>(value) - o.value);
}
Zp2Scalar Zp2Scalar::operator*(const Zp2Scalar& o) const {
    return Zp2Scalar(p, static_cast<std::int64_t>(value) * o.value);
}

Fp Zp2Scalar::quotient_by_p() const {
    if (!divisible_by_p()) throw DomainError("Zp2Scalar::quotient_by_p: not divisible by p");
    return (value / p) % p;
}

} // namespace pcoh
