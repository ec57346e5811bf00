#include <algorithm>
#include <bit>
#include <random>

#include "radial/error.hpp"
#include "radial/gf2.hpp"

namespace radial::gf2 {

std::vector<std::uint8_t> berlekamp_massey(const std::vector<std::uint8_t>& seq) {
    std::vector<std::uint8_t> c{1};
    std::vector<std::uint8_t> b{1};
    std::size_t len = 0;
    std::size_t shift = 1;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        std::uint8_t d = seq[n] & 1U;
        for (std::size_t i = 1; i <= len && i < c.size(); ++i) d ^= c[i] & seq[n - i];
        if (d == 0) {
            ++shift;
            continue;
        }
        std::vector<std::uint8_t> prev = c;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] ^= b[i];
        if (2 * len <= n) {
            len = n + 1 - len;
            b = std::move(prev);
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(len + 1, 0);
    return c;
}

namespace {

/// x -> M x for the squared operator M. Rows of A are applied sparsely; the
/// random preconditioner is a list of index sets.
///
///   tall or square (rows >= cols): M = P A,  P: cols x rows,  target P b
///   wide           (rows <  cols): M = A Q,  Q: cols x rows,  x = Q z
class SquaredOperator {
public:
    SquaredOperator(const GF2System& s, std::mt19937_64& rng) : sys_(s) {
        const std::size_t rows = s.rows.size();
        tall_ = rows >= s.cols;
        dim_ = tall_ ? s.cols : rows;
        // Both P and Q have one index set per column, drawn from the rows.
        const std::size_t weight = std::min<std::size_t>(rows, std::bit_width(std::max(rows, s.cols)) + 3);
        mix_.resize(s.cols);
        for (auto& set : mix_) {
            set.reserve(weight);
            for (std::size_t k = 0; k < weight; ++k) set.push_back(static_cast<std::uint32_t>(rng() % rows));
        }
    }

    std::size_t dim() const { return dim_; }
    bool tall() const { return tall_; }

    /// A x with x over the columns.
    BitVector apply_a(const BitVector& x) const {
        BitVector out(sys_.rows.size());
        for (std::size_t r = 0; r < sys_.rows.size(); ++r) {
            bool acc = false;
            for (std::uint32_t c : sys_.rows[r].support) acc ^= x.get(c);
            if (acc) out.set(r);
        }
        return out;
    }

    /// Combine entries of a row-space vector by the preconditioner sets.
    BitVector mix(const BitVector& y) const {
        BitVector out(mix_.size());
        for (std::size_t i = 0; i < mix_.size(); ++i) {
            bool acc = false;
            for (std::uint32_t j : mix_[i]) acc ^= y.get(j);
            if (acc) out.set(i);
        }
        return out;
    }

    BitVector apply(const BitVector& v) const {
        if (tall_) return mix(apply_a(v));  // P (A v)
        return apply_a(mix(v));             // A (Q v)
    }

    BitVector target(const BitVector& b) const { return tall_ ? mix(b) : b; }
    BitVector lift(const BitVector& z) const { return tall_ ? z : mix(z); }

private:
    const GF2System& sys_;
    bool tall_ = true;
    std::size_t dim_ = 0;
    std::vector<std::vector<std::uint32_t>> mix_;
};

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    auto words = v.words();
    for (auto& w : words) w = rng();
    if (n % 64 != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return v;
}

/// One Krylov round for M z = y. Returns the candidate, or nothing when the
/// minimal polynomial found is divisible by the variable (M is singular on
/// the Krylov space of y).
std::optional<BitVector> krylov_round(const SquaredOperator& op, const BitVector& y, std::mt19937_64& rng) {
    const std::size_t n = op.dim();
    const BitVector u = random_vector(n, rng);
    std::vector<std::uint8_t> seq;
    seq.reserve(2 * n + 2);
    BitVector v = y;
    for (std::size_t i = 0; i < 2 * n + 2; ++i) {
        seq.push_back(u.dot(v) ? 1 : 0);
        v = op.apply(v);
    }
    const std::vector<std::uint8_t> c = berlekamp_massey(seq);
    const std::size_t len = c.size() - 1;
    if (len == 0) return BitVector(n);  // u never sees y; the residual check decides
    if (c[len] == 0) return std::nullopt;
    // f(M) y = 0 with f(t) = sum c_i t^(len - i) and f(0) = 1, hence
    // y = M * sum_{j < len} c_j M^(len - 1 - j) y.
    BitVector z(n);
    for (std::size_t j = 0; j < len; ++j) {
        z = op.apply(z);
        if (c[j] != 0) z ^= y;
    }
    return z;
}

}  // namespace

SolveOutcome solve_sparse(const GF2System& s, std::uint64_t seed, int trials) {
    SolveOutcome out;
    out.engine = Engine::Sparse;

    BitVector b(s.rows.size());
    for (std::size_t r = 0; r < s.rows.size(); ++r) b.set(r, s.rows[r].rhs);
    for (const Row& r : s.rows)
        for (std::uint32_t c : r.support)
            if (c >= s.cols) throw Error(ErrorCode::InvalidArgument, "support column out of range");

    if (!b.any()) {
        out.status = Status::Solvable;
        out.assignment = BitVector(s.cols);
        return out;
    }
    if (s.cols == 0) {
        out.status = Status::Unknown;
        return out;
    }

    std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x9e3779b9U};
    std::mt19937_64 rng(sseq);
    constexpr int kRefinements = 4;
    for (int trial = 1; trial <= trials; ++trial) {
        out.sparse_trials = trial;
        SquaredOperator op(s, rng);
        const BitVector target = op.target(b);
        BitVector z(op.dim());
        BitVector residual = target;
        for (int round = 0; round < kRefinements && residual.any(); ++round) {
            auto step = krylov_round(op, residual, rng);
            if (!step) break;
            z ^= *step;
            residual = target ^ op.apply(z);
        }
        if (residual.any()) continue;
        BitVector x = op.lift(z);
        if (verify_certificate(s, x)) {
            out.status = Status::Solvable;
            out.assignment = std::move(x);
            return out;
        }
    }
    out.status = Status::Unknown;
    return out;
}

}  // namespace radial::gf2
