#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace radial::gf2 {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are
/// always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    bool any() const;
    std::size_t count() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector& rhs) const;
    std::vector<std::size_t> ones() const;

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    /// '0'/'1' characters, index 0 first.
    std::string to_string() const;
    static BitVector from_string(std::string_view bits);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Row {
    std::vector<std::uint32_t> support;  ///< column indices with coefficient 1
    bool rhs = false;
};

/// Linear system A x = b over GF(2), rows stored sparsely.
struct GF2System {
    std::size_t cols = 0;
    std::vector<Row> rows;

    std::size_t nonzeros() const;
};

/// Residual check: every row's support XOR equals its rhs.
/// Throws Error(LengthMismatch) if the assignment length differs from cols.
bool verify_certificate(const GF2System& s, const BitVector& assignment);

/// y certifies inconsistency iff the XOR of the rows it selects has empty
/// support and rhs 1. Throws Error(LengthMismatch) if y.size() != rows.
bool verify_inconsistency(const GF2System& s, const BitVector& witness);

enum class Status { Solvable, Inconsistent, Unknown };
enum class Engine { Dense, Sparse };
enum class Strategy { Dense, Sparse, Auto };

std::string_view to_string(Status s);
std::string_view to_string(Engine e);
std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view text);

struct SolveOutcome {
    Status status = Status::Unknown;
    BitVector assignment;  ///< length cols when Solvable
    BitVector witness;     ///< length rows when Inconsistent
    Engine engine = Engine::Dense;
    int sparse_trials = 0;  ///< trials spent by the sparse engine, if it ran
    std::size_t rank = 0;   ///< set by the dense engine
};

/// Gaussian elimination on bit-packed rows with an identity tag block, so an
/// inconsistency is returned together with the combination of input rows that
/// produced 0 = 1. Free variables are set to 0. Never returns Unknown.
SolveOutcome solve_dense(const GF2System& s);

/// Some nonzero y with y A = 0 (ignoring the rhs), if the rows are dependent.
std::optional<BitVector> find_row_dependency(const GF2System& s);

/// Wiedemann-style black-box solver: the system is squared by a random sparse
/// preconditioner, the minimal polynomial of the Krylov sequence is found with
/// Berlekamp-Massey, and any candidate is residual-checked against the
/// original system. Returns Unknown after `trials` failed attempts; never
/// returns Inconsistent and never an unverified Solvable.
SolveOutcome solve_sparse(const GF2System& s, std::uint64_t seed, int trials);

/// Sparse and Auto run the sparse engine first and fall back to dense on
/// Unknown; the sparse engine alone never certifies inconsistency. Never
/// returns Unknown, and every outcome carries a verified certificate.
SolveOutcome solve(const GF2System& s, Strategy strategy, std::uint64_t seed = 0, int trials = 8);

/// Connection polynomial of the shortest LFSR generating `seq`:
/// returns c with c[0] = 1 and seq[j] = sum_{i=1..L} c[i] seq[j-i] for j >= L,
/// where L = c.size() - 1.
std::vector<std::uint8_t> berlekamp_massey(const std::vector<std::uint8_t>& seq);

/// Plain-text export: "cols rows" then one "rhs c1 c2 ..." line per row.
std::string export_text(const GF2System& s);
GF2System import_text(std::string_view text);

}  // namespace radial::gf2
