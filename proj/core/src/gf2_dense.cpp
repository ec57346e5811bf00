#include <algorithm>
#include <sstream>

#include "radial/error.hpp"
#include "radial/gf2.hpp"

namespace radial::gf2 {

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (rhs.size_ != size_) throw Error(ErrorCode::LengthMismatch, "bit vector sizes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::dot(const BitVector& rhs) const {
    if (rhs.size_ != size_) throw Error(ErrorCode::LengthMismatch, "bit vector sizes differ");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & rhs.words_[i];
    return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            out.set(i);
        else if (bits[i] != '0')
            throw Error(ErrorCode::MalformedInput, "bit string may contain only 0 and 1");
    }
    return out;
}

std::size_t GF2System::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows) total += r.support.size();
    return total;
}

bool verify_certificate(const GF2System& s, const BitVector& assignment) {
    if (assignment.size() != s.cols)
        throw Error(ErrorCode::LengthMismatch,
                    "assignment has " + std::to_string(assignment.size()) + " bits, system has " +
                        std::to_string(s.cols) + " columns");
    for (const Row& r : s.rows) {
        bool acc = false;
        for (std::uint32_t c : r.support) acc ^= assignment.get(c);
        if (acc != r.rhs) return false;
    }
    return true;
}

bool verify_inconsistency(const GF2System& s, const BitVector& witness) {
    if (witness.size() != s.rows.size())
        throw Error(ErrorCode::LengthMismatch, "witness length differs from row count");
    BitVector sum(s.cols);
    bool rhs = false;
    for (std::size_t r : witness.ones()) {
        for (std::uint32_t c : s.rows[r].support) sum.flip(c);
        rhs ^= s.rows[r].rhs;
    }
    return rhs && !sum.any();
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Solvable: return "SOLVABLE";
        case Status::Inconsistent: return "INCONSISTENT";
        case Status::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::string_view to_string(Engine e) {
    return e == Engine::Dense ? "dense" : "sparse";
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Dense: return "dense";
        case Strategy::Sparse: return "sparse";
        case Strategy::Auto: return "auto";
    }
    return "dense";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
    if (text == "dense") return Strategy::Dense;
    if (text == "sparse") return Strategy::Sparse;
    if (text == "auto") return Strategy::Auto;
    return std::nullopt;
}

namespace {

/// Row-major bit matrix [coefficients | rhs | tags]. The coefficient block
/// and the rhs share the first `coef_words` words; tags start on a word
/// boundary so that row combinations stay plain word XORs.
class Eliminator {
public:
    Eliminator(const GF2System& s, bool with_rhs)
        : rows_(s.rows.size()),
          cols_(s.cols),
          coef_words_((s.cols + 1 + 63) / 64),
          tag_words_((s.rows.size() + 63) / 64),
          stride_(coef_words_ + tag_words_),
          data_(rows_ * stride_, 0) {
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t* row = row_ptr(r);
            for (std::uint32_t c : s.rows[r].support) {
                if (c >= cols_) throw Error(ErrorCode::InvalidArgument, "support column out of range");
                row[c >> 6] ^= std::uint64_t{1} << (c & 63);
            }
            if (with_rhs && s.rows[r].rhs) row[cols_ >> 6] ^= std::uint64_t{1} << (cols_ & 63);
            row[coef_words_ + (r >> 6)] |= std::uint64_t{1} << (r & 63);
        }
    }

    /// Reduced row echelon form; returns the rank.
    std::size_t run() {
        std::size_t next = 0;
        for (std::size_t c = 0; c < cols_ && next < rows_; ++c) {
            const std::size_t w = c >> 6;
            const std::uint64_t mask = std::uint64_t{1} << (c & 63);
            std::size_t p = next;
            while (p < rows_ && (row_ptr(p)[w] & mask) == 0) ++p;
            if (p == rows_) continue;
            if (p != next) std::swap_ranges(row_ptr(p), row_ptr(p) + stride_, row_ptr(next));
            const std::uint64_t* pivot = row_ptr(next);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == next) continue;
                std::uint64_t* target = row_ptr(r);
                if ((target[w] & mask) == 0) continue;
                for (std::size_t k = w; k < stride_; ++k) target[k] ^= pivot[k];
            }
            pivot_col_.push_back(c);
            ++next;
        }
        return next;
    }

    bool coef_zero(std::size_t r) const {
        const std::uint64_t* row = row_ptr(r);
        const std::size_t full = cols_ >> 6;
        for (std::size_t k = 0; k < full; ++k)
            if (row[k] != 0) return false;
        const std::uint64_t tail = (std::uint64_t{1} << (cols_ & 63)) - 1;
        return (row[full] & tail) == 0;
    }
    bool rhs(std::size_t r) const { return (row_ptr(r)[cols_ >> 6] >> (cols_ & 63)) & 1U; }

    BitVector tag(std::size_t r) const {
        BitVector out(rows_);
        auto words = out.words();
        std::copy(row_ptr(r) + coef_words_, row_ptr(r) + stride_, words.begin());
        return out;
    }

    const std::vector<std::size_t>& pivot_cols() const { return pivot_col_; }

private:
    std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * stride_; }
    const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * stride_; }

    std::size_t rows_;
    std::size_t cols_;
    std::size_t coef_words_;
    std::size_t tag_words_;
    std::size_t stride_;
    std::vector<std::uint64_t> data_;
    std::vector<std::size_t> pivot_col_;
};

}  // namespace

SolveOutcome solve_dense(const GF2System& s) {
    Eliminator elim(s, true);
    const std::size_t rank = elim.run();

    SolveOutcome out;
    out.engine = Engine::Dense;
    out.rank = rank;
    for (std::size_t r = rank; r < s.rows.size(); ++r) {
        if (elim.rhs(r)) {
            out.status = Status::Inconsistent;
            out.witness = elim.tag(r);
            if (!verify_inconsistency(s, out.witness))
                throw Error(ErrorCode::Internal, "dense elimination produced an invalid inconsistency witness");
            return out;
        }
    }
    out.status = Status::Solvable;
    out.assignment = BitVector(s.cols);
    const auto& pivots = elim.pivot_cols();
    for (std::size_t r = 0; r < rank; ++r) out.assignment.set(pivots[r], elim.rhs(r));
    if (!verify_certificate(s, out.assignment))
        throw Error(ErrorCode::Internal, "dense elimination produced an assignment with nonzero residual");
    return out;
}

std::optional<BitVector> find_row_dependency(const GF2System& s) {
    Eliminator elim(s, false);
    const std::size_t rank = elim.run();
    if (rank == s.rows.size()) return std::nullopt;
    return elim.tag(rank);
}

SolveOutcome solve(const GF2System& s, Strategy strategy, std::uint64_t seed, int trials) {
    if (strategy == Strategy::Dense) return solve_dense(s);
    // The sparse engine cannot certify inconsistency, so Sparse falls back
    // exactly like Auto; `engine` records who produced the answer.
    SolveOutcome sparse = solve_sparse(s, seed, trials);
    if (sparse.status != Status::Unknown) return sparse;
    SolveOutcome dense = solve_dense(s);
    dense.sparse_trials = sparse.sparse_trials;
    return dense;
}

std::string export_text(const GF2System& s) {
    std::ostringstream os;
    os << s.cols << ' ' << s.rows.size() << '\n';
    for (const Row& r : s.rows) {
        os << (r.rhs ? 1 : 0);
        for (std::uint32_t c : r.support) os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

GF2System import_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    GF2System s;
    std::size_t rows = 0;
    if (!(is >> s.cols >> rows)) throw Error(ErrorCode::MalformedInput, "expected header \"cols rows\"", "line 1");
    std::string line;
    std::getline(is, line);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(is, line))
            throw Error(ErrorCode::MalformedInput, "missing row", "line " + std::to_string(i + 2));
        std::istringstream ls(line);
        int rhs = 0;
        if (!(ls >> rhs) || (rhs != 0 && rhs != 1))
            throw Error(ErrorCode::MalformedInput, "row must start with rhs 0 or 1", "line " + std::to_string(i + 2));
        Row row;
        row.rhs = rhs == 1;
        std::uint64_t c = 0;
        while (ls >> c) {
            if (c >= s.cols)
                throw Error(ErrorCode::MalformedInput, "column out of range", "line " + std::to_string(i + 2));
            row.support.push_back(static_cast<std::uint32_t>(c));
        }
        s.rows.push_back(std::move(row));
    }
    return s;
}

}  // namespace radial::gf2
