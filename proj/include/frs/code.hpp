#pragma once

#include "frs/field.hpp"
#include "frs/poly.hpp"
#include "frs/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace frs {

/// Parameters of an m-folded Reed-Solomon code: messages are polynomials
/// with fewer than msg_len coefficients, evaluated at gamma^0 .. gamma^(n-1)
/// and bundled into N = n/m symbols of m consecutive evaluations each.
///
/// msg_len is the stored quantity; the rate R = msg_len/n is derived on
/// demand so no rounding ambiguity can creep in.
class FrsParams {
  public:
    FrsParams(PrimeField field, std::size_t m, std::size_t n, std::size_t msg_len);

    const PrimeField& field() const { return field_; }
    std::size_t m() const { return m_; }
    std::size_t n() const { return n_; }
    std::size_t msg_len() const { return msg_len_; }
    std::size_t folded_length() const { return n_ / m_; } // N

    Rational rate() const { return Rational(static_cast<std::int64_t>(msg_len_), static_cast<std::int64_t>(n_)); }

    /// gamma^(symbol*m + slot), the evaluation point behind entry `slot` of
    /// folded position `symbol` (both 0-based).
    Fe eval_point(std::size_t symbol, std::size_t slot) const;

    bool operator==(const FrsParams& other) const = default;

  private:
    PrimeField field_;
    std::size_t m_;
    std::size_t n_;
    std::size_t msg_len_;
};

/// N folded symbols, each a column of m field elements.
class FoldedWord {
  public:
    FoldedWord(std::vector<std::vector<Fe>> symbols);

    std::size_t length() const { return symbols_.size(); } // N
    std::size_t width() const { return symbols_.empty() ? 0 : symbols_[0].size(); } // m
    const std::vector<Fe>& symbol(std::size_t i) const { return symbols_[i]; }
    std::vector<Fe>& symbol(std::size_t i) { return symbols_[i]; }

    bool operator==(const FoldedWord& other) const = default;

  private:
    std::vector<std::vector<Fe>> symbols_;
};

/// Encodes f (requires deg f < msg_len): symbol i holds
/// (f(gamma^(i*m)), ..., f(gamma^(i*m+m-1))).
FoldedWord encode(const FrsParams& params, const Poly& f);

/// Fraction of folded positions where the two words differ (a position
/// counts as different if any of its m entries differs). Exact rational.
Rational distance(const FoldedWord& a, const FoldedWord& b);
Rational agreement(const FoldedWord& a, const FoldedWord& b);

/// Number of folded positions where the words agree entirely.
std::size_t agreement_count(const FoldedWord& a, const FoldedWord& b);

/// Replaces exactly e folded symbols with fresh random columns, each
/// guaranteed to differ from the original in at least one entry, so
/// distance(w, result) is exactly e/N. Deterministic given the seed.
FoldedWord corrupt(const FrsParams& params, const FoldedWord& w, std::size_t e, std::uint64_t seed);

/// Exact minimum distance of the code, via the minimum weight of a nonzero
/// codeword (the code is linear, so pairwise minima and the minimum weight
/// coincide). Enumerates all q^msg_len messages; throws LimitExceeded when
/// that exceeds `limit`.
Rational code_distance(const FrsParams& params, std::uint64_t limit = 10'000'000);

// Text formats. A word is N lines of m space-separated decimal values;
// params are a single line "q gamma m n msg_len". Parse errors carry
// 1-based line numbers.
void write_word(std::ostream& out, const FoldedWord& w);
FoldedWord read_word(std::istream& in, const FrsParams& params);
void write_params(std::ostream& out, const FrsParams& params);
FrsParams read_params(std::istream& in);

} // namespace frs
