#include "frs/code.hpp"

#include "frs/errors.hpp"
#include "frs/rng.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace frs {

FrsParams::FrsParams(PrimeField field, std::size_t m, std::size_t n, std::size_t msg_len)
    : field_(field), m_(m), n_(n), msg_len_(msg_len) {
    if (m == 0) throw std::invalid_argument("FrsParams: folding parameter m must be positive");
    if (n == 0 || n % m != 0) throw std::invalid_argument("FrsParams: n must be a positive multiple of m");
    if (n > field_.gamma_order())
        throw std::invalid_argument("FrsParams: n exceeds the multiplicative order of gamma, evaluation points would repeat");
    if (msg_len == 0 || msg_len > n) throw std::invalid_argument("FrsParams: msg_len must be in [1, n]");
}

Fe FrsParams::eval_point(std::size_t symbol, std::size_t slot) const {
    if (symbol >= folded_length() || slot >= m_)
        throw std::out_of_range("FrsParams::eval_point: index out of range");
    return field_.pow(field_.gamma(), symbol * m_ + slot);
}

FoldedWord::FoldedWord(std::vector<std::vector<Fe>> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("FoldedWord: must contain at least one symbol");
    const std::size_t m = symbols_[0].size();
    if (m == 0) throw std::invalid_argument("FoldedWord: symbols must be non-empty");
    for (const auto& s : symbols_)
        if (s.size() != m) throw std::invalid_argument("FoldedWord: ragged symbol widths");
}

FoldedWord encode(const FrsParams& params, const Poly& f) {
    if (!(f.field() == params.field()))
        throw std::invalid_argument("encode: polynomial field does not match code parameters");
    if (f.degree() && *f.degree() >= params.msg_len())
        throw std::invalid_argument("encode: polynomial degree too large for msg_len");
    const std::size_t N = params.folded_length();
    std::vector<std::vector<Fe>> symbols(N, std::vector<Fe>(params.m()));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < params.m(); ++j)
            symbols[i][j] = f.eval(params.eval_point(i, j));
    return FoldedWord(std::move(symbols));
}

namespace {

void require_same_shape(const FoldedWord& a, const FoldedWord& b) {
    if (a.length() != b.length() || a.width() != b.width())
        throw std::invalid_argument("folded words have different shapes");
}

} // namespace

std::size_t agreement_count(const FoldedWord& a, const FoldedWord& b) {
    require_same_shape(a, b);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        if (a.symbol(i) == b.symbol(i)) ++agree;
    return agree;
}

Rational agreement(const FoldedWord& a, const FoldedWord& b) {
    return Rational(static_cast<std::int64_t>(agreement_count(a, b)),
                    static_cast<std::int64_t>(a.length()));
}

Rational distance(const FoldedWord& a, const FoldedWord& b) {
    return Rational(1) - agreement(a, b);
}

FoldedWord corrupt(const FrsParams& params, const FoldedWord& w, std::size_t e, std::uint64_t seed) {
    const std::size_t N = params.folded_length();
    if (w.length() != N || w.width() != params.m())
        throw std::invalid_argument("corrupt: word shape does not match parameters");
    if (e > N) throw std::invalid_argument("corrupt: cannot corrupt more symbols than the word has");

    Rng rng(seed);
    // Choose e distinct positions by a partial Fisher-Yates shuffle.
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    for (std::size_t i = 0; i < e; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(N - i));
        std::swap(order[i], order[j]);
    }

    FoldedWord out = w;
    for (std::size_t i = 0; i < e; ++i) {
        std::vector<Fe>& sym = out.symbol(order[i]);
        const std::vector<Fe>& orig = w.symbol(order[i]);
        // Resample until the column actually changed, so the requested
        // error count is exact rather than an upper bound.
        do {
            for (Fe& v : sym) v = rng.element(params.field());
        } while (sym == orig);
    }
    return out;
}

Rational code_distance(const FrsParams& params, std::uint64_t limit) {
    const std::uint64_t q = params.field().q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < params.msg_len(); ++i) {
        if (count > limit / q)
            throw LimitExceeded("code_distance: message space larger than enumeration limit");
        count *= q;
    }

    const std::size_t N = params.folded_length();
    std::size_t min_weight = N; // weight of any nonzero codeword is at most N
    std::vector<Fe> coeffs(params.msg_len(), 0);
    const FoldedWord zero = encode(params, Poly::zero(params.field()));
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        // idx written in base q gives the coefficient vector.
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = v % q;
            v /= q;
        }
        const FoldedWord cw = encode(params, Poly(params.field(), coeffs));
        const std::size_t weight = N - agreement_count(cw, zero);
        if (weight < min_weight) min_weight = weight;
    }
    return Rational(static_cast<std::int64_t>(min_weight), static_cast<std::int64_t>(N));
}

void write_word(std::ostream& out, const FoldedWord& w) {
    for (std::size_t i = 0; i < w.length(); ++i) {
        const auto& sym = w.symbol(i);
        for (std::size_t j = 0; j < sym.size(); ++j) {
            if (j) out << ' ';
            out << sym[j];
        }
        out << '\n';
    }
}

FoldedWord read_word(std::istream& in, const FrsParams& params) {
    const std::size_t N = params.folded_length();
    std::vector<std::vector<Fe>> symbols;
    symbols.reserve(N);
    std::string line;
    std::size_t line_no = 0;
    while (symbols.size() < N && std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue; // skip blanks
        std::istringstream ls(line);
        std::vector<Fe> sym;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= params.field().q())
                throw std::invalid_argument("read_word: line " + std::to_string(line_no) +
                                            ": value " + std::to_string(v) + " not reduced mod q");
            sym.push_back(v);
        }
        std::string trailing;
        if (ls.clear(), ls >> trailing)
            throw std::invalid_argument("read_word: line " + std::to_string(line_no) + ": non-numeric token '" + trailing + "'");
        if (sym.size() != params.m())
            throw std::invalid_argument("read_word: line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(params.m()) + " values, got " + std::to_string(sym.size()));
        symbols.push_back(std::move(sym));
    }
    if (symbols.size() != N)
        throw std::invalid_argument("read_word: expected " + std::to_string(N) + " symbol lines, got " +
                                    std::to_string(symbols.size()));
    return FoldedWord(std::move(symbols));
}

void write_params(std::ostream& out, const FrsParams& params) {
    out << params.field().q() << ' ' << params.field().gamma() << ' ' << params.m() << ' ' << params.n()
        << ' ' << params.msg_len() << '\n';
}

FrsParams read_params(std::istream& in) {
    std::uint64_t q, gamma;
    std::size_t m, n, msg_len;
    if (!(in >> q >> gamma >> m >> n >> msg_len))
        throw std::invalid_argument("read_params: expected 'q gamma m n msg_len'");
    PrimeField field(q, gamma);
    return FrsParams(field, m, n, msg_len);
}

} // namespace frs
