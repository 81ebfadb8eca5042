#include "frs/decoder.hpp"

#include "frs/bounds.hpp"
#include "frs/errors.hpp"
#include "frs/linalg.hpp"
#include "frs/wronskian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace frs {

namespace {

void require_word_shape(const FrsParams& params, const FoldedWord& g, const char* who) {
    if (g.length() != params.folded_length() || g.width() != params.m())
        throw std::invalid_argument(std::string(who) + ": word shape does not match parameters");
}

void require_window(const FrsParams& params, std::size_t k, const char* who) {
    if (k < 1 || k > params.m())
        throw std::invalid_argument(std::string(who) + ": need 1 <= k <= m");
}

// Smallest agreement count that certifies distance < radius:
// agree > N*(1 - radius), exactly.
std::size_t needed_agreement(const FrsParams& params, const Rational& radius) {
    const auto N = static_cast<std::int64_t>(params.folded_length());
    const std::int64_t t = floor_rational(Rational(N) * (Rational(1) - radius)) + 1;
    return t < 0 ? 0 : static_cast<std::size_t>(t);
}

// q^d if it is <= limit, otherwise nothing.
std::optional<std::uint64_t> bounded_pow(std::uint64_t q, std::size_t d, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (total > limit / q) return std::nullopt;
        total *= q;
    }
    if (total > limit) return std::nullopt;
    return total;
}

void sort_unique(std::vector<Poly>& polys) {
    std::sort(polys.begin(), polys.end(), poly_less);
    polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

Poly shift_down(const Poly& p, std::size_t v) {
    if (p.is_zero() || v == 0) return p;
    std::vector<Fe> c(p.coeffs().begin() + static_cast<std::ptrdiff_t>(v), p.coeffs().end());
    return Poly(p.field(), std::move(c));
}

} // namespace

bool InterpolationPoly::is_zero() const {
    if (!a0.is_zero()) return false;
    for (const Poly& p : a)
        if (!p.is_zero()) return false;
    return true;
}

std::size_t interpolation_degree(const FrsParams& params, std::size_t k) {
    require_window(params, k, "interpolation_degree");
    const auto N = static_cast<std::int64_t>(params.folded_length());
    const auto W = static_cast<std::int64_t>(params.m() - k + 1);
    const auto K = static_cast<std::int64_t>(params.msg_len());
    const std::int64_t numerator = N * W - K + 1;
    if (numerator < 0)
        throw std::invalid_argument("interpolation_degree: msg_len too large for this blocklength and k");
    return static_cast<std::size_t>(numerator / (static_cast<std::int64_t>(k) + 1));
}

std::size_t agreement_threshold(const FrsParams& params, std::size_t k) {
    const std::size_t D = interpolation_degree(params, k);
    const std::size_t W = params.m() - k + 1;
    return (D + params.msg_len() + W - 1) / W;
}

Rational max_certified_radius(const FrsParams& params, std::size_t k) {
    const auto N = static_cast<std::int64_t>(params.folded_length());
    const auto t = static_cast<std::int64_t>(agreement_threshold(params, k));
    return Rational(N - t + 1, N);
}

InterpolationPoly interpolate(const FrsParams& params, std::size_t k, const FoldedWord& g) {
    require_window(params, k, "interpolate");
    require_word_shape(params, g, "interpolate");
    const PrimeField& f = params.field();
    const std::size_t D = interpolation_degree(params, k);
    const std::size_t N = params.folded_length();
    const std::size_t W = params.m() - k + 1;
    const std::size_t a0_len = D + params.msg_len();
    const std::size_t as_len = D + 1;

    // One row per (symbol, window); unknowns are the coefficients of
    // A_0, A_1, ..., A_k in that order. Unknown count exceeds the row
    // count by construction, so the kernel below is never trivial.
    Matrix m(f, N * W, a0_len + k * as_len);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < W; ++j) {
            const std::size_t row = i * W + j;
            const Fe x = params.eval_point(i, j);
            Fe xp = 1;
            for (std::size_t c = 0; c < a0_len; ++c) {
                m.set(row, c, xp);
                xp = f.mul(xp, x);
            }
            for (std::size_t s = 1; s <= k; ++s) {
                const Fe y = g.symbol(i)[j + s - 1];
                xp = 1;
                for (std::size_t c = 0; c < as_len; ++c) {
                    m.set(row, a0_len + (s - 1) * as_len + c, f.mul(xp, y));
                    xp = f.mul(xp, x);
                }
            }
        }
    }

    const std::vector<std::vector<Fe>> kernel = nullspace(m);
    if (kernel.empty()) throw std::logic_error("interpolate: kernel unexpectedly trivial");
    const std::vector<Fe>& v = kernel.front();

    Poly a0(f, std::vector<Fe>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(a0_len)));
    std::vector<Poly> a;
    a.reserve(k);
    for (std::size_t s = 0; s < k; ++s) {
        const auto begin = v.begin() + static_cast<std::ptrdiff_t>(a0_len + s * as_len);
        a.emplace_back(f, std::vector<Fe>(begin, begin + static_cast<std::ptrdiff_t>(as_len)));
    }
    return InterpolationPoly{std::move(a0), std::move(a), D};
}

namespace {

// Smallest index of a nonzero coefficient across all components.
std::size_t common_valuation(const InterpolationPoly& q) {
    std::size_t v = static_cast<std::size_t>(-1);
    auto update = [&](const Poly& p) {
        if (p.is_zero()) return;
        std::size_t i = 0;
        while (p.coeff(i) == 0) ++i;
        v = std::min(v, i);
    };
    update(q.a0);
    for (const Poly& p : q.a) update(p);
    return v;
}

} // namespace

InterpolationPoly x_normalize(const InterpolationPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("x_normalize: all components zero");
    const std::size_t v = common_valuation(q);
    if (v == 0) return q;
    InterpolationPoly out;
    out.degree_param = q.degree_param;
    out.a0 = shift_down(q.a0, v);
    out.a.reserve(q.a.size());
    for (const Poly& p : q.a) out.a.push_back(shift_down(p, v));
    return out;
}

std::optional<AffineSubspace> extract_subspace(const FrsParams& params, const InterpolationPoly& q) {
    const std::size_t k = q.k();
    if (k == 0) throw std::invalid_argument("extract_subspace: no Y components");
    if (q.is_zero()) throw std::invalid_argument("extract_subspace: zero interpolation polynomial");
    if (common_valuation(q) != 0)
        throw std::invalid_argument("extract_subspace: input not X-normalized");
    const std::size_t D = q.degree_param;
    const std::size_t K = params.msg_len();
    if (q.a0.degree() && *q.a0.degree() > D + K - 1)
        throw std::invalid_argument("extract_subspace: A_0 degree exceeds D + msg_len - 1");
    for (const Poly& p : q.a)
        if (p.degree() && *p.degree() > D)
            throw std::invalid_argument("extract_subspace: A_s degree exceeds D");

    const PrimeField& f = params.field();
    // The identity A_0(X) + sum_s A_s(X) f(gamma^(s-1) X) == 0, one row per
    // power of X. Column v carries the polynomial X^v * B_v(X) with
    // B_v = sum_s gamma^((s-1)v) A_s.
    const std::size_t rows = D + K;
    Matrix m(f, rows, K);
    std::vector<Fe> rhs(rows);
    for (std::size_t j = 0; j < rows; ++j) rhs[j] = f.neg(q.a0.coeff(j));
    for (std::size_t v = 0; v < K; ++v) {
        Poly bv = Poly::zero(f);
        for (std::size_t s = 1; s <= k; ++s)
            bv = bv + scale(q.a[s - 1], f.pow(f.gamma(), (s - 1) * v));
        for (std::size_t j = v; j < rows; ++j) m.set(j, v, bv.coeff(j - v));
    }

    const AffineSolutionSet sol = solve_affine(m, rhs);
    if (!sol.consistent) return std::nullopt;

    Poly offset(f, sol.particular);
    std::vector<Poly> basis;
    basis.reserve(sol.basis.size());
    for (const auto& vec : sol.basis) basis.emplace_back(f, vec);
    if (basis.size() > k - 1)
        throw ContractViolation("extract_subspace: solution dimension " + std::to_string(basis.size()) +
                                " exceeds k-1 = " + std::to_string(k - 1));
    return AffineSubspace(K, std::move(offset), std::move(basis));
}

std::vector<Poly> prune_exhaustive(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                   const Rational& radius, std::uint64_t limit, std::size_t* examined) {
    require_word_shape(params, g, "prune_exhaustive");
    const std::uint64_t q = params.field().q();
    const auto total = bounded_pow(q, H.dim(), limit);
    if (!total) throw LimitExceeded("prune_exhaustive: subspace larger than enumeration limit");

    std::vector<Poly> out;
    std::vector<Fe> alphas(H.dim());
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            alphas[i] = v % q;
            v /= q;
        }
        Poly f = H.member(alphas);
        if (examined) ++*examined;
        if (distance(encode(params, f), g) < radius) out.push_back(std::move(f));
    }
    sort_unique(out);
    return out;
}

std::vector<Poly> prune_dim1_frequency(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                       const Rational& radius, std::size_t* examined) {
    if (H.dim() != 1) throw std::invalid_argument("prune_dim1_frequency: subspace dimension must be 1");
    require_word_shape(params, g, "prune_dim1_frequency");
    const PrimeField& f = params.field();
    const FoldedWord enc0 = encode(params, H.offset());
    const Poly& h1 = H.basis()[0];
    const std::size_t N = params.folded_length();

    // Each position admits at most one alpha with
    // g = encode(offset + alpha*h1) there, unless h1 vanishes on the whole
    // symbol, in which case the position agrees with every member or none.
    std::map<Fe, std::size_t> votes;
    std::size_t base = 0;
    for (std::size_t i = 0; i < N; ++i) {
        bool consistent = true;
        bool alpha_set = false;
        Fe alpha = 0;
        for (std::size_t j = 0; j < params.m() && consistent; ++j) {
            const Fe hv = h1.eval(params.eval_point(i, j));
            const Fe delta = f.sub(g.symbol(i)[j], enc0.symbol(i)[j]);
            if (hv == 0) {
                consistent = delta == 0;
            } else {
                const Fe a = f.div(delta, hv);
                if (!alpha_set) {
                    alpha = a;
                    alpha_set = true;
                } else {
                    consistent = a == alpha;
                }
            }
        }
        if (!consistent) continue;
        if (alpha_set)
            ++votes[alpha];
        else
            ++base; // h1 vanishes on the entire symbol; agreement is alpha-free
    }

    // votes[alpha] + base is the exact agreement count of offset + alpha*h1.
    const std::size_t t = needed_agreement(params, radius);
    std::vector<Fe> candidates;
    if (base >= t) {
        for (Fe a = 0; a < f.q(); ++a) candidates.push_back(a);
    } else {
        for (const auto& [a, n] : votes)
            if (n + base >= t) candidates.push_back(a);
    }

    std::vector<Poly> out;
    for (Fe a : candidates) {
        Poly cand = H.member({a});
        if (examined) ++*examined;
        if (distance(encode(params, cand), g) < radius) out.push_back(std::move(cand));
    }
    sort_unique(out);
    return out;
}

namespace {

void pinning_recurse(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                     const Rational& radius, std::size_t t, std::uint64_t limit, std::size_t* examined,
                     std::vector<Poly>& out) {
    const PrimeField& f = params.field();
    if (H.dim() == 0) {
        if (examined) ++*examined;
        if (distance(encode(params, H.offset()), g) < radius) out.push_back(H.offset());
        return;
    }

    const FoldedWord enc0 = encode(params, H.offset());
    const std::size_t N = params.folded_length();
    std::size_t base_free = 0; // rank-0 positions agreeing with every member
    bool any_pinnable = false;
    for (std::size_t i = 0; i < N; ++i) {
        const Matrix a = coordinate_matrix(params, H, i);
        if (rank(a) == 0) {
            if (g.symbol(i) == enc0.symbol(i)) ++base_free;
            continue;
        }
        any_pinnable = true;
        std::vector<Fe> b(params.m());
        for (std::size_t j = 0; j < params.m(); ++j) b[j] = f.sub(g.symbol(i)[j], enc0.symbol(i)[j]);
        const AffineSolutionSet sol = solve_affine(a, b);
        if (!sol.consistent) continue; // no member agrees at position i

        Poly sub_offset = H.member(sol.particular);
        std::vector<Poly> sub_basis;
        sub_basis.reserve(sol.basis.size());
        for (const auto& vec : sol.basis) {
            Poly h = Poly::zero(f);
            for (std::size_t s = 0; s < vec.size(); ++s) h = h + scale(H.basis()[s], vec[s]);
            sub_basis.push_back(std::move(h));
        }
        pinning_recurse(params, AffineSubspace(H.msg_len(), std::move(sub_offset), std::move(sub_basis)), g,
                        radius, t, limit, examined, out);
    }

    // Positions with rank 0 contribute the same agreement to every member,
    // so if they alone meet the threshold (or no position can be pinned at
    // all) only enumeration can decide.
    if (base_free >= t || !any_pinnable) {
        std::vector<Poly> rest = prune_exhaustive(params, H, g, radius, limit, examined);
        out.insert(out.end(), rest.begin(), rest.end());
    }
}

} // namespace

std::vector<Poly> prune_pinning(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                const Rational& radius, std::uint64_t limit, std::size_t* examined) {
    require_word_shape(params, g, "prune_pinning");
    std::vector<Poly> out;
    pinning_recurse(params, H, g, radius, needed_agreement(params, radius), limit, examined, out);
    sort_unique(out);
    return out;
}

DecodeOutcome decode(const FrsParams& params, std::size_t k, const FoldedWord& g, std::optional<Rational> radius,
                     std::uint64_t limit) {
    require_window(params, k, "decode");
    require_word_shape(params, g, "decode");

    std::optional<Rational> default_radius;
    try {
        default_radius = decoding_radius(params.m(), k, params.rate());
    } catch (const std::invalid_argument&) {
        // Rate too high for the closed form; an explicit radius may still work.
    }
    const Rational cap = max_certified_radius(params, k);
    Rational r;
    if (radius) {
        r = *radius;
    } else if (default_radius) {
        r = *default_radius;
    } else {
        throw std::invalid_argument("decode: no default radius for these parameters, pass one explicitly");
    }
    if (r <= Rational(0) || r > cap)
        throw std::invalid_argument("decode: radius must lie in (0, " + to_string(cap) +
                                    "], the range where subspace containment is certified");

    DecodeOutcome out;
    out.radius = r;

    const InterpolationPoly q = x_normalize(interpolate(params, k, g));
    std::optional<AffineSubspace> H = extract_subspace(params, q);
    if (!H) {
        out.stats.strategy = "none";
        return out;
    }

    const std::size_t d = H->dim();
    if (d == 1) {
        out.stats.strategy = "frequency";
        out.list = prune_dim1_frequency(params, *H, g, r, &out.stats.candidates_examined);
    } else if (bounded_pow(params.field().q(), d, limit)) {
        out.stats.strategy = "exhaustive";
        out.list = prune_exhaustive(params, *H, g, r, limit, &out.stats.candidates_examined);
    } else {
        out.stats.strategy = "pinning";
        out.list = prune_pinning(params, *H, g, r, limit, &out.stats.candidates_examined);
    }
    out.subspace = std::move(H);

    // The (k-1)^2+1 bound is a theorem at radii up to the closed form; an
    // override beyond it (still <= cap) keeps completeness but not the
    // list-size guarantee.
    if (default_radius && r <= *default_radius && out.list.size() > frs_list_bound(k))
        throw ContractViolation("decode: list size " + std::to_string(out.list.size()) + " exceeds (k-1)^2+1 = " +
                                std::to_string(frs_list_bound(k)));
    return out;
}

} // namespace frs
