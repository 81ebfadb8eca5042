#include "frs/oracle.hpp"

#include "frs/errors.hpp"
#include "frs/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace frs {

namespace {

// q^count with an overflow-safe cap check.
std::uint64_t space_size(std::uint64_t q, std::size_t count, std::uint64_t limit, const char* who) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < count; ++i) {
        if (total > limit / q) throw LimitExceeded(std::string(who) + ": enumeration space exceeds limit");
        total *= q;
    }
    if (total > limit) throw LimitExceeded(std::string(who) + ": enumeration space exceeds limit");
    return total;
}

void sort_members(std::vector<Poly>& members) { std::sort(members.begin(), members.end(), poly_less); }

} // namespace

OracleList brute_force_list(const FrsParams& params, const FoldedWord& g, const Rational& radius,
                            std::uint64_t limit) {
    const std::uint64_t q = params.field().q();
    const std::uint64_t total = space_size(q, params.msg_len(), limit, "brute_force_list");

    OracleList out{{}, radius, g};
    std::vector<Fe> coeffs(params.msg_len());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = v % q;
            v /= q;
        }
        Poly f(params.field(), coeffs);
        if (distance(encode(params, f), g) < radius) out.members.push_back(std::move(f));
    }
    sort_members(out.members);
    return out;
}

OracleList subspace_ball_intersection(const FrsParams& params, const AffineSubspace& H, const FoldedWord& g,
                                      const Rational& radius, std::uint64_t limit) {
    if (H.msg_len() != params.msg_len() || !H.field().same_modulus(params.field()))
        throw std::invalid_argument("subspace_ball_intersection: subspace does not match parameters");
    const std::uint64_t q = params.field().q();
    const std::uint64_t total = space_size(q, H.dim(), limit, "subspace_ball_intersection");

    OracleList out{{}, radius, g};
    std::vector<Fe> alphas(H.dim());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            alphas[i] = v % q;
            v /= q;
        }
        Poly f = H.member(alphas);
        if (distance(encode(params, f), g) < radius) out.members.push_back(std::move(f));
    }
    sort_members(out.members);
    return out;
}

FoldedWord adversarial_center(const FrsParams& params, const AffineSubspace& H, const std::vector<Poly>& targets,
                              std::uint64_t seed) {
    if (targets.empty()) throw std::invalid_argument("adversarial_center: need at least one target");
    const std::size_t N = params.folded_length();
    if (targets.size() > N) throw std::invalid_argument("adversarial_center: more targets than folded positions");
    for (const Poly& t : targets)
        if (!H.contains(t)) throw std::invalid_argument("adversarial_center: target outside the subspace");

    std::vector<FoldedWord> encoded;
    encoded.reserve(targets.size());
    for (const Poly& t : targets) encoded.push_back(encode(params, t));

    Rng rng(seed);
    std::vector<std::size_t> order(N);
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(N - i));
        std::swap(order[i], order[j]);
    }

    std::vector<std::vector<Fe>> symbols(N);
    for (std::size_t i = 0; i < N; ++i) symbols[order[i]] = encoded[i % targets.size()].symbol(order[i]);
    return FoldedWord(std::move(symbols));
}

} // namespace frs
