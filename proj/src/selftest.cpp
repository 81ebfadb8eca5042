#include "frs/selftest.hpp"

#include "frs/bounds.hpp"
#include "frs/cli.hpp"
#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/errors.hpp"
#include "frs/experiment.hpp"
#include "frs/oracle.hpp"
#include "frs/rng.hpp"
#include "frs/sampling.hpp"
#include "frs/wronskian.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

namespace frs {

namespace {

constexpr std::uint64_t kSeed = 0xF01DEDC0DEull;

FrsParams canonical_params() { return FrsParams(PrimeField(13, 2), 3, 12, 2); }

// Same field and shape, wider message space (degree < 4); gives nonzero
// rank deficits and deeper subspaces than the rate-1/6 instance can.
FrsParams wide_params() { return FrsParams(PrimeField(13, 2), 3, 12, 4); }

// GF(73) with gamma = 5 (order 72), folded 4-wise to N = 6.
FrsParams gf73_params(std::size_t msg_len) { return FrsParams(PrimeField(73, 5), 4, 24, msg_len); }

template <typename Body>
CheckResult timed(std::string name, double budget, Body&& body) {
    CheckResult r;
    r.name = std::move(name);
    r.budget_seconds = budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string poly_brief(const Poly& p) { return to_string(p); }

} // namespace

CheckResult check_oracle_equivalence() {
    return timed("oracle_equivalence", 60.0, [](CheckResult& r) {
        const FrsParams params = canonical_params();
        const Rng root(kSeed);
        std::size_t max_list = 0;
        for (std::size_t k = 1; k <= 2; ++k) {
            const Rng stream = root.child(k);
            for (std::uint64_t t = 0; t < 1000; ++t) {
                Rng trial = stream.child(t);
                const FoldedWord g = random_word(params, trial);
                const DecodeOutcome out = decode(params, k, g);
                const OracleList truth = brute_force_list(params, g, out.radius);
                if (out.list != truth.members) {
                    r.pass = false;
                    std::ostringstream d;
                    d << "decoder/oracle mismatch at k=" << k << " trial=" << t << " (decoder "
                      << out.list.size() << " vs oracle " << truth.members.size() << " members)";
                    r.detail = d.str();
                    return;
                }
                max_list = std::max(max_list, out.list.size());
            }
        }
        r.pass = true;
        r.detail = "2000 random words, k in {1,2}: decode == brute force; max list size " +
                   std::to_string(max_list);
    });
}

CheckResult check_list_bound_witness() {
    return timed("list_bound_witness", 10.0, [](CheckResult& r) {
        const FrsParams params = canonical_params();
        const PrimeField& f = params.field();

        // Random part: the k=2 series of the equivalence suite (same seed
        // derivation), list size must never exceed (k-1)^2+1 = 2 at the
        // default radius 1/2.
        const Rng stream = Rng(kSeed).child(2);
        std::size_t max_list = 0;
        for (std::uint64_t t = 0; t < 1000; ++t) {
            Rng trial = stream.child(t);
            const FoldedWord g = random_word(params, trial);
            const DecodeOutcome out = decode(params, 2, g);
            if (out.radius != Rational(1, 2)) {
                r.pass = false;
                r.detail = "default radius is not 1/2";
                return;
            }
            max_list = std::max(max_list, out.list.size());
        }
        if (max_list > frs_list_bound(2)) {
            r.pass = false;
            r.detail = "list size " + std::to_string(max_list) + " exceeds bound 2";
            return;
        }

        // Constructed part. On this instance two distinct codewords never
        // share a folded symbol, so a center dealt 2+2 symbols from two
        // line members sits at distance exactly 1/2 from each, and no third
        // codeword can reach agreement 2. At radius 2/3 (= k/(k+1) times
        // the folded code distance 1, within the certified range 3/4) the
        // list is therefore exactly those two members.
        const Poly f0(f, {3, 1});
        const Poly h1(f, {1, 5});
        const AffineSubspace line(params.msg_len(), f0, {h1});
        const std::vector<Poly> targets{line.member({0}), line.member({1})};
        const FoldedWord g = adversarial_center(params, line, targets, kSeed);
        for (const Poly& t : targets) {
            if (distance(encode(params, t), g) != Rational(1, 2)) {
                r.pass = false;
                r.detail = "witness center is not at distance exactly 1/2 from target " + poly_brief(t);
                return;
            }
        }
        const Rational witness_radius(2, 3);
        const DecodeOutcome out = decode(params, 2, g, witness_radius);
        std::vector<Poly> expect = targets;
        std::sort(expect.begin(), expect.end(), poly_less);
        const OracleList truth = brute_force_list(params, g, witness_radius);
        if (out.list != expect || truth.members != expect || out.list.size() != 2) {
            r.pass = false;
            r.detail = "witness list is not exactly the two planted codewords";
            return;
        }
        r.pass = true;
        r.detail = "max list size " + std::to_string(max_list) +
                   " over 1000 trials at radius 1/2; constructed center decodes to exactly 2 members at 2/3";
    });
}

CheckResult check_line_intersection() {
    return timed("line_intersection", 60.0, [](CheckResult& r) {
        const FrsParams instances[2] = {canonical_params(), wide_params()};
        std::size_t worst[4] = {0, 0, 0, 0}; // worst count seen per k
        for (int which = 0; which < 2; ++which) {
            const FrsParams& params = instances[which];
            const Rational delta = code_distance(params);
            const Rng stream = Rng(kSeed).child(300 + static_cast<std::uint64_t>(which));
            for (std::uint64_t t = 0; t < 500; ++t) {
                Rng trial = stream.child(t);
                const AffineSubspace line =
                    random_subspace(params.field(), params.msg_len(), 1, trial);
                const FoldedWord g = random_word(params, trial);
                for (std::size_t k = 1; k <= 3; ++k) {
                    const Rational radius =
                        Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k) + 1) * delta;
                    const std::size_t count =
                        subspace_ball_intersection(params, line, g, radius).members.size();
                    worst[k] = std::max(worst[k], count);
                    if (count > k) {
                        r.pass = false;
                        std::ostringstream d;
                        d << "line/ball intersection " << count << " > k = " << k << " (msg_len "
                          << params.msg_len() << ", trial " << t << ")";
                        r.detail = d.str();
                        return;
                    }
                }
            }
        }
        r.pass = true;
        std::ostringstream d;
        d << "1000 lines x k in {1,2,3}: intersections within k (worst " << worst[1] << "/" << worst[2]
          << "/" << worst[3] << ")";
        r.detail = d.str();
    });
}

CheckResult check_plane_intersection() {
    return timed("plane_intersection", 300.0, [](CheckResult& r) {
        const FrsParams instances[2] = {canonical_params(), wide_params()};
        std::size_t worst2 = 0, worst3 = 0;
        for (int which = 0; which < 2; ++which) {
            const FrsParams& params = instances[which];
            const Rational delta = code_distance(params);
            const Rng stream = Rng(kSeed).child(400 + static_cast<std::uint64_t>(which));
            for (std::uint64_t t = 0; t < 300; ++t) {
                Rng trial = stream.child(t);
                const AffineSubspace plane =
                    random_subspace(params.field(), params.msg_len(), 2, trial);
                const FoldedWord g = random_word(params, trial);
                for (std::size_t k = 2; k <= 3; ++k) {
                    const Rational radius =
                        Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k) + 1) * delta;
                    const std::size_t count =
                        subspace_ball_intersection(params, plane, g, radius).members.size();
                    const std::uint64_t bound = generic_list_bound(k, 2); // 6 or 12
                    (k == 2 ? worst2 : worst3) = std::max(k == 2 ? worst2 : worst3, count);
                    if (count > bound) {
                        r.pass = false;
                        std::ostringstream d;
                        d << "plane/ball intersection " << count << " > bound " << bound << " at k=" << k;
                        r.detail = d.str();
                        return;
                    }
                }
            }
        }
        r.pass = true;
        std::ostringstream d;
        d << "600 planes: intersections within k(k+1) (worst " << worst2 << " at k=2, " << worst3
          << " at k=3; bounds 6, 12)";
        r.detail = d.str();
    });
}

CheckResult check_wronskian_equivalence() {
    return timed("wronskian_equivalence", 10.0, [](CheckResult& r) {
        const PrimeField f(13, 2);
        const std::size_t msg_len = 4;
        const Rng stream = Rng(kSeed).child(500);
        std::size_t independent_seen = 0, dependent_seen = 0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            Rng trial = stream.child(t);
            const std::size_t d = 1 + t % 3;
            std::vector<Poly> polys;
            for (std::size_t i = 0; i < d; ++i) polys.push_back(random_poly(f, msg_len, trial));
            if (t % 2 == 1) {
                // Force dependence: last polynomial becomes a combination
                // of the others (or zero when d = 1).
                Poly combo = Poly::zero(f);
                for (std::size_t i = 0; i + 1 < d; ++i) combo = combo + scale(polys[i], trial.element(f));
                polys[d - 1] = combo;
            }

            Matrix coeffs(f, msg_len, d);
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t j = 0; j < msg_len; ++j) coeffs.set(j, s, polys[s].coeff(j));
            const bool independent_by_rank = rank(coeffs) == d;
            const bool wronskian_zero = folded_wronskian(polys).is_zero();
            if (wronskian_zero == independent_by_rank) {
                r.pass = false;
                std::ostringstream det;
                det << "Wronskian test disagrees with rank at trial " << t << " (d=" << d << ")";
                r.detail = det.str();
                return;
            }
            if (is_independent(polys) != independent_by_rank) {
                r.pass = false;
                r.detail = "is_independent disagrees with rank oracle";
                return;
            }
            (independent_by_rank ? independent_seen : dependent_seen) += 1;
        }
        r.pass = independent_seen > 0 && dependent_seen > 0;
        r.detail = "200 sets (d in {1,2,3}): " + std::to_string(independent_seen) + " independent, " +
                   std::to_string(dependent_seen) + " dependent, both directions agree with rank";
        if (!r.pass) r.detail += " -- coverage missing a direction";
    });
}

CheckResult check_rank_deficit_bound() {
    return timed("rank_deficit_bound", 60.0, [](CheckResult& r) {
        const Rng stream = Rng(kSeed).child(600);
        std::uint64_t idx = 0;
        std::size_t max_deficit = 0, max_bad = 0;
        for (const std::size_t msg_len : {std::size_t{3}, std::size_t{6}}) {
            const FrsParams params = gf73_params(msg_len);
            for (const std::size_t d : {std::size_t{1}, std::size_t{2}}) {
                for (std::uint64_t t = 0; t < 50; ++t) {
                    Rng trial = stream.child(idx++);
                    const AffineSubspace h = random_subspace(params.field(), msg_len, d, trial);
                    // rank_profile itself raises ContractViolation when the
                    // deficit bound fails; re-check the arithmetic here.
                    const RankProfile profile = rank_profile(params, h);
                    if (Rational(static_cast<std::int64_t>(profile.deficit_sum)) > profile.bound) {
                        r.pass = false;
                        r.detail = "deficit " + std::to_string(profile.deficit_sum) + " above bound " +
                                   to_string(profile.bound);
                        return;
                    }
                    for (const std::size_t ri : profile.ranks) {
                        if (ri > std::min(params.m(), d)) {
                            r.pass = false;
                            r.detail = "per-position rank above min(m, d)";
                            return;
                        }
                    }
                    max_deficit = std::max(max_deficit, profile.deficit_sum);
                    max_bad = std::max(max_bad, profile.bad_set_size);
                }
            }
        }
        r.pass = true;
        r.detail = "200 subspaces over GF(73): deficit bound holds (max deficit " +
                   std::to_string(max_deficit) + ", max vanishing positions " + std::to_string(max_bad) + ")";
    });
}

CheckResult check_unique_decoding() {
    return timed("unique_decoding", 30.0, [](CheckResult& r) {
        const FrsParams params = canonical_params();
        const Rational radius = decoding_radius(params.m(), 1, params.rate()); // (1-R)/2 = 5/12
        const std::size_t N = params.folded_length();
        std::vector<std::size_t> error_counts;
        for (std::size_t e = 0; e <= N; ++e)
            if (Rational(static_cast<std::int64_t>(e), static_cast<std::int64_t>(N)) < radius)
                error_counts.push_back(e);

        const Rng stream = Rng(kSeed).child(700);
        for (std::uint64_t t = 0; t < 500; ++t) {
            Rng trial = stream.child(t);
            const std::size_t e = error_counts[t % error_counts.size()];
            const Poly f = random_poly(params.field(), params.msg_len(), trial);
            const FoldedWord g = corrupt(params, encode(params, f), e, trial.next());
            const DecodeOutcome out = decode(params, 1, g);
            if (out.list.size() != 1 || !(out.list[0] == f)) {
                r.pass = false;
                std::ostringstream d;
                d << "roundtrip failed at trial " << t << " with " << e << " errors";
                r.detail = d.str();
                return;
            }
        }
        r.pass = true;
        std::ostringstream d;
        d << "500 trials at k=1, errors in {";
        for (std::size_t i = 0; i < error_counts.size(); ++i) d << (i ? "," : "") << error_counts[i];
        d << "}: exact message recovered every time";
        r.detail = d.str();
    });
}

CheckResult check_pruning_equivalence() {
    return timed("pruning_equivalence", 120.0, [](CheckResult& r) {
        const FrsParams instances[2] = {canonical_params(), wide_params()};
        const Rational radii[7] = {Rational(1, 4), Rational(5, 12), Rational(1, 2), Rational(7, 12),
                                   Rational(2, 3), Rational(3, 4),  Rational(1)};
        const Rng stream = Rng(kSeed).child(800);
        std::size_t dim1 = 0, max_list = 0;
        for (std::uint64_t t = 0; t < 1000; ++t) {
            Rng trial = stream.child(t);
            const FrsParams& params = instances[t % 2];
            const std::size_t d = t % (params.msg_len() + 1);
            const AffineSubspace h = random_subspace(params.field(), params.msg_len(), d, trial);
            const FoldedWord g = random_word(params, trial);
            const Rational radius = radii[t % 7];

            const std::vector<Poly> exhaustive = prune_exhaustive(params, h, g, radius);
            const std::vector<Poly> pinned = prune_pinning(params, h, g, radius);
            if (pinned != exhaustive) {
                r.pass = false;
                r.detail = "pinning differs from exhaustive at trial " + std::to_string(t);
                return;
            }
            if (d == 1) {
                ++dim1;
                const std::vector<Poly> freq = prune_dim1_frequency(params, h, g, radius);
                if (freq != exhaustive) {
                    r.pass = false;
                    r.detail = "frequency pruning differs from exhaustive at trial " + std::to_string(t);
                    return;
                }
            }
            max_list = std::max(max_list, exhaustive.size());
        }
        r.pass = true;
        r.detail = "1000 (subspace, center, radius) triples: pinning == exhaustive everywhere, frequency == "
                   "exhaustive on " +
                   std::to_string(dim1) + " dim-1 cases; max list " + std::to_string(max_list);
    });
}

namespace {

// Runs the CLI in-process and returns (exit code, stdout).
std::pair<int, std::string> run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str()};
}

// Value of `key` in "key  value" report lines; empty when absent.
std::string report_value(const std::string& text, const std::string& key) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::string k, v;
        if (ls >> k >> v && k == key) return v;
    }
    return "";
}

} // namespace

CheckResult check_bounds_table() {
    return timed("bounds_table", 1.0, [](CheckResult& r) {
        // Direct values first.
        if (frs_list_bound(8) != 50 || frs_list_bound(2) != 2 ||
            decoding_radius(3, 2, Rational(1, 6)) != Rational(1, 2) ||
            johnson_compare(2, Rational(1, 4)) != RadiusOrder::equal ||
            johnson_compare(2, Rational(1, 2)) != RadiusOrder::frs_larger ||
            johnson_compare(2, Rational(1, 100)) != RadiusOrder::johnson_larger) {
            r.pass = false;
            r.detail = "closed-form bound values are off";
            return;
        }

        // Same numbers through the user-facing surface.
        const auto [c8, t8] = run_cli({"bounds", "--m", "9", "--k", "8", "--rate", "1/10", "--d", "1"});
        const auto [c2, t2] = run_cli({"bounds", "--m", "3", "--k", "2", "--rate", "1/6", "--d", "1"});
        const auto [cj, tj] = run_cli({"bounds", "--m", "3", "--k", "2", "--rate", "1/4", "--d", "1"});
        if (c8 != 0 || c2 != 0 || cj != 0) {
            r.pass = false;
            r.detail = "bounds subcommand exited nonzero";
            return;
        }
        if (report_value(t8, "list_bound") != "50" || report_value(t2, "list_bound") != "2" ||
            report_value(t2, "radius") != "1/2" || report_value(tj, "johnson_order") != "equal") {
            r.pass = false;
            r.detail = "bounds subcommand printed unexpected values";
            return;
        }
        r.pass = true;
        r.detail = "k=8 -> 50, k=2 -> 2, radius(3,2,1/6) = 1/2, Johnson equality at R = 1/k^2";
    });
}

CheckResult check_experiment_determinism() {
    return timed("experiment_determinism", 60.0, [](CheckResult& r) {
        const std::string config =
            "q = 13\ngamma = 2\nm = 3\nn = 12\nmsg_len = 2\nk = 2\n"
            "trials = 50\nseed = 424242\nchannel = random\nerrors = 2\noracle = true\n";

        const ExperimentResult a = run_experiment(ExperimentConfig::parse(config));
        const ExperimentResult b = run_experiment(ExperimentConfig::parse(config));
        if (a.csv != b.csv) {
            r.pass = false;
            r.detail = "library-level reruns differ";
            return;
        }
        if (!a.all_pass) {
            r.pass = false;
            r.detail = "experiment reported a bound violation";
            return;
        }

        const auto [code1, out1] = run_cli({"experiment", "--config", "-"}, config);
        const auto [code2, out2] = run_cli({"experiment", "--config", "-"}, config);
        if (code1 != 0 || code2 != 0) {
            r.pass = false;
            r.detail = "experiment subcommand exited nonzero";
            return;
        }
        if (out1 != out2 || out1.find(a.csv) == std::string::npos) {
            r.pass = false;
            r.detail = "CLI reruns are not byte-identical";
            return;
        }
        r.pass = true;
        r.detail = "50-trial CSV byte-identical across reruns (library and CLI)";
    });
}

std::vector<CheckResult> run_all_checks(std::ostream* progress) {
    std::vector<CheckResult> results;
    const auto push = [&](CheckResult r) {
        if (progress) *progress << format_check_line(r) << '\n';
        results.push_back(std::move(r));
    };
    push(check_oracle_equivalence());
    push(check_list_bound_witness());
    push(check_line_intersection());
    push(check_plane_intersection());
    push(check_wronskian_equivalence());
    push(check_rank_deficit_bound());
    push(check_unique_decoding());
    push(check_pruning_equivalence());
    push(check_bounds_table());
    push(check_experiment_determinism());
    return results;
}

std::string format_check_line(const CheckResult& r) {
    std::ostringstream out;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    out.precision(2);
    out << " (" << std::fixed << r.seconds << "s): " << r.detail;
    return out.str();
}

} // namespace frs
